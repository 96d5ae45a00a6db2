// Copyright 2026 The gf4lcd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <map>
#include <set>

#include "gf4lcd/bounds.hpp"
#include "gf4lcd/classify.hpp"
#include "gf4lcd/errors.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace gf4lcd;

namespace {

struct Instance {
  int n, d, classes, lcd;
};

const std::vector<Instance> kInstances = {
    {26, 19, 5, 1}, {36, 27, 2, 0}, {40, 30, 2, 0}, {43, 32, 10, 0},
    {48, 36, 5, 0}, {52, 39, 5, 0}, {56, 42, 6, 0}, {64, 48, 15, 0},
};

ClassificationResult run(int n, int k, int d, ClassificationMethod method = ClassificationMethod::kOrbit, int jobs = 1,
                         bool full = false) {
  ClassificationQuery q;
  q.n = n;
  q.k = k;
  q.d = d;
  q.method = method;
  q.jobs = jobs;
  q.require_full_support = full;
  return classify(q);
}

std::set<std::pair<int, MultiplicityVector>> keys(const ClassificationResult& r) {
  std::set<std::pair<int, MultiplicityVector>> out;
  for (const auto& c : r.classes) out.emplace(c.zero_columns, c.representative);
  return out;
}

// Brute force: every multiplicity vector of total n - z for every z,
// canonicalized, keeping those of minimum weight exactly d.
std::map<int, std::set<std::pair<int, MultiplicityVector>>> brute_force_classes(int k, int n) {
  std::map<int, std::set<std::pair<int, MultiplicityVector>>> by_d;
  const int points = point_basis(k).size();
  for (int z = 0; z + k <= n; ++z) {
    std::vector<int> m(static_cast<std::size_t>(points), 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
      if (i == points - 1) {
        m[static_cast<std::size_t>(i)] = left;
        const MultiplicityVector mv{k, m};
        const int d = min_weight_from_multiplicities(mv);
        if (d > 0) by_d[d].emplace(z, canonical_form(mv));
        return;
      }
      for (int x = 0; x <= left; ++x) {
        m[static_cast<std::size_t>(i)] = x;
        self(self, i + 1, left - x);
      }
    };
    rec(rec, 0, n - z);
  }
  return by_d;
}

}  // namespace

TEST(Classify, PublishedCounts) {
  for (const auto& inst : kInstances) {
    const auto r = run(inst.n, 3, inst.d);
    EXPECT_EQ(static_cast<int>(r.classes.size()), inst.classes) << inst.n;
    EXPECT_EQ(static_cast<int>(count_lcd(r)), inst.lcd) << inst.n;
  }
}

TEST(Classify, MethodsAgreeOnClassSets) {
  for (const auto& inst : kInstances) {
    const auto orbit = run(inst.n, 3, inst.d, ClassificationMethod::kOrbit);
    const auto shorten = run(inst.n, 3, inst.d, ClassificationMethod::kShorten);
    EXPECT_EQ(keys(orbit), keys(shorten)) << inst.n;
    EXPECT_EQ(orbit.classes, shorten.classes) << inst.n;
  }
}

TEST(Classify, DeterministicAcrossJobs) {
  for (int n : {43, 64}) {
    const int d = n == 43 ? 32 : 48;
    const auto one = run(n, 3, d, ClassificationMethod::kOrbit, 1);
    const auto many = run(n, 3, d, ClassificationMethod::kOrbit, 4);
    EXPECT_EQ(one.classes, many.classes);
  }
}

TEST(Classify, ClassMetadataIsConsistent) {
  for (const auto& inst : kInstances) {
    const auto r = run(inst.n, 3, inst.d);
    std::set<std::pair<int, MultiplicityVector>> seen;
    for (const auto& c : r.classes) {
      const auto code = c.code();
      EXPECT_EQ(static_cast<int>(code.length()), inst.n);
      EXPECT_EQ(static_cast<int>(min_weight(code)), inst.d);
      EXPECT_EQ(c.enumerator, weight_enumerator(code));
      EXPECT_EQ(c.lcd, is_hermitian_lcd(code));
      EXPECT_TRUE(is_canonical(c.representative));
      EXPECT_EQ(c.representative.length() + c.zero_columns, inst.n);
      EXPECT_TRUE(seen.emplace(c.zero_columns, c.representative).second);
    }
  }
}

TEST(Classify, ZeroColumnClassesAndFullSupport) {
  const auto all = run(64, 3, 48);
  const auto full = run(64, 3, 48, ClassificationMethod::kOrbit, 1, true);
  const auto zero_classes = std::count_if(all.classes.begin(), all.classes.end(), [](const CodeClass& c) { return c.zero_columns > 0; });
  EXPECT_EQ(zero_classes, 1);
  EXPECT_EQ(full.classes.size(), all.classes.size() - 1);
  EXPECT_EQ(run(26, 3, 19, ClassificationMethod::kOrbit, 1, true).classes.size(), 5u);
}

TEST(Classify, LcdFlagIsEquivalenceInvariant) {
  gen::Rng rng(51);
  for (const auto& c : run(26, 3, 19).classes) {
    const auto code = c.code();
    for (int t = 0; t < 20; ++t) {
      const LinearCode image(gen::monomial_image(rng, code.generator()));
      EXPECT_EQ(is_hermitian_lcd(image), c.lcd);
      EXPECT_EQ(canonical_form(multiplicities(image)), c.representative);
    }
  }
}

TEST(Classify, Dimension2AgainstBruteForce) {
  for (int n = 2; n <= 9; ++n) {
    const auto expected = brute_force_classes(2, n);
    for (int d = 1; d <= alpha4(n, 2); ++d) {
      const auto r = run(n, 2, d);
      const auto it = expected.find(d);
      EXPECT_EQ(keys(r), it == expected.end() ? decltype(keys(r)){} : it->second) << n << "," << d;
    }
  }
}

TEST(Classify, Dimension3AgainstBruteForce) {
  for (int n = 3; n <= 5; ++n) {
    const auto expected = brute_force_classes(3, n);
    for (int d = 1; d <= alpha4(n, 3); ++d) {
      const auto r = run(n, 3, d);
      const auto it = expected.find(d);
      EXPECT_EQ(keys(r), it == expected.end() ? decltype(keys(r)){} : it->second) << n << "," << d;
    }
  }
}

// Monomial classes of dimension-2 codes of length <= 4 checked directly
// against a search over all monomial maps.
TEST(Classify, Dimension2RepresentativesAreInequivalent) {
  for (int n = 2; n <= 4; ++n) {
    for (int d = 1; d <= alpha4(n, 2); ++d) {
      const auto r = run(n, 2, d);
      for (std::size_t i = 0; i < r.classes.size(); ++i) {
        for (std::size_t j = i + 1; j < r.classes.size(); ++j) {
          EXPECT_FALSE(oracle::monomially_equivalent(oracle::from(r.classes[i].code().generator()),
                                                     oracle::from(r.classes[j].code().generator()),
                                                     static_cast<std::size_t>(n)));
        }
      }
    }
  }
}

TEST(Classify, InverseShorteningCoversEveryClass) {
  std::set<std::pair<int, MultiplicityVector>> seen;
  inverse_shortening_generate(26, 19, [&](const ShorteningCandidate& c) {
    ASSERT_EQ(min_weight(LinearCode(c.generator)), 19u);
    F4Matrix g = c.generator;
    int zeros = 0;
    for (std::size_t j = g.cols(); j-- > 0;) {
      if (g.is_zero_column(j)) {
        g = g.without_column(j);
        ++zeros;
      }
    }
    seen.emplace(zeros, canonical_form(multiplicities(LinearCode(g))));
  });
  EXPECT_EQ(seen, keys(run(26, 3, 19)));
}

TEST(Classify, SemilinearMergesClasses) {
  ClassificationQuery q;
  q.n = 26;
  q.d = 19;
  q.equivalence = Equivalence::kSemilinear;
  const auto semi = classify(q);
  EXPECT_LE(semi.classes.size(), 5u);
  EXPECT_GE(semi.classes.size(), 3u);
}

TEST(Classify, Refusals) {
  EXPECT_THROW(run(26, 3, 20), InvalidInput);
  EXPECT_THROW(run(26, 4, 10), InvalidInput);
  ClassificationQuery q;
  q.n = 64;
  q.d = 48;
  q.budget = 100;
  EXPECT_THROW(classify(q), BudgetExceeded);
  try {
    classify(q);
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.estimated(), estimate_raw_candidates(64, 3, 48));
  }
}

TEST(Classify, BudgetFromEnvironment) {
  ::setenv("GF4LCD_BUDGET", "123", 1);
  EXPECT_EQ(default_budget(), 123u);
  ::setenv("GF4LCD_BUDGET", "junk", 1);
  EXPECT_EQ(default_budget(), 1'000'000'000u);
  ::unsetenv("GF4LCD_BUDGET");
  EXPECT_EQ(default_budget(), 1'000'000'000u);
}

TEST(Classify, MultiplicityBox) {
  EXPECT_EQ(multiplicity_box(64, 3, 48), std::make_pair(0, 4));
  EXPECT_EQ(multiplicity_box(26, 3, 19), std::make_pair(0, 2));
}
