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

#include <set>

#include "gf4lcd/bounds.hpp"
#include "gf4lcd/classify.hpp"
#include "gf4lcd/constructions.hpp"
#include "gf4lcd/errors.hpp"
#include "gf4lcd/geometry.hpp"
#include "gf4lcd/nonexistence.hpp"
#include "generators.hpp"

using namespace gf4lcd;

namespace {

// Calls f on every a with entries >= 0 and sum exactly `total`.
template <typename F>
void for_each_composition(std::int64_t total, F&& f) {
  Dim2Counts a{};
  auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
    if (i == 4) {
      a[4] = left;
      f(a);
      return;
    }
    for (std::int64_t x = 0; x <= left; ++x) {
      a[i] = x;
      self(self, i + 1, left - x);
    }
  };
  rec(rec, 0, total);
}

std::vector<std::int64_t> random_weights(gen::Rng& rng, std::int64_t total) {
  std::vector<std::int64_t> m(21, 0);
  for (std::int64_t i = 0; i < total; ++i) ++m[static_cast<std::size_t>(rng.uniform(0, 20))];
  return m;
}

}  // namespace

// 200 sampled (n, alpha): the design bound on the simplex design is the
// per-point multiplicity bound.
TEST(Nonexistence, DesignBoundSpecializesToMultiplicityBound) {
  const auto design = simplex_design(3);
  gen::Rng rng(41);
  for (int t = 0; t < 200; ++t) {
    const std::int64_t n = rng.uniform(3, 500);
    const std::int64_t alpha = rng.uniform(1, static_cast<int>(alpha4(n, 3)));
    const auto m = random_weights(rng, n);
    const auto from_design = design_count_bounds(design, m, alpha);
    const auto direct = multiplicity_bounds(n, 3, alpha);
    ASSERT_EQ(from_design.lower, direct.lower);
    ASSERT_EQ(from_design.upper, direct.upper);
    ASSERT_EQ(direct.lower, Rational(4 * alpha - 3 * n));
    ASSERT_EQ(direct.upper, Rational(4 * n - 5 * alpha, 4));
  }
}

TEST(Nonexistence, MultiplicityBoundsHoldForRandomCodes) {
  gen::Rng rng(42);
  for (int t = 0; t < 500; ++t) {
    const auto m = gen::multiplicities(rng, 3, rng.uniform(3, 60));
    const auto d = min_weight_from_multiplicities(m);
    const auto box = multiplicity_bounds(m.length(), 3, d);
    for (int x : m.m) {
      ASSERT_GE(x, box.integer_lower());
      ASSERT_LE(x, box.integer_upper());
    }
  }
}

TEST(Nonexistence, BoundArguments) {
  const auto design = simplex_design(3);
  EXPECT_THROW(design_count_bounds(design, std::vector<std::int64_t>(20, 1), 10), InvalidInput);
  DesignIncidence degenerate = design;
  degenerate.lambda = degenerate.r;
  EXPECT_THROW(design_count_bounds(degenerate, std::vector<std::int64_t>(21, 1), 10), InvalidInput);
  EXPECT_THROW(multiplicity_bounds(10, 2, 5), InvalidInput);
  const RationalInterval interval{Rational(-7, 2), Rational(9, 4)};
  EXPECT_EQ(interval.integer_lower(), 0);
  EXPECT_EQ(interval.integer_upper(), 2);
}

TEST(Nonexistence, DivisibilityObstruction) {
  for (std::int64_t s = 1; s <= 10; ++s) {
    EXPECT_TRUE(divisibility_obstruction(21 * s, 3));
    EXPECT_FALSE(divisibility_obstruction(21 * s + 5, 3));
  }
  EXPECT_TRUE(divisibility_obstruction(85, 4));
  EXPECT_THROW(divisibility_obstruction(10, 2), InvalidInput);
}

// Codes meeting alpha4 at n = 21s are simplex repetitions, hence not LCD.
TEST(Nonexistence, DivisibilityAgreesWithClassification) {
  for (int s = 1; s <= 2; ++s) {
    ClassificationQuery q;
    q.n = 21 * s;
    q.d = 16 * s;
    const auto result = classify(q);
    ASSERT_EQ(result.classes.size(), 1u);
    EXPECT_EQ(result.classes[0].representative.m, std::vector<int>(21, s));
    EXPECT_EQ(count_lcd(result), 0u);
  }
}

TEST(Nonexistence, ReductionMapsTheNinePairs) {
  const std::vector<std::pair<std::int64_t, std::int64_t>> pairs = {
      {16, 12}, {20, 15}, {32, 24}, {36, 27}, {40, 30}, {48, 36}, {52, 39}, {56, 42}, {64, 48}};
  for (const auto& [n0, d0] : pairs) {
    for (std::int64_t s = 1; s <= 5; ++s) {
      const auto out = simplex_reduction(21 * s + n0, 3, 16 * s + d0);
      ASSERT_EQ(out.verdict, ReductionVerdict::kReduced);
      EXPECT_EQ(out.reduced->n, n0);
      EXPECT_EQ(out.reduced->k, 3);
      EXPECT_EQ(out.reduced->d, d0);
    }
  }
}

TEST(Nonexistence, ReductionEdgeCases) {
  EXPECT_EQ(simplex_reduction(26, 3, 19).verdict, ReductionVerdict::kNotApplicable);  // 4d - 3n = -2
  EXPECT_EQ(simplex_reduction(21, 3, 16).verdict, ReductionVerdict::kNonexistentByRank);  // r4 = 0
  EXPECT_TRUE(dual_distance_forced(85, 3, 64, 63));
  EXPECT_FALSE(dual_distance_forced(85, 3, 64, 64));
}

TEST(Nonexistence, Dim2GramMatchesDirectGram) {
  for (std::int64_t total = 0; total <= 12; ++total) {
    for_each_composition(total, [](const Dim2Counts& a) {
      const auto code = dim2_family(a);
      ASSERT_EQ(dim2_gram(a), hermitian_gram(code));
      ASSERT_EQ(dim2_determinant_formula(a).reduce(), det(dim2_gram(a)));
      ASSERT_EQ(is_hermitian_lcd(code), !det(dim2_gram(a)).is_zero());
    });
  }
}

TEST(Nonexistence, Dim2EnumeratorFormulaExhaustive) {
  for (std::int64_t total = 0; total <= 10; ++total) {
    for_each_composition(total, [](const Dim2Counts& a) {
      ASSERT_EQ(dim2_weight_enumerator_formula(a), weight_enumerator(dim2_family(a)));
    });
  }
}

TEST(Nonexistence, FamilyPolynomialsMatchTheDeterminantFormula) {
  std::vector<const Dim2Family*> families{&dim2_multiple_of_five_family()};
  for (const auto& f : dim2_five_s_plus_four_families()) families.push_back(&f);
  for (const auto* f : families) {
    EXPECT_TRUE(f->vanishes_mod2()) << f->name;
    for (std::int64_t s = 1; s <= 100; ++s) {
      const auto formula = dim2_determinant_formula(f->at(s));
      ASSERT_EQ(formula.integer_part, f->integer_part(s)) << f->name << " s=" << s;
      ASSERT_EQ(formula.omega_part, f->omega_part(s)) << f->name << " s=" << s;
      ASSERT_TRUE(det(dim2_gram(f->at(s))).is_zero());
    }
  }
}

TEST(Nonexistence, Dim2CaseAnalysisUpTo504) {
  for (std::int64_t n = 4; n <= 504; ++n) {
    if (n % 5 != 0 && n % 5 != 4) continue;
    const auto cert = dim2_case_analysis(n);
    ASSERT_TRUE(cert.all_singular) << n;
    ASSERT_TRUE(cert.zero_column_excluded) << n;
    const std::set<Dim2Counts> got(cert.candidates.begin(), cert.candidates.end());
    const auto s = n / 5;
    std::set<Dim2Counts> expected;
    if (n % 5 == 0) {
      expected.insert(dim2_multiple_of_five_family().at(s));
    } else {
      for (const auto& f : dim2_five_s_plus_four_families()) {
        const auto a = f.at(s);
        if (std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x >= 0; })) expected.insert(a);
      }
    }
    ASSERT_EQ(got, expected) << n;
    if (n % 5 == 4 && n >= 9) {
      ASSERT_EQ(got.size(), 5u);
    }
  }
  EXPECT_THROW(dim2_case_analysis(7), InvalidInput);
}

// The candidate list is every full-support systematic code with the target
// minimum weight, found here by brute force over compositions.
TEST(Nonexistence, Dim2CandidatesAreComplete) {
  for (std::int64_t n = 4; n <= 24; ++n) {
    if (n % 5 != 0 && n % 5 != 4) continue;
    const auto target = 4 * n / 5;
    std::set<Dim2Counts> brute;
    for_each_composition(n - 2, [&](const Dim2Counts& a) {
      if (static_cast<std::int64_t>(min_weight(dim2_family(a))) >= target) brute.insert(a);
    });
    const auto cert = dim2_case_analysis(n);
    EXPECT_EQ(std::set<Dim2Counts>(cert.candidates.begin(), cert.candidates.end()), brute) << n;
  }
}

TEST(Nonexistence, Dim2ClassificationHasNoLcdCodeAtTheBound) {
  for (std::int64_t n = 4; n <= 40; ++n) {
    if (n % 5 != 0 && n % 5 != 4) continue;
    ClassificationQuery q;
    q.n = n;
    q.k = 2;
    q.d = 4 * n / 5;
    const auto result = classify(q);
    EXPECT_FALSE(result.classes.empty()) << n;
    EXPECT_EQ(count_lcd(result), 0u) << n;
  }
}
