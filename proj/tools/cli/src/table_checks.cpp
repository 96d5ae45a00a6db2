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

#include "gf4lcd_cli/table_checks.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "gf4lcd/bounds.hpp"
#include "gf4lcd/classify.hpp"
#include "gf4lcd/constructions.hpp"
#include "gf4lcd/errors.hpp"
#include "gf4lcd/nonexistence.hpp"

namespace gf4lcd::cli {

namespace {

// Best LCD [n,3] minimum weights, n = 4..35.
constexpr std::array<int, 32> kPublishedD4Dim3 = {1,  2,  3,  4,  5,  6,  6,  7,  8,  9,  9,  10, 11, 12, 13, 13,
                                                  14, 15, 15, 16, 17, 18, 19, 19, 20, 21, 22, 22, 23, 24, 25, 25};

// alpha4(21s + t, 3) - 16s for t = 0..20.
constexpr std::array<int, 21> kGriesmerOffsets = {0, 0, 0, 1, 2, 3, 4, 4, 5, 6, 7, 8, 8, 9, 10, 11, 12, 12, 13, 14, 15};

// d4(21s + t, 3) - 16s and the kind of justification for t = 0..20.
struct D4Literal {
  int offset;
  D4Source source;
};
constexpr std::array<D4Literal, 21> kD4Dim3Rows = {{
    {-1, D4Source::kMultipleOf21},        {-1, D4Source::kReductionClassified}, {0, D4Source::kPublishedTables},
    {1, D4Source::kPublishedTables},      {2, D4Source::kPublishedTables},      {3, D4Source::kExtendedC26},
    {3, D4Source::kReductionClassified},  {4, D4Source::kPublishedTables},      {5, D4Source::kPublishedTables},
    {6, D4Source::kPublishedTables},      {6, D4Source::kReductionClassified},  {7, D4Source::kReductionSmall},
    {8, D4Source::kPublishedTables},      {9, D4Source::kPublishedTables},      {9, D4Source::kReductionClassified},
    {10, D4Source::kReductionClassified}, {11, D4Source::kReductionSmall},      {12, D4Source::kPublishedTables},
    {13, D4Source::kPublishedTables},     {13, D4Source::kReductionClassified}, {14, D4Source::kReductionSmall},
}};

class Collector {
 public:
  explicit Collector(std::vector<CellCheck>& out) : out_(out) {}
  void add(std::string table, std::string cell, bool pass, std::string detail = {}) {
    out_.push_back({std::move(table), std::move(cell), pass, std::move(detail)});
  }

 private:
  std::vector<CellCheck>& out_;
};

std::string row_name(int t) { return t == 0 ? "21s" : "21s+" + std::to_string(t); }

// Largest d such that some [n,k,d] class is LCD, by classification.
int classified_d4(int n, int k, int jobs) {
  for (auto d = alpha4(n, k); d >= 1; --d) {
    ClassificationQuery q;
    q.n = n;
    q.k = k;
    q.d = d;
    q.jobs = jobs;
    if (count_lcd(classify(q)) > 0) return static_cast<int>(d);
  }
  return 0;
}

void table1(Collector& c, const TableCheckOptions& options) {
  for (int n = 4; n <= 35; ++n) {
    const int expected = published_d4_dim3(n);
    if (n >= 6) {
      const auto got = d4_dim3(n);
      c.add("table1", "n=" + std::to_string(n), got == expected,
            "closed form " + std::to_string(got) + ", published " + std::to_string(expected));
    }
    if (options.classification && n <= 12) {
      const int got = classified_d4(n, 3, options.jobs);
      c.add("table1", "n=" + std::to_string(n) + " classified", got == expected,
            "classification " + std::to_string(got) + ", published " + std::to_string(expected));
    }
  }
}

void table2(Collector& c) {
  // v_1 is the zero column; v_2..v_22 run through the normalized nonzero
  // vectors in lexicographic order (0 < 1 < w < w^2).
  std::vector<std::vector<int>> expected;
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      for (int z = 0; z < 4; ++z) {
        const int lead = x != 0 ? x : (y != 0 ? y : z);
        if (lead == 1) expected.push_back({x, y, z});
      }
    }
  }
  expected.insert(expected.begin(), {0, 0, 0});
  for (int j = 1; j <= 22; ++j) {
    const auto v = table_vector(j);
    bool ok = v.size() == 3;
    std::string text;
    for (std::size_t i = 0; ok && i < 3; ++i) {
      ok = static_cast<int>(v[i].bits()) == expected[static_cast<std::size_t>(j - 1)][i];
      text += v[i].to_char();
    }
    c.add("table2", "v" + std::to_string(j), ok, text);
  }
}

int target_d(int n) {
  for (const auto& t : classification_targets()) {
    if (t.n == n) return t.d;
  }
  throw InvalidInput("no classification target of length " + std::to_string(n));
}

int length_of(const std::string& name) { return std::stoi(name.substr(1, name.find('_') - 1)); }

// (zero columns, canonical multiplicities) of a code.
std::pair<int, MultiplicityVector> class_key(const LinearCode& code) {
  const auto& g = code.generator();
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < g.cols(); ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < g.rows(); ++i) zero = zero && g(i, j).is_zero();
    if (!zero) keep.push_back(j);
  }
  F4Matrix h(g.rows(), keep.size());
  for (std::size_t j = 0; j < keep.size(); ++j) {
    for (std::size_t i = 0; i < g.rows(); ++i) h(i, j) = g(i, keep[j]);
  }
  const int zeros = static_cast<int>(g.cols() - keep.size());
  return {zeros, canonical_form(multiplicities(LinearCode(std::move(h))))};
}

void tables_3_4_w(Collector& c, const TableCheckOptions& options) {
  std::map<int, std::multiset<std::string>> published;
  std::map<int, std::vector<std::pair<int, MultiplicityVector>>> keys;
  for (const auto& name : table_code_names()) {
    const auto named = table_code(name);
    const auto check = verify(named);
    const int n = length_of(name);
    const int d = target_d(n);
    const bool shape = static_cast<int>(named.code.length()) == n && static_cast<int>(check.min_weight) == d;
    c.add("tables3-4", name, shape && check.lcd_matches,
          "[" + std::to_string(named.code.length()) + ",3," + std::to_string(check.min_weight) + "]" +
              (check.lcd ? " LCD" : " not LCD"));
    c.add("tableW", name, check.enumerator_matches, check.enumerator.to_string());
    published[n].insert(named.expected_enumerator.to_compact());
    keys[n].push_back(class_key(named.code));
  }
  if (!options.classification) return;
  for (const auto& target : classification_targets()) {
    ClassificationQuery q;
    q.n = target.n;
    q.d = target.d;
    q.jobs = options.jobs;
    const auto result = classify(q);
    const auto lcd = count_lcd(result);
    c.add("classification", "[" + std::to_string(target.n) + ",3," + std::to_string(target.d) + "]",
          static_cast<int>(result.classes.size()) == target.classes && static_cast<int>(lcd) == target.lcd_classes,
          std::to_string(result.classes.size()) + " classes, " + std::to_string(lcd) + " LCD");
    if (!published.contains(target.n)) continue;
    std::multiset<std::string> computed;
    for (const auto& cls : result.classes) computed.insert(cls.enumerator.to_compact());
    c.add("tableW", "multiset n=" + std::to_string(target.n), computed == published[target.n],
          std::to_string(computed.size()) + " computed, " + std::to_string(published[target.n].size()) + " published");
    std::size_t found = 0;
    for (const auto& key : keys[target.n]) {
      found += std::any_of(result.classes.begin(), result.classes.end(), [&](const CodeClass& cls) {
        return cls.zero_columns == key.first && cls.representative == key.second;
      });
    }
    c.add("tables3-4", "classified n=" + std::to_string(target.n), found == keys[target.n].size(),
          std::to_string(found) + " of " + std::to_string(keys[target.n].size()) + " table codes found among the classes");
  }
}

void table5(Collector& c) {
  for (int t = 0; t <= 20; ++t) {
    std::string failures;
    for (int s = t <= 2 ? 1 : 0; s <= 20; ++s) {
      const auto got = alpha4(21 * s + t, 3);
      if (got != 16 * s + kGriesmerOffsets[static_cast<std::size_t>(t)]) failures += " s=" + std::to_string(s);
    }
    c.add("table5", row_name(t), failures.empty(),
          "alpha4 = 16s+" + std::to_string(kGriesmerOffsets[static_cast<std::size_t>(t)]) + " for s <= 20" +
              (failures.empty() ? "" : "; fails at" + failures));
  }
}

void table6(Collector& c, const TableCheckOptions& options) {
  for (int t = 0; t <= 20; ++t) {
    const auto& row = kD4Dim3Rows[static_cast<std::size_t>(t)];
    std::string failures;
    int checked = 0;
    for (int n = t; n <= options.max_n; n += 21) {
      if (n < 6) continue;
      const int expected = 16 * (n / 21) + row.offset;
      const auto table_row = d4_dim3_table_row(n);
      if (d4_dim3(n) != expected || table_row.value != expected || table_row.source != row.source) {
        failures += " n=" + std::to_string(n);
      }
      ++checked;
    }
    std::string detail = "16s" + std::string(row.offset < 0 ? "" : "+") + std::to_string(row.offset) + ", " +
                         std::to_string(checked) + " lengths";
    if (!failures.empty()) detail += "; fails at" + failures;
    c.add("table6", row_name(t), failures.empty() && checked > 0, detail);
  }
}

void d4_dim2_checks(Collector& c, const TableCheckOptions& options) {
  std::string failures;
  for (int n = 3; n <= options.max_n; ++n) {
    const int r = n % 5;
    const int expected = 4 * n / 5 - ((r == 0 || r == 4) ? 1 : 0);
    if (d4_dim2(n) != expected) failures += " n=" + std::to_string(n);
  }
  c.add("d4-dim2", "closed form n=3.." + std::to_string(options.max_n), failures.empty(),
        failures.empty() ? "mod-5 reading" : "fails at" + failures);
  for (int n = 3; n <= 20; ++n) {
    const int got = classified_d4(n, 2, 1);
    c.add("d4-dim2", "n=" + std::to_string(n) + " classified", got == d4_dim2(n),
          "classification " + std::to_string(got) + ", closed form " + std::to_string(d4_dim2(n)));
  }
}

bool nonnegative(const Dim2Counts& a) {
  return std::all_of(a.begin(), a.end(), [](std::int64_t x) { return x >= 0; });
}

void check_family(Collector& c, const Dim2Family& family, std::int64_t step, std::int64_t base, int max_s,
                  const std::vector<const Dim2Family*>& siblings) {
  std::string failures;
  for (int s = 0; s <= max_s; ++s) {
    const auto a = family.at(s);
    if (!nonnegative(a)) continue;
    const auto formula = dim2_determinant_formula(a);
    const bool poly = formula.integer_part == family.integer_part(s) && formula.omega_part == family.omega_part(s);
    const bool singular = det(dim2_gram(a)).is_zero() && formula.reduce().is_zero();
    const auto n = step * s + base;
    bool listed = true;
    if (n >= 4) {
      const auto cert = dim2_case_analysis(n);
      std::set<Dim2Counts> expected;
      for (const auto* f : siblings) {
        if (nonnegative(f->at(s))) expected.insert(f->at(s));
      }
      listed = std::set<Dim2Counts>(cert.candidates.begin(), cert.candidates.end()) == expected && cert.all_singular;
    }
    if (!poly || !singular || !listed) failures += " s=" + std::to_string(s);
  }
  c.add("table8", family.name, family.vanishes_mod2() && failures.empty(),
        std::string(family.vanishes_mod2() ? "even coefficients" : "odd coefficient") + ", s <= " +
            std::to_string(max_s) + (failures.empty() ? "" : "; fails at" + failures));
}

void table8(Collector& c) {
  const auto& c5 = dim2_multiple_of_five_family();
  check_family(c, c5, 5, 0, 100, {&c5});
  std::vector<const Dim2Family*> group;
  for (const auto& f : dim2_five_s_plus_four_families()) group.push_back(&f);
  for (const auto& f : dim2_five_s_plus_four_families()) check_family(c, f, 5, 4, 100, group);
}

}  // namespace

int published_d4_dim3(int n) {
  if (n < 4 || n > 35) throw InvalidInput("published_d4_dim3: n outside 4..35");
  return kPublishedD4Dim3[static_cast<std::size_t>(n - 4)];
}

const std::vector<ClassificationTarget>& classification_targets() {
  static const std::vector<ClassificationTarget> targets = {
      {26, 19, 5, 1}, {36, 27, 2, 0}, {40, 30, 2, 0},  {43, 32, 10, 0},
      {48, 36, 5, 0}, {52, 39, 5, 0}, {56, 42, 6, 0},  {64, 48, 15, 0},
  };
  return targets;
}

std::vector<CellCheck> check_tables(const TableCheckOptions& options) {
  std::vector<CellCheck> out;
  Collector c(out);
  table1(c, options);
  table2(c);
  tables_3_4_w(c, options);
  table5(c);
  table6(c, options);
  d4_dim2_checks(c, options);
  table8(c);
  return out;
}

}  // namespace gf4lcd::cli
