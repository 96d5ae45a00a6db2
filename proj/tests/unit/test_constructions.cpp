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

#include "gf4lcd/bounds.hpp"
#include "gf4lcd/classify.hpp"
#include "gf4lcd/constructions.hpp"
#include "gf4lcd/errors.hpp"
#include "oracle.hpp"

using namespace gf4lcd;

TEST(Constructions, C26) {
  const auto named = c26();
  EXPECT_EQ(named.code.length(), 26u);
  EXPECT_EQ(named.code.dimension(), 3u);
  EXPECT_EQ(weight_enumerator(named.code).to_string(), "1+33y^19+18y^20+3y^21+9y^22");
  EXPECT_TRUE(is_hermitian_lcd(named.code));
  EXPECT_EQ(min_weight(named.code), 19u);
  const auto g = oracle::from(named.code.generator());
  EXPECT_TRUE(oracle::lcd_by_intersection(g, 26));
}

TEST(Constructions, TableCodeExamples) {
  EXPECT_EQ(weight_enumerator(table_code("C43_10").code).to_string(), "1+63y^32");
  EXPECT_EQ(weight_enumerator(table_code("C64_15").code).to_string(), "1+60y^48+3y^64");
  EXPECT_EQ(weight_enumerator(table_code("C36_2").code).to_string(), "1+45y^27+15y^28+3y^31");
  EXPECT_THROW(table_code("C99_1"), InvalidInput);
  EXPECT_EQ(table_code_names().size(), 45u);
}

TEST(Constructions, EveryNamedCodeMeetsItsExpectations) {
  for (const auto& name : named_code_names()) {
    const auto named = named_code(name);
    const auto check = verify(named);
    EXPECT_TRUE(check.ok()) << name;
    EXPECT_EQ(check.min_weight, named.expected_enumerator.min_weight()) << name;
  }
}

TEST(Constructions, TableCodesAppearInTheClassification) {
  std::map<int, std::vector<std::string>> by_length;
  for (const auto& name : table_code_names()) by_length[std::stoi(name.substr(1, name.find('_') - 1))].push_back(name);
  for (const auto& [n, names] : by_length) {
    const auto d = static_cast<std::int64_t>(min_weight(table_code(names.front()).code));
    ClassificationQuery q;
    q.n = n;
    q.d = d;
    const auto result = classify(q);
    for (const auto& name : names) {
      const auto code = table_code(name).code;
      EXPECT_EQ(static_cast<std::int64_t>(min_weight(code)), d) << name;
      int zeros = 0;
      F4Matrix g = code.generator();
      for (std::size_t j = g.cols(); j-- > 0;) {
        if (g.is_zero_column(j)) {
          g = g.without_column(j);
          ++zeros;
        }
      }
      const auto key = canonical_form(multiplicities(LinearCode(g)));
      const bool found = std::any_of(result.classes.begin(), result.classes.end(), [&](const CodeClass& c) {
        return c.zero_columns == zeros && c.representative == key;
      });
      EXPECT_TRUE(found) << name;
    }
  }
}

TEST(Constructions, ExtendWithSimplex) {
  const auto base = c26().code;
  EXPECT_TRUE(same_code(extend_with_simplex(base, 0), base));
  for (std::size_t s = 1; s <= 3; ++s) {
    const auto ext = extend_with_simplex(base, s);
    EXPECT_EQ(ext.length(), 26 + 21 * s);
    EXPECT_EQ(hermitian_gram(ext), hermitian_gram(base));
    EXPECT_TRUE(is_hermitian_lcd(ext));
    EXPECT_EQ(min_weight(ext), 19 + 16 * s);
  }
  EXPECT_THROW(extend_with_simplex(table_code("C36_1").code, 1), InvalidInput);
  EXPECT_THROW(extend_with_simplex(LinearCode(F4Matrix::from_rows({"1ww"})), 1), InvalidInput);
}

TEST(Constructions, Dim2FamilyExamples) {
  EXPECT_EQ(dim2_family({0, 0, 0, 0, 0}).generator(), F4Matrix::identity(2));
  const auto simplex = dim2_family({0, 0, 1, 1, 1});
  EXPECT_EQ(simplex.length(), 5u);
  EXPECT_EQ(min_weight(simplex), 4u);
  EXPECT_EQ(canonical_form(multiplicities(simplex)).m, std::vector<int>(5, 1));
}

TEST(Constructions, ExistenceSearch) {
  const auto w47 = lcd_existence_search(47, 3, 35);
  ASSERT_TRUE(w47.has_value());
  EXPECT_TRUE(is_hermitian_lcd(*w47));
  EXPECT_EQ(w47->length(), 47u);
  EXPECT_GE(min_weight(*w47), 35u);

  const auto w21 = lcd_existence_search(21, 3, 15, {.budget = 200000, .seed = 1});
  ASSERT_TRUE(w21.has_value());
  EXPECT_TRUE(is_hermitian_lcd(*w21));
  EXPECT_GE(min_weight(*w21), 15u);

  EXPECT_FALSE(lcd_existence_search(21, 3, 16, {.budget = 5000, .seed = 1}).has_value());
}

TEST(Constructions, ExistenceSearchWitnessesAreValid) {
  for (std::int64_t n = 6; n <= 30; ++n) {
    const auto d = d4_dim3(n);
    const auto w = lcd_existence_search(n, 3, d, {.budget = 50000, .seed = static_cast<std::uint64_t>(n)});
    if (!w) continue;  // no witness within budget is not evidence either way
    EXPECT_EQ(static_cast<std::int64_t>(w->length()), n);
    EXPECT_TRUE(is_hermitian_lcd(*w));
    EXPECT_GE(static_cast<std::int64_t>(min_weight(*w)), d);
  }
  for (std::int64_t n = 3; n <= 30; ++n) {
    const auto w = lcd_existence_search(n, 2, d4_dim2(n), {.budget = 50000, .seed = 7});
    ASSERT_TRUE(w.has_value()) << n;
    EXPECT_TRUE(is_hermitian_lcd(*w));
    EXPECT_GE(static_cast<std::int64_t>(min_weight(*w)), d4_dim2(n));
  }
}
