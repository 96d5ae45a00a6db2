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
#include "gf4lcd/errors.hpp"
#include "oracle.hpp"

using namespace gf4lcd;

TEST(Bounds, GriesmerLengthExamples) {
  EXPECT_EQ(griesmer_length(3, 19), 26);
  EXPECT_EQ(griesmer_length(3, 16), 21);
  for (int d = 1; d < 50; ++d) EXPECT_EQ(griesmer_length(1, d), d);
}

TEST(Bounds, GriesmerLengthMatchesOracle) {
  for (int k = 1; k <= 6; ++k) {
    for (int d = 1; d <= 300; ++d) EXPECT_EQ(griesmer_length(k, d), oracle::griesmer_length(k, d));
  }
}

TEST(Bounds, Alpha4Examples) {
  EXPECT_EQ(alpha4(26, 3), 19);
  EXPECT_EQ(alpha4(21, 3), 16);
  EXPECT_EQ(alpha4(35, 3), 26);
}

TEST(Bounds, Alpha4IsTheLargestGriesmerWeight) {
  for (int k = 1; k <= 5; ++k) {
    std::int64_t previous = 0;
    for (std::int64_t n = k; n <= 400; ++n) {
      const auto a = alpha4(n, k);
      ASSERT_EQ(a, oracle::alpha4_scan(n, k));
      EXPECT_GE(a, previous);
      EXPECT_LE(griesmer_length(k, a), n);
      EXPECT_GT(griesmer_length(k, a + 1), n);
      previous = a;
    }
  }
}

TEST(Bounds, R4Examples) {
  EXPECT_EQ(r4(26, 3, 19), 17);
  EXPECT_EQ(r4(37, 3, 28), 4);
  EXPECT_EQ(r4(21, 3, 16), 0);
  EXPECT_EQ(r4(20, 3, 16), -16);
}

TEST(Bounds, D4Dim2Examples) {
  EXPECT_EQ(d4_dim2(6), 4);
  EXPECT_EQ(d4_dim2(5), 3);
  EXPECT_EQ(d4_dim2(4), 2);
  EXPECT_THROW(d4_dim2(2), InvalidInput);
}

TEST(Bounds, D4Dim2AgainstFloorBound) {
  for (std::int64_t n = 3; n <= 1000; ++n) {
    const auto r = n % 5;
    EXPECT_LE(d4_dim2(n), 4 * n / 5);
    EXPECT_EQ(d4_dim2(n) == 4 * n / 5, r == 1 || r == 2 || r == 3) << n;
  }
}

TEST(Bounds, D4Dim3Examples) {
  EXPECT_EQ(d4_dim3(26), 19);
  EXPECT_EQ(d4_dim3(21), 15);
  EXPECT_EQ(d4_dim3(22), 15);
  EXPECT_THROW(d4_dim3(5), InvalidInput);
}

TEST(Bounds, D4Dim3DeficitStructure) {
  for (std::int64_t n = 6; n <= 10000; ++n) {
    const auto t = n % 21;
    const auto d = d4_dim3(n);
    // Against floor(16n/21): equal exactly at five residues, else one less.
    const bool meets = t == 5 || t == 9 || t == 13 || t == 17 || t == 18;
    ASSERT_EQ(16 * n / 21 - d, meets ? 0 : 1) << n;
    // Against the Griesmer bound: never more than one below it.
    const auto deficit = alpha4(n, 3) - d;
    ASSERT_GE(deficit, 0);
    ASSERT_LE(deficit, 1);
    const bool tight = t == 2 || t == 3 || t == 4 || t == 5 || t == 7 || t == 8 || t == 9 || t == 12 || t == 13 ||
                       t == 17 || t == 18;
    ASSERT_EQ(deficit == 0, tight) << n;
  }
}

TEST(Bounds, TableRowsAgreeWithClosedForm) {
  for (std::int64_t n = 6; n <= 2000; ++n) ASSERT_EQ(d4_dim3_table_row(n).value, d4_dim3(n)) << n;
  EXPECT_EQ(d4_dim3_table_row(26).source, D4Source::kExtendedC26);
  EXPECT_EQ(d4_dim3_table_row(42).source, D4Source::kMultipleOf21);
  EXPECT_EQ(d4_dim3_table_row(42).value, 31);
  EXPECT_EQ(d4_dim3_table_row(31).value, 22);
  EXPECT_EQ(d4_dim3_table_row(31).source, D4Source::kReductionClassified);
}
