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

#include "gf4lcd/constructions.hpp"
#include "gf4lcd/errors.hpp"
#include "gf4lcd/geometry.hpp"
#include "gf4lcd/quantum.hpp"

using namespace gf4lcd;

TEST(Quantum, C26Parameters) {
  const auto p = to_maximal_entanglement(c26().code);
  EXPECT_EQ(p.to_string(), "[[26,3,19;23]]");
  EXPECT_TRUE(p.maximal_entanglement());
}

TEST(Quantum, ExtendedC26MeetsTheBound) {
  for (std::size_t s = 1; s <= 5; ++s) {
    const auto p = to_maximal_entanglement(extend_with_simplex(c26().code, s));
    // s extra simplex blocks on C26: length 21(s+1) + 5.
    const auto n = 21 * static_cast<std::int64_t>(s + 1) + 5;
    EXPECT_EQ(p.n, n);
    EXPECT_EQ(p.k, 3);
    EXPECT_EQ(p.d, 16 * static_cast<std::int64_t>(s + 1) + 3);
    EXPECT_EQ(p.c, n - 3);
    EXPECT_EQ(p.d, lbw_bound(n, 3));
  }
}

TEST(Quantum, LbwBoundExamples) {
  EXPECT_EQ(lbw_bound(26, 3), 19);
  EXPECT_EQ(lbw_bound(21, 3), 16);
  for (std::int64_t s = 1; s < 200; ++s) EXPECT_EQ(lbw_bound(21 * s + 5, 3), 16 * s + 3);
}

TEST(Quantum, LbwBoundMatchesRationalFormula) {
  for (int k = 1; k <= 6; ++k) {
    const std::int64_t q = std::int64_t{1} << (2 * k);
    for (std::int64_t n = k; n < 500; ++n) EXPECT_EQ(lbw_bound(n, k), 3 * n * q / (4 * (q - 1)));
  }
}

TEST(Quantum, RejectsNonLcdCodes) { EXPECT_THROW(to_maximal_entanglement(LinearCode(simplex_matrix(3))), InvalidInput); }
