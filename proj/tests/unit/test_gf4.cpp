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

#include "gf4lcd/gf4.hpp"
#include "gf4lcd/matrix.hpp"
#include "generators.hpp"
#include "oracle.hpp"

using namespace gf4lcd;

TEST(Gf4, AdditionExamples) {
  EXPECT_EQ(kOmega + kOmega, kZero);
  EXPECT_EQ(kOne + kOmega, kOmega2);
  EXPECT_EQ(kOmega2 + kOmega, kOne);
}

TEST(Gf4, MultiplicationExamples) {
  EXPECT_EQ(kOmega * kOmega, kOmega2);
  EXPECT_EQ(kOmega * kOmega2, kOne);
  EXPECT_EQ(kZero * kOmega2, kZero);
}

TEST(Gf4, TablesAgreeWithPairArithmetic) {
  for (auto x : kElements) {
    for (auto y : kElements) {
      EXPECT_EQ((x + y).bits(), oracle::add(x.bits(), y.bits()));
      EXPECT_EQ((x * y).bits(), oracle::mul(x.bits(), y.bits()));
    }
    EXPECT_EQ(x.conj(), x * x);
  }
}

TEST(Gf4, FieldAxiomsExhaustive) {
  for (auto x : kElements) {
    EXPECT_EQ(x + x, kZero);
    EXPECT_EQ(x + kZero, x);
    EXPECT_EQ(x * kOne, x);
    EXPECT_EQ(x.conj().conj(), x);
    if (!x.is_zero()) {
      EXPECT_EQ(x * x.inverse(), kOne);
      EXPECT_EQ(x * x * x, kOne);  // cyclic group of order 3
    }
    for (auto y : kElements) {
      EXPECT_EQ(x + y, y + x);
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
      EXPECT_EQ((x + y).conj(), x.conj() + y.conj());
      for (auto z : kElements) {
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
      }
    }
  }
}

TEST(Gf4, CharRoundTrip) {
  for (auto x : kElements) EXPECT_EQ(F4::from_char(x.to_char()), x);
  EXPECT_FALSE(F4::from_char('2').has_value());
}

TEST(Gf4Matrix, ConjTransposeIsInvolution) {
  gen::Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto m = gen::matrix(rng, static_cast<std::size_t>(rng.uniform(1, 5)), static_cast<std::size_t>(rng.uniform(1, 7)));
    EXPECT_EQ(conj_transpose(conj_transpose(m)), m);
    EXPECT_LE(rank(m), std::min(m.rows(), m.cols()));
  }
}

TEST(Gf4Matrix, RankMatchesOracle) {
  gen::Rng rng(12);
  for (int t = 0; t < 500; ++t) {
    const auto m = gen::matrix(rng, static_cast<std::size_t>(rng.uniform(1, 5)), static_cast<std::size_t>(rng.uniform(1, 7)));
    EXPECT_EQ(static_cast<int>(rank(m)), oracle::rank(oracle::from(m)));
  }
}

TEST(Gf4Matrix, DeterminantVanishesExactlyOnSingular) {
  gen::Rng rng(13);
  for (int t = 0; t < 500; ++t) {
    const auto size = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto m = gen::matrix(rng, size, size);
    EXPECT_EQ(det(m).is_zero(), rank(m) < size);
  }
}

TEST(Gf4Matrix, DeterminantIsMultiplicative) {
  gen::Rng rng(14);
  for (int t = 0; t < 300; ++t) {
    const auto size = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto a = gen::matrix(rng, size, size);
    const auto b = gen::matrix(rng, size, size);
    EXPECT_EQ(det(mat_mul(a, b)), det(a) * det(b));
  }
}

TEST(Gf4Matrix, NullspaceIsAnnihilatedAndComplementary) {
  gen::Rng rng(15);
  for (int t = 0; t < 300; ++t) {
    const auto m = gen::matrix(rng, static_cast<std::size_t>(rng.uniform(1, 4)), static_cast<std::size_t>(rng.uniform(2, 7)));
    const auto ns = nullspace(m);
    EXPECT_EQ(rank(m) + ns.rows(), m.cols());
    if (ns.rows() > 0) {
      EXPECT_TRUE(mat_mul(m, ns.transpose()).is_zero());
    }
  }
}

TEST(Gf4Matrix, ParseRoundTrip) {
  gen::Rng rng(16);
  for (int t = 0; t < 100; ++t) {
    const auto m = gen::matrix(rng, static_cast<std::size_t>(rng.uniform(1, 4)), static_cast<std::size_t>(rng.uniform(1, 30)));
    EXPECT_EQ(F4Matrix::parse("# header\n" + m.to_string() + "\n\n"), m);
  }
}

TEST(Gf4Matrix, ParseRejectsBadSymbols) { EXPECT_THROW(F4Matrix::parse("10x\n"), std::invalid_argument); }
