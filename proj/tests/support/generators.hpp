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

#ifndef GF4LCD_TESTS_GENERATORS_HPP
#define GF4LCD_TESTS_GENERATORS_HPP

// Hand-rolled random generators for the property tests. Each property
// draws from a seeded engine so a failure can be replayed from its seed.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "gf4lcd/code.hpp"
#include "gf4lcd/geometry.hpp"
#include "gf4lcd/matrix.hpp"

namespace gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  gf4lcd::F4 element() { return gf4lcd::F4::from_bits(static_cast<std::uint8_t>(uniform(0, 3))); }
  gf4lcd::F4 unit() { return gf4lcd::F4::from_bits(static_cast<std::uint8_t>(uniform(1, 3))); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

inline gf4lcd::F4Matrix matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  gf4lcd::F4Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.element();
  }
  return m;
}

/// A random full-rank k x n generator (rejection sampling).
inline gf4lcd::F4Matrix full_rank(Rng& rng, std::size_t k, std::size_t n) {
  for (;;) {
    auto m = matrix(rng, k, n);
    if (gf4lcd::rank(m) == k) return m;
  }
}

inline gf4lcd::LinearCode code(Rng& rng, std::size_t k, std::size_t n) { return gf4lcd::LinearCode(full_rank(rng, k, n)); }

/// Random multiplicity vector of total n whose points span the space.
inline gf4lcd::MultiplicityVector multiplicities(Rng& rng, int k, int n) {
  const auto& basis = gf4lcd::point_basis(k);
  for (;;) {
    gf4lcd::MultiplicityVector m{k, std::vector<int>(static_cast<std::size_t>(basis.size()), 0)};
    for (int i = 0; i < n; ++i) ++m.m[static_cast<std::size_t>(rng.uniform(0, basis.size() - 1))];
    gf4lcd::F4Matrix g(static_cast<std::size_t>(k), 0);
    std::size_t support = 0;
    for (int x : m.m) support += x > 0;
    gf4lcd::F4Matrix cols(static_cast<std::size_t>(k), support);
    std::size_t c = 0;
    for (int i = 0; i < basis.size(); ++i) {
      if (m.m[static_cast<std::size_t>(i)] == 0) continue;
      for (int r = 0; r < k; ++r) cols(static_cast<std::size_t>(r), c) = basis.point(i)[static_cast<std::size_t>(r)];
      ++c;
    }
    if (gf4lcd::rank(cols) == static_cast<std::size_t>(k)) return m;
  }
}

/// Random nonzero message vector of length k.
inline std::vector<gf4lcd::F4> message(Rng& rng, int k) {
  for (;;) {
    std::vector<gf4lcd::F4> x(static_cast<std::size_t>(k));
    for (auto& v : x) v = rng.element();
    if (std::any_of(x.begin(), x.end(), [](gf4lcd::F4 v) { return !v.is_zero(); })) return x;
  }
}

/// Applies a random column permutation and column scaling, then a random
/// change of basis of the rows.
inline gf4lcd::F4Matrix monomial_image(Rng& rng, const gf4lcd::F4Matrix& g) {
  std::vector<std::size_t> perm(g.cols());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng.engine());
  gf4lcd::F4Matrix out(g.rows(), g.cols());
  for (std::size_t j = 0; j < g.cols(); ++j) {
    const auto scale = rng.unit();
    for (std::size_t i = 0; i < g.rows(); ++i) out(i, perm[j]) = g(i, j) * scale;
  }
  const auto change = full_rank(rng, g.rows(), g.rows());
  return gf4lcd::mat_mul(change, out);
}

}  // namespace gen

#endif  // GF4LCD_TESTS_GENERATORS_HPP
