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

#ifndef GF4LCD_CODE_HPP
#define GF4LCD_CODE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gf4lcd/matrix.hpp"
#include "gf4lcd/packed.hpp"

namespace gf4lcd {

/// Largest dimension for which codewords are enumerated explicitly.
inline constexpr std::size_t kMaxEnumerationDimension = 12;

/// A quaternary [n,k] code given by a full-rank k x n generator matrix.
/// The zero code (k = 0) is represented by a 0 x n generator.
class LinearCode {
 public:
  /// Throws InvalidInput unless the rows are linearly independent.
  explicit LinearCode(F4Matrix generator);

  static LinearCode zero(std::size_t n);
  static LinearCode full_space(std::size_t n);

  std::size_t length() const { return generator_.cols(); }
  std::size_t dimension() const { return generator_.rows(); }
  const F4Matrix& generator() const { return generator_; }

 private:
  LinearCode(F4Matrix generator, std::size_t n);
  F4Matrix generator_;
};

/// Coefficients A_0..A_n of sum A_i y^i.
struct WeightEnumerator {
  std::vector<std::uint64_t> coefficients;

  WeightEnumerator() = default;
  explicit WeightEnumerator(std::size_t n) : coefficients(n + 1, 0) {}

  std::size_t length() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  std::uint64_t total() const;
  /// Smallest i >= 1 with A_i > 0, or 0 if there is none.
  std::size_t min_weight() const;

  /// "1+33y^19+18y^20" style rendering.
  std::string to_string() const;
  /// Compact "19:33,20:18" form (nonzero weights only, A_0 implied).
  std::string to_compact() const;
  static WeightEnumerator from_compact(std::size_t n, const std::string& text);

  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

/// Calls `visit` once for every codeword (all 4^k message combinations).
void for_each_codeword(const LinearCode& code, const std::function<void(const PackedVector&)>& visit);

/// All 4^k codewords, in base-4 message order with the first row as the
/// most significant digit.
std::vector<std::vector<F4>> codewords(const LinearCode& code);

WeightEnumerator weight_enumerator(const LinearCode& code);
std::size_t min_weight(const LinearCode& code);
bool is_even(const LinearCode& code);

LinearCode hermitian_dual(const LinearCode& code);
LinearCode euclidean_dual(const LinearCode& code);
/// G * conj(G)^T.
F4Matrix hermitian_gram(const LinearCode& code);
bool is_hermitian_lcd(const LinearCode& code);
bool is_hermitian_self_orthogonal(const LinearCode& code);

/// Hermitian inner product sum x_i * conj(y_i).
F4 hermitian_product(std::span<const F4> x, std::span<const F4> y);
F4 euclidean_product(std::span<const F4> x, std::span<const F4> y);

/// Codewords vanishing at `position`, with that coordinate deleted.
LinearCode shorten(const LinearCode& code, std::size_t position);
/// Deletes the first all-zero column of the generator.
LinearCode delete_zero_column(const LinearCode& code);
/// Appends `count` zero columns.
LinearCode pad_zero_columns(const LinearCode& code, std::size_t count);
/// Code generated by (G_a | G_b); both must have the same dimension.
LinearCode juxtapose(const LinearCode& a, const LinearCode& b);

bool same_code(const LinearCode& a, const LinearCode& b);

}  // namespace gf4lcd

#endif  // GF4LCD_CODE_HPP
