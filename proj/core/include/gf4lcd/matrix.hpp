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

#ifndef GF4LCD_MATRIX_HPP
#define GF4LCD_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gf4lcd/gf4.hpp"

namespace gf4lcd {

/// Dense row-major matrix over GF(4).
class F4Matrix {
 public:
  F4Matrix() = default;
  F4Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static F4Matrix identity(std::size_t n);

  /// Builds a matrix from strings over the alphabet {0,1,w,W}, one per row.
  static F4Matrix from_rows(std::initializer_list<std::string_view> rows);
  static F4Matrix from_rows(const std::vector<std::string>& rows);

  /// Parses the generator-matrix text format: one row per line over
  /// {0,1,w,W}; blank lines, whitespace and `#` comments are ignored.
  static F4Matrix parse(std::string_view text);

  /// Inverse of parse(): one row per line, no trailing comment.
  std::string to_string() const;

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  F4 operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  F4& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  F4 at(std::size_t i, std::size_t j) const;

  std::span<const F4> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<F4> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::vector<F4> column(std::size_t j) const;

  bool is_zero() const;
  bool is_zero_column(std::size_t j) const;

  F4Matrix transpose() const;
  F4Matrix conj() const;

  /// Copy with column j removed.
  F4Matrix without_column(std::size_t j) const;
  /// Copy with row i removed.
  F4Matrix without_row(std::size_t i) const;

  friend bool operator==(const F4Matrix&, const F4Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F4> data_;
};

/// Side-by-side concatenation (A | B). Row counts must agree.
F4Matrix hconcat(const F4Matrix& a, const F4Matrix& b);

/// The matrix (A | A | ... | A) with `copies` blocks.
F4Matrix repeat_columns(const F4Matrix& a, std::size_t copies);

F4Matrix mat_mul(const F4Matrix& a, const F4Matrix& b);
F4Matrix conj_transpose(const F4Matrix& a);

/// Reduced row echelon form with pivot columns; zero rows are dropped.
struct RowEchelon {
  F4Matrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(const F4Matrix& a);

std::size_t rank(const F4Matrix& a);
F4 det(const F4Matrix& a);

/// Basis (as rows) of {x : A x^T = 0}, one vector per free column of the
/// reduced form, in increasing free-column order.
F4Matrix nullspace(const F4Matrix& a);

/// True if the two matrices have the same row space.
bool same_row_space(const F4Matrix& a, const F4Matrix& b);

}  // namespace gf4lcd

#endif  // GF4LCD_MATRIX_HPP
