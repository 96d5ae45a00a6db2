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

#include "gf4lcd/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "gf4lcd/errors.hpp"

namespace gf4lcd {

namespace {

std::vector<F4> parse_row(std::string_view line) {
  std::vector<F4> row;
  for (char c : line) {
    if (c == ' ' || c == '\t' || c == '\r' || c == ',') continue;
    auto x = F4::from_char(c);
    if (!x) throw InvalidInput(std::string("invalid GF(4) symbol '") + c + "'");
    row.push_back(*x);
  }
  return row;
}

F4Matrix from_row_vectors(const std::vector<std::vector<F4>>& rows) {
  if (rows.empty()) return {};
  F4Matrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw InvalidInput("rows have different lengths");
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

// Gauss-Jordan elimination in place. Returns pivot columns and the product
// of the pivot entries seen before normalisation (the determinant for a
// full-rank square matrix; row swaps carry no sign in characteristic 2).
std::vector<std::size_t> eliminate(F4Matrix& m, F4* pivot_product) {
  std::vector<std::size_t> pivots;
  F4 product = kOne;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      auto a = m.row(p);
      auto b = m.row(r);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    const F4 pivot = m(r, c);
    product *= pivot;
    const F4 inv = pivot.inverse();
    for (auto& x : m.row(r)) x *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r) continue;
      const F4 f = m(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) += f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  if (pivot_product) *pivot_product = product;
  return pivots;
}

}  // namespace

F4Matrix F4Matrix::identity(std::size_t n) {
  F4Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = kOne;
  return m;
}

F4Matrix F4Matrix::from_rows(std::initializer_list<std::string_view> rows) {
  std::vector<std::vector<F4>> parsed;
  for (auto r : rows) parsed.push_back(parse_row(r));
  return from_row_vectors(parsed);
}

F4Matrix F4Matrix::from_rows(const std::vector<std::string>& rows) {
  std::vector<std::vector<F4>> parsed;
  for (const auto& r : rows) parsed.push_back(parse_row(r));
  return from_row_vectors(parsed);
}

F4Matrix F4Matrix::parse(std::string_view text) {
  std::vector<std::vector<F4>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto row = parse_row(line);
    if (!row.empty()) rows.push_back(std::move(row));
    start = end + 1;
  }
  if (rows.empty()) throw InvalidInput("generator matrix text contains no rows");
  return from_row_vectors(rows);
}

std::string F4Matrix::to_string() const {
  std::string out;
  out.reserve(rows_ * (cols_ + 1));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (F4 x : row(i)) out.push_back(x.to_char());
    out.push_back('\n');
  }
  return out;
}

F4 F4Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw InvalidInput("matrix index out of range");
  return (*this)(i, j);
}

std::vector<F4> F4Matrix::column(std::size_t j) const {
  std::vector<F4> col(rows_);
  for (std::size_t i = 0; i < rows_; ++i) col[i] = (*this)(i, j);
  return col;
}

bool F4Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](F4 x) { return x.is_zero(); });
}

bool F4Matrix::is_zero_column(std::size_t j) const {
  for (std::size_t i = 0; i < rows_; ++i)
    if (!(*this)(i, j).is_zero()) return false;
  return true;
}

F4Matrix F4Matrix::transpose() const {
  F4Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

F4Matrix F4Matrix::conj() const {
  F4Matrix c = *this;
  for (auto& x : c.data_) x = x.conj();
  return c;
}

F4Matrix F4Matrix::without_column(std::size_t j) const {
  if (j >= cols_) throw InvalidInput("column index out of range");
  F4Matrix m(rows_, cols_ - 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::size_t out = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if (c != j) m(i, out++) = (*this)(i, c);
  }
  return m;
}

F4Matrix F4Matrix::without_row(std::size_t i) const {
  if (i >= rows_) throw InvalidInput("row index out of range");
  F4Matrix m(rows_ - 1, cols_);
  std::size_t out = 0;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r == i) continue;
    std::copy(row(r).begin(), row(r).end(), m.row(out++).begin());
  }
  return m;
}

F4Matrix hconcat(const F4Matrix& a, const F4Matrix& b) {
  if (a.rows() != b.rows()) throw InvalidInput("hconcat: row counts differ");
  F4Matrix m(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::copy(a.row(i).begin(), a.row(i).end(), m.row(i).begin());
    std::copy(b.row(i).begin(), b.row(i).end(), m.row(i).begin() + static_cast<std::ptrdiff_t>(a.cols()));
  }
  return m;
}

F4Matrix repeat_columns(const F4Matrix& a, std::size_t copies) {
  F4Matrix m(a.rows(), a.cols() * copies);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t s = 0; s < copies; ++s)
      std::copy(a.row(i).begin(), a.row(i).end(), m.row(i).begin() + static_cast<std::ptrdiff_t>(s * a.cols()));
  return m;
}

F4Matrix mat_mul(const F4Matrix& a, const F4Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("mat_mul: dimension mismatch");
  F4Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const F4 x = a(i, l);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += x * b(l, j);
    }
  return c;
}

F4Matrix conj_transpose(const F4Matrix& a) { return a.transpose().conj(); }

RowEchelon row_reduce(const F4Matrix& a) {
  F4Matrix m = a;
  auto pivots = eliminate(m, nullptr);
  F4Matrix reduced(pivots.size(), a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    std::copy(m.row(i).begin(), m.row(i).end(), reduced.row(i).begin());
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const F4Matrix& a) {
  F4Matrix m = a;
  return eliminate(m, nullptr).size();
}

F4 det(const F4Matrix& a) {
  if (a.rows() != a.cols()) throw InvalidInput("det: matrix is not square");
  if (a.rows() == 0) return kOne;
  F4Matrix m = a;
  F4 product;
  auto pivots = eliminate(m, &product);
  return pivots.size() == a.rows() ? product : kZero;
}

F4Matrix nullspace(const F4Matrix& a) {
  const auto [reduced, pivots] = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  F4Matrix basis(a.cols() - pivots.size(), a.cols());
  std::size_t out = 0;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis(out, f) = kOne;
    // x_pivot = -R[i][f] = R[i][f] in characteristic 2.
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(out, pivots[i]) = reduced(i, f);
    ++out;
  }
  return basis;
}

bool same_row_space(const F4Matrix& a, const F4Matrix& b) {
  if (a.cols() != b.cols()) return false;
  return row_reduce(a).reduced == row_reduce(b).reduced;
}

}  // namespace gf4lcd
