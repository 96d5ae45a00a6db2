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

#include "gf4lcd/code.hpp"

#include <sstream>

#include "gf4lcd/errors.hpp"

namespace gf4lcd {

namespace {

void require_enumerable(const LinearCode& code) {
  if (code.dimension() > kMaxEnumerationDimension)
    throw InvalidInput("codeword enumeration needs k <= " + std::to_string(kMaxEnumerationDimension));
}

// Depth-first over message digits; level i holds the partial sum of the
// first i rows.
void enumerate(const std::vector<std::array<PackedVector, 4>>& multiples, std::vector<PackedVector>& partial,
               std::size_t level, const std::function<void(const PackedVector&)>& visit) {
  if (level == multiples.size()) {
    visit(partial[level]);
    return;
  }
  for (const auto& m : multiples[level]) {
    PackedVector::add_into(partial[level], m, partial[level + 1]);
    enumerate(multiples, partial, level + 1, visit);
  }
}

}  // namespace

LinearCode::LinearCode(F4Matrix generator) : generator_(std::move(generator)) {
  if (rank(generator_) != generator_.rows())
    throw InvalidInput("generator matrix rows are linearly dependent");
}

LinearCode::LinearCode(F4Matrix generator, std::size_t) : generator_(std::move(generator)) {}

LinearCode LinearCode::zero(std::size_t n) { return LinearCode(F4Matrix(0, n), n); }
LinearCode LinearCode::full_space(std::size_t n) { return LinearCode(F4Matrix::identity(n), n); }

std::uint64_t WeightEnumerator::total() const {
  std::uint64_t t = 0;
  for (auto a : coefficients) t += a;
  return t;
}

std::size_t WeightEnumerator::min_weight() const {
  for (std::size_t i = 1; i < coefficients.size(); ++i)
    if (coefficients[i] != 0) return i;
  return 0;
}

std::string WeightEnumerator::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (coefficients[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << coefficients[i];
    } else {
      if (coefficients[i] != 1) os << coefficients[i];
      os << 'y';
      if (i != 1) os << '^' << i;
    }
  }
  return first ? "0" : os.str();
}

std::string WeightEnumerator::to_compact() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 1; i < coefficients.size(); ++i) {
    if (coefficients[i] == 0) continue;
    if (!first) os << ',';
    first = false;
    os << i << ':' << coefficients[i];
  }
  return os.str();
}

WeightEnumerator WeightEnumerator::from_compact(std::size_t n, const std::string& text) {
  WeightEnumerator w(n);
  w.coefficients[0] = 1;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw InvalidInput("bad enumerator term '" + item + "'");
    const auto weight = std::stoul(item.substr(0, colon));
    const auto count = std::stoull(item.substr(colon + 1));
    if (weight == 0 || weight > n) throw InvalidInput("enumerator weight out of range: " + item);
    w.coefficients[weight] += count;
  }
  return w;
}

void for_each_codeword(const LinearCode& code, const std::function<void(const PackedVector&)>& visit) {
  require_enumerable(code);
  const auto& g = code.generator();
  std::vector<std::array<PackedVector, 4>> multiples;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    PackedVector row(g.row(i));
    multiples.push_back({row.scaled(kZero), row, row.scaled(kOmega), row.scaled(kOmega2)});
  }
  std::vector<PackedVector> partial(g.rows() + 1, PackedVector(code.length()));
  enumerate(multiples, partial, 0, visit);
}

std::vector<std::vector<F4>> codewords(const LinearCode& code) {
  std::vector<std::vector<F4>> out;
  for_each_codeword(code, [&](const PackedVector& v) { out.push_back(v.unpack()); });
  return out;
}

WeightEnumerator weight_enumerator(const LinearCode& code) {
  WeightEnumerator w(code.length());
  for_each_codeword(code, [&](const PackedVector& v) { ++w.coefficients[v.weight()]; });
  return w;
}

std::size_t min_weight(const LinearCode& code) {
  if (code.dimension() == 0) throw InvalidInput("min_weight: zero code has no nonzero codeword");
  return weight_enumerator(code).min_weight();
}

bool is_even(const LinearCode& code) {
  bool even = true;
  for_each_codeword(code, [&](const PackedVector& v) { even = even && (v.weight() % 2 == 0); });
  return even;
}

LinearCode hermitian_dual(const LinearCode& code) {
  // x is in the dual iff conj(G) x^T = 0.
  return LinearCode(nullspace(code.generator().conj()));
}

LinearCode euclidean_dual(const LinearCode& code) { return LinearCode(nullspace(code.generator())); }

F4Matrix hermitian_gram(const LinearCode& code) {
  return mat_mul(code.generator(), conj_transpose(code.generator()));
}

bool is_hermitian_lcd(const LinearCode& code) { return !det(hermitian_gram(code)).is_zero(); }

bool is_hermitian_self_orthogonal(const LinearCode& code) { return hermitian_gram(code).is_zero(); }

F4 hermitian_product(std::span<const F4> x, std::span<const F4> y) {
  if (x.size() != y.size()) throw InvalidInput("inner product of vectors of different length");
  F4 s;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i].conj();
  return s;
}

F4 euclidean_product(std::span<const F4> x, std::span<const F4> y) {
  if (x.size() != y.size()) throw InvalidInput("inner product of vectors of different length");
  F4 s;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

LinearCode shorten(const LinearCode& code, std::size_t position) {
  if (position >= code.length()) throw InvalidInput("shorten: position out of range");
  if (code.length() == 1) throw InvalidInput("shorten: result would have length zero");
  const auto& g = code.generator();
  std::size_t pivot = g.rows();
  for (std::size_t i = 0; i < g.rows(); ++i)
    if (!g(i, position).is_zero()) {
      pivot = i;
      break;
    }
  if (pivot == g.rows()) return LinearCode(g.without_column(position));

  // Clear the coordinate from every other row; the pivot row is the only
  // generator that does not vanish there and is dropped.
  F4Matrix m = g;
  const F4 inv = g(pivot, position).inverse();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i == pivot || m(i, position).is_zero()) continue;
    const F4 f = m(i, position) * inv;
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) += f * g(pivot, j);
  }
  return LinearCode(m.without_row(pivot).without_column(position));
}

LinearCode delete_zero_column(const LinearCode& code) {
  const auto& g = code.generator();
  for (std::size_t j = 0; j < g.cols(); ++j)
    if (g.is_zero_column(j)) return LinearCode(g.without_column(j));
  throw InvalidInput("delete_zero_column: generator has no zero column");
}

LinearCode pad_zero_columns(const LinearCode& code, std::size_t count) {
  return LinearCode(hconcat(code.generator(), F4Matrix(code.dimension(), count)));
}

LinearCode juxtapose(const LinearCode& a, const LinearCode& b) {
  if (a.dimension() != b.dimension()) throw InvalidInput("juxtapose: dimensions differ");
  return LinearCode(hconcat(a.generator(), b.generator()));
}

bool same_code(const LinearCode& a, const LinearCode& b) {
  return a.dimension() == b.dimension() && same_row_space(a.generator(), b.generator());
}

}  // namespace gf4lcd
