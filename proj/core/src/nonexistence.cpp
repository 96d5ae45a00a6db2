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

#include "gf4lcd/nonexistence.hpp"

#include <algorithm>
#include <numeric>

#include "gf4lcd/bounds.hpp"
#include "gf4lcd/errors.hpp"

namespace gf4lcd {

namespace {

std::int64_t pow4(int e) {
  std::int64_t p = 1;
  for (int i = 0; i < e; ++i) p *= 4;
  return p;
}

void require_k_at_least_3(int k, const char* who) {
  if (k < 3) throw InvalidInput(std::string(who) + ": requires k >= 3");
}

// Floor division for a positive denominator.
std::int64_t floor_div(std::int64_t a, std::int64_t b) { return a / b - ((a % b != 0) && (a < 0)); }

}  // namespace

std::int64_t RationalInterval::integer_lower() const {
  const auto c = -floor_div(-lower.numerator(), lower.denominator());
  return c < 0 ? 0 : c;
}

std::int64_t RationalInterval::integer_upper() const {
  return floor_div(upper.numerator(), upper.denominator());
}

RationalInterval design_count_bounds(const DesignIncidence& design, std::span<const std::int64_t> m,
                                     std::int64_t alpha) {
  if (design.r == design.lambda) throw InvalidInput("design_count_bounds: degenerate design (r = lambda)");
  if (m.size() != static_cast<std::size_t>(design.v)) {
    throw InvalidInput("design_count_bounds: weight vector length differs from v");
  }
  const std::int64_t total = std::accumulate(m.begin(), m.end(), std::int64_t{0});
  const std::int64_t r = design.r;
  const std::int64_t lambda = design.lambda;
  const std::int64_t b = design.b;
  return {Rational(r * alpha - lambda * total, r - lambda), Rational(total) - Rational(b - r, r - lambda) * alpha};
}

RationalInterval multiplicity_bounds(std::int64_t n, int k, std::int64_t alpha) {
  require_k_at_least_3(k, "multiplicity_bounds");
  const Rational ratio(pow4(k - 1) - 1, 3 * pow4(k - 2));
  return {Rational(4 * alpha - 3 * n), Rational(n) - ratio * alpha};
}

bool divisibility_obstruction(std::int64_t n, int k) {
  require_k_at_least_3(k, "divisibility_obstruction");
  if (n < 1) throw InvalidInput("divisibility_obstruction: requires n >= 1");
  return n % point_count(k) == 0;
}

ReductionOutcome simplex_reduction(std::int64_t n, int k, std::int64_t alpha) {
  require_k_at_least_3(k, "simplex_reduction");
  if (4 * alpha - 3 * n < 1) return {ReductionVerdict::kNotApplicable, std::nullopt};
  const std::int64_t r = r4(n, k, alpha);
  if (4 * r < k) return {ReductionVerdict::kNonexistentByRank, std::nullopt};
  return {ReductionVerdict::kReduced, CodeParameters{4 * r, k, 3 * r}};
}

bool dual_distance_forced(std::int64_t /*n*/, int /*k*/, std::int64_t d, std::int64_t bound_on_shorter) {
  return bound_on_shorter <= d - 1;
}

F4Matrix dim2_gram(const Dim2Counts& a) {
  // Row i of G(a) dotted with the conjugate of row j, summed column class by
  // column class. Classes: e1, e2, (0,1), (1,0), (1,1), (1,w), (1,w^2).
  const std::int64_t counts[7] = {1, 1, a[0], a[1], a[2], a[3], a[4]};
  const F4 top[7] = {kOne, kZero, kZero, kOne, kOne, kOne, kOne};
  const F4 bottom[7] = {kZero, kOne, kOne, kZero, kOne, kOmega, kOmega2};
  const F4* rows[2] = {top, bottom};
  F4Matrix gram(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      F4 sum = kZero;
      for (int c = 0; c < 7; ++c) sum += times(counts[c], rows[i][c] * rows[j][c].conj());
      gram(i, j) = sum;
    }
  }
  return gram;
}

WeightEnumerator dim2_weight_enumerator_formula(const Dim2Counts& a) {
  for (auto x : a) {
    if (x < 0) throw InvalidInput("dim2_weight_enumerator_formula: negative count");
  }
  const auto [a1, a2, a3, a4, a5] = a;
  const std::int64_t n = 2 + a1 + a2 + a3 + a4 + a5;
  WeightEnumerator w(static_cast<std::size_t>(n));
  w.coefficients[0] = 1;
  const std::int64_t exponents[5] = {
      1 + a1 + a3 + a4 + a5, 1 + a2 + a3 + a4 + a5, 2 + a1 + a2 + a4 + a5,
      2 + a1 + a2 + a3 + a4, 2 + a1 + a2 + a3 + a5,
  };
  for (auto e : exponents) w.coefficients[static_cast<std::size_t>(e)] += 3;
  return w;
}

IntegerDeterminant dim2_determinant_formula(const Dim2Counts& a) {
  const auto [a1, a2, a3, a4, a5] = a;
  const std::int64_t integer_part =
      1 + a1 + a2 + a1 * a2 + a1 * a3 + a1 * a4 + a1 * a5 + a2 * a3 + a2 * a4 + a2 * a5;
  const std::int64_t omega_part = a3 * a4 + a3 * a5 + a4 * a5;
  return {integer_part, omega_part};
}

Dim2Counts Dim2Family::at(std::int64_t s) const {
  Dim2Counts a{};
  for (std::size_t i = 0; i < 5; ++i) a[i] = s + offsets[i];
  return a;
}

bool Dim2Family::vanishes_mod2() const {
  const Quadratic sum = integer_part + omega_part;
  for (auto c : sum.c) {
    if (c % 2 != 0) return false;
  }
  return true;
}

const Dim2Family& dim2_multiple_of_five_family() {
  static const Dim2Family family{"C", {-1, -1, 0, 0, 0}, {{0, -6, 7}}, {{0, 0, 3}}};
  return family;
}

const std::array<Dim2Family, 5>& dim2_five_s_plus_four_families() {
  static const std::array<Dim2Family, 5> families = {{
      {"C1", {-1, 0, 1, 1, 1}, {{-3, 4, 7}}, {{3, 6, 3}}},
      {"C2", {0, -1, 1, 1, 1}, {{-3, 4, 7}}, {{3, 6, 3}}},
      {"C3", {0, 0, 0, 1, 1}, {{1, 6, 7}}, {{1, 4, 3}}},
      {"C4", {0, 0, 1, 0, 1}, {{1, 6, 7}}, {{1, 4, 3}}},
      {"C5", {0, 0, 1, 1, 0}, {{1, 6, 7}}, {{1, 4, 3}}},
  }};
  return families;
}

Dim2Certificate dim2_case_analysis(std::int64_t n) {
  if (n < 4 || (n % 5 != 0 && n % 5 != 4)) {
    throw InvalidInput("dim2_case_analysis: requires n >= 4 and n = 0, 4 (mod 5)");
  }
  Dim2Certificate cert;
  cert.n = n;
  cert.target_d = (4 * n) / 5;
  // A zero column would leave an LCD [n-1,2,target_d] code, beyond Griesmer.
  cert.zero_column_excluded = dual_distance_forced(n, 2, cert.target_d, alpha4(n - 1, 2));

  // The weight conditions are equivalent to a_j <= n - 1 - D (j = 1,2) and
  // a_j <= n - D (j = 3,4,5); write a_j = U_j - e_j with slack e_j >= 0.
  const std::int64_t D = cert.target_d;
  const Dim2Counts upper = {n - 1 - D, n - 1 - D, n - D, n - D, n - D};
  const std::int64_t slack = std::accumulate(upper.begin(), upper.end(), std::int64_t{0}) - (n - 2);
  if (slack >= 0) {
    Dim2Counts e{};
    auto recurse = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
      if (i == 4) {
        if (left > upper[4]) return;
        e[4] = left;
        Dim2Counts a{};
        for (std::size_t j = 0; j < 5; ++j) a[j] = upper[j] - e[j];
        cert.candidates.push_back(a);
        return;
      }
      for (std::int64_t x = 0; x <= std::min(left, upper[i]); ++x) {
        e[i] = x;
        self(self, i + 1, left - x);
      }
    };
    recurse(recurse, 0, slack);
  }
  cert.all_singular = true;
  for (const auto& a : cert.candidates) {
    const F4 value = det(dim2_gram(a));
    cert.determinants.push_back(value);
    if (!value.is_zero()) cert.all_singular = false;
  }
  return cert;
}

}  // namespace gf4lcd
