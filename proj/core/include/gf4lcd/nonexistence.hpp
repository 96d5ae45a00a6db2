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

#ifndef GF4LCD_NONEXISTENCE_HPP
#define GF4LCD_NONEXISTENCE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "gf4lcd/code.hpp"
#include "gf4lcd/geometry.hpp"
#include "gf4lcd/matrix.hpp"

namespace gf4lcd {

using Rational = boost::rational<std::int64_t>;

/// Closed interval with exact rational endpoints.
struct RationalInterval {
  Rational lower;
  Rational upper;

  /// ceil(lower) clamped at zero.
  std::int64_t integer_lower() const;
  /// floor(upper).
  std::int64_t integer_upper() const;
};

/// Counting bound for weights m on the points of a 2-(v,k,lambda) design
/// whose every block carries weight at least alpha:
///   (r*alpha - lambda*sum m)/(r - lambda) <= m_i <= sum m - (b - r)/(r - lambda) * alpha.
RationalInterval design_count_bounds(const DesignIncidence& design, std::span<const std::int64_t> m,
                                     std::int64_t alpha);

/// The same bound specialised to the simplex design of PG(k-1,4), k >= 3:
///   4 alpha - 3n <= m_i <= n - (4^{k-1} - 1)/(3 * 4^{k-2}) * alpha.
RationalInterval multiplicity_bounds(std::int64_t n, int k, std::int64_t alpha);

/// True when n is a multiple of (4^k - 1)/3 (k >= 3): then no Hermitian LCD
/// [n, k, alpha4(n,k)] code exists, because the multiplicity bounds force
/// m = s * 1 and the code is s copies of the self-orthogonal simplex code.
bool divisibility_obstruction(std::int64_t n, int k);

struct CodeParameters {
  std::int64_t n;
  int k;
  std::int64_t d;
  friend bool operator==(const CodeParameters&, const CodeParameters&) = default;
};

enum class ReductionVerdict {
  kNotApplicable,      // 4 alpha - 3n < 1
  kNonexistentByRank,  // 4 r4 < k
  kReduced,            // reduces to [4 r4, k, 3 r4]
};

struct ReductionOutcome {
  ReductionVerdict verdict;
  std::optional<CodeParameters> reduced;
};

/// Strips the (4 alpha - 3n) forced simplex copies from a hypothetical
/// Hermitian LCD [n,k,alpha] code with Hermitian dual distance >= 2.
/// Does not recurse.
ReductionOutcome simplex_reduction(std::int64_t n, int k, std::int64_t alpha);

/// If every LCD [n-1,k] code has minimum weight at most d-1, an LCD
/// [n,k,d] code cannot have a zero column.
bool dual_distance_forced(std::int64_t n, int k, std::int64_t d, std::int64_t bound_on_shorter);

/// Counts a = (a1..a5) of the two-row family (I_2 | M(a)), where M(a) has
/// a1 columns (0,1), a2 columns (1,0), a3 columns (1,1), a4 columns (1,w)
/// and a5 columns (1,w^2).
using Dim2Counts = std::array<std::int64_t, 5>;

/// G(a) conj(G(a))^T with integer counts reduced into GF(4).
F4Matrix dim2_gram(const Dim2Counts& a);

/// Closed-form weight enumerator of the family code C(a).
WeightEnumerator dim2_weight_enumerator_formula(const Dim2Counts& a);

/// The determinant of G(a) conj(G(a))^T as an integer polynomial in a:
/// integer_part + (w + w^2) * omega_part. Since w + w^2 = 1 the field value
/// is (integer_part + omega_part) mod 2.
struct IntegerDeterminant {
  std::int64_t integer_part;
  std::int64_t omega_part;
  F4 reduce() const { return ((integer_part + omega_part) % 2 != 0) ? kOne : kZero; }
};
IntegerDeterminant dim2_determinant_formula(const Dim2Counts& a);

/// Quadratic c0 + c1 s + c2 s^2 with integer coefficients.
struct Quadratic {
  std::array<std::int64_t, 3> c{};
  std::int64_t operator()(std::int64_t s) const { return c[0] + c[1] * s + c[2] * s * s; }
  friend Quadratic operator+(const Quadratic& x, const Quadratic& y) {
    return {{x.c[0] + y.c[0], x.c[1] + y.c[1], x.c[2] + y.c[2]}};
  }
};

/// A one-parameter family a_i = s + offset_i with its determinant written as
/// integer_part(s) + (w + w^2) omega_part(s).
struct Dim2Family {
  std::string name;
  std::array<std::int64_t, 5> offsets;
  Quadratic integer_part;
  Quadratic omega_part;

  Dim2Counts at(std::int64_t s) const;
  /// Every coefficient of integer_part + omega_part is even.
  bool vanishes_mod2() const;
};

/// Unique candidate for n = 5s: a = (s-1, s-1, s, s, s).
const Dim2Family& dim2_multiple_of_five_family();
/// The five candidates C1..C5 for n = 5s + 4.
const std::array<Dim2Family, 5>& dim2_five_s_plus_four_families();

struct Dim2Certificate {
  std::int64_t n;
  std::int64_t target_d;  // floor(4n/5)
  bool zero_column_excluded;
  std::vector<Dim2Counts> candidates;
  std::vector<F4> determinants;
  bool all_singular;
};

/// For n = 0, 4 (mod 5), n >= 4: enumerates every a with 2 + sum a = n and
/// min weight >= floor(4n/5) and confirms each Gram matrix is singular.
Dim2Certificate dim2_case_analysis(std::int64_t n);

}  // namespace gf4lcd

#endif  // GF4LCD_NONEXISTENCE_HPP
