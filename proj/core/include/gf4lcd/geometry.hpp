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

#ifndef GF4LCD_GEOMETRY_HPP
#define GF4LCD_GEOMETRY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gf4lcd/code.hpp"
#include "gf4lcd/matrix.hpp"

namespace gf4lcd {

/// Number of points of PG(k-1, 4), i.e. (4^k - 1) / 3.
constexpr int point_count(int k) {
  int p = 1;
  for (int i = 0; i < k; ++i) p *= 4;
  return (p - 1) / 3;
}

/// The k x (4^k-1)/3 simplex generator S_k, built by the recursion
/// S_k = (S_{k-1} 0 S_{k-1} S_{k-1} S_{k-1} ; 0 1 1..1 w..w w^2..w^2).
/// Supports 1 <= k <= 3.
F4Matrix simplex_matrix(int k);

/// Projective points of PG(k-1,4) in the column order of S_k. Every point
/// is stored with its first nonzero coordinate equal to 1.
class PointBasis {
 public:
  explicit PointBasis(int k);

  int dimension() const { return k_; }
  int size() const { return static_cast<int>(points_.size()); }
  std::span<const F4> point(int i) const { return points_[static_cast<std::size_t>(i)]; }

  /// Index of the point proportional to v, or nullopt for v = 0.
  std::optional<int> index_of(std::span<const F4> v) const;

  /// hyperplane(x) = indices of points h with x . h = 0, where x is read as
  /// the linear functional with the coordinates of point x.
  const std::vector<int>& hyperplane(int x) const { return hyperplanes_[static_cast<std::size_t>(x)]; }
  /// Indices of the hyperplanes that contain point i.
  const std::vector<int>& hyperplanes_through(int i) const { return through_[static_cast<std::size_t>(i)]; }

 private:
  int k_;
  std::vector<std::vector<F4>> points_;
  std::vector<int> lookup_;  // packed vector code -> point index, -1 for zero
  std::vector<std::vector<int>> hyperplanes_;
  std::vector<std::vector<int>> through_;
};

/// Shared, lazily built basis for 1 <= k <= 3.
const PointBasis& point_basis(int k);

/// Nonnegative column counts on the points of PG(k-1,4), in basis order.
/// The represented code G_k(m) repeats point i exactly m[i] times.
struct MultiplicityVector {
  int k = 3;
  std::vector<int> m;

  int length() const;

  /// "k=3;2,2,1,..." in pinned point order.
  std::string serialize() const;
  static MultiplicityVector parse(const std::string& text);

  friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;
  friend auto operator<=>(const MultiplicityVector&, const MultiplicityVector&) = default;
};

/// The code with generator G_k(m). Throws if the points used do not span.
LinearCode expand(const MultiplicityVector& m);

/// Counts each generator column's projective class. Requires k in {1,2,3}
/// and no zero column.
MultiplicityVector multiplicities(const LinearCode& code);

/// Weight of x * G_k(m): n minus the mass on the hyperplane orthogonal to x.
int codeword_weight_from_multiplicities(const MultiplicityVector& m, std::span<const F4> x);

/// Hyperplane sums indexed by the functional's point index; the codeword of
/// functional x has weight n - sums[x].
std::vector<int> hyperplane_sums(const MultiplicityVector& m);

/// Minimum weight through the (4^k-1)/3 projective messages.
int min_weight_from_multiplicities(const MultiplicityVector& m);

/// Weight enumerator through the projective messages (each class counted 3 times).
WeightEnumerator weight_enumerator_from_multiplicities(const MultiplicityVector& m);

/// Which transformations count as code equivalences.
enum class Equivalence {
  kMonomial,    // GL(k,4) on points: C' = {xP} with P monomial
  kSemilinear,  // additionally the Frobenius x -> x^2 on coordinates
};

/// The permutations of the point basis induced by GL(k,4) (optionally with
/// Frobenius), each stored as an image array: perm[i] = image of point i.
/// Elements are grouped in buckets keyed by (perm[0], perm[1]).
class PointGroup {
 public:
  PointGroup(int k, Equivalence eq);

  int dimension() const { return k_; }
  int degree() const { return degree_; }
  std::size_t size() const { return perms_.size() / static_cast<std::size_t>(degree_); }
  std::span<const std::uint8_t> perm(std::size_t g) const {
    return {perms_.data() + g * static_cast<std::size_t>(degree_), static_cast<std::size_t>(degree_)};
  }

  /// Indices of the elements with perm[0] == a and perm[1] == b.
  std::pair<std::size_t, std::size_t> bucket(int a, int b) const {
    const auto key = static_cast<std::size_t>(a * degree_ + b);
    return {bucket_start_[key], bucket_start_[key + 1]};
  }

 private:
  int k_;
  int degree_;
  std::vector<std::uint8_t> perms_;
  std::vector<std::size_t> bucket_start_;
};

/// Shared group for k in {2,3}; sizes 60 / 60480 (monomial), 120 / 120960
/// (semilinear).
const PointGroup& pgl_point_action(int k, Equivalence eq = Equivalence::kMonomial);

/// Image of m under a group element given as an image array: the mass of
/// point i moves to point perm[i].
MultiplicityVector apply_permutation(const MultiplicityVector& m, std::span<const std::uint8_t> perm);

/// Lexicographically greatest image of m under the point action.
MultiplicityVector canonical_form(const MultiplicityVector& m, Equivalence eq = Equivalence::kMonomial);

/// True iff m equals its own canonical form; exits on the first witness.
bool is_canonical(const MultiplicityVector& m, Equivalence eq = Equivalence::kMonomial);

/// A block design given by its b x v incidence matrix.
struct DesignIncidence {
  int v = 0;
  int b = 0;
  int r = 0;
  int block_size = 0;
  int lambda = 0;
  std::vector<std::vector<std::uint8_t>> incidence;  // b rows, v columns
};

/// Supports of the projective weight-4^{k-1} codewords of the simplex code.
/// Only k = 3 is supported: a symmetric 2-(21,16,12) design.
DesignIncidence simplex_design(int k);

/// Parameters (v, b, r, block size, lambda) recovered from an incidence
/// matrix by counting, or nullopt if it is not a 2-design.
std::optional<DesignIncidence> design_parameters(const std::vector<std::vector<std::uint8_t>>& incidence);

}  // namespace gf4lcd

#endif  // GF4LCD_GEOMETRY_HPP
