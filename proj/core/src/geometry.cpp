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

#include "gf4lcd/geometry.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>
#include <sstream>

#include "gf4lcd/errors.hpp"

namespace gf4lcd {

namespace {

int vector_code(std::span<const F4> v) {
  int code = 0;
  for (F4 x : v) code = code * 4 + x.bits();
  return code;
}

void require_dimension(int k, int lo, int hi, const char* what) {
  if (k < lo || k > hi)
    throw InvalidInput(std::string(what) + ": dimension " + std::to_string(k) + " outside [" + std::to_string(lo) +
                       "," + std::to_string(hi) + "]");
}

}  // namespace

F4Matrix simplex_matrix(int k) {
  require_dimension(k, 1, 3, "simplex_matrix");
  F4Matrix s = F4Matrix::from_rows({"1"});
  for (int level = 2; level <= k; ++level) {
    const std::size_t w = s.cols();
    F4Matrix next(static_cast<std::size_t>(level), 4 * w + 1);
    const std::array<F4, 3> tails = {kOne, kOmega, kOmega2};
    for (std::size_t i = 0; i + 1 < next.rows(); ++i) {
      for (std::size_t j = 0; j < w; ++j) {
        next(i, j) = s(i, j);
        for (std::size_t b = 0; b < 3; ++b) next(i, w + 1 + b * w + j) = s(i, j);
      }
    }
    const std::size_t last = next.rows() - 1;
    next(last, w) = kOne;
    for (std::size_t b = 0; b < 3; ++b)
      for (std::size_t j = 0; j < w; ++j) next(last, w + 1 + b * w + j) = tails[b];
    s = std::move(next);
  }
  return s;
}

PointBasis::PointBasis(int k) : k_(k) {
  require_dimension(k, 1, 3, "point_basis");
  const F4Matrix s = simplex_matrix(k);
  int size = 1;
  for (int i = 0; i < k; ++i) size *= 4;
  lookup_.assign(static_cast<std::size_t>(size), -1);
  for (std::size_t j = 0; j < s.cols(); ++j) points_.push_back(s.column(j));
  for (int i = 0; i < this->size(); ++i) {
    for (F4 c : kUnits) {
      std::vector<F4> v = points_[static_cast<std::size_t>(i)];
      for (auto& x : v) x *= c;
      lookup_[static_cast<std::size_t>(vector_code(v))] = i;
    }
  }
  hyperplanes_.resize(points_.size());
  through_.resize(points_.size());
  for (int x = 0; x < this->size(); ++x)
    for (int h = 0; h < this->size(); ++h)
      if (euclidean_product(point(x), point(h)).is_zero()) {
        hyperplanes_[static_cast<std::size_t>(x)].push_back(h);
        through_[static_cast<std::size_t>(h)].push_back(x);
      }
}

std::optional<int> PointBasis::index_of(std::span<const F4> v) const {
  if (static_cast<int>(v.size()) != k_) throw InvalidInput("point_basis: vector has wrong length");
  const int idx = lookup_[static_cast<std::size_t>(vector_code(v))];
  if (idx < 0) return std::nullopt;
  return idx;
}

const PointBasis& point_basis(int k) {
  require_dimension(k, 1, 3, "point_basis");
  static const std::array<PointBasis, 3> bases = {PointBasis(1), PointBasis(2), PointBasis(3)};
  return bases[static_cast<std::size_t>(k - 1)];
}

int MultiplicityVector::length() const { return std::accumulate(m.begin(), m.end(), 0); }

std::string MultiplicityVector::serialize() const {
  std::ostringstream os;
  os << "k=" << k << ';';
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  return os.str();
}

MultiplicityVector MultiplicityVector::parse(const std::string& text) {
  if (text.size() < 4 || text.compare(0, 2, "k=") != 0 || text[3] != ';')
    throw InvalidInput("multiplicity vector must look like 'k=3;m1,m2,...'");
  MultiplicityVector out;
  out.k = text[2] - '0';
  require_dimension(out.k, 1, 3, "multiplicity vector");
  std::istringstream is(text.substr(4));
  std::string item;
  while (std::getline(is, item, ',')) {
    const int v = std::stoi(item);
    if (v < 0) throw InvalidInput("multiplicity entries must be nonnegative");
    out.m.push_back(v);
  }
  if (static_cast<int>(out.m.size()) != point_count(out.k))
    throw InvalidInput("multiplicity vector has " + std::to_string(out.m.size()) + " entries, expected " +
                       std::to_string(point_count(out.k)));
  return out;
}

LinearCode expand(const MultiplicityVector& mv) {
  const auto& basis = point_basis(mv.k);
  if (static_cast<int>(mv.m.size()) != basis.size()) throw InvalidInput("expand: wrong number of multiplicities");
  F4Matrix g(static_cast<std::size_t>(mv.k), static_cast<std::size_t>(mv.length()));
  std::size_t col = 0;
  for (int i = 0; i < basis.size(); ++i) {
    if (mv.m[static_cast<std::size_t>(i)] < 0) throw InvalidInput("expand: negative multiplicity");
    for (int c = 0; c < mv.m[static_cast<std::size_t>(i)]; ++c, ++col)
      for (int r = 0; r < mv.k; ++r) g(static_cast<std::size_t>(r), col) = basis.point(i)[static_cast<std::size_t>(r)];
  }
  if (rank(g) != g.rows()) throw InvalidInput("expand: points do not span; rank deficient");
  return LinearCode(std::move(g));
}

MultiplicityVector multiplicities(const LinearCode& code) {
  const int k = static_cast<int>(code.dimension());
  require_dimension(k, 1, 3, "multiplicities");
  const auto& basis = point_basis(k);
  MultiplicityVector mv{k, std::vector<int>(static_cast<std::size_t>(basis.size()), 0)};
  for (std::size_t j = 0; j < code.length(); ++j) {
    const auto col = code.generator().column(j);
    const auto idx = basis.index_of(col);
    if (!idx) throw InvalidInput("multiplicities: generator has a zero column");
    ++mv.m[static_cast<std::size_t>(*idx)];
  }
  return mv;
}

int codeword_weight_from_multiplicities(const MultiplicityVector& mv, std::span<const F4> x) {
  const auto& basis = point_basis(mv.k);
  const auto idx = basis.index_of(x);
  if (!idx) throw InvalidInput("codeword weight: message vector is zero");
  int on_hyperplane = 0;
  for (int h : basis.hyperplane(*idx)) on_hyperplane += mv.m[static_cast<std::size_t>(h)];
  return mv.length() - on_hyperplane;
}

std::vector<int> hyperplane_sums(const MultiplicityVector& mv) {
  const auto& basis = point_basis(mv.k);
  std::vector<int> sums(static_cast<std::size_t>(basis.size()), 0);
  for (int x = 0; x < basis.size(); ++x)
    for (int h : basis.hyperplane(x)) sums[static_cast<std::size_t>(x)] += mv.m[static_cast<std::size_t>(h)];
  return sums;
}

int min_weight_from_multiplicities(const MultiplicityVector& mv) {
  const auto sums = hyperplane_sums(mv);
  return mv.length() - *std::max_element(sums.begin(), sums.end());
}

WeightEnumerator weight_enumerator_from_multiplicities(const MultiplicityVector& mv) {
  const int n = mv.length();
  WeightEnumerator w(static_cast<std::size_t>(n));
  w.coefficients[0] = 1;
  for (int s : hyperplane_sums(mv)) w.coefficients[static_cast<std::size_t>(n - s)] += 3;
  return w;
}

PointGroup::PointGroup(int k, Equivalence eq) : k_(k) {
  require_dimension(k, 2, 3, "pgl_point_action");
  const auto& basis = point_basis(k);
  degree_ = basis.size();
  const auto d = static_cast<std::size_t>(degree_);
  const std::size_t entries = static_cast<std::size_t>(k * k);
  std::size_t matrices = 1;
  for (std::size_t i = 0; i < entries; ++i) matrices *= 4;

  std::vector<std::vector<std::uint8_t>> perms;
  F4Matrix a(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  std::vector<F4> image(static_cast<std::size_t>(k));
  const int frobenius_variants = eq == Equivalence::kSemilinear ? 2 : 1;
  for (std::size_t code = 0; code < matrices; ++code) {
    std::size_t c = code;
    for (std::size_t e = 0; e < entries; ++e, c /= 4) a(e / static_cast<std::size_t>(k), e % static_cast<std::size_t>(k)) = F4::from_bits(static_cast<std::uint8_t>(c % 4));
    if (det(a).is_zero()) continue;
    for (int f = 0; f < frobenius_variants; ++f) {
      std::vector<std::uint8_t> perm(d);
      for (int i = 0; i < degree_; ++i) {
        const auto p = basis.point(i);
        for (int r = 0; r < k; ++r) {
          F4 s;
          for (int t = 0; t < k; ++t) {
            const F4 coord = f ? p[static_cast<std::size_t>(t)].conj() : p[static_cast<std::size_t>(t)];
            s += a(static_cast<std::size_t>(r), static_cast<std::size_t>(t)) * coord;
          }
          image[static_cast<std::size_t>(r)] = s;
        }
        perm[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(*basis.index_of(image));
      }
      perms.push_back(std::move(perm));
    }
  }
  std::sort(perms.begin(), perms.end());
  perms.erase(std::unique(perms.begin(), perms.end()), perms.end());

  perms_.reserve(perms.size() * d);
  for (const auto& p : perms) perms_.insert(perms_.end(), p.begin(), p.end());

  // perms are sorted lexicographically, so each (perm[0], perm[1]) key is a
  // contiguous run.
  bucket_start_.assign(d * d + 1, 0);
  for (const auto& p : perms) ++bucket_start_[p[0] * d + p[1] + 1];
  std::partial_sum(bucket_start_.begin(), bucket_start_.end(), bucket_start_.begin());
}

const PointGroup& pgl_point_action(int k, Equivalence eq) {
  require_dimension(k, 2, 3, "pgl_point_action");
  static std::once_flag flags[2][2];
  static std::optional<PointGroup> groups[2][2];
  const int ki = k - 2;
  const int ei = eq == Equivalence::kSemilinear ? 1 : 0;
  std::call_once(flags[ki][ei], [&] { groups[ki][ei].emplace(k, eq); });
  return *groups[ki][ei];
}

MultiplicityVector apply_permutation(const MultiplicityVector& mv, std::span<const std::uint8_t> perm) {
  MultiplicityVector out{mv.k, std::vector<int>(mv.m.size(), 0)};
  for (std::size_t i = 0; i < mv.m.size(); ++i) out.m[perm[i]] = mv.m[i];
  return out;
}

namespace {

// Scans the group elements that can yield a lexicographically maximal
// image. Each stored array is read as a source map: image[j] = m[src[j]].
// The maximal image puts a largest entry first and a largest remaining
// entry second, and the group is 2-transitive, so only buckets
// (src[0], src[1]) = (a, b) with m[a] = max and m[b] = runner-up qualify.
// `on_image` returns false to stop the scan.
template <typename Visit>
void scan_candidates(const MultiplicityVector& mv, Equivalence eq, Visit&& on_image) {
  const auto& group = pgl_point_action(mv.k, eq);
  const auto& m = mv.m;
  const int d = group.degree();
  const int top = *std::max_element(m.begin(), m.end());
  int top_count = 0;
  int second = -1;
  for (int v : m) {
    if (v == top) ++top_count;
    else second = std::max(second, v);
  }
  const int runner_up = top_count >= 2 ? top : second;
  std::vector<int> image(static_cast<std::size_t>(d));
  for (int a = 0; a < d; ++a) {
    if (m[static_cast<std::size_t>(a)] != top) continue;
    for (int b = 0; b < d; ++b) {
      if (b == a || m[static_cast<std::size_t>(b)] != runner_up) continue;
      const auto [begin, end] = group.bucket(a, b);
      for (std::size_t g = begin; g < end; ++g) {
        const auto src = group.perm(g);
        if (!on_image(src)) return;
      }
    }
  }
}

}  // namespace

MultiplicityVector canonical_form(const MultiplicityVector& mv, Equivalence eq) {
  if (static_cast<int>(mv.m.size()) != point_count(mv.k)) throw InvalidInput("canonical_form: wrong vector size");
  std::vector<int> best;
  std::vector<int> image(mv.m.size());
  scan_candidates(mv, eq, [&](std::span<const std::uint8_t> src) {
    for (std::size_t j = 0; j < image.size(); ++j) image[j] = mv.m[src[j]];
    if (best.empty() || image > best) best = image;
    return true;
  });
  return {mv.k, std::move(best)};
}

bool is_canonical(const MultiplicityVector& mv, Equivalence eq) {
  const auto& m = mv.m;
  // Necessary: m[0] is a maximum and m[1] a maximum of the rest.
  if (*std::max_element(m.begin(), m.end()) != m[0]) return false;
  if (*std::max_element(m.begin() + 1, m.end()) != m[1]) return false;
  bool canonical = true;
  scan_candidates(mv, eq, [&](std::span<const std::uint8_t> src) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      const int v = m[src[j]];
      if (v > m[j]) {
        canonical = false;
        return false;
      }
      if (v < m[j]) break;
    }
    return true;
  });
  return canonical;
}

DesignIncidence simplex_design(int k) {
  if (k != 3) throw InvalidInput("simplex_design: only k = 3 is supported");
  const auto& basis = point_basis(k);
  std::vector<std::vector<std::uint8_t>> incidence(static_cast<std::size_t>(basis.size()),
                                                   std::vector<std::uint8_t>(static_cast<std::size_t>(basis.size()), 1));
  for (int x = 0; x < basis.size(); ++x)
    for (int h : basis.hyperplane(x)) incidence[static_cast<std::size_t>(x)][static_cast<std::size_t>(h)] = 0;
  auto design = design_parameters(incidence);
  if (!design) throw std::logic_error("simplex supports do not form a 2-design");
  return *design;
}

std::optional<DesignIncidence> design_parameters(const std::vector<std::vector<std::uint8_t>>& incidence) {
  if (incidence.empty() || incidence.front().empty()) return std::nullopt;
  DesignIncidence d;
  d.b = static_cast<int>(incidence.size());
  d.v = static_cast<int>(incidence.front().size());
  d.incidence = incidence;
  std::optional<int> block_size, replication, lambda;
  auto agree = [](std::optional<int>& slot, int value) {
    if (!slot) slot = value;
    return *slot == value;
  };
  for (const auto& row : incidence) {
    if (static_cast<int>(row.size()) != d.v) return std::nullopt;
    if (!agree(block_size, std::accumulate(row.begin(), row.end(), 0))) return std::nullopt;
  }
  for (int p = 0; p < d.v; ++p) {
    int r = 0;
    for (const auto& row : incidence) r += row[static_cast<std::size_t>(p)];
    if (!agree(replication, r)) return std::nullopt;
    for (int q = p + 1; q < d.v; ++q) {
      int l = 0;
      for (const auto& row : incidence) l += row[static_cast<std::size_t>(p)] & row[static_cast<std::size_t>(q)];
      if (!agree(lambda, l)) return std::nullopt;
    }
  }
  d.block_size = *block_size;
  d.r = *replication;
  d.lambda = lambda.value_or(0);
  return d;
}

}  // namespace gf4lcd
