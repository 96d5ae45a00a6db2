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

#ifndef GF4LCD_PACKED_HPP
#define GF4LCD_PACKED_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gf4lcd/gf4.hpp"

namespace gf4lcd {

/// A vector over GF(4) stored as two bit planes. Plane `lo` holds the
/// coefficient of 1 and plane `hi` the coefficient of w for every position,
/// so vector addition is two word-wide XORs and the weight is the popcount
/// of (lo | hi).
class PackedVector {
 public:
  PackedVector() = default;
  explicit PackedVector(std::size_t n) : n_(n), lo_(words(n)), hi_(words(n)) {}
  explicit PackedVector(std::span<const F4> v);

  std::size_t size() const { return n_; }

  F4 get(std::size_t i) const {
    const auto bit = (i % 64);
    const auto lo = (lo_[i / 64] >> bit) & 1u;
    const auto hi = (hi_[i / 64] >> bit) & 1u;
    return F4::from_bits(static_cast<std::uint8_t>(lo | (hi << 1)));
  }
  void set(std::size_t i, F4 x);

  std::size_t weight() const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < lo_.size(); ++i) w += static_cast<std::size_t>(std::popcount(lo_[i] | hi_[i]));
    return w;
  }

  PackedVector& operator+=(const PackedVector& o) {
    for (std::size_t i = 0; i < lo_.size(); ++i) {
      lo_[i] ^= o.lo_[i];
      hi_[i] ^= o.hi_[i];
    }
    return *this;
  }

  /// Scalar multiple. With x = lo + hi*w:  w*x = hi + (lo^hi)*w and
  /// w^2*x = (lo^hi) + lo*w.
  PackedVector scaled(F4 c) const;

  /// Writes this + other into `out` (sizes must agree).
  static void add_into(const PackedVector& a, const PackedVector& b, PackedVector& out) {
    for (std::size_t i = 0; i < a.lo_.size(); ++i) {
      out.lo_[i] = a.lo_[i] ^ b.lo_[i];
      out.hi_[i] = a.hi_[i] ^ b.hi_[i];
    }
  }

  std::vector<F4> unpack() const;

  friend bool operator==(const PackedVector&, const PackedVector&) = default;

 private:
  static std::size_t words(std::size_t n) { return (n + 63) / 64; }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> lo_;
  std::vector<std::uint64_t> hi_;
};

}  // namespace gf4lcd

#endif  // GF4LCD_PACKED_HPP
