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

#include "gf4lcd/packed.hpp"

namespace gf4lcd {

PackedVector::PackedVector(std::span<const F4> v) : PackedVector(v.size()) {
  for (std::size_t i = 0; i < v.size(); ++i) set(i, v[i]);
}

void PackedVector::set(std::size_t i, F4 x) {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  auto& lo = lo_[i / 64];
  auto& hi = hi_[i / 64];
  lo = (x.bits() & 1u) ? (lo | mask) : (lo & ~mask);
  hi = (x.bits() & 2u) ? (hi | mask) : (hi & ~mask);
}

PackedVector PackedVector::scaled(F4 c) const {
  PackedVector out(n_);
  switch (c.bits()) {
    case 0:
      break;
    case 1:
      out = *this;
      break;
    case 2:
      for (std::size_t i = 0; i < lo_.size(); ++i) {
        out.lo_[i] = hi_[i];
        out.hi_[i] = lo_[i] ^ hi_[i];
      }
      break;
    default:
      for (std::size_t i = 0; i < lo_.size(); ++i) {
        out.lo_[i] = lo_[i] ^ hi_[i];
        out.hi_[i] = lo_[i];
      }
      break;
  }
  return out;
}

std::vector<F4> PackedVector::unpack() const {
  std::vector<F4> v(n_);
  for (std::size_t i = 0; i < n_; ++i) v[i] = get(i);
  return v;
}

}  // namespace gf4lcd
