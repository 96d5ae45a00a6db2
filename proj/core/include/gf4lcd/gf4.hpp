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

#ifndef GF4LCD_GF4_HPP
#define GF4LCD_GF4_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>

namespace gf4lcd {

/// An element of GF(4) = {0, 1, w, w^2} with w^2 = w + 1.
///
/// Stored as two bits: bit 0 is the coefficient of 1 and bit 1 the
/// coefficient of w, so 0 -> 0b00, 1 -> 0b01, w -> 0b10, w^2 -> 0b11.
/// With this encoding addition is XOR and the numeric order of the codes
/// is the order 0 < 1 < w < w^2 used when sorting columns.
class F4 {
 public:
  constexpr F4() = default;

  static constexpr F4 from_bits(std::uint8_t bits) { return F4(static_cast<std::uint8_t>(bits & 3u)); }

  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool is_zero() const { return bits_ == 0; }

  friend constexpr F4 operator+(F4 x, F4 y) { return F4(static_cast<std::uint8_t>(x.bits_ ^ y.bits_)); }
  // Characteristic 2: subtraction is addition.
  friend constexpr F4 operator-(F4 x, F4 y) { return x + y; }
  friend constexpr F4 operator*(F4 x, F4 y) { return F4(kMulTable[x.bits_ * 4 + y.bits_]); }

  F4& operator+=(F4 y) { return *this = *this + y; }
  F4& operator*=(F4 y) { return *this = *this * y; }

  friend constexpr bool operator==(F4, F4) = default;
  friend constexpr auto operator<=>(F4 x, F4 y) { return x.bits_ <=> y.bits_; }

  /// Frobenius square x -> x^2; fixes 0 and 1, swaps w and w^2.
  constexpr F4 conj() const { return F4(kConjTable[bits_]); }

  /// Multiplicative inverse. Zero has none; it maps to zero.
  constexpr F4 inverse() const { return F4(kInvTable[bits_]); }

  /// Wire alphabet: '0', '1', 'w', 'W' (W = w^2).
  constexpr char to_char() const { return kChars[bits_]; }
  static constexpr std::optional<F4> from_char(char c) {
    switch (c) {
      case '0': return F4(0);
      case '1': return F4(1);
      case 'w': return F4(2);
      case 'W': return F4(3);
      default: return std::nullopt;
    }
  }

 private:
  constexpr explicit F4(std::uint8_t bits) : bits_(bits) {}

  // Nonzero codes 1, 2, 3 are w^0, w^1, w^2.
  static constexpr std::array<std::uint8_t, 16> kMulTable = {
      0, 0, 0, 0,  //
      0, 1, 2, 3,  //
      0, 2, 3, 1,  //
      0, 3, 1, 2,
  };
  static constexpr std::array<std::uint8_t, 4> kConjTable = {0, 1, 3, 2};
  static constexpr std::array<std::uint8_t, 4> kInvTable = {0, 1, 3, 2};
  static constexpr std::array<char, 4> kChars = {'0', '1', 'w', 'W'};

  std::uint8_t bits_ = 0;
};

inline constexpr F4 kZero = F4::from_bits(0);
inline constexpr F4 kOne = F4::from_bits(1);
inline constexpr F4 kOmega = F4::from_bits(2);
inline constexpr F4 kOmega2 = F4::from_bits(3);

/// All four field elements in the order 0 < 1 < w < w^2.
inline constexpr std::array<F4, 4> kElements = {kZero, kOne, kOmega, kOmega2};
inline constexpr std::array<F4, 3> kUnits = {kOne, kOmega, kOmega2};

constexpr F4 add(F4 x, F4 y) { return x + y; }
constexpr F4 mul(F4 x, F4 y) { return x * y; }
constexpr F4 conj(F4 x) { return x.conj(); }

/// Reduces an integer multiple n*x into the field (characteristic 2).
constexpr F4 times(long long n, F4 x) { return (n % 2 != 0) ? x : kZero; }

inline std::ostream& operator<<(std::ostream& os, F4 x) { return os << x.to_char(); }

}  // namespace gf4lcd

#endif  // GF4LCD_GF4_HPP
