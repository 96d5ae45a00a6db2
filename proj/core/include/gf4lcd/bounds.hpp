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

#ifndef GF4LCD_BOUNDS_HPP
#define GF4LCD_BOUNDS_HPP

#include <cstdint>
#include <string>

namespace gf4lcd {

/// sum_{i<k} ceil(d / 4^i): the shortest length the Griesmer bound allows
/// for a quaternary [n,k,d] code.
std::int64_t griesmer_length(int k, std::int64_t d);

/// Largest d with griesmer_length(k, d) <= n.
std::int64_t alpha4(std::int64_t n, int k);

/// 4^{k-1} n - ((4^k - 1)/3) alpha. May be negative.
std::int64_t r4(std::int64_t n, int k, std::int64_t alpha);

/// Largest minimum weight of a Hermitian LCD [n,2] code (n >= 3):
/// floor(4n/5), minus one when n = 0, 4 (mod 5).
std::int64_t d4_dim2(std::int64_t n);

/// Largest minimum weight of a Hermitian LCD [n,3] code (n >= 6):
/// floor(16n/21) when n = 5, 9, 13, 17, 18 (mod 21), otherwise one less.
std::int64_t d4_dim3(std::int64_t n);

/// Where a d4(n,3) value comes from.
enum class D4Source {
  kExtendedC26,         // C26 plus simplex copies (21s+5)
  kMultipleOf21,        // simplex-divisibility obstruction (21s)
  kReductionSmall,      // reduction to lengths 16, 20, 32 (21s+11, 16, 20)
  kReductionClassified, // reduction to the classified lengths 36..64
  kPublishedTables,     // existence and bound from the published LCD tables
};

struct D4Row {
  std::int64_t value;
  D4Source source;
  std::string label;
};

/// Table row for n >= 6: the value written as 16s + c together with its
/// justification. Derived independently from the closed form in d4_dim3.
D4Row d4_dim3_table_row(std::int64_t n);

}  // namespace gf4lcd

#endif  // GF4LCD_BOUNDS_HPP
