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

#ifndef GF4LCD_QUANTUM_HPP
#define GF4LCD_QUANTUM_HPP

#include <cstdint>
#include <string>

#include "gf4lcd/code.hpp"

namespace gf4lcd {

/// Parameters [[n,k,d;c]] of an entanglement-assisted quantum code.
struct EAQECCParams {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::int64_t d = 0;
  std::int64_t c = 0;

  bool maximal_entanglement() const { return c == n - k; }
  std::string to_string() const;
  friend bool operator==(const EAQECCParams&, const EAQECCParams&) = default;
};

/// [[n, k, d; n-k]] from a Hermitian LCD [n,k,d] code. Throws InvalidInput
/// for a code that is not Hermitian LCD.
EAQECCParams to_maximal_entanglement(const LinearCode& code);

/// floor(3n 4^k / (4(4^k - 1))), the largest d the bound allows.
std::int64_t lbw_bound(std::int64_t n, int k);

}  // namespace gf4lcd

#endif  // GF4LCD_QUANTUM_HPP
