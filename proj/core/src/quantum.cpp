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

#include "gf4lcd/quantum.hpp"

#include "gf4lcd/errors.hpp"

namespace gf4lcd {

std::string EAQECCParams::to_string() const {
  return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + ";" + std::to_string(c) + "]]";
}

EAQECCParams to_maximal_entanglement(const LinearCode& code) {
  if (!is_hermitian_lcd(code)) throw InvalidInput("to_maximal_entanglement: code is not Hermitian LCD");
  const auto n = static_cast<std::int64_t>(code.length());
  const auto k = static_cast<std::int64_t>(code.dimension());
  return {n, k, static_cast<std::int64_t>(min_weight(code)), n - k};
}

std::int64_t lbw_bound(std::int64_t n, int k) {
  if (k < 1 || k > 30) throw InvalidInput("lbw_bound: k must lie in 1..30");
  if (n < 0) throw InvalidInput("lbw_bound: n must be nonnegative");
  // floor(N q / (4(q-1))) with N = 3n = 4a + b, split to stay within 64 bits.
  const std::int64_t q = std::int64_t{1} << (2 * k);
  const std::int64_t big_n = 3 * n;
  const std::int64_t a = big_n / 4;
  const std::int64_t b = big_n % 4;
  return a + (b * (q - 1) + big_n) / (4 * (q - 1));
}

}  // namespace gf4lcd
