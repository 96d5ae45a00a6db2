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

#ifndef GF4LCD_CONSTRUCTIONS_HPP
#define GF4LCD_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gf4lcd/code.hpp"
#include "gf4lcd/geometry.hpp"
#include "gf4lcd/nonexistence.hpp"

namespace gf4lcd {

/// A code from the embedded database together with the properties it is
/// expected to have.
struct NamedCode {
  std::string name;
  LinearCode code;
  WeightEnumerator expected_enumerator;
  bool expected_lcd = false;
};

struct NamedCodeCheck {
  WeightEnumerator enumerator;
  bool lcd = false;
  std::size_t min_weight = 0;
  bool enumerator_matches = false;
  bool lcd_matches = false;

  bool ok() const { return enumerator_matches && lcd_matches; }
};

/// Recomputes the enumerator and LCD status of `named`.
NamedCodeCheck verify(const NamedCode& named);

/// The Hermitian LCD [26,3,19] code.
NamedCode c26();

/// One of the codes C36_1 .. C64_15, built as (I_3 | M). Throws
/// InvalidInput for an unknown name.
NamedCode table_code(const std::string& name);
std::vector<std::string> table_code_names();

/// "C26" followed by every table code.
std::vector<std::string> named_code_names();
NamedCode named_code(const std::string& name);

/// Column v_j (1-based) of the table codes' M blocks.
std::vector<F4> table_vector(int j);

/// (G | S_3 | ... | S_3) with s simplex blocks. Requires k = 3 and a
/// Hermitian LCD input.
LinearCode extend_with_simplex(const LinearCode& code, std::size_t copies);

/// The family code C(a) with generator (I_2 | M(a)); see Dim2Counts.
LinearCode dim2_family(const Dim2Counts& a);

struct SearchOptions {
  std::uint64_t budget = 20000;  // random-walk steps
  std::uint64_t seed = 1;
};

/// Looks for a Hermitian LCD [n,k,>=d] code (k in {2,3}): simplex
/// extensions and zero padding of database LCD codes first, then a random
/// walk over multiplicity vectors. Returns nothing if the budget runs out;
/// that is not evidence of nonexistence.
std::optional<LinearCode> lcd_existence_search(std::int64_t n, int k, std::int64_t d,
                                               const SearchOptions& options = {});

}  // namespace gf4lcd

#endif  // GF4LCD_CONSTRUCTIONS_HPP
