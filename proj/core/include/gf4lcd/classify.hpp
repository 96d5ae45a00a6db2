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

#ifndef GF4LCD_CLASSIFY_HPP
#define GF4LCD_CLASSIFY_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gf4lcd/code.hpp"
#include "gf4lcd/geometry.hpp"

namespace gf4lcd {

enum class ClassificationMethod {
  kOrbit,    // orderly generation over multiplicity vectors
  kShorten,  // inverse shortening from the dimension-2 classes (k = 3 only)
};

std::string to_string(ClassificationMethod method);
ClassificationMethod parse_method(const std::string& text);

struct ClassificationQuery {
  std::int64_t n = 0;
  int k = 3;
  std::int64_t d = 0;  // exact minimum weight
  /// When true only codes without zero columns are classified. The default
  /// classifies all [n,k,d] codes, a code with z zero columns being a
  /// full-support [n-z,k,d] code padded with zeros.
  bool require_full_support = false;
  ClassificationMethod method = ClassificationMethod::kOrbit;
  Equivalence equivalence = Equivalence::kMonomial;
  int jobs = 1;
  /// Search-node budget; nullopt means default_budget().
  std::optional<std::uint64_t> budget;
};

struct CodeClass {
  MultiplicityVector representative;  // canonical, full support on n - zero_columns positions
  int zero_columns = 0;
  WeightEnumerator enumerator;
  bool lcd = false;

  /// Generator G_k(m) followed by the zero columns.
  LinearCode code() const;
  friend bool operator==(const CodeClass&, const CodeClass&) = default;
};

struct ClassificationResult {
  ClassificationQuery query;
  std::vector<CodeClass> classes;  // sorted by (zero_columns, representative descending)
  double elapsed_seconds = 0.0;
  std::uint64_t nodes = 0;
};

/// Exactly one representative per equivalence class of [n,k,d] codes.
/// Throws InvalidInput for d > alpha4(n,k) or k outside {2,3}, and
/// BudgetExceeded when the search grows past the budget.
ClassificationResult classify(const ClassificationQuery& query);

/// The k = 2 path of classify().
ClassificationResult classify_dim2(const ClassificationQuery& query);

/// Canonical full-support multiplicity vectors of length query.n and
/// minimum weight exactly query.d (zero columns and method are ignored).
/// `nodes`, if given, receives the number of search nodes visited.
std::vector<MultiplicityVector> enumerate_candidates_orbit(const ClassificationQuery& query,
                                                           std::uint64_t* nodes = nullptr);

/// A generator (I_3 | M) built over a dimension-2 code in normal form.
/// `blocks` gives the block sizes a_1..a_6; the columns of M are the a_1
/// zero columns, the a_2 columns (0,1), then (1,0), (1,1), (1,w), (1,w^2),
/// each block carrying a sorted third row.
struct ShorteningCandidate {
  std::array<int, 6> blocks{};
  F4Matrix generator;
};

/// Streams every (I_3 | M) candidate of minimum weight exactly d over all
/// classes of [n-1,2,d'] codes with d <= d' <= alpha4(n-1,2). Every class of
/// [n,3,d] codes has a member in the stream. Requires d >= 2.
void inverse_shortening_generate(std::int64_t n, std::int64_t d,
                                 const std::function<void(const ShorteningCandidate&)>& visit,
                                 std::optional<std::uint64_t> budget = std::nullopt);

std::size_t count_lcd(const ClassificationResult& result);

/// GF4LCD_BUDGET if set to a positive integer, otherwise 10^9.
std::uint64_t default_budget();

/// Number of m in the per-point box with sum n (saturating), before any
/// line or symmetry pruning.
std::uint64_t estimate_raw_candidates(std::int64_t n, int k, std::int64_t d);

/// Integer per-point range [lower, upper] used by the search.
std::pair<int, int> multiplicity_box(std::int64_t n, int k, std::int64_t d);

}  // namespace gf4lcd

#endif  // GF4LCD_CLASSIFY_HPP
