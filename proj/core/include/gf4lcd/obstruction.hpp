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

#ifndef GF4LCD_OBSTRUCTION_HPP
#define GF4LCD_OBSTRUCTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gf4lcd/nonexistence.hpp"

namespace gf4lcd {

enum class StepOutcome {
  kNotApplicable,
  kInconclusive,
  kFullSupportExcluded,  // no such LCD code without zero columns
  kZeroColumnExcluded,   // no such LCD code with a zero column
  kNonexistent,          // no such LCD code at all
  kLcdExists,            // a witness was found
};

std::string to_string(StepOutcome outcome);

struct ObstructionStep {
  std::string rule;
  StepOutcome outcome = StepOutcome::kNotApplicable;
  std::string detail;
};

/// Outcome of the nonexistence rules applied to one (n, k, d), where d is
/// the exact minimum weight.
struct NonexistenceReport {
  CodeParameters query{};
  std::vector<ObstructionStep> steps;
  bool established = false;
  /// Facts the chain would need but did not prove, e.g. a value of d4 at
  /// length n - 1.
  std::vector<std::string> open_dependencies;
};

struct ObstructionOptions {
  bool use_classifier = true;
  std::uint64_t classifier_budget = 50'000'000;
  int bridge_depth = 2;  // recursion depth for the zero-column bridge
};

/// Runs, in order: the Griesmer bound, the simplex divisibility obstruction,
/// the simplex reduction discharged by the classifier, the dimension-2 case
/// analysis, a direct classification for small instances, and the
/// zero-column bridge. Nonexistence is established only when both the
/// full-support and the zero-column cases are excluded, or a single rule
/// excludes everything.
NonexistenceReport obstruction_chain(std::int64_t n, int k, std::int64_t d, const ObstructionOptions& options = {});

}  // namespace gf4lcd

#endif  // GF4LCD_OBSTRUCTION_HPP
