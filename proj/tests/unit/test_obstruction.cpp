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

#include <gtest/gtest.h>

#include "gf4lcd/errors.hpp"
#include "gf4lcd/obstruction.hpp"

using namespace gf4lcd;

namespace {

bool has_step(const NonexistenceReport& r, const std::string& rule, StepOutcome outcome) {
  return std::any_of(r.steps.begin(), r.steps.end(),
                     [&](const ObstructionStep& s) { return s.rule == rule && s.outcome == outcome; });
}

}  // namespace

TEST(Obstruction, GriesmerExcludes) {
  const auto r = obstruction_chain(26, 3, 20);
  EXPECT_TRUE(r.established);
  EXPECT_TRUE(has_step(r, "griesmer", StepOutcome::kNonexistent));
}

TEST(Obstruction, DivisibilityAtMultiplesOf21) {
  for (std::int64_t s = 1; s <= 10; ++s) {
    const auto r = obstruction_chain(21 * s, 3, 16 * s, {.use_classifier = false});
    EXPECT_TRUE(r.established);
    EXPECT_TRUE(has_step(r, "simplex-divisibility", StepOutcome::kNonexistent));
  }
}

TEST(Obstruction, ReductionWithGriesmerBridge) {
  const auto r = obstruction_chain(85, 3, 64);
  EXPECT_TRUE(r.established);
  EXPECT_TRUE(has_step(r, "simplex-reduction", StepOutcome::kFullSupportExcluded));
  EXPECT_TRUE(has_step(r, "zero-column-bridge", StepOutcome::kZeroColumnExcluded));
  EXPECT_TRUE(r.open_dependencies.empty());
}

TEST(Obstruction, ReductionToLength16) {
  // [37,3,28] reduces to [16,3,12], whose single class is not LCD.
  const auto r = obstruction_chain(37, 3, 28);
  EXPECT_TRUE(has_step(r, "simplex-reduction", StepOutcome::kFullSupportExcluded));
  EXPECT_TRUE(has_step(r, "zero-column-bridge", StepOutcome::kZeroColumnExcluded));
  EXPECT_TRUE(r.established);
  EXPECT_FALSE(obstruction_chain(37, 3, 28, {.use_classifier = false}).established);
}

TEST(Obstruction, WithoutClassifierTheDependencyStaysOpen) {
  const auto r = obstruction_chain(85, 3, 64, {.use_classifier = false});
  EXPECT_FALSE(r.established);
  EXPECT_FALSE(r.open_dependencies.empty());
}

TEST(Obstruction, Dimension2CaseAnalysis) {
  for (std::int64_t n : {9, 10, 14, 15, 99, 100}) {
    const auto r = obstruction_chain(n, 2, 4 * n / 5, {.use_classifier = false});
    EXPECT_TRUE(r.established) << n;
    EXPECT_TRUE(has_step(r, "dim2-case-analysis", StepOutcome::kFullSupportExcluded)) << n;
  }
}

TEST(Obstruction, ExistingCodeIsReportedAsSuch) {
  const auto r = obstruction_chain(26, 3, 19);
  EXPECT_FALSE(r.established);
  EXPECT_TRUE(has_step(r, "classification", StepOutcome::kLcdExists));
}

TEST(Obstruction, RejectsBadInput) {
  EXPECT_THROW(obstruction_chain(2, 3, 1), InvalidInput);
  EXPECT_THROW(obstruction_chain(10, 0, 1), InvalidInput);
  EXPECT_THROW(obstruction_chain(10, 3, 0), InvalidInput);
}
