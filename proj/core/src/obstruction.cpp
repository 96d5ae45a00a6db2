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

#include "gf4lcd/obstruction.hpp"

#include "gf4lcd/bounds.hpp"
#include "gf4lcd/classify.hpp"
#include "gf4lcd/errors.hpp"

namespace gf4lcd {

namespace {

std::string params(std::int64_t n, int k, std::int64_t d) {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]";
}

class Chain {
 public:
  Chain(std::int64_t n, int k, std::int64_t d, const ObstructionOptions& options) : n_(n), k_(k), d_(d), options_(options) {
    report_.query = {n, k, d};
  }

  NonexistenceReport run() {
    if (griesmer()) return finish();
    if (k_ >= 3) {
      if (divisibility()) return finish();
      reduction();
    }
    if (k_ == 2) dim2();
    bridge();
    if (!excluded() && (k_ == 2 || k_ == 3)) classification();
    return finish();
  }

 private:
  void add(std::string rule, StepOutcome outcome, std::string detail) {
    if (outcome == StepOutcome::kFullSupportExcluded) full_excluded_ = true;
    if (outcome == StepOutcome::kZeroColumnExcluded) zero_excluded_ = true;
    if (outcome == StepOutcome::kNonexistent) full_excluded_ = zero_excluded_ = true;
    report_.steps.push_back({std::move(rule), outcome, std::move(detail)});
  }

  bool excluded() const { return full_excluded_ && zero_excluded_; }

  NonexistenceReport finish() {
    report_.established = excluded();
    return std::move(report_);
  }

  bool griesmer() {
    const auto a = alpha4(n_, k_);
    if (d_ > a) {
      add("griesmer", StepOutcome::kNonexistent, "d exceeds alpha4(n,k) = " + std::to_string(a));
      return true;
    }
    add("griesmer", StepOutcome::kNotApplicable, "d <= alpha4(n,k) = " + std::to_string(a));
    return false;
  }

  bool divisibility() {
    const auto a = alpha4(n_, k_);
    if (d_ == a && divisibility_obstruction(n_, k_)) {
      add("simplex-divisibility", StepOutcome::kNonexistent,
          "n is a multiple of " + std::to_string(point_count(k_)) +
              ", so every code meeting alpha4 is a sum of simplex codes and self-orthogonal");
      return true;
    }
    add("simplex-divisibility", StepOutcome::kNotApplicable,
        d_ == a ? "n is not a multiple of " + std::to_string(point_count(k_)) : "d is below alpha4(n,k)");
    return false;
  }

  void reduction() {
    const auto outcome = simplex_reduction(n_, k_, d_);
    switch (outcome.verdict) {
      case ReductionVerdict::kNotApplicable:
        add("simplex-reduction", StepOutcome::kNotApplicable, "4d - 3n < 1");
        return;
      case ReductionVerdict::kNonexistentByRank:
        add("simplex-reduction", StepOutcome::kFullSupportExcluded,
            "4 r4 < k: removing the forced simplex copies leaves too few columns");
        return;
      case ReductionVerdict::kReduced:
        break;
    }
    const auto [n0, k0, d0] = *outcome.reduced;
    const std::string reduced = params(n0, k0, d0);
    if (d0 > alpha4(n0, k0)) {
      add("simplex-reduction", StepOutcome::kFullSupportExcluded, "reduces to " + reduced + ", beyond Griesmer");
      return;
    }
    if (k0 != 3 || !options_.use_classifier) {
      add("simplex-reduction", StepOutcome::kInconclusive, "reduces to " + reduced + "; no classification available");
      report_.open_dependencies.push_back("no Hermitian LCD " + reduced + " code without zero columns");
      return;
    }
    ClassificationQuery q;
    q.n = n0;
    q.k = k0;
    q.d = d0;
    q.require_full_support = true;
    q.budget = options_.classifier_budget;
    try {
      const auto result = classify(q);
      const auto lcd = count_lcd(result);
      const std::string summary = std::to_string(result.classes.size()) + " full-support classes of " + reduced;
      if (lcd == 0) {
        add("simplex-reduction", StepOutcome::kFullSupportExcluded, "reduces to " + reduced + "; " + summary + ", none LCD");
      } else {
        add("simplex-reduction", StepOutcome::kInconclusive,
            "reduces to " + reduced + "; " + summary + ", " + std::to_string(lcd) + " LCD");
      }
    } catch (const BudgetExceeded& e) {
      add("simplex-reduction", StepOutcome::kInconclusive, "reduces to " + reduced + "; classification refused: " + e.what());
      report_.open_dependencies.push_back("no Hermitian LCD " + reduced + " code without zero columns");
    }
  }

  void dim2() {
    if (n_ < 4 || (n_ % 5 != 0 && n_ % 5 != 4) || d_ != (4 * n_) / 5) {
      add("dim2-case-analysis", StepOutcome::kNotApplicable, "needs n = 0, 4 (mod 5) and d = floor(4n/5)");
      return;
    }
    const auto cert = dim2_case_analysis(n_);
    if (cert.all_singular) {
      add("dim2-case-analysis", StepOutcome::kFullSupportExcluded,
          std::to_string(cert.candidates.size()) + " candidate count vectors, every Gram matrix singular");
    } else {
      add("dim2-case-analysis", StepOutcome::kInconclusive, "a candidate has a nonsingular Gram matrix");
    }
    if (cert.zero_column_excluded) {
      add("dim2-zero-column", StepOutcome::kZeroColumnExcluded,
          "an LCD code with a zero column would shorten to length n - 1, beyond Griesmer");
    }
  }

  void bridge() {
    if (!full_excluded_ || zero_excluded_) return;
    const std::string shorter = params(n_ - 1, k_, d_);
    if (n_ - 1 < k_ || d_ > alpha4(n_ - 1, k_)) {
      add("zero-column-bridge", StepOutcome::kZeroColumnExcluded,
          "deleting a zero column would leave an LCD " + shorter + " code, beyond Griesmer");
      return;
    }
    if (options_.bridge_depth > 0) {
      ObstructionOptions inner = options_;
      --inner.bridge_depth;
      const auto sub = Chain(n_ - 1, k_, d_, inner).run();
      if (sub.established) {
        std::string rules;
        for (const auto& step : sub.steps) {
          if (step.outcome == StepOutcome::kNotApplicable) continue;
          rules += (rules.empty() ? "" : ", ") + step.rule;
        }
        add("zero-column-bridge", StepOutcome::kZeroColumnExcluded,
            "no Hermitian LCD " + shorter + " code (" + rules + ")");
        return;
      }
    }
    add("zero-column-bridge", StepOutcome::kInconclusive, "needs: no Hermitian LCD " + shorter + " code");
    report_.open_dependencies.push_back("no Hermitian LCD " + shorter + " code (d4(" + std::to_string(n_ - 1) + "," +
                                        std::to_string(k_) + ") <= " + std::to_string(d_ - 1) + ")");
  }

  void classification() {
    if (!options_.use_classifier) return;
    ClassificationQuery q;
    q.n = n_;
    q.k = k_;
    q.d = d_;
    q.budget = options_.classifier_budget;
    try {
      const auto result = classify(q);
      const auto lcd = count_lcd(result);
      const std::string summary = std::to_string(result.classes.size()) + " classes of " + params(n_, k_, d_) + " codes";
      if (lcd == 0) {
        add("classification", StepOutcome::kNonexistent, summary + ", none LCD");
      } else {
        add("classification", StepOutcome::kLcdExists, summary + ", " + std::to_string(lcd) + " LCD");
      }
    } catch (const BudgetExceeded& e) {
      add("classification", StepOutcome::kInconclusive, std::string("refused: ") + e.what());
    }
  }

  std::int64_t n_;
  int k_;
  std::int64_t d_;
  ObstructionOptions options_;
  NonexistenceReport report_;
  bool full_excluded_ = false;
  bool zero_excluded_ = false;
};

}  // namespace

std::string to_string(StepOutcome outcome) {
  switch (outcome) {
    case StepOutcome::kNotApplicable:
      return "not-applicable";
    case StepOutcome::kInconclusive:
      return "inconclusive";
    case StepOutcome::kFullSupportExcluded:
      return "full-support-excluded";
    case StepOutcome::kZeroColumnExcluded:
      return "zero-column-excluded";
    case StepOutcome::kNonexistent:
      return "nonexistent";
    case StepOutcome::kLcdExists:
      return "lcd-exists";
  }
  return "unknown";
}

NonexistenceReport obstruction_chain(std::int64_t n, int k, std::int64_t d, const ObstructionOptions& options) {
  if (k < 1) throw InvalidInput("obstruction_chain: k must be positive");
  if (n < k) throw InvalidInput("obstruction_chain: n must be at least k");
  if (d < 1) throw InvalidInput("obstruction_chain: d must be positive");
  return Chain(n, k, d, options).run();
}

}  // namespace gf4lcd
