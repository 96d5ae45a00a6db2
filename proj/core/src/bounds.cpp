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

#include "gf4lcd/bounds.hpp"

#include <array>

#include "gf4lcd/errors.hpp"

namespace gf4lcd {

std::int64_t griesmer_length(int k, std::int64_t d) {
  if (k < 1) throw InvalidInput("griesmer_length: k must be positive");
  if (d < 0) throw InvalidInput("griesmer_length: d must be nonnegative");
  std::int64_t total = 0;
  std::int64_t q = 1;
  for (int i = 0; i < k; ++i) {
    total += (d + q - 1) / q;
    // Once 4^i exceeds d every later term is ceil(d/4^i) = 1 (or 0 for d = 0).
    if (q > d) {
      total += (d > 0 ? 1 : 0) * (k - 1 - i);
      break;
    }
    q *= 4;
  }
  return total;
}

std::int64_t alpha4(std::int64_t n, int k) {
  if (k < 1) throw InvalidInput("alpha4: k must be positive");
  if (n < 0) throw InvalidInput("alpha4: n must be nonnegative");
  // griesmer_length(k, d) >= d, so the answer lies in [0, n].
  std::int64_t lo = 0;
  std::int64_t hi = n;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (griesmer_length(k, mid) <= n) lo = mid;
    else hi = mid - 1;
  }
  return lo;
}

std::int64_t r4(std::int64_t n, int k, std::int64_t alpha) {
  if (k < 1) throw InvalidInput("r4: k must be positive");
  std::int64_t p = 1;
  for (int i = 1; i < k; ++i) p *= 4;
  return p * n - ((4 * p - 1) / 3) * alpha;
}

std::int64_t d4_dim2(std::int64_t n) {
  if (n < 3) throw InvalidInput("d4_dim2: requires n >= 3");
  const std::int64_t base = (4 * n) / 5;
  const auto t = n % 5;
  return (t == 0 || t == 4) ? base - 1 : base;
}

std::int64_t d4_dim3(std::int64_t n) {
  if (n < 6) throw InvalidInput("d4_dim3: requires n >= 6");
  const std::int64_t base = (16 * n) / 21;
  switch (n % 21) {
    case 5:
    case 9:
    case 13:
    case 17:
    case 18:
      return base;
    default:
      return base - 1;
  }
}

D4Row d4_dim3_table_row(std::int64_t n) {
  if (n < 6) throw InvalidInput("d4_dim3_table_row: requires n >= 6");
  struct Row {
    int offset;
    D4Source source;
    const char* label;
  };
  static constexpr std::array<Row, 21> kRows = {{
      {-1, D4Source::kMultipleOf21, "simplex divisibility obstruction; LCD [21,3,15] extended by simplex copies"},
      {-1, D4Source::kReductionClassified, "reduction to [64,3,48] (none LCD) and dual-distance lemma"},
      {0, D4Source::kPublishedTables, "published LCD tables"},
      {1, D4Source::kPublishedTables, "published LCD tables"},
      {2, D4Source::kPublishedTables, "published LCD tables"},
      {3, D4Source::kExtendedC26, "C26 extended by simplex copies"},
      {3, D4Source::kReductionClassified, "reduction to [48,3,36] (none LCD) and dual-distance lemma"},
      {4, D4Source::kPublishedTables, "published LCD tables"},
      {5, D4Source::kPublishedTables, "published LCD tables"},
      {6, D4Source::kPublishedTables, "published LCD tables"},
      {6, D4Source::kReductionClassified, "reduction to [52,3,39] (none LCD) and dual-distance lemma"},
      {7, D4Source::kReductionSmall, "reduction to [32,3,24] (no LCD code) and Griesmer"},
      {8, D4Source::kPublishedTables, "published LCD tables"},
      {9, D4Source::kPublishedTables, "published LCD tables"},
      {9, D4Source::kReductionClassified, "reduction to [56,3,42] (none LCD) and dual-distance lemma"},
      {10, D4Source::kReductionClassified, "reduction to [36,3,27] (none LCD) and dual-distance lemma"},
      {11, D4Source::kReductionSmall, "reduction to [16,3,12] (no LCD code) and Griesmer"},
      {12, D4Source::kPublishedTables, "published LCD tables"},
      {13, D4Source::kPublishedTables, "published LCD tables"},
      {13, D4Source::kReductionClassified, "reduction to [40,3,30] (none LCD) and dual-distance lemma"},
      {14, D4Source::kReductionSmall, "reduction to [20,3,15] (no LCD code) and Griesmer"},
  }};
  const auto s = n / 21;
  const auto& row = kRows[static_cast<std::size_t>(n % 21)];
  return {16 * s + row.offset, row.source, row.label};
}

}  // namespace gf4lcd
