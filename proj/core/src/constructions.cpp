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

#include "gf4lcd/constructions.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "embedded_data.hpp"
#include "gf4lcd/errors.hpp"

namespace gf4lcd {

namespace {

struct TableEntry {
  std::vector<int> counts;
  std::string enumerator;  // compact form
};

struct TableDatabase {
  std::vector<std::vector<F4>> vectors;  // v_1 .. v_22
  std::vector<std::string> names;        // file order
  std::map<std::string, TableEntry> entries;
};

const TableDatabase& table_database() {
  static const TableDatabase db = [] {
    TableDatabase out;
    out.vectors.resize(22);
    std::istringstream in{std::string(embedded::table_codes_text())};
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream fields(line);
      std::string kind;
      fields >> kind;
      if (kind == "vector") {
        int j = 0;
        std::string column;
        fields >> j >> column;
        if (j < 1 || j > 22 || column.size() != 3) throw InvalidInput("table codes: bad vector line: " + line);
        auto& v = out.vectors[static_cast<std::size_t>(j - 1)];
        for (char c : column) {
          const auto x = F4::from_char(c);
          if (!x) throw InvalidInput("table codes: bad symbol in line: " + line);
          v.push_back(*x);
        }
      } else if (kind == "code") {
        std::string name;
        std::string counts;
        TableEntry entry;
        fields >> name >> counts >> entry.enumerator;
        std::istringstream parts(counts);
        std::string item;
        while (std::getline(parts, item, ',')) entry.counts.push_back(std::stoi(item));
        if (entry.counts.size() != 22) throw InvalidInput("table codes: expected 22 counts for " + name);
        out.names.push_back(name);
        out.entries.emplace(name, std::move(entry));
      } else {
        throw InvalidInput("table codes: unknown line: " + line);
      }
    }
    return out;
  }();
  return db;
}

// Reads "# weight-enumerator: ..." from a generator file.
std::string header_value(std::string_view text, std::string_view key) {
  std::istringstream in{std::string(text)};
  std::string line;
  const std::string prefix = "# " + std::string(key) + ":";
  while (std::getline(in, line)) {
    if (line.rfind(prefix, 0) == 0) {
      auto value = line.substr(prefix.size());
      value.erase(0, value.find_first_not_of(' '));
      return value;
    }
  }
  throw InvalidInput("missing header " + std::string(key));
}

}  // namespace

NamedCodeCheck verify(const NamedCode& named) {
  NamedCodeCheck check;
  check.enumerator = weight_enumerator(named.code);
  check.min_weight = check.enumerator.min_weight();
  check.lcd = is_hermitian_lcd(named.code);
  check.enumerator_matches = check.enumerator == named.expected_enumerator;
  check.lcd_matches = check.lcd == named.expected_lcd;
  return check;
}

NamedCode c26() {
  const auto text = embedded::c26_text();
  LinearCode code(F4Matrix::parse(text));
  auto expected = WeightEnumerator::from_compact(code.length(), header_value(text, "weight-enumerator"));
  return {"C26", std::move(code), std::move(expected), true};
}

std::vector<F4> table_vector(int j) {
  if (j < 1 || j > 22) throw InvalidInput("table_vector: index outside 1..22");
  return table_database().vectors[static_cast<std::size_t>(j - 1)];
}

NamedCode table_code(const std::string& name) {
  const auto& db = table_database();
  const auto it = db.entries.find(name);
  if (it == db.entries.end()) throw InvalidInput("unknown code '" + name + "'");
  const auto& entry = it->second;
  std::size_t n = 3;
  for (int c : entry.counts) n += static_cast<std::size_t>(c);
  F4Matrix g(3, n);
  for (std::size_t i = 0; i < 3; ++i) g(i, i) = kOne;
  std::size_t col = 3;
  for (std::size_t j = 0; j < 22; ++j) {
    for (int r = 0; r < entry.counts[j]; ++r, ++col) {
      for (std::size_t i = 0; i < 3; ++i) g(i, col) = db.vectors[j][i];
    }
  }
  return {name, LinearCode(std::move(g)), WeightEnumerator::from_compact(n, entry.enumerator), false};
}

std::vector<std::string> table_code_names() { return table_database().names; }

std::vector<std::string> named_code_names() {
  std::vector<std::string> names{"C26"};
  const auto& rest = table_code_names();
  names.insert(names.end(), rest.begin(), rest.end());
  return names;
}

NamedCode named_code(const std::string& name) { return name == "C26" ? c26() : table_code(name); }

LinearCode extend_with_simplex(const LinearCode& code, std::size_t copies) {
  if (code.dimension() != 3) throw InvalidInput("extend_with_simplex: requires a code of dimension 3");
  if (!is_hermitian_lcd(code)) throw InvalidInput("extend_with_simplex: requires a Hermitian LCD code");
  if (copies == 0) return code;
  return LinearCode(hconcat(code.generator(), repeat_columns(simplex_matrix(3), copies)));
}

LinearCode dim2_family(const Dim2Counts& a) {
  std::int64_t n = 2;
  for (auto x : a) {
    if (x < 0) throw InvalidInput("dim2_family: negative count");
    n += x;
  }
  F4Matrix g(2, static_cast<std::size_t>(n));
  g(0, 0) = kOne;
  g(1, 1) = kOne;
  const F4 top[5] = {kZero, kOne, kOne, kOne, kOne};
  const F4 bottom[5] = {kOne, kZero, kOne, kOmega, kOmega2};
  std::size_t col = 2;
  for (std::size_t c = 0; c < 5; ++c) {
    for (std::int64_t t = 0; t < a[c]; ++t, ++col) {
      g(0, col) = top[c];
      g(1, col) = bottom[c];
    }
  }
  return LinearCode(std::move(g));
}

namespace {

std::optional<LinearCode> from_database(std::int64_t n, int k, std::int64_t d) {
  if (k != 3) return std::nullopt;
  const auto base = c26().code;
  const auto base_n = static_cast<std::int64_t>(base.length());
  for (std::int64_t s = 0; base_n + 21 * s <= n; ++s) {
    if (19 + 16 * s < d) continue;
    auto extended = extend_with_simplex(base, static_cast<std::size_t>(s));
    return pad_zero_columns(extended, static_cast<std::size_t>(n - base_n - 21 * s));
  }
  return std::nullopt;
}

// Minimum weight of G_k(m); 0 if the points lie in a hyperplane.
int projective_min_weight(const MultiplicityVector& m) {
  const auto sums = hyperplane_sums(m);
  return m.length() - *std::max_element(sums.begin(), sums.end());
}

}  // namespace

std::optional<LinearCode> lcd_existence_search(std::int64_t n, int k, std::int64_t d, const SearchOptions& options) {
  if (k != 2 && k != 3) throw InvalidInput("lcd_existence_search: k must be 2 or 3");
  if (n < k || d < 1 || d > n) return std::nullopt;
  if (auto witness = from_database(n, k, d)) {
    if (is_hermitian_lcd(*witness) && static_cast<std::int64_t>(min_weight(*witness)) >= d) return witness;
  }

  // Random walk on (m, zeros): move one column at a time, never lowering
  // the minimum weight except with small probability.
  const int points = point_count(k);
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<int> pick_point(0, points - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  MultiplicityVector m{k, std::vector<int>(static_cast<std::size_t>(points), 0)};
  for (std::int64_t i = 0; i < n; ++i) ++m.m[static_cast<std::size_t>(pick_point(rng))];
  int zeros = 0;
  int current = projective_min_weight(m);
  for (std::uint64_t step = 0; step < options.budget; ++step) {
    if (current >= d) {
      auto code = expand(m);
      if (is_hermitian_lcd(code)) return pad_zero_columns(code, static_cast<std::size_t>(zeros));
    }
    // Slot `points` stands for the zero columns.
    std::uniform_int_distribution<int> pick_slot(0, points);
    const int from = pick_slot(rng);
    const int to = pick_slot(rng);
    auto count = [&](int slot) -> int& { return slot == points ? zeros : m.m[static_cast<std::size_t>(slot)]; };
    if (from == to || count(from) == 0) continue;
    --count(from);
    ++count(to);
    const int next = projective_min_weight(m);
    if (next >= current || coin(rng) < 0.05) {
      current = next;
    } else {
      ++count(from);
      --count(to);
    }
  }
  return std::nullopt;
}

}  // namespace gf4lcd
