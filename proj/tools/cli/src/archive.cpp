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

#include "gf4lcd_cli/archive.hpp"

#include <cstdio>
#include <sstream>

#include "gf4lcd/errors.hpp"

namespace gf4lcd::cli {

namespace {

std::string equivalence_name(Equivalence eq) { return eq == Equivalence::kMonomial ? "monomial" : "semilinear"; }

}  // namespace

std::string ArchiveDocument::get(std::string_view key) const {
  for (const auto& [k, v] : header) {
    if (k == key) return v;
  }
  return {};
}

std::string class_line(const CodeClass& c) {
  std::string enumerator = c.enumerator.to_compact();
  if (enumerator.empty()) enumerator = "-";
  return "z=" + std::to_string(c.zero_columns) + " m=" + c.representative.serialize() + " enumerator=" + enumerator +
         " lcd=" + (c.lcd ? "1" : "0");
}

CodeClass parse_class_line(std::string_view line, std::int64_t n) {
  std::istringstream in{std::string(line)};
  std::string field;
  CodeClass c;
  int seen = 0;
  while (in >> field) {
    const auto eq = field.find('=');
    if (eq == std::string::npos) throw InvalidInput("archive: bad class field '" + field + "'");
    const auto key = field.substr(0, eq);
    const auto value = field.substr(eq + 1);
    if (key == "z") {
      c.zero_columns = std::stoi(value);
    } else if (key == "m") {
      c.representative = MultiplicityVector::parse(value);
    } else if (key == "enumerator") {
      c.enumerator = WeightEnumerator::from_compact(static_cast<std::size_t>(n), value == "-" ? "" : value);
    } else if (key == "lcd") {
      c.lcd = value == "1";
    } else {
      throw InvalidInput("archive: unknown class field '" + key + "'");
    }
    ++seen;
  }
  if (seen != 4) throw InvalidInput("archive: class line needs z, m, enumerator and lcd");
  return c;
}

ArchiveDocument make_archive(const ClassificationResult& result) {
  const auto& q = result.query;
  ArchiveDocument doc;
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", result.elapsed_seconds);
  doc.header = {
      {"format", std::to_string(kArchiveFormatVersion)},
      {"tool-version", GF4LCD_VERSION},
      {"n", std::to_string(q.n)},
      {"k", std::to_string(q.k)},
      {"d", std::to_string(q.d)},
      {"support", q.require_full_support ? "full" : "all"},
      {"equivalence", equivalence_name(q.equivalence)},
      {"method", to_string(q.method)},
      {"classes", std::to_string(result.classes.size())},
      {"lcd-classes", std::to_string(count_lcd(result))},
      {"elapsed-seconds", elapsed},
  };
  for (const auto& c : result.classes) doc.classes.push_back(class_line(c));
  return doc;
}

std::string render(const ArchiveDocument& doc) {
  std::string out = "# gf4lcd classification archive\n";
  for (const auto& [k, v] : doc.header) out += k + ": " + v + "\n";
  out += "---\n";
  for (const auto& line : doc.classes) out += line + "\n";
  return out;
}

ArchiveDocument parse_archive(std::string_view text) {
  ArchiveDocument doc;
  std::istringstream in{std::string(text)};
  std::string line;
  bool body = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (body) {
      doc.classes.push_back(line);
    } else if (line == "---") {
      body = true;
    } else {
      const auto colon = line.find(": ");
      if (colon == std::string::npos) throw InvalidInput("archive: bad header line '" + line + "'");
      doc.header.emplace_back(line.substr(0, colon), line.substr(colon + 2));
    }
  }
  if (!body) throw InvalidInput("archive: missing '---' separator");
  const auto count = doc.get("classes");
  if (count.empty() || std::stoul(count) != doc.classes.size()) {
    throw InvalidInput("archive: class count does not match the header");
  }
  return doc;
}

bool same_results(const ArchiveDocument& a, const ArchiveDocument& b) {
  auto strip = [](const ArchiveDocument& d) {
    auto h = d.header;
    std::erase_if(h, [](const auto& kv) { return kv.first == "elapsed-seconds"; });
    return h;
  };
  return strip(a) == strip(b) && a.classes == b.classes;
}

std::filesystem::path archive_path(const std::filesystem::path& root, const ClassificationQuery& query) {
  std::string name = "n" + std::to_string(query.n) + "-d" + std::to_string(query.d) + "-" + to_string(query.method);
  if (query.require_full_support) name += "-full";
  if (query.equivalence == Equivalence::kSemilinear) name += "-semilinear";
  return root / ("k" + std::to_string(query.k)) / (name + ".txt");
}

}  // namespace gf4lcd::cli
