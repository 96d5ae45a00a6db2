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

#ifndef GF4LCD_CLI_ARCHIVE_HPP
#define GF4LCD_CLI_ARCHIVE_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gf4lcd/classify.hpp"

namespace gf4lcd::cli {

inline constexpr int kArchiveFormatVersion = 1;

/// A classification result as persisted on disk: "key: value" header lines,
/// a "---" separator, then one class per line.
struct ArchiveDocument {
  std::vector<std::pair<std::string, std::string>> header;
  std::vector<std::string> classes;

  /// Value of a header key, or empty if absent.
  std::string get(std::string_view key) const;
};

ArchiveDocument make_archive(const ClassificationResult& result);
std::string render(const ArchiveDocument& doc);
/// Throws InvalidInput on a malformed document.
ArchiveDocument parse_archive(std::string_view text);

/// True when the documents agree on everything but the elapsed time.
bool same_results(const ArchiveDocument& a, const ArchiveDocument& b);

/// Class line: "z=0 m=k=3;2,1,... enumerator=19:33,... lcd=1".
std::string class_line(const CodeClass& c);
CodeClass parse_class_line(std::string_view line, std::int64_t n);

/// <root>/k<k>/n<n>-d<d>-<method>[-full].txt
std::filesystem::path archive_path(const std::filesystem::path& root, const ClassificationQuery& query);

}  // namespace gf4lcd::cli

#endif  // GF4LCD_CLI_ARCHIVE_HPP
