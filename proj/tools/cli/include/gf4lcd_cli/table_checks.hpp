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

#ifndef GF4LCD_CLI_TABLE_CHECKS_HPP
#define GF4LCD_CLI_TABLE_CHECKS_HPP

#include <string>
#include <vector>

namespace gf4lcd::cli {

struct CellCheck {
  std::string table;
  std::string cell;
  bool pass = false;
  std::string detail;
};

struct TableCheckOptions {
  bool classification = true;  // run the dimension-3 classifications
  int jobs = 1;
  int max_n = 1000;            // range of the closed-form d4 checks
};

/// Recomputes every published table the library reproduces and compares
/// it with the literal values stored here.
std::vector<CellCheck> check_tables(const TableCheckOptions& options = {});

/// Literal d4(n,3) values for n = 4..35.
int published_d4_dim3(int n);

/// Expected (n, d, classes) of the dimension-3 classifications.
struct ClassificationTarget {
  int n;
  int d;
  int classes;
  int lcd_classes;
};
const std::vector<ClassificationTarget>& classification_targets();

}  // namespace gf4lcd::cli

#endif  // GF4LCD_CLI_TABLE_CHECKS_HPP
