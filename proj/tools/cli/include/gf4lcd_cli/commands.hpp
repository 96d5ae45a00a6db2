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

#ifndef GF4LCD_CLI_COMMANDS_HPP
#define GF4LCD_CLI_COMMANDS_HPP

#include <iosfwd>

namespace gf4lcd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitBudget = 2;

/// Runs the gf4lcd command line. Output goes to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 on invalid arguments or a failed check, 2 when a
/// classification is refused for exceeding its budget.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gf4lcd::cli

#endif  // GF4LCD_CLI_COMMANDS_HPP
