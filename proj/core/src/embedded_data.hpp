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

#ifndef GF4LCD_EMBEDDED_DATA_HPP
#define GF4LCD_EMBEDDED_DATA_HPP

#include <string_view>

namespace gf4lcd::embedded {

// Contents of core/data, compiled in by CMake.
std::string_view c26_text();
std::string_view table_codes_text();

}  // namespace gf4lcd::embedded

#endif  // GF4LCD_EMBEDDED_DATA_HPP
