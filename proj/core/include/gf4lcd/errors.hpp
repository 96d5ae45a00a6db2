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

#ifndef GF4LCD_ERRORS_HPP
#define GF4LCD_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gf4lcd {

/// Thrown when an operation's precondition on its arguments does not hold.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by the classifier when a search would exceed the candidate budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t estimated, std::uint64_t explored)
      : std::runtime_error(what), estimated_(estimated), explored_(explored) {}

  /// Capped stars-and-bars count of the raw candidate box.
  std::uint64_t estimated() const { return estimated_; }
  /// Search nodes visited before giving up.
  std::uint64_t explored() const { return explored_; }

 private:
  std::uint64_t estimated_;
  std::uint64_t explored_;
};

}  // namespace gf4lcd

#endif  // GF4LCD_ERRORS_HPP
