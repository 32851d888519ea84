// Copyright 2026 The gdd6 Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gdd6 {

enum class ErrorKind {
  UnsupportedN,
  InfeasibleParameters,
  InfeasibleInput,
  NotFound,
  BudgetExhausted,
  NotBalanced,
  InvalidIngredient,
  MismatchedClassCount,
  NonIntegralSplit,
  IngredientUnavailable,
  MalformedDesign,
  Parse,
  Io,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnsupportedN: return "UnsupportedN";
    case ErrorKind::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorKind::InfeasibleInput: return "InfeasibleInput";
    case ErrorKind::NotFound: return "NotFound";
    case ErrorKind::BudgetExhausted: return "BudgetExhausted";
    case ErrorKind::NotBalanced: return "NotBalanced";
    case ErrorKind::InvalidIngredient: return "InvalidIngredient";
    case ErrorKind::MismatchedClassCount: return "MismatchedClassCount";
    case ErrorKind::NonIntegralSplit: return "NonIntegralSplit";
    case ErrorKind::IngredientUnavailable: return "IngredientUnavailable";
    case ErrorKind::MalformedDesign: return "MalformedDesign";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

// Every failure raised by the library carries a kind so callers (the CLI in
// particular) can map it to an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        message_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  // The message without the kind prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorKind kind_;
  std::string message_;
};

}  // namespace gdd6
