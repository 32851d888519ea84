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

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>

namespace gdd6 {

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;
inline constexpr const char* kBudgetEnvVar = "GDD6_BUDGET";

// Node budget for a single search; GDD6_BUDGET overrides the default.
inline std::uint64_t default_search_budget() {
  if (const char* env = std::getenv(kBudgetEnvVar)) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultSearchBudget;
}

}  // namespace gdd6
