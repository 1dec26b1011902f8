// Copyright 2026 The ramsey-approx Authors
//
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

#include <atomic>
#include <cstdint>
#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

inline constexpr std::uint64_t kDefaultSearchBudget = 1'000'000;

/// Cap on partitions, colorings and embeddings visited by a single search.
inline std::atomic<std::uint64_t>& search_budget() {
  static std::atomic<std::uint64_t> budget{kDefaultSearchBudget};
  return budget;
}

/// Worker threads used by exhaustive searches.
inline std::atomic<unsigned>& search_jobs() {
  static std::atomic<unsigned> jobs{1};
  return jobs;
}

inline void charge(std::uint64_t used, const std::string& what) {
  if (used > search_budget().load()) {
    throw Infeasible(what + " exceeds the search budget of " + std::to_string(search_budget().load()));
  }
}

}  // namespace ramsey
