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

#include <cstdint>
#include <vector>

#include "ramsey/ordinal.hpp"
#include "ramsey/structures.hpp"

namespace ramsey {

/// A member of R_alpha(level) living inside T_alpha(host).
struct RMember {
  Ordinal alpha;
  std::uint32_t level = 0;
  std::uint32_t host = 0;
  std::vector<TreeNode> nodes;  // sorted

  friend bool operator==(const RMember& a, const RMember& b) { return a.alpha == b.alpha && a.nodes == b.nodes; }
  friend bool operator<(const RMember& a, const RMember& b) {
    return a.host != b.host ? a.host < b.host : a.nodes < b.nodes;
  }
};

/// A member of AR^alpha_length: blocks of levels 0..length-1 on increasing hosts.
struct FiniteApprox {
  Ordinal alpha;
  std::uint32_t length = 0;
  std::vector<RMember> blocks;

  friend bool operator==(const FiniteApprox&, const FiniteApprox&) = default;
};

bool is_R_member(const Ordinal& alpha, std::uint32_t n, std::uint32_t m, const std::vector<TreeNode>& u);

/// Every embedding of S_alpha(n) into S_alpha(m) as an ordered tree with
/// downward closed image, given as host indices per source node, in lex
/// order of the index vectors. Stops after `limit` results.
std::vector<std::vector<int>> s_embeddings(const SBlock& source, const SBlock& target,
                                           std::size_t limit = static_cast<std::size_t>(-1));

/// Wraps a lex-sorted, restriction-closed node set as a block (no images).
SBlock as_block(const Ordinal& alpha, std::vector<SNode> sorted_nodes);

std::vector<RMember> enumerate_R(const Ordinal& alpha, std::uint32_t n, std::uint32_t m);

std::vector<FiniteApprox> enumerate_AR(const Ordinal& alpha, std::uint32_t n, std::uint32_t m);

bool le_fin(const FiniteApprox& b, const FiniteApprox& a);

}  // namespace ramsey
