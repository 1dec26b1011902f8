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

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <vector>

#include "ramsey/ordinal.hpp"
#include "ramsey/snode.hpp"

namespace ramsey {

/// A node of a tree block: a finite sequence of naturals.
using TreeNode = std::vector<Value>;

/// The finite tree T_alpha(n); nodes are kept in lexicographic order.
struct TreeBlock {
  Ordinal alpha;
  std::uint32_t index = 0;
  std::vector<TreeNode> nodes;

  bool contains(const TreeNode& t) const;
  std::vector<TreeNode> leaves() const;
};

/// The structure S_alpha(n) as an ordered forest under restriction.
///
/// Nodes are sorted by lex_compare; parent[i] is the immediate predecessor
/// of node i inside the block (-1 for the empty function) and children[i]
/// lists immediate successors in lex order.
///
/// For infinite alpha a block is an infinite set. Those blocks are
/// materialized on a finite set of restriction points: every domain minimum
/// up to two past the last run boundary below each limit, plus the limits
/// themselves. `truncated` marks such blocks.
struct SBlock {
  Ordinal alpha;
  std::uint32_t index = 0;
  std::vector<SNode> nodes;
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
  std::vector<TreeNode> images;  // psi of each node
  bool truncated = false;

  /// Index of s, or -1.
  int find(const SNode& s) const;
  std::size_t size() const { return nodes.size(); }
};

/// The sequence l^xi_n driving the successor step (xi = delta + k).
std::uint64_t l_seq(const Ordinal& xi, std::uint64_t n);

/// Block indices j of S_{alpha-1} whose full-domain members are extended to
/// build S_alpha(n), for a successor alpha.
std::vector<Value> successor_sources(const Ordinal& alpha, std::uint32_t n);

/// Where a block of a limit structure comes from: T_alpha(i) = T_cofinal(source_index).
struct LimitSource {
  std::uint32_t stage = 0;  // n with p_{n-1} < i <= p_n
  Ordinal cofinal;          // c_alpha(stage)
  std::uint32_t source_index = 0;
};

/// One row of the limit-stage bookkeeping (k_n, m_n, l_n, p_n).
struct StageRecord {
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::uint32_t m = 0;
  std::uint32_t l = 0;
  std::uint32_t p = 0;
};

LimitSource limit_source(const Ordinal& alpha, std::uint32_t i);
std::vector<StageRecord> limit_stages(const Ordinal& alpha, std::uint32_t stages);

std::shared_ptr<const TreeBlock> build_T(const Ordinal& alpha, std::uint32_t n);

/// Full-domain members of S_alpha(n), in lex order.
std::shared_ptr<const std::vector<SNode>> maximal_nodes(const Ordinal& alpha, std::uint32_t n);

/// |maximal_nodes(alpha, n)| without materializing, saturating at UINT64_MAX.
std::uint64_t maximal_count(const Ordinal& alpha, std::uint32_t n);

std::shared_ptr<const SBlock> build_S(const Ordinal& alpha, std::uint32_t n);

/// Upper bound on the number of full-domain nodes a single block may hold
/// before construction raises Infeasible.
void set_block_budget(std::size_t max_maximal_nodes);
std::size_t block_budget();

/// Structural membership test against S_alpha (block = s.top_value()).
bool is_member(const Ordinal& alpha, const SNode& s);

TreeNode psi(const Ordinal& alpha, const SNode& s);

SNode sigma(const Ordinal& gamma, const Ordinal& beta, const SNode& s);

/// tau_{gamma,beta} on T_beta(n): the root goes to the root; any other t
/// goes to psi_gamma . sigma of the lex-greatest member of its psi_beta-fibre.
TreeNode tau(const Ordinal& gamma, const Ordinal& beta, std::uint32_t n, const TreeNode& t);
/// As above, locating the block of a non-root t.
TreeNode tau(const Ordinal& gamma, const Ordinal& beta, const TreeNode& t);

/// tau_{gamma,beta} as a table over T_beta(n).
std::map<TreeNode, TreeNode> tau_table(const Ordinal& gamma, const Ordinal& beta, std::uint32_t n);

/// Membership of t in T_alpha(n) without building the block.
bool in_T(const Ordinal& alpha, std::uint32_t n, const TreeNode& t);

/// tau_{gamma,beta} applied to every node of T_beta(n).
std::vector<TreeNode> tau_image(const Ordinal& gamma, const Ordinal& beta, std::uint32_t n);

/// Splitting nodes of a block, in lex order.
std::vector<SNode> splitting_nodes(const SBlock& block);

/// Parent index (within the set) of each element of a lex-sorted node set.
std::vector<int> restriction_parents(std::span<const SNode> sorted);

/// Isomorphism of node sets: the lex-monotone bijection also preserves
/// immediate predecessors.
bool s_iso(std::span<const SNode> a, std::span<const SNode> b);

/// Indices of psi^{-1}(u) inside S_alpha(host).
std::vector<int> psi_preimage(const SBlock& host, std::span<const TreeNode> u);

}  // namespace ramsey
