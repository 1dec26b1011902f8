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
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ramsey/ordinal.hpp"
#include "ramsey/space.hpp"
#include "ramsey/structures.hpp"

namespace ramsey {

using BigInt = boost::multiprecision::cpp_int;

/// A non-empty downward closed subset of S_alpha(level), stored in lex order.
struct DCSet {
  Ordinal alpha;
  std::uint32_t level = 0;
  std::vector<SNode> nodes;

  friend bool operator==(const DCSet&, const DCSet&) = default;
};

/// Indices of S's nodes inside S_alpha(level); throws NotAMember.
std::vector<int> dc_indices(const DCSet& s);
DCSet dc_from_indices(const Ordinal& alpha, std::uint32_t level, const std::vector<int>& idx);

/// Parent vector of the lex-sorted node set: the isomorphism type.
std::vector<int> dc_shape(const DCSet& s);

/// Lex-least downset of S_alpha(level) isomorphic to s, if any.
std::optional<DCSet> transport(const DCSet& s, std::uint32_t level);

/// A partition of an explicit domain, classes ordered by least element.
struct EqRelation {
  std::vector<RMember> domain;
  std::vector<std::vector<int>> classes;

  static EqRelation from_labels(std::vector<RMember> domain, const std::vector<int>& labels);
  /// Restricted growth labels: class number of each domain element.
  std::vector<int> labels() const;

  friend bool operator==(const EqRelation&, const EqRelation&) = default;
};

/// All downsets (containing the empty function) of a block, as sorted index lists.
std::vector<std::vector<int>> block_downsets(const SBlock& block);
BigInt count_block_downsets(const SBlock& block);

std::vector<DCSet> enumerate_DC(const Ordinal& alpha, std::uint32_t n, std::uint32_t m);
std::vector<DCSet> enumerate_DC_full(const Ordinal& alpha, std::uint32_t n);
/// |enumerate_DC_full| computed on the same generator without materializing.
BigInt count_DC_full(const Ordinal& alpha, std::uint32_t n);

DCSet chain_S_beta(const Ordinal& alpha, const Ordinal& beta);

std::vector<TreeNode> pi_S(const DCSet& s, const RMember& u);

EqRelation eq_rel_from_S(const DCSet& s, const std::vector<RMember>& domain);

DCSet restrict_DC(const DCSet& s, std::uint32_t m);

BigInt count_canonical(std::uint32_t k, std::uint32_t n);
BigInt count_canonical_AR(std::uint32_t k, std::uint32_t n);

}  // namespace ramsey
