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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/canonical.hpp"
#include "ramsey/space.hpp"

namespace ramsey {

/// Least m found by a minimal-m search, with the number of relations or
/// colorings examined.
struct SearchOutcome {
  std::optional<std::uint32_t> m;
  std::uint64_t checked = 0;
};

struct BlockWitness {
  RMember y;
  DCSet S;
};

/// Canonical S for rel on enumerate_R(alpha, n, m), if any.
std::optional<DCSet> is_canonical_relation(const Ordinal& alpha, std::uint32_t n, std::uint32_t m,
                                           const EqRelation& rel);

std::optional<BlockWitness> canonize_block(const Ordinal& alpha, std::uint32_t n, std::uint32_t k, std::uint32_t m,
                                           const EqRelation& rel);

/// Re-checks a witness with fresh pi_S computations.
bool verify_block_witness(const EqRelation& rel, const BlockWitness& w);

SearchOutcome fct_block_minimal_m(const Ordinal& alpha, std::uint32_t n, std::uint32_t k, std::uint32_t m_max);
SearchOutcome pigeonhole_minimal_m(const Ordinal& alpha, std::uint32_t n, std::uint32_t k, std::uint32_t m_max);

/// Calls fn with each set partition of {0..size-1} as a restricted growth
/// string until fn returns false. Returns the number visited.
std::uint64_t for_each_partition(std::size_t size, const std::function<bool(const std::vector<int>&)>& fn);
BigInt bell_number(std::size_t size);

/// An equivalence relation on approximations, as restricted growth labels.
struct ApproxRelation {
  std::vector<FiniteApprox> domain;
  std::vector<int> labels;
};

struct ARWitness {
  FiniteApprox a;
  std::vector<DCSet> S;
};

/// Searches a in enumerate_AR(alpha, k, m), k >= n, on which rel is the
/// blockwise product of E_{S(i)}.
std::optional<ARWitness> canonize_AR(const Ordinal& alpha, std::uint32_t n, std::uint32_t m, const ApproxRelation& rel,
                                     std::optional<std::uint32_t> k = std::nullopt);

/// Blocks of levels n0..n1-1 on strictly increasing hosts in [n0, m).
struct SegmentMember {
  Ordinal alpha;
  std::uint32_t n0 = 0;
  std::uint32_t n1 = 0;
  std::vector<RMember> blocks;

  friend bool operator==(const SegmentMember&, const SegmentMember&) = default;
};

struct SegmentRelation {
  std::vector<SegmentMember> domain;
  std::vector<int> labels;
};

struct SegmentWitness {
  std::vector<RMember> y;  // levels k0..k1-1
  std::vector<DCSet> S;    // levels n0..n1-1
};

std::vector<SegmentMember> enumerate_segments(const Ordinal& alpha, std::uint32_t n0, std::uint32_t n1,
                                              std::uint32_t m);

std::optional<SegmentWitness> canonize_segment(const Ordinal& alpha, std::uint32_t n0, std::uint32_t n1,
                                               std::uint32_t k0, std::uint32_t k1, std::uint32_t m,
                                               const SegmentRelation& rel);

/// Direct materializes sigma/tau images of whole blocks; Auto switches to an
/// exact recursion along the construction once a block is large.
enum class DaggerEngine { Auto, Direct };

struct DaggerRow {
  std::uint32_t l = 0;
  std::optional<std::uint32_t> m_dagger;
  std::optional<std::uint32_t> m_ddagger;
  std::string method;  // "identity", "direct" or "decomposed"
};

struct DaggerReport {
  Ordinal gamma;
  Ordinal beta;
  std::vector<DaggerRow> rows;
  std::optional<std::uint32_t> threshold;
  bool violation = false;
};

/// Least witnesses m <= m_max of both containment properties for each l.
DaggerReport check_dagger(const Ordinal& gamma, const Ordinal& beta, std::uint32_t l_lo, std::uint32_t l_hi,
                          std::uint32_t m_max, DaggerEngine engine = DaggerEngine::Auto);

/// Least k <= k_max whose window [k, k+width) is fully witnessed; rows cover that window.
DaggerReport dagger_threshold(const Ordinal& gamma, const Ordinal& beta, std::uint32_t width, std::uint32_t k_max,
                              std::uint32_t m_max, DaggerEngine engine = DaggerEngine::Auto);

struct CoherenceReport {
  std::uint64_t nodes = 0;
  std::uint64_t violations = 0;
  std::uint64_t fibre_top_nodes = 0;
  std::uint64_t fibre_top_violations = 0;
};

/// Compares psi_gamma . sigma with tau . psi_beta on every node of S_beta(n).
CoherenceReport check_coherence(const Ordinal& gamma, const Ordinal& beta, std::uint32_t n);

struct DistinctnessReport {
  std::uint64_t sets = 0;
  std::uint64_t pairs = 0;
  std::uint64_t unseparated = 0;
  std::uint32_t deepest_m = 0;
};

/// Separates every pair of downsets of S_alpha(n) by their relations on
/// members hosted in blocks n..m, for m up to m_max.
DistinctnessReport check_distinctness(const Ordinal& alpha, std::uint32_t n, std::uint32_t m_max);

}  // namespace ramsey
