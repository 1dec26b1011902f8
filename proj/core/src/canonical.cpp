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

#include "ramsey/canonical.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>

#include "ramsey/budget.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

// Downsets of the subtree below `root` that contain `root`.
std::vector<std::vector<int>> subtree_downsets(const std::vector<std::vector<int>>& children, int root,
                                               std::uint64_t& produced) {
  std::vector<std::vector<int>> acc{{root}};
  for (int c : children[root]) {
    auto sub = subtree_downsets(children, c, produced);
    std::vector<std::vector<int>> next;
    next.reserve(acc.size() * (sub.size() + 1));
    for (const auto& a : acc) {
      next.push_back(a);
      for (const auto& d : sub) {
        auto x = a;
        x.insert(x.end(), d.begin(), d.end());
        next.push_back(std::move(x));
      }
    }
    produced += next.size();
    charge(produced, "downset enumeration");
    acc = std::move(next);
  }
  return acc;
}

BigInt subtree_count(const std::vector<std::vector<int>>& children, int root) {
  BigInt p = 1;
  for (int c : children[root]) p *= 1 + subtree_count(children, c);
  return p;
}

std::vector<std::vector<int>> prefix_children(const std::vector<TreeNode>& sorted) {
  std::vector<std::vector<int>> children(sorted.size());
  std::vector<int> stack;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    while (!stack.empty()) {
      const auto& top = sorted[stack.back()];
      if (top.size() < sorted[i].size() && std::equal(top.begin(), top.end(), sorted[i].begin())) break;
      stack.pop_back();
    }
    if (!stack.empty()) children[stack.back()].push_back(static_cast<int>(i));
    stack.push_back(static_cast<int>(i));
  }
  return children;
}

void require_finite(const Ordinal& alpha, const char* what) {
  if (!alpha.is_finite()) throw Unsupported(std::string(what) + " is only available for finite alpha");
}

struct MemberKey {
  Ordinal alpha;
  std::uint32_t host;
  std::vector<TreeNode> nodes;
  friend auto operator<=>(const MemberKey&, const MemberKey&) = default;
};

std::shared_mutex g_iota_mu;
std::map<MemberKey, std::shared_ptr<const std::vector<int>>> g_iota_cache;

// Host indices of psi^{-1}(u), i.e. the isomorphism from S_alpha(level) onto it.
std::shared_ptr<const std::vector<int>> iota(const RMember& u) {
  MemberKey key{u.alpha, u.host, u.nodes};
  {
    std::shared_lock lock(g_iota_mu);
    if (auto it = g_iota_cache.find(key); it != g_iota_cache.end()) return it->second;
  }
  auto host = build_S(u.alpha, u.host);
  auto level = build_S(u.alpha, u.level);
  auto idx = std::make_shared<std::vector<int>>(psi_preimage(*host, u.nodes));
  std::vector<SNode> pre;
  for (int i : *idx) pre.push_back(host->nodes[i]);
  if (!s_iso(pre, level->nodes)) throw NotAMember("member's preimage is not isomorphic to its level block");
  std::unique_lock lock(g_iota_mu);
  return g_iota_cache.try_emplace(std::move(key), std::move(idx)).first->second;
}


}  // namespace

std::vector<int> dc_indices(const DCSet& s) {
  auto block = build_S(s.alpha, s.level);
  std::vector<int> out;
  out.reserve(s.nodes.size());
  for (const auto& x : s.nodes) {
    const int i = block->find(x);
    if (i < 0) throw NotAMember("DCSet node is not in S_" + to_string(s.alpha) + "(" + std::to_string(s.level) + ")");
    out.push_back(i);
  }
  return out;
}

DCSet dc_from_indices(const Ordinal& alpha, std::uint32_t level, const std::vector<int>& idx) {
  auto block = build_S(alpha, level);
  DCSet d{alpha, level, {}};
  d.nodes.reserve(idx.size());
  for (int i : idx) d.nodes.push_back(block->nodes[i]);
  std::sort(d.nodes.begin(), d.nodes.end(), LexLess{});
  return d;
}

std::vector<int> dc_shape(const DCSet& s) {
  auto nodes = s.nodes;
  std::sort(nodes.begin(), nodes.end(), LexLess{});
  return restriction_parents(nodes);
}

std::optional<DCSet> transport(const DCSet& s, std::uint32_t level) {
  auto sorted = s.nodes;
  std::sort(sorted.begin(), sorted.end(), LexLess{});
  const SBlock src = as_block(s.alpha, std::move(sorted));
  auto dst = build_S(s.alpha, level);
  auto found = s_embeddings(src, *dst, 1);
  if (found.empty()) return std::nullopt;
  return dc_from_indices(s.alpha, level, found.front());
}

EqRelation EqRelation::from_labels(std::vector<RMember> domain, const std::vector<int>& labels) {
  if (labels.size() != domain.size()) throw DomainMismatch("label count differs from domain size");
  EqRelation e;
  e.domain = std::move(domain);
  std::map<int, int> renumber;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto [it, fresh] = renumber.try_emplace(labels[i], static_cast<int>(e.classes.size()));
    if (fresh) e.classes.emplace_back();
    e.classes[it->second].push_back(static_cast<int>(i));
  }
  return e;
}

std::vector<int> EqRelation::labels() const {
  std::vector<int> out(domain.size(), -1);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int i : classes[c]) out.at(i) = static_cast<int>(c);
  }
  return out;
}

std::vector<std::vector<int>> block_downsets(const SBlock& block) {
  std::uint64_t produced = 0;
  return subtree_downsets(block.children, 0, produced);
}

BigInt count_block_downsets(const SBlock& block) { return subtree_count(block.children, 0); }

std::vector<DCSet> enumerate_DC(const Ordinal& alpha, std::uint32_t n, std::uint32_t m) {
  require_finite(alpha, "enumerate_DC");
  if (m < n) throw OutOfRange("enumerate_DC: m must be at least n");
  auto host = build_S(alpha, m);
  auto level = build_S(alpha, n);
  // A member matters only through its tree shape and which of its nodes
  // each level node projects to.
  std::set<std::pair<std::vector<std::vector<int>>, std::vector<int>>> patterns;
  for (const auto& u : enumerate_R(alpha, n, m)) {
    std::vector<int> fibre;
    for (int i : psi_preimage(*host, u.nodes)) {
      const auto& t = host->images[i];
      fibre.push_back(static_cast<int>(std::lower_bound(u.nodes.begin(), u.nodes.end(), t) - u.nodes.begin()));
    }
    patterns.emplace(prefix_children(u.nodes), std::move(fibre));
  }
  std::set<std::vector<int>> shapes;
  for (const auto& [children, fibre] : patterns) {
    std::uint64_t produced = 0;
    for (const auto& v : subtree_downsets(children, 0, produced)) {
      std::vector<bool> in_v(children.size(), false);
      for (int i : v) in_v[i] = true;
      std::vector<SNode> pre;
      for (std::size_t i = 0; i < fibre.size(); ++i) {
        if (in_v[fibre[i]]) pre.push_back(level->nodes[i]);
      }
      shapes.insert(restriction_parents(pre));
    }
  }
  std::vector<DCSet> out;
  for (const auto& d : block_downsets(*level)) {
    std::vector<SNode> nodes;
    for (int i : d) nodes.push_back(level->nodes[i]);
    if (shapes.count(restriction_parents(nodes))) out.push_back({alpha, n, std::move(nodes)});
  }
  return out;
}

std::vector<DCSet> enumerate_DC_full(const Ordinal& alpha, std::uint32_t n) {
  if (!alpha.is_finite()) throw InfiniteFamily("the family of downward closed sets is infinite for infinite alpha");
  auto level = build_S(alpha, n);
  std::vector<DCSet> out;
  for (const auto& d : block_downsets(*level)) {
    DCSet x{alpha, n, {}};
    for (int i : d) x.nodes.push_back(level->nodes[i]);
    out.push_back(std::move(x));
  }
  return out;
}

BigInt count_DC_full(const Ordinal& alpha, std::uint32_t n) {
  if (!alpha.is_finite()) throw InfiniteFamily("the family of downward closed sets is infinite for infinite alpha");
  return count_block_downsets(*build_S(alpha, n));
}

DCSet chain_S_beta(const Ordinal& alpha, const Ordinal& beta) {
  if (alpha < beta) throw OutOfRange("chain_S_beta: beta must not exceed alpha");
  DCSet d{alpha, 0, {SNode{}}};
  // Domains [gamma, alpha] for beta <= gamma <= alpha; below a limit only
  // the materialized minima exist.
  auto block = build_S(alpha, 0);
  for (const auto& s : block->nodes) {
    if (s.empty() || s.domain_min() < beta) continue;
    bool zero = true;
    for (const auto& seg : s.segments()) zero = zero && seg.value == 0;
    if (zero) d.nodes.push_back(s);
  }
  std::sort(d.nodes.begin(), d.nodes.end(), LexLess{});
  return d;
}

std::vector<TreeNode> pi_S(const DCSet& s, const RMember& u) {
  if (!(s.alpha == u.alpha) || s.level != u.level) {
    throw LevelMismatch("pi_S: member level " + std::to_string(u.level) + " differs from set level " +
                        std::to_string(s.level));
  }
  auto host = build_S(u.alpha, u.host);
  auto map = iota(u);
  std::vector<TreeNode> out;
  for (int i : dc_indices(s)) out.push_back(host->images[(*map)[i]]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EqRelation eq_rel_from_S(const DCSet& s, const std::vector<RMember>& domain) {
  std::map<std::vector<TreeNode>, int> seen;
  std::vector<int> labels;
  labels.reserve(domain.size());
  for (const auto& u : domain) {
    auto [it, fresh] = seen.try_emplace(pi_S(s, u), static_cast<int>(seen.size()));
    labels.push_back(it->second);
  }
  return EqRelation::from_labels(domain, labels);
}

DCSet restrict_DC(const DCSet& s, std::uint32_t m) {
  require_finite(s.alpha, "restrict_DC");
  const auto domain = enumerate_R(s.alpha, s.level, m);
  const auto target = eq_rel_from_S(s, domain).labels();
  const auto mine = dc_indices(s);
  std::optional<std::vector<int>> best;
  for (const auto& cand : enumerate_DC(s.alpha, s.level, m)) {
    auto idx = dc_indices(cand);
    if (!std::includes(idx.begin(), idx.end(), mine.begin(), mine.end())) continue;
    if (best && (idx.size() > best->size() || (idx.size() == best->size() && idx >= *best))) continue;
    if (eq_rel_from_S(cand, domain).labels() != target) continue;
    best = std::move(idx);
  }
  if (!best) throw Error("restrict_DC: no realizable superset induces the same relation");
  return dc_from_indices(s.alpha, s.level, *best);
}

BigInt count_canonical(std::uint32_t k, std::uint32_t n) {
  if (k == 0) throw OutOfRange("count_canonical: k must be at least 1");
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, BigInt> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find({k, n}); it != memo.end()) return it->second;
  }
  BigInt result;
  if (k == 1) {
    result = (BigInt(1) << (n + 1)) + 1;
  } else if (n <= k - 1) {
    result = count_canonical(k - 1, n) + 1;
  } else {
    const Ordinal xi{0, k - 1};
    BigInt p = 1;
    const auto lo = l_seq(xi, n);
    const auto hi = l_seq(xi, std::uint64_t{n} + 1);
    for (auto j = lo; j < hi; ++j) p *= count_canonical(k - 1, static_cast<std::uint32_t>(j));
    result = p + 1;
  }
  std::lock_guard lock(mu);
  memo.emplace(std::make_pair(k, n), result);
  return result;
}

BigInt count_canonical_AR(std::uint32_t k, std::uint32_t n) {
  if (n == 0) throw OutOfRange("count_canonical_AR: n must be at least 1");
  BigInt p = 1;
  for (std::uint32_t i = 0; i < n; ++i) p *= count_canonical(k, i);
  return p;
}

}  // namespace ramsey
