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

#include "ramsey/structures.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <utility>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

std::atomic<std::size_t> g_block_budget{4'000'000};

template <class V>
class BlockCache {
 public:
  using Key = std::pair<Ordinal, std::uint32_t>;

  template <class Make>
  std::shared_ptr<const V> get(const Key& key, Make make) {
    {
      std::shared_lock lock(mu_);
      if (auto it = map_.find(key); it != map_.end()) return it->second;
    }
    auto value = std::make_shared<const V>(make());
    std::unique_lock lock(mu_);
    return map_.try_emplace(key, std::move(value)).first->second;
  }

 private:
  std::shared_mutex mu_;
  std::map<Key, std::shared_ptr<const V>> map_;
};

BlockCache<TreeBlock>& tree_cache() {
  static BlockCache<TreeBlock> c;
  return c;
}
BlockCache<std::vector<SNode>>& maximal_cache() {
  static BlockCache<std::vector<SNode>> c;
  return c;
}
BlockCache<SBlock>& sblock_cache() {
  static BlockCache<SBlock> c;
  return c;
}

void check_budget(std::size_t count, const Ordinal& alpha, std::uint32_t n) {
  if (count > g_block_budget.load()) {
    throw Infeasible("block " + to_string(alpha) + "(" + std::to_string(n) + ") exceeds the block budget of " +
                     std::to_string(g_block_budget.load()) + " nodes");
  }
}

Value to_value(std::uint64_t v) {
  if (v > std::numeric_limits<Value>::max()) throw OutOfRange("value does not fit a node entry");
  return static_cast<Value>(v);
}

// [lo, hi) of S_{alpha-1} block indices feeding S_alpha(n), alpha a successor.
std::pair<std::uint64_t, std::uint64_t> source_range(const Ordinal& alpha, std::uint32_t n) {
  const std::uint32_t k = alpha.r - 1;
  if (n <= k) return {n, std::uint64_t{n} + 1};
  const Ordinal xi = alpha.pred();
  return {l_seq(xi, n), l_seq(xi, std::uint64_t{n} + 1)};
}

// Block containment T_gamma(q) within tau(T_{gamma+1}(m)).
bool contained_in_successor(const Ordinal& gamma, std::uint64_t q, std::uint64_t m) {
  const std::uint64_t k = gamma.r;
  if (m <= k) return q == m;
  return l_seq(gamma, m) <= q && q < l_seq(gamma, m + 1);
}

std::uint64_t least_host(const Ordinal& gamma, std::uint64_t q) {
  for (std::uint64_t m = 0;; ++m) {
    if (contained_in_successor(gamma, q, m)) return m;
    if (m > gamma.r && l_seq(gamma, m) > q) throw Error("limit stage: no host block");
  }
}

std::uint64_t largest_guest(const Ordinal& gamma, std::uint64_t m) {
  if (m <= gamma.r) return m;
  return l_seq(gamma, m + 1) - 1;
}

void require_below_limit(const Ordinal& alpha) {
  if (!alpha.is_limit()) throw NotALimit(to_string(alpha) + " is not a limit ordinal");
}

}  // namespace

void set_block_budget(std::size_t max_maximal_nodes) { g_block_budget.store(max_maximal_nodes); }
std::size_t block_budget() { return g_block_budget.load(); }

bool TreeBlock::contains(const TreeNode& t) const {
  return std::binary_search(nodes.begin(), nodes.end(), t);
}

std::vector<TreeNode> TreeBlock::leaves() const {
  std::vector<TreeNode> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const bool has_child = i + 1 < nodes.size() && nodes[i + 1].size() > nodes[i].size() &&
                           std::equal(nodes[i].begin(), nodes[i].end(), nodes[i + 1].begin());
    if (!has_child) out.push_back(nodes[i]);
  }
  return out;
}

int SBlock::find(const SNode& s) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), s, LexLess{});
  if (it == nodes.end() || !(*it == s)) return -1;
  return static_cast<int>(it - nodes.begin());
}

std::uint64_t l_seq(const Ordinal& xi, std::uint64_t n) {
  const std::uint64_t k = xi.r;
  if (n <= k + 1) return n;
  std::uint64_t l = k + 1;
  for (std::uint64_t j = k + 1; j < n; ++j) {
    l = l + (j + 1) - k;
    if (l > std::numeric_limits<Value>::max()) throw OutOfRange("l_seq overflow");
  }
  return l;
}

std::vector<Value> successor_sources(const Ordinal& alpha, std::uint32_t n) {
  if (!alpha.is_successor()) throw Error(to_string(alpha) + " is not a successor ordinal");
  auto [lo, hi] = source_range(alpha, n);
  std::vector<Value> out;
  for (auto j = lo; j < hi; ++j) out.push_back(to_value(j));
  return out;
}

std::vector<StageRecord> limit_stages(const Ordinal& alpha, std::uint32_t stages) {
  require_below_limit(alpha);
  std::vector<StageRecord> out;
  std::uint64_t prev_m = 0;
  std::uint64_t prev_p = 0;
  for (std::uint32_t n = 0; n < stages; ++n) {
    const Ordinal c = cofinal_map(alpha, n);
    // At an immediate-successor pair every q >= 0 has a host block, so the
    // least admissible k is the least candidate.
    const std::uint64_t k = n == 0 ? 0 : prev_m + 1;
    const std::uint64_t m = least_host(c, k);
    const std::uint64_t l = largest_guest(c, m);
    const std::uint64_t p = n == 0 ? l : prev_p + l - prev_m;
    if (n > 0 && p <= prev_p) throw Error("limit stage " + std::to_string(n) + " adds no blocks");
    out.push_back({n, to_value(k), to_value(m), to_value(l), to_value(p)});
    prev_m = m;
    prev_p = p;
  }
  return out;
}

LimitSource limit_source(const Ordinal& alpha, std::uint32_t i) {
  require_below_limit(alpha);
  std::uint32_t stages = 1;
  for (;; stages *= 2) {
    auto table = limit_stages(alpha, stages);
    if (table.back().p < i) continue;
    for (const auto& row : table) {
      if (i > row.p) continue;
      if (row.n == 0) return {0, cofinal_map(alpha, 0), i};
      const auto& before = table[row.n - 1];
      return {row.n, cofinal_map(alpha, row.n), before.m + i - before.p};
    }
  }
}

std::shared_ptr<const TreeBlock> build_T(const Ordinal& alpha, std::uint32_t n) {
  return tree_cache().get({alpha, n}, [&] {
    TreeBlock b{alpha, n, {}};
    if (alpha.is_zero()) {
      b.nodes = {TreeNode{}, TreeNode{n}};
    } else if (alpha.is_successor()) {
      const std::uint32_t k = alpha.r - 1;
      if (n <= k) {
        b.nodes = build_T(alpha.pred(), n)->nodes;
      } else {
        b.nodes.push_back({});
        for (Value j : successor_sources(alpha, n)) {
          auto sub = build_T(alpha.pred(), j);
          for (const auto& t : sub->nodes) {
            TreeNode x;
            x.reserve(t.size() + 1);
            x.push_back(n);
            x.insert(x.end(), t.begin(), t.end());
            b.nodes.push_back(std::move(x));
          }
          check_budget(b.nodes.size(), alpha, n);
        }
        std::sort(b.nodes.begin(), b.nodes.end());
        b.nodes.erase(std::unique(b.nodes.begin(), b.nodes.end()), b.nodes.end());
      }
    } else {
      auto src = limit_source(alpha, n);
      b.nodes = build_T(src.cofinal, src.source_index)->nodes;
    }
    return b;
  });
}

std::shared_ptr<const std::vector<SNode>> maximal_nodes(const Ordinal& alpha, std::uint32_t n) {
  return maximal_cache().get({alpha, n}, [&] {
    std::vector<SNode> out;
    if (alpha.is_zero()) {
      out.push_back(SNode::point(0, n));
    } else if (alpha.is_successor()) {
      for (Value j : successor_sources(alpha, n)) {
        auto sub = maximal_nodes(alpha.pred(), j);
        check_budget(out.size() + sub->size(), alpha, n);
        for (const auto& g : *sub) out.push_back(g.extended(alpha, alpha, n));
      }
    } else {
      auto src = limit_source(alpha, n);
      auto sub = maximal_nodes(src.cofinal, src.source_index);
      for (const auto& h : *sub) out.push_back(h.extended(src.cofinal.succ(), alpha, n));
    }
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
  });
}

std::uint64_t maximal_count(const Ordinal& alpha, std::uint32_t n) {
  static std::mutex mu;
  static std::map<std::pair<Ordinal, std::uint32_t>, std::uint64_t> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find({alpha, n}); it != memo.end()) return it->second;
  }
  std::uint64_t total = 0;
  if (alpha.is_zero()) {
    total = 1;
  } else if (alpha.is_successor()) {
    for (Value j : successor_sources(alpha, n)) {
      const auto c = maximal_count(alpha.pred(), j);
      total = c > UINT64_MAX - total ? UINT64_MAX : total + c;
    }
  } else {
    auto src = limit_source(alpha, n);
    total = maximal_count(src.cofinal, src.source_index);
  }
  std::lock_guard lock(mu);
  memo.emplace(std::make_pair(alpha, n), total);
  return total;
}

namespace {

// Domain minima at which a full-domain node is restricted when materializing.
std::vector<Ordinal> restriction_points(const Ordinal& alpha, const SNode& f) {
  std::vector<Ordinal> pts;
  for (std::uint32_t level = 0; level <= alpha.q; ++level) {
    std::uint32_t reach = 0;
    if (level == alpha.q) {
      reach = alpha.r;
    } else {
      for (const auto& seg : f.segments()) {
        if (seg.lo.q == level) reach = std::max(reach, seg.lo.r);
        if (seg.hi.q == level) reach = std::max(reach, seg.hi.r);
      }
      reach += 2;
    }
    for (std::uint32_t r = 0; r <= reach; ++r) pts.push_back({level, r});
  }
  return pts;
}

}  // namespace

std::vector<int> restriction_parents(std::span<const SNode> sorted) {
  std::vector<int> parent(sorted.size(), -1);
  std::vector<int> stack;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    while (!stack.empty() && !sorted[stack.back()].proper_subset_of(sorted[i])) stack.pop_back();
    parent[i] = stack.empty() ? -1 : stack.back();
    stack.push_back(static_cast<int>(i));
  }
  return parent;
}

namespace {

TreeNode psi_unchecked(const Ordinal& alpha, const SNode& s) {
  if (s.empty()) return {};
  if (alpha.is_zero()) return {s.top_value()};
  const Value n = s.top_value();
  if (alpha.is_successor()) {
    if (s.domain_min() == alpha) return {n};
    TreeNode below = psi_unchecked(alpha.pred(), s.restrict_to(alpha.pred()));
    if (n <= alpha.r - 1) return below;
    below.insert(below.begin(), n);
    return below;
  }
  auto src = limit_source(alpha, n);
  return psi_unchecked(src.cofinal, s.restrict_to(src.cofinal));
}

}  // namespace

std::shared_ptr<const SBlock> build_S(const Ordinal& alpha, std::uint32_t n) {
  return sblock_cache().get({alpha, n}, [&] {
    SBlock b;
    b.alpha = alpha;
    b.index = n;
    b.truncated = !alpha.is_finite();
    auto maxes = maximal_nodes(alpha, n);
    b.nodes.push_back(SNode{});
    for (const auto& f : *maxes) {
      for (const auto& beta : restriction_points(alpha, f)) b.nodes.push_back(f.restrict_from(beta));
      check_budget(b.nodes.size() / 8, alpha, n);
    }
    std::sort(b.nodes.begin(), b.nodes.end(), LexLess{});
    b.nodes.erase(std::unique(b.nodes.begin(), b.nodes.end()), b.nodes.end());
    b.parent = restriction_parents(b.nodes);
    b.children.assign(b.nodes.size(), {});
    for (std::size_t i = 0; i < b.nodes.size(); ++i) {
      if (b.parent[i] >= 0) b.children[b.parent[i]].push_back(static_cast<int>(i));
    }
    b.images.reserve(b.nodes.size());
    for (const auto& s : b.nodes) b.images.push_back(psi_unchecked(alpha, s));
    return b;
  });
}

bool is_member(const Ordinal& alpha, const SNode& s) {
  if (s.empty()) return true;
  if (s.top() != alpha) return false;
  if (alpha.is_zero()) return s.segments().size() == 1;
  const Value n = s.top_value();
  if (alpha.is_successor()) {
    if (s.domain_min() == alpha) return true;
    const SNode below = s.restrict_to(alpha.pred());
    auto [lo, hi] = source_range(alpha, n);
    const Value j = below.top_value();
    return lo <= j && j < hi && is_member(alpha.pred(), below);
  }
  auto src = limit_source(alpha, n);
  const Ordinal run_start = std::max(s.domain_min(), src.cofinal.succ());
  if (run_start <= alpha && s.segments().back().lo > run_start) return false;
  if (src.cofinal < s.domain_min()) return true;
  const SNode below = s.restrict_to(src.cofinal);
  return below.top_value() == src.source_index && is_member(src.cofinal, below);
}

TreeNode psi(const Ordinal& alpha, const SNode& s) {
  if (!is_member(alpha, s)) throw NotAMember("psi: node is not a member of S_" + to_string(alpha));
  return psi_unchecked(alpha, s);
}

SNode sigma(const Ordinal& gamma, const Ordinal& beta, const SNode& s) {
  if (beta < gamma) throw OutOfRange("sigma: gamma must not exceed beta");
  return s.restrict_to(gamma);
}

TreeNode tau(const Ordinal& gamma, const Ordinal& beta, std::uint32_t n, const TreeNode& t) {
  if (beta < gamma) throw OutOfRange("tau: gamma must not exceed beta");
  auto block = build_S(beta, n);
  int best = -1;
  for (std::size_t i = 0; i < block->size(); ++i) {
    if (block->images[i] == t) best = static_cast<int>(i);
  }
  if (best < 0) throw NotAMember("tau: node is not in T_" + to_string(beta) + "(" + std::to_string(n) + ")");
  if (t.empty()) return {};
  return psi(gamma, sigma(gamma, beta, block->nodes[best]));
}

TreeNode tau(const Ordinal& gamma, const Ordinal& beta, const TreeNode& t) {
  if (t.empty()) return tau(gamma, beta, 0, t);
  for (std::uint32_t n = 0; n <= t.front() + 1; ++n) {
    if (build_T(beta, n)->contains(t)) return tau(gamma, beta, n, t);
  }
  throw NotAMember("tau: node is not in T_" + to_string(beta));
}

std::map<TreeNode, TreeNode> tau_table(const Ordinal& gamma, const Ordinal& beta, std::uint32_t n) {
  if (beta < gamma) throw OutOfRange("tau: gamma must not exceed beta");
  auto block = build_S(beta, n);
  std::map<TreeNode, int> top_of_fibre;
  for (std::size_t i = 0; i < block->size(); ++i) top_of_fibre[block->images[i]] = static_cast<int>(i);
  std::map<TreeNode, TreeNode> out;
  for (const auto& [t, i] : top_of_fibre) {
    out.emplace(t, t.empty() ? TreeNode{} : psi(gamma, sigma(gamma, beta, block->nodes[i])));
  }
  return out;
}

std::vector<TreeNode> tau_image(const Ordinal& gamma, const Ordinal& beta, std::uint32_t n) {
  std::vector<TreeNode> out;
  for (const auto& [t, x] : tau_table(gamma, beta, n)) out.push_back(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool in_T(const Ordinal& alpha, std::uint32_t n, const TreeNode& t) {
  if (t.empty()) return true;
  if (alpha.is_zero()) return t.size() == 1 && t[0] == n;
  if (alpha.is_successor()) {
    if (n <= alpha.r - 1) return in_T(alpha.pred(), n, t);
    if (t[0] != n) return false;
    if (t.size() == 1) return true;
    auto [lo, hi] = source_range(alpha, n);
    if (t[1] < lo || t[1] >= hi) return false;
    return in_T(alpha.pred(), t[1], TreeNode(t.begin() + 1, t.end()));
  }
  auto src = limit_source(alpha, n);
  return in_T(src.cofinal, src.source_index, t);
}

std::vector<SNode> splitting_nodes(const SBlock& block) {
  std::vector<SNode> out;
  for (std::size_t i = 0; i < block.size(); ++i) {
    const SNode& s = block.nodes[i];
    if (s.empty() || !s.domain_min().is_successor()) continue;
    const Ordinal below = s.domain_min().pred();
    int wide = 0;
    for (int c : block.children[i]) {
      if (block.nodes[c].domain_min() == below) ++wide;
    }
    if (wide >= 2) out.push_back(s);
  }
  return out;
}

bool s_iso(std::span<const SNode> a, std::span<const SNode> b) {
  if (a.size() != b.size()) return false;
  std::vector<SNode> x(a.begin(), a.end());
  std::vector<SNode> y(b.begin(), b.end());
  std::sort(x.begin(), x.end(), LexLess{});
  std::sort(y.begin(), y.end(), LexLess{});
  return restriction_parents(x) == restriction_parents(y);
}

std::vector<int> psi_preimage(const SBlock& host, std::span<const TreeNode> u) {
  std::vector<TreeNode> sorted(u.begin(), u.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (std::size_t i = 0; i < host.size(); ++i) {
    if (std::binary_search(sorted.begin(), sorted.end(), host.images[i])) out.push_back(static_cast<int>(i));
  }
  return out;
}

}  // namespace ramsey
