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

#include "ramsey/verify.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <set>
#include <thread>
#include <tuple>

#include "ramsey/budget.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

// Labels of `labels` restricted to idx, renumbered in order of appearance.
std::vector<int> restrict_labels(const std::vector<int>& labels, const std::vector<int>& idx) {
  std::vector<int> out;
  out.reserve(idx.size());
  std::map<int, int> renumber;
  for (int i : idx) out.push_back(renumber.try_emplace(labels[i], static_cast<int>(renumber.size())).first->second);
  return out;
}

std::vector<int> normalize(const std::vector<int>& labels) {
  std::vector<int> idx(labels.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  return restrict_labels(labels, idx);
}

// Candidate order: fewer nodes first, then lex-least index list.
void order_minimal(std::vector<DCSet>& sets) {
  std::vector<std::pair<std::pair<std::size_t, std::vector<int>>, std::size_t>> keyed;
  for (std::size_t i = 0; i < sets.size(); ++i) keyed.push_back({{sets[i].nodes.size(), dc_indices(sets[i])}, i});
  std::sort(keyed.begin(), keyed.end());
  std::vector<DCSet> out;
  out.reserve(sets.size());
  for (const auto& [key, i] : keyed) out.push_back(std::move(sets[i]));
  sets = std::move(out);
}

void require_order(bool ok, const std::string& what) {
  if (!ok) throw OutOfRange(what);
}

// Runs workers over strided items and records the least failing index.
// Returns true iff no item failed. visited grows by the items up to and
// including the first failure in item order, or by all items on success, so
// the count does not depend on the number of workers.
class FirstFailure {
 public:
  bool beyond(std::uint64_t i) const { return i > first_.load(std::memory_order_relaxed); }
  void report(std::uint64_t i) {
    std::uint64_t cur = first_.load();
    while (i < cur && !first_.compare_exchange_weak(cur, i)) {
    }
  }
  std::uint64_t first() const { return first_.load(); }

 private:
  std::atomic<std::uint64_t> first_{std::numeric_limits<std::uint64_t>::max()};
};

template <class Gen>
bool parallel_all(Gen&& make_worker, std::uint64_t& visited) {
  const unsigned jobs = std::max(1u, search_jobs().load());
  FirstFailure fail;
  std::atomic<std::uint64_t> seen{0};
  if (jobs == 1) {
    make_worker(0u, 1u, fail, seen);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] { make_worker(w, jobs, fail, seen); });
    }
    for (auto& t : pool) t.join();
  }
  const bool ok = fail.first() == std::numeric_limits<std::uint64_t>::max();
  visited += ok ? seen.load() : fail.first() + 1;
  return ok;
}

struct BlockContext {
  std::vector<RMember> domain;
  std::vector<RMember> ys;
  std::vector<std::vector<int>> sub;
  std::vector<DCSet> cands;
  // restricted[y][s]: E_{cands[s]} on sub[y], normalized.
  std::vector<std::vector<std::vector<int>>> restricted;

  BlockContext(const Ordinal& alpha, std::uint32_t n, std::uint32_t k, std::uint32_t m) {
    domain = enumerate_R(alpha, n, m);
    ys = enumerate_R(alpha, k, m);
    cands = enumerate_DC(alpha, n, k);
    order_minimal(cands);
    std::vector<std::vector<int>> labels;
    for (const auto& s : cands) labels.push_back(eq_rel_from_S(s, domain).labels());
    for (const auto& y : ys) {
      std::vector<int> idx;
      for (std::size_t i = 0; i < domain.size(); ++i) {
        if (std::includes(y.nodes.begin(), y.nodes.end(), domain[i].nodes.begin(), domain[i].nodes.end())) {
          idx.push_back(static_cast<int>(i));
        }
      }
      std::vector<std::vector<int>> per_s;
      for (const auto& l : labels) per_s.push_back(restrict_labels(l, idx));
      sub.push_back(std::move(idx));
      restricted.push_back(std::move(per_s));
    }
  }

  // (y, S) indices of the first witness for labels.
  std::optional<std::pair<std::size_t, std::size_t>> witness(const std::vector<int>& labels) const {
    for (std::size_t y = 0; y < ys.size(); ++y) {
      if (sub[y].empty()) continue;
      const auto mine = restrict_labels(labels, sub[y]);
      for (std::size_t s = 0; s < cands.size(); ++s) {
        if (restricted[y][s] == mine) return std::make_pair(y, s);
      }
    }
    return std::nullopt;
  }
};

}  // namespace

BigInt bell_number(std::size_t size) {
  std::vector<BigInt> row{1};
  for (std::size_t i = 0; i < size; ++i) {
    std::vector<BigInt> next{row.back()};
    for (const auto& x : row) next.push_back(next.back() + x);
    row = std::move(next);
  }
  return row.front();
}

std::uint64_t for_each_partition(std::size_t size, const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> rgs(size, 0);
  std::vector<int> prefix_max(size, -1);  // max of rgs[0..i-1]
  std::uint64_t visited = 0;
  while (true) {
    ++visited;
    if (!fn(rgs)) return visited;
    for (std::size_t i = 1; i < size; ++i) prefix_max[i] = std::max(prefix_max[i - 1], rgs[i - 1]);
    std::size_t i = size;
    while (i > 1 && rgs[i - 1] > prefix_max[i - 1]) --i;
    if (i <= 1) return visited;
    ++rgs[i - 1];
    std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(i), rgs.end(), 0);
  }
}

std::optional<DCSet> is_canonical_relation(const Ordinal& alpha, std::uint32_t n, std::uint32_t m,
                                           const EqRelation& rel) {
  const auto domain = enumerate_R(alpha, n, m);
  if (rel.domain != domain) throw DomainMismatch("relation domain differs from enumerate_R");
  const auto target = rel.labels();
  auto cands = enumerate_DC(alpha, n, m);
  order_minimal(cands);
  for (auto& s : cands) {
    if (eq_rel_from_S(s, domain).labels() == target) return std::move(s);
  }
  return std::nullopt;
}

std::optional<BlockWitness> canonize_block(const Ordinal& alpha, std::uint32_t n, std::uint32_t k, std::uint32_t m,
                                           const EqRelation& rel) {
  require_order(n <= k && k <= m, "canonize_block requires n <= k <= m");
  BlockContext ctx(alpha, n, k, m);
  if (rel.domain != ctx.domain) throw DomainMismatch("relation domain differs from enumerate_R");
  auto w = ctx.witness(rel.labels());
  if (!w) return std::nullopt;
  return BlockWitness{ctx.ys[w->first], ctx.cands[w->second]};
}

bool verify_block_witness(const EqRelation& rel, const BlockWitness& w) {
  if (!is_R_member(w.y.alpha, w.y.level, w.y.host, w.y.nodes)) return false;
  const auto labels = rel.labels();
  std::map<int, std::vector<TreeNode>> by_class;
  std::map<std::vector<TreeNode>, int> by_projection;
  bool any = false;
  for (std::size_t i = 0; i < rel.domain.size(); ++i) {
    const auto& u = rel.domain[i];
    if (!std::includes(w.y.nodes.begin(), w.y.nodes.end(), u.nodes.begin(), u.nodes.end())) continue;
    any = true;
    auto p = pi_S(w.S, u);
    if (auto it = by_class.find(labels[i]); it != by_class.end() && it->second != p) return false;
    if (auto it = by_projection.find(p); it != by_projection.end() && it->second != labels[i]) return false;
    by_class[labels[i]] = p;
    by_projection[p] = labels[i];
  }
  return any;
}

SearchOutcome fct_block_minimal_m(const Ordinal& alpha, std::uint32_t n, std::uint32_t k, std::uint32_t m_max) {
  require_order(n <= k && k <= m_max, "fct search requires n <= k <= m_max");
  SearchOutcome out;
  for (std::uint32_t m = k; m <= m_max; ++m) {
    const BlockContext ctx(alpha, n, k, m);
    const std::size_t size = ctx.domain.size();
    if (bell_number(size) > search_budget().load()) {
      throw Infeasible("fct search at m=" + std::to_string(m) + " needs Bell(" + std::to_string(size) +
                       ") partitions, over the search budget");
    }
    const bool ok = parallel_all(
        [&](unsigned w, unsigned jobs, FirstFailure& fail, std::atomic<std::uint64_t>& seen) {
          std::uint64_t i = 0;
          for_each_partition(size, [&](const std::vector<int>& rgs) {
            const std::uint64_t here = i++;
            if (fail.beyond(here)) return false;
            if (here % jobs != w) return true;
            seen.fetch_add(1, std::memory_order_relaxed);
            if (!ctx.witness(rgs)) {
              fail.report(here);
              return false;
            }
            return true;
          });
        },
        out.checked);
    if (ok) {
      out.m = m;
      return out;
    }
  }
  return out;
}

SearchOutcome pigeonhole_minimal_m(const Ordinal& alpha, std::uint32_t n, std::uint32_t k, std::uint32_t m_max) {
  require_order(n <= k && k <= m_max, "pigeonhole search requires n <= k <= m_max");
  SearchOutcome out;
  for (std::uint32_t m = k; m <= m_max; ++m) {
    const auto domain = enumerate_R(alpha, n, m);
    const auto ys = enumerate_R(alpha, k, m);
    const std::size_t size = domain.size();
    if (size >= 63 || (std::uint64_t{1} << size) > search_budget().load()) {
      throw Infeasible("pigeonhole search at m=" + std::to_string(m) + " needs 2^" + std::to_string(size) +
                       " colorings, over the search budget");
    }
    std::vector<std::uint64_t> masks;
    for (const auto& y : ys) {
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < size; ++i) {
        if (std::includes(y.nodes.begin(), y.nodes.end(), domain[i].nodes.begin(), domain[i].nodes.end())) {
          mask |= std::uint64_t{1} << i;
        }
      }
      masks.push_back(mask);
    }
    const std::uint64_t total = std::uint64_t{1} << size;
    const bool ok = parallel_all(
        [&](unsigned w, unsigned jobs, FirstFailure& fail, std::atomic<std::uint64_t>& seen) {
          for (std::uint64_t c = w; c < total && !fail.beyond(c); c += jobs) {
            seen.fetch_add(1, std::memory_order_relaxed);
            const bool mono = std::any_of(masks.begin(), masks.end(), [c](std::uint64_t y) {
              return y != 0 && ((c & y) == 0 || (c & y) == y);
            });
            if (!mono) {
              fail.report(c);
              return;
            }
          }
        },
        out.checked);
    if (ok) {
      out.m = m;
      return out;
    }
  }
  return out;
}

namespace {

bool blocks_below(const std::vector<RMember>& b, const std::vector<RMember>& a) {
  std::size_t k = 0;
  for (const auto& bi : b) {
    while (k < a.size() && !(a[k].host == bi.host && std::includes(a[k].nodes.begin(), a[k].nodes.end(),
                                                                     bi.nodes.begin(), bi.nodes.end()))) {
      ++k;
    }
    if (k == a.size()) return false;
    ++k;
  }
  return true;
}

// Product-relation search over blockwise candidate sets.
class ProductSearch {
 public:
  // members[b][i]: the level-i block of domain element b.
  ProductSearch(const Ordinal& alpha, std::uint32_t first_level, std::uint32_t m,
                const std::vector<std::vector<const RMember*>>& members) {
    const std::size_t width = members.empty() ? 0 : members.front().size();
    for (std::size_t i = 0; i < width; ++i) {
      const std::uint32_t level = first_level + static_cast<std::uint32_t>(i);
      auto cands = enumerate_DC(alpha, level, std::max(level, m == 0 ? 0 : m - 1));
      order_minimal(cands);
      std::vector<std::vector<int>> per_s;
      for (const auto& s : cands) {
        std::map<std::vector<TreeNode>, int> ids;
        std::vector<int> lab;
        for (const auto& row : members) {
          lab.push_back(ids.try_emplace(pi_S(s, *row[i]), static_cast<int>(ids.size())).first->second);
        }
        per_s.push_back(std::move(lab));
      }
      cands_.push_back(std::move(cands));
      labels_.push_back(std::move(per_s));
    }
  }

  // First tuple (by per-block candidate rank) whose product relation on
  // sub equals target there.
  std::optional<std::vector<DCSet>> find(const std::vector<int>& sub, const std::vector<int>& target) {
    sub_ = &sub;
    target_ = restrict_labels(target, sub);
    choice_.clear();
    std::vector<int> key(sub.size(), 0);
    visited_ = 0;
    if (!dfs(0, key)) return std::nullopt;
    std::vector<DCSet> out;
    for (std::size_t i = 0; i < choice_.size(); ++i) out.push_back(cands_[i][choice_[i]]);
    return out;
  }

 private:
  bool dfs(std::size_t i, const std::vector<int>& key) {
    charge(++visited_, "product relation search");
    if (i == cands_.size()) return normalize(key) == target_;
    for (std::size_t s = 0; s < cands_[i].size(); ++s) {
      std::map<std::pair<int, int>, int> ids;
      std::vector<int> next(key.size());
      for (std::size_t j = 0; j < key.size(); ++j) {
        next[j] = ids.try_emplace({key[j], labels_[i][s][(*sub_)[j]]}, static_cast<int>(ids.size())).first->second;
      }
      // The target must refine every partial product.
      std::map<int, int> class_key;
      bool refines = true;
      for (std::size_t j = 0; j < next.size() && refines; ++j) {
        auto [it, fresh] = class_key.try_emplace(target_[j], next[j]);
        refines = fresh || it->second == next[j];
      }
      if (!refines) continue;
      choice_.push_back(s);
      if (dfs(i + 1, next)) return true;
      choice_.pop_back();
    }
    return false;
  }

  std::vector<std::vector<DCSet>> cands_;
  std::vector<std::vector<std::vector<int>>> labels_;
  const std::vector<int>* sub_ = nullptr;
  std::vector<int> target_;
  std::vector<std::size_t> choice_;
  std::uint64_t visited_ = 0;
};

template <class Accept>
std::optional<ARWitness> search_AR(const Ordinal& alpha, std::uint32_t m, const ApproxRelation& rel,
                                   std::uint32_t k, Accept&& accept) {
  std::vector<std::vector<const RMember*>> members;
  for (const auto& b : rel.domain) {
    std::vector<const RMember*> row;
    for (const auto& r : b.blocks) row.push_back(&r);
    members.push_back(std::move(row));
  }
  ProductSearch search(alpha, 0, m, members);
  for (const auto& a : enumerate_AR(alpha, k, m)) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < rel.domain.size(); ++i) {
      if (le_fin(rel.domain[i], a)) sub.push_back(static_cast<int>(i));
    }
    if (sub.empty()) continue;
    if (auto s = search.find(sub, rel.labels)) {
      ARWitness w{a, std::move(*s)};
      if (accept(w)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ARWitness> canonize_AR(const Ordinal& alpha, std::uint32_t n, std::uint32_t m, const ApproxRelation& rel,
                                     std::optional<std::uint32_t> k) {
  require_order(n >= 1, "canonize_AR requires n >= 1");
  const std::uint32_t kk = k.value_or(n);
  require_order(kk >= n, "canonize_AR requires k >= n");
  if (rel.domain != enumerate_AR(alpha, n, m) || rel.labels.size() != rel.domain.size()) {
    throw DomainMismatch("relation domain differs from enumerate_AR");
  }
  return search_AR(alpha, m, rel, kk, [](const ARWitness&) { return true; });
}

std::vector<SegmentMember> enumerate_segments(const Ordinal& alpha, std::uint32_t n0, std::uint32_t n1,
                                              std::uint32_t m) {
  require_order(n0 < n1, "segments require n0 < n1");
  std::vector<SegmentMember> out;
  SegmentMember cur{alpha, n0, n1, {}};
  auto rec = [&](auto&& self, std::uint32_t level, std::uint32_t min_host) -> void {
    if (level == n1) {
      out.push_back(cur);
      charge(out.size(), "segment enumeration");
      return;
    }
    for (std::uint32_t h = std::max(min_host, level); h + (n1 - level) <= m; ++h) {
      for (const auto& r : enumerate_R(alpha, level, h)) {
        cur.blocks.push_back(r);
        self(self, level + 1, h + 1);
        cur.blocks.pop_back();
      }
    }
  };
  rec(rec, n0, n0);
  return out;
}

std::optional<SegmentWitness> canonize_segment(const Ordinal& alpha, std::uint32_t n0, std::uint32_t n1,
                                               std::uint32_t k0, std::uint32_t k1, std::uint32_t m,
                                               const SegmentRelation& rel) {
  require_order(n0 < n1 && k0 >= n0 && k1 >= k0 && k1 - k0 >= n1 - n0,
                "canonize_segment requires n0 < n1, k0 >= n0 and k1 - k0 >= n1 - n0");
  if (rel.domain != enumerate_segments(alpha, n0, n1, m) || rel.labels.size() != rel.domain.size()) {
    throw DomainMismatch("relation domain differs from enumerate_segments");
  }
  // Lift to approximations of length n1 that agree on the tail.
  std::map<std::vector<std::vector<TreeNode>>, int> tail_label;
  for (std::size_t i = 0; i < rel.domain.size(); ++i) {
    std::vector<std::vector<TreeNode>> key;
    for (const auto& b : rel.domain[i].blocks) key.push_back(b.nodes);
    tail_label[key] = rel.labels[i];
  }
  ApproxRelation lifted;
  lifted.domain = enumerate_AR(alpha, n1, m);
  for (const auto& a : lifted.domain) {
    std::vector<std::vector<TreeNode>> key;
    for (std::size_t i = n0; i < n1; ++i) key.push_back(a.blocks[i].nodes);
    lifted.labels.push_back(tail_label.at(key));
  }
  std::vector<std::vector<const RMember*>> seg_members;
  for (const auto& b : rel.domain) {
    std::vector<const RMember*> row;
    for (const auto& r : b.blocks) row.push_back(&r);
    seg_members.push_back(std::move(row));
  }
  std::optional<SegmentWitness> found;
  search_AR(alpha, m, lifted, k1, [&](const ARWitness& w) {
    std::vector<RMember> y(w.a.blocks.begin() + k0, w.a.blocks.begin() + k1);
    std::vector<int> sub;
    for (std::size_t i = 0; i < rel.domain.size(); ++i) {
      if (blocks_below(rel.domain[i].blocks, y)) sub.push_back(static_cast<int>(i));
    }
    if (sub.empty()) return false;
    std::vector<DCSet> S(w.S.begin() + n0, w.S.begin() + n1);
    // The segment relation below y must be the product of the tail sets.
    std::map<std::vector<std::vector<TreeNode>>, int> ids;
    std::vector<int> product;
    for (int i : sub) {
      std::vector<std::vector<TreeNode>> key;
      for (std::size_t j = 0; j < S.size(); ++j) key.push_back(pi_S(S[j], rel.domain[i].blocks[j]));
      product.push_back(ids.try_emplace(key, static_cast<int>(ids.size())).first->second);
    }
    if (normalize(product) != restrict_labels(rel.labels, sub)) return false;
    found = SegmentWitness{std::move(y), std::move(S)};
    return true;
  });
  return found;
}

namespace {

constexpr std::uint64_t kDirectSigma = 20000;
constexpr std::uint64_t kDirectTau = 3000;

bool below_cofinal(const Ordinal& gamma, const Ordinal& beta, std::uint32_t m) {
  return beta.is_limit() && limit_source(beta, m).cofinal < gamma;
}

using Reach = std::pair<std::uint32_t, std::uint32_t>;
constexpr Reach kAnyBlock{0, UINT32_MAX};

struct Cover {
  DaggerEngine engine;
  bool decomposed = false;
  std::map<std::tuple<Ordinal, std::uint32_t, bool>, Reach> reach_memo;

  // Interval of gamma-block indices met by sigma (or tau) images of block m.
  Reach reach(const Ordinal& gamma, const Ordinal& beta, std::uint32_t m, bool for_tau) {
    if (gamma == beta) return {m, m};
    if (below_cofinal(gamma, beta, m)) return for_tau ? kAnyBlock : Reach{m, m};
    const auto key = std::make_tuple(beta, m, for_tau);
    if (auto it = reach_memo.find(key); it != reach_memo.end()) return it->second;
    Reach r{UINT32_MAX, 0};
    if (beta.is_successor()) {
      for (Value j : successor_sources(beta, m)) {
        const auto sub = reach(gamma, beta.pred(), j, for_tau);
        r = {std::min(r.first, sub.first), std::max(r.second, sub.second)};
      }
    } else {
      auto src = limit_source(beta, m);
      r = reach(gamma, src.cofinal, src.source_index, for_tau);
    }
    reach_memo.emplace(key, r);
    return r;
  }

  bool may_reach(const Ordinal& gamma, const Ordinal& beta, std::uint32_t m, std::uint32_t l, bool for_tau) {
    const auto r = reach(gamma, beta, m, for_tau);
    return r.first <= l && l <= r.second;
  }

  bool direct(const Ordinal& gamma, const Ordinal& beta, std::uint32_t m, std::uint64_t limit) const {
    return engine == DaggerEngine::Direct || maximal_count(beta, m) <= limit || below_cofinal(gamma, beta, m);
  }

  // Removes sigma_{gamma,beta}(S_beta(m)) from rem (full-domain members only).
  void sigma_cover(const Ordinal& gamma, const Ordinal& beta, std::uint32_t m, std::uint32_t l,
                   std::set<SNode, LexLess>& rem, bool top) {
    if (rem.empty() || !may_reach(gamma, beta, m, l, false)) return;
    if (gamma == beta) {
      std::erase_if(rem, [m](const SNode& s) { return s.top_value() == m; });
      return;
    }
    if (direct(gamma, beta, m, kDirectSigma)) {
      for (const auto& f : *maximal_nodes(beta, m)) rem.erase(f.restrict_to(gamma));
      return;
    }
    if (top) decomposed = true;
    if (beta.is_successor()) {
      for (Value j : successor_sources(beta, m)) {
        sigma_cover(gamma, beta.pred(), j, l, rem, false);
        if (rem.empty()) return;
      }
      return;
    }
    auto src = limit_source(beta, m);
    sigma_cover(gamma, src.cofinal, src.source_index, l, rem, false);
  }

  static bool has_null(const Ordinal& beta, std::uint32_t m) {
    if (beta.is_zero()) return false;
    if (beta.is_successor()) return m <= beta.r - 1 && has_null(beta.pred(), m);
    return true;
  }

  // tau-value of the lex-greatest non-empty node of S_beta(m) with empty image.
  std::optional<TreeNode> null_top(const Ordinal& gamma, const Ordinal& beta, std::uint32_t m) const {
    if (gamma == beta) return has_null(beta, m) ? std::optional<TreeNode>(TreeNode{}) : std::nullopt;
    if (direct(gamma, beta, m, kDirectTau)) {
      auto block = build_S(beta, m);
      for (std::size_t i = block->size(); i-- > 1;) {
        if (block->images[i].empty()) return psi(gamma, sigma(gamma, beta, block->nodes[i]));
      }
      return std::nullopt;
    }
    if (beta.is_successor()) {
      if (m > beta.r - 1) return std::nullopt;
      return null_top(gamma, beta.pred(), m);
    }
    auto src = limit_source(beta, m);
    auto r = null_top(gamma, src.cofinal, src.source_index);
    return r ? r : std::optional<TreeNode>(TreeNode{});
  }

  // Removes tau(t) for non-empty t in T_beta(m).
  void tau_cover(const Ordinal& gamma, const Ordinal& beta, std::uint32_t m, std::uint32_t l, std::set<TreeNode>& rem,
                 bool top) {
    if (rem.empty()) return;
    if (gamma == beta) {
      std::erase_if(rem, [&](const TreeNode& t) { return !t.empty() && in_T(gamma, m, t); });
      return;
    }
    if (direct(gamma, beta, m, kDirectTau)) {
      for (const auto& [t, x] : tau_table(gamma, beta, m)) {
        if (!t.empty()) rem.erase(x);
      }
      return;
    }
    if (top) decomposed = true;
    if (beta.is_successor()) {
      if (m <= beta.r - 1) {
        if (may_reach(gamma, beta.pred(), m, l, true)) tau_cover(gamma, beta.pred(), m, l, rem, false);
        return;
      }
      const auto sources = successor_sources(beta, m);
      TreeNode head;  // tau(<m>)
      for (auto it = sources.rbegin(); it != sources.rend(); ++it) {
        if (has_null(beta.pred(), *it)) {
          head = *null_top(gamma, beta.pred(), *it);
          break;
        }
      }
      rem.erase(head);
      for (Value j : sources) {
        if (may_reach(gamma, beta.pred(), j, l, true)) tau_cover(gamma, beta.pred(), j, l, rem, false);
        if (rem.empty()) return;
      }
      return;
    }
    auto src = limit_source(beta, m);
    if (may_reach(gamma, src.cofinal, src.source_index, l, true)) {
      tau_cover(gamma, src.cofinal, src.source_index, l, rem, false);
    }
  }

  bool dagger(const Ordinal& gamma, const Ordinal& beta, std::uint32_t l, std::uint32_t m) {
    auto maxes = maximal_nodes(gamma, l);
    std::set<SNode, LexLess> rem(maxes->begin(), maxes->end());
    sigma_cover(gamma, beta, m, l, rem, true);
    return rem.empty();
  }

  bool ddagger(const Ordinal& gamma, const Ordinal& beta, std::uint32_t l, std::uint32_t m) {
    auto tree = build_T(gamma, l);
    std::set<TreeNode> rem(tree->nodes.begin(), tree->nodes.end());
    if (direct(gamma, beta, m, kDirectTau)) {
      for (const auto& x : tau_image(gamma, beta, m)) rem.erase(x);
      return rem.empty();
    }
    rem.erase(TreeNode{});
    tau_cover(gamma, beta, m, l, rem, true);
    return rem.empty();
  }
};

DaggerRow dagger_row(const Ordinal& gamma, const Ordinal& beta, std::uint32_t l, std::uint32_t m_max,
                     DaggerEngine engine) {
  DaggerRow row;
  row.l = l;
  if (gamma == beta) {
    if (l <= m_max) row.m_dagger = row.m_ddagger = l;
    row.method = "identity";
    return row;
  }
  Cover cover{engine, false, {}};
  for (std::uint32_t m = 0; m <= m_max && !(row.m_dagger && row.m_ddagger); ++m) {
    if (!row.m_dagger && cover.dagger(gamma, beta, l, m)) row.m_dagger = m;
    if (!row.m_ddagger && cover.ddagger(gamma, beta, l, m)) row.m_ddagger = m;
  }
  row.method = cover.decomposed ? "decomposed" : "direct";
  return row;
}

void require_pair(const Ordinal& gamma, const Ordinal& beta) {
  if (beta < gamma) throw OutOfRange("gamma must not exceed beta");
}

}  // namespace

DaggerReport check_dagger(const Ordinal& gamma, const Ordinal& beta, std::uint32_t l_lo, std::uint32_t l_hi,
                          std::uint32_t m_max, DaggerEngine engine) {
  require_pair(gamma, beta);
  DaggerReport rep{gamma, beta, {}, std::nullopt, false};
  std::optional<std::uint32_t> run_start;
  for (std::uint32_t l = l_lo; l <= l_hi; ++l) {
    rep.rows.push_back(dagger_row(gamma, beta, l, m_max, engine));
    const bool ok = rep.rows.back().m_dagger && rep.rows.back().m_ddagger;
    if (!ok) {
      rep.violation = true;
      run_start.reset();
    } else if (!run_start) {
      run_start = l;
    }
  }
  rep.threshold = run_start;
  return rep;
}

DaggerReport dagger_threshold(const Ordinal& gamma, const Ordinal& beta, std::uint32_t width, std::uint32_t k_max,
                              std::uint32_t m_max, DaggerEngine engine) {
  require_pair(gamma, beta);
  std::map<std::uint32_t, DaggerRow> memo;
  DaggerReport rep{gamma, beta, {}, std::nullopt, true};
  for (std::uint32_t k = 0; k <= k_max; ++k) {
    rep.rows.clear();
    bool ok = true;
    for (std::uint32_t l = k; l < k + width; ++l) {
      auto it = memo.find(l);
      if (it == memo.end()) it = memo.emplace(l, dagger_row(gamma, beta, l, m_max, engine)).first;
      rep.rows.push_back(it->second);
      ok = ok && it->second.m_dagger && it->second.m_ddagger;
      if (!ok) break;
    }
    if (ok) {
      rep.threshold = k;
      rep.violation = false;
      return rep;
    }
  }
  return rep;
}

CoherenceReport check_coherence(const Ordinal& gamma, const Ordinal& beta, std::uint32_t n) {
  require_pair(gamma, beta);
  auto block = build_S(beta, n);
  const auto table = tau_table(gamma, beta, n);
  CoherenceReport rep;
  for (std::size_t i = 0; i < block->size(); ++i) {
    const bool top = i + 1 == block->size() || std::find(block->images.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                                         block->images.end(),
                                                         block->images[i]) == block->images.end();
    bool ok = false;
    try {
      ok = psi(gamma, sigma(gamma, beta, block->nodes[i])) == table.at(block->images[i]);
    } catch (const NotAMember&) {
      ok = false;
    }
    ++rep.nodes;
    rep.violations += ok ? 0 : 1;
    if (top) {
      ++rep.fibre_top_nodes;
      rep.fibre_top_violations += ok ? 0 : 1;
    }
  }
  return rep;
}

DistinctnessReport check_distinctness(const Ordinal& alpha, std::uint32_t n, std::uint32_t m_max) {
  const auto sets = enumerate_DC_full(alpha, n);
  DistinctnessReport rep;
  rep.sets = sets.size();
  rep.pairs = rep.sets * (rep.sets - 1) / 2;
  // Classes of still-inseparable sets, refined host by host.
  std::vector<std::vector<std::size_t>> classes{{}};
  for (std::size_t i = 0; i < sets.size(); ++i) classes[0].push_back(i);
  std::vector<std::map<std::vector<TreeNode>, int>> seen(sets.size());
  std::vector<std::vector<int>> labels(sets.size());
  for (std::uint32_t m = n; m <= m_max; ++m) {
    std::erase_if(classes, [](const auto& c) { return c.size() < 2; });
    if (classes.empty()) break;
    rep.deepest_m = m;
    const auto domain = enumerate_R(alpha, n, m);
    std::vector<std::vector<std::size_t>> next;
    for (const auto& c : classes) {
      std::map<std::vector<int>, std::vector<std::size_t>> split;
      for (std::size_t s : c) {
        for (const auto& u : domain) {
          auto p = pi_S(sets[s], u);
          labels[s].push_back(seen[s].try_emplace(std::move(p), static_cast<int>(seen[s].size())).first->second);
        }
        split[labels[s]].push_back(s);
      }
      for (auto& [key, group] : split) next.push_back(std::move(group));
    }
    classes = std::move(next);
  }
  std::erase_if(classes, [](const auto& c) { return c.size() < 2; });
  for (const auto& c : classes) rep.unseparated += c.size() * (c.size() - 1) / 2;
  return rep;
}

}  // namespace ramsey
