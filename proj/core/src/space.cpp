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

#include "ramsey/space.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <tuple>

#include "ramsey/budget.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

void require_finite(const Ordinal& alpha, const char* what) {
  if (!alpha.is_finite()) throw Unsupported(std::string(what) + " is only available for finite alpha");
}

// Previous sibling of each node (-1 if first child).
std::vector<int> previous_siblings(const SBlock& b) {
  std::vector<int> prev(b.size(), -1);
  for (const auto& kids : b.children) {
    for (std::size_t i = 1; i < kids.size(); ++i) prev[kids[i]] = kids[i - 1];
  }
  return prev;
}

struct EmbeddingSearch {
  const SBlock& src;
  const SBlock& dst;
  std::vector<int> prev;
  std::vector<int> img;
  std::vector<std::vector<int>> out;
  std::uint64_t visited = 0;
  std::size_t limit;

  void run(std::size_t i) {
    if (out.size() >= limit) return;
    if (i == src.size()) {
      out.push_back(img);
      charge(out.size(), "embedding enumeration");
      return;
    }
    charge(++visited, "embedding search");
    const int p = src.parent[i];
    const int after = prev[i] < 0 ? -1 : img[prev[i]];
    for (int c : dst.children[img[p]]) {
      if (c <= after) continue;
      img[i] = c;
      run(i + 1);
    }
  }
};

using RKey = std::tuple<Ordinal, std::uint32_t, std::uint32_t>;

std::shared_mutex g_r_mu;
std::map<RKey, std::vector<RMember>> g_r_cache;

}  // namespace

std::vector<std::vector<int>> s_embeddings(const SBlock& source, const SBlock& target, std::size_t limit) {
  EmbeddingSearch search{source, target, previous_siblings(source), std::vector<int>(source.size(), 0), {}, 0, limit};
  if (source.size() == 0 || target.size() == 0) return {};
  search.run(1);
  return std::move(search.out);
}

SBlock as_block(const Ordinal& alpha, std::vector<SNode> sorted_nodes) {
  SBlock b;
  b.alpha = alpha;
  b.nodes = std::move(sorted_nodes);
  b.parent = restriction_parents(b.nodes);
  b.children.assign(b.nodes.size(), {});
  for (std::size_t i = 0; i < b.nodes.size(); ++i) {
    if (b.parent[i] >= 0) b.children[b.parent[i]].push_back(static_cast<int>(i));
  }
  return b;
}

bool is_R_member(const Ordinal& alpha, std::uint32_t n, std::uint32_t m, const std::vector<TreeNode>& u) {
  auto host_tree = build_T(alpha, m);
  for (const auto& t : u) {
    if (!host_tree->contains(t)) throw HostMismatch("node is not in T_" + to_string(alpha) + "(" + std::to_string(m) + ")");
  }
  auto host = build_S(alpha, m);
  auto level = build_S(alpha, n);
  std::vector<SNode> pre;
  for (int i : psi_preimage(*host, u)) pre.push_back(host->nodes[i]);
  return s_iso(pre, level->nodes);
}

std::vector<RMember> enumerate_R(const Ordinal& alpha, std::uint32_t n, std::uint32_t m) {
  require_finite(alpha, "enumerate_R");
  const RKey key{alpha, n, m};
  {
    std::shared_lock lock(g_r_mu);
    if (auto it = g_r_cache.find(key); it != g_r_cache.end()) return it->second;
  }
  auto src = build_S(alpha, n);
  auto dst = build_S(alpha, m);
  auto tree = build_T(alpha, m);
  // Tree index of psi of each host node.
  std::vector<int> image_of(dst->size());
  for (std::size_t i = 0; i < dst->size(); ++i) {
    image_of[i] = static_cast<int>(std::lower_bound(tree->nodes.begin(), tree->nodes.end(), dst->images[i]) -
                                   tree->nodes.begin());
  }
  std::set<std::vector<int>> found;
  std::vector<char> in_u(tree->nodes.size());
  std::vector<int> pos(dst->size());
  for (const auto& img : s_embeddings(*src, *dst)) {
    std::vector<int> u;
    u.reserve(img.size());
    for (int i : img) u.push_back(image_of[i]);
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    if (found.count(u)) continue;
    // psi^{-1}(u) must be an isomorphic copy of the source block.
    std::fill(in_u.begin(), in_u.end(), 0);
    for (int t : u) in_u[t] = 1;
    std::fill(pos.begin(), pos.end(), -1);
    std::size_t count = 0;
    bool iso = true;
    for (std::size_t i = 0; i < dst->size() && iso; ++i) {
      if (!in_u[image_of[i]]) continue;
      if (count == src->size()) {
        iso = false;
        break;
      }
      int a = dst->parent[i];
      while (a >= 0 && pos[a] < 0) a = dst->parent[a];
      iso = (a < 0 ? -1 : pos[a]) == src->parent[count];
      pos[i] = static_cast<int>(count++);
    }
    if (iso && count == src->size()) found.insert(std::move(u));
  }
  std::vector<RMember> out;
  out.reserve(found.size());
  for (const auto& u : found) {
    RMember r{alpha, n, m, {}};
    r.nodes.reserve(u.size());
    for (int t : u) r.nodes.push_back(tree->nodes[t]);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  std::unique_lock lock(g_r_mu);
  return g_r_cache.try_emplace(key, std::move(out)).first->second;
}

std::vector<FiniteApprox> enumerate_AR(const Ordinal& alpha, std::uint32_t n, std::uint32_t m) {
  require_finite(alpha, "enumerate_AR");
  std::vector<FiniteApprox> out;
  FiniteApprox cur{alpha, n, {}};
  std::uint64_t visited = 0;
  auto rec = [&](auto&& self, std::uint32_t level, std::uint32_t min_host) -> void {
    if (level == n) {
      out.push_back(cur);
      charge(out.size(), "approximation enumeration");
      return;
    }
    for (std::uint32_t h = std::max(min_host, level); h + (n - level) <= m; ++h) {
      for (const auto& r : enumerate_R(alpha, level, h)) {
        charge(++visited, "approximation search");
        cur.blocks.push_back(r);
        self(self, level + 1, h + 1);
        cur.blocks.pop_back();
      }
    }
  };
  rec(rec, 0, 0);
  return out;
}

bool le_fin(const FiniteApprox& b, const FiniteApprox& a) {
  if (!(a.alpha == b.alpha)) throw LevelMismatch("le_fin: approximations over different alpha");
  std::size_t k = 0;
  for (const auto& bi : b.blocks) {
    while (k < a.blocks.size() &&
           !(a.blocks[k].host == bi.host &&
             std::includes(a.blocks[k].nodes.begin(), a.blocks[k].nodes.end(), bi.nodes.begin(), bi.nodes.end()))) {
      ++k;
    }
    if (k == a.blocks.size()) return false;
    ++k;
  }
  return true;
}

}  // namespace ramsey
