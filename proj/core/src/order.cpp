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

#include "ramsey/order.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

std::vector<SNode> sorted_nodes(const DCSet& s) {
  auto nodes = s.nodes;
  std::sort(nodes.begin(), nodes.end(), LexLess{});
  return nodes;
}

std::shared_mutex g_embed_mu;
std::map<std::pair<std::vector<int>, std::vector<int>>, bool> g_embed_memo;

}  // namespace

std::string to_string(RK r) {
  switch (r) {
    case RK::BELOW:
      return "BELOW";
    case RK::ABOVE:
      return "ABOVE";
    case RK::ISOMORPHIC:
      return "ISOMORPHIC";
    case RK::INCOMPARABLE:
      return "INCOMPARABLE";
  }
  return "?";
}

std::string to_string(const TukeyClass& c) { return c.principal ? "PRINCIPAL" : to_string(c.beta); }

bool embeds(const DCSet& s, const DCSet& t) {
  if (!(s.alpha == t.alpha)) throw LevelMismatch("embeds: sets over different alpha");
  auto key = std::make_pair(dc_shape(s), dc_shape(t));
  {
    std::shared_lock lock(g_embed_mu);
    if (auto it = g_embed_memo.find(key); it != g_embed_memo.end()) return it->second;
  }
  const SBlock a = as_block(s.alpha, sorted_nodes(s));
  const SBlock b = as_block(t.alpha, sorted_nodes(t));
  const bool result = a.size() <= b.size() && !s_embeddings(a, b, 1).empty();
  std::unique_lock lock(g_embed_mu);
  g_embed_memo.emplace(std::move(key), result);
  return result;
}

bool dc_iso(const DCSet& s, const DCSet& t) { return embeds(s, t) && embeds(t, s); }

TukeyClass tukey_class(const Ordinal& alpha, const DCSet& s) {
  if (!alpha.is_finite()) throw Unsupported("tukey_class is only available for finite alpha");
  if (s.nodes.size() <= 1) return {true, {}};
  for (std::uint32_t b = 0; b <= alpha.r; ++b) {
    if (embeds(chain_S_beta(alpha, b), s)) return {false, b};
  }
  return {false, alpha};
}

RK rk_compare(const DCSet& s, const DCSet& t) {
  const bool up = embeds(s, t);
  const bool down = embeds(t, s);
  if (up && down) return RK::ISOMORPHIC;
  if (up) return RK::BELOW;
  if (down) return RK::ABOVE;
  return RK::INCOMPARABLE;
}

HasseDiagram rk_hasse(const Ordinal& alpha, std::uint32_t n, std::uint32_t m) {
  if (m < n) throw OutOfRange("rk_hasse: m must be at least n");
  HasseDiagram h;
  for (auto& s : enumerate_DC(alpha, n, m)) {
    auto it = std::find_if(h.vertices.begin(), h.vertices.end(), [&](const DCSet& v) { return dc_iso(v, s); });
    if (it == h.vertices.end()) {
      h.vertices.push_back(std::move(s));
      h.class_sizes.push_back(1);
    } else {
      ++h.class_sizes[it - h.vertices.begin()];
    }
  }
  const std::size_t size = h.vertices.size();
  std::vector<std::vector<bool>> below(size, std::vector<bool>(size, false));
  for (std::size_t i = 0; i < size; ++i) {
    h.tukey.push_back(tukey_class(alpha, h.vertices[i]));
    for (std::size_t j = 0; j < size; ++j) {
      below[i][j] = i != j && embeds(h.vertices[i], h.vertices[j]);
    }
  }
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (!below[i][j]) continue;
      bool covered = true;
      for (std::size_t k = 0; k < size && covered; ++k) covered = !(below[i][k] && below[k][j]);
      if (covered) h.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return h;
}

}  // namespace ramsey
