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

#include "ramsey/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad field '") + key + "': " + e.what());
  }
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

void check_schema(const Json& j) {
  if (j.contains("schema") && j.at("schema") != kSchema) throw ParseError("unsupported schema");
}

Json tree_node_json(const TreeNode& t) {
  Json a = Json::array();
  for (auto v : t) a.push_back(v);
  return a;
}

TreeNode tree_node_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("tree node must be an array");
  TreeNode t;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw ParseError("tree node entries must be naturals");
    t.push_back(v.get<Value>());
  }
  return t;
}

}  // namespace

Json to_json(const Ordinal& a) { return Json::array({a.q, a.r}); }

Ordinal ordinal_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_number_unsigned()) {
    throw ParseError("ordinal must be [q, r]");
  }
  return Ordinal(j[0].get<std::uint32_t>(), j[1].get<std::uint32_t>());
}

Json to_json(const SNode& s) {
  Json j;
  j["domain_min"] = s.empty() ? Json(nullptr) : to_json(s.domain_min());
  Json segs = Json::array();
  for (const auto& g : s.segments()) {
    segs.push_back({{"lo", to_json(g.lo)}, {"hi", to_json(g.hi)}, {"value", g.value}});
  }
  j["segments"] = std::move(segs);
  return j;
}

SNode snode_from_json(const Json& j) {
  std::vector<Segment> segs;
  for (const auto& g : member(j, "segments")) {
    segs.push_back({ordinal_from_json(member(g, "lo")), ordinal_from_json(member(g, "hi")), field<Value>(g, "value")});
  }
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (segs[i].hi < segs[i].lo) throw ParseError("segment with hi < lo");
    if (i > 0 && !(segs[i].lo == Ordinal(segs[i - 1].hi.q, segs[i - 1].hi.r + 1))) throw ParseError("segments must be contiguous");
  }
  SNode s(std::move(segs));
  const Json& dm = member(j, "domain_min");
  if (dm.is_null() != s.empty() || (!s.empty() && !(ordinal_from_json(dm) == s.domain_min()))) {
    throw ParseError("domain_min disagrees with segments");
  }
  return s;
}

Json to_json(const TreeBlock& b) {
  Json j;
  j["schema"] = kSchema;
  j["alpha"] = to_json(b.alpha);
  j["n"] = b.index;
  Json nodes = Json::array();
  for (const auto& t : b.nodes) nodes.push_back(tree_node_json(t));
  j["nodes"] = std::move(nodes);
  return j;
}

TreeBlock tree_block_from_json(const Json& j) {
  check_schema(j);
  TreeBlock b;
  b.alpha = ordinal_from_json(member(j, "alpha"));
  b.index = field<std::uint32_t>(j, "n");
  for (const auto& t : member(j, "nodes")) b.nodes.push_back(tree_node_from_json(t));
  if (!std::is_sorted(b.nodes.begin(), b.nodes.end())) throw ParseError("tree nodes must be in lex order");
  return b;
}

Json to_json(const SBlock& b) {
  Json j;
  j["schema"] = kSchema;
  j["alpha"] = to_json(b.alpha);
  j["n"] = b.index;
  j["truncated"] = b.truncated;
  Json nodes = Json::array();
  for (std::size_t i = 0; i < b.size(); ++i) {
    Json node = to_json(b.nodes[i]);
    node["parent"] = b.parent[i];
    node["psi"] = tree_node_json(b.images[i]);
    nodes.push_back(std::move(node));
  }
  j["nodes"] = std::move(nodes);
  return j;
}

SBlock sblock_from_json(const Json& j) {
  check_schema(j);
  std::vector<SNode> nodes;
  for (const auto& s : member(j, "nodes")) nodes.push_back(snode_from_json(s));
  if (!std::is_sorted(nodes.begin(), nodes.end(), LexLess{})) throw ParseError("S nodes must be in lex order");
  SBlock b = as_block(ordinal_from_json(member(j, "alpha")), std::move(nodes));
  b.index = field<std::uint32_t>(j, "n");
  if (j.contains("truncated")) b.truncated = field<bool>(j, "truncated");
  return b;
}

Json to_json(const RMember& u) {
  Json j;
  j["alpha"] = to_json(u.alpha);
  j["level"] = u.level;
  j["host"] = u.host;
  Json nodes = Json::array();
  for (const auto& t : u.nodes) nodes.push_back(tree_node_json(t));
  j["nodes"] = std::move(nodes);
  return j;
}

RMember rmember_from_json(const Json& j) {
  RMember u;
  u.alpha = ordinal_from_json(member(j, "alpha"));
  u.level = field<std::uint32_t>(j, "level");
  u.host = field<std::uint32_t>(j, "host");
  for (const auto& t : member(j, "nodes")) u.nodes.push_back(tree_node_from_json(t));
  std::sort(u.nodes.begin(), u.nodes.end());
  return u;
}

Json to_json(const FiniteApprox& a) {
  Json j = Json::array();
  for (const auto& u : a.blocks) j.push_back(to_json(u));
  return j;
}

Json to_json(const DCSet& s) {
  Json j;
  j["alpha"] = to_json(s.alpha);
  j["level"] = s.level;
  Json nodes = Json::array();
  for (const auto& x : s.nodes) nodes.push_back(to_json(x));
  j["nodes"] = std::move(nodes);
  return j;
}

DCSet dcset_from_json(const Json& j) {
  DCSet s;
  s.alpha = ordinal_from_json(member(j, "alpha"));
  s.level = field<std::uint32_t>(j, "level");
  for (const auto& x : member(j, "nodes")) s.nodes.push_back(snode_from_json(x));
  std::sort(s.nodes.begin(), s.nodes.end(), LexLess{});
  return s;
}

Json to_json(const TukeyClass& c) { return c.principal ? Json("PRINCIPAL") : to_json(c.beta); }

Json to_json(const HasseDiagram& h) {
  Json vertices = Json::array();
  for (std::size_t i = 0; i < h.vertices.size(); ++i) {
    Json up = Json::array();
    for (const auto& [lo, hi] : h.edges) {
      if (lo == static_cast<int>(i)) up.push_back(hi);
    }
    vertices.push_back({{"id", i},
                        {"representative", to_json(h.vertices[i])},
                        {"class_size", h.class_sizes[i]},
                        {"tukey_class", to_json(h.tukey[i])},
                        {"covered_by", std::move(up)}});
  }
  return {{"vertices", std::move(vertices)}};
}

std::string node_label(const TreeNode& t) {
  std::string out = "<";
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out + ">";
}

std::string node_label(const SNode& s) {
  if (s.empty()) return "{}";
  std::string out;
  for (const auto& g : s.segments()) {
    if (!out.empty()) out += " ";
    out += "[" + to_string(g.lo) + ".." + to_string(g.hi) + "]=" + std::to_string(g.value);
  }
  return out;
}

std::string to_dot(const TreeBlock& b) {
  std::ostringstream out;
  out << "digraph T {\n  label=\"T_" << to_string(b.alpha) << "(" << b.index << ")\";\n";
  for (std::size_t i = 0; i < b.nodes.size(); ++i) {
    out << "  n" << i << " [label=\"" << node_label(b.nodes[i]) << "\"];\n";
  }
  for (std::size_t i = 0; i < b.nodes.size(); ++i) {
    const auto& t = b.nodes[i];
    if (t.empty()) continue;
    const TreeNode up(t.begin(), t.end() - 1);
    auto it = std::lower_bound(b.nodes.begin(), b.nodes.end(), up);
    if (it != b.nodes.end() && *it == up) out << "  n" << (it - b.nodes.begin()) << " -> n" << i << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const SBlock& b) {
  std::ostringstream out;
  out << "digraph S {\n  label=\"S_" << to_string(b.alpha) << "(" << b.index << ")\";\n";
  for (std::size_t i = 0; i < b.size(); ++i) {
    out << "  n" << i << " [label=\"" << node_label(b.nodes[i]) << "\"];\n";
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b.parent[i] >= 0) out << "  n" << b.parent[i] << " -> n" << i << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const HasseDiagram& h) {
  std::ostringstream out;
  out << "digraph Hasse {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < h.vertices.size(); ++i) {
    std::string members;
    for (const auto& s : h.vertices[i].nodes) members += (members.empty() ? "" : "\\n") + node_label(s);
    out << "  v" << i << " [label=\"" << to_string(h.tukey[i]) << "\\n" << members << "\"];\n";
  }
  for (const auto& [lo, hi] : h.edges) out << "  v" << lo << " -> v" << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ramsey
