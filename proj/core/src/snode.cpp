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

#include "ramsey/snode.hpp"

#include <algorithm>

#include "ramsey/errors.hpp"

namespace ramsey {

SNode::SNode(std::vector<Segment> segments) : segs_(std::move(segments)) { normalize(); }

void SNode::normalize() {
  std::vector<Segment> out;
  out.reserve(segs_.size());
  for (const auto& s : segs_) {
    if (s.hi < s.lo) throw Error("SNode: empty segment");
    if (!out.empty()) {
      auto& last = out.back();
      if (last.hi.succ() != s.lo) throw Error("SNode: segments are not contiguous");
      if (last.value == s.value) {
        last.hi = s.hi;
        continue;
      }
    }
    out.push_back(s);
  }
  segs_ = std::move(out);
}

bool SNode::defined_at(const Ordinal& x) const {
  return !segs_.empty() && domain_min() <= x && x <= top();
}

std::optional<Value> SNode::value_at(const Ordinal& x) const {
  for (const auto& s : segs_) {
    if (s.lo <= x && x <= s.hi) return s.value;
  }
  return std::nullopt;
}

SNode SNode::slice(const Ordinal& lo, const Ordinal& hi) const {
  SNode out;
  for (const auto& s : segs_) {
    if (s.hi < lo || hi < s.lo) continue;
    out.segs_.push_back({std::max(s.lo, lo), std::min(s.hi, hi), s.value});
  }
  return out;
}

SNode SNode::restrict_from(const Ordinal& beta) const {
  if (segs_.empty() || top() < beta) return {};
  return slice(beta, top());
}

SNode SNode::restrict_to(const Ordinal& gamma) const {
  if (segs_.empty() || gamma < domain_min()) return {};
  return slice(domain_min(), gamma);
}

SNode SNode::extended(const Ordinal& lo, const Ordinal& hi, Value v) const {
  std::vector<Segment> segs = segs_;
  segs.push_back({lo, hi, v});
  return SNode(std::move(segs));
}

bool SNode::is_restriction_of(const SNode& other) const {
  if (empty()) return true;
  if (other.empty()) return false;
  if (top() != other.top() || domain_min() < other.domain_min()) return false;
  return other.restrict_from(domain_min()) == *this;
}

Cmp lex_compare(const SNode& s, const SNode& t) {
  if (s.empty() || t.empty()) {
    if (s.empty() && t.empty()) return Cmp::EQ;
    return s.empty() ? Cmp::LT : Cmp::GT;
  }
  if (s.top() != t.top()) return ord_compare(s.top(), t.top());

  const Ordinal floor = std::max(s.domain_min(), t.domain_min());
  const auto& a = s.segments();
  const auto& b = t.segments();
  auto i = static_cast<std::ptrdiff_t>(a.size()) - 1;
  auto j = static_cast<std::ptrdiff_t>(b.size()) - 1;
  while (i >= 0 && j >= 0) {
    const Ordinal lo = std::max({a[i].lo, b[j].lo, floor});
    if (a[i].value != b[j].value) {
      return a[i].value < b[j].value ? Cmp::LT : Cmp::GT;
    }
    if (lo == floor) break;
    if (a[i].lo == lo) --i;
    if (b[j].lo == lo) --j;
  }
  // Agreement on the common part of the domains.
  return ord_compare(t.domain_min(), s.domain_min());
}

}  // namespace ramsey
