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

#include "ramsey/ordinal.hpp"

namespace ramsey {

using Value = std::uint32_t;

/// A constant run: value on the closed ordinal interval [lo, hi].
struct Segment {
  Ordinal lo;
  Ordinal hi;
  Value value = 0;

  friend bool operator==(const Segment&, const Segment&) = default;
  friend auto operator<=>(const Segment&, const Segment&) = default;
};

/// A function on an ordinal interval [domain_min, top], or the empty function.
///
/// Stored as maximal constant runs in increasing order. Adjacent runs with
/// equal values are always merged, so two SNodes are equal iff they denote the
/// same function.
class SNode {
 public:
  SNode() = default;
  explicit SNode(std::vector<Segment> segments);

  static SNode point(const Ordinal& at, Value v) { return SNode({{at, at, v}}); }

  bool empty() const { return segs_.empty(); }
  const std::vector<Segment>& segments() const { return segs_; }

  /// Undefined on the empty function.
  const Ordinal& domain_min() const { return segs_.front().lo; }
  const Ordinal& top() const { return segs_.back().hi; }

  bool defined_at(const Ordinal& x) const;
  std::optional<Value> value_at(const Ordinal& x) const;
  /// Value at the top of the domain; the block index for members of S_alpha.
  Value top_value() const { return segs_.back().value; }

  /// f restricted to [beta, top]; empty if beta > top.
  SNode restrict_from(const Ordinal& beta) const;
  /// f restricted to [domain_min, gamma]; empty if domain_min > gamma.
  SNode restrict_to(const Ordinal& gamma) const;
  /// f restricted to [lo, hi] intersected with its domain.
  SNode slice(const Ordinal& lo, const Ordinal& hi) const;

  /// Appends the run [lo, hi] -> v above the current top (lo must be top+1).
  SNode extended(const Ordinal& lo, const Ordinal& hi, Value v) const;

  /// True iff *this is a restriction of other to a final segment of its domain.
  bool is_restriction_of(const SNode& other) const;
  bool proper_subset_of(const SNode& other) const {
    return is_restriction_of(other) && *this != other;
  }

  friend bool operator==(const SNode&, const SNode&) = default;

 private:
  void normalize();
  std::vector<Segment> segs_;
};

/// Lexicographic order of S-structures: proper extensions are greater, and
/// otherwise the value at the highest point of disagreement decides.
Cmp lex_compare(const SNode& s, const SNode& t);

struct LexLess {
  bool operator()(const SNode& a, const SNode& b) const { return lex_compare(a, b) == Cmp::LT; }
};

}  // namespace ramsey
