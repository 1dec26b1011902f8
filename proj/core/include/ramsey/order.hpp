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

#include <string>
#include <utility>
#include <vector>

#include "ramsey/canonical.hpp"

namespace ramsey {

enum class RK { BELOW, ABOVE, ISOMORPHIC, INCOMPARABLE };

std::string to_string(RK r);

/// Tukey class of a projection structure; {emptyset} is principal.
struct TukeyClass {
  bool principal = false;
  Ordinal beta;

  friend bool operator==(const TukeyClass&, const TukeyClass&) = default;
};

std::string to_string(const TukeyClass& c);

/// Lex-preserving injection of S into T with downward closed image.
bool embeds(const DCSet& s, const DCSet& t);
bool dc_iso(const DCSet& s, const DCSet& t);

TukeyClass tukey_class(const Ordinal& alpha, const DCSet& s);

RK rk_compare(const DCSet& s, const DCSet& t);

struct HasseDiagram {
  std::vector<DCSet> vertices;  // one representative per isomorphism class
  std::vector<std::size_t> class_sizes;
  std::vector<TukeyClass> tukey;
  std::vector<std::pair<int, int>> edges;  // (lower, upper) covering pairs
};

HasseDiagram rk_hasse(const Ordinal& alpha, std::uint32_t n, std::uint32_t m);

}  // namespace ramsey
