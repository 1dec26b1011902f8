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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/order.hpp"

using namespace ramsey;

TEST(Embeds, AgreesWithBruteForce) {
  const auto family = enumerate_DC(2, 1, 2);
  for (const auto& s : family) {
    for (const auto& t : family) {
      EXPECT_EQ(embeds(s, t), oracle::ordered_embeds(dc_shape(s), dc_shape(t)));
    }
  }
}

TEST(Embeds, IsAPreorder) {
  const auto family = enumerate_DC(2, 0, 3);
  for (const auto& s : family) EXPECT_TRUE(embeds(s, s));
  for (const auto& a : family) {
    for (const auto& b : family) {
      if (!embeds(a, b)) continue;
      for (const auto& c : family) {
        if (embeds(b, c)) {
          EXPECT_TRUE(embeds(a, c));
        }
      }
    }
  }
}

TEST(Embeds, LevelsMayDiffer) {
  const DCSet c0 = chain_S_beta(2, 1);
  const auto moved = transport(c0, 2);
  ASSERT_TRUE(moved.has_value());
  EXPECT_TRUE(embeds(c0, *moved));
  EXPECT_TRUE(embeds(*moved, c0));
}

TEST(Embeds, DifferentAlphaIsAnError) {
  EXPECT_THROW(embeds(chain_S_beta(1, 0), chain_S_beta(2, 0)), LevelMismatch);
}

TEST(DcIso, MatchesShapeIsomorphism) {
  const auto family = enumerate_DC(2, 1, 3);
  for (const auto& s : family) {
    for (const auto& t : family) {
      const bool same_shape = s_iso(s.nodes, t.nodes);
      EXPECT_EQ(dc_iso(s, t), same_shape);
    }
  }
}

TEST(Tukey, ChainsHaveTheirOwnClass) {
  for (std::uint32_t a = 1; a <= 3; ++a) {
    for (std::uint32_t b = 0; b <= a; ++b) {
      const auto c = tukey_class(a, chain_S_beta(a, b));
      EXPECT_FALSE(c.principal);
      EXPECT_EQ(c.beta, Ordinal(b)) << a << " " << b;
    }
  }
}

TEST(Tukey, BottomIsPrincipal) {
  const auto c = tukey_class(2, DCSet{2, 1, {SNode()}});
  EXPECT_TRUE(c.principal);
  EXPECT_EQ(to_string(c), "PRINCIPAL");
}

TEST(Tukey, ClassesFormADescendingSetBelowAlpha) {
  for (std::uint32_t n = 0; n <= 2; ++n) {
    for (std::uint32_t m = n; m <= 4; ++m) {
      std::set<std::uint32_t> seen;
      for (const auto& s : enumerate_DC(2, n, m)) {
        const auto c = tukey_class(2, s);
        if (c.principal) continue;
        EXPECT_TRUE(c.beta.is_finite());
        EXPECT_LE(c.beta.r, 2u);
        seen.insert(c.beta.r);
        // Class beta means the chain for beta embeds and the one for beta-1 does not.
        EXPECT_TRUE(embeds(chain_S_beta(2, c.beta), s));
        if (c.beta.r > 0) {
          EXPECT_FALSE(embeds(chain_S_beta(2, c.beta.r - 1), s));
        }
      }
      // An initial segment of ordinals below alpha + 1, complete once the horizon is wide enough.
      ASSERT_FALSE(seen.empty());
      for (std::uint32_t b = 0; b <= *seen.rbegin(); ++b) EXPECT_TRUE(seen.count(b)) << n << " " << m << " " << b;
      if (m >= n + 2) {
        EXPECT_EQ(seen.size(), 3u) << n << " " << m;
      }
    }
  }
}

TEST(RK, CompareChains) {
  const auto c0 = chain_S_beta(2, 0);
  const auto c1 = chain_S_beta(2, 1);
  EXPECT_EQ(rk_compare(c1, c0), RK::BELOW);
  EXPECT_EQ(rk_compare(c0, c1), RK::ABOVE);
  EXPECT_EQ(rk_compare(c0, c0), RK::ISOMORPHIC);
}

TEST(RK, IncomparableShapesExist) {
  const auto family = enumerate_DC(2, 2, 3);
  bool found = false;
  for (std::size_t i = 0; i < family.size() && !found; ++i) {
    for (std::size_t j = 0; j < family.size() && !found; ++j) {
      found = rk_compare(family[i], family[j]) == RK::INCOMPARABLE;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Hasse, Alpha1IsAChain) {
  const auto h = rk_hasse(1, 0, 2);
  ASSERT_EQ(h.vertices.size(), 3u);
  EXPECT_EQ(h.edges, (std::vector<std::pair<int, int>>{{0, 1}, {1, 2}}));
  EXPECT_TRUE(h.tukey[0].principal);
}

TEST(Hasse, Alpha2Level0IsAChainOfClasses) {
  const auto h = rk_hasse(2, 0, 3);
  ASSERT_EQ(h.vertices.size(), 4u);
  EXPECT_EQ(h.edges.size(), 3u);
  EXPECT_TRUE(h.tukey[0].principal);
  std::set<std::uint32_t> classes;
  for (std::size_t i = 1; i < h.tukey.size(); ++i) classes.insert(h.tukey[i].beta.r);
  EXPECT_EQ(classes, (std::set<std::uint32_t>{0, 1, 2}));
}

TEST(Hasse, EdgesAreCoveringPairs) {
  const auto h = rk_hasse(2, 2, 3);
  std::size_t total = 0;
  for (auto c : h.class_sizes) total += c;
  EXPECT_EQ(total, enumerate_DC(2, 2, 3).size());
  for (const auto& [lo, hi] : h.edges) {
    EXPECT_EQ(rk_compare(h.vertices[lo], h.vertices[hi]), RK::BELOW);
    for (std::size_t k = 0; k < h.vertices.size(); ++k) {
      const bool between = rk_compare(h.vertices[lo], h.vertices[k]) == RK::BELOW &&
                           rk_compare(h.vertices[k], h.vertices[hi]) == RK::BELOW;
      EXPECT_FALSE(between);
    }
  }
  for (std::size_t i = 0; i < h.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < h.vertices.size(); ++j) EXPECT_FALSE(dc_iso(h.vertices[i], h.vertices[j]));
  }
}
