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
#include "ramsey/canonical.hpp"
#include "ramsey/errors.hpp"

using namespace ramsey;

TEST(Counting, Alpha1IsTwoToTheNPlusOnePlusOne) {
  for (std::uint32_t n = 0; n <= 10; ++n) EXPECT_EQ(count_canonical(1, n), (BigInt(1) << (n + 1)) + 1) << n;
}

TEST(Counting, KnownValuesForAlpha2) {
  EXPECT_EQ(count_canonical(2, 0), 4);
  EXPECT_EQ(count_canonical(2, 1), 6);
  EXPECT_EQ(count_canonical(2, 2), 154);
  EXPECT_EQ(count_canonical_AR(2, 1), 4);
  EXPECT_EQ(count_canonical_AR(2, 2), 24);
  EXPECT_EQ(count_canonical_AR(2, 3), 3696);
}

TEST(Counting, ARIsProductOfBlockCounts) {
  for (std::uint32_t k = 1; k <= 3; ++k) {
    BigInt prod = 1;
    for (std::uint32_t n = 1; n <= 4; ++n) {
      prod *= count_canonical(k, n - 1);
      EXPECT_EQ(count_canonical_AR(k, n), prod) << k << " " << n;
    }
  }
}

TEST(Counting, RejectsDegenerateParams) {
  EXPECT_THROW(count_canonical(0, 1), OutOfRange);
  EXPECT_THROW(count_canonical_AR(2, 0), OutOfRange);
}

TEST(Counting, GrowsBeyondMachineWords) {
  const BigInt big = count_canonical(3, 3);
  EXPECT_EQ(big.str(), "76618719335919557");
  EXPECT_GT(count_canonical(3, 4), BigInt(1) << 64);
}

TEST(Downsets, BlockCountMatchesBruteForce) {
  for (const Ordinal alpha : {Ordinal(1), Ordinal(2), Ordinal(3)}) {
    for (std::uint32_t n = 0; n < 3; ++n) {
      const auto block = build_S(alpha, n);
      if (block->size() > 20) continue;
      const auto want = oracle::downsets_brute(block->parent);
      EXPECT_EQ(count_block_downsets(*block), want) << to_string(alpha) << " " << n;
      EXPECT_EQ(block_downsets(*block).size(), want);
    }
  }
}

TEST(EnumerateDC, FullFamilyMatchesRecursion) {
  for (std::uint32_t k = 1; k <= 3; ++k) {
    for (std::uint32_t n = 0; n <= 2; ++n) {
      EXPECT_EQ(BigInt(enumerate_DC_full(k, n).size()), count_canonical(k, n)) << k << " " << n;
      EXPECT_EQ(count_DC_full(k, n), count_canonical(k, n)) << k << " " << n;
    }
  }
  EXPECT_EQ(count_DC_full(2, 3), count_canonical(2, 3));
  EXPECT_EQ(count_DC_full(3, 3), count_canonical(3, 3));
}

TEST(EnumerateDC, StabilizesAtTheFullFamily) {
  EXPECT_EQ(enumerate_DC(1, 1, 1).size(), 5u);
  EXPECT_EQ(enumerate_DC(1, 1, 2).size(), 5u);
  EXPECT_EQ(enumerate_DC(1, 1, 4).size(), 5u);
  EXPECT_EQ(enumerate_DC(2, 2, 3).size(), 154u);
  EXPECT_EQ(enumerate_DC(2, 2, 4).size(), 154u);
}

TEST(EnumerateDC, MembersAreDownsetsContainingEmpty) {
  for (const auto& s : enumerate_DC(2, 1, 3)) {
    ASSERT_FALSE(s.nodes.empty());
    EXPECT_TRUE(s.nodes.front().empty());
    EXPECT_TRUE(std::is_sorted(s.nodes.begin(), s.nodes.end(), LexLess{}));
    for (const auto& x : s.nodes) {
      for (const auto& seg : x.segments()) {
        EXPECT_NE(std::find(s.nodes.begin(), s.nodes.end(), x.restrict_from(seg.lo)), s.nodes.end());
      }
    }
    EXPECT_EQ(dc_from_indices(2, 1, dc_indices(s)), s);
  }
}

TEST(EnumerateDC, LimitAlpha) {
  EXPECT_THROW(enumerate_DC({1, 0}, 0, 1), Unsupported);
  EXPECT_THROW(enumerate_DC_full({1, 0}, 0), InfiniteFamily);
}

TEST(ChainS, SizesAndShape) {
  for (std::uint32_t a = 1; a <= 3; ++a) {
    for (std::uint32_t b = 0; b <= a; ++b) {
      const DCSet c = chain_S_beta(a, b);
      EXPECT_EQ(c.nodes.size(), a - b + 2) << a << " " << b;
      for (std::size_t i = 1; i < c.nodes.size(); ++i) EXPECT_TRUE(c.nodes[i - 1].proper_subset_of(c.nodes[i]));
      for (const auto& x : c.nodes) {
        if (!x.empty()) {
          EXPECT_GE(x.domain_min(), Ordinal(b));
        }
      }
    }
  }
}

TEST(PiS, TrivialAndIdentityRelations) {
  for (const Ordinal alpha : {Ordinal(1), Ordinal(2)}) {
    for (std::uint32_t n = 0; n < 2; ++n) {
      const auto domain = enumerate_R(alpha, n, n + 2);
      const auto block = build_S(alpha, n);
      const DCSet bottom{alpha, n, {SNode()}};
      const DCSet full{alpha, n, block->nodes};
      const auto trivial = eq_rel_from_S(bottom, domain);
      EXPECT_EQ(trivial.classes.size(), 1u);
      const auto ident = eq_rel_from_S(full, domain);
      EXPECT_EQ(ident.classes.size(), domain.size());
      for (const auto& u : domain) {
        EXPECT_EQ(pi_S(full, u), u.nodes);
        EXPECT_EQ(pi_S(bottom, u), std::vector<TreeNode>{{}});
      }
    }
  }
}

TEST(PiS, RejectsLevelMismatch) {
  const auto u = enumerate_R(1, 1, 2).front();
  EXPECT_THROW(pi_S(DCSet{1, 0, {SNode()}}, u), LevelMismatch);
}

TEST(PiS, MonotoneInS) {
  // S subset of S' gives pi_S(u) subset of pi_S'(u).
  const auto family = enumerate_DC(2, 1, 3);
  const auto domain = enumerate_R(2, 1, 3);
  for (const auto& s : family) {
    for (const auto& t : family) {
      const auto si = dc_indices(s);
      const auto ti = dc_indices(t);
      if (!std::includes(ti.begin(), ti.end(), si.begin(), si.end())) continue;
      for (std::size_t j = 0; j < domain.size(); j += 7) {
        const auto a = pi_S(s, domain[j]);
        const auto b = pi_S(t, domain[j]);
        EXPECT_TRUE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
      }
    }
  }
}

TEST(RestrictDC, KeepsTheRelationAndIsIdempotent) {
  for (const auto& s : enumerate_DC(2, 1, 3)) {
    for (std::uint32_t m = 2; m <= 3; ++m) {
      const DCSet r = restrict_DC(s, m);
      const auto domain = enumerate_R(2, 1, m);
      EXPECT_EQ(eq_rel_from_S(r, domain), eq_rel_from_S(s, domain));
      EXPECT_EQ(restrict_DC(r, m), r);
    }
  }
}

TEST(EqRelation, LabelsRoundTrip) {
  const auto domain = enumerate_R(1, 0, 3);
  const auto rel = EqRelation::from_labels(domain, {7, 3, 7, 3});
  EXPECT_EQ(rel.labels(), (std::vector<int>{0, 1, 0, 1}));
  EXPECT_EQ(rel.classes, (std::vector<std::vector<int>>{{0, 2}, {1, 3}}));
}

TEST(Transport, FindsIsomorphicCopies) {
  const DCSet c = chain_S_beta(2, 1);
  for (std::uint32_t level = 0; level < 3; ++level) {
    const auto t = transport(c, level);
    ASSERT_TRUE(t.has_value()) << level;
    EXPECT_EQ(dc_shape(*t), dc_shape(c));
    EXPECT_EQ(t->level, level);
  }
}
