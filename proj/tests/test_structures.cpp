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

#include <set>

#include "oracles.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/structures.hpp"

using namespace ramsey;

namespace {

const std::vector<Ordinal> kAlphas{0, 1, 2, 3, {1, 0}, {1, 1}};

std::set<TreeNode> as_set(const std::vector<TreeNode>& v) { return {v.begin(), v.end()}; }

// S blocks of omega+1 are out of reach from n = 2 on.
Value horizon(const Ordinal& alpha, Value n) { return alpha == Ordinal(1, 1) ? std::min<Value>(n, 2) : n; }

}  // namespace

TEST(LSeq, LevelZeroIsTriangular) {
  for (std::uint64_t n = 0; n < 40; ++n) EXPECT_EQ(l_seq(0, n), oracle::l0(n)) << n;
}

TEST(LSeq, StrictlyIncreasing) {
  for (const Ordinal xi : {Ordinal(0), Ordinal(1), Ordinal(2), Ordinal(1, 0), Ordinal(1, 1)}) {
    for (std::uint64_t n = 0; n < 6; ++n) EXPECT_LT(l_seq(xi, n), l_seq(xi, n + 1)) << to_string(xi);
  }
}

TEST(TreeBlock, T1MatchesDefinition) {
  for (Value n = 0; n < 8; ++n) EXPECT_EQ(as_set(build_T(1, n)->nodes), oracle::T1(n)) << n;
}

TEST(TreeBlock, T0IsHeightOne) {
  for (Value n = 0; n < 5; ++n) EXPECT_EQ(as_set(build_T(0, n)->nodes), (std::set<TreeNode>{{}, {n}}));
}

TEST(SBlock, S1MatchesDefinition) {
  for (Value n = 0; n < 6; ++n) {
    auto want = oracle::S1(n);
    std::sort(want.begin(), want.end(), LexLess{});
    EXPECT_EQ(build_S(1, n)->nodes, want) << n;
  }
}

TEST(Psi, Psi1MatchesDefinition) {
  for (Value n = 0; n < 6; ++n) {
    for (const auto& s : oracle::S1(n)) EXPECT_EQ(psi(1, s), oracle::psi1(s)) << n;
  }
}

TEST(Tau, Tau01MatchesDefinition) {
  for (Value n = 0; n < 6; ++n) {
    for (const auto& t : oracle::T1(n)) EXPECT_EQ(tau(0, 1, n, t), oracle::tau01(t)) << n;
  }
}

TEST(Sigma, Sigma01RestrictsToZero) {
  for (Value n = 0; n < 5; ++n) {
    for (const auto& s : oracle::S1(n)) EXPECT_EQ(sigma(0, 1, s), s.restrict_to(0));
  }
}

TEST(Structures, TreeBlocksArePrefixClosedWithRoot) {
  for (const auto& alpha : kAlphas) {
    for (Value n = 0; n < horizon(alpha, 4); ++n) {
      const auto& nodes = build_T(alpha, n)->nodes;
      const auto set = as_set(nodes);
      EXPECT_TRUE(set.count({})) << to_string(alpha);
      for (const auto& t : nodes) {
        if (!t.empty()) {
          EXPECT_TRUE(set.count(TreeNode(t.begin(), t.end() - 1))) << to_string(alpha) << " " << n;
        }
      }
      EXPECT_TRUE(std::is_sorted(nodes.begin(), nodes.end()));
    }
  }
}

TEST(Structures, OmegaPlusOneLevelTwoTree) {
  const auto& nodes = build_T({1, 1}, 2)->nodes;
  const auto set = as_set(nodes);
  for (const auto& t : nodes) {
    if (t.empty()) continue;
    EXPECT_EQ(t.front(), 2u);
    EXPECT_TRUE(set.count(TreeNode(t.begin(), t.end() - 1)));
  }
}

TEST(Structures, NonemptyTreeNodesStartWithBlockIndex) {
  for (const auto& alpha : kAlphas) {
    for (Value n = 0; n < horizon(alpha, 4); ++n) {
      for (const auto& t : build_T(alpha, n)->nodes) {
        if (!t.empty()) {
          EXPECT_EQ(t.front(), n) << to_string(alpha);
        }
      }
    }
  }
}

TEST(Structures, SBlocksAreRestrictionClosed) {
  for (const auto& alpha : kAlphas) {
    for (Value n = 0; n < horizon(alpha, 4); ++n) {
      const auto block = build_S(alpha, n);
      if (block->truncated) continue;
      EXPECT_TRUE(block->nodes.front().empty());
      for (std::size_t i = 0; i < block->size(); ++i) {
        const SNode& s = block->nodes[i];
        if (s.empty()) continue;
        EXPECT_EQ(s.top_value(), n);
        // Every final-segment restriction with a segment boundary is present.
        for (const auto& seg : s.segments()) EXPECT_GE(block->find(s.restrict_from(seg.lo)), 0);
        EXPECT_GE(block->parent[i], 0);
        EXPECT_TRUE(block->nodes[block->parent[i]].proper_subset_of(s));
      }
    }
  }
}

TEST(Structures, LexIsStrictTotalOrderOnBlocks) {
  for (const auto& alpha : kAlphas) {
    for (Value n = 0; n < horizon(alpha, 3); ++n) {
      const auto& nodes = build_S(alpha, n)->nodes;
      for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = 0; j < nodes.size(); ++j) {
          const Cmp c = lex_compare(nodes[i], nodes[j]);
          EXPECT_EQ(c, i < j ? Cmp::LT : i == j ? Cmp::EQ : Cmp::GT);
        }
      }
    }
  }
}

TEST(Structures, PsiMapsSOntoT) {
  for (const auto& alpha : kAlphas) {
    for (Value n = 0; n < horizon(alpha, 4); ++n) {
      const auto block = build_S(alpha, n);
      if (block->truncated) continue;
      std::set<TreeNode> image;
      for (const auto& s : block->nodes) image.insert(psi(alpha, s));
      EXPECT_EQ(image, as_set(build_T(alpha, n)->nodes)) << to_string(alpha) << " " << n;
      for (std::size_t i = 0; i < block->size(); ++i) EXPECT_EQ(block->images[i], psi(alpha, block->nodes[i]));
    }
  }
}

TEST(Structures, PsiFibresAreIntervalsTopMaximalOrSplitting) {
  for (const auto& alpha : kAlphas) {
    for (Value n = 0; n < horizon(alpha, 3); ++n) {
      const auto block = build_S(alpha, n);
      if (block->truncated) continue;
      const auto split = splitting_nodes(*block);
      for (const auto& t : build_T(alpha, n)->nodes) {
        std::vector<int> fibre;
        for (std::size_t i = 0; i < block->size(); ++i) {
          if (block->images[i] == t) fibre.push_back(static_cast<int>(i));
        }
        ASSERT_FALSE(fibre.empty());
        // Chain under restriction, so a closed interval.
        for (std::size_t a = 1; a < fibre.size(); ++a) {
          EXPECT_TRUE(block->nodes[fibre[a - 1]].proper_subset_of(block->nodes[fibre[a]]));
        }
        if (t.empty()) {
          // The root fibre is {emptyset}, which has no domain and so never splits.
          EXPECT_EQ(fibre, std::vector<int>{0});
          continue;
        }
        const int top = fibre.back();
        const bool maximal = block->children[top].empty();
        const bool splitting = std::find(split.begin(), split.end(), block->nodes[top]) != split.end();
        EXPECT_TRUE(maximal || splitting) << to_string(alpha) << " " << n;
      }
    }
  }
}

TEST(Structures, MembershipAgreesWithBlocks) {
  for (const auto& alpha : kAlphas) {
    for (Value n = 0; n < horizon(alpha, 3); ++n) {
      for (const auto& s : build_S(alpha, n)->nodes) EXPECT_TRUE(is_member(alpha, s));
      for (const auto& t : build_T(alpha, n)->nodes) EXPECT_TRUE(in_T(alpha, n, t));
    }
  }
  EXPECT_FALSE(is_member(1, SNode::point(0, 0)));
  EXPECT_FALSE(in_T(1, 2, {2, 0}));
  EXPECT_FALSE(is_member(1, oracle::f01(5, 1)));
}

TEST(Structures, MaximalCountMatchesMaterialized) {
  for (const auto& alpha : kAlphas) {
    for (Value n = 0; n < horizon(alpha, 4); ++n) {
      EXPECT_EQ(maximal_count(alpha, n), maximal_nodes(alpha, n)->size()) << to_string(alpha) << " " << n;
    }
  }
}

TEST(Structures, LimitBlocksAreDiagonal) {
  for (Value n = 0; n < 4; ++n) {
    const auto src = limit_source({1, 0}, n);
    EXPECT_EQ(build_T({1, 0}, n)->nodes, build_T(src.cofinal, src.source_index)->nodes);
  }
}

TEST(Structures, LimitStagesAreIncreasing) {
  const auto rows = limit_stages({1, 0}, 5);
  ASSERT_EQ(rows.size(), 5u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GT(rows[i].p, rows[i - 1].p);
    EXPECT_EQ(rows[i].k, rows[i - 1].m + 1);
  }
}

TEST(Structures, SigmaIsRestriction) {
  for (const Ordinal beta : {Ordinal(2), Ordinal(3)}) {
    for (const auto& s : build_S(beta, 2)->nodes) {
      for (std::uint32_t g = 0; g < beta.r; ++g) {
        const SNode img = sigma(g, beta, s);
        EXPECT_EQ(img, s.restrict_to(g));
        EXPECT_TRUE(is_member(g, img));
      }
    }
  }
}

TEST(Structures, RejectsNonLimitCofinal) { EXPECT_THROW(limit_source(3, 0), NotALimit); }
