// Copyright 2026 The bdhlattice Authors
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

#include "bdh/oracle.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "bdh/error.hpp"
#include "test_support.hpp"

namespace bdh::oracle {
namespace {

using namespace bdh::testing;

TEST(Enumerate, Path) {
  const BicliqueSet expected{{{0, 2}, {1}}, {{2}, {1, 3}}};
  EXPECT_EQ(enumerate_maximal_bicliques_bruteforce(path_p4()), expected);
}

TEST(Enumerate, CompleteBipartiteIsSingleBiclique) {
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const BipartiteGraph g = complete_bipartite(a, b);
      const BicliqueSet got = enumerate_maximal_bicliques_bruteforce(g);
      ASSERT_EQ(got.size(), 1u);
      EXPECT_EQ(got.begin()->x, g.shore_vertices(Shore::X));
      EXPECT_EQ(got.begin()->y, g.shore_vertices(Shore::Y));
    }
  }
}

TEST(Enumerate, HexagonHasSixStars) {
  const BipartiteGraph g = cycle_graph(6);
  const BicliqueSet got = enumerate_maximal_bicliques_bruteforce(g);
  EXPECT_EQ(got.size(), 6u);
  for (const auto& b : got) {
    EXPECT_TRUE(b.x.size() == 1 || b.y.size() == 1);
    EXPECT_EQ(b.x.size() + b.y.size(), 3u);
  }
}

TEST(Enumerate, GuardRefusesWideShores) {
  const BipartiteGraph g = complete_bipartite(21, 21);
  EXPECT_THROW(enumerate_maximal_bicliques_bruteforce(g), GuardError);
  EXPECT_NO_THROW(enumerate_maximal_bicliques_bruteforce(complete_bipartite(10, 25)));
}

TEST(Enumerate, EdgelessGraphHasNone) {
  EXPECT_TRUE(enumerate_maximal_bicliques_bruteforce(graph_1based(3, {})).empty());
}

TEST(Hasse, PathHasOneCover) {
  const auto pairs = hasse_bruteforce(enumerate_maximal_bicliques_bruteforce(path_p4()));
  const BicliquePair lo{{2}, {1, 3}};
  const BicliquePair hi{{0, 2}, {1}};
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(*pairs.begin(), std::make_pair(lo, hi));
}

TEST(Hasse, SingletonHasNoCovers) {
  EXPECT_TRUE(hasse_bruteforce(BicliqueSet{{{0}, {1}}}).empty());
}

TEST(Hasse, HexagonIsCrown) {
  const auto pairs = hasse_bruteforce(enumerate_maximal_bicliques_bruteforce(cycle_graph(6)));
  EXPECT_EQ(pairs.size(), 6u);
  std::map<BicliquePair, int> degree;
  for (const auto& [lo, hi] : pairs) {
    EXPECT_EQ(lo.x.size(), 1u);
    EXPECT_EQ(hi.y.size(), 1u);
    ++degree[lo];
    ++degree[hi];
  }
  EXPECT_EQ(degree.size(), 6u);
  for (const auto& [b, d] : degree) EXPECT_EQ(d, 2);
  // Six elements with six cover pairs cannot form a tree.
  EXPECT_NE(pairs.size(), degree.size() - 1);
}

TEST(Hasse, ChainIsTransitivelyReduced) {
  const BicliqueSet chain{{{0}, {1, 2, 3}}, {{0, 4}, {1, 2}}, {{0, 4, 5}, {1}}};
  EXPECT_EQ(hasse_bruteforce(chain).size(), 2u);
}

TEST(Forbidden, Fixtures) {
  EXPECT_FALSE(is_bdh_forbidden_subgraph(domino()));
  EXPECT_FALSE(is_bdh_forbidden_subgraph(cycle_graph(6)));
  EXPECT_FALSE(is_bdh_forbidden_subgraph(cycle_graph(8)));
  EXPECT_TRUE(is_bdh_forbidden_subgraph(path_p4()));
  EXPECT_TRUE(is_bdh_forbidden_subgraph(complete_bipartite(3, 3)));
  EXPECT_TRUE(is_bdh_forbidden_subgraph(cycle_graph(4)));
}

TEST(Forbidden, InducedOnly) {
  // C6 plus the chord 1-4 is a domino; adding all three long chords gives K_{3,3}.
  EXPECT_FALSE(is_bdh_forbidden_subgraph(
      graph_1based(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {1, 4}})));
  EXPECT_TRUE(is_bdh_forbidden_subgraph(graph_1based(
      6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {1, 4}, {2, 5}, {3, 6}})));
}

TEST(Forbidden, DominoInsideLargerGraph) {
  const BipartiteGraph g = graph_1based(
      8, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {2, 5}, {1, 7}, {7, 8}});
  EXPECT_FALSE(is_bdh_forbidden_subgraph(g));
}

TEST(Forbidden, DisconnectedIsNotBdh) {
  EXPECT_FALSE(is_bdh_forbidden_subgraph(graph_1based(4, {{1, 2}, {3, 4}})));
}

TEST(Forbidden, Guard) {
  EXPECT_THROW(is_bdh_forbidden_subgraph(cycle_graph(16)), GuardError);
}

TEST(Laminar, Examples) {
  EXPECT_TRUE(is_laminar({{1}, {1, 3}}));
  EXPECT_FALSE(is_laminar({{0, 1}, {1, 2}}));
  EXPECT_TRUE(is_laminar({}));
  EXPECT_TRUE(is_laminar({{0}, {1}, {0, 1, 2}}));
}

TEST(Maximal, Recheck) {
  const BipartiteGraph g = path_p4();
  EXPECT_TRUE(is_maximal_biclique(g, {{0, 2}, {1}}));
  EXPECT_FALSE(is_maximal_biclique(g, {{2}, {1}}));
  EXPECT_FALSE(is_maximal_biclique(g, {{0}, {3}}));
}

// Independent maximality re-check for everything the enumerator returns.
TEST(OracleProperty, EnumeratedBicliquesAreMaximal) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const BipartiteGraph g = random_bipartite(rng, n, 0.5);
    for (const auto& b : enumerate_maximal_bicliques_bruteforce(g)) {
      ASSERT_FALSE(b.x.empty());
      ASSERT_FALSE(b.y.empty());
      for (VertexId x : b.x) {
        for (VertexId y : b.y) EXPECT_TRUE(g.adjacent(x, y));
      }
      // No outside vertex sees a whole opposite shore.
      for (VertexId v = 0; v < n; ++v) {
        const auto& own = g.shore(v) == Shore::X ? b.x : b.y;
        const auto& other = g.shore(v) == Shore::X ? b.y : b.x;
        if (std::find(own.begin(), own.end(), v) != own.end()) continue;
        bool sees_all = true;
        for (VertexId w : other) sees_all = sees_all && g.adjacent(v, w);
        EXPECT_FALSE(sees_all);
      }
    }
  }
}

// Laminar families over k elements have at most 2k - 1 members.
TEST(OracleProperty, LaminarFamilySizeBound) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 2000; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 5);
    std::set<VertexSet> fam;
    const int tries = static_cast<int>(rng() % 12);
    for (int t = 0; t < tries; ++t) {
      VertexSet s;
      for (int e = 0; e < k; ++e) {
        if (rng() & 1) s.push_back(e);
      }
      if (!s.empty()) fam.insert(s);
    }
    const std::vector<VertexSet> family(fam.begin(), fam.end());
    if (is_laminar(family)) {
      EXPECT_LE(family.size(), static_cast<std::size_t>(2 * k - 1));
    }
  }
}

}  // namespace
}  // namespace bdh::oracle
