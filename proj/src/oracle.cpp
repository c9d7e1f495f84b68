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

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <iterator>
#include <numeric>

#include "bdh/error.hpp"

namespace bdh::oracle {
namespace {

VertexSet intersect(const VertexSet& a, std::span<const VertexId> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Common neighbours of a non-empty vertex set.
VertexSet common_neighbors(const BipartiteGraph& g, const VertexSet& s) {
  auto first = g.neighbors(s.front());
  VertexSet common(first.begin(), first.end());
  for (std::size_t i = 1; i < s.size() && !common.empty(); ++i) {
    common = intersect(common, g.neighbors(s[i]));
  }
  return common;
}

bool strict_subset(const VertexSet& a, const VertexSet& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

using Mask = std::uint32_t;

// Induced subgraph checks on bitmask adjacency (n <= 14).
struct SmallGraph {
  std::vector<Mask> adj;

  int degree_in(int v, Mask s) const { return std::popcount(adj[v] & s); }

  bool connected_in(Mask s) const {
    if (s == 0) return false;
    Mask reached = s & (~s + 1);
    Mask frontier = reached;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)] & s;
      frontier = next & ~reached;
      reached |= next;
    }
    return reached == s;
  }
};

// Two 4-cycles sharing edge 1-4: the 6-cycle 0..5 plus chord 1-4.
constexpr std::array<std::pair<int, int>, 7> kDominoEdges{
    {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 4}}};

bool induces_domino(const SmallGraph& g, Mask s) {
  std::array<Mask, 6> pattern{};
  for (auto [a, b] : kDominoEdges) {
    pattern[a] |= Mask{1} << b;
    pattern[b] |= Mask{1} << a;
  }
  std::array<int, 6> verts{};
  int k = 0;
  for (Mask f = s; f; f &= f - 1) verts[k++] = std::countr_zero(f);

  // Try every bijection pattern -> subset, pruned on degree.
  std::array<int, 6> perm{};
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int p = 0; p < 6 && ok; ++p) {
      ok = g.degree_in(verts[perm[p]], s) == std::popcount(pattern[p]);
    }
    for (int p = 0; p < 6 && ok; ++p) {
      for (int q = p + 1; q < 6 && ok; ++q) {
        const bool in_pattern = (pattern[p] >> q) & 1U;
        const bool in_graph = (g.adj[verts[perm[p]]] >> verts[perm[q]]) & 1U;
        ok = in_pattern == in_graph;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Connected and 2-regular on >= 6 vertices means an induced cycle.
bool induces_long_cycle(const SmallGraph& g, Mask s) {
  for (Mask f = s; f; f &= f - 1) {
    if (g.degree_in(std::countr_zero(f), s) != 2) return false;
  }
  return g.connected_in(s);
}

}  // namespace

BicliqueSet enumerate_maximal_bicliques_bruteforce(const BipartiteGraph& g) {
  const Shore small = g.shore_size(Shore::X) <= g.shore_size(Shore::Y) ? Shore::X : Shore::Y;
  const VertexSet base = g.shore_vertices(small);
  if (base.size() > kMaxEnumerationShore) {
    throw GuardError("brute-force biclique enumeration refused: smaller shore has " +
                         std::to_string(base.size()) + " vertices",
                     kMaxEnumerationShore);
  }
  BicliqueSet out;
  const std::uint64_t subsets = std::uint64_t{1} << base.size();
  VertexSet subset;
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < base.size(); ++i) {
      if ((mask >> i) & 1U) subset.push_back(base[i]);
    }
    VertexSet other = common_neighbors(g, subset);
    if (other.empty()) continue;
    VertexSet closed = common_neighbors(g, other);
    if (small == Shore::X) {
      out.insert({std::move(closed), std::move(other)});
    } else {
      out.insert({std::move(other), std::move(closed)});
    }
  }
  return out;
}

std::set<std::pair<BicliquePair, BicliquePair>> hasse_bruteforce(const BicliqueSet& bs) {
  const std::vector<BicliquePair> elems(bs.begin(), bs.end());
  std::set<std::pair<BicliquePair, BicliquePair>> covers;
  for (const auto& lo : elems) {
    for (const auto& hi : elems) {
      if (!strict_subset(lo.x, hi.x)) continue;
      const bool between = std::any_of(elems.begin(), elems.end(), [&](const auto& mid) {
        return strict_subset(lo.x, mid.x) && strict_subset(mid.x, hi.x);
      });
      if (!between) covers.emplace(lo, hi);
    }
  }
  return covers;
}

bool is_bdh_forbidden_subgraph(const BipartiteGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxForbiddenSearchVertices) {
    throw GuardError("forbidden-subgraph search refused: " + std::to_string(n) + " vertices",
                     kMaxForbiddenSearchVertices);
  }
  if (n == 0 || !g.is_connected()) return false;

  SmallGraph sg;
  sg.adj.assign(n, 0);
  for (auto [u, v] : g.edges()) {
    sg.adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
    sg.adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  const Mask full = (Mask{1} << n) - 1;
  for (Mask s = 1; s <= full; ++s) {
    const int size = std::popcount(s);
    if (size < 6) continue;
    if (induces_long_cycle(sg, s)) return false;
    if (size == 6 && induces_domino(sg, s)) return false;
  }
  return true;
}

bool is_laminar(const std::vector<VertexSet>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const VertexSet& a = family[i];
      const VertexSet& b = family[j];
      VertexSet common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(common));
      if (common.empty() || common.size() == a.size() || common.size() == b.size()) continue;
      return false;
    }
  }
  return true;
}

bool is_maximal_biclique(const BipartiteGraph& g, const BicliquePair& b) {
  if (b.x.empty() || b.y.empty()) return false;
  for (VertexId x : b.x) {
    if (g.shore(x) != Shore::X) return false;
    for (VertexId y : b.y) {
      if (g.shore(y) != Shore::Y || !g.adjacent(x, y)) return false;
    }
  }
  const auto extends = [&](VertexId v, const VertexSet& own, const VertexSet& other) {
    if (std::binary_search(own.begin(), own.end(), v)) return false;
    return std::all_of(other.begin(), other.end(),
                       [&](VertexId w) { return g.adjacent(v, w); });
  };
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto vid = static_cast<VertexId>(v);
    const bool grows = g.shore(vid) == Shore::X ? extends(vid, b.x, b.y)
                                                : extends(vid, b.y, b.x);
    if (grows) return false;
  }
  return true;
}

}  // namespace bdh::oracle
