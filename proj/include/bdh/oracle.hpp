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

/// \file oracle.hpp
/// \brief Exponential brute-force references for small graphs. Obviously
/// correct, not fast; every entry point refuses inputs above its guard.

#pragma once

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "bdh/bigraph.hpp"

namespace bdh::oracle {

using VertexSet = std::vector<VertexId>;  // sorted, duplicate-free

/// A maximal biclique as its two sorted shores.
struct BicliquePair {
  VertexSet x;
  VertexSet y;

  friend auto operator<=>(const BicliquePair&, const BicliquePair&) = default;
};

using BicliqueSet = std::set<BicliquePair>;

inline constexpr std::size_t kMaxEnumerationShore = 20;
inline constexpr std::size_t kMaxForbiddenSearchVertices = 14;

/// All maximal bicliques with both shores non-empty, by closing every
/// non-empty subset of the smaller shore. Throws GuardError when the smaller
/// shore exceeds kMaxEnumerationShore.
BicliqueSet enumerate_maximal_bicliques_bruteforce(const BipartiteGraph& g);

/// Cover pairs (lower, higher) of the X-inclusion order, as element pairs.
std::set<std::pair<BicliquePair, BicliquePair>> hasse_bruteforce(const BicliqueSet& bs);

/// True iff g is connected and has no induced domino and no induced cycle of
/// length >= 6. Throws GuardError above kMaxForbiddenSearchVertices vertices.
bool is_bdh_forbidden_subgraph(const BipartiteGraph& g);

/// True iff every two members are disjoint or nested.
bool is_laminar(const std::vector<VertexSet>& family);

/// True iff (x, y) is a biclique of g that no vertex can extend.
bool is_maximal_biclique(const BipartiteGraph& g, const BicliquePair& b);

}  // namespace bdh::oracle
