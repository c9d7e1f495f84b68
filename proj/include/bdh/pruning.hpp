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

/// \file pruning.hpp
/// \brief Recognition of bipartite distance-hereditary graphs by pruning.

#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "bdh/bigraph.hpp"

namespace bdh {

/// The input is BDH. `sequence` builds a copy of it in which construction
/// vertex `i` is input vertex `original[i]`.
struct Accepted {
  ConstructionSequence sequence;
  std::vector<VertexId> original;
};

/// Pruning got stuck: the remaining induced subgraph has no pending vertex
/// and no pair of false twins. `remaining` lists input vertex ids, ascending.
struct Rejected {
  std::size_t stuck_graph_size = 0;
  std::vector<VertexId> remaining;
};

struct RecognitionResult {
  std::variant<Accepted, Rejected> outcome;

  bool accepted() const noexcept { return std::holds_alternative<Accepted>(outcome); }
  const Accepted& as_accepted() const { return std::get<Accepted>(outcome); }
  const Rejected& as_rejected() const { return std::get<Rejected>(outcome); }
};

/// Repeatedly removes the lowest-indexed pending vertex, or when there is
/// none the lowest-indexed vertex that has a lower-indexed false twin, until
/// one edge remains. The X end of that edge becomes construction vertex 1.
///
/// Throws DomainError for graphs that are disconnected or have fewer than
/// two vertices.
RecognitionResult extract_pruning_sequence(const BipartiteGraph& g);

bool is_bdh(const BipartiteGraph& g);

}  // namespace bdh
