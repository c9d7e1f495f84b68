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

/// \file bigraph.hpp
/// \brief Bipartite graphs and the pending-vertex / false-twin construction
/// sequences that build bipartite distance-hereditary graphs.
///
/// Vertices are dense 0-based integers internally. File formats and the CLI
/// use 1-based names, so vertex `v` here is printed as `v + 1`.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace bdh {

using VertexId = std::int32_t;

enum class Shore : std::uint8_t { X, Y };

constexpr Shore opposite(Shore s) noexcept {
  return s == Shore::X ? Shore::Y : Shore::X;
}

constexpr char shore_char(Shore s) noexcept { return s == Shore::X ? 'X' : 'Y'; }

using Edge = std::pair<VertexId, VertexId>;

/// Simple undirected bipartite graph with sorted adjacency lists.
///
/// Instances are immutable once built; use GraphBuilder or
/// BipartiteGraph::from_edges to make one.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  /// Builds a graph on `shores.size()` vertices. Throws GraphError on loops,
  /// parallel edges, same-shore edges or out-of-range endpoints.
  static BipartiteGraph from_edges(std::vector<Shore> shores,
                                   std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return shore_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  Shore shore(VertexId v) const { return shore_.at(static_cast<std::size_t>(v)); }
  std::span<const VertexId> neighbors(VertexId v) const {
    return adjacency_.at(static_cast<std::size_t>(v));
  }
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  bool adjacent(VertexId u, VertexId v) const;

  /// Vertices of one shore in ascending order.
  std::vector<VertexId> shore_vertices(Shore s) const;
  std::size_t shore_size(Shore s) const;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  bool is_connected() const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  friend class GraphBuilder;

  std::vector<Shore> shore_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Incremental construction of a BipartiteGraph.
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(std::size_t reserve_vertices);

  VertexId add_vertex(Shore s);
  /// Inserts edge uv keeping both lists sorted. Throws GraphError if the
  /// edge is a loop, joins one shore, or already exists.
  void add_edge(VertexId u, VertexId v);
  /// Adds a vertex whose neighbourhood equals that of `twin`.
  VertexId add_false_twin(VertexId twin);
  /// Adds a degree-one vertex attached to `anchor`.
  VertexId add_pending(VertexId anchor);

  const BipartiteGraph& peek() const noexcept { return graph_; }
  BipartiteGraph build() && { return std::move(graph_); }

 private:
  void check_vertex(VertexId v) const;

  BipartiteGraph graph_;
};

enum class StepKind : std::uint8_t { Pending, FalseTwin };

constexpr char step_kind_char(StepKind k) noexcept {
  return k == StepKind::Pending ? 'P' : 'F';
}

/// One (v_i, C_i, v_k) triple of a construction sequence.
struct ConstructionStep {
  VertexId vertex = 0;
  StepKind kind = StepKind::Pending;
  VertexId anchor = 0;

  friend bool operator==(const ConstructionStep&, const ConstructionStep&) = default;
};

/// Reverse pruning sequence: vertex 0 alone, then `steps[j]` adds vertex j+1.
struct ConstructionSequence {
  Shore first_shore = Shore::X;
  std::vector<ConstructionStep> steps;

  std::size_t vertex_count() const noexcept { return steps.size() + 1; }

  friend bool operator==(const ConstructionSequence&,
                         const ConstructionSequence&) = default;
};

/// Throws SequenceError naming the first offending step.
void validate(const ConstructionSequence& seq);

/// Shore of every vertex of the graph the sequence builds. Validates `seq`.
std::vector<Shore> sequence_shores(const ConstructionSequence& seq);

BipartiteGraph apply_sequence(const ConstructionSequence& seq);

/// G_i: the subgraph induced by the first `i` vertices, 1 <= i <= n.
BipartiteGraph intermediate_graph(const ConstructionSequence& seq, std::size_t i);

/// Random BDH construction sequence on `n` vertices.
///
/// Randomness comes from std::mt19937_64 seeded with `seed`, whose output
/// sequence is fixed by the C++ standard. Draws are consumed as follows for
/// each step i >= 3: one 64-bit word `w` decides the kind (twin iff
/// `(w >> 11) * 2^-53 < twin_probability`), then bounded integers for the
/// anchor are drawn by rejection sampling, so results are identical across
/// standard libraries. Vertex 0 is on shore X and vertex 1 is pending on it.
ConstructionSequence generate_random_bdh(std::size_t n, double twin_probability,
                                         std::uint64_t seed);

/// Returns the graph with vertex `v` renamed to `new_id[v]`.
BipartiteGraph relabel(const BipartiteGraph& g, std::span<const VertexId> new_id);

}  // namespace bdh
