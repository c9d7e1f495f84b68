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

#include "bdh/bigraph.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "bdh/error.hpp"

namespace bdh {

bool BipartiteGraph::adjacent(VertexId u, VertexId v) const {
  auto nu = neighbors(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::vector<VertexId> BipartiteGraph::shore_vertices(Shore s) const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < shore_.size(); ++v) {
    if (shore_[v] == s) out.push_back(static_cast<VertexId>(v));
  }
  return out;
}

std::size_t BipartiteGraph::shore_size(Shore s) const {
  return static_cast<std::size_t>(std::count(shore_.begin(), shore_.end(), s));
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (static_cast<VertexId>(u) < v) out.emplace_back(static_cast<VertexId>(u), v);
    }
  }
  return out;
}

bool BipartiteGraph::is_connected() const {
  const std::size_t n = vertex_count();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adjacency_[static_cast<std::size_t>(v)]) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

BipartiteGraph BipartiteGraph::from_edges(std::vector<Shore> shores,
                                          std::span<const Edge> edges) {
  GraphBuilder b(shores.size());
  for (Shore s : shores) b.add_vertex(s);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

GraphBuilder::GraphBuilder(std::size_t reserve_vertices) {
  graph_.shore_.reserve(reserve_vertices);
  graph_.adjacency_.reserve(reserve_vertices);
}

void GraphBuilder::check_vertex(VertexId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= graph_.vertex_count()) {
    throw GraphError("vertex " + std::to_string(v + 1) + " out of range");
  }
}

VertexId GraphBuilder::add_vertex(Shore s) {
  graph_.shore_.push_back(s);
  graph_.adjacency_.emplace_back();
  return static_cast<VertexId>(graph_.shore_.size() - 1);
}

void GraphBuilder::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u + 1));
  if (graph_.shore(u) == graph_.shore(v)) {
    throw GraphError("edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1) +
                     " joins two vertices of shore " + shore_char(graph_.shore(u)));
  }
  auto& au = graph_.adjacency_[static_cast<std::size_t>(u)];
  auto pos = std::lower_bound(au.begin(), au.end(), v);
  if (pos != au.end() && *pos == v) {
    throw GraphError("parallel edge " + std::to_string(u + 1) + "-" +
                     std::to_string(v + 1));
  }
  au.insert(pos, v);
  auto& av = graph_.adjacency_[static_cast<std::size_t>(v)];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++graph_.edge_count_;
}

// New vertices always carry the largest id, so appending keeps lists sorted.
VertexId GraphBuilder::add_false_twin(VertexId twin) {
  check_vertex(twin);
  const VertexId v = add_vertex(graph_.shore(twin));
  auto& adj = graph_.adjacency_;
  adj[static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(twin)];
  for (VertexId w : adj[static_cast<std::size_t>(v)]) {
    adj[static_cast<std::size_t>(w)].push_back(v);
  }
  graph_.edge_count_ += adj[static_cast<std::size_t>(v)].size();
  return v;
}

VertexId GraphBuilder::add_pending(VertexId anchor) {
  check_vertex(anchor);
  const VertexId v = add_vertex(opposite(graph_.shore(anchor)));
  graph_.adjacency_[static_cast<std::size_t>(v)].push_back(anchor);
  graph_.adjacency_[static_cast<std::size_t>(anchor)].push_back(v);
  ++graph_.edge_count_;
  return v;
}

void validate(const ConstructionSequence& seq) {
  for (std::size_t j = 0; j < seq.steps.size(); ++j) {
    const ConstructionStep& s = seq.steps[j];
    const auto expected = static_cast<VertexId>(j + 1);
    if (s.vertex != expected) {
      throw SequenceError(j, "expected vertex " + std::to_string(expected + 1) +
                                 ", found " + std::to_string(s.vertex + 1));
    }
    if (s.anchor < 0 || s.anchor >= s.vertex) {
      throw SequenceError(j, "anchor " + std::to_string(s.anchor + 1) +
                                 " does not precede vertex " +
                                 std::to_string(s.vertex + 1));
    }
    if (j == 0 && s.kind != StepKind::Pending) {
      throw SequenceError(j, "vertex 2 must be pending on vertex 1");
    }
  }
}

std::vector<Shore> sequence_shores(const ConstructionSequence& seq) {
  validate(seq);
  std::vector<Shore> shores;
  shores.reserve(seq.vertex_count());
  shores.push_back(seq.first_shore);
  for (const ConstructionStep& s : seq.steps) {
    const Shore anchor_shore = shores[static_cast<std::size_t>(s.anchor)];
    shores.push_back(s.kind == StepKind::Pending ? opposite(anchor_shore)
                                                 : anchor_shore);
  }
  return shores;
}

BipartiteGraph intermediate_graph(const ConstructionSequence& seq, std::size_t i) {
  validate(seq);
  if (i < 1 || i > seq.vertex_count()) {
    throw DomainError("intermediate graph index " + std::to_string(i) +
                      " outside [1, " + std::to_string(seq.vertex_count()) + "]");
  }
  GraphBuilder b(i);
  b.add_vertex(seq.first_shore);
  for (std::size_t j = 0; j + 1 < i; ++j) {
    const ConstructionStep& s = seq.steps[j];
    if (s.kind == StepKind::Pending) {
      b.add_pending(s.anchor);
    } else {
      b.add_false_twin(s.anchor);
    }
  }
  return std::move(b).build();
}

BipartiteGraph apply_sequence(const ConstructionSequence& seq) {
  return intermediate_graph(seq, seq.vertex_count());
}

namespace {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound);
  std::uint64_t w = rng();
  while (w >= limit) w = rng();
  return w % bound;
}

double unit_real(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

ConstructionSequence generate_random_bdh(std::size_t n, double twin_probability,
                                         std::uint64_t seed) {
  if (n < 2) throw DomainError("random BDH generation needs at least 2 vertices");
  if (!(twin_probability >= 0.0 && twin_probability <= 1.0)) {
    throw DomainError("twin probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  ConstructionSequence seq;
  seq.first_shore = Shore::X;
  seq.steps.reserve(n - 1);
  seq.steps.push_back({1, StepKind::Pending, 0});
  // Every existing vertex has degree >= 1 from vertex 2 on, so twin anchors
  // and pending anchors are both drawn from all existing vertices.
  for (std::size_t i = 2; i < n; ++i) {
    const bool twin = unit_real(rng) < twin_probability;
    const auto anchor = static_cast<VertexId>(uniform_below(rng, i));
    seq.steps.push_back({static_cast<VertexId>(i),
                         twin ? StepKind::FalseTwin : StepKind::Pending, anchor});
  }
  return seq;
}

BipartiteGraph relabel(const BipartiteGraph& g, std::span<const VertexId> new_id) {
  const std::size_t n = g.vertex_count();
  if (new_id.size() != n) throw DomainError("relabeling size mismatch");
  std::vector<Shore> shores(n);
  std::vector<char> used(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const VertexId t = new_id[v];
    if (t < 0 || static_cast<std::size_t>(t) >= n || used[static_cast<std::size_t>(t)]) {
      throw DomainError("relabeling is not a permutation");
    }
    used[static_cast<std::size_t>(t)] = 1;
    shores[static_cast<std::size_t>(t)] = g.shore(static_cast<VertexId>(v));
  }
  std::vector<Edge> edges = g.edges();
  for (auto& [u, v] : edges) {
    u = new_id[static_cast<std::size_t>(u)];
    v = new_id[static_cast<std::size_t>(v)];
  }
  return BipartiteGraph::from_edges(std::move(shores), edges);
}

}  // namespace bdh
