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

/// \file lattice_explicit.hpp
/// \brief Hasse diagram of the Galois lattice of a BDH graph with every
/// maximal biclique listed explicitly.
///
/// Bicliques are ordered by inclusion of their X shores: B <= B' iff
/// X(B) is a subset of X(B'). "Up" therefore means larger X and smaller Y.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bdh/bigraph.hpp"

namespace bdh {

using BicliqueId = std::int32_t;

inline constexpr BicliqueId kNoBiclique = -1;

struct Biclique {
  BicliqueId id = kNoBiclique;
  std::vector<VertexId> x;  // append order, not sorted
  std::vector<VertexId> y;
  std::vector<BicliqueId> covered;   // B'' with B'' covered by this
  std::vector<BicliqueId> covering;  // B'' covering this
};

/// H°(G): the maximal bicliques with their cover pairs, no top or bottom.
class HasseDiagram {
 public:
  HasseDiagram() = default;
  HasseDiagram(std::vector<Biclique> bicliques, std::vector<BicliqueId> introducer,
               std::vector<Shore> shores, std::size_t edge_count);

  std::size_t biclique_count() const noexcept { return bicliques_.size(); }
  const Biclique& biclique(BicliqueId id) const {
    return bicliques_.at(static_cast<std::size_t>(id));
  }
  std::span<const Biclique> bicliques() const noexcept { return bicliques_; }

  std::size_t vertex_count() const noexcept { return shore_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  Shore shore(VertexId v) const { return shore_.at(static_cast<std::size_t>(v)); }
  std::span<const Shore> shores() const noexcept { return shore_; }

  /// Lowest biclique containing v for v in X, highest for v in Y.
  /// kNoBiclique only on a single-vertex graph.
  BicliqueId introducer(VertexId v) const {
    return introducer_.at(static_cast<std::size_t>(v));
  }

  /// (lower, higher) pairs, ordered by lower then higher id.
  std::vector<std::pair<BicliqueId, BicliqueId>> cover_pairs() const;

 private:
  friend class DiagramBuilder;

  std::vector<Biclique> bicliques_;
  std::vector<BicliqueId> introducer_;
  std::vector<Shore> shore_;
  std::size_t edge_count_ = 0;
};

/// Incremental construction: feed the steps of a sequence one at a time and
/// inspect H°(G_i) in between.
class DiagramBuilder {
 public:
  /// Starts from G_1 (single vertex, empty diagram). Validates `seq`.
  explicit DiagramBuilder(const ConstructionSequence& seq);

  /// Number of vertices processed so far (i of G_i).
  std::size_t processed() const noexcept { return diagram_.shore_.size(); }
  bool done() const noexcept { return processed() == seq_.vertex_count(); }
  /// Processes the next step. Must not be called when done().
  void advance();

  const HasseDiagram& current() const noexcept { return diagram_; }
  HasseDiagram finish() &&;

 private:
  void add_twin(VertexId v, VertexId anchor);
  void add_pending(VertexId v, VertexId anchor);
  BicliqueId new_biclique();

  ConstructionSequence seq_;
  std::vector<Shore> all_shores_;
  HasseDiagram diagram_;
  std::vector<BicliqueId> stack_;
};

/// Builds H°(G) for the graph produced by `seq` in O(m) time.
/// Throws SequenceError if `seq` is malformed.
HasseDiagram compute_bdh_diagram(const ConstructionSequence& seq);

/// Bicliques containing v, in depth-first order from its introducer.
/// Throws DomainError for an unknown vertex.
std::vector<BicliqueId> bicliques_containing(const HasseDiagram& h, VertexId v);

/// An element of the full Galois lattice.
struct LatticeElement {
  enum class Kind : std::uint8_t { Proper, Bottom, Top };

  Kind kind = Kind::Proper;
  /// Source biclique for Proper elements.
  BicliqueId source = kNoBiclique;
  std::vector<VertexId> x;  // sorted
  std::vector<VertexId> y;  // sorted
};

/// H(G): H°(G) plus whichever of bottom and top is not already a biclique.
struct LatticeView {
  std::vector<LatticeElement> elements;  // proper elements keep their ids
  std::vector<std::pair<std::size_t, std::size_t>> covers;  // (lower, higher)
  std::optional<std::size_t> bottom;  // index of an added dummy
  std::optional<std::size_t> top;
};

/// Adjoins the dummy bottom (empty X, all of Y) below every minimal
/// biclique and the dummy top (all of X, empty Y) above every maximal one.
/// A side is skipped when some biclique already has all of Y (resp. X),
/// which happens exactly when a vertex is adjacent to the whole opposite
/// shore.
LatticeView add_top_bottom(const HasseDiagram& h);

}  // namespace bdh
