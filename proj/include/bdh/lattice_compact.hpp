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

/// \file lattice_compact.hpp
/// \brief O(n) encoding of a BDH graph and of its Hasse diagram.
///
/// Each shore S gets an arborescence T_S with one arc per vertex of S. Every
/// neighbourhood N(v) and every biclique shore is a directed path of the
/// opposite (resp. same) arborescence, stored as its end arcs [alpha, beta]:
/// alpha is the arc closest to the root, beta the farthest.
///
/// The alpha end of a biclique shore is not stored directly. All bicliques
/// whose alpha is the same arc share one AlphaCell, so when that arc is
/// subdivided by a false twin a single cell write retargets all of them.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bdh/bigraph.hpp"
#include "bdh/lattice_explicit.hpp"

namespace bdh {

using ArcId = std::int32_t;
using CellId = std::int32_t;

inline constexpr ArcId kNoArc = -1;
inline constexpr CellId kNoCell = -1;

/// Rooted tree of arcs, each arc labelled by a vertex of one shore.
class Arborescence {
 public:
  std::size_t arc_count() const noexcept { return parent_.size(); }
  ArcId root() const noexcept { return root_; }
  /// kNoArc for the root arc.
  ArcId parent(ArcId a) const { return parent_.at(static_cast<std::size_t>(a)); }
  VertexId label(ArcId a) const { return label_.at(static_cast<std::size_t>(a)); }

  /// Seeds an empty arborescence with its root arc.
  ArcId add_root(VertexId label);
  /// New arc hanging below `parent`.
  ArcId append_leaf(ArcId parent, VertexId label);
  /// Subdivides `arc`: the new arc takes its place under the old parent and
  /// `arc` becomes its only child.
  ArcId split_above(ArcId arc, VertexId label);

  /// True iff `ancestor` lies on the walk from `a` to the root (inclusive).
  bool is_ancestor_or_self(ArcId ancestor, ArcId a) const;

 private:
  std::vector<ArcId> parent_;
  std::vector<VertexId> label_;
  ArcId root_ = kNoArc;
};

struct Interval {
  ArcId alpha = kNoArc;
  ArcId beta = kNoArc;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Labels of the arcs from `iv.beta` up to `iv.alpha`, in that order.
/// Throws CorruptIntervalError when alpha is not an ancestor of beta.
std::vector<VertexId> decode_interval(const Arborescence& t, Interval iv);

/// A biclique shore with the alpha end held by reference.
struct ShoreInterval {
  CellId alpha = kNoCell;
  ArcId beta = kNoArc;
};

struct CompactBiclique {
  BicliqueId id = kNoBiclique;
  ShoreInterval x;  // over T_X
  ShoreInterval y;  // over T_Y
  std::vector<BicliqueId> covered;
  std::vector<BicliqueId> covering;
};

/// Storage breakdown, in units of one arc / biclique / cover pair / cell.
struct CompactFootprint {
  std::size_t arcs = 0;
  std::size_t bicliques = 0;
  std::size_t cover_pairs = 0;
  std::size_t cells = 0;

  std::size_t total() const noexcept { return arcs + bicliques + cover_pairs + cells; }
};

class CompactDiagram {
 public:
  std::size_t vertex_count() const noexcept { return shore_.size(); }
  Shore shore(VertexId v) const { return shore_.at(static_cast<std::size_t>(v)); }

  std::size_t biclique_count() const noexcept { return bicliques_.size(); }
  const CompactBiclique& biclique(BicliqueId id) const {
    return bicliques_.at(static_cast<std::size_t>(id));
  }
  std::span<const CompactBiclique> bicliques() const noexcept { return bicliques_; }

  const Arborescence& arborescence(Shore s) const noexcept {
    return s == Shore::X ? t_x_ : t_y_;
  }
  const Arborescence& t_x() const noexcept { return t_x_; }
  const Arborescence& t_y() const noexcept { return t_y_; }

  /// psi(v): the arc of v in the arborescence of its own shore.
  ArcId arc_of(VertexId v) const { return arc_of_.at(static_cast<std::size_t>(v)); }
  BicliqueId introducer(VertexId v) const {
    return introducer_.at(static_cast<std::size_t>(v));
  }

  /// Current arc held by an alpha cell of the given arborescence.
  ArcId cell_value(Shore s, CellId c) const {
    return (s == Shore::X ? cells_x_ : cells_y_).at(static_cast<std::size_t>(c));
  }
  Interval x_interval(BicliqueId id) const;
  Interval y_interval(BicliqueId id) const;
  Interval interval(BicliqueId id, Shore s) const {
    return s == Shore::X ? x_interval(id) : y_interval(id);
  }

  /// psi(N(v)) in the arborescence of the opposite shore. N(v) is the
  /// opposite shore of v's introducer, so this is read off that biclique.
  Interval neighborhood_interval(VertexId v) const;

  CompactFootprint footprint() const noexcept;

 private:
  friend class CompactBuilder;

  std::vector<CompactBiclique> bicliques_;
  Arborescence t_x_;
  Arborescence t_y_;
  std::vector<ArcId> cells_x_;
  std::vector<ArcId> cells_y_;
  std::vector<ArcId> arc_of_;
  std::vector<BicliqueId> introducer_;
  std::vector<Shore> shore_;
};

/// Step-by-step construction, O(1) per step.
class CompactBuilder {
 public:
  /// Starts from G_1. Validates `seq`.
  explicit CompactBuilder(const ConstructionSequence& seq);

  std::size_t processed() const noexcept { return diagram_.shore_.size(); }
  bool done() const noexcept { return processed() == seq_.vertex_count(); }
  void advance();

  const CompactDiagram& current() const noexcept { return diagram_; }
  CompactDiagram finish() &&;

 private:
  void add_twin(VertexId v, VertexId anchor);
  void add_pending(VertexId v, VertexId anchor);
  /// The unique live cell holding `arc`, created on first use.
  CellId cell_for(Shore s, ArcId arc);

  ConstructionSequence seq_;
  std::vector<Shore> all_shores_;
  CompactDiagram diagram_;
  // Arc -> cell currently holding it, per arborescence.
  std::vector<CellId> cell_of_x_;
  std::vector<CellId> cell_of_y_;
};

/// Builds the arborescences and the interval-encoded H°(G) in O(n) time.
CompactDiagram fast_compute_bdh_diagram(const ConstructionSequence& seq);

/// Both shores decoded, in beta-to-alpha walk order. Throws DomainError for
/// an unknown id.
Biclique decode_biclique(const CompactDiagram& d, BicliqueId id);

/// Same cover structure and ids, vertex lists decoded.
HasseDiagram to_explicit(const CompactDiagram& d);

}  // namespace bdh
