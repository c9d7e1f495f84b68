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

#include "bdh/lattice_compact.hpp"

#include <string>
#include <utility>

#include "bdh/error.hpp"

namespace bdh {
namespace {

std::size_t idx(std::int32_t i) { return static_cast<std::size_t>(i); }

}  // namespace

ArcId Arborescence::add_root(VertexId label) {
  const auto a = static_cast<ArcId>(parent_.size());
  parent_.push_back(kNoArc);
  label_.push_back(label);
  root_ = a;
  return a;
}

ArcId Arborescence::append_leaf(ArcId parent, VertexId label) {
  const auto a = static_cast<ArcId>(parent_.size());
  parent_.push_back(parent);
  label_.push_back(label);
  return a;
}

ArcId Arborescence::split_above(ArcId arc, VertexId label) {
  const auto a = static_cast<ArcId>(parent_.size());
  parent_.push_back(parent_.at(idx(arc)));
  label_.push_back(label);
  parent_[idx(arc)] = a;
  if (root_ == arc) root_ = a;
  return a;
}

bool Arborescence::is_ancestor_or_self(ArcId ancestor, ArcId a) const {
  for (ArcId cur = a; cur != kNoArc; cur = parent(cur)) {
    if (cur == ancestor) return true;
  }
  return false;
}

std::vector<VertexId> decode_interval(const Arborescence& t, Interval iv) {
  const auto in_range = [&](ArcId a) { return a >= 0 && idx(a) < t.arc_count(); };
  if (!in_range(iv.alpha) || !in_range(iv.beta)) {
    throw CorruptIntervalError("interval end arc out of range");
  }
  std::vector<VertexId> out;
  ArcId cur = iv.beta;
  out.push_back(t.label(cur));
  while (cur != iv.alpha) {
    cur = t.parent(cur);
    if (cur == kNoArc) {
      throw CorruptIntervalError("arc " + std::to_string(iv.alpha) +
                                 " is not an ancestor of arc " + std::to_string(iv.beta));
    }
    out.push_back(t.label(cur));
  }
  return out;
}

Interval CompactDiagram::x_interval(BicliqueId id) const {
  const ShoreInterval& s = biclique(id).x;
  return {cells_x_.at(idx(s.alpha)), s.beta};
}

Interval CompactDiagram::y_interval(BicliqueId id) const {
  const ShoreInterval& s = biclique(id).y;
  return {cells_y_.at(idx(s.alpha)), s.beta};
}

Interval CompactDiagram::neighborhood_interval(VertexId v) const {
  if (v < 0 || idx(v) >= vertex_count()) {
    throw DomainError("unknown vertex " + std::to_string(v + 1));
  }
  const BicliqueId intro = introducer(v);
  if (intro == kNoBiclique) throw DomainError("a single vertex has no neighbourhood");
  return interval(intro, opposite(shore(v)));
}

CompactFootprint CompactDiagram::footprint() const noexcept {
  CompactFootprint f;
  f.arcs = t_x_.arc_count() + t_y_.arc_count();
  f.bicliques = bicliques_.size();
  for (const CompactBiclique& b : bicliques_) f.cover_pairs += b.covering.size();
  f.cells = cells_x_.size() + cells_y_.size();
  return f;
}

CompactBuilder::CompactBuilder(const ConstructionSequence& seq)
    : seq_(seq), all_shores_(sequence_shores(seq)) {
  const Shore s0 = all_shores_[0];
  diagram_.shore_.push_back(s0);
  diagram_.introducer_.push_back(kNoBiclique);
  diagram_.arc_of_.push_back(
      (s0 == Shore::X ? diagram_.t_x_ : diagram_.t_y_).add_root(0));
  (s0 == Shore::X ? cell_of_x_ : cell_of_y_).push_back(kNoCell);
}

CellId CompactBuilder::cell_for(Shore s, ArcId arc) {
  auto& cell_of = s == Shore::X ? cell_of_x_ : cell_of_y_;
  auto& cells = s == Shore::X ? diagram_.cells_x_ : diagram_.cells_y_;
  CellId& c = cell_of[idx(arc)];
  if (c == kNoCell) {
    c = static_cast<CellId>(cells.size());
    cells.push_back(arc);
  }
  return c;
}

void CompactBuilder::advance() {
  const std::size_t i = processed();
  const ConstructionStep& step = seq_.steps.at(i - 1);
  diagram_.shore_.push_back(all_shores_[i]);
  diagram_.introducer_.push_back(kNoBiclique);
  diagram_.arc_of_.push_back(kNoArc);

  if (i == 1) {
    const Shore s1 = all_shores_[1];
    const ArcId a1 = (s1 == Shore::X ? diagram_.t_x_ : diagram_.t_y_).add_root(1);
    (s1 == Shore::X ? cell_of_x_ : cell_of_y_).push_back(kNoCell);
    diagram_.arc_of_[1] = a1;

    CompactBiclique b;
    b.id = 0;
    const VertexId vx = all_shores_[0] == Shore::X ? 0 : 1;
    const VertexId vy = 1 - vx;
    b.x = {cell_for(Shore::X, diagram_.arc_of_[idx(vx)]), diagram_.arc_of_[idx(vx)]};
    b.y = {cell_for(Shore::Y, diagram_.arc_of_[idx(vy)]), diagram_.arc_of_[idx(vy)]};
    diagram_.bicliques_.push_back(std::move(b));
    diagram_.introducer_[0] = 0;
    diagram_.introducer_[1] = 0;
    return;
  }
  if (step.kind == StepKind::FalseTwin) {
    add_twin(step.vertex, step.anchor);
  } else {
    add_pending(step.vertex, step.anchor);
  }
}

// Subdivide psi(anchor) with the new arc on the root side. Paths through
// psi(anchor) now pass through the new arc too; only paths starting at
// psi(anchor) need their alpha moved, which is one write to the shared cell.
void CompactBuilder::add_twin(VertexId v, VertexId anchor) {
  const Shore s = all_shores_[idx(v)];
  Arborescence& t = s == Shore::X ? diagram_.t_x_ : diagram_.t_y_;
  auto& cell_of = s == Shore::X ? cell_of_x_ : cell_of_y_;
  auto& cells = s == Shore::X ? diagram_.cells_x_ : diagram_.cells_y_;

  const ArcId old_arc = diagram_.arc_of_[idx(anchor)];
  const ArcId new_arc = t.split_above(old_arc, v);
  cell_of.push_back(kNoCell);
  if (const CellId c = cell_of[idx(old_arc)]; c != kNoCell) {
    cells[idx(c)] = new_arc;
    cell_of[idx(new_arc)] = c;
    cell_of[idx(old_arc)] = kNoCell;
  }
  diagram_.arc_of_[idx(v)] = new_arc;
  diagram_.introducer_[idx(v)] = diagram_.introducer_[idx(anchor)];
}

void CompactBuilder::add_pending(VertexId v, VertexId anchor) {
  const Shore s = all_shores_[idx(v)];
  const Shore o = opposite(s);
  Arborescence& t = s == Shore::X ? diagram_.t_x_ : diagram_.t_y_;
  const BicliqueId intro = diagram_.introducer_[idx(anchor)];

  auto side = [](CompactBiclique& b, Shore sh) -> ShoreInterval& {
    return sh == Shore::X ? b.x : b.y;
  };

  // N(anchor) is the s-side of intro; v extends that path by one leaf arc.
  const ArcId new_arc = t.append_leaf(side(diagram_.bicliques_[idx(intro)], s).beta, v);
  (s == Shore::X ? cell_of_x_ : cell_of_y_).push_back(kNoCell);
  diagram_.arc_of_[idx(v)] = new_arc;

  const ShoreInterval anchor_side = side(diagram_.bicliques_[idx(intro)], o);
  if (diagram_.cell_value(o, anchor_side.alpha) == anchor_side.beta) {
    side(diagram_.bicliques_[idx(intro)], s).beta = new_arc;
    diagram_.introducer_[idx(v)] = intro;
    return;
  }

  const auto fresh = static_cast<BicliqueId>(diagram_.bicliques_.size());
  CompactBiclique b;
  b.id = fresh;
  side(b, s) = {side(diagram_.bicliques_[idx(intro)], s).alpha, new_arc};
  const ArcId anchor_arc = diagram_.arc_of_[idx(anchor)];
  side(b, o) = {cell_for(o, anchor_arc), anchor_arc};
  if (s == Shore::X) {
    b.covered.push_back(intro);
    diagram_.bicliques_[idx(intro)].covering.push_back(fresh);
  } else {
    b.covering.push_back(intro);
    diagram_.bicliques_[idx(intro)].covered.push_back(fresh);
  }
  diagram_.bicliques_.push_back(std::move(b));
  diagram_.introducer_[idx(anchor)] = fresh;
  diagram_.introducer_[idx(v)] = fresh;
}

CompactDiagram CompactBuilder::finish() && {
  while (!done()) advance();
  return std::move(diagram_);
}

CompactDiagram fast_compute_bdh_diagram(const ConstructionSequence& seq) {
  return CompactBuilder(seq).finish();
}

Biclique decode_biclique(const CompactDiagram& d, BicliqueId id) {
  if (id < 0 || idx(id) >= d.biclique_count()) {
    throw DomainError("unknown biclique " + std::to_string(id));
  }
  const CompactBiclique& cb = d.biclique(id);
  Biclique b;
  b.id = id;
  b.x = decode_interval(d.t_x(), d.x_interval(id));
  b.y = decode_interval(d.t_y(), d.y_interval(id));
  b.covered = cb.covered;
  b.covering = cb.covering;
  return b;
}

HasseDiagram to_explicit(const CompactDiagram& d) {
  std::vector<Biclique> bicliques;
  bicliques.reserve(d.biclique_count());
  for (std::size_t i = 0; i < d.biclique_count(); ++i) {
    bicliques.push_back(decode_biclique(d, static_cast<BicliqueId>(i)));
  }
  std::vector<BicliqueId> introducer(d.vertex_count());
  std::vector<Shore> shores(d.vertex_count());
  std::size_t edges = 0;
  for (std::size_t v = 0; v < d.vertex_count(); ++v) {
    introducer[v] = d.introducer(static_cast<VertexId>(v));
    shores[v] = d.shore(static_cast<VertexId>(v));
    if (shores[v] == Shore::X && introducer[v] != kNoBiclique) {
      edges += bicliques[idx(introducer[v])].y.size();
    }
  }
  return HasseDiagram(std::move(bicliques), std::move(introducer), std::move(shores), edges);
}

}  // namespace bdh
