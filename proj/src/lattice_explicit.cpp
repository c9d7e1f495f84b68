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

#include "bdh/lattice_explicit.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "bdh/error.hpp"

namespace bdh {
namespace {

std::vector<VertexId>& shore_of(Biclique& b, Shore s) { return s == Shore::X ? b.x : b.y; }

std::size_t idx(std::int32_t i) { return static_cast<std::size_t>(i); }

}  // namespace

HasseDiagram::HasseDiagram(std::vector<Biclique> bicliques,
                           std::vector<BicliqueId> introducer, std::vector<Shore> shores,
                           std::size_t edge_count)
    : bicliques_(std::move(bicliques)),
      introducer_(std::move(introducer)),
      shore_(std::move(shores)),
      edge_count_(edge_count) {}

std::vector<std::pair<BicliqueId, BicliqueId>> HasseDiagram::cover_pairs() const {
  std::vector<std::pair<BicliqueId, BicliqueId>> out;
  for (const Biclique& b : bicliques_) {
    for (BicliqueId up : b.covering) out.emplace_back(b.id, up);
  }
  std::sort(out.begin(), out.end());
  return out;
}

DiagramBuilder::DiagramBuilder(const ConstructionSequence& seq)
    : seq_(seq), all_shores_(sequence_shores(seq)) {
  diagram_.shore_.reserve(all_shores_.size());
  diagram_.introducer_.reserve(all_shores_.size());
  diagram_.shore_.push_back(all_shores_[0]);
  diagram_.introducer_.push_back(kNoBiclique);
}

BicliqueId DiagramBuilder::new_biclique() {
  const auto id = static_cast<BicliqueId>(diagram_.bicliques_.size());
  diagram_.bicliques_.emplace_back().id = id;
  return id;
}

void DiagramBuilder::advance() {
  const std::size_t i = processed();
  const ConstructionStep& step = seq_.steps.at(i - 1);
  diagram_.shore_.push_back(all_shores_[i]);
  diagram_.introducer_.push_back(kNoBiclique);

  if (i == 1) {
    // G_2 is a single edge: one biclique ({v1}, {v2}).
    const BicliqueId b = new_biclique();
    Biclique& first = diagram_.bicliques_[idx(b)];
    shore_of(first, all_shores_[0]).push_back(0);
    shore_of(first, all_shores_[1]).push_back(1);
    diagram_.introducer_[0] = b;
    diagram_.introducer_[1] = b;
    diagram_.edge_count_ = 1;
    return;
  }
  if (step.kind == StepKind::FalseTwin) {
    add_twin(step.vertex, step.anchor);
  } else {
    add_pending(step.vertex, step.anchor);
  }
}

// v joins every biclique containing its twin: the bicliques above the
// twin's introducer for an X vertex, below it for a Y vertex. H° is a tree,
// so the traversal reaches each one once.
void DiagramBuilder::add_twin(VertexId v, VertexId anchor) {
  const Shore s = all_shores_[idx(v)];
  const BicliqueId intro = diagram_.introducer_[idx(anchor)];
  auto& bicliques = diagram_.bicliques_;
  diagram_.edge_count_ += shore_of(bicliques[idx(intro)], opposite(s)).size();

  stack_.clear();
  stack_.push_back(intro);
  while (!stack_.empty()) {
    Biclique& b = bicliques[idx(stack_.back())];
    stack_.pop_back();
    shore_of(b, s).push_back(v);
    const auto& next = s == Shore::X ? b.covering : b.covered;
    stack_.insert(stack_.end(), next.begin(), next.end());
  }
  diagram_.introducer_[idx(v)] = intro;
}

void DiagramBuilder::add_pending(VertexId v, VertexId anchor) {
  const Shore s = all_shores_[idx(v)];
  const BicliqueId intro = diagram_.introducer_[idx(anchor)];
  diagram_.edge_count_ += 1;

  // intro is (N(anchor), {anchor}) exactly when the anchor's shore of it is
  // a singleton.
  if (shore_of(diagram_.bicliques_[idx(intro)], opposite(s)).size() == 1) {
    shore_of(diagram_.bicliques_[idx(intro)], s).push_back(v);
    diagram_.introducer_[idx(v)] = intro;
    return;
  }

  const BicliqueId fresh = new_biclique();
  Biclique& b = diagram_.bicliques_[idx(fresh)];
  Biclique& old = diagram_.bicliques_[idx(intro)];
  auto& grown = shore_of(b, s);
  grown.reserve(shore_of(old, s).size() + 1);
  grown = shore_of(old, s);
  grown.push_back(v);
  shore_of(b, opposite(s)).push_back(anchor);
  if (s == Shore::X) {
    b.covered.push_back(intro);
    old.covering.push_back(fresh);
  } else {
    b.covering.push_back(intro);
    old.covered.push_back(fresh);
  }
  diagram_.introducer_[idx(anchor)] = fresh;
  diagram_.introducer_[idx(v)] = fresh;
}

HasseDiagram DiagramBuilder::finish() && {
  while (!done()) advance();
  return std::move(diagram_);
}

HasseDiagram compute_bdh_diagram(const ConstructionSequence& seq) {
  return DiagramBuilder(seq).finish();
}

std::vector<BicliqueId> bicliques_containing(const HasseDiagram& h, VertexId v) {
  if (v < 0 || idx(v) >= h.vertex_count()) {
    throw DomainError("unknown vertex " + std::to_string(v + 1));
  }
  std::vector<BicliqueId> out;
  const BicliqueId intro = h.introducer(v);
  if (intro == kNoBiclique) return out;
  const bool upward = h.shore(v) == Shore::X;
  std::vector<BicliqueId> stack{intro};
  while (!stack.empty()) {
    const BicliqueId id = stack.back();
    stack.pop_back();
    out.push_back(id);
    const Biclique& b = h.biclique(id);
    const auto& next = upward ? b.covering : b.covered;
    stack.insert(stack.end(), next.rbegin(), next.rend());
  }
  return out;
}

LatticeView add_top_bottom(const HasseDiagram& h) {
  LatticeView view;
  if (h.biclique_count() == 0) return view;

  std::vector<VertexId> all_x;
  std::vector<VertexId> all_y;
  for (std::size_t v = 0; v < h.vertex_count(); ++v) {
    (h.shore(static_cast<VertexId>(v)) == Shore::X ? all_x : all_y)
        .push_back(static_cast<VertexId>(v));
  }

  bool has_full_x = false;
  bool has_full_y = false;
  for (const Biclique& b : h.bicliques()) {
    LatticeElement e;
    e.source = b.id;
    e.x = b.x;
    e.y = b.y;
    std::sort(e.x.begin(), e.x.end());
    std::sort(e.y.begin(), e.y.end());
    has_full_x = has_full_x || e.x.size() == all_x.size();
    has_full_y = has_full_y || e.y.size() == all_y.size();
    view.elements.push_back(std::move(e));
  }
  for (const auto& [lo, hi] : h.cover_pairs()) view.covers.emplace_back(idx(lo), idx(hi));

  if (!has_full_y) {
    const std::size_t bottom = view.elements.size();
    view.elements.push_back({LatticeElement::Kind::Bottom, kNoBiclique, {}, all_y});
    for (const Biclique& b : h.bicliques()) {
      if (b.covered.empty()) view.covers.emplace_back(bottom, idx(b.id));
    }
    view.bottom = bottom;
  }
  if (!has_full_x) {
    const std::size_t top = view.elements.size();
    view.elements.push_back({LatticeElement::Kind::Top, kNoBiclique, all_x, {}});
    for (const Biclique& b : h.bicliques()) {
      if (b.covering.empty()) view.covers.emplace_back(idx(b.id), top);
    }
    view.top = top;
  }
  std::sort(view.covers.begin(), view.covers.end());
  return view;
}

}  // namespace bdh
