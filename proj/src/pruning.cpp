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

#include "bdh/pruning.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <unordered_map>

#include "bdh/error.hpp"

namespace bdh {
namespace {

struct Removal {
  VertexId vertex;
  StepKind kind;
  VertexId anchor;
};

std::uint64_t neighborhood_hash(Shore s, const std::vector<VertexId>& nbrs) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<std::uint64_t>(s);
  for (VertexId w : nbrs) {
    h ^= static_cast<std::uint64_t>(w) + 0x9e3779b97f4a7c15ULL;
    h *= 0x100000001b3ULL;
  }
  return h;
}

class Pruner {
 public:
  explicit Pruner(const BipartiteGraph& g) : g_(g), alive_(g.vertex_count(), 1) {
    const std::size_t n = g.vertex_count();
    adj_.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto nb = g.neighbors(static_cast<VertexId>(v));
      adj_.emplace_back(nb.begin(), nb.end());
      if (adj_.back().size() == 1) pending_.insert(static_cast<VertexId>(v));
    }
    alive_count_ = n;
  }

  RecognitionResult run() {
    while (alive_count_ > 2) {
      if (!pending_.empty()) {
        const VertexId v = *pending_.begin();
        const VertexId anchor = adj_[idx(v)].front();
        remove(v);
        removals_.push_back({v, StepKind::Pending, anchor});
        continue;
      }
      auto twins = find_twin_pair();
      if (!twins) return {Rejected{alive_count_, remaining()}};
      remove(twins->first);
      removals_.push_back({twins->first, StepKind::FalseTwin, twins->second});
    }
    return {finish()};
  }

 private:
  static std::size_t idx(VertexId v) { return static_cast<std::size_t>(v); }

  void remove(VertexId v) {
    for (VertexId w : adj_[idx(v)]) {
      auto& aw = adj_[idx(w)];
      aw.erase(std::lower_bound(aw.begin(), aw.end(), v));
      if (aw.size() == 1) {
        pending_.insert(w);
      } else {
        pending_.erase(w);
      }
    }
    adj_[idx(v)].clear();
    pending_.erase(v);
    alive_[idx(v)] = 0;
    --alive_count_;
  }

  // First vertex (ascending) with a lower-indexed false twin, paired with the
  // lowest such twin. Hash hits are confirmed on the full sorted lists.
  std::optional<std::pair<VertexId, VertexId>> find_twin_pair() const {
    std::unordered_map<std::uint64_t, std::vector<VertexId>> buckets;
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      if (!alive_[v]) continue;
      const auto vid = static_cast<VertexId>(v);
      auto& bucket = buckets[neighborhood_hash(g_.shore(vid), adj_[v])];
      for (VertexId u : bucket) {
        if (g_.shore(u) == g_.shore(vid) && adj_[idx(u)] == adj_[v]) {
          return std::make_pair(vid, u);
        }
      }
      bucket.push_back(vid);
    }
    return std::nullopt;
  }

  std::vector<VertexId> remaining() const {
    std::vector<VertexId> out;
    for (std::size_t v = 0; v < alive_.size(); ++v) {
      if (alive_[v]) out.push_back(static_cast<VertexId>(v));
    }
    return out;
  }

  Accepted finish() const {
    const std::vector<VertexId> last = remaining();
    VertexId x = last[0];
    VertexId y = last[1];
    if (g_.shore(x) != Shore::X) std::swap(x, y);

    Accepted acc;
    acc.original.reserve(g_.vertex_count());
    acc.original = {x, y};
    std::vector<VertexId> new_id(g_.vertex_count(), -1);
    new_id[idx(x)] = 0;
    new_id[idx(y)] = 1;

    acc.sequence.first_shore = Shore::X;
    acc.sequence.steps.reserve(g_.vertex_count() - 1);
    acc.sequence.steps.push_back({1, StepKind::Pending, 0});
    for (auto it = removals_.rbegin(); it != removals_.rend(); ++it) {
      const auto next = static_cast<VertexId>(acc.original.size());
      new_id[idx(it->vertex)] = next;
      acc.original.push_back(it->vertex);
      acc.sequence.steps.push_back({next, it->kind, new_id[idx(it->anchor)]});
    }
    return acc;
  }

  const BipartiteGraph& g_;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<char> alive_;
  std::set<VertexId> pending_;
  std::size_t alive_count_ = 0;
  std::vector<Removal> removals_;
};

}  // namespace

RecognitionResult extract_pruning_sequence(const BipartiteGraph& g) {
  if (g.vertex_count() < 2) {
    throw DomainError("recognition needs a connected graph on at least 2 vertices");
  }
  if (!g.is_connected()) throw DomainError("recognition is defined on connected graphs only");
  return Pruner(g).run();
}

bool is_bdh(const BipartiteGraph& g) { return extract_pruning_sequence(g).accepted(); }

}  // namespace bdh
