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

/// \file io.hpp
/// \brief Text formats: edge lists, construction sequences, canonical
/// lattice JSON and Graphviz DOT. See docs/formats.md.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "bdh/bigraph.hpp"
#include "bdh/error.hpp"
#include "bdh/lattice_compact.hpp"
#include "bdh/lattice_explicit.hpp"
#include "bdh/oracle.hpp"
#include "json.hpp"

namespace bdh::io {

/// Malformed input text. `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

enum class FileKind { EdgeList, Sequence };

/// A sequence file starts (after comments) with "1 X" or "1 Y"; anything
/// else is treated as an edge list.
FileKind detect_kind(std::string_view text);

/// Lines "u v" with 1-based names; optional "# shores: X=1,3 Y=2,4" header;
/// other '#' lines are comments. Without a header the shores come from a
/// BFS 2-colouring that puts the smallest name of each component in X.
BipartiteGraph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const BipartiteGraph& g);

/// First line "1 X|Y", then "<i> <P|F> <k>" for i = 2..n.
ConstructionSequence parse_sequence(std::string_view text);
std::string serialize_sequence(const ConstructionSequence& seq);

/// Output vertex names: `original[v] + 1` when a relabeling is given,
/// `v + 1` otherwise.
struct Naming {
  std::span<const VertexId> original;

  int operator()(VertexId v) const {
    return (original.empty() ? v : original[static_cast<std::size_t>(v)]) + 1;
  }
};

/// Canonical lattice JSON (sorted keys, bicliques sorted by their vertex
/// lists and numbered in that order). Adds "bottom"/"top" keys when
/// `with_top_bottom` is set.
nlohmann::json lattice_json(const HasseDiagram& h, Naming names = {},
                            bool with_top_bottom = false);

/// Interval encoding: arborescences, per-biclique intervals, neighbourhood
/// intervals, introducers and the storage footprint.
nlohmann::json compact_json(const CompactDiagram& d, Naming names = {});

/// Same schema as lattice_json minus introducers.
nlohmann::json oracle_json(const BipartiteGraph& g, const oracle::BicliqueSet& bs);

/// Pretty-printed with a trailing newline; byte-stable for equal input.
std::string dump(const nlohmann::json& j);

std::string lattice_dot(const HasseDiagram& h, Naming names = {},
                        bool with_top_bottom = false);
/// The Hasse digraph followed by one digraph per arborescence.
std::string compact_dot(const CompactDiagram& d, Naming names = {});

}  // namespace bdh::io
