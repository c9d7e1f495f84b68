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

#include "bdh/commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <variant>

#include "bdh/io.hpp"
#include "bdh/lattice_compact.hpp"
#include "bdh/lattice_explicit.hpp"
#include "bdh/oracle.hpp"
#include "bdh/pruning.hpp"

namespace bdh::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void report_rejection(const Rejected& r, std::ostream& os) {
  os << "not BDH: pruning stuck on " << r.stuck_graph_size << " vertices\nremaining:";
  for (VertexId v : r.remaining) os << ' ' << v + 1;
  os << '\n';
}

// A graph ready for lattice construction: the sequence plus, for edge-list
// input, the map from construction order back to input names.
struct LoadedInput {
  ConstructionSequence sequence;
  std::vector<VertexId> original;
};

// Returns the rejection instead when an edge list is not BDH.
std::variant<LoadedInput, Rejected> load_bdh(const std::string& path) {
  const std::string text = read_file(path);
  if (io::detect_kind(text) == io::FileKind::Sequence) {
    return LoadedInput{io::parse_sequence(text), {}};
  }
  const BipartiteGraph g = io::parse_edge_list(text);
  RecognitionResult r = extract_pruning_sequence(g);
  if (!r.accepted()) return r.as_rejected();
  Accepted acc = std::get<Accepted>(std::move(r.outcome));
  return LoadedInput{std::move(acc.sequence), std::move(acc.original)};
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const GuardError& e) {
    err << "error: " << e.what() << '\n';
    return kGuardExceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace

int cmd_recognize(const std::string& path, const std::string& map_path, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    const BipartiteGraph g = io::parse_edge_list(read_file(path));
    const RecognitionResult r = extract_pruning_sequence(g);
    if (!r.accepted()) {
      report_rejection(r.as_rejected(), out);
      return static_cast<int>(kNotBdh);
    }
    const Accepted& acc = r.as_accepted();
    out << io::serialize_sequence(acc.sequence);
    if (!map_path.empty()) {
      std::ofstream map(map_path);
      if (!map) throw Error("cannot write " + map_path);
      map << "# construction_vertex input_vertex\n";
      for (std::size_t i = 0; i < acc.original.size(); ++i) {
        map << i + 1 << ' ' << acc.original[i] + 1 << '\n';
      }
    }
    return static_cast<int>(kOk);
  });
}

int cmd_lattice(const std::string& path, const LatticeOptions& opts, std::ostream& out,
                std::ostream& err) {
  return guarded(err, [&] {
    auto loaded = load_bdh(path);
    if (auto* rej = std::get_if<Rejected>(&loaded)) {
      report_rejection(*rej, err);
      return static_cast<int>(kNotBdh);
    }
    const LoadedInput& in = std::get<LoadedInput>(loaded);
    const io::Naming names{in.original};
    if (opts.compact) {
      const CompactDiagram d = fast_compute_bdh_diagram(in.sequence);
      out << (opts.dot ? io::compact_dot(d, names) : io::dump(io::compact_json(d, names)));
    } else {
      const HasseDiagram h = compute_bdh_diagram(in.sequence);
      out << (opts.dot ? io::lattice_dot(h, names, opts.with_top_bottom)
                       : io::dump(io::lattice_json(h, names, opts.with_top_bottom)));
    }
    return static_cast<int>(kOk);
  });
}

int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const ConstructionSequence seq =
        generate_random_bdh(opts.vertices, opts.twin_probability, opts.seed);
    out << (opts.emit_sequence ? io::serialize_sequence(seq)
                               : io::serialize_edge_list(apply_sequence(seq)));
    return static_cast<int>(kOk);
  });
}

int cmd_oracle(const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::string text = read_file(path);
    const BipartiteGraph g = io::detect_kind(text) == io::FileKind::Sequence
                                 ? apply_sequence(io::parse_sequence(text))
                                 : io::parse_edge_list(text);
    const auto bicliques = oracle::enumerate_maximal_bicliques_bruteforce(g);
    out << io::dump(io::oracle_json(g, bicliques));
    return static_cast<int>(kOk);
  });
}

std::vector<BenchRow> run_bench(const BenchOptions& opts) {
  using Clock = std::chrono::steady_clock;
  std::vector<BenchRow> rows;
  for (std::size_t size : opts.sizes) {
    const ConstructionSequence seq = generate_random_bdh(size, opts.twin_probability, opts.seed);
    BenchRow row;
    row.size = size;
    row.edges = apply_sequence(seq).edge_count();
    row.nanos = std::numeric_limits<std::uint64_t>::max();
    for (int rep = 0; rep < opts.repeats; ++rep) {
      const auto start = Clock::now();
      if (opts.algorithm == Algorithm::Explicit) {
        const HasseDiagram h = compute_bdh_diagram(seq);
        const auto stop = Clock::now();
        row.bicliques = h.biclique_count();
        row.nanos = std::min<std::uint64_t>(
            row.nanos, static_cast<std::uint64_t>(
                           std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
      } else {
        const CompactDiagram d = fast_compute_bdh_diagram(seq);
        const auto stop = Clock::now();
        row.bicliques = d.biclique_count();
        row.footprint = d.footprint().total();
        row.nanos = std::min<std::uint64_t>(
            row.nanos, static_cast<std::uint64_t>(
                           std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
      }
    }
    rows.push_back(row);
  }
  return rows;
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    for (std::size_t s : opts.sizes) {
      if (s < 2) throw DomainError("bench sizes must be at least 2");
    }
    out << "size,edges,bicliques,nanos\n";
    for (const BenchRow& r : run_bench(opts)) {
      out << r.size << ',' << r.edges << ',' << r.bicliques << ',' << r.nanos << '\n';
    }
    return static_cast<int>(kOk);
  });
}

}  // namespace bdh::cli
