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

// bdh: recognise BDH graphs and build their Galois lattice diagrams.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "bdh/commands.hpp"

namespace {

// --seed wins; otherwise BDH_SEED; otherwise `fallback`.
std::uint64_t resolve_seed(const CLI::Option* flag, std::uint64_t flag_value,
                           std::uint64_t fallback) {
  if (flag->count() > 0) return flag_value;
  if (const char* env = std::getenv("BDH_SEED")) return std::stoull(env);
  return fallback;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace bdh::cli;

  CLI::App app{"Bipartite distance-hereditary graphs and their Galois lattices"};
  app.require_subcommand(1);

  std::string path;
  std::string map_path;
  auto* recognize = app.add_subcommand("recognize", "Print a construction sequence or reject");
  recognize->add_option("input", path, "Edge-list file")->required();
  recognize->add_option("--map", map_path, "Write construction-to-input vertex names here");

  LatticeOptions lat;
  std::string format = "json";
  auto* lattice = app.add_subcommand("lattice", "Hasse diagram of the Galois lattice");
  lattice->add_option("input", path, "Edge-list or sequence file")->required();
  lattice->add_flag("--compact", lat.compact, "Interval encoding over two arborescences");
  lattice->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  lattice->add_flag("--with-top-bottom", lat.with_top_bottom, "Adjoin bottom and top");

  GenOptions gen;
  std::uint64_t gen_seed = 0;
  std::string emit = "edges";
  auto* gen_cmd = app.add_subcommand("gen", "Random BDH instance");
  gen_cmd->add_option("--vertices", gen.vertices, "Number of vertices")->required();
  gen_cmd->add_option("--twin-prob", gen.twin_probability, "Probability of a twin step")
      ->check(CLI::Range(0.0, 1.0));
  auto* gen_seed_opt = gen_cmd->add_option("--seed", gen_seed, "PRNG seed (default: $BDH_SEED or 1)");
  gen_cmd->add_option("--emit", emit, "edges or sequence")
      ->check(CLI::IsMember({"edges", "sequence"}));

  auto* oracle = app.add_subcommand("oracle", "Brute-force lattice of a small bipartite graph");
  oracle->add_option("input", path, "Edge-list or sequence file")->required();

  BenchOptions bench;
  std::uint64_t bench_seed = 0;
  std::string algo = "compact";
  auto* bench_cmd = app.add_subcommand("bench", "Time lattice construction, CSV output");
  bench_cmd->add_option("--sizes", bench.sizes, "Comma-separated vertex counts")
      ->delimiter(',')
      ->required();
  bench_cmd->add_option("--twin-prob", bench.twin_probability, "Probability of a twin step")
      ->check(CLI::Range(0.0, 1.0));
  auto* bench_seed_opt = bench_cmd->add_option("--seed", bench_seed, "PRNG seed (default: $BDH_SEED or 1)");
  bench_cmd->add_option("--algo", algo, "explicit or compact")
      ->check(CLI::IsMember({"explicit", "compact"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*recognize) return cmd_recognize(path, map_path, std::cout, std::cerr);
    if (*lattice) {
      lat.dot = format == "dot";
      return cmd_lattice(path, lat, std::cout, std::cerr);
    }
    if (*gen_cmd) {
      gen.seed = resolve_seed(gen_seed_opt, gen_seed, 1);
      gen.emit_sequence = emit == "sequence";
      return cmd_gen(gen, std::cout, std::cerr);
    }
    if (*oracle) return cmd_oracle(path, std::cout, std::cerr);
    if (*bench_cmd) {
      bench.seed = resolve_seed(bench_seed_opt, bench_seed, 1);
      bench.algorithm = algo == "explicit" ? Algorithm::Explicit : Algorithm::Compact;
      return cmd_bench(bench, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
