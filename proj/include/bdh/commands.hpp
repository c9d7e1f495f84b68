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

/// \file commands.hpp
/// \brief The `bdh` subcommands as functions over streams, returning the
/// process exit status.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bdh::cli {

enum ExitCode : int {
  kOk = 0,
  kNotBdh = 1,
  kInputError = 2,
  kGuardExceeded = 3,
};

int cmd_recognize(const std::string& path, const std::string& map_path, std::ostream& out,
                  std::ostream& err);

struct LatticeOptions {
  bool compact = false;
  bool dot = false;
  bool with_top_bottom = false;
};

int cmd_lattice(const std::string& path, const LatticeOptions& opts, std::ostream& out,
                std::ostream& err);

struct GenOptions {
  std::size_t vertices = 2;
  double twin_probability = 0.5;
  std::uint64_t seed = 1;
  bool emit_sequence = false;
};

int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err);

int cmd_oracle(const std::string& path, std::ostream& out, std::ostream& err);

enum class Algorithm { Explicit, Compact };

struct BenchOptions {
  std::vector<std::size_t> sizes;
  double twin_probability = 0.5;
  std::uint64_t seed = 1;
  Algorithm algorithm = Algorithm::Compact;
  int repeats = 3;
};

struct BenchRow {
  std::size_t size = 0;
  std::size_t edges = 0;
  std::size_t bicliques = 0;
  std::uint64_t nanos = 0;  // best of `repeats`
  std::size_t footprint = 0;  // compact storage units; 0 for explicit
};

/// Times only the lattice construction; sequence generation and edge
/// counting happen outside the clock.
std::vector<BenchRow> run_bench(const BenchOptions& opts);

/// CSV with header "size,edges,bicliques,nanos".
int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace bdh::cli
