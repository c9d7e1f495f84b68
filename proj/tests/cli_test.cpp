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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bdh/io.hpp"
#include "bdh/pruning.hpp"
#include "test_support.hpp"

namespace bdh::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string data(const std::string& name) { return std::string(BDH_TEST_DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("bdh_cli_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

template <typename F>
Outcome capture(F&& f) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = f(out, err);
  return {code, out.str(), err.str()};
}

Outcome lattice(const std::string& path, LatticeOptions opts = {}) {
  return capture([&](std::ostream& o, std::ostream& e) { return cmd_lattice(path, opts, o, e); });
}

// Runs the built executable through the shell; returns its exit status.
int run_tool(const std::string& args, std::string* out = nullptr) {
  const std::string cmd = std::string(BDH_TOOL_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return -1;
  std::string text;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) text.append(buf, got);
  const int status = ::pclose(pipe);
  if (out) *out = text;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Recognize, PathAccepted) {
  TempDir tmp;
  const std::string map = tmp.file("p4.map");
  const Outcome r = capture([&](std::ostream& o, std::ostream& e) {
    return cmd_recognize(data("p4.edges"), map, o, e);
  });
  EXPECT_EQ(r.code, kOk);
  const ConstructionSequence seq = io::parse_sequence(r.out);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 4);

  // The map takes construction names to input names.
  std::vector<VertexId> original(4, -1);
  std::istringstream lines(slurp(map));
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    int c = 0;
    int in = 0;
    std::istringstream(line) >> c >> in;
    original[static_cast<std::size_t>(c - 1)] = in - 1;
  }
  EXPECT_EQ(relabel(apply_sequence(seq), original).edges(),
            io::parse_edge_list(slurp(data("p4.edges"))).edges());
}

TEST(Recognize, DominoRejected) {
  const Outcome r = capture([&](std::ostream& o, std::ostream& e) {
    return cmd_recognize(data("domino.edges"), "", o, e);
  });
  EXPECT_EQ(r.code, kNotBdh);
  EXPECT_EQ(r.out.rfind("not BDH", 0), 0u);
  EXPECT_NE(r.out.find("remaining: 1 2 3 4 5 6"), std::string::npos);
}

TEST(Recognize, InputErrors) {
  const Outcome loop = capture([&](std::ostream& o, std::ostream& e) {
    return cmd_recognize(data("loop.edges"), "", o, e);
  });
  EXPECT_EQ(loop.code, kInputError);
  EXPECT_NE(loop.err.find("line 2"), std::string::npos);
  EXPECT_TRUE(loop.out.empty());

  const Outcome missing = capture([&](std::ostream& o, std::ostream& e) {
    return cmd_recognize(data("no_such_file.edges"), "", o, e);
  });
  EXPECT_EQ(missing.code, kInputError);
}

TEST(Lattice, PathAndCompleteGraph) {
  const json p4 = json::parse(lattice(data("p4.edges")).out);
  EXPECT_EQ(p4["bicliques"].size(), 2u);
  EXPECT_EQ(p4["covers"].size(), 1u);

  const Outcome k23 = lattice(data("k23.edges"));
  EXPECT_EQ(k23.code, kOk);
  const json j = json::parse(k23.out);
  EXPECT_EQ(j["bicliques"].size(), 1u);
  EXPECT_TRUE(j["covers"].empty());
  EXPECT_EQ(j["bicliques"][0]["x"], json({1, 2}));
  EXPECT_EQ(j["bicliques"][0]["y"], json({3, 4, 5}));
}

TEST(Lattice, GoldenFixtures) {
  for (const char* name : {"p4", "k12", "k23"}) {
    const Outcome r = lattice(data(std::string(name) + ".seq"));
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(r.out, slurp(std::string(BDH_GOLDEN_DIR) + "/" + name + ".json")) << name;
  }
}

TEST(Lattice, CompactMatchesExplicit) {
  const json c = json::parse(lattice(data("p4.edges"), {.compact = true}).out);
  const json e = json::parse(lattice(data("p4.edges")).out);
  EXPECT_EQ(c["covers"], e["covers"]);
  EXPECT_EQ(c["introducers"], e["introducers"]);
  ASSERT_EQ(c["bicliques"].size(), 2u);
  for (std::size_t b = 0; b < 2; ++b) {
    for (const char* side : {"x", "y"}) {
      const json& arcs = c["arborescences"][side];
      const json& iv = c["bicliques"][b][std::string(side) + "_interval"];
      std::vector<int> names;
      for (json cur = iv[1];; cur = arcs[cur.get<std::size_t>()]["parent"]) {
        ASSERT_FALSE(cur.is_null());
        names.push_back(arcs[cur.get<std::size_t>()]["vertex"].get<int>());
        if (cur == iv[0]) break;
      }
      std::sort(names.begin(), names.end());
      EXPECT_EQ(json(names), e["bicliques"][b][side]);
    }
  }
}

TEST(Lattice, DotAndTopBottom) {
  const Outcome dot = lattice(data("p4.seq"), {.dot = true});
  EXPECT_EQ(dot.code, kOk);
  EXPECT_EQ(dot.out.rfind("digraph hasse", 0), 0u);
  const json tb = json::parse(lattice(data("p4.seq"), {.with_top_bottom = true}).out);
  EXPECT_TRUE(tb.contains("bottom"));
  EXPECT_TRUE(tb.contains("top"));
}

TEST(Lattice, RejectsNonBdh) {
  const Outcome r = lattice(data("domino.edges"));
  EXPECT_EQ(r.code, kNotBdh);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("not BDH"), std::string::npos);
}

// Lattice of an edge list equals the lattice of its recognised sequence,
// once construction names are mapped back through the recognition map.
TEST(Lattice, EdgeListAgreesWithRecognisedSequence) {
  TempDir tmp;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const BipartiteGraph g = apply_sequence(generate_random_bdh(18, 0.5, seed));
    std::vector<VertexId> perm(g.vertex_count());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      perm[i] = static_cast<VertexId>((i * 7 + seed) % perm.size());
    }
    const std::string edges = tmp.file("g.edges");
    std::ofstream(edges) << io::serialize_edge_list(relabel(g, perm));

    const Accepted acc = extract_pruning_sequence(io::parse_edge_list(slurp(edges))).as_accepted();
    const std::string seq = tmp.file("g.seq");
    std::ofstream(seq) << io::serialize_sequence(acc.sequence);

    const json from_edges = json::parse(lattice(edges).out);
    const json from_seq = json::parse(lattice(seq).out);
    std::set<std::pair<std::vector<int>, std::vector<int>>> a;
    std::set<std::pair<std::vector<int>, std::vector<int>>> b;
    for (const json& bc : from_edges["bicliques"]) a.emplace(bc["x"], bc["y"]);
    for (const json& bc : from_seq["bicliques"]) {
      std::pair<std::vector<int>, std::vector<int>> mapped;
      for (int v : bc["x"]) mapped.first.push_back(acc.original[static_cast<std::size_t>(v - 1)] + 1);
      for (int v : bc["y"]) mapped.second.push_back(acc.original[static_cast<std::size_t>(v - 1)] + 1);
      std::sort(mapped.first.begin(), mapped.first.end());
      std::sort(mapped.second.begin(), mapped.second.end());
      b.insert(mapped);
    }
    EXPECT_EQ(a, b) << "seed=" << seed;
    EXPECT_EQ(from_edges["covers"].size(), from_seq["covers"].size());
  }
}

TEST(Gen, SingleEdge) {
  const Outcome r = capture([](std::ostream& o, std::ostream& e) {
    return cmd_gen({.vertices = 2, .twin_probability = 0.5, .seed = 3}, o, e);
  });
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "# shores: X=1 Y=2\n1 2\n");
}

TEST(Gen, TreeWhenNoTwins) {
  const Outcome r = capture([](std::ostream& o, std::ostream& e) {
    return cmd_gen({.vertices = 6, .twin_probability = 0.0, .seed = 7}, o, e);
  });
  const BipartiteGraph g = io::parse_edge_list(r.out);
  EXPECT_EQ(g.vertex_count(), 6u);
  EXPECT_EQ(g.edge_count(), 5u);
  EXPECT_TRUE(g.is_connected());
}

TEST(Gen, DeterministicAndSequenceOutput) {
  const GenOptions opts{.vertices = 50, .twin_probability = 0.4, .seed = 9};
  const auto once = capture([&](std::ostream& o, std::ostream& e) { return cmd_gen(opts, o, e); });
  const auto twice = capture([&](std::ostream& o, std::ostream& e) { return cmd_gen(opts, o, e); });
  EXPECT_EQ(once.out, twice.out);

  GenOptions seq_opts = opts;
  seq_opts.emit_sequence = true;
  const auto seq = capture([&](std::ostream& o, std::ostream& e) { return cmd_gen(seq_opts, o, e); });
  EXPECT_EQ(io::serialize_edge_list(apply_sequence(io::parse_sequence(seq.out))), once.out);
}

TEST(Gen, TooFewVertices) {
  const Outcome r = capture([](std::ostream& o, std::ostream& e) {
    return cmd_gen({.vertices = 1}, o, e);
  });
  EXPECT_EQ(r.code, kInputError);
}

TEST(Oracle, PathMatchesLattice) {
  const Outcome r = capture([](std::ostream& o, std::ostream& e) {
    return cmd_oracle(data("p4.edges"), o, e);
  });
  EXPECT_EQ(r.code, kOk);
  json lat = json::parse(lattice(data("p4.edges")).out);
  lat.erase("introducers");
  EXPECT_EQ(r.out, io::dump(lat));
}

TEST(Oracle, HexagonIsNotATree) {
  const Outcome r = capture([](std::ostream& o, std::ostream& e) {
    return cmd_oracle(data("c6.edges"), o, e);
  });
  EXPECT_EQ(r.code, kOk);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["bicliques"].size(), 6u);
  EXPECT_EQ(j["covers"].size(), 6u);
}

TEST(Oracle, GuardExceeded) {
  const Outcome r = capture([](std::ostream& o, std::ostream& e) {
    return cmd_oracle(data("dense50.edges"), o, e);
  });
  EXPECT_EQ(r.code, kGuardExceeded);
  EXPECT_NE(r.err.find("20"), std::string::npos);
}

TEST(Bench, Rows) {
  const Outcome tiny = capture([](std::ostream& o, std::ostream& e) {
    return cmd_bench({.sizes = {2}}, o, e);
  });
  EXPECT_EQ(tiny.code, kOk);
  EXPECT_EQ(tiny.out.rfind("size,edges,bicliques,nanos\n2,1,1,", 0), 0u);

  const auto rows = run_bench({.sizes = {1000, 2000}, .algorithm = Algorithm::Compact});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].size, 1000u);
  EXPECT_LE(rows[0].bicliques, 998u);
  EXPECT_GT(rows[1].edges, rows[0].edges);
  EXPECT_GT(rows[0].footprint, 0u);

  const Outcome bad = capture([](std::ostream& o, std::ostream& e) {
    return cmd_bench({.sizes = {1}}, o, e);
  });
  EXPECT_EQ(bad.code, kInputError);
}

TEST(Tool, ExitCodes) {
  EXPECT_EQ(run_tool("recognize " + data("p4.edges")), 0);
  EXPECT_EQ(run_tool("recognize " + data("domino.edges")), 1);
  EXPECT_EQ(run_tool("recognize " + data("loop.edges")), 2);
  EXPECT_EQ(run_tool("lattice " + data("domino.edges")), 1);
  EXPECT_EQ(run_tool("oracle " + data("dense50.edges")), 3);
  EXPECT_EQ(run_tool("frobnicate"), 2);
  EXPECT_EQ(run_tool("gen --vertices 5 --twin-prob 2"), 2);
  EXPECT_EQ(run_tool("--help"), 0);
}

TEST(Tool, SeedFromEnvironment) {
  std::string flag;
  std::string env;
  std::string both;
  std::string other;
  ASSERT_EQ(run_tool("gen --vertices 30 --seed 5", &flag), 0);
  ASSERT_EQ(run_tool("gen --vertices 30 --seed 6", &other), 0);
  ASSERT_EQ(::setenv("BDH_SEED", "5", 1), 0);
  ASSERT_EQ(run_tool("gen --vertices 30", &env), 0);
  ASSERT_EQ(run_tool("gen --vertices 30 --seed 6", &both), 0);
  ::unsetenv("BDH_SEED");
  EXPECT_EQ(env, flag);
  EXPECT_EQ(both, other);
  EXPECT_NE(flag, other);
}

}  // namespace
}  // namespace bdh::cli
