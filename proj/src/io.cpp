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

#include "bdh/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace bdh::io {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Calls f(line_number, trimmed_line) for each non-empty line.
template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const auto end = nl == std::string_view::npos ? text.size() : nl;
    ++line_no;
    const auto line = trim(text.substr(pos, end - pos));
    if (!line.empty()) f(line_no, line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
}

int parse_name(std::string_view tok, std::size_t line) {
  int v = 0;
  const auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size() || v < 1) {
    throw ParseError(line, "expected a positive vertex name, found '" + std::string(tok) + "'");
  }
  return v;
}

std::vector<int> parse_name_list(std::string_view list, std::size_t line) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < list.size()) {
    auto comma = list.find(',', pos);
    if (comma == std::string_view::npos) comma = list.size();
    out.push_back(parse_name(list.substr(pos, comma - pos), line));
    pos = comma + 1;
  }
  return out;
}

std::string join(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

// Lattice elements renamed, sorted and renumbered.
struct Canonical {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> elements;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::vector<std::size_t> new_id;  // old index -> canonical index
};

Canonical canonicalize(std::vector<std::pair<std::vector<int>, std::vector<int>>> elems,
                       const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  for (auto& [x, y] : elems) {
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
  }
  std::vector<std::size_t> order(elems.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return elems[a] < elems[b]; });
  Canonical c;
  c.new_id.resize(elems.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    c.new_id[order[k]] = k;
    c.elements.push_back(std::move(elems[order[k]]));
  }
  for (auto [lo, hi] : covers) c.covers.emplace_back(c.new_id[lo], c.new_id[hi]);
  std::sort(c.covers.begin(), c.covers.end());
  return c;
}

std::vector<int> rename(std::span<const VertexId> vs, const Naming& names) {
  std::vector<int> out;
  out.reserve(vs.size());
  for (VertexId v : vs) out.push_back(names(v));
  return out;
}

json elements_json(const Canonical& c) {
  json arr = json::array();
  for (std::size_t k = 0; k < c.elements.size(); ++k) {
    arr.push_back({{"id", k}, {"x", c.elements[k].first}, {"y", c.elements[k].second}});
  }
  return arr;
}

json covers_json(const Canonical& c) {
  json arr = json::array();
  for (auto [lo, hi] : c.covers) arr.push_back({lo, hi});
  return arr;
}

template <typename Intro>
json introducers_json(std::size_t n, const Naming& names, const Canonical& c, Intro intro) {
  std::vector<std::pair<int, std::size_t>> pairs;
  for (std::size_t v = 0; v < n; ++v) {
    const BicliqueId b = intro(static_cast<VertexId>(v));
    if (b != kNoBiclique) {
      pairs.emplace_back(names(static_cast<VertexId>(v)), c.new_id[static_cast<std::size_t>(b)]);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  json arr = json::array();
  for (auto [v, b] : pairs) arr.push_back({v, b});
  return arr;
}

Canonical canonical_diagram(const HasseDiagram& h, const Naming& names) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> elems;
  for (const Biclique& b : h.bicliques()) elems.emplace_back(rename(b.x, names), rename(b.y, names));
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (auto [lo, hi] : h.cover_pairs()) {
    covers.emplace_back(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi));
  }
  return canonicalize(std::move(elems), covers);
}

std::string dot_label(const std::vector<int>& x, const std::vector<int>& y) {
  return "X: " + join(x, ' ') + "\\nY: " + join(y, ' ');
}

void arborescence_dot(std::ostringstream& os, const std::string& name, const Arborescence& t,
                      const Naming& names) {
  // Nodes are arc heads; the root arc leaves the node "root".
  os << "digraph " << name << " {\n";
  os << "  root [shape=point];\n";
  for (std::size_t a = 0; a < t.arc_count(); ++a) {
    const auto arc = static_cast<ArcId>(a);
    os << "  h" << a << " [shape=point];\n";
    const ArcId p = t.parent(arc);
    os << "  " << (p == kNoArc ? std::string("root") : "h" + std::to_string(p)) << " -> h" << a
       << " [label=\"" << names(t.label(arc)) << "\"];\n";
  }
  os << "}\n";
}

}  // namespace

FileKind detect_kind(std::string_view text) {
  std::optional<FileKind> kind;
  for_each_line(text, [&](std::size_t, std::string_view line) {
    if (kind || line.front() == '#') return;
    const auto toks = split_ws(line);
    kind = toks.size() == 2 && (toks[1] == "X" || toks[1] == "Y") ? FileKind::Sequence
                                                                  : FileKind::EdgeList;
  });
  return kind.value_or(FileKind::EdgeList);
}

BipartiteGraph parse_edge_list(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::size_t> edge_line;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> header;
  std::size_t header_line = 0;
  int n = 0;

  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (line.front() == '#') {
      const auto body = trim(line.substr(1));
      if (body.rfind("shores:", 0) != 0) return;
      if (header) throw ParseError(line_no, "duplicate shores header");
      const auto toks = split_ws(trim(body.substr(7)));
      if (toks.size() > 2) throw ParseError(line_no, "malformed shores header");
      std::pair<std::vector<int>, std::vector<int>> h;
      bool seen_x = false;
      bool seen_y = false;
      for (auto tok : toks) {
        if (tok.rfind("X=", 0) == 0 && !seen_x) {
          h.first = parse_name_list(tok.substr(2), line_no);
          seen_x = true;
        } else if (tok.rfind("Y=", 0) == 0 && !seen_y) {
          h.second = parse_name_list(tok.substr(2), line_no);
          seen_y = true;
        } else {
          throw ParseError(line_no, "malformed shores header token '" + std::string(tok) + "'");
        }
      }
      for (int v : h.first) n = std::max(n, v);
      for (int v : h.second) n = std::max(n, v);
      header = std::move(h);
      header_line = line_no;
      return;
    }
    const auto toks = split_ws(line);
    if (toks.size() != 2) throw ParseError(line_no, "expected 'u v'");
    const int u = parse_name(toks[0], line_no);
    const int v = parse_name(toks[1], line_no);
    if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
    edges.emplace_back(u, v);
    edge_line.push_back(line_no);
    n = std::max({n, u, v});
  });

  std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);  // by name
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }

  if (header) {
    for (int v : header->first) {
      if (color[static_cast<std::size_t>(v)] != -1) {
        throw ParseError(header_line, "vertex " + std::to_string(v) + " listed twice");
      }
      color[static_cast<std::size_t>(v)] = 0;
    }
    for (int v : header->second) {
      if (color[static_cast<std::size_t>(v)] != -1) {
        throw ParseError(header_line, "vertex " + std::to_string(v) + " listed twice");
      }
      color[static_cast<std::size_t>(v)] = 1;
    }
    for (int v = 1; v <= n; ++v) {
      if (color[static_cast<std::size_t>(v)] == -1) {
        throw ParseError(header_line, "vertex " + std::to_string(v) + " missing from shores header");
      }
    }
  } else {
    for (int s = 1; s <= n; ++s) {
      if (color[static_cast<std::size_t>(s)] != -1) continue;
      color[static_cast<std::size_t>(s)] = 0;
      std::vector<int> queue{s};
      for (std::size_t q = 0; q < queue.size(); ++q) {
        const int u = queue[q];
        for (int w : adj[static_cast<std::size_t>(u)]) {
          if (color[static_cast<std::size_t>(w)] == -1) {
            color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(u)];
            queue.push_back(w);
          }
        }
      }
    }
  }

  GraphBuilder b(static_cast<std::size_t>(n));
  for (int v = 1; v <= n; ++v) {
    b.add_vertex(color[static_cast<std::size_t>(v)] == 0 ? Shore::X : Shore::Y);
  }
  std::set<std::pair<int, int>> seen;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) {
      throw ParseError(edge_line[e], header ? "edge joins two vertices of the same shore"
                                            : "graph is not bipartite (odd cycle)");
    }
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      throw ParseError(edge_line[e], "parallel edge " + std::to_string(u) + " " + std::to_string(v));
    }
    b.add_edge(u - 1, v - 1);
  }
  return std::move(b).build();
}

std::string serialize_edge_list(const BipartiteGraph& g) {
  std::vector<int> xs;
  std::vector<int> ys;
  for (VertexId v : g.shore_vertices(Shore::X)) xs.push_back(v + 1);
  for (VertexId v : g.shore_vertices(Shore::Y)) ys.push_back(v + 1);
  std::string out = "# shores: X=" + join(xs, ',') + " Y=" + join(ys, ',') + "\n";
  for (auto [u, v] : g.edges()) {
    out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  }
  return out;
}

ConstructionSequence parse_sequence(std::string_view text) {
  ConstructionSequence seq;
  std::vector<std::size_t> step_line;
  bool have_first = false;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (line.front() == '#') return;
    const auto toks = split_ws(line);
    if (!have_first) {
      if (toks.size() != 2 || parse_name(toks[0], line_no) != 1 ||
          (toks[1] != "X" && toks[1] != "Y")) {
        throw ParseError(line_no, "expected first line '1 X' or '1 Y'");
      }
      seq.first_shore = toks[1] == "X" ? Shore::X : Shore::Y;
      have_first = true;
      return;
    }
    if (toks.size() != 3 || (toks[1] != "P" && toks[1] != "F")) {
      throw ParseError(line_no, "expected '<i> <P|F> <k>'");
    }
    seq.steps.push_back({parse_name(toks[0], line_no) - 1,
                         toks[1] == "P" ? StepKind::Pending : StepKind::FalseTwin,
                         parse_name(toks[2], line_no) - 1});
    step_line.push_back(line_no);
  });
  if (!have_first) throw ParseError(0, "empty sequence file");
  try {
    validate(seq);
  } catch (const SequenceError& e) {
    throw ParseError(step_line[e.step_index()], e.what());
  }
  return seq;
}

std::string serialize_sequence(const ConstructionSequence& seq) {
  std::string out = std::string("1 ") + shore_char(seq.first_shore) + "\n";
  for (const ConstructionStep& s : seq.steps) {
    out += std::to_string(s.vertex + 1) + " " + step_kind_char(s.kind) + " " +
           std::to_string(s.anchor + 1) + "\n";
  }
  return out;
}

nlohmann::json lattice_json(const HasseDiagram& h, Naming names, bool with_top_bottom) {
  json j;
  j["n"] = h.vertex_count();
  j["m"] = h.edge_count();
  if (!with_top_bottom) {
    const Canonical c = canonical_diagram(h, names);
    j["bicliques"] = elements_json(c);
    j["covers"] = covers_json(c);
    j["introducers"] =
        introducers_json(h.vertex_count(), names, c, [&](VertexId v) { return h.introducer(v); });
    return j;
  }
  const LatticeView view = add_top_bottom(h);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> elems;
  for (const LatticeElement& e : view.elements) elems.emplace_back(rename(e.x, names), rename(e.y, names));
  const Canonical c = canonicalize(std::move(elems), view.covers);
  j["bicliques"] = elements_json(c);
  j["covers"] = covers_json(c);
  // Proper elements keep their diagram ids as view indices.
  j["introducers"] =
      introducers_json(h.vertex_count(), names, c, [&](VertexId v) { return h.introducer(v); });
  j["bottom"] = view.bottom ? json(c.new_id[*view.bottom]) : json(nullptr);
  j["top"] = view.top ? json(c.new_id[*view.top]) : json(nullptr);
  return j;
}

nlohmann::json compact_json(const CompactDiagram& d, Naming names) {
  const HasseDiagram h = to_explicit(d);
  const Canonical c = canonical_diagram(h, names);

  json j;
  j["n"] = d.vertex_count();
  j["m"] = h.edge_count();
  std::vector<json> bicliques(d.biclique_count());
  for (std::size_t b = 0; b < d.biclique_count(); ++b) {
    const auto id = static_cast<BicliqueId>(b);
    const Interval xi = d.x_interval(id);
    const Interval yi = d.y_interval(id);
    bicliques[c.new_id[b]] = {{"id", c.new_id[b]},
                              {"x_interval", {xi.alpha, xi.beta}},
                              {"y_interval", {yi.alpha, yi.beta}}};
  }
  j["bicliques"] = bicliques;
  j["covers"] = covers_json(c);
  j["introducers"] =
      introducers_json(d.vertex_count(), names, c, [&](VertexId v) { return d.introducer(v); });

  const auto arcs_json = [&](const Arborescence& t) {
    json arr = json::array();
    for (std::size_t a = 0; a < t.arc_count(); ++a) {
      const ArcId p = t.parent(static_cast<ArcId>(a));
      arr.push_back({{"arc", a},
                     {"parent", p == kNoArc ? json(nullptr) : json(p)},
                     {"vertex", names(t.label(static_cast<ArcId>(a)))}});
    }
    return arr;
  };
  j["arborescences"] = {{"x", arcs_json(d.t_x())}, {"y", arcs_json(d.t_y())}};

  std::vector<std::pair<int, Interval>> nbhd;
  if (d.biclique_count() > 0) {
    for (std::size_t v = 0; v < d.vertex_count(); ++v) {
      nbhd.emplace_back(names(static_cast<VertexId>(v)),
                        d.neighborhood_interval(static_cast<VertexId>(v)));
    }
  }
  std::sort(nbhd.begin(), nbhd.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  json nj = json::array();
  for (const auto& [v, iv] : nbhd) nj.push_back({v, iv.alpha, iv.beta});
  j["neighborhoods"] = nj;

  const CompactFootprint f = d.footprint();
  j["footprint"] = {{"arcs", f.arcs},
                    {"bicliques", f.bicliques},
                    {"cells", f.cells},
                    {"cover_pairs", f.cover_pairs}};
  return j;
}

nlohmann::json oracle_json(const BipartiteGraph& g, const oracle::BicliqueSet& bs) {
  const Naming names{};
  std::vector<oracle::BicliquePair> list(bs.begin(), bs.end());
  std::map<oracle::BicliquePair, std::size_t> index;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> elems;
  for (std::size_t k = 0; k < list.size(); ++k) {
    index[list[k]] = k;
    elems.emplace_back(rename(list[k].x, names), rename(list[k].y, names));
  }
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  for (const auto& [lo, hi] : oracle::hasse_bruteforce(bs)) covers.emplace_back(index[lo], index[hi]);
  const Canonical c = canonicalize(std::move(elems), covers);

  json j;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  j["bicliques"] = elements_json(c);
  j["covers"] = covers_json(c);
  return j;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string lattice_dot(const HasseDiagram& h, Naming names, bool with_top_bottom) {
  std::vector<std::pair<std::vector<int>, std::vector<int>>> elems;
  std::vector<std::pair<std::size_t, std::size_t>> covers;
  std::optional<std::size_t> bottom;
  std::optional<std::size_t> top;
  if (with_top_bottom) {
    const LatticeView view = add_top_bottom(h);
    for (const LatticeElement& e : view.elements) elems.emplace_back(rename(e.x, names), rename(e.y, names));
    covers = view.covers;
    bottom = view.bottom;
    top = view.top;
  } else {
    for (const Biclique& b : h.bicliques()) elems.emplace_back(rename(b.x, names), rename(b.y, names));
    for (auto [lo, hi] : h.cover_pairs()) {
      covers.emplace_back(static_cast<std::size_t>(lo), static_cast<std::size_t>(hi));
    }
  }
  const Canonical c = canonicalize(std::move(elems), covers);
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t k = 0; k < c.elements.size(); ++k) {
    std::string label = dot_label(c.elements[k].first, c.elements[k].second);
    if (bottom && c.new_id[*bottom] == k) label = "bottom";
    if (top && c.new_id[*top] == k) label = "top";
    os << "  b" << k << " [label=\"" << label << "\"];\n";
  }
  for (auto [lo, hi] : c.covers) os << "  b" << lo << " -> b" << hi << ";\n";
  os << "}\n";
  return os.str();
}

std::string compact_dot(const CompactDiagram& d, Naming names) {
  std::ostringstream os;
  os << lattice_dot(to_explicit(d), names);
  arborescence_dot(os, "t_x", d.t_x(), names);
  arborescence_dot(os, "t_y", d.t_y(), names);
  return os.str();
}

}  // namespace bdh::io
