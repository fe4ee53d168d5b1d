// Copyright 2026 The Authors.
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

#include "plabic/json_io.hpp"

#include <fstream>
#include <sstream>

namespace plabic {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw Error(ErrorCode::kInvalidArgument, what);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    bad(std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

int int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) bad(std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

}  // namespace

Json to_json(Subset s) { return Json(s.elements()); }

Json to_json(const Collection& c) {
  Json out = Json::array();
  for (Subset s : c) out.push_back(to_json(s));
  return out;
}

Json to_json(const GrassmannNecklace& necklace) {
  Json out = Json::array();
  for (Subset s : necklace.entries()) out.push_back(to_json(s));
  return out;
}

Json to_json(const MutationSquare& square) {
  return Json{{"S", to_json(square.s)},
              {"abcd", Json(std::vector<int>(square.abcd.begin(),
                                             square.abcd.end()))}};
}

Json to_json(const MutationPath& path) {
  Json squares = Json::array();
  for (const MutationSquare& sq : path.squares) squares.push_back(to_json(sq));
  return Json{{"n", path.necklace.ground().n},
              {"k", path.necklace.ground().k},
              {"necklace", to_json(path.necklace)},
              {"frozen", to_json(path.frozen)},
              {"start", to_json(path.start)},
              {"squares", squares},
              {"end", to_json(path.end())}};
}

Json to_json(const FlipGraph& graph) {
  Json nodes = Json::array();
  for (const Collection& c : graph.nodes) nodes.push_back(to_json(c));
  Json arcs = Json::array();
  for (const FlipGraph::Arc& a : graph.arcs) {
    arcs.push_back(Json{{"from", a.from}, {"to", a.to}, {"square", to_json(a.square)}});
  }
  const Ground g = graph.nodes.empty() ? graph.frozen.ground()
                                       : graph.nodes.front().ground();
  return Json{{"n", g.n},
              {"k", g.k},
              {"frozen", to_json(graph.frozen)},
              {"nodes", nodes},
              {"arcs", arcs}};
}

Json to_json(const PlabicTiling& tiling) {
  Json vertices = Json::array();
  for (Subset s : tiling.vertices) {
    const Point p = tiling.coord(s);
    vertices.push_back(Json{{"set", to_json(s)}, {"x", p.x}, {"y", p.y}});
  }
  Json edges = Json::array();
  for (const Edge& e : tiling.edges) {
    edges.push_back(Json::array({to_json(e.first), to_json(e.second)}));
  }
  Json faces = Json::array();
  for (const Clique& f : tiling.faces) {
    Json members = Json::array();
    for (Subset s : f.members) members.push_back(to_json(s));
    faces.push_back(Json{{"color", std::string(color_name(f.color))},
                         {"base", to_json(f.base)},
                         {"members", members}});
  }
  Json out{{"n", tiling.ground.n},
           {"k", tiling.ground.k},
           {"vertices", vertices},
           {"edges", edges},
           {"faces", faces}};
  if (tiling.necklace) out["necklace"] = to_json(*tiling.necklace);
  return out;
}

Json to_json(const VerificationReport& report) {
  Json links = Json::array();
  for (const auto& [face, ok] : report.links_connected) {
    links.push_back(Json{{"face", to_json(face)}, {"connected", ok}});
  }
  Json timings = Json::object();
  for (const auto& [name, ms] : report.timings_ms) timings[name] = ms;
  return Json{{"facets", report.facet_count},
              {"vertices", report.vertex_count},
              {"pure", report.pure},
              {"pure_witness", report.pure_witness},
              {"non_branching", report.non_branching},
              {"non_branching_witness", report.non_branching_witness},
              {"worst_codim1_multiplicity", report.worst_codim1_multiplicity},
              {"strongly_connected", report.strongly_connected},
              {"strongly_connected_witness", report.strongly_connected_witness},
              {"links_tested", report.links_connected.size()},
              {"links_connected", report.links_ok()},
              {"links", links},
              {"timings_ms", timings},
              {"pseudomanifold", report.ok()}};
}

Subset subset_from_json(const Json& j, const Ground& ground, int size) {
  if (!j.is_array()) bad("subset must be an array of integers");
  Subset s;
  for (const Json& e : j) {
    if (!e.is_number_integer()) bad("subset entries must be integers");
    const int a = e.get<int>();
    if (!ground.in_range(a)) {
      bad("element " + std::to_string(a) + " outside [1, " +
          std::to_string(ground.n) + "]");
    }
    if (s.contains(a)) bad("duplicate element " + std::to_string(a));
    s = s.with(a);
  }
  if (size >= 0 && s.size() != size) {
    bad("expected a " + std::to_string(size) + "-subset, got " + j.dump());
  }
  return s;
}

Collection collection_from_json(const Json& j, const Ground& ground) {
  if (!j.is_array()) bad("collection must be an array of subsets");
  std::vector<Subset> members;
  for (const Json& e : j) members.push_back(subset_from_json(e, ground, ground.k));
  const std::size_t given = members.size();
  Collection c(ground, std::move(members));
  if (c.size() != given) bad("collection has duplicate members");
  return c;
}

GrassmannNecklace necklace_from_json(const Json& j) {
  if (!j.is_array() || j.empty() || !j.front().is_array()) {
    bad("necklace must be a non-empty array of subsets");
  }
  const int n = static_cast<int>(j.size());
  const int k = static_cast<int>(j.front().size());
  const Ground ground = Ground::make(n, k);
  std::vector<Subset> entries;
  for (const Json& e : j) entries.push_back(subset_from_json(e, ground, k));
  return validate_necklace(ground, std::move(entries));
}

MutationSquare square_from_json(const Json& j, const Ground& ground) {
  const Subset s = subset_from_json(field(j, "S"), ground, ground.k - 2);
  const Json& q = field(j, "abcd");
  if (!q.is_array() || q.size() != 4) bad("\"abcd\" must hold four elements");
  std::array<int, 4> v{};
  for (int i = 0; i < 4; ++i) {
    if (!q[i].is_number_integer()) bad("\"abcd\" entries must be integers");
    v[i] = q[i].get<int>();
  }
  return MutationSquare::make(s, v[0], v[1], v[2], v[3], ground);
}

MutationPath path_from_json(const Json& j) {
  MutationPath p;
  p.necklace = necklace_from_json(field(j, "necklace"));
  const Ground& g = p.necklace.ground();
  if (j.contains("n") && int_field(j, "n") != g.n) bad("\"n\" disagrees with necklace");
  if (j.contains("k") && int_field(j, "k") != g.k) bad("\"k\" disagrees with necklace");
  p.frozen = collection_from_json(field(j, "frozen"), g);
  p.start = collection_from_json(field(j, "start"), g);
  const Json& squares = field(j, "squares");
  if (!squares.is_array()) bad("\"squares\" must be an array");
  for (const Json& sq : squares) p.squares.push_back(square_from_json(sq, g));
  return p;
}

FlipGraph flip_graph_from_json(const Json& j) {
  const Ground g = Ground::make(int_field(j, "n"), int_field(j, "k"));
  FlipGraph out;
  out.frozen = collection_from_json(field(j, "frozen"), g);
  for (const Json& node : field(j, "nodes")) {
    out.nodes.push_back(collection_from_json(node, g));
  }
  for (const Json& arc : field(j, "arcs")) {
    FlipGraph::Arc a;
    a.from = field(arc, "from").get<std::size_t>();
    a.to = field(arc, "to").get<std::size_t>();
    a.square = square_from_json(field(arc, "square"), g);
    out.arcs.push_back(a);
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) bad("cannot write " + path);
  out << text;
}

}  // namespace plabic
