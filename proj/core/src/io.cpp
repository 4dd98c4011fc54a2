// Copyright 2026 The ftmd Authors
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

#include "ftmd/io.hpp"

#include <sstream>

namespace ftmd {

Graph parse_graph_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  int vertex_count = -1;
  int p_line = 0;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      if (vertex_count >= 0) throw ParseError(line_no, "duplicate p line");
      if (!(ls >> vertex_count) || vertex_count < 1) {
        throw ParseError(line_no, "p line needs a positive vertex count");
      }
      p_line = line_no;
    } else if (tag == "e") {
      if (vertex_count < 0) throw ParseError(line_no, "e line before p line");
      int u, v;
      if (!(ls >> u >> v)) {
        throw ParseError(line_no, "e line needs two vertex ids");
      }
      edges.push_back({u, v});
      // Surface range errors with the line they came from.
      if (u < 1 || u > vertex_count || v < 1 || v > vertex_count) {
        throw ParseError(line_no, "vertex out of range 1.." +
                                      std::to_string(vertex_count));
      }
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    } else {
      throw ParseError(line_no, "unknown line tag '" + tag + "'");
    }
  }
  if (vertex_count < 0) throw ParseError(line_no, "missing p line");
  try {
    return Graph::build(vertex_count, edges);
  } catch (const Error& e) {
    throw ParseError(p_line, e.what());
  }
}

std::string emit_graph_file(const Graph& g) {
  std::ostringstream out;
  out << "p " << g.vertex_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
  return out.str();
}

Json to_json(const VertexSet& w) { return Json(w); }

Json to_json(const DimensionResult& r) {
  Json j;
  j["dimension"] = r.dimension;
  j["witness"] = r.witness;
  if (r.all_minimum_sets) j["all_minimum_sets"] = *r.all_minimum_sets;
  j["subsets_examined"] = r.subsets_examined;
  return j;
}

Json to_json(const CycleRecord& c) {
  Json j;
  j["vertices"] = c.vertices;
  j["length"] = c.length();
  j["common_vertices"] = c.common_vertices;
  j["classification"] = c.classification == CycleClass::Outer ? "outer" : "inner";
  if (c.antipodal_pair) j["antipodal_pair"] = *c.antipodal_pair;
  j["contribution"] = c.contribution;
  return j;
}

Json to_json(const CactusAnalysis& a) {
  Json j;
  j["cycles"] = Json::array();
  for (const auto& c : a.cycles) j["cycles"].push_back(to_json(c));
  j["inner_paths"] = Json::array();
  for (const auto& p : a.inner_paths) {
    j["inner_paths"].push_back(Json{{"vertices", p.vertices}, {"contribution", 0}});
  }
  j["n1"] = a.n1;
  j["n2"] = a.n2;
  j["predicted_ft_dimension"] = a.predicted_ft_dimension;
  return j;
}

Json to_json(const ConstructedBasis& b) {
  Json j;
  j["set"] = b.set;
  j["construction"] = b.construction;
  if (b.components) {
    j["components"] = Json{{"w1", b.components->first}, {"w2", b.components->second}};
  }
  return j;
}

}  // namespace ftmd
