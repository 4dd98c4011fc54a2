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

#include "ftmd/cactus.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>

namespace ftmd {
namespace {

struct Block {
  std::vector<Vertex> vertices;  // sorted
  int edge_count = 0;
};

// Hopcroft-Tarjan biconnected components via an edge stack.
std::vector<Block> blocks_of(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n + 1, -1), low(n + 1, 0);
  std::vector<Edge> edge_stack;
  std::vector<Block> blocks;
  int timer = 0;

  auto pop_block = [&](const Edge& until) {
    std::set<Vertex> verts;
    int edges = 0;
    for (;;) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      verts.insert(e.first);
      verts.insert(e.second);
      ++edges;
      if (e == until) break;
    }
    Block b;
    b.vertices.assign(verts.begin(), verts.end());
    b.edge_count = edges;
    blocks.push_back(std::move(b));
  };

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[u] = low[u] = timer++;
    for (Vertex w : g.neighbors(u)) {
      if (disc[w] < 0) {
        Edge e{u, w};
        edge_stack.push_back(e);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) pop_block(e);
      } else if (w != parent && disc[w] < disc[u]) {
        edge_stack.push_back({u, w});
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  dfs(1, 0);

  std::sort(blocks.begin(), blocks.end(),
            [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
  return blocks;
}

int position_on_cycle(const CycleRecord& c, Vertex v) {
  for (int i = 0; i < c.length(); ++i) {
    if (c.vertices[i] == v) return i;
  }
  throw VertexNotOnCycleError("vertex " + std::to_string(v) +
                              " is not on the cycle");
}

}  // namespace

std::vector<std::vector<Vertex>> block_decomposition(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  for (auto& b : blocks_of(g)) out.push_back(std::move(b.vertices));
  return out;
}

bool is_leafless_cactus(const Graph& g) {
  if (g.min_degree() < 2) return false;
  for (const Block& b : blocks_of(g)) {
    size_t v = b.vertices.size();
    bool is_edge = v == 2 && b.edge_count == 1;
    bool is_cycle = v >= 3 && b.edge_count == static_cast<int>(v);
    if (!is_edge && !is_cycle) return false;
  }
  return true;
}

std::vector<CycleRecord> extract_cycles(const Graph& g) {
  if (!is_leafless_cactus(g)) {
    throw NotALeaflessCactusError("graph is not a leafless cactus");
  }
  std::vector<CycleRecord> cycles;
  for (const Block& b : blocks_of(g)) {
    if (b.vertices.size() < 3) continue;
    std::set<Vertex> members(b.vertices.begin(), b.vertices.end());

    // Walk the cycle starting at the lowest id, toward its lower-id neighbor
    // within the block.
    CycleRecord c;
    Vertex start = b.vertices.front();
    Vertex prev = start;
    Vertex cur = 0;
    for (Vertex w : g.neighbors(start)) {
      if (members.count(w)) {
        cur = w;  // neighbor lists are sorted, first hit is the lower id
        break;
      }
    }
    c.vertices.push_back(start);
    while (cur != start) {
      c.vertices.push_back(cur);
      for (Vertex w : g.neighbors(cur)) {
        if (w != prev && members.count(w)) {
          prev = cur;
          cur = w;
          break;
        }
      }
    }

    for (Vertex v : b.vertices) {
      if (g.degree(v) >= 3) c.common_vertices.push_back(v);
    }
    c.classification = c.common_vertices.size() <= 1 ? CycleClass::Outer
                                                     : CycleClass::Inner;
    if (c.classification == CycleClass::Inner && c.length() % 2 == 0 &&
        c.common_vertices.size() == 2) {
      c.antipodal_pair =
          is_antipodal_pair(c, c.common_vertices[0], c.common_vertices[1]);
    }
    bool counted = c.classification == CycleClass::Outer ||
                   (c.antipodal_pair && *c.antipodal_pair);
    c.contribution = counted ? 2 : 0;
    cycles.push_back(std::move(c));
  }
  return cycles;
}

bool is_antipodal_pair(const CycleRecord& c, Vertex u, Vertex v) {
  if (u == v) throw VertexNotOnCycleError("antipodal pair needs two distinct vertices");
  int len = c.length();
  if (len % 2 != 0) return false;
  int pu = position_on_cycle(c, u);
  int pv = position_on_cycle(c, v);
  int arc = std::abs(pu - pv);
  arc = std::min(arc, len - arc);
  return arc == len / 2;
}

CactusAnalysis analyze(const Graph& g) {
  CactusAnalysis a;
  a.cycles = extract_cycles(g);  // throws NotALeaflessCactusError
  if (a.cycles.size() < 2) {
    throw SingleCycleError(
        "graph has a single cycle; the 2(n1+n2) formula does not apply "
        "(the FT dimension of a lone cycle is 3)");
  }

  // Maximal bridge chains between junction vertices.
  std::set<Edge> bridge_edges;
  for (const Block& b : blocks_of(g)) {
    if (b.vertices.size() == 2) {
      bridge_edges.insert({b.vertices[0], b.vertices[1]});
    }
  }
  auto is_bridge = [&](Vertex x, Vertex y) {
    return bridge_edges.count({std::min(x, y), std::max(x, y)}) > 0;
  };
  std::set<Edge> used;
  for (Vertex j = 1; j <= g.vertex_count(); ++j) {
    if (g.degree(j) < 3) continue;
    for (Vertex b : g.neighbors(j)) {
      Edge e{std::min(j, b), std::max(j, b)};
      if (!is_bridge(j, b) || used.count(e)) continue;
      InnerPathRecord path;
      path.vertices.push_back(j);
      Vertex prev = j, cur = b;
      used.insert(e);
      while (g.degree(cur) == 2) {
        path.vertices.push_back(cur);
        Vertex next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1]
                                                  : g.neighbors(cur)[0];
        used.insert({std::min(cur, next), std::max(cur, next)});
        prev = cur;
        cur = next;
      }
      path.vertices.push_back(cur);
      // Orient each chain from its lower-id endpoint.
      if (path.vertices.front() > path.vertices.back()) {
        std::reverse(path.vertices.begin(), path.vertices.end());
      }
      a.inner_paths.push_back(std::move(path));
    }
  }
  std::sort(a.inner_paths.begin(), a.inner_paths.end(),
            [](const InnerPathRecord& x, const InnerPathRecord& y) {
              return x.vertices < y.vertices;
            });

  for (const CycleRecord& c : a.cycles) {
    if (c.classification == CycleClass::Outer) ++a.n1;
    if (c.classification == CycleClass::Inner && c.antipodal_pair &&
        *c.antipodal_pair) {
      ++a.n2;
    }
  }
  a.predicted_ft_dimension = 2 * (a.n1 + a.n2);
  return a;
}

}  // namespace ftmd
