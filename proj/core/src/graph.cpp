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

#include "ftmd/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

namespace ftmd {

Graph Graph::build(int vertex_count, const std::vector<Edge>& edges) {
  if (vertex_count < 1) {
    throw VertexOutOfRangeError("vertex_count must be positive, got " +
                                std::to_string(vertex_count));
  }
  Graph g;
  g.n_ = vertex_count;
  g.adj_.assign(vertex_count + 1, {});

  std::set<Edge> seen;
  for (const auto& [a, b] : edges) {
    if (a < 1 || a > vertex_count || b < 1 || b > vertex_count) {
      throw VertexOutOfRangeError("edge (" + std::to_string(a) + "," +
                                  std::to_string(b) + ") leaves range 1.." +
                                  std::to_string(vertex_count));
    }
    if (a == b) {
      throw SelfLoopError("self-loop at vertex " + std::to_string(a));
    }
    Edge e{std::min(a, b), std::max(a, b)};
    if (!seen.insert(e).second) {
      throw DuplicateEdgeError("duplicate edge (" + std::to_string(e.first) +
                               "," + std::to_string(e.second) + ")");
    }
    g.adj_[e.first].push_back(e.second);
    g.adj_[e.second].push_back(e.first);
  }
  g.edges_.assign(seen.begin(), seen.end());
  for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());

  // Connectivity check by BFS from vertex 1.
  std::vector<char> visited(vertex_count + 1, 0);
  std::deque<Vertex> queue{1};
  visited[1] = 1;
  int reached = 1;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.adj_[u]) {
      if (!visited[w]) {
        visited[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  if (reached != vertex_count) {
    for (Vertex v = 1; v <= vertex_count; ++v) {
      if (!visited[v]) {
        throw DisconnectedError("vertex " + std::to_string(v) +
                                " is not reachable from vertex 1");
      }
    }
  }
  return g;
}

int Graph::min_degree() const {
  int md = degree(1);
  for (Vertex v = 2; v <= n_; ++v) md = std::min(md, degree(v));
  return md;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

DistanceMatrix::DistanceMatrix(const Graph& g) : n_(g.vertex_count()) {
  d_.assign(static_cast<size_t>(n_) * n_, -1);
  std::deque<Vertex> queue;
  for (Vertex s = 1; s <= n_; ++s) {
    int* row = d_.data() + static_cast<size_t>(s - 1) * n_;
    row[s - 1] = 0;
    queue.clear();
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (row[w - 1] < 0) {
          row[w - 1] = row[u - 1] + 1;
          queue.push_back(w);
        }
      }
    }
  }
}

}  // namespace ftmd
