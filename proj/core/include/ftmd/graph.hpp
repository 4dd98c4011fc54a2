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

#ifndef FTMD_GRAPH_HPP
#define FTMD_GRAPH_HPP

#include <utility>
#include <vector>

#include "ftmd/errors.hpp"

namespace ftmd {

/// Vertices are 1-indexed throughout the library.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple connected undirected graph.
///
/// Construction canonicalizes the edge list (u < v, sorted) and sorts every
/// neighbor list ascending, so traversal order is deterministic. Disconnected
/// input is rejected at construction time; downstream code never re-checks.
class Graph {
 public:
  /// Builds and validates a graph. Throws SelfLoopError, DuplicateEdgeError,
  /// VertexOutOfRangeError or DisconnectedError.
  static Graph build(int vertex_count, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int min_degree() const;
  bool has_edge(Vertex u, Vertex v) const;

 private:
  Graph() = default;

  int n_ = 0;
  std::vector<std::vector<Vertex>> adj_;  // index 0 unused
  std::vector<Edge> edges_;               // canonical: u < v, sorted
};

/// Dense all-pairs hop-count table, computed by BFS from every source.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  int vertex_count() const { return n_; }
  int operator()(Vertex u, Vertex v) const { return d_[(u - 1) * n_ + (v - 1)]; }

 private:
  int n_;
  std::vector<int> d_;
};

}  // namespace ftmd

#endif  // FTMD_GRAPH_HPP
