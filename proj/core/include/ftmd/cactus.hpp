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

#ifndef FTMD_CACTUS_HPP
#define FTMD_CACTUS_HPP

#include <optional>
#include <vector>

#include "ftmd/graph.hpp"

namespace ftmd {

enum class CycleClass { Outer, Inner };

/// One cycle of a cactus decomposition.
///
/// The vertex list starts at the lowest-id vertex of the cycle and proceeds
/// toward its lower-id neighbor, so output is canonical. Common vertices are
/// the cycle's vertices of degree >= 3 in the whole graph.
struct CycleRecord {
  std::vector<Vertex> vertices;       // cyclic order
  std::vector<Vertex> common_vertices;  // sorted ascending
  CycleClass classification = CycleClass::Outer;
  /// Defined only for Inner cycles of even length with exactly two common
  /// vertices: whether those two are antipodal on the cycle.
  std::optional<bool> antipodal_pair;
  int contribution = 0;  // 0 or 2

  int length() const { return static_cast<int>(vertices.size()); }
};

/// Maximal bridge path joining two junction vertices; contributes nothing.
struct InnerPathRecord {
  std::vector<Vertex> vertices;  // ordered, endpoints have degree >= 3
};

struct CactusAnalysis {
  std::vector<CycleRecord> cycles;
  std::vector<InnerPathRecord> inner_paths;
  int n1 = 0;  // outer cycles
  int n2 = 0;  // even inner cycles with exactly two antipodal common vertices
  int predicted_ft_dimension = 0;  // 2 * (n1 + n2)
};

/// Maximal biconnected components as vertex sets (sorted; blocks ordered by
/// lowest member). On a cactus every block is a single edge or a cycle.
std::vector<std::vector<Vertex>> block_decomposition(const Graph& g);

/// True iff every block is an edge or an induced cycle and min degree >= 2.
bool is_leafless_cactus(const Graph& g);

/// One record per cycle block. Throws NotALeaflessCactusError.
std::vector<CycleRecord> extract_cycles(const Graph& g);

/// True iff the cycle has even length and the two u-v arcs are equally long.
/// Throws VertexNotOnCycleError.
bool is_antipodal_pair(const CycleRecord& c, Vertex u, Vertex v);

/// Full decomposition with the per-cycle contribution rule:
/// outer -> 2; inner odd -> 0; inner even with exactly two antipodal common
/// vertices -> 2; every other inner even -> 0; inner paths -> 0.
/// Throws NotALeaflessCactusError or SingleCycleError (a lone cycle has no
/// outer/inner taxonomy; its FT dimension is the known cycle value 3).
CactusAnalysis analyze(const Graph& g);

}  // namespace ftmd

#endif  // FTMD_CACTUS_HPP
