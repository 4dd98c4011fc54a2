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

#ifndef FTMD_FAMILIES_HPP
#define FTMD_FAMILIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ftmd/cactus.hpp"
#include "ftmd/graph.hpp"

namespace ftmd {

/// Plain cycle C_n on vertices v_1..v_n.
Graph build_cycle(int n);

/// Infinity graph C_{n,m}: cycle C_n on v_1..v_n and cycle C_m on
/// v_n, v_{n+1}, .., v_{n+m-1}, sharing the vertex v_n.
/// n+m-1 vertices, n+m edges. Throws ParameterTooSmallError for n or m < 3.
Graph build_type1(int n, int m);

/// Kayak-paddle graph C_{n,r,m}: cycle C_n on v_1..v_n, path
/// v_n - v_{n+1} - .. - v_{n+r}, cycle C_m on v_{n+r}..v_{n+r+m-1}.
/// Throws ParameterTooSmallError for n,m < 3 or r < 1.
Graph build_type2(int n, int r, int m);

/// How one cycle of a blueprint attaches to an earlier cycle. path_length 0
/// means the cycles share the target vertex; otherwise a path of that length
/// joins them.
struct CycleSpec {
  int length = 3;
  int attach_cycle = -1;   // index of an earlier cycle; -1 for the first
  int attach_position = 0; // position within the target cycle's vertex list
  int path_length = 0;
};

struct CactusBlueprint {
  std::vector<CycleSpec> cycle_specs;
  std::uint64_t seed = 0;
};

/// Graph plus the classification known from construction, used to cross-check
/// cactus analysis label-independently.
struct BuiltCactus {
  Graph graph;
  std::vector<std::vector<Vertex>> cycle_vertices;  // cyclic order per blueprint
  int n1 = 0;
  int n2 = 0;
};

/// Realizes a blueprint; vertex ids are assigned in construction order.
/// Throws InvalidAttachmentError.
BuiltCactus build_cactus(const CactusBlueprint& blueprint);

/// Seeded random blueprint whose graph is always a leafless cactus.
/// Deterministic: identical seed and ranges yield identical blueprints.
CactusBlueprint random_cactus(std::uint64_t seed, int min_cycles,
                              int max_cycles, int min_len, int max_len,
                              int min_path, int max_path);

/// The supply-chain demo fixture: 3 main warehouses on a triangle, 4 smaller
/// warehouses, 14 retail outlets; 4 outer cycles, 21 vertices.
Graph build_supply_chain();

/// Human-readable names for the supply-chain vertices, index 1..21.
std::vector<std::string> supply_chain_names();

}  // namespace ftmd

#endif  // FTMD_FAMILIES_HPP
