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

#ifndef FTMD_CONSTRUCT_HPP
#define FTMD_CONSTRUCT_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>

#include "ftmd/cactus.hpp"
#include "ftmd/resolve.hpp"

namespace ftmd {

/// The seven-way vertex partition of C_{n,m} for even n,m: two cycle halves
/// per cycle, plus the singletons v_{n/2}, v_n and v_{n+m/2}.
struct PartitionV1toV7 {
  std::array<std::vector<Vertex>, 7> parts;

  const std::vector<Vertex>& v(int i) const { return parts[i - 1]; }
};

/// Throws ParityMismatchError unless both n and m are even.
PartitionV1toV7 partition_type1_even(int n, int m);

/// A basis produced by one of the explicit constructions. Every constructor
/// verifies its output against the declared predicate before returning and
/// throws ConstructionFailedError otherwise.
struct ConstructedBasis {
  VertexSet set;
  std::string construction;  // which rule produced it
  /// Two disjoint metric bases whose union forms the FT basis, when the
  /// construction works that way.
  std::optional<std::pair<VertexSet, VertexSet>> components;
};

/// Metric basis of C_{n,m}: a 2-set when a parity is odd, a 3-set when both
/// are even. Free choices are pinned to canonical values.
ConstructedBasis metric_basis_type1(int n, int m);

/// Fault-tolerant basis of C_{n,m} as a union of two disjoint metric bases.
ConstructedBasis ft_basis_type1(int n, int m);

/// Fault-tolerant basis of C_{n,r,m} from junction-neighbor vertices:
/// W1 = {v_1, v_{n+r+1}}, W2 = {v_{n-1}, v_{n+r+m-1}}.
ConstructedBasis ft_basis_type2(int n, int r, int m);

/// Generic leafless-cactus FT basis: two cycle-neighbors of the common vertex
/// for each outer cycle, and one neighbor of each common vertex on a shared
/// arc for each counted inner cycle. Size equals 2(n1+n2).
ConstructedBasis ft_basis_cactus(const Graph& g, const CactusAnalysis& analysis);

}  // namespace ftmd

#endif  // FTMD_CONSTRUCT_HPP
