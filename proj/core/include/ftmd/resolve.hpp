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

#ifndef FTMD_RESOLVE_HPP
#define FTMD_RESOLVE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ftmd/graph.hpp"

namespace ftmd {

/// Ordered candidate set: strictly increasing vertex ids.
using VertexSet = std::vector<Vertex>;

/// Distance vector of v with respect to w, in w's member order.
std::vector<int> distance_vector(const DistanceMatrix& dm, Vertex v,
                                 const VertexSet& w);

/// True iff every vertex of the graph has a distinct distance vector w.r.t. w.
bool is_resolving_set(const DistanceMatrix& dm, const VertexSet& w);

/// True iff w minus any single member is still a resolving set.
///
/// Internally uses the equivalent criterion "every vertex pair is
/// distinguished by at least two members of w" (one pass over vertex pairs);
/// the deletion definition is the tested contract.
bool is_ft_resolving_set(const DistanceMatrix& dm, const VertexSet& w);

struct SearchOptions {
  /// Maximum number of subset-verification steps before SearchBudgetExceeded.
  std::int64_t budget = 100'000'000;
  /// Collect every minimum set, not just the first witness.
  bool enumerate_all = false;
  /// Skip cardinalities below this value. Off (1) by default; callers that
  /// trust an external lower bound may raise it.
  int min_cardinality = 1;
};

struct DimensionResult {
  int dimension = 0;
  /// Lexicographically smallest verifying set of minimum size.
  VertexSet witness;
  std::optional<std::vector<VertexSet>> all_minimum_sets;
  std::int64_t subsets_examined = 0;
};

/// Exact metric dimension by exhaustive search in increasing cardinality,
/// lexicographic within a cardinality. Throws SearchBudgetExceeded.
DimensionResult metric_dimension(const DistanceMatrix& dm,
                                 const SearchOptions& opts = {});

/// Exact fault-tolerant metric dimension. Computes beta first and starts the
/// search at cardinality beta+1.
DimensionResult ft_metric_dimension(const DistanceMatrix& dm,
                                    const SearchOptions& opts = {});

/// Every minimum (FT-)resolving set, in lexicographic order.
std::vector<VertexSet> enumerate_minimum_bases(const DistanceMatrix& dm,
                                               bool fault_tolerant,
                                               const SearchOptions& opts = {});

}  // namespace ftmd

#endif  // FTMD_RESOLVE_HPP
