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

#include "ftmd/resolve.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ftmd {
namespace {

// Visits every k-subset of {1..n} in lexicographic order on the sorted member
// list. fn returns false to stop early.
template <class F>
void for_each_subset(int n, int k, F&& fn) {
  if (k < 1 || k > n) return;
  VertexSet members(k);
  std::iota(members.begin(), members.end(), 1);
  for (;;) {
    if (!fn(const_cast<const VertexSet&>(members))) return;
    // Advance to the next combination.
    int i = k - 1;
    while (i >= 0 && members[i] == n - (k - 1 - i)) --i;
    if (i < 0) return;
    ++members[i];
    for (int j = i + 1; j < k; ++j) members[j] = members[j - 1] + 1;
  }
}

struct SearchState {
  std::int64_t steps = 0;
  std::int64_t budget;

  void charge() {
    if (++steps > budget) {
      throw SearchBudgetExceeded("subset budget of " + std::to_string(budget) +
                                 " verification steps exhausted");
    }
  }
};

using Predicate = bool (*)(const DistanceMatrix&, const VertexSet&);

DimensionResult search(const DistanceMatrix& dm, Predicate verifies,
                       int start_cardinality, const SearchOptions& opts,
                       SearchState& state) {
  const int n = dm.vertex_count();
  DimensionResult result;
  for (int k = start_cardinality; k <= n; ++k) {
    bool found = false;
    for_each_subset(n, k, [&](const VertexSet& w) {
      state.charge();
      if (verifies(dm, w)) {
        if (!found) {
          found = true;
          result.dimension = k;
          result.witness = w;
          if (opts.enumerate_all) result.all_minimum_sets = {{w}};
        } else {
          result.all_minimum_sets->push_back(w);
        }
        return opts.enumerate_all;  // keep scanning only when enumerating
      }
      return true;
    });
    if (found) {
      result.subsets_examined = state.steps;
      return result;
    }
  }
  throw Error("no verifying set found at any cardinality");
}

}  // namespace

std::vector<int> distance_vector(const DistanceMatrix& dm, Vertex v,
                                 const VertexSet& w) {
  std::vector<int> coords;
  coords.reserve(w.size());
  for (Vertex x : w) coords.push_back(dm(v, x));
  return coords;
}

bool is_resolving_set(const DistanceMatrix& dm, const VertexSet& w) {
  const int n = dm.vertex_count();
  // Sort vertex ids by their distance vectors and scan neighbors for a tie;
  // integer comparison end-to-end keeps the result platform-independent.
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 1);
  auto less = [&](Vertex a, Vertex b) {
    for (Vertex x : w) {
      int da = dm(a, x), db = dm(b, x);
      if (da != db) return da < db;
    }
    return false;
  };
  std::sort(order.begin(), order.end(), less);
  for (int i = 0; i + 1 < n; ++i) {
    if (!less(order[i], order[i + 1])) return false;
  }
  return true;
}

bool is_ft_resolving_set(const DistanceMatrix& dm, const VertexSet& w) {
  if (w.size() < 2) return false;
  const int n = dm.vertex_count();
  const int needed = 2;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      int resolvers = 0;
      for (Vertex x : w) {
        if (dm(u, x) != dm(v, x) && ++resolvers == needed) break;
      }
      if (resolvers < needed) return false;
    }
  }
  return true;
}

DimensionResult metric_dimension(const DistanceMatrix& dm,
                                 const SearchOptions& opts) {
  SearchState state{0, opts.budget};
  return search(dm, &is_resolving_set, std::max(1, opts.min_cardinality), opts,
                state);
}

DimensionResult ft_metric_dimension(const DistanceMatrix& dm,
                                    const SearchOptions& opts) {
  SearchState state{0, opts.budget};
  SearchOptions beta_opts = opts;
  beta_opts.enumerate_all = false;
  beta_opts.min_cardinality = 1;
  DimensionResult beta = search(dm, &is_resolving_set, 1, beta_opts, state);
  int start = std::max(beta.dimension + 1, opts.min_cardinality);
  return search(dm, &is_ft_resolving_set, start, opts, state);
}

std::vector<VertexSet> enumerate_minimum_bases(const DistanceMatrix& dm,
                                               bool fault_tolerant,
                                               const SearchOptions& opts) {
  SearchOptions enum_opts = opts;
  enum_opts.enumerate_all = true;
  DimensionResult r = fault_tolerant ? ft_metric_dimension(dm, enum_opts)
                                     : metric_dimension(dm, enum_opts);
  return *r.all_minimum_sets;
}

}  // namespace ftmd
