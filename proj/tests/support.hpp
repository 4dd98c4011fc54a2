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

#ifndef FTMD_TESTS_SUPPORT_HPP
#define FTMD_TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "ftmd/families.hpp"
#include "ftmd/resolve.hpp"

namespace ftmd::testing {

// Independent oracle for the fault-tolerant predicate: the literal deletion
// definition, checked one removal at a time. Kept apart from the library's
// pairwise-count implementation on purpose.
inline bool ft_by_deletion(const DistanceMatrix& dm, const VertexSet& w) {
  if (w.size() < 2) return false;
  for (size_t skip = 0; skip < w.size(); ++skip) {
    VertexSet reduced;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i != skip) reduced.push_back(w[i]);
    }
    if (!is_resolving_set(dm, reduced)) return false;
  }
  return true;
}

// Deterministic random-cactus corpus shared by the property and acceptance
// suites. Seeds are consecutive from 1; instances above max_vertices are
// skipped so corpus membership is stable.
inline std::vector<BuiltCactus> cactus_corpus(int count, int max_vertices) {
  std::vector<BuiltCactus> corpus;
  for (std::uint64_t seed = 1; static_cast<int>(corpus.size()) < count; ++seed) {
    BuiltCactus built = build_cactus(random_cactus(seed, 2, 4, 3, 6, 1, 2));
    if (built.graph.vertex_count() <= max_vertices) {
      corpus.push_back(std::move(built));
    }
  }
  return corpus;
}

// Random strictly-increasing vertex subset of the given size.
inline VertexSet random_subset(std::mt19937_64& rng, int n, int size) {
  std::vector<Vertex> all(n);
  for (int i = 0; i < n; ++i) all[i] = i + 1;
  std::shuffle(all.begin(), all.end(), rng);
  VertexSet w(all.begin(), all.begin() + size);
  std::sort(w.begin(), w.end());
  return w;
}

}  // namespace ftmd::testing

#endif  // FTMD_TESTS_SUPPORT_HPP
