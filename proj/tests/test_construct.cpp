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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ftmd/construct.hpp"
#include "ftmd/families.hpp"
#include "support.hpp"

using namespace ftmd;

TEST_CASE("partition_type1_even covers every vertex exactly once") {
  for (auto [n, m] : {std::pair{4, 4}, {6, 8}, {10, 6}}) {
    auto p = partition_type1_even(n, m);
    std::set<Vertex> seen;
    for (int i = 1; i <= 7; ++i) {
      for (Vertex v : p.v(i)) {
        CHECK(seen.insert(v).second);
      }
    }
    CHECK(static_cast<int>(seen.size()) == n + m - 1);
    CHECK(*seen.begin() == 1);
    CHECK(*seen.rbegin() == n + m - 1);
    CHECK(p.v(2) == std::vector<Vertex>{n / 2});
    CHECK(p.v(4) == std::vector<Vertex>{n});
    CHECK(p.v(6) == std::vector<Vertex>{n + m / 2});
  }
  CHECK_THROWS_AS(partition_type1_even(3, 4), ParityMismatchError);
  CHECK_THROWS_AS(partition_type1_even(4, 5), ParityMismatchError);
}

TEST_CASE("metric_basis_type1 pinned outputs") {
  CHECK(metric_basis_type1(3, 3).set == VertexSet{1, 4});
  CHECK(metric_basis_type1(3, 4).set == VertexSet{1, 4});
  CHECK(metric_basis_type1(4, 3).set == VertexSet{1, 5});
  CHECK(metric_basis_type1(4, 4).set == VertexSet{1, 3, 5});
  CHECK(metric_basis_type1(5, 6).set == VertexSet{2, 7});
  CHECK(metric_basis_type1(6, 6).set == VertexSet{1, 4, 7});
  CHECK_THROWS_AS(metric_basis_type1(2, 3), ParameterTooSmallError);
}

TEST_CASE("metric_basis_type1 size matches the parity rule") {
  for (int n = 3; n <= 9; ++n) {
    for (int m = 3; m <= 9; ++m) {
      auto basis = metric_basis_type1(n, m);
      size_t expected = (n % 2 == 0 && m % 2 == 0) ? 3 : 2;
      CHECK(basis.set.size() == expected);
    }
  }
}

TEST_CASE("ft_basis_type1 pinned outputs") {
  auto b33 = ft_basis_type1(3, 3);
  CHECK(b33.set == VertexSet{1, 2, 4, 5});
  REQUIRE(b33.components.has_value());
  CHECK(b33.components->first == VertexSet{1, 4});
  CHECK(b33.components->second == VertexSet{2, 5});

  CHECK(ft_basis_type1(3, 4).set == VertexSet{1, 2, 4, 6});
  CHECK(ft_basis_type1(4, 3).set == VertexSet{1, 3, 5, 6});

  auto b44 = ft_basis_type1(4, 4);
  CHECK(b44.set == VertexSet{1, 3, 5, 7});
  // Both-even unions come from overlapping 3-sets, so no component pair.
  CHECK_FALSE(b44.components.has_value());
}

TEST_CASE("ft_basis_type1 components are disjoint resolving sets") {
  for (int n = 3; n <= 8; ++n) {
    for (int m = 3; m <= 8; ++m) {
      auto basis = ft_basis_type1(n, m);
      CHECK(basis.set.size() == 4);
      DistanceMatrix dm(build_type1(n, m));
      CHECK(testing::ft_by_deletion(dm, basis.set));
      if (basis.components) {
        const auto& [w1, w2] = *basis.components;
        CHECK(is_resolving_set(dm, w1));
        CHECK(is_resolving_set(dm, w2));
        for (Vertex v : w1) {
          CHECK(std::find(w2.begin(), w2.end(), v) == w2.end());
        }
      }
    }
  }
}

TEST_CASE("ft_basis_type2 pinned outputs") {
  auto b = ft_basis_type2(3, 1, 3);
  CHECK(b.set == VertexSet{1, 2, 5, 6});
  REQUIRE(b.components.has_value());
  CHECK(b.components->first == VertexSet{1, 5});
  CHECK(b.components->second == VertexSet{2, 6});
  CHECK(ft_basis_type2(4, 2, 4).set == VertexSet{1, 3, 7, 9});
}

TEST_CASE("ft_basis_type2 verifies across a sweep") {
  for (int n = 3; n <= 7; ++n) {
    for (int m = 3; m <= 7; ++m) {
      for (int r = 1; r <= 3; ++r) {
        auto basis = ft_basis_type2(n, r, m);
        CHECK(basis.set.size() == 4);
        DistanceMatrix dm(build_type2(n, r, m));
        CHECK(testing::ft_by_deletion(dm, basis.set));
      }
    }
  }
}

TEST_CASE("ft_basis_cactus pinned outputs") {
  Graph g33 = build_type1(3, 3);
  auto basis = ft_basis_cactus(g33, analyze(g33));
  CHECK(basis.set == VertexSet{1, 2, 4, 5});

  Graph g424 = build_type2(4, 2, 4);
  CHECK(ft_basis_cactus(g424, analyze(g424)).set == VertexSet{1, 3, 7, 9});
}

TEST_CASE("ft_basis_cactus matches the formula on random instances") {
  auto corpus = testing::cactus_corpus(30, 30);
  for (const auto& built : corpus) {
    auto a = analyze(built.graph);
    auto basis = ft_basis_cactus(built.graph, a);
    CHECK(static_cast<int>(basis.set.size()) == a.predicted_ft_dimension);
    DistanceMatrix dm(built.graph);
    CHECK(testing::ft_by_deletion(dm, basis.set));
  }
}

TEST_CASE("ft_basis_cactus rejects a missing analysis") {
  Graph g = build_type1(3, 3);
  CactusAnalysis empty;
  CHECK_THROWS_AS(ft_basis_cactus(g, empty), NotAnalyzedError);
}
