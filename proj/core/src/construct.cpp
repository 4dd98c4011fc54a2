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

#include "ftmd/construct.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "ftmd/families.hpp"

namespace ftmd {
namespace {

VertexSet sorted_set(std::initializer_list<Vertex> vs) {
  VertexSet s(vs);
  std::sort(s.begin(), s.end());
  return s;
}

std::string describe(const VertexSet& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

void require_distinct(const VertexSet& s, const std::string& what) {
  std::set<Vertex> uniq(s.begin(), s.end());
  if (uniq.size() != s.size()) {
    throw ConstructionInapplicableError(what + ": indices collide in " +
                                        describe(s));
  }
}

// Every construction is checked against the verification predicates before
// being returned; a failing construction is surfaced, never masked.
void post_verify(const Graph& g, const ConstructedBasis& basis,
                 bool fault_tolerant, const std::string& instance) {
  DistanceMatrix dm(g);
  if (basis.components) {
    const auto& [w1, w2] = *basis.components;
    std::set<Vertex> inter;
    for (Vertex v : w1) {
      if (std::binary_search(w2.begin(), w2.end(), v)) inter.insert(v);
    }
    if (!inter.empty()) {
      throw ConstructionFailedError(instance + ": components overlap");
    }
    if (!is_resolving_set(dm, w1) || !is_resolving_set(dm, w2)) {
      throw ConstructionFailedError(instance + ": component " +
                                    describe(w1) + " or " + describe(w2) +
                                    " is not a resolving set");
    }
  }
  bool ok = fault_tolerant ? is_ft_resolving_set(dm, basis.set)
                           : is_resolving_set(dm, basis.set);
  if (!ok) {
    throw ConstructionFailedError(instance + ": constructed set " +
                                  describe(basis.set) + " fails the " +
                                  (fault_tolerant ? "FT " : "") +
                                  "resolving predicate");
  }
}

}  // namespace

PartitionV1toV7 partition_type1_even(int n, int m) {
  if (n < 4 || m < 4 || n % 2 != 0 || m % 2 != 0) {
    throw ParityMismatchError("partition needs even n,m >= 4, got n=" +
                              std::to_string(n) + " m=" + std::to_string(m));
  }
  PartitionV1toV7 p;
  for (int v = 1; v <= n / 2 - 1; ++v) p.parts[0].push_back(v);
  p.parts[1] = {n / 2};
  for (int v = n / 2 + 1; v <= n - 1; ++v) p.parts[2].push_back(v);
  p.parts[3] = {n};
  for (int v = n + 1; v <= n + m / 2 - 1; ++v) p.parts[4].push_back(v);
  p.parts[5] = {n + m / 2};
  for (int v = n + m / 2 + 1; v <= n + m - 1; ++v) p.parts[6].push_back(v);
  return p;
}

ConstructedBasis metric_basis_type1(int n, int m) {
  Graph g = build_type1(n, m);
  ConstructedBasis basis;
  if (n % 2 == 1 && m % 2 == 1) {
    basis.set = sorted_set({n / 2, n + m / 2});
    basis.construction = "type1-odd-odd";
  } else if (n % 2 == 1) {  // m even
    basis.set = sorted_set({n / 2, n + m / 2 - 1});
    basis.construction = "type1-odd-even";
  } else if (m % 2 == 1) {  // n even
    basis.set = sorted_set({1, n + m / 2});
    basis.construction = "type1-even-odd";
  } else {
    // Lowest-id member of each of V1, V3, V5.
    basis.set = sorted_set({1, n / 2 + 1, n + 1});
    basis.construction = "type1-even-even";
  }
  require_distinct(basis.set, basis.construction);
  post_verify(g, basis, false, basis.construction + "(" + std::to_string(n) +
                                   "," + std::to_string(m) + ")");
  return basis;
}

ConstructedBasis ft_basis_type1(int n, int m) {
  Graph g = build_type1(n, m);
  ConstructedBasis basis;
  if (n % 2 == 0 && m % 2 == 0) {
    // Lowest-id members of V1, V3, V5, V7. The two three-element bases this
    // union comes from share two vertices, so no disjoint component pair is
    // reported for this parity.
    basis.set = sorted_set({1, n / 2 + 1, n + 1, n + m / 2 + 1});
    basis.construction = "ft-type1-even-even";
  } else {
    VertexSet w1, w2;
    if (n % 2 == 1 && m % 2 == 1) {
      w1 = sorted_set({n / 2, n + m / 2});
      w2 = sorted_set({n / 2 + 1, n + m / 2 + 1});
      basis.construction = "ft-type1-odd-odd";
    } else if (n % 2 == 1) {  // m even
      w1 = sorted_set({n / 2, n + m / 2 - 1});
      w2 = sorted_set({n / 2 + 1, n + m / 2 + 1});
      basis.construction = "ft-type1-odd-even";
    } else {  // n even, m odd
      Vertex second = (2 == n / 2) ? 3 : 2;  // avoid v_n and v_{n/2}
      w1 = sorted_set({1, n + m / 2});
      w2 = sorted_set({second, n + m / 2 + 1});
      basis.construction = "ft-type1-even-odd";
    }
    basis.set = w1;
    basis.set.insert(basis.set.end(), w2.begin(), w2.end());
    std::sort(basis.set.begin(), basis.set.end());
    basis.components = {w1, w2};
  }
  require_distinct(basis.set, basis.construction);
  post_verify(g, basis, true, basis.construction + "(" + std::to_string(n) +
                                  "," + std::to_string(m) + ")");
  return basis;
}

ConstructedBasis ft_basis_type2(int n, int r, int m) {
  Graph g = build_type2(n, r, m);
  ConstructedBasis basis;
  // Junction-neighbor choice: valid for all n,m >= 3 and clear of the
  // excluded vertices v_n, v_{n/2}, v_{n+r}, v_{n+r+m/2}.
  VertexSet w1 = sorted_set({1, n + r + 1});
  VertexSet w2 = sorted_set({n - 1, n + r + m - 1});
  basis.set = w1;
  basis.set.insert(basis.set.end(), w2.begin(), w2.end());
  std::sort(basis.set.begin(), basis.set.end());
  basis.components = {w1, w2};
  basis.construction = "ft-type2";
  require_distinct(basis.set, basis.construction);
  post_verify(g, basis, true,
              "ft-type2(" + std::to_string(n) + "," + std::to_string(r) + "," +
                  std::to_string(m) + ")");
  return basis;
}

ConstructedBasis ft_basis_cactus(const Graph& g,
                                 const CactusAnalysis& analysis) {
  if (analysis.cycles.size() < 2 || analysis.predicted_ft_dimension == 0) {
    throw NotAnalyzedError("ft_basis_cactus needs an analysis of >= 2 cycles");
  }
  std::set<Vertex> members;
  for (const CycleRecord& c : analysis.cycles) {
    if (c.contribution != 2) continue;
    int len = c.length();
    auto at = [&](int pos) { return c.vertices[((pos % len) + len) % len]; };
    if (c.classification == CycleClass::Outer) {
      int p = 0;
      while (c.vertices[p] != c.common_vertices[0]) ++p;
      members.insert(at(p - 1));
      members.insert(at(p + 1));
    } else {
      // Even inner cycle with two antipodal common vertices u < v.
      Vertex u = c.common_vertices[0], v = c.common_vertices[1];
      int pu = 0, pv = 0;
      while (c.vertices[pu] != u) ++pu;
      while (c.vertices[pv] != v) ++pv;
      if (len == 4) {
        members.insert(at(pu + 1));
        members.insert(at(pu - 1));
      } else {
        // Arc whose first vertex off u has the smaller id.
        int dir = at(pu + 1) < at(pu - 1) ? 1 : -1;
        members.insert(at(pu + dir));
        members.insert(at(pv - dir));
      }
    }
  }
  ConstructedBasis basis;
  basis.set.assign(members.begin(), members.end());
  basis.construction = "ft-cactus";
  if (static_cast<int>(basis.set.size()) != analysis.predicted_ft_dimension) {
    throw ConstructionFailedError(
        "cactus basis has " + std::to_string(basis.set.size()) +
        " vertices, expected " + std::to_string(analysis.predicted_ft_dimension));
  }
  post_verify(g, basis, true, "ft-cactus");
  return basis;
}

}  // namespace ftmd
