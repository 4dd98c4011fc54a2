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

// Acceptance suite: one criterion per check function, one pass/fail line per
// criterion on stdout. Exit code is the number of failed criteria.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ftmd/construct.hpp"
#include "ftmd/families.hpp"
#include "ftmd/io.hpp"
#include "ftmd/resolve.hpp"
#include "support.hpp"

using namespace ftmd;

namespace {

struct Criterion {
  std::string name;
  std::function<bool(std::string&)> run;
};

bool contains(const VertexSet& w, Vertex v) {
  return std::find(w.begin(), w.end(), v) != w.end();
}

// 1. Exact metric dimension of every C_{n,m}, 3 <= n,m <= 8.
bool c1_type1_metric_dimension(std::string& detail) {
  for (int n = 3; n <= 8; ++n) {
    for (int m = 3; m <= 8; ++m) {
      int expected = (n % 2 == 0 && m % 2 == 0) ? 3 : 2;
      int got = metric_dimension(DistanceMatrix(build_type1(n, m))).dimension;
      if (got != expected) {
        detail = "C_{" + std::to_string(n) + "," + std::to_string(m) +
                 "}: got " + std::to_string(got) + ", expected " +
                 std::to_string(expected);
        return false;
      }
    }
  }
  detail = "36 instances exact";
  return true;
}

// 2. Exact metric dimension 2 of every C_{n,r,m}, 3 <= n,m <= 7, r <= 3.
bool c2_type2_metric_dimension(std::string& detail) {
  int count = 0;
  for (int n = 3; n <= 7; ++n) {
    for (int m = 3; m <= 7; ++m) {
      for (int r = 1; r <= 3; ++r) {
        int got =
            metric_dimension(DistanceMatrix(build_type2(n, r, m))).dimension;
        ++count;
        if (got != 2) {
          detail = "C_{" + std::to_string(n) + "," + std::to_string(r) + "," +
                   std::to_string(m) + "}: got " + std::to_string(got);
          return false;
        }
      }
    }
  }
  detail = std::to_string(count) + " instances exact";
  return true;
}

// 3. FT dimension 4 across both bicyclic families.
bool c3_ft_dimension_four(std::string& detail) {
  int count = 0;
  for (int n = 3; n <= 7; ++n) {
    for (int m = 3; m <= 7; ++m) {
      int got = ft_metric_dimension(DistanceMatrix(build_type1(n, m))).dimension;
      ++count;
      if (got != 4) {
        detail = "C_{" + std::to_string(n) + "," + std::to_string(m) +
                 "}: got " + std::to_string(got);
        return false;
      }
    }
  }
  for (int n = 3; n <= 6; ++n) {
    for (int m = 3; m <= 6; ++m) {
      for (int r = 1; r <= 3; ++r) {
        int got =
            ft_metric_dimension(DistanceMatrix(build_type2(n, r, m))).dimension;
        ++count;
        if (got != 4) {
          detail = "C_{" + std::to_string(n) + "," + std::to_string(r) + "," +
                   std::to_string(m) + "}: got " + std::to_string(got);
          return false;
        }
      }
    }
  }
  detail = std::to_string(count) + " instances exact";
  return true;
}

// 4. FT dimension of plain cycles is 3, except C_4 where it is provably 4:
// every 3-subset of C_4 contains an antipodal pair, and dropping the third
// member leaves that non-resolving pair.
bool c4_cycle_baseline(std::string& detail) {
  for (int n = 3; n <= 10; ++n) {
    int expected = (n == 4) ? 4 : 3;
    int got = ft_metric_dimension(DistanceMatrix(build_cycle(n))).dimension;
    if (got != expected) {
      detail = "C_" + std::to_string(n) + ": got " + std::to_string(got);
      return false;
    }
  }
  detail = "cycles C_3..C_10 exact (C_4 is the documented exception at 4)";
  return true;
}

// 5. Exclusion rules over every minimum basis of both families.
bool c5_exclusions(std::string& detail) {
  int bases_checked = 0;
  for (int n = 3; n <= 7; ++n) {
    for (int m = 3; m <= 7; ++m) {
      auto bases = enumerate_minimum_bases(DistanceMatrix(build_type1(n, m)), false);
      for (const auto& w : bases) {
        ++bases_checked;
        std::string key = "C_{" + std::to_string(n) + "," + std::to_string(m) + "}";
        if (contains(w, n)) {
          detail = key + ": basis contains the common vertex";
          return false;
        }
        if (n % 2 == 0 && m % 2 == 1 && contains(w, n / 2)) {
          detail = key + ": basis contains v_{n/2}";
          return false;
        }
        if (n % 2 == 1 && m % 2 == 0 && contains(w, n + m / 2)) {
          detail = key + ": basis contains v_{n+m/2}";
          return false;
        }
        if (n % 2 == 0 && m % 2 == 0 && contains(w, n / 2) &&
            contains(w, n + m / 2)) {
          detail = key + ": basis contains both middle vertices";
          return false;
        }
      }
    }
  }
  for (int n = 3; n <= 6; ++n) {
    for (int m = 3; m <= 6; ++m) {
      for (int r = 1; r <= 3; ++r) {
        auto bases =
            enumerate_minimum_bases(DistanceMatrix(build_type2(n, r, m)), false);
        for (const auto& w : bases) {
          ++bases_checked;
          for (int v = n; v <= n + r; ++v) {
            if (contains(w, v)) {
              detail = "C_{" + std::to_string(n) + "," + std::to_string(r) +
                       "," + std::to_string(m) + "}: basis contains path vertex v_" +
                       std::to_string(v);
              return false;
            }
          }
        }
      }
    }
  }
  detail = std::to_string(bases_checked) + " minimum bases, zero violations";
  return true;
}

// 6. Every constructive output verifies under its declared predicate.
bool c6_constructive_soundness(std::string& detail) {
  int built = 0;
  try {
    for (int n = 3; n <= 10; ++n) {
      for (int m = 3; m <= 10; ++m) {
        metric_basis_type1(n, m);
        ft_basis_type1(n, m);
        built += 2;
        for (int r = 1; r <= 4; ++r) {
          ft_basis_type2(n, r, m);
          ++built;
        }
      }
    }
    for (const auto& instance : testing::cactus_corpus(200, 20)) {
      ft_basis_cactus(instance.graph, analyze(instance.graph));
      ++built;
    }
  } catch (const Error& e) {
    detail = std::string("construction failed: ") + e.what();
    return false;
  }
  detail = std::to_string(built) + " constructions verified";
  return true;
}

// 7. Formula vs brute force on the random corpus, counterexamples persisted.
bool c7_formula_oracle_agreement(std::string& detail) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "ftmd-acceptance-counterexamples";
  fs::remove_all(dir);
  fs::create_directories(dir);

  auto corpus = testing::cactus_corpus(50, 16);
  int matched = 0;
  for (size_t i = 0; i < corpus.size(); ++i) {
    const auto& instance = corpus[i];
    CactusAnalysis a = analyze(instance.graph);
    int brute = ft_metric_dimension(DistanceMatrix(instance.graph)).dimension;
    if (brute == a.predicted_ft_dimension) {
      ++matched;
    } else {
      std::ofstream f(dir / ("instance-" + std::to_string(i) + ".graph"));
      f << "c predicted " << a.predicted_ft_dimension << " brute " << brute
        << "\n"
        << emit_graph_file(instance.graph);
    }
  }
  bool empty = fs::is_empty(dir);
  detail = std::to_string(matched) + "/" + std::to_string(corpus.size()) +
           " match, counterexample dir " + (empty ? "empty" : dir.string());
  return matched == static_cast<int>(corpus.size()) && empty;
}

// 8. beta+1 <= beta' <= beta(1+2*5^(beta-1)) on every tested instance.
bool c8_bound_invariants(std::string& detail) {
  std::vector<DistanceMatrix> instances;
  for (int n = 3; n <= 7; ++n) {
    for (int m = 3; m <= 7; ++m) {
      instances.emplace_back(build_type1(n, m));
      instances.emplace_back(build_type2(n, 2, m));
    }
  }
  for (int n = 3; n <= 10; ++n) instances.emplace_back(build_cycle(n));
  for (const auto& c : testing::cactus_corpus(25, 15)) {
    instances.emplace_back(c.graph);
  }
  for (const auto& dm : instances) {
    int beta = metric_dimension(dm).dimension;
    int beta_ft = ft_metric_dimension(dm).dimension;
    long long pow5 = 1;
    for (int i = 1; i < beta; ++i) pow5 *= 5;
    if (!(beta + 1 <= beta_ft && beta_ft <= beta * (1 + 2 * pow5))) {
      detail = "violated at beta=" + std::to_string(beta) +
               " beta_ft=" + std::to_string(beta_ft);
      return false;
    }
  }
  detail = std::to_string(instances.size()) + " instances within bounds";
  return true;
}

// 9. Pairwise criterion == deletion definition on 1000 random samples.
bool c9_pairwise_equivalence(std::string& detail) {
  std::mt19937_64 rng(424242);
  auto corpus = testing::cactus_corpus(20, 18);
  int samples = 0;
  while (samples < 1000) {
    const auto& instance = corpus[rng() % corpus.size()];
    DistanceMatrix dm(instance.graph);
    int n = instance.graph.vertex_count();
    int size = 2 + static_cast<int>(rng() % 5);
    VertexSet w = testing::random_subset(rng, n, std::min(size, n));
    if (is_ft_resolving_set(dm, w) != testing::ft_by_deletion(dm, w)) {
      std::ostringstream ss;
      ss << "disagreement on sample " << samples;
      detail = ss.str();
      return false;
    }
    ++samples;
  }
  detail = "1000 samples agree";
  return true;
}

// 10. Supply-chain fixture: formula, brute force, and single removals.
bool c10_supply_chain(std::string& detail) {
  Graph g = build_supply_chain();
  DistanceMatrix dm(g);
  CactusAnalysis a = analyze(g);
  if (a.n1 != 4 || a.n2 != 0) {
    detail = "n1=" + std::to_string(a.n1) + " n2=" + std::to_string(a.n2);
    return false;
  }
  if (a.predicted_ft_dimension != 8) {
    detail = "formula gives " + std::to_string(a.predicted_ft_dimension);
    return false;
  }
  int brute = ft_metric_dimension(dm).dimension;
  if (brute != 8) {
    detail = "brute force gives " + std::to_string(brute);
    return false;
  }
  ConstructedBasis basis = ft_basis_cactus(g, a);
  if (basis.set.size() != 8) {
    detail = "constructed set has " + std::to_string(basis.set.size()) +
             " vertices";
    return false;
  }
  for (Vertex removed : basis.set) {
    VertexSet reduced;
    for (Vertex v : basis.set) {
      if (v != removed) reduced.push_back(v);
    }
    if (!is_resolving_set(dm, reduced)) {
      detail = "removal of v_" + std::to_string(removed) + " breaks resolution";
      return false;
    }
  }
  detail = "n1=4 n2=0, formula and brute force agree at 8, removals safe";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"type1 metric dimension sweep", c1_type1_metric_dimension},
      {"type2 metric dimension sweep", c2_type2_metric_dimension},
      {"fault-tolerant dimension 4 sweep", c3_ft_dimension_four},
      {"cycle baseline", c4_cycle_baseline},
      {"minimum-basis exclusions", c5_exclusions},
      {"constructive soundness", c6_constructive_soundness},
      {"formula vs oracle agreement", c7_formula_oracle_agreement},
      {"bound invariants", c8_bound_invariants},
      {"pairwise criterion equivalence", c9_pairwise_equivalence},
      {"supply-chain demo", c10_supply_chain},
  };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failed;
    std::printf("[%s] criterion %zu: %s (%s)\n", ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name.c_str(), detail.c_str());
    std::fflush(stdout);
  }
  return failed;
}
