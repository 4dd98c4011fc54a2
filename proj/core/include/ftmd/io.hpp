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

#ifndef FTMD_IO_HPP
#define FTMD_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "ftmd/cactus.hpp"
#include "ftmd/construct.hpp"
#include "ftmd/graph.hpp"
#include "ftmd/resolve.hpp"

namespace ftmd {

using Json = nlohmann::ordered_json;

/// Parses the graph file format:
///   c <comment>        ignored
///   p <vertex_count>   exactly once, before any edge
///   e <u> <v>          one per edge, 1-indexed
/// Throws ParseError with the offending line number; graph-core construction
/// errors are rethrown as ParseError with line provenance.
Graph parse_graph_file(const std::string& text);

/// Canonical emission: `p` line, then `e u v` lines with u < v in sorted
/// order, ASCII, \n newlines, single-space separators.
std::string emit_graph_file(const Graph& g);

// JSON views of the domain records. Vertex ids stay 1-indexed and sets are
// sorted ascending, so reports are byte-stable across runs.
Json to_json(const VertexSet& w);
Json to_json(const DimensionResult& r);
Json to_json(const CycleRecord& c);
Json to_json(const CactusAnalysis& a);
Json to_json(const ConstructedBasis& b);

}  // namespace ftmd

#endif  // FTMD_IO_HPP
