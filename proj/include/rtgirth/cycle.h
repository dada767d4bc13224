// Copyright 2026 The rtgirth Authors.
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

// Explicit cycles: witnesses certifying girth upper bounds.

#ifndef RTGIRTH_CYCLE_H_
#define RTGIRTH_CYCLE_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rtgirth/graph.h"

namespace rtgirth {

enum class Provenance { kBall, kSampledBfs, kDetour, kBaseCase };

std::string_view ProvenanceName(Provenance p);

// A simple cycle vertices[0] -> vertices[1] -> ... -> vertices[0]. edges[i]
// is the edge leaving vertices[i].
struct CycleWitness {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  Length length = 0;
  Provenance provenance = Provenance::kBaseCase;
};

// Result of a girth estimator. estimate == kInfinity iff witness is empty.
struct GirthEstimate {
  Length estimate = kInfinity;
  std::optional<CycleWitness> witness;
};

// Splits the closed walk `walk` (edge ids of g) into simple cycles and returns
// the shortest one. Throws std::invalid_argument if the edges do not form a
// closed walk.
CycleWitness ReduceToSimpleCycle(const Graph& g, std::span<const EdgeId> walk,
                                 Provenance provenance);

// Exact shortest cycle through v: one Dijkstra from v, then the cheapest
// closing in-edge. std::nullopt when v lies on no cycle.
std::optional<CycleWitness> ShortestCycleThrough(const Graph& g, VertexId v);

// Empty string when `w` is a simple cycle of g whose length matches the sum
// of its edge lengths; otherwise a description of the first violation.
std::string CheckWitness(const Graph& g, const CycleWitness& w);

}  // namespace rtgirth

#endif  // RTGIRTH_CYCLE_H_
