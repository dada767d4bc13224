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

// Roundtrip spanner and girth estimators.
//
// The spanner keeps the L-infinity spanner of the collapse forest and, for
// every scale 2^t, the ball trees of a (k, 2^t)-roundtrip-cover of the scale
// graph G^(t). The multiplicative girth estimate reads cycles off those balls.
// The additive estimators work on unweighted graphs: a sampled exact search,
// and a deterministic loop over shortest-path segments via the detour graph.

#ifndef RTGIRTH_GIRTH_H_
#define RTGIRTH_GIRTH_H_

#include <cstdint>
#include <vector>

#include "rtgirth/collapse.h"
#include "rtgirth/cover.h"
#include "rtgirth/cycle.h"
#include "rtgirth/graph.h"
#include "rtgirth/random.h"

namespace rtgirth {

struct ScaleCoverLog {
  int t = 0;
  std::vector<VertexId> representative;  // scale-local vertex -> input vertex
  Cover cover;                           // balls in scale-local ids, scale set
};

struct SpannerResult {
  std::vector<EdgeId> edges;  // sorted ids of g's edges; contains linf.edges
  LinfSpanner linf;
  std::vector<ScaleCoverLog> scales;
  double k = 1;
  double c = 2;
  std::uint64_t seed = 0;
};

// Scale t draws its cover from rng.Substream(t). k >= 1.
SpannerResult FastRoundtripSpanner(const Graph& g, double k, double c, const RandomStream& rng);

// Subgraph of g on the given edge ids, keeping g's edge ids as origins.
Graph SpannerSubgraph(const Graph& g, const SpannerResult& spanner);

// Certified estimate with g <= estimate <= O(k log n) g; kInfinity on
// acyclic input.
GirthEstimate GirthMultiplicative(const Graph& g, double k, double c, const RandomStream& rng);
// Same, reading the balls of an already computed spanner of g.
GirthEstimate GirthMultiplicative(const Graph& g, const SpannerResult& spanner);

// Unweighted g, 0 < a < 1. Minimum of GirthMultiplicative (k = ceil(ln n))
// and the shortest cycle through ceil(c n^(1-a) ln^2 n) sampled vertices.
GirthEstimate GirthAdditiveRandomized(const Graph& g, double a, double c,
                                      const RandomStream& rng);

struct DeterministicGirthOptions {
  // Return as soon as a detour yields L <= 16 d.
  bool early_stop = false;
};

// Unweighted g, 0 < a < 1, 0 < epsilon < 1. Deterministic; with
// d = max(1, ceil(epsilon n^a)) the result is either exact or at most 2d.
GirthEstimate GirthAdditiveDeterministic(const Graph& g, double a, double epsilon,
                                         DeterministicGirthOptions options = {});

}  // namespace rtgirth

#endif  // RTGIRTH_GIRTH_H_
