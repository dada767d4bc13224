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

// Brute-force ground truth and instance generators. Nothing here shares
// algorithm code with the estimators beyond Dijkstra and Tarjan from
// graph.h. Every oracle enforces a size cap and throws SizeLimitError above
// it.

#ifndef RTGIRTH_ORACLE_H_
#define RTGIRTH_ORACLE_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rtgirth/cover.h"
#include "rtgirth/cycle.h"
#include "rtgirth/graph.h"
#include "rtgirth/random.h"

namespace rtgirth {

inline constexpr VertexId kApspVertexCap = 512;
inline constexpr VertexId kDInfinityVertexCap = 128;
inline constexpr std::size_t kIncrementalEdgeCap = 300;
inline constexpr VertexId kEnumerationVertexCap = 22;

// n x n matrix of d(u, v) + d(v, u); kInfinity off mutual reachability.
struct RoundtripMatrix {
  VertexId n = 0;
  std::vector<Length> values;

  Length at(VertexId u, VertexId v) const {
    return values[static_cast<std::size_t>(u) * n + v];
  }
  // Largest finite entry.
  Length MaxFinite() const;
};

RoundtripMatrix ExactRoundtripApsp(const Graph& g);

// Exact girth with a shortest-cycle witness; includes self-loops.
GirthEstimate ExactGirth(const Graph& g);

// Smallest edge length L such that u and v share an SCC of the subgraph of
// edges no longer than L. For u == v, the smallest L at which u's SCC has at
// least two vertices or u has a self-loop.
Length BruteDInfinity(const Graph& g, VertexId u, VertexId v);

// Per edge of the sequence, the smallest prefix length after which it lies
// inside an SCC of the prefix, or 0 if it never does. O(m^2) Tarjan runs.
std::vector<int> IncrementalSccTimes(VertexId num_vertices,
                                     std::span<const std::pair<VertexId, VertexId>> sequence);

// Shortest simple s -> t path whose edge sequence differs from `shortest`,
// by exhaustive search; kInfinity when none.
Length EnumerateSecondSimplePath(const Graph& g, VertexId s, VertexId t,
                                 std::span<const EdgeId> shortest);

// Layered reduction from triangle detection: N = max(n, 3) copies per vertex,
// copy i of v (1-based) has id v * N + i - 1. Every edge (u, v) adds
// (u_N, v_1), (u_1, v_2), (u_2, v_3); every vertex adds v_3 -> ... -> v_N.
// girth = N iff g has a triangle; otherwise every cycle is a multiple of N
// longer than N.
Graph HardnessInstance(const Graph& g);

// m edges without self-loops and with distinct endpoint pairs, lengths
// uniform in [1, max_len]. Throws std::invalid_argument if m > n (n - 1).
Graph RandomDigraph(VertexId n, EdgeId m, Length max_len, RandomStream& rng);

// A random Hamiltonian cycle plus extra_m further distinct pairs.
Graph RandomStronglyConnected(VertexId n, EdgeId extra_m, Length max_len, RandomStream& rng);

struct CoverCheck {
  std::int64_t close_pairs = 0;      // unordered pairs u != v with roundtrip <= R
  std::int64_t uncovered_pairs = 0;  // of those, sharing no non-failure ball
  int failure_balls = 0;
  Length max_radius = 0;             // largest non-failure ball radius
  bool members_within_radius = true; // every member at roundtrip <= radius from its root
};

// Checks `cover` (balls over g's vertex ids) against the exact roundtrip
// distances.
CoverCheck CheckCover(const Cover& cover, const RoundtripMatrix& apsp);

struct StretchCheck {
  double max_stretch = 1.0;    // over pairs at finite positive roundtrip in g
  std::int64_t lost_pairs = 0; // co-cyclic in g but not in the subgraph
};

StretchCheck CheckStretch(const RoundtripMatrix& full, const RoundtripMatrix& sub);

}  // namespace rtgirth

#endif  // RTGIRTH_ORACLE_H_
