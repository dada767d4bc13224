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

// Exponentially shifted clustering of directed graphs.
//
// Every seed v draws a shift x_v ~ Exp(beta) with beta = ln(n) / r. A vertex u
// joins the seed minimizing -x_v + d(v, u) (or d(u, v) for the in-variant),
// provided that quantity is <= 0; otherwise it stays in the residual set. The
// whole assignment is one multi-source Dijkstra in which seed v starts at
// offset max(x) - x_v.
//
// Shifts are quantized to a 2^-20 grid and distances are carried in the same
// fixed-point unit, so all comparisons against integer edge lengths are
// exact. Ties go to the seed with the lowest vertex id.

#ifndef RTGIRTH_CLUSTERING_H_
#define RTGIRTH_CLUSTERING_H_

#include <span>
#include <vector>

#include "rtgirth/graph.h"
#include "rtgirth/random.h"

namespace rtgirth {

inline constexpr int kShiftFractionBits = 20;

// floor(x * 2^20), saturating for huge or infinite x.
std::int64_t QuantizeShift(double x);

// Inverse-CDF sample of Exp(beta) from u in (0, 1]: -ln(u) / beta.
double ExponentialFromUniform(double u, double beta);
double SampleExponential(RandomStream& rng, double beta);

struct Cluster {
  VertexId root = kNoVertex;
  double shift = 0;                // x_root as drawn
  std::vector<VertexId> members;   // sorted
  BallTree tree;                   // parallel to members
};

struct ClusterResult {
  Direction direction = Direction::kOut;
  double beta = 0;
  std::vector<VertexId> seeds;
  std::vector<double> shifts;      // one per seed
  std::vector<Cluster> clusters;   // nonempty rooted clusters
  std::vector<VertexId> residual;  // unassigned vertices, sorted
  std::vector<int> cluster_of;     // index into clusters, -1 for residual

  // Rooted clusters followed by the residual set (when nonempty).
  VertexPartition ToPartition() const;
};

// Parallel-style clustering. `forced_shifts`, when nonempty, replaces the
// random draws (one value per seed) and leaves `rng` untouched.
ClusterResult ClusterGraph(const Graph& g, std::span<const VertexId> seeds,
                           double radius, Direction direction, RandomStream& rng,
                           std::span<const double> forced_shifts = {});

inline ClusterResult ClusterOut(const Graph& g, std::span<const VertexId> seeds,
                                double radius, RandomStream& rng,
                                std::span<const double> forced_shifts = {}) {
  return ClusterGraph(g, seeds, radius, Direction::kOut, rng, forced_shifts);
}

inline ClusterResult ClusterIn(const Graph& g, std::span<const VertexId> seeds,
                               double radius, RandomStream& rng,
                               std::span<const double> forced_shifts = {}) {
  return ClusterGraph(g, seeds, radius, Direction::kIn, rng, forced_shifts);
}

// Sequential ball growing: for each seed in `order` that is still present,
// draw x ~ Exp(beta) and carve out its radius-x ball in the remaining graph.
// `forced_shifts`, when nonempty, is indexed by position in `order`.
ClusterResult SequentialCluster(const Graph& g, std::span<const VertexId> order,
                                double radius, Direction direction,
                                RandomStream& rng,
                                std::span<const double> forced_shifts = {});

}  // namespace rtgirth

#endif  // RTGIRTH_CLUSTERING_H_
