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

#include "rtgirth/ball_estimation.h"

#include <cmath>
#include <stdexcept>

namespace rtgirth {

std::int64_t BallSampleCount(VertexId n, double epsilon, double sample_constant) {
  double t = std::ceil(sample_constant * LogN(n) / (epsilon * epsilon));
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(t));
}

BallSizeEstimate EstimateBalls(const Graph& g, Length r, double epsilon,
                               RandomStream& rng, double sample_constant) {
  if (!(epsilon > 0 && epsilon < 1)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (r < 0) throw std::invalid_argument("radius must be nonnegative");
  const VertexId n = g.num_vertices();
  BallSizeEstimate est;
  est.radius = r;
  est.epsilon = epsilon;
  est.out_count.assign(n, 0);
  est.in_count.assign(n, 0);
  est.out_fraction.assign(n, 0.0);
  est.in_fraction.assign(n, 0.0);
  if (n == 0) return est;
  est.num_samples = BallSampleCount(n, epsilon, sample_constant);
  std::vector<std::int64_t> multiplicity(n, 0);
  est.samples.reserve(est.num_samples);
  for (std::int64_t i = 0; i < est.num_samples; ++i) {
    auto v = static_cast<VertexId>(rng.UniformIndex(static_cast<std::uint64_t>(n)));
    est.samples.push_back(v);
    ++multiplicity[v];
  }
  for (VertexId v = 0; v < n; ++v) {
    if (multiplicity[v] == 0) continue;
    // d(u, v) <= r: distances into v.
    DistanceTree to_sample = ShortestPaths(g, v, Direction::kIn, r);
    DistanceTree from_sample = ShortestPaths(g, v, Direction::kOut, r);
    for (VertexId u = 0; u < n; ++u) {
      if (to_sample.reached(u)) est.out_count[u] += multiplicity[v];
      if (from_sample.reached(u)) est.in_count[u] += multiplicity[v];
    }
  }
  const double t = static_cast<double>(est.num_samples);
  for (VertexId u = 0; u < n; ++u) {
    est.out_fraction[u] = static_cast<double>(est.out_count[u]) / t;
    est.in_fraction[u] = static_cast<double>(est.in_count[u]) / t;
  }
  return est;
}

}  // namespace rtgirth
