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

#ifndef RTGIRTH_BALL_ESTIMATION_H_
#define RTGIRTH_BALL_ESTIMATION_H_

#include <cstdint>
#include <vector>

#include "rtgirth/graph.h"
#include "rtgirth/random.h"

namespace rtgirth {

// Sampled estimate of |outball(u, r)| / n and |inball(u, r)| / n for every u.
// The integer counts are kept alongside the fractions so that threshold tests
// (e.g. "fraction >= 3/4") can be done exactly.
struct BallSizeEstimate {
  Length radius = 0;
  double epsilon = 0;
  std::int64_t num_samples = 0;          // t
  std::vector<VertexId> samples;         // drawn with replacement
  std::vector<std::int64_t> out_count;   // #samples v_i with d(u, v_i) <= r
  std::vector<std::int64_t> in_count;    // #samples v_i with d(v_i, u) <= r
  std::vector<double> out_fraction;
  std::vector<double> in_fraction;
};

// t = ceil(sample_constant * ln(n) / epsilon^2), at least 1.
std::int64_t BallSampleCount(VertexId n, double epsilon, double sample_constant = 20.0);

// Draws t uniform samples with replacement and runs one Dijkstra per distinct
// sample in each direction (duplicates are weighted by multiplicity, which
// gives exactly the same fractions as one run per draw).
BallSizeEstimate EstimateBalls(const Graph& g, Length r, double epsilon,
                               RandomStream& rng, double sample_constant = 20.0);

}  // namespace rtgirth

#endif  // RTGIRTH_BALL_ESTIMATION_H_
