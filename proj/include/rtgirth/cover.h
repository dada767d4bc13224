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

// Roundtrip covers.
//
// A (k, R)-roundtrip-cover is a collection of roundtrip-metric balls of radius
// at most kR such that every pair at roundtrip distance <= R shares a ball.
// ProbabilisticCover builds one random partition of V into balls by
// alternating two moves: carve a roundtrip ball around a vertex with large
// in- and out-balls, or cluster from the vertices whose out-ball (in-ball) is
// small and recurse on the clusters. FastRoundtripCover unions enough
// independent partitions to cover every close pair with high probability.
//
// Ball members are vertex ids of the graph passed in; tree parent edges are
// that graph's origin ids, so covers computed on derived graphs point back at
// edges of the root input graph.

#ifndef RTGIRTH_COVER_H_
#define RTGIRTH_COVER_H_

#include <cstdint>
#include <vector>

#include "rtgirth/graph.h"
#include "rtgirth/random.h"

namespace rtgirth {

struct ProbabilisticCoverStats {
  int failures = 0;
  int max_depth = 0;
  int estimate_calls = 0;
};

// One partition of V into balls. r > 0, c >= 1. Failure branches emit the
// whole current vertex set as one ball with `failure` set.
std::vector<Ball> ProbabilisticCover(const Graph& g, double r, double c,
                                     RandomStream& rng,
                                     ProbabilisticCoverStats* stats = nullptr);

struct Cover {
  std::vector<Ball> balls;
  std::vector<int> pass_of;      // pass index per ball
  std::vector<int> membership;   // number of balls containing each vertex
  double k = 1;
  Length R = 1;
  double c = 2;
  double r = 0;                  // radius handed to each pass: 6 R k ln n
  int passes = 0;
  int failures = 0;
};

// Number of independent passes: ceil(c * ceil(n^(1/k)) * ceil(ln n)).
int CoverPassCount(VertexId n, double k, double c);

// Union of CoverPassCount(n, k, c) passes of ProbabilisticCover(g, 6 R k ln n),
// pass i drawing from rng.Substream(i).
Cover FastRoundtripCover(const Graph& g, double k, Length R, double c,
                         const RandomStream& rng);

// Strongly connected components from the co-membership relation of a
// (ln n, R)-cover. R must bound the diameter of every SCC; failure balls are
// ignored.
VertexPartition SccViaCover(const Graph& g, Length R, const RandomStream& rng,
                            double c = 2.0);

}  // namespace rtgirth

#endif  // RTGIRTH_COVER_H_
