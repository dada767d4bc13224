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

#include "rtgirth/cover.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rtgirth/ball_estimation.h"
#include "rtgirth/clustering.h"

namespace rtgirth {
namespace {

constexpr double kEstimateEpsilon = 1.0 / 8.0;

Length FloorLength(double x) {
  if (!(x < 4.0e18)) return kInfinity;
  return static_cast<Length>(std::floor(x));
}

// Translates a ball computed in `sub` to the vertex ids of the cover's input
// graph (via `to_input`) and origin edge ids.
Ball LiftBall(const Graph& sub, std::span<const VertexId> to_input, Ball ball) {
  ball.root = to_input[ball.root];
  for (VertexId& v : ball.members) v = to_input[v];
  for (EdgeId& e : ball.out_tree.parent) {
    if (e != kNoEdge) e = sub.origin(e);
  }
  for (EdgeId& e : ball.in_tree.parent) {
    if (e != kNoEdge) e = sub.origin(e);
  }
  // to_input is increasing, so member order is preserved.
  return ball;
}

Ball FailureBall(const Graph& sub, std::span<const VertexId> to_input) {
  DistanceTree out = ShortestPaths(sub, 0, Direction::kOut);
  DistanceTree in = ShortestPaths(sub, 0, Direction::kIn);
  Ball ball;
  ball.root = 0;
  ball.failure = true;
  for (VertexId v = 0; v < sub.num_vertices(); ++v) {
    ball.members.push_back(v);
    ball.out_tree.dist.push_back(out.dist[v]);
    ball.out_tree.parent.push_back(out.parent[v]);
    ball.in_tree.dist.push_back(in.dist[v]);
    ball.in_tree.parent.push_back(in.parent[v]);
    ball.radius = std::max(ball.radius, SaturatingAdd(out.dist[v], in.dist[v]));
  }
  return LiftBall(sub, to_input, std::move(ball));
}

class CoverBuilder {
 public:
  CoverBuilder(double r, double c, RandomStream& rng, ProbabilisticCoverStats& stats,
               std::vector<Ball>& out)
      : r_(r), c_(c), rng_(rng), stats_(stats), out_(out) {}

  // `sub` is induced on to_input (increasing ids of the input graph).
  void Run(const Graph& sub, std::span<const VertexId> to_input, int depth) {
    const VertexId n = sub.num_vertices();
    if (n == 0) return;
    stats_.max_depth = std::max(stats_.max_depth, depth);

    const Length cr = FloorLength(c_ * r_);
    ++stats_.estimate_calls;
    BallSizeEstimate est = EstimateBalls(sub, cr, kEstimateEpsilon, rng_);
    const std::int64_t t = est.num_samples;
    std::vector<bool> large_out(n), large_in(n);
    VertexId num_large_out = 0, num_large_in = 0;
    VertexId center = kNoVertex;
    for (VertexId v = 0; v < n; ++v) {
      large_out[v] = 4 * est.out_count[v] >= 3 * t;
      large_in[v] = 4 * est.in_count[v] >= 3 * t;
      num_large_out += large_out[v];
      num_large_in += large_in[v];
      if (center == kNoVertex && large_out[v] && large_in[v]) center = v;
    }

    if (center != kNoVertex) {
      auto out_ball = OutBall(sub, center, cr);
      auto in_ball = InBall(sub, center, cr);
      std::vector<VertexId> both;
      std::set_intersection(out_ball.begin(), out_ball.end(), in_ball.begin(),
                            in_ball.end(), std::back_inserter(both));
      if (4 * static_cast<std::int64_t>(both.size()) < n) {
        Fail(sub, to_input);
        return;
      }
      const double lo = 2 * c_ * r_;
      const double hi = 2 * (c_ + 1) * r_;
      const double radius = lo + (hi - lo) * rng_.Uniform();
      const std::int64_t q = QuantizeShift(radius);
      const Length r_ball =
          q >= (std::int64_t{1} << 62) ? kInfinity : (q >> kShiftFractionBits);
      Ball ball = RoundtripBall(sub, center, r_ball);
      std::vector<bool> in_ball_mask(n, false);
      for (VertexId v : ball.members) in_ball_mask[v] = true;
      out_.push_back(LiftBall(sub, to_input, std::move(ball)));
      std::vector<VertexId> rest_local, rest_input;
      for (VertexId v = 0; v < n; ++v) {
        if (in_ball_mask[v]) continue;
        rest_local.push_back(v);
        rest_input.push_back(to_input[v]);
      }
      if (!rest_local.empty()) {
        Run(InducedSubgraph(sub, rest_local), rest_input, depth + 1);
      }
      return;
    }

    std::vector<VertexId> seeds;
    ClusterResult clusters;
    if (2 * num_large_out <= n) {
      for (VertexId v = 0; v < n; ++v) {
        if (!large_out[v]) seeds.push_back(v);
      }
      clusters = ClusterOut(sub, seeds, r_, rng_);
    } else {
      for (VertexId v = 0; v < n; ++v) {
        if (!large_in[v]) seeds.push_back(v);
      }
      clusters = ClusterIn(sub, seeds, r_, rng_);
    }
    VertexPartition parts = clusters.ToPartition();
    for (const auto& part : parts.clusters) {
      if (8 * static_cast<std::int64_t>(part.size()) > 7 * static_cast<std::int64_t>(n)) {
        Fail(sub, to_input);
        return;
      }
    }
    for (const auto& part : parts.clusters) {
      std::vector<VertexId> part_input;
      part_input.reserve(part.size());
      for (VertexId v : part) part_input.push_back(to_input[v]);
      Run(InducedSubgraph(sub, part), part_input, depth + 1);
    }
  }

 private:
  void Fail(const Graph& sub, std::span<const VertexId> to_input) {
    ++stats_.failures;
    out_.push_back(FailureBall(sub, to_input));
  }

  double r_;
  double c_;
  RandomStream& rng_;
  ProbabilisticCoverStats& stats_;
  std::vector<Ball>& out_;
};

}  // namespace

std::vector<Ball> ProbabilisticCover(const Graph& g, double r, double c,
                                     RandomStream& rng,
                                     ProbabilisticCoverStats* stats) {
  if (!(r > 0)) throw std::invalid_argument("cover radius must be positive");
  if (!(c >= 1)) throw std::invalid_argument("c must be at least 1");
  ProbabilisticCoverStats local;
  std::vector<Ball> balls;
  std::vector<VertexId> identity(g.num_vertices());
  std::iota(identity.begin(), identity.end(), 0);
  CoverBuilder(r, c, rng, stats ? *stats : local, balls).Run(g, identity, 0);
  return balls;
}

int CoverPassCount(VertexId n, double k, double c) {
  const double root = std::ceil(std::pow(static_cast<double>(std::max<VertexId>(n, 1)), 1.0 / k));
  const double log_n = std::ceil(LogN(n));
  return std::max(1, static_cast<int>(std::ceil(c * root * log_n)));
}

Cover FastRoundtripCover(const Graph& g, double k, Length R, double c,
                         const RandomStream& rng) {
  if (!(k >= 1)) throw std::invalid_argument("k must be at least 1");
  if (R <= 0) throw std::invalid_argument("R must be positive");
  Cover cover;
  cover.k = k;
  cover.R = R;
  cover.c = c;
  cover.membership.assign(g.num_vertices(), 0);
  if (g.num_vertices() == 0) return cover;
  cover.r = 6.0 * static_cast<double>(R) * k * LogN(g.num_vertices());
  cover.passes = CoverPassCount(g.num_vertices(), k, c);
  for (int pass = 0; pass < cover.passes; ++pass) {
    RandomStream stream = rng.Substream(static_cast<std::uint64_t>(pass));
    ProbabilisticCoverStats stats;
    for (Ball& ball : ProbabilisticCover(g, cover.r, c, stream, &stats)) {
      for (VertexId v : ball.members) ++cover.membership[v];
      cover.balls.push_back(std::move(ball));
      cover.pass_of.push_back(pass);
    }
    cover.failures += stats.failures;
  }
  return cover;
}

VertexPartition SccViaCover(const Graph& g, Length R, const RandomStream& rng,
                            double c) {
  const VertexId n = g.num_vertices();
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  if (n > 0) {
    const double k = std::max(1.0, LogN(n));
    Cover cover = FastRoundtripCover(g, k, std::max<Length>(R, 1), c, rng);
    for (const Ball& ball : cover.balls) {
      if (ball.failure) continue;
      for (VertexId v : ball.members) {
        VertexId a = find(ball.root), b = find(v);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<int> labels(n);
  for (VertexId v = 0; v < n; ++v) labels[v] = find(v);
  return VertexPartition::FromLabels(labels);
}

}  // namespace rtgirth
