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

#include "rtgirth/clustering.h"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>

namespace rtgirth {
namespace {

constexpr std::int64_t kFixedInfinity = std::int64_t{1} << 62;

std::int64_t ToFixed(Length length) {
  if (length >= (kFixedInfinity >> kShiftFractionBits)) return kFixedInfinity;
  return length << kShiftFractionBits;
}

std::int64_t FixedAdd(std::int64_t a, std::int64_t b) {
  return std::min(kFixedInfinity, a + b);
}

void FinishResult(ClusterResult& result, VertexId n) {
  std::sort(result.residual.begin(), result.residual.end());
  result.cluster_of.assign(n, -1);
  for (size_t c = 0; c < result.clusters.size(); ++c) {
    for (VertexId v : result.clusters[c].members) result.cluster_of[v] = static_cast<int>(c);
  }
}

}  // namespace

std::int64_t QuantizeShift(double x) {
  if (!(x < std::ldexp(1.0, 62 - kShiftFractionBits))) return kFixedInfinity;
  return static_cast<std::int64_t>(std::floor(std::ldexp(x, kShiftFractionBits)));
}

double ExponentialFromUniform(double u, double beta) { return -std::log(u) / beta; }

double SampleExponential(RandomStream& rng, double beta) {
  return ExponentialFromUniform(rng.UniformOpenZero(), beta);
}

VertexPartition ClusterResult::ToPartition() const {
  VertexPartition p;
  for (const Cluster& c : clusters) p.clusters.push_back(c.members);
  if (!residual.empty()) p.clusters.push_back(residual);
  p.cluster_of.assign(cluster_of.size(), -1);
  for (size_t c = 0; c < p.clusters.size(); ++c) {
    for (VertexId v : p.clusters[c]) p.cluster_of[v] = static_cast<int>(c);
  }
  return p;
}

ClusterResult ClusterGraph(const Graph& g, std::span<const VertexId> seeds,
                           double radius, Direction direction, RandomStream& rng,
                           std::span<const double> forced_shifts) {
  const VertexId n = g.num_vertices();
  ClusterResult result;
  result.direction = direction;
  result.beta = LogN(n) / radius;
  result.seeds.assign(seeds.begin(), seeds.end());
  if (!forced_shifts.empty() && forced_shifts.size() != seeds.size()) {
    throw std::invalid_argument("forced shifts must match the seed count");
  }
  for (size_t i = 0; i < seeds.size(); ++i) {
    result.shifts.push_back(forced_shifts.empty() ? SampleExponential(rng, result.beta)
                                                  : forced_shifts[i]);
  }

  std::vector<std::int64_t> quantized(seeds.size());
  std::int64_t max_shift = 0;
  for (size_t i = 0; i < seeds.size(); ++i) {
    quantized[i] = QuantizeShift(result.shifts[i]);
    max_shift = std::max(max_shift, quantized[i]);
  }

  // Labels are (key, owner seed vertex); key = offset + fixed-point distance.
  std::vector<std::int64_t> key(n, kFixedInfinity);
  std::vector<VertexId> owner(n, kNoVertex);
  std::vector<int> owner_index(n, -1);
  std::vector<EdgeId> parent(n, kNoEdge);
  using Item = std::tuple<std::int64_t, VertexId, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (size_t i = 0; i < seeds.size(); ++i) {
    VertexId s = seeds[i];
    std::int64_t k = max_shift - quantized[i];
    if (std::tie(k, s) < std::tie(key[s], owner[s])) {
      key[s] = k;
      owner[s] = s;
      owner_index[s] = static_cast<int>(i);
      parent[s] = kNoEdge;
      heap.push({k, s, s});
    }
  }
  const bool out = direction == Direction::kOut;
  while (!heap.empty()) {
    auto [k, s, v] = heap.top();
    heap.pop();
    if (k != key[v] || s != owner[v]) continue;
    for (EdgeId e : out ? g.out_edges(v) : g.in_edges(v)) {
      const Edge& edge = g.edge(e);
      VertexId w = out ? edge.target : edge.source;
      std::int64_t nk = FixedAdd(k, ToFixed(edge.length));
      if (nk > max_shift) continue;
      if (std::tie(nk, s) < std::tie(key[w], owner[w])) {
        key[w] = nk;
        owner[w] = s;
        owner_index[w] = owner_index[v];
        parent[w] = e;
        heap.push({nk, s, w});
      }
    }
  }

  // Group by owning seed, in seed order.
  std::vector<int> cluster_for_seed(seeds.size(), -1);
  std::vector<bool> has_members(seeds.size(), false);
  for (VertexId v = 0; v < n; ++v) {
    if (owner[v] == kNoVertex) {
      result.residual.push_back(v);
    } else {
      has_members[owner_index[v]] = true;
    }
  }
  for (size_t i = 0; i < seeds.size(); ++i) {
    if (!has_members[i]) continue;
    cluster_for_seed[i] = static_cast<int>(result.clusters.size());
    Cluster c;
    c.root = seeds[i];
    c.shift = result.shifts[i];
    result.clusters.push_back(std::move(c));
  }
  for (VertexId v = 0; v < n; ++v) {
    if (owner[v] == kNoVertex) continue;
    int i = owner_index[v];
    Cluster& c = result.clusters[cluster_for_seed[i]];
    c.members.push_back(v);
    std::int64_t offset = max_shift - quantized[i];
    c.tree.dist.push_back((key[v] - offset) >> kShiftFractionBits);
    c.tree.parent.push_back(parent[v]);
  }
  FinishResult(result, n);
  return result;
}

ClusterResult SequentialCluster(const Graph& g, std::span<const VertexId> order,
                                double radius, Direction direction,
                                RandomStream& rng,
                                std::span<const double> forced_shifts) {
  const VertexId n = g.num_vertices();
  ClusterResult result;
  result.direction = direction;
  result.beta = LogN(n) / radius;
  if (!forced_shifts.empty() && forced_shifts.size() != order.size()) {
    throw std::invalid_argument("forced shifts must match the order length");
  }
  std::vector<bool> removed(n, false);
  std::vector<Length> dist(n, kInfinity);
  std::vector<EdgeId> parent(n, kNoEdge);
  const bool out = direction == Direction::kOut;
  using Item = std::pair<Length, VertexId>;
  for (size_t i = 0; i < order.size(); ++i) {
    VertexId s = order[i];
    if (removed[s]) continue;
    double x = forced_shifts.empty() ? SampleExponential(rng, result.beta)
                                     : forced_shifts[i];
    result.seeds.push_back(s);
    result.shifts.push_back(x);
    // Ball of radius x in the remaining graph; d <= x iff d * 2^20 <= Q(x).
    const std::int64_t limit = QuantizeShift(x);
    std::vector<VertexId> touched;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[s] = 0;
    parent[s] = kNoEdge;
    touched.push_back(s);
    heap.push({0, s});
    while (!heap.empty()) {
      auto [d, v] = heap.top();
      heap.pop();
      if (d != dist[v]) continue;
      for (EdgeId e : out ? g.out_edges(v) : g.in_edges(v)) {
        const Edge& edge = g.edge(e);
        VertexId w = out ? edge.target : edge.source;
        if (removed[w]) continue;
        Length nd = SaturatingAdd(d, edge.length);
        if (ToFixed(nd) > limit || nd >= dist[w]) continue;
        if (dist[w] == kInfinity) touched.push_back(w);
        dist[w] = nd;
        parent[w] = e;
        heap.push({nd, w});
      }
    }
    std::sort(touched.begin(), touched.end());
    Cluster c;
    c.root = s;
    c.shift = x;
    for (VertexId v : touched) {
      c.members.push_back(v);
      c.tree.dist.push_back(dist[v]);
      c.tree.parent.push_back(parent[v]);
      removed[v] = true;
      dist[v] = kInfinity;
    }
    result.clusters.push_back(std::move(c));
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!removed[v]) result.residual.push_back(v);
  }
  FinishResult(result, n);
  return result;
}

}  // namespace rtgirth
