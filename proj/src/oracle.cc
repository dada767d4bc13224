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

#include "rtgirth/oracle.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace rtgirth {
namespace {

void RequireAtMost(std::size_t value, std::size_t cap, const char* what) {
  if (value > cap) {
    throw SizeLimitError(std::string(what) + " exceeds the oracle cap of " +
                         std::to_string(cap));
  }
}

bool SameComponent(const Graph& g, Length limit, VertexId u, VertexId v) {
  std::vector<EdgeId> kept;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (g.edge(e).length <= limit) kept.push_back(e);
  }
  Graph sub = EdgeSubgraph(g, kept);
  if (u == v) {
    for (EdgeId e : sub.out_edges(u)) {
      if (sub.edge(e).target == u) return true;
    }
    VertexPartition scc = TarjanScc(sub);
    return scc.clusters[scc.cluster_of[u]].size() >= 2;
  }
  VertexPartition scc = TarjanScc(sub);
  return scc.cluster_of[u] == scc.cluster_of[v];
}

Length UniformLength(Length max_len, RandomStream& rng) {
  return 1 + static_cast<Length>(rng.UniformIndex(static_cast<std::uint64_t>(max_len)));
}

}  // namespace

Length RoundtripMatrix::MaxFinite() const {
  Length best = 0;
  for (Length x : values) {
    if (x != kInfinity) best = std::max(best, x);
  }
  return best;
}

RoundtripMatrix ExactRoundtripApsp(const Graph& g) {
  const VertexId n = g.num_vertices();
  RequireAtMost(n, kApspVertexCap, "vertex count");
  RoundtripMatrix m;
  m.n = n;
  m.values.assign(static_cast<std::size_t>(n) * n, kInfinity);
  for (VertexId u = 0; u < n; ++u) {
    DistanceTree out = ShortestPaths(g, u, Direction::kOut);
    DistanceTree in = ShortestPaths(g, u, Direction::kIn);
    for (VertexId v = 0; v < n; ++v) {
      m.values[static_cast<std::size_t>(u) * n + v] = SaturatingAdd(out.dist[v], in.dist[v]);
    }
  }
  return m;
}

GirthEstimate ExactGirth(const Graph& g) {
  const VertexId n = g.num_vertices();
  RequireAtMost(n, kApspVertexCap, "vertex count");
  GirthEstimate best;
  for (VertexId v = 0; v < n; ++v) {
    DistanceTree out = ShortestPaths(g, v, Direction::kOut);
    for (EdgeId e : g.in_edges(v)) {
      const Length total = SaturatingAdd(out.dist[g.edge(e).source], g.edge(e).length);
      if (total >= best.estimate) continue;
      CycleWitness w;
      w.provenance = Provenance::kBaseCase;
      w.length = total;
      // Walk the tree back from the closing edge's source.
      std::vector<EdgeId> rev{e};
      for (VertexId x = g.edge(e).source; x != v; x = g.edge(out.parent[x]).source) {
        rev.push_back(out.parent[x]);
      }
      w.edges.assign(rev.rbegin(), rev.rend());
      for (EdgeId f : w.edges) w.vertices.push_back(g.edge(f).source);
      best.estimate = total;
      best.witness = std::move(w);
    }
  }
  return best;
}

Length BruteDInfinity(const Graph& g, VertexId u, VertexId v) {
  RequireAtMost(g.num_vertices(), kDInfinityVertexCap, "vertex count");
  std::vector<Length> lengths;
  for (const Edge& e : g.edges()) lengths.push_back(e.length);
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
  if (lengths.empty() || !SameComponent(g, lengths.back(), u, v)) return kInfinity;
  std::size_t lo = 0, hi = lengths.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (SameComponent(g, lengths[mid], u, v)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lengths[lo];
}

std::vector<int> IncrementalSccTimes(
    VertexId num_vertices, std::span<const std::pair<VertexId, VertexId>> sequence) {
  RequireAtMost(sequence.size(), kIncrementalEdgeCap, "edge count");
  const std::size_t m = sequence.size();
  std::vector<int> times(m, 0);
  std::vector<Edge> prefix;
  for (std::size_t i = 0; i < m; ++i) {
    prefix.push_back({sequence[i].first, sequence[i].second, 1});
    VertexPartition scc = TarjanScc(Graph(num_vertices, prefix));
    for (std::size_t p = 0; p <= i; ++p) {
      if (times[p] == 0 && scc.cluster_of[sequence[p].first] == scc.cluster_of[sequence[p].second]) {
        times[p] = static_cast<int>(i) + 1;
      }
    }
  }
  return times;
}

Length EnumerateSecondSimplePath(const Graph& g, VertexId s, VertexId t,
                                 std::span<const EdgeId> shortest) {
  RequireAtMost(g.num_vertices(), kEnumerationVertexCap, "vertex count");
  Length best = kInfinity;
  std::vector<bool> on_path(g.num_vertices(), false);
  std::vector<EdgeId> path;
  std::function<void(VertexId, Length)> dfs = [&](VertexId x, Length so_far) {
    if (so_far >= best) return;  // lengths are nonnegative
    if (x == t) {
      if (!std::equal(path.begin(), path.end(), shortest.begin(), shortest.end())) best = so_far;
      return;
    }
    on_path[x] = true;
    for (EdgeId e : g.out_edges(x)) {
      VertexId y = g.edge(e).target;
      if (on_path[y]) continue;
      path.push_back(e);
      dfs(y, so_far + g.edge(e).length);
      path.pop_back();
    }
    on_path[x] = false;
  };
  dfs(s, 0);
  return best;
}

Graph HardnessInstance(const Graph& g) {
  if (!g.IsUnweighted()) throw std::invalid_argument("hardness instance needs an unweighted graph");
  const VertexId n = g.num_vertices();
  const VertexId copies = std::max<VertexId>(n, 3);
  auto id = [&](VertexId v, VertexId i) { return v * copies + (i - 1); };
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    edges.push_back({id(e.source, copies), id(e.target, 1), 1});
    edges.push_back({id(e.source, 1), id(e.target, 2), 1});
    edges.push_back({id(e.source, 2), id(e.target, 3), 1});
  }
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId i = 3; i < copies; ++i) edges.push_back({id(v, i), id(v, i + 1), 1});
  }
  return Graph(n * copies, std::move(edges));
}

Graph RandomDigraph(VertexId n, EdgeId m, Length max_len, RandomStream& rng) {
  if (n < 0 || m < 0 || max_len < 1) throw std::invalid_argument("invalid generator parameters");
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1);
  if (m > pairs) throw std::invalid_argument("more edges requested than distinct pairs");
  std::set<std::pair<VertexId, VertexId>> used;
  std::vector<Edge> edges;
  while (static_cast<EdgeId>(edges.size()) < m) {
    auto u = static_cast<VertexId>(rng.UniformIndex(n));
    auto v = static_cast<VertexId>(rng.UniformIndex(n));
    if (u == v || !used.insert({u, v}).second) continue;
    edges.push_back({u, v, UniformLength(max_len, rng)});
  }
  return Graph(n, std::move(edges));
}

Graph RandomStronglyConnected(VertexId n, EdgeId extra_m, Length max_len, RandomStream& rng) {
  if (n < 1 || extra_m < 0 || max_len < 1) throw std::invalid_argument("invalid generator parameters");
  const std::int64_t cycle = n >= 2 ? n : 0;
  if (cycle + extra_m > static_cast<std::int64_t>(n) * (n - 1)) {
    throw std::invalid_argument("more edges requested than distinct pairs");
  }
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (VertexId i = n - 1; i > 0; --i) {
    std::swap(order[i], order[rng.UniformIndex(static_cast<std::uint64_t>(i) + 1)]);
  }
  std::set<std::pair<VertexId, VertexId>> used;
  std::vector<Edge> edges;
  for (VertexId i = 0; i < cycle; ++i) {
    VertexId u = order[i], v = order[(i + 1) % n];
    used.insert({u, v});
    edges.push_back({u, v, UniformLength(max_len, rng)});
  }
  for (EdgeId added = 0; added < extra_m;) {
    auto u = static_cast<VertexId>(rng.UniformIndex(n));
    auto v = static_cast<VertexId>(rng.UniformIndex(n));
    if (u == v || !used.insert({u, v}).second) continue;
    edges.push_back({u, v, UniformLength(max_len, rng)});
    ++added;
  }
  return Graph(n, std::move(edges));
}

CoverCheck CheckCover(const Cover& cover, const RoundtripMatrix& apsp) {
  const VertexId n = apsp.n;
  CoverCheck check;
  std::vector<std::vector<int>> balls_of(n);
  for (std::size_t b = 0; b < cover.balls.size(); ++b) {
    const Ball& ball = cover.balls[b];
    if (ball.failure) {
      ++check.failure_balls;
      continue;
    }
    check.max_radius = std::max(check.max_radius, ball.radius);
    for (VertexId v : ball.members) {
      balls_of[v].push_back(static_cast<int>(b));
      if (apsp.at(ball.root, v) > ball.radius) check.members_within_radius = false;
    }
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (apsp.at(u, v) > cover.R) continue;
      ++check.close_pairs;
      std::vector<int> shared;
      std::set_intersection(balls_of[u].begin(), balls_of[u].end(), balls_of[v].begin(),
                            balls_of[v].end(), std::back_inserter(shared));
      if (shared.empty()) ++check.uncovered_pairs;
    }
  }
  return check;
}

StretchCheck CheckStretch(const RoundtripMatrix& full, const RoundtripMatrix& sub) {
  StretchCheck check;
  for (VertexId u = 0; u < full.n; ++u) {
    for (VertexId v = u + 1; v < full.n; ++v) {
      const Length a = full.at(u, v), b = sub.at(u, v);
      if (a == kInfinity) continue;
      if (b == kInfinity || (a == 0 && b > 0)) {
        ++check.lost_pairs;
        continue;
      }
      if (a > 0) check.max_stretch = std::max(check.max_stretch, static_cast<double>(b) / a);
    }
  }
  return check;
}

}  // namespace rtgirth
