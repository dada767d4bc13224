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

#include "rtgirth/girth.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "rtgirth/detour.h"

namespace rtgirth {
namespace {

void Consider(GirthEstimate& best, CycleWitness candidate) {
  if (best.witness && best.estimate <= candidate.length) return;
  best.estimate = candidate.length;
  best.witness = std::move(candidate);
}

std::optional<CycleWitness> ShortestSelfLoop(const Graph& g) {
  std::optional<CycleWitness> best;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.source != edge.target) continue;
    if (best && best->length <= edge.length) continue;
    best = CycleWitness{{edge.source}, {e}, edge.length, Provenance::kBaseCase};
  }
  return best;
}

// Maps a cycle of InducedSubgraph(g, vertices) back to g.
CycleWitness LiftCycle(const Graph& sub, std::span<const VertexId> vertices, CycleWitness c) {
  for (VertexId& v : c.vertices) v = vertices[v];
  for (EdgeId& e : c.edges) e = sub.origin(e);
  return c;
}

void RequireUnweighted(const Graph& g) {
  if (!g.IsUnweighted()) throw std::invalid_argument("additive girth needs an unweighted graph");
}

void RequireOpenUnit(double x, const char* name) {
  if (!(x > 0 && x < 1)) throw std::invalid_argument(std::string(name) + " must lie in (0, 1)");
}

}  // namespace

SpannerResult FastRoundtripSpanner(const Graph& g, double k, double c, const RandomStream& rng) {
  if (!(k >= 1)) throw std::invalid_argument("k must be at least 1");
  SpannerResult result;
  result.k = k;
  result.c = c;
  result.seed = rng.seed();
  result.linf = BuildLinfSpanner(g);
  std::vector<EdgeId> edges = result.linf.edges;
  for (ScaleGraph& scale : BuildScaleGraphs(g, result.linf)) {
    const Length radius = scale.t >= 61 ? (Length{1} << 61) : (Length{1} << scale.t);
    ScaleCoverLog log;
    log.t = scale.t;
    log.cover = FastRoundtripCover(scale.graph, k, radius, c,
                                   rng.Substream(static_cast<std::uint64_t>(scale.t)));
    for (Ball& ball : log.cover.balls) {
      ball.scale = scale.t;
      if (ball.failure) continue;
      for (EdgeId e : ball.out_tree.parent) {
        if (e != kNoEdge) edges.push_back(e);
      }
      for (EdgeId e : ball.in_tree.parent) {
        if (e != kNoEdge) edges.push_back(e);
      }
    }
    log.representative = std::move(scale.representative);
    result.scales.push_back(std::move(log));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  result.edges = std::move(edges);
  return result;
}

Graph SpannerSubgraph(const Graph& g, const SpannerResult& spanner) {
  return EdgeSubgraph(g, spanner.edges);
}

GirthEstimate GirthMultiplicative(const Graph& g, double k, double c, const RandomStream& rng) {
  if (g.num_vertices() == 0) return {};
  return GirthMultiplicative(g, FastRoundtripSpanner(g, k, c, rng));
}

GirthEstimate GirthMultiplicative(const Graph& g, const SpannerResult& spanner) {
  GirthEstimate best;
  if (g.num_vertices() == 0) return best;
  if (auto loop = ShortestSelfLoop(g)) Consider(best, *loop);

  const CollapseForest& forest = spanner.linf.forest;
  for (int node = forest.num_leaves(); node < forest.num_nodes(); ++node) {
    if (forest.label(node) != 0) continue;
    if (auto cycle = ShortestCycleThrough(g, forest.representative(node))) {
      cycle->provenance = Provenance::kBaseCase;
      Consider(best, *cycle);
    }
    break;
  }

  const Graph f = SpannerSubgraph(g, spanner);
  std::map<VertexId, std::pair<DistanceTree, DistanceTree>> trees;
  std::set<std::pair<VertexId, VertexId>> queried;
  for (const ScaleCoverLog& log : spanner.scales) {
    for (const Ball& ball : log.cover.balls) {
      if (ball.failure || ball.members.size() < 2) continue;
      size_t pick = ball.members.size();
      Length pick_dist = kInfinity;
      for (size_t i = 0; i < ball.members.size(); ++i) {
        if (ball.members[i] == ball.root) continue;
        Length dist = SaturatingAdd(ball.out_tree.dist[i], ball.in_tree.dist[i]);
        if (pick == ball.members.size() || dist < pick_dist) {
          pick = i;
          pick_dist = dist;
        }
      }
      const VertexId a = log.representative[ball.root];
      const VertexId b = log.representative[ball.members[pick]];
      if (!queried.insert({a, b}).second) continue;
      auto it = trees.find(a);
      if (it == trees.end()) {
        it = trees
                 .emplace(a, std::pair(ShortestPaths(f, a, Direction::kOut),
                                       ShortestPaths(f, a, Direction::kIn)))
                 .first;
      }
      const auto& [out, in] = it->second;
      const Length roundtrip = SaturatingAdd(out.dist[b], in.dist[b]);
      if (roundtrip == kInfinity || (best.witness && roundtrip >= best.estimate)) continue;
      std::vector<EdgeId> walk = out.PathEdges(f, b);
      for (EdgeId e : in.PathEdges(f, b)) walk.push_back(e);
      for (EdgeId& e : walk) e = f.origin(e);
      Consider(best, ReduceToSimpleCycle(g, walk, Provenance::kBall));
    }
  }

  if (!best.witness) {
    VertexPartition scc = TarjanScc(g);
    VertexId lowest = kNoVertex;
    for (const auto& comp : scc.clusters) {
      if (comp.size() < 2) continue;
      VertexId low = *std::min_element(comp.begin(), comp.end());
      if (lowest == kNoVertex || low < lowest) lowest = low;
    }
    if (lowest != kNoVertex) {
      auto cycle = ShortestCycleThrough(g, lowest);
      cycle->provenance = Provenance::kBaseCase;
      Consider(best, *cycle);
    }
  }
  return best;
}

GirthEstimate GirthAdditiveRandomized(const Graph& g, double a, double c,
                                      const RandomStream& rng) {
  RequireUnweighted(g);
  RequireOpenUnit(a, "a");
  const VertexId n = g.num_vertices();
  if (n == 0) return {};
  const double k = std::max(1.0, std::ceil(LogN(n)));
  GirthEstimate best = GirthMultiplicative(g, k, c, rng.Substream(0));

  const double log_n = LogN(n);
  const auto draws = static_cast<std::int64_t>(
      std::ceil(c * std::pow(static_cast<double>(n), 1.0 - a) * log_n * log_n));
  RandomStream sampler = rng.Substream(1);
  std::vector<bool> sampled(n, false);
  for (std::int64_t i = 0; i < draws; ++i) {
    sampled[sampler.UniformIndex(static_cast<std::uint64_t>(n))] = true;
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!sampled[v]) continue;
    if (auto cycle = ShortestCycleThrough(g, v)) Consider(best, *cycle);
  }
  return best;
}

GirthEstimate GirthAdditiveDeterministic(const Graph& g, double a, double epsilon,
                                         DeterministicGirthOptions options) {
  RequireUnweighted(g);
  RequireOpenUnit(a, "a");
  RequireOpenUnit(epsilon, "epsilon");
  GirthEstimate best;
  const VertexId n = g.num_vertices();
  if (n == 0) return best;
  if (auto loop = ShortestSelfLoop(g)) {
    Consider(best, *loop);
    return best;
  }
  const int d = std::max(
      1, static_cast<int>(std::ceil(epsilon * std::pow(static_cast<double>(n), a))));

  std::vector<bool> alive(n, true);
  while (true) {
    std::vector<VertexId> alive_ids;
    for (VertexId v = 0; v < n; ++v) {
      if (alive[v]) alive_ids.push_back(v);
    }
    Graph working = InducedSubgraph(g, alive_ids);
    VertexPartition scc = TarjanScc(working);
    std::vector<VertexId> component;
    for (const auto& comp : scc.clusters) {
      if (comp.size() < 2) continue;
      std::vector<VertexId> ids;
      for (VertexId v : comp) ids.push_back(alive_ids[v]);
      std::sort(ids.begin(), ids.end());
      if (component.empty() || ids.front() < component.front()) component = std::move(ids);
    }
    if (component.empty()) break;

    const Graph sub = InducedSubgraph(g, component);
    DistanceTree out = ShortestPaths(sub, 0, Direction::kOut);
    DistanceTree in = ShortestPaths(sub, 0, Direction::kIn);
    const auto far_out = std::max_element(out.dist.begin(), out.dist.end()) - out.dist.begin();
    const auto far_in = std::max_element(in.dist.begin(), in.dist.end()) - in.dist.begin();
    std::vector<VertexId> q;  // Q as a vertex sequence
    if (out.dist[far_out] >= in.dist[far_in]) {
      q.push_back(0);
      for (EdgeId e : out.PathEdges(sub, static_cast<VertexId>(far_out))) {
        q.push_back(sub.edge(e).target);
      }
    } else {
      for (EdgeId e : in.PathEdges(sub, static_cast<VertexId>(far_in))) {
        q.push_back(sub.edge(e).source);
      }
      q.push_back(0);
    }
    const int q_length = static_cast<int>(q.size()) - 1;

    if (q_length < d) {
      auto cycle = ShortestCycleThrough(sub, 0);
      cycle->provenance = Provenance::kBaseCase;
      Consider(best, LiftCycle(sub, component, *cycle));
      for (VertexId v : component) alive[v] = false;
      continue;
    }
    std::span<const VertexId> p(q.data() + (q_length - d), d + 1);
    DetourGraph dg = BuildDetourGraph(sub, p);
    SecondPath second = SecondShortestPath(dg);
    for (VertexId v : p) alive[component[v]] = false;
    if (second.length == kInfinity) continue;
    Consider(best, LiftCycle(sub, component, ExtractCycle(sub, dg, second)));
    if (options.early_stop && second.length <= 16 * static_cast<Length>(d)) break;
  }
  return best;
}

}  // namespace rtgirth
