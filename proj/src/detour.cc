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

#include "rtgirth/detour.h"

#include <stdexcept>
#include <string>

namespace rtgirth {

DetourGraph BuildDetourGraph(const Graph& g, std::span<const VertexId> path) {
  if (path.size() < 2) throw std::invalid_argument("detour path needs at least one edge");
  if (!g.IsUnweighted()) throw std::invalid_argument("detour graph needs an unweighted graph");
  const VertexId n = g.num_vertices();
  DetourGraph dg;
  dg.d = static_cast<int>(path.size()) - 1;
  dg.base_vertices = n;
  dg.path.assign(path.begin(), path.end());
  const int d = dg.d;

  std::vector<bool> on_path(n, false);
  for (VertexId v : path) {
    if (v < 0 || v >= n) throw std::invalid_argument("detour path vertex out of range");
    if (on_path[v]) throw std::invalid_argument("detour path is not simple");
    on_path[v] = true;
  }
  dg.path_edges.assign(d, kNoEdge);
  for (int k = 1; k <= d; ++k) {
    for (EdgeId e : g.out_edges(dg.v(k))) {
      if (g.edge(e).target == dg.v(k - 1) && dg.path_edges[k - 1] == kNoEdge) {
        dg.path_edges[k - 1] = e;
      }
    }
    if (dg.path_edges[k - 1] == kNoEdge) {
      throw std::invalid_argument("detour path uses a missing edge " + std::to_string(dg.v(k)) +
                                  " -> " + std::to_string(dg.v(k - 1)));
    }
  }

  std::vector<Edge> edges;
  auto add = [&](VertexId s, VertexId t, Length w, DetourEdgeKind kind, EdgeId ge) {
    edges.push_back({s, t, w});
    dg.kind.push_back(kind);
    dg.g_edge.push_back(ge);
    return static_cast<EdgeId>(edges.size()) - 1;
  };
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    add(g.edge(e).source, g.edge(e).target, 1, DetourEdgeKind::kGraph, e);
  }
  for (int i = 0; i <= d; ++i) {
    dg.spine.push_back(add(dg.u(i), dg.u_prime(i), 1, DetourEdgeKind::kSpine, kNoEdge));
    if (i < d) {
      dg.spine.push_back(add(dg.u_prime(i), dg.u(i + 1), 1, DetourEdgeKind::kSpine, kNoEdge));
    }
  }
  for (int i = 0; i <= d; ++i) {
    const Length exit_weight = 4 * d - 3 * i;
    add(dg.u(i), dg.v(i), exit_weight, DetourEdgeKind::kExit, kNoEdge);
    for (EdgeId e : g.out_edges(dg.v(i))) {
      add(dg.u(i), g.edge(e).target, exit_weight, DetourEdgeKind::kExit, e);
    }
  }
  for (int i = 0; i <= d; ++i) {
    for (EdgeId e : g.in_edges(dg.v(i))) {
      add(g.edge(e).source, dg.u_prime(i), 3 * i, DetourEdgeKind::kEntry, e);
    }
  }
  dg.graph = Graph(n + 2 * (d + 1), std::move(edges));

  DistanceTree check = ShortestPaths(dg.graph, dg.u(0), Direction::kOut);
  if (check.dist[dg.u_prime(d)] != 2 * d + 1) {
    throw std::logic_error("detour spine is not the shortest u_0 -> u'_d path");
  }
  return dg;
}

SecondPath SecondShortestPath(const DetourGraph& dg) {
  const Graph& gp = dg.graph;
  const VertexId target = dg.u_prime(dg.d);
  SecondPath best;
  std::vector<EdgeId> keep;
  keep.reserve(gp.num_edges());
  for (EdgeId removed : dg.spine) {
    keep.clear();
    for (EdgeId e = 0; e < gp.num_edges(); ++e) {
      if (e != removed) keep.push_back(e);
    }
    Graph without = EdgeSubgraph(gp, keep);
    DistanceTree tree = ShortestPaths(without, dg.u(0), Direction::kOut);
    if (tree.dist[target] >= best.length) continue;
    best.length = tree.dist[target];
    best.edges.clear();
    for (EdgeId e : tree.PathEdges(without, target)) best.edges.push_back(without.origin(e));
  }
  return best;
}

CycleWitness ExtractCycle(const Graph& g, const DetourGraph& dg, const SecondPath& second) {
  if (second.length == kInfinity) throw std::invalid_argument("no second path to extract from");
  const VertexId n = dg.base_vertices;
  size_t pos = 0;
  while (pos < second.edges.size() && dg.kind[second.edges[pos]] == DetourEdgeKind::kSpine) {
    ++pos;
  }
  if (pos == second.edges.size() || dg.kind[second.edges[pos]] != DetourEdgeKind::kExit) {
    throw std::logic_error("second path does not leave the spine through an exit edge");
  }
  const EdgeId exit = second.edges[pos++];
  const int i = (dg.graph.edge(exit).source - n) / 2;
  std::vector<EdgeId> walk;
  if (dg.g_edge[exit] != kNoEdge) walk.push_back(dg.g_edge[exit]);
  int j = -1;
  for (; pos < second.edges.size(); ++pos) {
    const EdgeId e = second.edges[pos];
    walk.push_back(dg.g_edge[e]);
    if (dg.kind[e] == DetourEdgeKind::kEntry) {
      j = (dg.graph.edge(e).target - n - 1) / 2;
      break;
    }
    if (dg.kind[e] != DetourEdgeKind::kGraph) {
      throw std::logic_error("second path re-enters the spine without an entry edge");
    }
  }
  if (j < i) throw std::logic_error("malformed deviation: entry precedes exit");
  for (int k = j; k > i; --k) walk.push_back(dg.path_edges[k - 1]);
  CycleWitness cycle = ReduceToSimpleCycle(g, walk, Provenance::kDetour);
  if (cycle.length > SaturatingAdd(dg.d, second.length)) {
    throw std::logic_error("extracted cycle exceeds d + L");
  }
  return cycle;
}

}  // namespace rtgirth
