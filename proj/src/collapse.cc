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

#include "rtgirth/collapse.h"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rtgirth {
namespace {

struct SequenceEdge {
  int position;  // 1-based
  VertexId u;
  VertexId v;
};

// Relabels endpoints to 0..k-1 in place; returns k.
VertexId Compact(std::vector<SequenceEdge>& edges) {
  std::vector<VertexId> ids;
  ids.reserve(2 * edges.size());
  for (const auto& e : edges) {
    ids.push_back(e.u);
    ids.push_back(e.v);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto local = [&](VertexId x) {
    return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), x) - ids.begin());
  };
  for (auto& e : edges) {
    e.u = local(e.u);
    e.v = local(e.v);
  }
  return static_cast<VertexId>(ids.size());
}

std::vector<int> ComponentsUpTo(const std::vector<SequenceEdge>& edges,
                                VertexId num_vertices, int last_position) {
  std::vector<Edge> present;
  for (const auto& e : edges) {
    if (e.position <= last_position) present.push_back({e.u, e.v, 0});
  }
  return TarjanScc(Graph(num_vertices, std::move(present))).cluster_of;
}

// Every edge in `edges` has its collapse time in [lo, hi]; edges with
// position < lo are already present for the whole range.
void SolveCollapseTimes(std::vector<SequenceEdge> edges, int lo, int hi,
                        std::vector<int>& times) {
  if (edges.empty()) return;
  const VertexId n = Compact(edges);
  if (lo == hi) {
    std::vector<int> comp = ComponentsUpTo(edges, n, hi);
    for (const auto& e : edges) {
      if (comp[e.u] != comp[e.v]) {
        throw std::invalid_argument("edge at position " + std::to_string(e.position) +
                                    " never lies inside a strongly connected component");
      }
      times[e.position - 1] = lo;
    }
    return;
  }
  const int mid = lo + (hi - lo) / 2;
  std::vector<int> comp = ComponentsUpTo(edges, n, mid);
  std::vector<SequenceEdge> left, right;
  for (const auto& e : edges) {
    if (e.position <= mid && comp[e.u] == comp[e.v]) {
      left.push_back(e);
    } else {
      right.push_back({e.position, comp[e.u], comp[e.v]});
    }
  }
  edges.clear();
  edges.shrink_to_fit();
  SolveCollapseTimes(std::move(left), lo, mid, times);
  SolveCollapseTimes(std::move(right), mid + 1, hi, times);
}

}  // namespace

std::vector<int> FindCollapseTimes(
    VertexId num_vertices, std::span<const std::pair<VertexId, VertexId>> sequence) {
  std::vector<SequenceEdge> edges;
  edges.reserve(sequence.size());
  for (size_t i = 0; i < sequence.size(); ++i) {
    auto [u, v] = sequence[i];
    if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices) {
      throw std::invalid_argument("sequence endpoint out of range");
    }
    edges.push_back({static_cast<int>(i) + 1, u, v});
  }
  std::vector<int> times(sequence.size(), 0);
  if (!edges.empty()) {
    SolveCollapseTimes(std::move(edges), 1, static_cast<int>(sequence.size()), times);
  }
  return times;
}

CollapseForest::CollapseForest(VertexId num_leaves)
    : num_leaves_(num_leaves),
      parent_(num_leaves, -1),
      label_(num_leaves, 0),
      representative_(num_leaves) {
  std::iota(representative_.begin(), representative_.end(), 0);
}

int CollapseForest::AddNode(Length label) {
  parent_.push_back(-1);
  label_.push_back(label);
  representative_.push_back(std::numeric_limits<VertexId>::max());
  return num_nodes() - 1;
}

void CollapseForest::SetParent(int child, int parent) {
  parent_[child] = parent;
  representative_[parent] = std::min(representative_[parent], representative_[child]);
}

void CollapseForest::Finalize() {
  const int n = num_nodes();
  // Parents are always created after their children.
  depth_.assign(n, 0);
  for (int v = n - 1; v >= 0; --v) {
    if (parent_[v] >= 0) depth_[v] = depth_[parent_[v]] + 1;
  }
  int levels = 1;
  while ((1 << levels) < std::max(n, 2)) ++levels;
  up_.assign(levels, std::vector<int>(n));
  for (int v = 0; v < n; ++v) up_[0][v] = parent_[v] >= 0 ? parent_[v] : v;
  for (int j = 1; j < levels; ++j) {
    for (int v = 0; v < n; ++v) up_[j][v] = up_[j - 1][up_[j - 1][v]];
  }
}

int CollapseForest::Lca(int u, int v) const {
  if (depth_[u] < depth_[v]) std::swap(u, v);
  const int levels = static_cast<int>(up_.size());
  for (int j = levels - 1; j >= 0; --j) {
    if (depth_[u] - (1 << j) >= depth_[v]) u = up_[j][u];
  }
  if (u == v) return u;
  for (int j = levels - 1; j >= 0; --j) {
    if (up_[j][u] != up_[j][v]) {
      u = up_[j][u];
      v = up_[j][v];
    }
  }
  if (parent_[u] < 0 || parent_[u] != parent_[v]) return -1;
  return parent_[u];
}

int CollapseForest::HighestAncestorAtMost(int node, __int128 scale_num,
                                          __int128 scale_den) const {
  auto fits = [&](int x) { return static_cast<__int128>(label_[x]) * scale_den <= scale_num; };
  if (!fits(node)) return node;
  // Labels do not decrease toward the root, so the fitting ancestors form a
  // prefix of the root path.
  for (int j = static_cast<int>(up_.size()) - 1; j >= 0; --j) {
    int next = up_[j][node];
    if (next != node && fits(next)) node = next;
  }
  while (parent_[node] >= 0 && fits(parent_[node])) node = parent_[node];
  return node;
}

Length DInfinityQuery(const CollapseForest& forest, VertexId u, VertexId v) {
  if (u == v) {
    int p = forest.parent(u);
    return p < 0 ? kInfinity : forest.label(p);
  }
  int a = forest.Lca(u, v);
  return a < 0 ? kInfinity : forest.label(a);
}

LinfSpanner BuildLinfSpanner(const Graph& g) {
  const VertexId n = g.num_vertices();
  LinfSpanner result;
  result.forest = CollapseForest(n);

  const std::vector<int> scc = TarjanScc(g).cluster_of;
  std::vector<EdgeId> order;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.source != edge.target && scc[edge.source] == scc[edge.target]) {
      order.push_back(e);
    }
  }
  // Strict rank order: by length, ties by edge id.
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return std::pair(g.edge(a).length, a) < std::pair(g.edge(b).length, b);
  });
  std::vector<std::pair<VertexId, VertexId>> sequence;
  sequence.reserve(order.size());
  for (EdgeId e : order) sequence.push_back({g.edge(e).source, g.edge(e).target});
  const std::vector<int> times = FindCollapseTimes(n, sequence);

  const int m = static_cast<int>(order.size());
  std::vector<std::vector<EdgeId>> by_time(m + 1);
  for (int p = 0; p < m; ++p) by_time[times[p]].push_back(order[p]);

  // Union-find over input vertices; node_of[root] is the current super node.
  std::vector<VertexId> uf(n);
  std::iota(uf.begin(), uf.end(), 0);
  std::vector<int> node_of(n);
  std::iota(node_of.begin(), node_of.end(), 0);
  auto find = [&](VertexId v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  };

  for (int i = 1; i <= m; ++i) {
    const auto& batch = by_time[i];
    if (batch.empty()) continue;
    // Compact super nodes touched by this batch, sorted by forest node id.
    std::vector<int> nodes;
    for (EdgeId e : batch) {
      nodes.push_back(node_of[find(g.edge(e).source)]);
      nodes.push_back(node_of[find(g.edge(e).target)]);
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    auto local = [&](VertexId v) {
      int node = node_of[find(v)];
      return static_cast<VertexId>(std::lower_bound(nodes.begin(), nodes.end(), node) -
                                   nodes.begin());
    };
    std::vector<Edge> local_edges;
    std::vector<EdgeId> local_origin;
    for (EdgeId e : batch) {
      local_edges.push_back({local(g.edge(e).source), local(g.edge(e).target), 1});
      local_origin.push_back(e);
    }
    const auto k = static_cast<VertexId>(nodes.size());
    Graph contracted(k, std::move(local_edges), std::move(local_origin));
    VertexPartition comps = TarjanScc(contracted);
    const Length label = g.edge(order[i - 1]).length;
    for (const auto& comp : comps.clusters) {
      if (comp.size() < 2) continue;
      const VertexId root = *std::min_element(comp.begin(), comp.end());
      const int comp_id = comps.cluster_of[root];
      // BFS out-tree and in-tree inside the component (unit lengths).
      for (Direction dir : {Direction::kOut, Direction::kIn}) {
        DistanceTree tree = ShortestPaths(contracted, root, dir);
        for (VertexId x : comp) {
          if (x == root) continue;
          EdgeId e = tree.parent[x];
          const Edge& edge = contracted.edge(e);
          if (comps.cluster_of[edge.source] != comp_id ||
              comps.cluster_of[edge.target] != comp_id) {
            throw std::logic_error("collapse tree left its component");
          }
          result.edges.push_back(contracted.origin(e));
        }
      }
    }
    // Merge after all lookups for this batch are done.
    for (const auto& comp : comps.clusters) {
      if (comp.size() < 2) continue;
      const int merged = result.forest.AddNode(label);
      for (VertexId x : comp) result.forest.SetParent(nodes[x], merged);
    }
    std::vector<VertexId> member_of(k, kNoVertex);
    for (EdgeId e = 0; e < contracted.num_edges(); ++e) {
      const Edge& edge = contracted.edge(e);
      member_of[edge.source] = g.edge(contracted.origin(e)).source;
      member_of[edge.target] = g.edge(contracted.origin(e)).target;
    }
    for (EdgeId e = 0; e < contracted.num_edges(); ++e) {
      const Edge& edge = contracted.edge(e);
      if (comps.cluster_of[edge.source] != comps.cluster_of[edge.target]) continue;
      VertexId a = find(member_of[edge.source]), b = find(member_of[edge.target]);
      if (a != b) uf[a] = b;
    }
    for (VertexId x = 0; x < k; ++x) {
      const int parent = result.forest.parent(nodes[x]);
      if (parent >= 0) node_of[find(member_of[x])] = parent;
    }
  }
  result.forest.Finalize();
  std::sort(result.edges.begin(), result.edges.end());
  result.edges.erase(std::unique(result.edges.begin(), result.edges.end()),
                     result.edges.end());
  return result;
}

CollapsedGraph CollapseToInterval(const Graph& g, double x_low, double x_high) {
  if (!(x_low > 0 && x_low < x_high)) {
    throw std::invalid_argument("collapse interval must satisfy 0 < x_low < x_high");
  }
  std::vector<EdgeId> short_edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (static_cast<double>(g.edge(e).length) <= x_low) short_edges.push_back(e);
  }
  VertexPartition merged = TarjanScc(EdgeSubgraph(g, short_edges));
  Contraction contraction = Contract(g, merged);
  const Graph& h = contraction.graph;

  std::vector<EdgeId> kept;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (static_cast<double>(h.edge(e).length) <= x_high) kept.push_back(e);
  }
  Graph bounded = EdgeSubgraph(h, kept);
  std::vector<int> comp = TarjanScc(bounded).cluster_of;

  std::vector<VertexId> local(h.num_vertices(), kNoVertex);
  std::vector<Edge> edges;
  std::vector<EdgeId> origin;
  VertexId next = 0;
  // Local ids follow the contracted vertex order.
  std::vector<bool> used(h.num_vertices(), false);
  for (EdgeId e = 0; e < bounded.num_edges(); ++e) {
    const Edge& edge = bounded.edge(e);
    if (comp[edge.source] != comp[edge.target]) continue;
    used[edge.source] = used[edge.target] = true;
  }
  for (VertexId v = 0; v < h.num_vertices(); ++v) {
    if (used[v]) local[v] = next++;
  }
  for (EdgeId e = 0; e < bounded.num_edges(); ++e) {
    const Edge& edge = bounded.edge(e);
    if (comp[edge.source] != comp[edge.target]) continue;
    edges.push_back({local[edge.source], local[edge.target], edge.length});
    origin.push_back(bounded.origin(e));
  }
  CollapsedGraph result;
  result.graph = Graph(next, std::move(edges), std::move(origin));
  result.vertex_map.resize(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    result.vertex_map[v] = local[contraction.vertex_map[v]];
  }
  return result;
}

std::vector<ScaleGraph> BuildScaleGraphs(const Graph& g, const LinfSpanner& linf) {
  const VertexId n = g.num_vertices();
  const CollapseForest& forest = linf.forest;
  std::map<int, std::vector<EdgeId>> edges_at;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    if (edge.source == edge.target) continue;
    const Length pair = DInfinityQuery(forest, edge.source, edge.target);
    if (pair == kInfinity || pair == 0) continue;
    const Length own = std::max(edge.length, pair);
    int t = 0;
    while ((static_cast<__int128>(1) << t) < own) ++t;
    // 2^t / n < pair  <=>  2^t < n * pair.
    for (; (static_cast<__int128>(1) << t) < static_cast<__int128>(n) * pair; ++t) {
      edges_at[t].push_back(e);
    }
  }

  std::vector<ScaleGraph> scales;
  for (auto& [t, ids] : edges_at) {
    const __int128 top = static_cast<__int128>(1) << t;
    auto super = [&](VertexId v) { return forest.HighestAncestorAtMost(v, top, n); };
    std::vector<int> nodes;
    for (EdgeId e : ids) {
      nodes.push_back(super(g.edge(e).source));
      nodes.push_back(super(g.edge(e).target));
    }
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    auto local = [&](int node) {
      return static_cast<VertexId>(std::lower_bound(nodes.begin(), nodes.end(), node) -
                                   nodes.begin());
    };
    ScaleGraph scale;
    scale.t = t;
    std::vector<Edge> edges;
    std::vector<EdgeId> origin;
    for (EdgeId e : ids) {
      const Edge& edge = g.edge(e);
      edges.push_back({local(super(edge.source)), local(super(edge.target)), edge.length});
      origin.push_back(g.origin(e));
    }
    scale.graph = Graph(static_cast<VertexId>(nodes.size()), std::move(edges), std::move(origin));
    scale.forest_node = nodes;
    for (int node : nodes) scale.representative.push_back(forest.representative(node));
    scale.vertex_map.assign(n, kNoVertex);
    for (VertexId v = 0; v < n; ++v) {
      int node = super(v);
      auto it = std::lower_bound(nodes.begin(), nodes.end(), node);
      if (it != nodes.end() && *it == node) scale.vertex_map[v] = static_cast<VertexId>(it - nodes.begin());
    }
    scales.push_back(std::move(scale));
  }
  return scales;
}

std::vector<ScaleGraph> BuildScaleGraphs(const Graph& g) {
  return BuildScaleGraphs(g, BuildLinfSpanner(g));
}

}  // namespace rtgirth
