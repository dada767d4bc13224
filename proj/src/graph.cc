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

#include "rtgirth/graph.h"

#include <algorithm>
#include <charconv>
#include <functional>
#include <queue>
#include <sstream>
#include <utility>

namespace rtgirth {
namespace {

void BuildCsr(VertexId n, std::span<const Edge> edges, bool by_source,
              std::vector<EdgeId>& offsets, std::vector<EdgeId>& ids) {
  offsets.assign(static_cast<size_t>(n) + 1, 0);
  for (const Edge& e : edges) ++offsets[(by_source ? e.source : e.target) + 1];
  for (VertexId v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
  ids.resize(edges.size());
  std::vector<EdgeId> fill(offsets.begin(), offsets.end() - 1);
  for (EdgeId i = 0; i < static_cast<EdgeId>(edges.size()); ++i) {
    VertexId key = by_source ? edges[i].source : edges[i].target;
    ids[fill[key]++] = i;
  }
}

// Splits a line into whitespace-separated integer fields.
bool ParseFields(std::string_view line, std::vector<long long>& out) {
  out.clear();
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j, value);
    if (ec != std::errc() || ptr != line.data() + j) return false;
    out.push_back(value);
    i = j;
  }
  return true;
}

}  // namespace

Graph::Graph(VertexId num_vertices, std::vector<Edge> edges,
             std::vector<EdgeId> origin)
    : num_vertices_(num_vertices), edges_(std::move(edges)), origin_(std::move(origin)) {
  if (num_vertices_ < 0) throw std::invalid_argument("negative vertex count");
  if (!origin_.empty() && origin_.size() != edges_.size()) {
    throw std::invalid_argument("origin map size does not match edge count");
  }
  for (const Edge& e : edges_) {
    if (e.source < 0 || e.source >= num_vertices_ || e.target < 0 ||
        e.target >= num_vertices_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.length < 0) throw std::invalid_argument("negative edge length");
  }
  BuildCsr(num_vertices_, edges_, true, out_offsets_, out_ids_);
  BuildCsr(num_vertices_, edges_, false, in_offsets_, in_ids_);
}

bool Graph::IsUnweighted() const {
  return std::all_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.length == 1; });
}

Graph ParseGraph(std::string_view text) {
  std::vector<long long> fields;
  int line_no = 0;
  bool have_header = false;
  long long n = 0, m = 0;
  std::vector<Edge> edges;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    if (!ParseFields(line, fields)) throw ParseError(line_no, "malformed line");
    if (!have_header) {
      if (fields.size() != 2) throw ParseError(line_no, "expected header \"n m\"");
      n = fields[0];
      m = fields[1];
      if (n < 0 || m < 0 || n > std::numeric_limits<VertexId>::max() ||
          m > std::numeric_limits<EdgeId>::max()) {
        throw ParseError(line_no, "invalid vertex or edge count");
      }
      have_header = true;
    } else {
      if (fields.size() != 3) throw ParseError(line_no, "expected \"u v w\"");
      if (static_cast<long long>(edges.size()) == m) {
        throw ParseError(line_no, "edge count mismatch: more than " +
                                      std::to_string(m) + " edge lines");
      }
      if (fields[0] < 0 || fields[0] >= n || fields[1] < 0 || fields[1] >= n) {
        throw ParseError(line_no, "vertex out of range");
      }
      if (fields[2] < 0) throw ParseError(line_no, "negative weight");
      if (fields[0] == fields[1] && fields[2] == 0) {
        throw ParseError(line_no, "zero-length self-loop");
      }
      edges.push_back({static_cast<VertexId>(fields[0]),
                       static_cast<VertexId>(fields[1]), fields[2]});
    }
    if (end == text.size()) break;
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no, "edge count mismatch: expected " + std::to_string(m) +
                                  ", found " + std::to_string(edges.size()));
  }
  return Graph(static_cast<VertexId>(n), std::move(edges));
}

std::string FormatGraph(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.source << ' ' << e.target << ' ' << e.length << '\n';
  }
  return out.str();
}

Graph InducedSubgraph(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> local(g.num_vertices(), kNoVertex);
  for (size_t i = 0; i < vertices.size(); ++i) {
    local[vertices[i]] = static_cast<VertexId>(i);
  }
  std::vector<Edge> edges;
  std::vector<EdgeId> origin;
  for (VertexId v : vertices) {
    for (EdgeId e : g.out_edges(v)) {
      const Edge& edge = g.edge(e);
      if (local[edge.target] == kNoVertex) continue;
      edges.push_back({local[edge.source], local[edge.target], edge.length});
      origin.push_back(g.origin(e));
    }
  }
  return Graph(static_cast<VertexId>(vertices.size()), std::move(edges),
               std::move(origin));
}

Graph EdgeSubgraph(const Graph& g, std::span<const EdgeId> edge_ids) {
  std::vector<Edge> edges;
  std::vector<EdgeId> origin;
  edges.reserve(edge_ids.size());
  origin.reserve(edge_ids.size());
  for (EdgeId e : edge_ids) {
    edges.push_back(g.edge(e));
    origin.push_back(g.origin(e));
  }
  return Graph(g.num_vertices(), std::move(edges), std::move(origin));
}

std::vector<EdgeId> DistanceTree::PathEdges(const Graph& g, VertexId v) const {
  std::vector<EdgeId> path;
  if (!reached(v)) return path;
  VertexId cur = v;
  while (cur != root) {
    EdgeId e = parent[cur];
    path.push_back(e);
    cur = direction == Direction::kOut ? g.edge(e).source : g.edge(e).target;
  }
  if (direction == Direction::kOut) std::reverse(path.begin(), path.end());
  return path;
}

DistanceTree ShortestPaths(const Graph& g, VertexId source, Direction direction,
                           std::optional<Length> cutoff) {
  const VertexId n = g.num_vertices();
  DistanceTree tree;
  tree.root = source;
  tree.direction = direction;
  tree.dist.assign(n, kInfinity);
  tree.parent.assign(n, kNoEdge);
  const Length limit = cutoff.value_or(kInfinity);
  using Item = std::pair<Length, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  tree.dist[source] = 0;
  heap.push({0, source});
  const bool out = direction == Direction::kOut;
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d != tree.dist[v]) continue;
    for (EdgeId e : out ? g.out_edges(v) : g.in_edges(v)) {
      const Edge& edge = g.edge(e);
      VertexId w = out ? edge.target : edge.source;
      Length nd = SaturatingAdd(d, edge.length);
      if (nd > limit || nd >= tree.dist[w]) continue;
      tree.dist[w] = nd;
      tree.parent[w] = e;
      heap.push({nd, w});
    }
  }
  return tree;
}

namespace {

std::vector<VertexId> BallFromTree(const DistanceTree& tree, Length r) {
  std::vector<VertexId> ball;
  for (VertexId v = 0; v < static_cast<VertexId>(tree.dist.size()); ++v) {
    if (tree.dist[v] <= r) ball.push_back(v);
  }
  return ball;
}

}  // namespace

std::vector<VertexId> OutBall(const Graph& g, VertexId v, Length r) {
  return BallFromTree(ShortestPaths(g, v, Direction::kOut, r), r);
}

std::vector<VertexId> InBall(const Graph& g, VertexId v, Length r) {
  return BallFromTree(ShortestPaths(g, v, Direction::kIn, r), r);
}

bool Ball::Contains(VertexId v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

Ball RoundtripBall(const Graph& g, VertexId v, Length r) {
  DistanceTree out = ShortestPaths(g, v, Direction::kOut, r);
  DistanceTree in = ShortestPaths(g, v, Direction::kIn, r);
  Ball ball;
  ball.root = v;
  ball.radius = r;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    if (!out.reached(u) || !in.reached(u)) continue;
    if (SaturatingAdd(out.dist[u], in.dist[u]) > r) continue;
    ball.members.push_back(u);
    ball.out_tree.dist.push_back(out.dist[u]);
    ball.out_tree.parent.push_back(out.parent[u]);
    ball.in_tree.dist.push_back(in.dist[u]);
    ball.in_tree.parent.push_back(in.parent[u]);
  }
  return ball;
}

VertexPartition VertexPartition::FromLabels(std::span<const int> labels) {
  VertexPartition p;
  p.cluster_of.assign(labels.size(), -1);
  std::vector<int> remap;
  for (size_t v = 0; v < labels.size(); ++v) {
    int label = labels[v];
    if (label >= static_cast<int>(remap.size())) remap.resize(label + 1, -1);
    if (remap[label] < 0) {
      remap[label] = static_cast<int>(p.clusters.size());
      p.clusters.emplace_back();
    }
    p.cluster_of[v] = remap[label];
    p.clusters[remap[label]].push_back(static_cast<VertexId>(v));
  }
  return p;
}

VertexPartition VertexPartition::Canonical() const {
  // FromLabels numbers clusters by first appearance, i.e. by smallest member.
  return FromLabels(cluster_of);
}

VertexPartition TarjanScc(const Graph& g) {
  const VertexId n = g.num_vertices();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<VertexId> stack;
  std::vector<bool> on_stack(n, false);
  // Explicit DFS frames: (vertex, position in its out-edge list).
  std::vector<std::pair<VertexId, size_t>> frames;
  int next_index = 0;
  int next_comp = 0;
  for (VertexId start = 0; start < n; ++start) {
    if (index[start] >= 0) continue;
    frames.push_back({start, 0});
    index[start] = low[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      auto out = g.out_edges(v);
      if (pos < out.size()) {
        VertexId w = g.edge(out[pos++]).target;
        if (index[w] < 0) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      VertexId done = v;
      frames.pop_back();
      if (!frames.empty()) {
        VertexId parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        VertexId w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp[w] = next_comp;
        } while (w != done);
        ++next_comp;
      }
    }
  }
  VertexPartition p;
  p.cluster_of = comp;
  p.clusters.resize(next_comp);
  for (VertexId v = 0; v < n; ++v) p.clusters[comp[v]].push_back(v);
  return p;
}

Contraction Contract(const Graph& g, const VertexPartition& partition) {
  Contraction result;
  result.vertex_map.assign(partition.cluster_of.begin(), partition.cluster_of.end());
  std::vector<Edge> edges;
  std::vector<EdgeId> origin;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    VertexId a = result.vertex_map[edge.source];
    VertexId b = result.vertex_map[edge.target];
    if (a == b) continue;
    edges.push_back({a, b, edge.length});
    origin.push_back(g.origin(e));
  }
  result.graph = Graph(static_cast<VertexId>(partition.clusters.size()),
                       std::move(edges), std::move(origin));
  return result;
}

}  // namespace rtgirth
