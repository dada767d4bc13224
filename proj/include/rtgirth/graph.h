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

// Directed multigraph with nonnegative integer edge lengths, plus the
// shortest-path, ball, SCC and contraction primitives every other module is
// built on.

#ifndef RTGIRTH_GRAPH_H_
#define RTGIRTH_GRAPH_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rtgirth/types.h"

namespace rtgirth {

struct Edge {
  VertexId source = 0;
  VertexId target = 0;
  Length length = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable directed graph. Edges are identified by their index; forward and
// reverse adjacency are stored as CSR arrays over edge ids. A derived graph
// (induced subgraph, contraction, scale graph) remembers for every edge the
// id of the edge it came from in the root input graph.
class Graph {
 public:
  Graph() = default;
  // `origin`, when given, must have one entry per edge. When empty, every
  // edge is its own origin.
  Graph(VertexId num_vertices, std::vector<Edge> edges,
        std::vector<EdgeId> origin = {});

  VertexId num_vertices() const { return num_vertices_; }
  EdgeId num_edges() const { return static_cast<EdgeId>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const EdgeId> out_edges(VertexId v) const {
    return {out_ids_.data() + out_offsets_[v],
            out_ids_.data() + out_offsets_[v + 1]};
  }
  std::span<const EdgeId> in_edges(VertexId v) const {
    return {in_ids_.data() + in_offsets_[v],
            in_ids_.data() + in_offsets_[v + 1]};
  }

  EdgeId origin(EdgeId e) const { return origin_.empty() ? e : origin_[e]; }

  // True iff every edge has length 1.
  bool IsUnweighted() const;

 private:
  VertexId num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<EdgeId> origin_;
  std::vector<EdgeId> out_offsets_{0};
  std::vector<EdgeId> out_ids_;
  std::vector<EdgeId> in_offsets_{0};
  std::vector<EdgeId> in_ids_;
};

// Parses the edge-list format: a header "n m" followed by exactly m lines
// "u v w". Blank lines and lines starting with '#' are ignored. Throws
// ParseError naming the line on malformed input, out-of-range vertices,
// negative lengths, zero-length self-loops and edge-count mismatches.
Graph ParseGraph(std::string_view text);

// Inverse of ParseGraph; edges are written in id order.
std::string FormatGraph(const Graph& g);

// Subgraph induced on `vertices` (distinct ids of g). Local vertex i is
// vertices[i]; edge origins are carried through to g's root graph.
Graph InducedSubgraph(const Graph& g, std::span<const VertexId> vertices);

// Subgraph of g restricted to the given edge ids, on the same vertex set.
Graph EdgeSubgraph(const Graph& g, std::span<const EdgeId> edge_ids);

enum class Direction { kOut, kIn };

// Single-source shortest-path tree. For kOut, dist[v] = d(root, v) and
// parent[v] is the last edge of a shortest root->v path. For kIn,
// dist[v] = d(v, root) and parent[v] is the first edge of a shortest v->root
// path.
struct DistanceTree {
  VertexId root = kNoVertex;
  Direction direction = Direction::kOut;
  std::vector<Length> dist;
  std::vector<EdgeId> parent;

  bool reached(VertexId v) const { return dist[v] != kInfinity; }
  // Edge ids of the tree path between root and v, in traversal order
  // (root->v for kOut, v->root for kIn). Empty when v is the root or
  // unreached.
  std::vector<EdgeId> PathEdges(const Graph& g, VertexId v) const;
};

// Dijkstra from `source`. With a cutoff, vertices farther than the cutoff are
// reported unreached.
DistanceTree ShortestPaths(const Graph& g, VertexId source, Direction direction,
                           std::optional<Length> cutoff = std::nullopt);

// {u : d(v,u) <= r} and {u : d(u,v) <= r}, sorted.
std::vector<VertexId> OutBall(const Graph& g, VertexId v, Length r);
std::vector<VertexId> InBall(const Graph& g, VertexId v, Length r);

// Tree over the members of a ball: dist[i] and parent[i] refer to members[i].
// Parent edge ids are edges of the graph the ball was computed in.
struct BallTree {
  std::vector<Length> dist;
  std::vector<EdgeId> parent;
};

// A cluster in the roundtrip metric, certified by an out-tree and an in-tree
// rooted at `root`. For every member index i,
// out_tree.dist[i] + in_tree.dist[i] <= 2 * radius unless `failure` is set.
struct Ball {
  VertexId root = kNoVertex;
  std::vector<VertexId> members;  // sorted
  BallTree out_tree;
  BallTree in_tree;
  Length radius = 0;
  std::optional<int> scale;
  bool failure = false;

  bool Contains(VertexId v) const;
};

// Ball of roundtrip radius r around v: members are {u : d(v,u) + d(u,v) <= r}.
// Uses exactly one forward and one reverse Dijkstra.
Ball RoundtripBall(const Graph& g, VertexId v, Length r);

// Disjoint clusters covering [0, n). cluster_of[v] indexes `clusters`.
struct VertexPartition {
  std::vector<int> cluster_of;
  std::vector<std::vector<VertexId>> clusters;

  static VertexPartition FromLabels(std::span<const int> labels);
  // Canonical form: clusters sorted internally and by smallest member.
  VertexPartition Canonical() const;
};

// Strongly connected components (iterative Tarjan). Clusters are emitted in
// reverse topological order of the condensation.
VertexPartition TarjanScc(const Graph& g);

struct Contraction {
  Graph graph;
  std::vector<VertexId> vertex_map;  // original vertex -> cluster vertex
};

// One vertex per cluster; inter-cluster edges keep their length and origin,
// intra-cluster edges are dropped.
Contraction Contract(const Graph& g, const VertexPartition& partition);

}  // namespace rtgirth

#endif  // RTGIRTH_GRAPH_H_
