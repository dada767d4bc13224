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

// Length-range collapse machinery.
//
// d_inf(u, v) is the smallest L such that u and v lie on a common cycle whose
// edges are all no longer than L. Sorting the edges by length and recording
// when each one first falls inside a strongly connected component of the
// growing prefix gives a merge forest whose LCA labels are exactly d_inf.
// That forest also tells, for every power of two 2^t, which vertices collapse
// below 2^t / n and which edges survive up to 2^t; those per-scale graphs have
// O(m log n) edges in total.

#ifndef RTGIRTH_COLLAPSE_H_
#define RTGIRTH_COLLAPSE_H_

#include <span>
#include <utility>
#include <vector>

#include "rtgirth/graph.h"

namespace rtgirth {

// For a sequence of edges e_1..e_m over `num_vertices` vertices, returns for
// every position p (1-based values) the smallest i >= p such that e_p lies
// inside a strongly connected component of ({e_1..e_i}). Divide and conquer
// over the position range with contraction. Throws std::invalid_argument
// naming the position if some edge never enters an SCC.
std::vector<int> FindCollapseTimes(
    VertexId num_vertices, std::span<const std::pair<VertexId, VertexId>> sequence);

// Rooted forest over the input vertices (leaves 0..n-1, label 0) and the
// super-vertices created by merges (label = length of the merging edge).
class CollapseForest {
 public:
  CollapseForest() = default;
  explicit CollapseForest(VertexId num_leaves);

  int num_nodes() const { return static_cast<int>(parent_.size()); }
  VertexId num_leaves() const { return num_leaves_; }
  int parent(int node) const { return parent_[node]; }
  Length label(int node) const { return label_[node]; }
  // Smallest leaf id below `node`.
  VertexId representative(int node) const { return representative_[node]; }

  int AddNode(Length label);
  void SetParent(int child, int parent);
  // Builds the ancestor tables; call once after the last AddNode/SetParent.
  void Finalize();

  // Lowest common ancestor, or -1 when u and v are in different trees.
  int Lca(int u, int v) const;
  // Highest ancestor of `node` (possibly itself) whose label satisfies
  // label * scale_den <= scale_num, i.e. label <= scale_num / scale_den.
  int HighestAncestorAtMost(int node, __int128 scale_num, __int128 scale_den) const;

 private:
  VertexId num_leaves_ = 0;
  std::vector<int> parent_;
  std::vector<Length> label_;
  std::vector<int> depth_;
  std::vector<VertexId> representative_;
  std::vector<std::vector<int>> up_;
};

// d_inf via the forest: label of the LCA; kInfinity across trees. For u == v
// the label of u's parent (cheapest cycle through u), or kInfinity when u is
// on no cycle.
Length DInfinityQuery(const CollapseForest& forest, VertexId u, VertexId v);

struct LinfSpanner {
  std::vector<EdgeId> edges;  // sorted edge ids, |edges| <= 2(n - 1)
  CollapseForest forest;
};

// Keeps, for every merge, an out-tree and an in-tree of the newly formed SCC.
// The result preserves d_inf between every pair. Self-loops are ignored.
LinfSpanner BuildLinfSpanner(const Graph& g);

struct CollapsedGraph {
  Graph graph;
  std::vector<VertexId> vertex_map;  // input vertex -> collapsed vertex or -1
};

// Direct implementation of collapsing to [x_low, x_high]: merge SCCs of edges
// <= x_low, drop edges > x_high, drop edges not inside an SCC of edges
// <= x_high, drop isolated vertices. 0 < x_low < x_high.
CollapsedGraph CollapseToInterval(const Graph& g, double x_low, double x_high);

struct ScaleGraph {
  int t = 0;
  Graph graph;                           // edges carry input origin ids
  std::vector<VertexId> vertex_map;      // input vertex -> local id or -1
  std::vector<VertexId> representative;  // local id -> smallest input vertex
  std::vector<int> forest_node;          // local id -> collapse-forest node
};

// Nonempty graphs G^(t) = G collapsed to [2^t / n, 2^t], ascending in t.
// Edge (u, v) belongs to G^(t) iff d_inf(u, v) > 2^t / n and
// max(l(e), d_inf(u, v)) <= 2^t.
std::vector<ScaleGraph> BuildScaleGraphs(const Graph& g, const LinfSpanner& linf);
std::vector<ScaleGraph> BuildScaleGraphs(const Graph& g);

}  // namespace rtgirth

#endif  // RTGIRTH_COLLAPSE_H_
