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

// The detour-graph reduction from shortest cycles to second shortest paths.
//
// Given an unweighted graph g and a path P = <v_d, ..., v_0> of d edges,
// G' adds a spine P' = u_0 -> u'_0 -> u_1 -> ... -> u_d -> u'_d of unit
// edges, exits u_i -> v_i and u_i -> x for every edge (v_i, x) of weight
// 4d - 3i, and entries y -> u'_i for every edge (y, v_i) of weight 3i. P' is
// the unique shortest u_0 -> u'_d path (length 2d + 1), and any other path
// leaves the spine at some u_i and rejoins at some u'_j with j >= i, which
// closes a cycle through P(v_j, v_i) in g.

#ifndef RTGIRTH_DETOUR_H_
#define RTGIRTH_DETOUR_H_

#include <span>
#include <vector>

#include "rtgirth/cycle.h"
#include "rtgirth/graph.h"

namespace rtgirth {

enum class DetourEdgeKind { kGraph, kSpine, kExit, kEntry };

struct DetourGraph {
  Graph graph;                       // G'
  int d = 0;
  VertexId base_vertices = 0;        // n; g's vertices keep their ids in G'
  std::vector<VertexId> path;        // P as <v_d, ..., v_0>
  std::vector<EdgeId> path_edges;    // path_edges[k - 1]: g edge v_k -> v_{k-1}
  std::vector<EdgeId> spine;         // the 2d + 1 edges of P' in order
  std::vector<DetourEdgeKind> kind;  // per G' edge
  std::vector<EdgeId> g_edge;        // per G' edge: the g edge it stands for, or -1

  VertexId u(int i) const { return base_vertices + 2 * i; }
  VertexId u_prime(int i) const { return base_vertices + 2 * i + 1; }
  // v_i as a g vertex.
  VertexId v(int i) const { return path[d - i]; }
};

// `path` lists <v_d, ..., v_0>: d + 1 distinct vertices joined by edges of g.
// g must be unweighted. Throws std::invalid_argument otherwise.
DetourGraph BuildDetourGraph(const Graph& g, std::span<const VertexId> path);

struct SecondPath {
  Length length = kInfinity;
  std::vector<EdgeId> edges;  // G' edge ids from u_0 to u'_d
};

// Exact second shortest simple u_0 -> u'_d path: the best shortest path of
// G' minus one spine edge, over all 2d + 1 spine edges.
SecondPath SecondShortestPath(const DetourGraph& dg);

// Shortest simple cycle of g contained in the closed walk
// (v_i, x) . Q'(x, y) . (y, v_j) . P(v_j, v_i). Its length is at most d + L.
CycleWitness ExtractCycle(const Graph& g, const DetourGraph& dg, const SecondPath& second);

}  // namespace rtgirth

#endif  // RTGIRTH_DETOUR_H_
