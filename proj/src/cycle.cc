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

#include "rtgirth/cycle.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace rtgirth {

std::string_view ProvenanceName(Provenance p) {
  switch (p) {
    case Provenance::kBall:
      return "ball";
    case Provenance::kSampledBfs:
      return "sampled-BFS";
    case Provenance::kDetour:
      return "detour";
    case Provenance::kBaseCase:
      return "base-case";
  }
  return "unknown";
}

CycleWitness ReduceToSimpleCycle(const Graph& g, std::span<const EdgeId> walk,
                                 Provenance provenance) {
  if (walk.empty()) throw std::invalid_argument("empty walk");
  for (size_t i = 0; i < walk.size(); ++i) {
    const Edge& a = g.edge(walk[i]);
    const Edge& b = g.edge(walk[(i + 1) % walk.size()]);
    if (a.target != b.source) throw std::invalid_argument("edges do not form a closed walk");
  }
  // Stack of edges; position[v] is the stack index of the edge leaving v.
  std::vector<int> position(g.num_vertices(), -1);
  std::vector<EdgeId> stack;
  std::optional<CycleWitness> best;
  for (EdgeId e : walk) {
    const Edge& edge = g.edge(e);
    position[edge.source] = static_cast<int>(stack.size());
    stack.push_back(e);
    const int start = position[edge.target];
    if (start < 0) continue;
    CycleWitness c;
    c.provenance = provenance;
    for (size_t i = start; i < stack.size(); ++i) {
      c.vertices.push_back(g.edge(stack[i]).source);
      c.edges.push_back(stack[i]);
      c.length = SaturatingAdd(c.length, g.edge(stack[i]).length);
    }
    for (size_t i = start; i < stack.size(); ++i) position[g.edge(stack[i]).source] = -1;
    stack.resize(start);
    if (!best || c.length < best->length) best = std::move(c);
  }
  return *best;
}

std::optional<CycleWitness> ShortestCycleThrough(const Graph& g, VertexId v) {
  DistanceTree tree = ShortestPaths(g, v, Direction::kOut);
  EdgeId closing = kNoEdge;
  Length best = kInfinity;
  for (EdgeId e : g.in_edges(v)) {
    const Edge& edge = g.edge(e);
    Length total = SaturatingAdd(tree.dist[edge.source], edge.length);
    if (total < best) {
      best = total;
      closing = e;
    }
  }
  if (closing == kNoEdge) return std::nullopt;
  CycleWitness c;
  c.provenance = Provenance::kSampledBfs;
  c.edges = tree.PathEdges(g, g.edge(closing).source);
  c.edges.push_back(closing);
  for (EdgeId e : c.edges) c.vertices.push_back(g.edge(e).source);
  c.length = best;
  return c;
}

std::string CheckWitness(const Graph& g, const CycleWitness& w) {
  if (w.vertices.empty()) return "witness is empty";
  if (w.vertices.size() != w.edges.size()) return "witness vertex and edge counts differ";
  std::unordered_set<VertexId> seen;
  Length total = 0;
  for (size_t i = 0; i < w.vertices.size(); ++i) {
    const VertexId v = w.vertices[i];
    if (v < 0 || v >= g.num_vertices()) return "witness vertex out of range";
    if (!seen.insert(v).second) return "witness repeats vertex " + std::to_string(v);
    const EdgeId e = w.edges[i];
    if (e < 0 || e >= g.num_edges()) return "witness edge out of range";
    const VertexId next = w.vertices[(i + 1) % w.vertices.size()];
    if (g.edge(e).source != v || g.edge(e).target != next) {
      return "witness edge " + std::to_string(e) + " does not join " + std::to_string(v) +
             " to " + std::to_string(next);
    }
    total = SaturatingAdd(total, g.edge(e).length);
  }
  if (total != w.length) return "witness length does not match its edges";
  return "";
}

}  // namespace rtgirth
