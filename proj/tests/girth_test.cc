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

#include <gtest/gtest.h>

#include <cmath>

#include "rtgirth/cycle.h"
#include "rtgirth/detour.h"
#include "rtgirth/girth.h"
#include "rtgirth/oracle.h"
#include "test_graphs.h"

namespace rtgirth {
namespace {

using testing::DirectedCycle;
using testing::Make;
using testing::Triangle;

// Two triangles sharing vertex 0: 0-1-2 with unit lengths, 0-3-4 with 2s.
Graph FigureEight() {
  return Make(5, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {0, 3, 2}, {3, 4, 2}, {4, 0, 2}});
}

// Disjoint 3-cycle (0..2) and 100-cycle (3..102), unit lengths.
Graph ThreeAndHundred() {
  std::vector<Edge> edges = {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}};
  for (VertexId i = 0; i < 100; ++i) edges.push_back({3 + i, 3 + (i + 1) % 100, 1});
  return Graph(103, std::move(edges));
}

void ExpectCertified(const Graph& g, const GirthEstimate& est) {
  if (est.estimate == kInfinity) {
    EXPECT_FALSE(est.witness.has_value());
    return;
  }
  ASSERT_TRUE(est.witness.has_value());
  EXPECT_EQ(CheckWitness(g, *est.witness), "");
  EXPECT_EQ(est.witness->length, est.estimate);
}

TEST(CycleTest, ShortestCycleThrough) {
  auto tri = ShortestCycleThrough(Triangle(), 0);
  ASSERT_TRUE(tri.has_value());
  EXPECT_EQ(tri->length, 3);
  EXPECT_EQ(tri->vertices, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_FALSE(ShortestCycleThrough(testing::PathGraph(4), 2).has_value());
  EXPECT_EQ(ShortestCycleThrough(FigureEight(), 0)->length, 3);
  EXPECT_EQ(ShortestCycleThrough(FigureEight(), 3)->length, 6);
  auto loop = ShortestCycleThrough(Make(2, {{1, 1, 4}}), 1);
  ASSERT_TRUE(loop.has_value());
  EXPECT_EQ(loop->length, 4);
  EXPECT_EQ(loop->vertices, (std::vector<VertexId>{1}));
}

TEST(CycleTest, ShortestCycleThroughMatchesOracle) {
  RandomStream gen(8);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = RandomDigraph(25, 50, 7, gen);
    Length best = kInfinity;
    for (VertexId v = 0; v < 25; ++v) {
      auto c = ShortestCycleThrough(g, v);
      if (!c) continue;
      EXPECT_EQ(CheckWitness(g, *c), "");
      best = std::min(best, c->length);
    }
    EXPECT_EQ(best, ExactGirth(g).estimate);
  }
}

TEST(CycleTest, ReduceToSimpleCycle) {
  Graph g = FigureEight();
  // 0 -> 3 -> 4 -> 0 -> 1 -> 2 -> 0.
  std::vector<EdgeId> walk = {3, 4, 5, 0, 1, 2};
  CycleWitness w = ReduceToSimpleCycle(g, walk, Provenance::kBall);
  EXPECT_EQ(w.length, 3);
  EXPECT_EQ(CheckWitness(g, w), "");
  EXPECT_EQ(w.provenance, Provenance::kBall);
  std::vector<EdgeId> open = {0, 1};
  EXPECT_THROW(ReduceToSimpleCycle(g, open, Provenance::kBall), std::invalid_argument);
  std::vector<EdgeId> broken = {0, 2, 1};
  EXPECT_THROW(ReduceToSimpleCycle(g, broken, Provenance::kBall), std::invalid_argument);
}

TEST(CycleTest, CheckWitnessRejectsCorruption) {
  Graph g = Triangle();
  CycleWitness w = *ShortestCycleThrough(g, 0);
  CycleWitness bad_length = w;
  bad_length.length = 2;
  EXPECT_NE(CheckWitness(g, bad_length), "");
  CycleWitness bad_vertex = w;
  bad_vertex.vertices[1] = 2;
  EXPECT_NE(CheckWitness(g, bad_vertex), "");
  CycleWitness empty;
  EXPECT_NE(CheckWitness(g, empty), "");
  EXPECT_EQ(ProvenanceName(Provenance::kSampledBfs), "sampled-BFS");
  EXPECT_EQ(ProvenanceName(Provenance::kDetour), "detour");
}

TEST(DetourGraphTest, TwoCycle) {
  Graph g = Make(2, {{0, 1, 1}, {1, 0, 1}});
  // P = <v_1, v_0> = <0, 1>.
  std::vector<VertexId> path = {0, 1};
  DetourGraph dg = BuildDetourGraph(g, path);
  EXPECT_EQ(dg.d, 1);
  EXPECT_EQ(dg.graph.num_vertices(), 6);
  ASSERT_EQ(dg.spine.size(), 3u);
  EXPECT_EQ(dg.graph.edge(dg.spine[0]).source, dg.u(0));
  EXPECT_EQ(dg.graph.edge(dg.spine[2]).target, dg.u_prime(1));
  for (EdgeId e = 0; e < dg.graph.num_edges(); ++e) {
    const Edge& edge = dg.graph.edge(e);
    if (dg.kind[e] == DetourEdgeKind::kExit) {
      EXPECT_EQ(edge.length, edge.source == dg.u(0) ? 4 : 1);
    } else if (dg.kind[e] == DetourEdgeKind::kEntry) {
      EXPECT_EQ(edge.length, edge.target == dg.u_prime(0) ? 0 : 3);
    } else {
      EXPECT_EQ(edge.length, 1);
    }
  }
  EXPECT_EQ(ShortestPaths(dg.graph, dg.u(0), Direction::kOut).dist[dg.u_prime(1)], 3);

  // u_0 -> v_1 (4), v_1 -> u'_0 (0), u'_0 -> u_1 -> u'_1 (2).
  SecondPath second = SecondShortestPath(dg);
  EXPECT_EQ(second.length, 6);
  EXPECT_EQ(EnumerateSecondSimplePath(dg.graph, dg.u(0), dg.u_prime(1), dg.spine), 6);
  CycleWitness cycle = ExtractCycle(g, dg, second);
  EXPECT_EQ(cycle.length, 2);
  EXPECT_EQ(CheckWitness(g, cycle), "");
  EXPECT_EQ(cycle.provenance, Provenance::kDetour);
}

TEST(DetourGraphTest, TriangleRecoversTriangle) {
  std::vector<VertexId> path = {1, 2};
  DetourGraph dg = BuildDetourGraph(Triangle(), path);
  SecondPath second = SecondShortestPath(dg);
  ASSERT_NE(second.length, kInfinity);
  EXPECT_EQ(second.length, EnumerateSecondSimplePath(dg.graph, dg.u(0), dg.u_prime(1), dg.spine));
  CycleWitness cycle = ExtractCycle(Triangle(), dg, second);
  EXPECT_EQ(cycle.length, 3);
  EXPECT_LE(cycle.length, dg.d + second.length);
}

TEST(DetourGraphTest, DetourFreePath) {
  Graph g = testing::PathGraph(4);
  std::vector<VertexId> path = {1, 2, 3};
  DetourGraph dg = BuildDetourGraph(g, path);
  EXPECT_EQ(SecondShortestPath(dg).length, kInfinity);
  EXPECT_EQ(EnumerateSecondSimplePath(dg.graph, dg.u(0), dg.u_prime(2), dg.spine), kInfinity);
}

TEST(DetourGraphTest, RejectsBadPaths) {
  Graph tri = Triangle();
  std::vector<VertexId> one = {0};
  EXPECT_THROW(BuildDetourGraph(tri, one), std::invalid_argument);
  std::vector<VertexId> missing = {1, 0};
  EXPECT_THROW(BuildDetourGraph(tri, missing), std::invalid_argument);
  std::vector<VertexId> repeat = {0, 1, 2, 0};
  EXPECT_THROW(BuildDetourGraph(tri, repeat), std::invalid_argument);
  std::vector<VertexId> out_of_range = {0, 5};
  EXPECT_THROW(BuildDetourGraph(tri, out_of_range), std::invalid_argument);
  std::vector<VertexId> ok = {0, 1};
  EXPECT_THROW(BuildDetourGraph(Make(3, {{0, 1, 2}}), ok), std::invalid_argument);
}

// A random simple path of up to max_edges edges, or fewer than 2 vertices
// when the walk gets stuck immediately.
std::vector<VertexId> RandomSimplePath(const Graph& g, int max_edges, RandomStream& rng) {
  std::vector<VertexId> path = {static_cast<VertexId>(rng.UniformIndex(g.num_vertices()))};
  std::vector<bool> used(g.num_vertices(), false);
  used[path[0]] = true;
  while (static_cast<int>(path.size()) <= max_edges) {
    std::vector<VertexId> next;
    for (EdgeId e : g.out_edges(path.back())) {
      if (!used[g.edge(e).target]) next.push_back(g.edge(e).target);
    }
    if (next.empty()) break;
    VertexId x = next[rng.UniformIndex(next.size())];
    used[x] = true;
    path.push_back(x);
  }
  return path;
}

TEST(DetourGraphTest, MatchesEnumerationAndLengthBound) {
  RandomStream gen(21);
  int instances = 0;
  while (instances < 100) {
    const VertexId n = 3 + static_cast<VertexId>(gen.UniformIndex(10));
    Graph g = RandomDigraph(n, std::min<EdgeId>(n * (n - 1), 2 * n), 1, gen);
    const int max_d = std::min<int>(n - 1, (22 - n) / 2 - 1);
    if (max_d < 1) continue;
    std::vector<VertexId> path = RandomSimplePath(g, 1 + static_cast<int>(gen.UniformIndex(max_d)), gen);
    if (path.size() < 2) continue;
    DetourGraph dg = BuildDetourGraph(g, path);
    ASSERT_LE(dg.graph.num_vertices(), kEnumerationVertexCap);
    ++instances;
    const int d = dg.d;
    EXPECT_EQ(ShortestPaths(dg.graph, dg.u(0), Direction::kOut).dist[dg.u_prime(d)], 2 * d + 1);
    SecondPath second = SecondShortestPath(dg);
    ASSERT_EQ(second.length, EnumerateSecondSimplePath(dg.graph, dg.u(0), dg.u_prime(d), dg.spine))
        << "instance " << instances;
    // Shortest cycle meeting P.
    Length through_p = kInfinity;
    for (VertexId v : path) {
      if (auto c = ShortestCycleThrough(g, v)) through_p = std::min(through_p, c->length);
    }
    if (through_p == kInfinity) {
      EXPECT_EQ(second.length, kInfinity);
      continue;
    }
    ASSERT_NE(second.length, kInfinity);
    EXPECT_LE(second.length, 6 * d - 2 + through_p);
    CycleWitness cycle = ExtractCycle(g, dg, second);
    EXPECT_EQ(CheckWitness(g, cycle), "");
    EXPECT_LE(cycle.length, d + second.length);
    EXPECT_LE(cycle.length, through_p);
  }
}

TEST(SpannerTest, Examples) {
  SpannerResult tri = FastRoundtripSpanner(Triangle(), 1, 2, RandomStream(1));
  EXPECT_EQ(tri.edges, (std::vector<EdgeId>{0, 1, 2}));
  RoundtripMatrix full = ExactRoundtripApsp(Triangle());
  RoundtripMatrix sub = ExactRoundtripApsp(SpannerSubgraph(Triangle(), tri));
  EXPECT_DOUBLE_EQ(CheckStretch(full, sub).max_stretch, 1.0);

  SpannerResult dag = FastRoundtripSpanner(testing::PathGraph(6), 1, 2, RandomStream(1));
  EXPECT_TRUE(dag.edges.empty());
  EXPECT_TRUE(dag.scales.empty());
}

TEST(SpannerTest, StretchAndSizeOnRandomGraphs) {
  const double k = 2, c = 2;
  const VertexId n = 50;
  const double ln = std::log(static_cast<double>(n));
  RandomStream gen(50);
  Graph g = RandomStronglyConnected(n, 200, 8, gen);
  RoundtripMatrix full = ExactRoundtripApsp(g);
  const GirthEstimate exact = ExactGirth(g);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SpannerResult s = FastRoundtripSpanner(g, k, c, RandomStream(seed));
    EXPECT_TRUE(std::includes(s.edges.begin(), s.edges.end(), s.linf.edges.begin(), s.linf.edges.end()));
    EXPECT_LE(static_cast<double>(s.edges.size()), 8 * std::pow(n, 1.5) * ln * ln);
    StretchCheck check = CheckStretch(full, ExactRoundtripApsp(SpannerSubgraph(g, s)));
    EXPECT_EQ(check.lost_pairs, 0);
    EXPECT_LE(check.max_stretch, 24 * (c + 1) * k * ln);

    GirthEstimate est = GirthMultiplicative(g, s);
    ExpectCertified(g, est);
    EXPECT_GE(est.estimate, exact.estimate);
    EXPECT_LE(est.estimate, (12 * (c + 1) * k * ln + 2) * exact.estimate);
  }
}

TEST(GirthMultiplicativeTest, Examples) {
  GirthEstimate tri = GirthMultiplicative(Triangle(), 1, 2, RandomStream(7));
  EXPECT_EQ(tri.estimate, 3);
  ASSERT_TRUE(tri.witness.has_value());
  EXPECT_EQ(tri.witness->vertices, (std::vector<VertexId>{0, 1, 2}));

  GirthEstimate dag = GirthMultiplicative(testing::PathGraph(5), 1, 2, RandomStream(7));
  EXPECT_EQ(dag.estimate, kInfinity);
  EXPECT_FALSE(dag.witness.has_value());

  GirthEstimate loop = GirthMultiplicative(Make(3, {{0, 1, 1}, {1, 0, 1}, {2, 2, 1}}), 1, 2, RandomStream(7));
  EXPECT_EQ(loop.estimate, 1);
}

TEST(GirthMultiplicativeTest, ThreeAndHundred) {
  Graph g = ThreeAndHundred();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GirthEstimate est = GirthMultiplicative(g, 1, 2, RandomStream(seed));
    EXPECT_EQ(est.estimate, 3);
    ExpectCertified(g, est);
  }
}

TEST(GirthMultiplicativeTest, ZeroLengthCycle) {
  Graph g = Make(3, {{0, 1, 0}, {1, 0, 0}, {1, 2, 5}, {2, 1, 5}});
  GirthEstimate est = GirthMultiplicative(g, 1, 2, RandomStream(1));
  EXPECT_EQ(est.estimate, 0);
  ExpectCertified(g, est);
}

TEST(GirthMultiplicativeTest, CertifiedOnRandomGraphs) {
  RandomStream gen(33);
  for (int trial = 0; trial < 30; ++trial) {
    const VertexId n = 2 + static_cast<VertexId>(gen.UniformIndex(30));
    Graph g = RandomDigraph(n, std::min<EdgeId>(n * (n - 1), 2 * n), 20, gen);
    GirthEstimate est = GirthMultiplicative(g, 2, 2, RandomStream(trial));
    ExpectCertified(g, est);
    const Length exact = ExactGirth(g).estimate;
    EXPECT_GE(est.estimate, exact);
    EXPECT_EQ(est.estimate == kInfinity, exact == kInfinity);
  }
}

TEST(GirthAdditiveRandomizedTest, Examples) {
  GirthEstimate cycle = GirthAdditiveRandomized(DirectedCycle(100), 0.5, 2, RandomStream(1));
  EXPECT_EQ(cycle.estimate, 100);
  ExpectCertified(DirectedCycle(100), cycle);

  std::vector<Edge> edges = {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}};
  for (VertexId i = 0; i < 40; ++i) edges.push_back({3 + i, 3 + (i + 1) % 40, 1});
  Graph mixed(43, std::move(edges));
  GirthEstimate est = GirthAdditiveRandomized(mixed, 0.5, 2, RandomStream(1));
  EXPECT_EQ(est.estimate, 3);

  EXPECT_EQ(GirthAdditiveRandomized(testing::PathGraph(4), 0.5, 2, RandomStream(1)).estimate, kInfinity);
  EXPECT_THROW(GirthAdditiveRandomized(Make(2, {{0, 1, 2}, {1, 0, 1}}), 0.5, 2, RandomStream(1)),
               std::invalid_argument);
  EXPECT_THROW(GirthAdditiveRandomized(Triangle(), 1.0, 2, RandomStream(1)), std::invalid_argument);
}

TEST(GirthAdditiveRandomizedTest, BoundsOnCorpusSample) {
  const double root = 8.0;
  for (int i = 0; i < 6; ++i) {
    Graph g = testing::UnweightedCorpusGraph(i);
    const Length exact = ExactGirth(g).estimate;
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      GirthEstimate est = GirthAdditiveRandomized(g, 0.5, 2, RandomStream(seed));
      ExpectCertified(g, est);
      EXPECT_GE(est.estimate, exact);
      if (exact == kInfinity) continue;
      EXPECT_LE(est.estimate, exact + 8 * root);
      if (exact >= root / std::log(64.0)) {
        EXPECT_EQ(est.estimate, exact);
      }
    }
  }
}

TEST(GirthAdditiveDeterministicTest, Examples) {
  GirthEstimate tri = GirthAdditiveDeterministic(Triangle(), 0.5, 0.5);
  EXPECT_EQ(tri.estimate, 3);
  ExpectCertified(Triangle(), tri);

  Graph c100 = DirectedCycle(100);
  GirthEstimate cycle = GirthAdditiveDeterministic(c100, 0.5, 0.25);
  EXPECT_GE(cycle.estimate, 100);
  EXPECT_LE(cycle.estimate, 150);
  ExpectCertified(c100, cycle);

  EXPECT_EQ(GirthAdditiveDeterministic(testing::PathGraph(5), 0.5, 0.25).estimate, kInfinity);
  GirthEstimate loop = GirthAdditiveDeterministic(Make(3, {{0, 1, 1}, {1, 0, 1}, {2, 2, 1}}), 0.5, 0.25);
  EXPECT_EQ(loop.estimate, 1);

  EXPECT_THROW(GirthAdditiveDeterministic(Triangle(), 0.5, 0.0), std::invalid_argument);
  EXPECT_THROW(GirthAdditiveDeterministic(Triangle(), 0.0, 0.5), std::invalid_argument);
  EXPECT_THROW(GirthAdditiveDeterministic(Make(2, {{0, 1, 3}, {1, 0, 1}}), 0.5, 0.5),
               std::invalid_argument);
}

TEST(GirthAdditiveDeterministicTest, TwoCyclesPicksShorter) {
  GirthEstimate est = GirthAdditiveDeterministic(ThreeAndHundred(), 0.5, 0.25);
  EXPECT_EQ(est.estimate, 3);
  ExpectCertified(ThreeAndHundred(), est);
}

TEST(GirthAdditiveDeterministicTest, BoundsAndDeterminism) {
  const double eps = 0.25;
  for (int i = 0; i < 10; ++i) {
    Graph g = testing::UnweightedCorpusGraph(i);
    const Length exact = ExactGirth(g).estimate;
    GirthEstimate est = GirthAdditiveDeterministic(g, 0.5, eps);
    ExpectCertified(g, est);
    EXPECT_GE(est.estimate, exact);
    if (exact == kInfinity) continue;
    if (exact <= 8) {
      EXPECT_LE(est.estimate, exact + 17 * static_cast<Length>(std::ceil(eps * 8)));
    } else {
      EXPECT_LE(static_cast<double>(est.estimate), (1 + 2 * eps) * static_cast<double>(exact));
    }
    GirthEstimate again = GirthAdditiveDeterministic(g, 0.5, eps);
    EXPECT_EQ(again.estimate, est.estimate);
    EXPECT_EQ(again.witness->vertices, est.witness->vertices);
  }
}

TEST(GirthAdditiveDeterministicTest, EarlyStopStaysSound) {
  DeterministicGirthOptions opts;
  opts.early_stop = true;
  for (int i = 0; i < 6; ++i) {
    Graph g = testing::UnweightedCorpusGraph(i);
    GirthEstimate est = GirthAdditiveDeterministic(g, 0.5, 0.25, opts);
    ExpectCertified(g, est);
    EXPECT_GE(est.estimate, ExactGirth(g).estimate);
  }
}

TEST(GirthAdditiveDeterministicTest, HardnessDichotomy) {
  Graph with = HardnessInstance(Triangle());
  Graph without = HardnessInstance(Make(3, {{0, 1, 1}, {1, 0, 1}, {1, 2, 1}, {2, 1, 1}}));
  EXPECT_LT(GirthAdditiveDeterministic(with, 0.5, 0.25).estimate, 6);
  EXPECT_GE(GirthAdditiveDeterministic(without, 0.5, 0.25).estimate, 6);
}

}  // namespace
}  // namespace rtgirth
