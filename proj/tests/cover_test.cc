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

#include "rtgirth/cover.h"

#include <gtest/gtest.h>

#include <cmath>

#include "rtgirth/oracle.h"
#include "test_graphs.h"

namespace rtgirth {
namespace {

using testing::Make;
using testing::Triangle;

// Each vertex in exactly one ball; members of non-failure balls within the
// ball's roundtrip radius of the root, certified by the trees.
void ExpectPartitionOfBalls(const Graph& g, const std::vector<Ball>& balls, double bound) {
  std::vector<int> count(g.num_vertices(), 0);
  RoundtripMatrix apsp = ExactRoundtripApsp(g);
  for (const Ball& b : balls) {
    ASSERT_TRUE(b.Contains(b.root));
    ASSERT_EQ(b.out_tree.dist.size(), b.members.size());
    for (size_t i = 0; i < b.members.size(); ++i) {
      ++count[b.members[i]];
      if (b.failure) continue;
      EXPECT_LE(b.out_tree.dist[i] + b.in_tree.dist[i], b.radius);
      EXPECT_EQ(b.out_tree.dist[i] + b.in_tree.dist[i], apsp.at(b.root, b.members[i]));
    }
    if (!b.failure) {
      EXPECT_LE(static_cast<double>(b.radius), bound);
    }
  }
  for (int c : count) EXPECT_EQ(c, 1);
}

TEST(ProbabilisticCoverTest, EmptyGraph) {
  RandomStream rng(1);
  EXPECT_TRUE(ProbabilisticCover(Graph(0, {}), 1.0, 2.0, rng).empty());
}

TEST(ProbabilisticCoverTest, SingleVertex) {
  RandomStream rng(1);
  auto balls = ProbabilisticCover(Graph(1, {}), 1.0, 2.0, rng);
  ASSERT_EQ(balls.size(), 1u);
  EXPECT_EQ(balls[0].members, (std::vector<VertexId>{0}));
  EXPECT_FALSE(balls[0].failure);
}

TEST(ProbabilisticCoverTest, TriangleIsOneBall) {
  int whole = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    RandomStream rng(seed);
    auto balls = ProbabilisticCover(Triangle(), 3.0, 2.0, rng);
    ExpectPartitionOfBalls(Triangle(), balls, 2 * 3.0 * 3.0);
    whole += balls.size() == 1 && balls[0].members.size() == 3 && !balls[0].failure;
  }
  EXPECT_GE(whole, 990);
}

TEST(ProbabilisticCoverTest, RejectsBadParameters) {
  RandomStream rng(1);
  EXPECT_THROW(ProbabilisticCover(Triangle(), 0.0, 2.0, rng), std::invalid_argument);
  EXPECT_THROW(ProbabilisticCover(Triangle(), 1.0, 0.5, rng), std::invalid_argument);
}

TEST(ProbabilisticCoverTest, PartitionAndRadiusOnRandomGraphs) {
  RandomStream gen(12);
  for (int trial = 0; trial < 20; ++trial) {
    const VertexId n = 5 + static_cast<VertexId>(gen.UniformIndex(45));
    Graph g = trial % 2 ? RandomStronglyConnected(n, n, 6, gen) : RandomDigraph(n, 2 * n, 6, gen);
    const double r = 1 + static_cast<double>(gen.UniformIndex(6));
    const double c = 2;
    RandomStream rng(trial);
    ProbabilisticCoverStats stats;
    auto balls = ProbabilisticCover(g, r, c, rng, &stats);
    ExpectPartitionOfBalls(g, balls, 2 * (c + 1) * r);
    EXPECT_LE(stats.max_depth, static_cast<int>(std::ceil(std::log(n) / std::log(8.0 / 7.0))));
  }
}

TEST(ProbabilisticCoverTest, SmallRadiusSplitsDistantVertices) {
  // 2-cycle of length 100 each way; r = 1 cannot keep both in one ball.
  Graph g = Make(2, {{0, 1, 100}, {1, 0, 100}});
  RandomStream rng(3);
  auto balls = ProbabilisticCover(g, 1.0, 2.0, rng);
  EXPECT_EQ(balls.size(), 2u);
}

TEST(CoverPassCountTest, Formula) {
  EXPECT_EQ(CoverPassCount(60, 2, 2), 2 * 8 * 5);
  EXPECT_EQ(CoverPassCount(1, 1, 2), 2);
  EXPECT_EQ(CoverPassCount(100, 1, 1), 100 * 5);
}

TEST(FastRoundtripCoverTest, SingleVertex) {
  Cover cover = FastRoundtripCover(Graph(1, {}), 1.5, 3, 2, RandomStream(4));
  ASSERT_EQ(static_cast<int>(cover.balls.size()), cover.passes);
  for (const Ball& b : cover.balls) EXPECT_EQ(b.members, (std::vector<VertexId>{0}));
  EXPECT_EQ(cover.membership, (std::vector<int>{cover.passes}));
}

TEST(FastRoundtripCoverTest, TwoDisjointTwoCycles) {
  Graph g = Make(4, {{0, 1, 1}, {1, 0, 1}, {2, 3, 1}, {3, 2, 1}});
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Cover cover = FastRoundtripCover(g, 1, 2, 2, RandomStream(seed));
    EXPECT_EQ(cover.failures, 0);
    CoverCheck check = CheckCover(cover, ExactRoundtripApsp(g));
    EXPECT_EQ(check.close_pairs, 2);
    EXPECT_EQ(check.uncovered_pairs, 0);
    for (const Ball& b : cover.balls) {
      EXPECT_FALSE(b.Contains(0) && b.Contains(2));
    }
  }
}

TEST(FastRoundtripCoverTest, ContractOnRandomStronglyConnected) {
  RandomStream gen(60);
  Graph g = RandomStronglyConnected(60, 240, 8, gen);
  RoundtripMatrix apsp = ExactRoundtripApsp(g);
  const Length R = apsp.MaxFinite();
  const double k = 2, c = 2;
  int good = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Cover cover = FastRoundtripCover(g, k, R, c, RandomStream(seed));
    CoverCheck check = CheckCover(cover, apsp);
    EXPECT_TRUE(check.members_within_radius);
    EXPECT_LE(static_cast<double>(check.max_radius), 12 * (c + 1) * R * k * std::log(60.0));
    for (int m : cover.membership) EXPECT_LE(m, cover.passes);
    good += check.uncovered_pairs == 0 && cover.failures == 0;
  }
  EXPECT_GE(good, 99);
}

TEST(FastRoundtripCoverTest, MembershipAndPassesRecorded) {
  RandomStream gen(3);
  Graph g = RandomStronglyConnected(20, 30, 3, gen);
  Cover cover = FastRoundtripCover(g, 2, 4, 2, RandomStream(1));
  EXPECT_EQ(cover.passes, CoverPassCount(20, 2, 2));
  EXPECT_DOUBLE_EQ(cover.r, 6.0 * 4 * 2 * std::log(20.0));
  ASSERT_EQ(cover.pass_of.size(), cover.balls.size());
  std::vector<int> membership(20, 0);
  for (const Ball& b : cover.balls) {
    for (VertexId v : b.members) ++membership[v];
  }
  EXPECT_EQ(membership, cover.membership);
  // Each pass partitions V.
  for (int pass = 0; pass < cover.passes; ++pass) {
    std::vector<int> count(20, 0);
    for (size_t i = 0; i < cover.balls.size(); ++i) {
      if (cover.pass_of[i] != pass) continue;
      for (VertexId v : cover.balls[i].members) ++count[v];
    }
    for (int c : count) EXPECT_EQ(c, 1);
  }
}

TEST(FastRoundtripCoverTest, DeterministicForSeed) {
  RandomStream gen(3);
  Graph g = RandomStronglyConnected(20, 30, 3, gen);
  Cover a = FastRoundtripCover(g, 2, 4, 2, RandomStream(9));
  Cover b = FastRoundtripCover(g, 2, 4, 2, RandomStream(9));
  ASSERT_EQ(a.balls.size(), b.balls.size());
  for (size_t i = 0; i < a.balls.size(); ++i) {
    EXPECT_EQ(a.balls[i].members, b.balls[i].members);
    EXPECT_EQ(a.balls[i].radius, b.balls[i].radius);
  }
}

TEST(SccViaCoverTest, Examples) {
  VertexPartition dag = SccViaCover(testing::PathGraph(4), 10, RandomStream(1));
  EXPECT_EQ(dag.clusters.size(), 4u);
  VertexPartition tri = SccViaCover(Triangle(), 3, RandomStream(1));
  EXPECT_EQ(tri.clusters.size(), 1u);
}

TEST(SccViaCoverTest, MatchesTarjan) {
  RandomStream gen(50);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = RandomDigraph(50, 90, 5, gen);
    const Length R = std::max<Length>(1, ExactRoundtripApsp(g).MaxFinite());
    VertexPartition via = SccViaCover(g, R, RandomStream(trial)).Canonical();
    EXPECT_EQ(via.clusters, TarjanScc(g).Canonical().clusters);
  }
}

}  // namespace
}  // namespace rtgirth
