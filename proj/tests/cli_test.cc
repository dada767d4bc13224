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

#include "rtgirth/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "json.hpp"
#include "rtgirth/graph.h"
#include "rtgirth/oracle.h"
#include "test_graphs.h"

namespace rtgirth {
namespace {

using Json = nlohmann::json;

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "rtgirth");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Result r;
  r.code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("rtgirth_cli_test_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }
  std::string Read(const std::string& path) {
    std::ifstream in(path);
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::string Path(const std::string& name) { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, GirthMultTriangle) {
  std::string tri = Write("triangle.txt", "3 3\n0 1 1\n1 2 1\n2 0 1\n");
  Result r = Cli({"girth-mult", "--input", tri, "--k", "1", "--seed", "7", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json report = Json::parse(r.out);
  EXPECT_EQ(report["schema"], 1);
  EXPECT_EQ(report["command"], "girth-mult");
  EXPECT_EQ(report["parameters"]["seed"], 7);
  EXPECT_EQ(report["outputs"]["estimate"], 3);
  EXPECT_EQ(report["outputs"]["witness"]["vertices"], Json::parse("[0, 1, 2]"));
  EXPECT_FALSE(report.contains("wall_clock_seconds"));
  EXPECT_FALSE(report.contains("verification"));
  EXPECT_EQ(report["input"]["digest"].get<std::string>().rfind("fnv1a64:", 0), 0u);

  Result text = Cli({"girth-mult", "--input", tri, "--k", "1", "--seed", "7"});
  ASSERT_EQ(text.code, kExitOk);
  EXPECT_NE(text.out.find("witness: 0 1 2"), std::string::npos) << text.out;
}

TEST_F(CliTest, GirthAddDetCycleWithOracle) {
  std::string c100 = Write("c100.txt", FormatGraph(testing::DirectedCycle(100)));
  Result r = Cli({"girth-add-det", "--input", c100, "--a", "0.5", "--epsilon", "0.25", "--oracle",
                  "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json report = Json::parse(r.out);
  EXPECT_GE(report["outputs"]["estimate"].get<Length>(), 100);
  EXPECT_TRUE(report["verification"]["passed"].get<bool>());
}

TEST_F(CliTest, ReportsAreByteIdentical) {
  RandomStream rng(9);
  std::string g = Write("g.txt", FormatGraph(RandomStronglyConnected(20, 30, 4, rng)));
  std::string u = Write("u.txt", FormatGraph(RandomStronglyConnected(20, 10, 1, rng)));
  const std::vector<std::vector<std::string>> commands = {
      {"cover", "--input", g, "--seed", "3", "--json"},
      {"spanner", "--input", g, "--seed", "3", "--json"},
      {"girth-mult", "--input", g, "--seed", "3", "--json"},
      {"girth-add", "--input", u, "--seed", "3", "--json"},
      {"girth-add-det", "--input", u, "--json"},
      {"scc", "--input", g, "--seed", "3", "--json"},
      {"verify", "--input", g, "--seed", "3", "--json"},
  };
  for (const auto& args : commands) {
    Result first = Cli(args);
    Result second = Cli(args);
    ASSERT_EQ(first.code, kExitOk) << args[0] << ": " << first.err;
    EXPECT_EQ(first.out, second.out) << args[0];
  }
}

TEST_F(CliTest, TimingIsOptIn) {
  std::string tri = Write("triangle.txt", "3 3\n0 1 1\n1 2 1\n2 0 1\n");
  Result r = Cli({"scc", "--input", tri, "--json", "--timing"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  Json report = Json::parse(r.out);
  EXPECT_TRUE(report.contains("wall_clock_seconds"));
  EXPECT_EQ(report["outputs"]["component_count"], 1);
}

TEST_F(CliTest, OracleChecksPass) {
  RandomStream rng(10);
  std::string g = Write("g.txt", FormatGraph(RandomStronglyConnected(25, 40, 5, rng)));
  for (std::string command : {"cover", "spanner", "girth-mult", "scc", "verify"}) {
    Result r = Cli({command, "--input", g, "--oracle", "--json"});
    EXPECT_EQ(r.code, kExitOk) << command << ": " << r.err;
    Json report = Json::parse(r.out);
    EXPECT_TRUE(report["verification"]["passed"].get<bool>()) << command;
    EXPECT_FALSE(report["verification"]["checks"].empty()) << command;
  }
}

TEST_F(CliTest, VerifyRejectsCorruptedWitness) {
  std::string tri = Write("triangle.txt", "3 4\n0 1 1\n1 2 1\n2 0 1\n1 0 5\n");
  Result r = Cli({"girth-mult", "--input", tri, "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::string good = Write("good.json", r.out);
  Result ok = Cli({"verify", "--input", tri, "--report", good});
  EXPECT_EQ(ok.code, kExitOk) << ok.err;

  Json report = Json::parse(r.out);
  report["outputs"]["witness"]["vertices"] = Json::parse("[0, 2, 1]");
  std::string bad = Write("bad.json", report.dump());
  Result fail = Cli({"verify", "--input", tri, "--report", bad});
  EXPECT_EQ(fail.code, kExitVerification);
  EXPECT_NE(fail.err.find("witness"), std::string::npos) << fail.err;

  // An estimate below the true girth is unsound even with a valid witness.
  report = Json::parse(r.out);
  report["outputs"]["estimate"] = 2;
  report["outputs"]["witness"]["length"] = 2;
  std::string low = Write("low.json", report.dump());
  EXPECT_EQ(Cli({"verify", "--input", tri, "--report", low}).code, kExitVerification);

  // A report for a different input.
  std::string other = Write("other.txt", "3 3\n0 1 1\n1 2 1\n2 0 2\n");
  EXPECT_EQ(Cli({"verify", "--input", other, "--report", good}).code, kExitVerification);
}

TEST_F(CliTest, UsageErrors) {
  std::string tri = Write("triangle.txt", "3 3\n0 1 1\n1 2 1\n2 0 1\n");
  EXPECT_EQ(Cli({"girth-mult", "--input", tri, "--bogus"}).code, kExitUsage);
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Cli({"girth-mult", "--input", Path("missing.txt")}).code, kExitUsage);
  EXPECT_EQ(Cli({"girth-add", "--input", tri, "--a", "1.5"}).code, kExitUsage);
  EXPECT_EQ(Cli({"girth-mult", "--input", tri, "--c", "0.5"}).code, kExitUsage);

  std::string broken = Write("broken.txt", "3 2\n0 1 1\n1 9 1\n");
  Result parse = Cli({"scc", "--input", broken});
  EXPECT_EQ(parse.code, kExitUsage);
  EXPECT_NE(parse.err.find("line 3"), std::string::npos) << parse.err;

  std::string weighted = Write("weighted.txt", "2 2\n0 1 2\n1 0 1\n");
  Result add = Cli({"girth-add-det", "--input", weighted});
  EXPECT_EQ(add.code, kExitUsage);
  EXPECT_NE(add.err.find("unweighted"), std::string::npos) << add.err;
}

TEST_F(CliTest, GenRandomIsReproducible) {
  Result a = Cli({"gen", "--n", "12", "--m", "30", "--max-len", "4", "--seed", "42"});
  Result b = Cli({"gen", "--n", "12", "--m", "30", "--max-len", "4", "--seed", "42"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  Graph g = ParseGraph(a.out);
  EXPECT_EQ(g.num_vertices(), 12);
  EXPECT_EQ(g.num_edges(), 30);

  std::string out = Path("strong.txt");
  Result strong = Cli({"gen", "--strong", "--n", "10", "--m", "5", "--output", out, "--json"});
  ASSERT_EQ(strong.code, kExitOk) << strong.err;
  Graph s = ParseGraph(Read(out));
  EXPECT_EQ(s.num_edges(), 15);
  EXPECT_EQ(TarjanScc(s).clusters.size(), 1u);
  EXPECT_EQ(Json::parse(strong.out)["output"]["edges"], 15);
}

TEST_F(CliTest, HardnessPipeline) {
  struct Case {
    std::string graph;
    bool has_triangle;
  };
  const std::vector<Case> cases = {
      {"3 3\n0 1 1\n1 2 1\n2 0 1\n", true},
      {"4 4\n0 1 1\n1 0 1\n2 3 1\n3 2 1\n", false},
      {"4 5\n0 1 1\n1 2 1\n2 3 1\n3 0 1\n1 0 1\n", false},
      {"4 5\n0 1 1\n1 2 1\n2 0 1\n2 3 1\n3 2 1\n", true},
  };
  for (const Case& c : cases) {
    std::string base = Write("base.txt", c.graph);
    std::string h = Path("h.txt");
    Result gen = Cli({"gen", "--hardness", "--input", base, "--output", h});
    ASSERT_EQ(gen.code, kExitOk) << gen.err;
    const VertexId n = ParseGraph(c.graph).num_vertices();
    Result det = Cli({"girth-add-det", "--input", h, "--a", "0.5", "--json", "--oracle"});
    ASSERT_EQ(det.code, kExitOk) << det.err;
    const Length estimate = Json::parse(det.out)["outputs"]["estimate"].get<Length>();
    EXPECT_EQ(estimate < 2 * n, c.has_triangle) << c.graph;
  }
}

}  // namespace
}  // namespace rtgirth
