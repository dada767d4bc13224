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

#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rtgirth/cover.h"
#include "rtgirth/girth.h"
#include "rtgirth/graph.h"
#include "rtgirth/oracle.h"
#include "rtgirth/random.h"

namespace rtgirth {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string input;
  std::string output;
  std::string report;
  std::uint64_t seed = 0;
  double k = 2;
  Length R = 0;  // 0: command default
  double a = 0.5;
  double epsilon = 0.25;
  double c = 2;
  bool oracle = false;
  bool json = false;
  bool timing = false;
  bool early_stop = false;
  bool hardness = false;
  bool strong = false;
  VertexId n = 0;
  EdgeId m = 0;
  Length max_len = 1;
};

// Raised for bad flags or unreadable inputs; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Verdicts {
 public:
  void Check(const std::string& name, bool passed, const std::string& detail) {
    checks_.push_back({{"name", name}, {"passed", passed}, {"detail", detail}});
    if (!passed && first_failure_.empty()) first_failure_ = name + ": " + detail;
  }
  bool passed() const { return first_failure_.empty(); }
  const std::string& first_failure() const { return first_failure_; }
  Json ToJson() const { return {{"passed", passed()}, {"checks", checks_}}; }

 private:
  Json checks_ = Json::array();
  std::string first_failure_;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string Hex64(std::uint64_t x) {
  static const char* kDigits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, x >>= 4) s[i] = kDigits[x & 15];
  return s;
}

Json LengthJson(Length x) { return x == kInfinity ? Json(nullptr) : Json(x); }

std::string FormatDouble(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

Json WitnessJson(const CycleWitness& w) {
  return {{"vertices", w.vertices},
          {"edges", w.edges},
          {"length", w.length},
          {"provenance", std::string(ProvenanceName(w.provenance))}};
}

Json EstimateJson(const GirthEstimate& est) {
  Json j;
  j["estimate"] = LengthJson(est.estimate);
  j["acyclic"] = !est.witness.has_value();
  j["witness"] = est.witness ? WitnessJson(*est.witness) : Json(nullptr);
  return j;
}

Json BallJson(const Ball& ball, int pass) {
  return {{"root", ball.root},      {"members", ball.members}, {"radius", LengthJson(ball.radius)},
          {"failure", ball.failure}, {"pass", pass}};
}

Length TotalLength(const Graph& g) {
  Length total = 0;
  for (const Edge& e : g.edges()) total = SaturatingAdd(total, e.length);
  return std::max<Length>(total, 1);
}

struct LoadedGraph {
  Graph graph;
  std::string digest;
};

LoadedGraph Load(const Options& opt) {
  if (opt.input.empty()) throw UsageError("--input is required");
  std::string text = ReadFile(opt.input);
  LoadedGraph loaded;
  try {
    loaded.graph = ParseGraph(text);
  } catch (const ParseError& e) {
    throw UsageError(opt.input + ": " + e.what());
  }
  loaded.digest = "fnv1a64:" + Hex64(Fnv1a64(text));
  return loaded;
}

Json BaseReport(const std::string& command, const Json& parameters, const LoadedGraph& in,
                const Options& opt) {
  Json report;
  report["schema"] = 1;
  report["command"] = command;
  report["parameters"] = parameters;
  report["input"] = {{"path", opt.input},
                     {"digest", in.digest},
                     {"vertices", in.graph.num_vertices()},
                     {"edges", in.graph.num_edges()}};
  return report;
}

// Oracle bound checks shared by the girth commands and `verify`.
void CheckGirthSoundness(const Graph& g, const GirthEstimate& est, const GirthEstimate& exact,
                         Verdicts& v) {
  if (est.witness) {
    std::string problem = CheckWitness(g, *est.witness);
    v.Check("witness", problem.empty(), problem.empty() ? "simple cycle of the input" : problem);
    v.Check("witness-length", est.witness->length == est.estimate,
            "witness length equals the estimate");
  }
  v.Check("soundness", est.estimate >= exact.estimate,
          "estimate " + LengthJson(est.estimate).dump() + " vs exact girth " +
              LengthJson(exact.estimate).dump());
  v.Check("acyclic-agreement", est.witness.has_value() == exact.witness.has_value(),
          "estimator and oracle agree on whether a cycle exists");
}

double LnN(const Graph& g) { return LogN(g.num_vertices()); }

Json RunCover(const Options& opt, const LoadedGraph& in, Verdicts* v) {
  const Graph& g = in.graph;
  const Length R = opt.R > 0 ? opt.R : TotalLength(g);
  Cover cover = FastRoundtripCover(g, opt.k, R, opt.c, RandomStream(opt.seed));
  Json out;
  out["r"] = cover.r;
  out["passes"] = cover.passes;
  out["failures"] = cover.failures;
  out["ball_count"] = cover.balls.size();
  std::map<int, int> histogram;
  for (int count : cover.membership) ++histogram[count];
  Json hist = Json::object();
  for (auto [count, vertices] : histogram) hist[std::to_string(count)] = vertices;
  out["membership_histogram"] = hist;
  Json balls = Json::array();
  for (std::size_t i = 0; i < cover.balls.size(); ++i) {
    balls.push_back(BallJson(cover.balls[i], cover.pass_of[i]));
  }
  out["balls"] = balls;
  if (v) {
    CoverCheck check = CheckCover(cover, ExactRoundtripApsp(g));
    const double bound = 12.0 * (opt.c + 1) * static_cast<double>(R) * opt.k * LnN(g);
    v->Check("cover-membership", check.uncovered_pairs == 0,
             std::to_string(check.uncovered_pairs) + " of " + std::to_string(check.close_pairs) +
                 " close pairs share no ball");
    v->Check("cover-radius", static_cast<double>(check.max_radius) <= bound,
             "max ball radius " + std::to_string(check.max_radius) + " vs bound " +
                 FormatDouble(bound));
    v->Check("cover-certified", check.members_within_radius,
             "every member within its ball radius");
    v->Check("cover-failures", check.failure_balls == 0,
             std::to_string(check.failure_balls) + " failure branches");
  }
  return out;
}

Json RunSpanner(const Options& opt, const LoadedGraph& in, Verdicts* v) {
  const Graph& g = in.graph;
  SpannerResult spanner = FastRoundtripSpanner(g, opt.k, opt.c, RandomStream(opt.seed));
  Json out;
  out["size"] = spanner.edges.size();
  out["linf_size"] = spanner.linf.edges.size();
  out["scales"] = spanner.scales.size();
  std::size_t balls = 0;
  for (const auto& s : spanner.scales) balls += s.cover.balls.size();
  out["ball_count"] = balls;
  out["edges"] = spanner.edges;
  if (v) {
    RoundtripMatrix full = ExactRoundtripApsp(g);
    StretchCheck check = CheckStretch(full, ExactRoundtripApsp(SpannerSubgraph(g, spanner)));
    const double n = g.num_vertices();
    const double stretch_bound = 24.0 * (opt.c + 1) * opt.k * LnN(g);
    const double size_bound = 8.0 * std::pow(n, 1.0 + 1.0 / opt.k) * LnN(g) * LnN(g);
    v->Check("spanner-connectivity", check.lost_pairs == 0,
             std::to_string(check.lost_pairs) + " co-cyclic pairs lost");
    v->Check("spanner-stretch", check.max_stretch <= stretch_bound,
             "max stretch " + FormatDouble(check.max_stretch) + " vs bound " +
                 FormatDouble(stretch_bound));
    v->Check("spanner-size", static_cast<double>(spanner.edges.size()) <= size_bound,
             "size " + std::to_string(spanner.edges.size()) + " vs bound " +
                 FormatDouble(size_bound));
  }
  return out;
}

Json RunGirthMult(const Options& opt, const LoadedGraph& in, Verdicts* v) {
  const Graph& g = in.graph;
  GirthEstimate est = GirthMultiplicative(g, opt.k, opt.c, RandomStream(opt.seed));
  if (v) {
    GirthEstimate exact = ExactGirth(g);
    CheckGirthSoundness(g, est, exact, *v);
    if (exact.witness && exact.estimate > 0) {
      const double bound = 12.0 * (opt.c + 1) * opt.k * LnN(g) + 2;
      const double ratio = static_cast<double>(est.estimate) / exact.estimate;
      v->Check("girth-ratio", ratio <= bound,
               "ratio " + FormatDouble(ratio) + " vs bound " + FormatDouble(bound));
    }
  }
  return EstimateJson(est);
}

Json RunGirthAdd(const Options& opt, const LoadedGraph& in, Verdicts* v) {
  const Graph& g = in.graph;
  GirthEstimate est = GirthAdditiveRandomized(g, opt.a, opt.c, RandomStream(opt.seed));
  if (v) {
    GirthEstimate exact = ExactGirth(g);
    CheckGirthSoundness(g, est, exact, *v);
    if (exact.witness) {
      const double bound = exact.estimate + 8.0 * std::sqrt(g.num_vertices());
      v->Check("girth-additive", est.estimate <= bound,
               "estimate vs bound " + FormatDouble(bound));
    }
  }
  return EstimateJson(est);
}

Json RunGirthAddDet(const Options& opt, const LoadedGraph& in, Verdicts* v) {
  const Graph& g = in.graph;
  GirthEstimate est = GirthAdditiveDeterministic(g, opt.a, opt.epsilon, {opt.early_stop});
  if (v) {
    GirthEstimate exact = ExactGirth(g);
    CheckGirthSoundness(g, est, exact, *v);
    if (exact.witness) {
      const double na = std::pow(static_cast<double>(g.num_vertices()), opt.a);
      const double d = std::max(1.0, std::ceil(opt.epsilon * na));
      const double g_exact = static_cast<double>(exact.estimate);
      const double bound =
          g_exact <= na ? g_exact + 17 * d : (1 + 2 * opt.epsilon) * g_exact;
      v->Check("girth-additive", static_cast<double>(est.estimate) <= bound,
               "estimate vs bound " + FormatDouble(bound));
    }
  }
  return EstimateJson(est);
}

Json RunScc(const Options& opt, const LoadedGraph& in, Verdicts* v) {
  const Graph& g = in.graph;
  const Length R = opt.R > 0 ? opt.R : TotalLength(g);
  VertexPartition parts = SccViaCover(g, R, RandomStream(opt.seed), opt.c).Canonical();
  Json out;
  out["component_count"] = parts.clusters.size();
  out["components"] = parts.clusters;
  if (v) {
    VertexPartition exact = TarjanScc(g).Canonical();
    v->Check("scc", exact.clusters == parts.clusters,
             "components match Tarjan (" + std::to_string(exact.clusters.size()) + ")");
  }
  return out;
}

GirthEstimate EstimateFromReport(const Json& outputs) {
  GirthEstimate est;
  if (!outputs.contains("estimate")) throw UsageError("report has no estimate");
  if (!outputs["estimate"].is_null()) est.estimate = outputs["estimate"].get<Length>();
  if (outputs.contains("witness") && !outputs["witness"].is_null()) {
    const Json& w = outputs["witness"];
    CycleWitness cycle;
    cycle.vertices = w.at("vertices").get<std::vector<VertexId>>();
    cycle.edges = w.at("edges").get<std::vector<EdgeId>>();
    cycle.length = w.at("length").get<Length>();
    est.witness = std::move(cycle);
  }
  return est;
}

Json RunVerify(const Options& opt, const LoadedGraph& in, Verdicts& v) {
  const Graph& g = in.graph;
  if (opt.report.empty()) {
    Json out;
    out["cover"] = RunCover(opt, in, &v);
    out["cover"].erase("balls");
    out["spanner"] = RunSpanner(opt, in, &v);
    out["spanner"].erase("edges");
    out["girth_mult"] = RunGirthMult(opt, in, &v);
    return out;
  }
  Json report;
  try {
    report = Json::parse(ReadFile(opt.report));
    if (report.value("schema", 0) != 1) throw UsageError("unsupported report schema");
    const std::string digest = report.at("input").at("digest").get<std::string>();
    v.Check("input-digest", digest == in.digest, "report digest " + digest);
    GirthEstimate est = EstimateFromReport(report.at("outputs"));
    CheckGirthSoundness(g, est, ExactGirth(g), v);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("malformed report: ") + e.what());
  }
  return {{"report", opt.report}, {"command", report["command"]}};
}

int RunGen(const Options& opt, std::ostream& out, bool json) {
  Graph g;
  RandomStream rng(opt.seed);
  Json params;
  if (opt.hardness) {
    g = HardnessInstance(Load(opt).graph);
    params = {{"family", "hardness"}, {"base", opt.input}};
  } else {
    if (opt.n <= 0) throw UsageError("--n must be positive");
    try {
      g = opt.strong ? RandomStronglyConnected(opt.n, opt.m, opt.max_len, rng)
                     : RandomDigraph(opt.n, opt.m, opt.max_len, rng);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    params = {{"family", opt.strong ? "strongly-connected" : "random"},
              {"n", opt.n},
              {"m", opt.m},
              {"max_len", opt.max_len},
              {"seed", opt.seed}};
  }
  const std::string text = FormatGraph(g);
  if (opt.output.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream file(opt.output, std::ios::binary);
  if (!file) throw UsageError("cannot write " + opt.output);
  file << text;
  Json report = {{"schema", 1},
                 {"command", "gen"},
                 {"parameters", params},
                 {"output", {{"path", opt.output},
                             {"digest", "fnv1a64:" + Hex64(Fnv1a64(text))},
                             {"vertices", g.num_vertices()},
                             {"edges", g.num_edges()}}}};
  if (json) {
    out << report.dump(2) << "\n";
  } else {
    out << "wrote " << opt.output << " (" << g.num_vertices() << " vertices, " << g.num_edges()
        << " edges)\n";
  }
  return kExitOk;
}

void PrintText(const Json& report, std::ostream& out) {
  out << report["command"].get<std::string>() << "\n";
  for (const auto& [key, value] : report["outputs"].items()) {
    if (value.is_object() && key == "witness") {
      out << "  witness:";
      for (const auto& x : value["vertices"]) out << ' ' << x.dump();
      out << " (length " << value["length"].dump() << ", "
          << value["provenance"].get<std::string>() << ")\n";
    } else if (value.is_array() && value.size() > 16) {
      out << "  " << key << ": [" << value.size() << " entries]\n";
    } else {
      out << "  " << key << ": " << value.dump() << "\n";
    }
  }
  if (report.contains("verification")) {
    for (const auto& check : report["verification"]["checks"]) {
      out << "  " << (check["passed"].get<bool>() ? "PASS " : "FAIL ")
          << check["name"].get<std::string>() << ": " << check["detail"].get<std::string>()
          << "\n";
    }
  }
}

}  // namespace

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Roundtrip covers, spanners and girth estimates for directed graphs", "rtgirth"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub, bool needs_input) {
    auto* input = sub->add_option("--input", opt.input, "Edge-list file (\"n m\" then \"u v w\")");
    if (needs_input) input->required();
    sub->add_option("--seed", opt.seed, "Random seed")->capture_default_str();
    sub->add_option("--c", opt.c, "Pass-count and radius constant")->capture_default_str();
    sub->add_flag("--oracle", opt.oracle, "Check the result against brute-force oracles");
    sub->add_flag("--json", opt.json, "Print the JSON report");
    sub->add_flag("--timing", opt.timing, "Include wall-clock time in the report");
  };
  auto add_k = [&](CLI::App* sub) {
    sub->add_option("--k", opt.k, "Stretch parameter k >= 1")
        ->capture_default_str()
        ->check(CLI::Range(1.0, 1e9));
  };
  auto add_r = [&](CLI::App* sub) {
    sub->add_option("--R", opt.R, "Distance scale R (default: total edge length)")
        ->check(CLI::PositiveNumber);
  };
  auto add_a = [&](CLI::App* sub) {
    sub->add_option("--a", opt.a, "Exponent a in (0, 1)")
        ->capture_default_str()
        ->check(CLI::Range(0.0, 1.0));
  };

  CLI::App* cover = app.add_subcommand("cover", "Fast roundtrip cover");
  common(cover, true);
  add_k(cover);
  add_r(cover);
  CLI::App* spanner = app.add_subcommand("spanner", "Weight-independent roundtrip spanner");
  common(spanner, true);
  add_k(spanner);
  CLI::App* mult = app.add_subcommand("girth-mult", "Multiplicative girth estimate");
  common(mult, true);
  add_k(mult);
  CLI::App* add = app.add_subcommand("girth-add", "Randomized additive girth (unweighted)");
  common(add, true);
  add_a(add);
  CLI::App* det = app.add_subcommand("girth-add-det", "Deterministic additive girth (unweighted)");
  common(det, true);
  add_a(det);
  det->add_option("--epsilon", opt.epsilon, "Accuracy epsilon in (0, 1)")
      ->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  det->add_flag("--early-stop", opt.early_stop, "Stop at the first detour with L <= 16d");
  CLI::App* scc = app.add_subcommand("scc", "Strongly connected components via covers");
  common(scc, true);
  add_r(scc);
  CLI::App* verify = app.add_subcommand("verify", "Check a graph or a girth report with oracles");
  common(verify, true);
  add_k(verify);
  verify->add_option("--report", opt.report, "JSON report of a girth command to re-check");
  CLI::App* gen = app.add_subcommand("gen", "Generate a random or hardness instance");
  common(gen, false);
  gen->add_flag("--hardness", opt.hardness, "Hardness instance of the --input base graph");
  gen->add_flag("--strong", opt.strong, "Hamiltonian cycle plus --m extra edges");
  gen->add_option("--n", opt.n, "Vertex count");
  gen->add_option("--m", opt.m, "Edge count (extra edges with --strong)");
  gen->add_option("--max-len", opt.max_len, "Largest edge length")->capture_default_str();
  gen->add_option("--output", opt.output, "Write the graph here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const CLI::App* chosen = app.get_subcommands().front();
  const std::string command = chosen->get_name();
  try {
    if (command == "gen") return RunGen(opt, out, opt.json);
    if (opt.epsilon <= 0 || opt.epsilon >= 1 || opt.a <= 0 || opt.a >= 1) {
      throw UsageError("--a and --epsilon must lie strictly between 0 and 1");
    }
    if (!(opt.c >= 1)) throw UsageError("--c must be at least 1");

    LoadedGraph in = Load(opt);
    Json params = {{"seed", opt.seed}, {"c", opt.c}};
    if (command == "cover" || command == "spanner" || command == "girth-mult" ||
        command == "verify") {
      params["k"] = opt.k;
    }
    if (command == "cover" || command == "scc") {
      params["R"] = opt.R > 0 ? opt.R : TotalLength(in.graph);
    }
    if (command == "girth-add" || command == "girth-add-det") params["a"] = opt.a;
    if (command == "girth-add-det") {
      params["epsilon"] = opt.epsilon;
      params["early_stop"] = opt.early_stop;
    }
    Json report = BaseReport(command, params, in, opt);

    const auto start = std::chrono::steady_clock::now();
    Verdicts verdicts;
    Verdicts* v = opt.oracle ? &verdicts : nullptr;
    Json outputs;
    if (command == "cover") {
      outputs = RunCover(opt, in, v);
    } else if (command == "spanner") {
      outputs = RunSpanner(opt, in, v);
    } else if (command == "girth-mult") {
      outputs = RunGirthMult(opt, in, v);
    } else if (command == "girth-add") {
      outputs = RunGirthAdd(opt, in, v);
    } else if (command == "girth-add-det") {
      outputs = RunGirthAddDet(opt, in, v);
    } else if (command == "scc") {
      outputs = RunScc(opt, in, v);
    } else {
      outputs = RunVerify(opt, in, verdicts);
      v = &verdicts;
    }
    report["outputs"] = outputs;
    if (v) report["verification"] = v->ToJson();
    if (opt.timing) {
      report["wall_clock_seconds"] =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    if (opt.json) {
      out << report.dump(2) << "\n";
    } else {
      PrintText(report, out);
    }
    if (v && !v->passed()) {
      err << "verification failed: " << v->first_failure() << "\n";
      return kExitVerification;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeLimitError& e) {
    err << "error: oracle size limit: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace rtgirth
