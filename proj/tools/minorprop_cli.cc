// Copyright 2026 The minorprop Authors
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

// Command-line driver. Exit codes: 0 ok, 1 internal error, 2 bad input
// or precondition, 3 query budget exhausted, 4 certificate verification
// failed.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "minorprop/certificate.h"
#include "minorprop/errors.h"
#include "minorprop/exact.h"
#include "minorprop/generators.h"
#include "minorprop/graph.h"
#include "minorprop/harness.h"
#include "minorprop/pattern.h"

namespace minorprop {
namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitBudget = 3;
constexpr int kExitVerify = 4;

std::string ReadText(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + path);
  out << text;
  if (!out) throw PreconditionError("write failed: " + path);
}

struct GenArgs {
  std::string config;
  InstanceSpec spec;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int CmdGen(const GenArgs& a) {
  InstanceSpec spec = a.config.empty() ? a.spec : ParseInstanceSpec(ReadText(a.config));
  if (a.seed) spec.seed = *a.seed;
  Instance inst = Generate(spec);
  if (a.out.empty()) {
    WriteGraph(std::cout, inst.graph);
    return kExitOk;
  }
  WriteGraphFile(a.out, inst.graph);
  WriteText(a.out + ".json", GroundTruthToJson(inst.truth) + "\n");
  return kExitOk;
}

struct TestArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::optional<std::size_t> threads;
  std::string graph;
  std::string out;
  bool timing = false;
};

ExperimentConfig LoadConfig(const std::string& path,
                            std::optional<std::uint64_t> seed,
                            std::optional<std::uint64_t> budget,
                            std::optional<std::size_t> threads, bool timing) {
  ExperimentConfig c = ParseExperimentConfig(ReadText(path));
  if (seed) c.seed = *seed;
  if (budget) c.budget = *budget;
  if (threads) c.threads = *threads;
  if (timing) c.timing = true;
  return c;
}

int ExitFor(const Summary& s) {
  if (s.unverified > 0) return kExitVerify;
  if (s.budget_exhausted > 0) return kExitBudget;
  return kExitOk;
}

int CmdTest(const TestArgs& a) {
  ExperimentConfig c = LoadConfig(a.config, a.seed, a.budget, a.threads, a.timing);
  ExperimentResult r;
  if (a.graph.empty()) {
    r = RunExperiment(c);
  } else {
    Instance inst{ReadGraphFile(a.graph), {}};
    r = RunExperimentOn(c, inst);
  }
  const std::string csv = TrialsToCsv(r.records);
  const std::string summary = SummaryToJson(c, r.summary) + "\n";
  if (a.out.empty()) {
    std::cout << csv;
    std::cerr << summary;
  } else {
    WriteText(a.out + ".csv", csv);
    WriteText(a.out + ".summary.json", summary);
    std::string certs;
    for (const auto& rec : r.records) {
      if (rec.certificate.empty()) continue;
      json line = {{"trial", rec.trial},
                   {"certificate", json::parse(rec.certificate)}};
      certs += line.dump() + "\n";
    }
    WriteText(a.out + ".certs.jsonl", certs);
  }
  return ExitFor(r.summary);
}

struct SweepArgs {
  std::string config;
  std::string axis = "n";
  std::vector<double> values;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::optional<std::size_t> threads;
  std::string out;
};

int CmdSweep(const SweepArgs& a) {
  ExperimentConfig c = LoadConfig(a.config, a.seed, a.budget, a.threads, false);
  SweepResult s = RunSweep(c, a.axis, a.values);
  const std::string csv = SweepToCsv(s);
  const std::string summary = SweepToJson(c, s) + "\n";
  if (a.out.empty()) {
    std::cout << csv;
    std::cerr << summary;
  } else {
    WriteText(a.out + ".csv", csv);
    WriteText(a.out + ".json", summary);
  }
  Summary total;
  for (const auto& p : s.points) {
    total.unverified += p.summary.unverified;
    total.budget_exhausted += p.summary.budget_exhausted;
  }
  return ExitFor(total);
}

struct VerifyArgs {
  std::string graph;
  std::string cert;
  std::size_t min_cycle_length = 3;
  std::string pattern;
};

int CmdVerify(const VerifyArgs& a) {
  Graph g = ReadGraphFile(a.graph);
  std::string text = ReadText(a.cert);
  // A certs.jsonl line wraps the certificate with its trial index.
  json j = json::parse(text, nullptr, false);
  if (!j.is_discarded() && j.is_object() && j.contains("certificate")) {
    text = j.at("certificate").dump();
  }
  Certificate cert = CertificateFromJson(text);
  VerifyOptions options;
  options.min_cycle_length = a.min_cycle_length;
  VerifyResult r = VerifyCertificate(g, cert, options);
  bool ok = r.ok();
  std::string detail = r.ok() ? "" : std::string(VerifyErrorName(r.error)) +
                                         (r.detail.empty() ? "" : ": " + r.detail);
  if (ok && !a.pattern.empty()) {
    const Pattern want = Pattern::Parse(a.pattern);
    const auto* w = std::get_if<MinorWitness>(&cert);
    ok = w != nullptr && w->pattern.size() == want.size() &&
         w->pattern.edges() == want.edges();
    if (!ok) detail = "pattern mismatch";
  }
  json out = {{"valid", ok}, {"kind", CertificateKind(cert)}};
  if (!ok) out["error"] = detail;
  std::cout << out.dump() << "\n";
  return ok ? kExitOk : kExitVerify;
}

struct OracleArgs {
  std::string graph;
  std::string query;
  std::string pattern;
  std::size_t k = 4;
  Vertex vertex = 1;
  std::size_t radius = 1;
  double eps = 0.1;
};

int CmdOracle(const OracleArgs& a) {
  Graph g = ReadGraphFile(a.graph);
  json out = {{"query", a.query}};
  if (a.query == "minor") {
    auto w = ExactFindMinor(g, Pattern::Parse(a.pattern));
    out["has_minor"] = w.has_value();
    out["witness"] = w ? json::parse(CertificateToJson(*w)) : json(nullptr);
  } else if (a.query == "cycle_free_distance") {
    out["distance"] = ExactCycleFreeDistance(g);
  } else if (a.query == "minor_free_distance") {
    out["distance"] = ExactMinorFreeDistance(g, Pattern::Parse(a.pattern));
  } else if (a.query == "spots") {
    out["spots"] = ExactSpots(g, a.k);
  } else if (a.query == "expansion") {
    ExpansionResult r = CheckExpansion(g, a.vertex, a.radius, a.eps);
    out["expanding"] = r.expanding;
    out["violating_set"] = r.violating_set;
    out["ball_size"] = r.ball_size;
  } else {
    throw PreconditionError("unknown oracle query: " + a.query);
  }
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"minorprop: graph property testers and experiments"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate an instance");
  g->add_option("--config", gen.config, "Instance spec json file");
  g->add_option("--family", gen.spec.family, "Instance family");
  g->add_option("--n", gen.spec.n, "Vertex count");
  g->add_option("--d", gen.spec.d, "Degree bound");
  g->add_option("--eps", gen.spec.eps, "Target distance");
  g->add_option("--k", gen.spec.k, "Family parameter k");
  g->add_option("--pattern", gen.spec.pattern, "Planted or excluded pattern");
  g->add_option("--block", gen.spec.block, "Planted block size");
  g->add_option("--base", gen.spec.base, "Planted base: path or tree");
  g->add_flag("--isolated", gen.spec.isolated, "Isolated-vertex variant");
  g->add_option("--seed", gen.seed, "Seed");
  g->add_option("--out", gen.out, "Graph file; metadata goes to <out>.json");

  TestArgs test;
  auto* t = app.add_subcommand("test", "Run a tester for a number of trials");
  t->add_option("--config", test.config, "Experiment config json")->required();
  t->add_option("--seed", test.seed, "Override the seed");
  t->add_option("--budget", test.budget, "Per-trial query budget");
  t->add_option("--threads", test.threads, "Worker threads");
  t->add_option("--graph", test.graph, "Run on this graph file instead");
  t->add_flag("--timing", test.timing, "Record wall time per trial");
  t->add_option("--out", test.out,
                "Output prefix: <out>.csv, <out>.summary.json, <out>.certs.jsonl");

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Run a tester across n or eps");
  s->add_option("--config", sweep.config, "Experiment config json")->required();
  s->add_option("--axis", sweep.axis, "n or eps")
      ->check(CLI::IsMember({"n", "eps"}));
  s->add_option("--values", sweep.values, "Grid values")
      ->required()
      ->delimiter(',');
  s->add_option("--seed", sweep.seed, "Override the seed");
  s->add_option("--budget", sweep.budget, "Per-trial query budget");
  s->add_option("--threads", sweep.threads, "Worker threads");
  s->add_option("--out", sweep.out, "Output prefix: <out>.csv, <out>.json");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Re-verify a certificate");
  v->add_option("--graph", verify.graph, "Graph file")->required();
  v->add_option("--cert", verify.cert, "Certificate json")->required();
  v->add_option("--min-cycle-length", verify.min_cycle_length,
                "Shortest acceptable cycle");
  v->add_option("--pattern", verify.pattern, "Required minor pattern");

  OracleArgs oracle;
  auto* o = app.add_subcommand("oracle", "Exact oracle queries");
  o->add_option("--graph", oracle.graph, "Graph file")->required();
  o->add_option("--query", oracle.query,
                "minor, cycle_free_distance, minor_free_distance, spots, "
                "expansion")
      ->required();
  o->add_option("--pattern", oracle.pattern, "Pattern");
  o->add_option("--k", oracle.k, "Spot size k");
  o->add_option("--vertex", oracle.vertex, "Expansion center");
  o->add_option("--radius", oracle.radius, "Expansion radius");
  o->add_option("--eps", oracle.eps, "Expansion threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitPrecondition;
  }

  try {
    if (*g) return CmdGen(gen);
    if (*t) return CmdTest(test);
    if (*s) return CmdSweep(sweep);
    if (*v) return CmdVerify(verify);
    if (*o) return CmdOracle(oracle);
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kExitBudget;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const InstanceTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace
}  // namespace minorprop

int main(int argc, char** argv) { return minorprop::Main(argc, argv); }
