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

#include "minorprop/harness.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "minorprop/certificate.h"
#include "minorprop/ck_minor.h"
#include "minorprop/cycle_tester.h"
#include "minorprop/errors.h"
#include "minorprop/query_oracle.h"
#include "minorprop/rng.h"
#include "minorprop/tree_minor.h"
#include "minorprop/unbounded.h"

namespace minorprop {
namespace {

using nlohmann::json;

const std::set<std::string> kTesters = {
    "cycle", "cycle_direct", "ck",   "triangle_edge",  "path",
    "star",  "tree",         "forest", "star_unbounded", "cycle_unbounded"};

json Parse(const std::string& text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("bad ") + what + " json: " + e.what());
  }
}

void CheckKeys(const json& j, const std::set<std::string>& allowed,
               const char* what) {
  if (!j.is_object()) {
    throw PreconditionError(std::string(what) + " must be a json object");
  }
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) {
      throw PreconditionError(std::string("unknown ") + what + " key: " + key);
    }
  }
}

template <typename T>
void Read(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("bad value for ") + key + ": " +
                            e.what());
  }
}

template <typename T>
void ReadOptional(const json& j, const char* key, std::optional<T>& out) {
  if (!j.contains(key) || j.at(key).is_null()) return;
  T value{};
  Read(j, key, value);
  out = value;
}

InstanceSpec SpecFromJson(const json& j) {
  CheckKeys(j,
            {"family", "n", "d", "eps", "k", "pattern", "block", "base",
             "isolated", "seed"},
            "instance");
  InstanceSpec s;
  Read(j, "family", s.family);
  Read(j, "n", s.n);
  Read(j, "d", s.d);
  Read(j, "eps", s.eps);
  Read(j, "k", s.k);
  Read(j, "pattern", s.pattern);
  Read(j, "block", s.block);
  Read(j, "base", s.base);
  Read(j, "isolated", s.isolated);
  Read(j, "seed", s.seed);
  if (s.family.empty()) throw PreconditionError("instance needs a family");
  return s;
}

json SpecToJson(const InstanceSpec& s) {
  return {{"family", s.family}, {"n", s.n},         {"d", s.d},
          {"eps", s.eps},       {"k", s.k},         {"pattern", s.pattern},
          {"block", s.block},   {"base", s.base},   {"isolated", s.isolated},
          {"seed", s.seed}};
}

void ApplyWalker(const ExperimentConfig& c, WalkerConfig& w) {
  if (c.c_L) w.c_L = *c.c_L;
  if (c.c_K) w.c_K = *c.c_K;
  if (c.c_T) w.c_T = *c.c_T;
}

CycleTesterConfig CycleConfig(const ExperimentConfig& c) {
  CycleTesterConfig out;
  if (c.c3) out.c3 = *c.c3;
  if (c.tau_rounds) out.tau_rounds = *c.tau_rounds;
  ApplyWalker(c, out.walker);
  ApplyWalker(c, out.direct_walker);
  return out;
}

TreeTesterConfig TreeConfig(const ExperimentConfig& c) {
  TreeTesterConfig out;
  if (c.max_explored) out.max_explored = *c.max_explored;
  return out;
}

struct TesterRun {
  Verdict verdict;
  std::size_t walk_length = 0;
};

TesterRun RunTester(const ExperimentConfig& c, QueryOracle& oracle,
                    std::uint64_t seed) {
  TesterRun out;
  const std::string& t = c.tester;
  if (t == "cycle" || t == "cycle_direct" || t == "cycle_unbounded") {
    CycleRunInfo info;
    out.verdict = t == "cycle"
                      ? TestCycleFree(oracle, c.eps, CycleConfig(c), seed, &info)
                      : TestCycleFreeDirect(oracle, c.eps, CycleConfig(c),
                                            seed, &info);
    out.walk_length = info.params.length;
  } else if (t == "ck") {
    CkMinorConfig ck;
    ck.cycle = CycleConfig(c);
    if (c.eps_scale) ck.eps_scale = *c.eps_scale;
    CkRunInfo info;
    out.verdict = TestCkMinorFree(oracle, c.k, c.eps, ck, seed, &info);
    out.walk_length = info.cycle.params.length;
  } else if (t == "triangle_edge") {
    out.verdict = TestTrianglePlusEdge(oracle, c.eps, CycleConfig(c), seed);
  } else if (t == "path") {
    PathTesterConfig p;
    if (c.path_c) p.c = *c.path_c;
    out.verdict = TestPathMinorFree(oracle, c.k, c.eps, p, seed);
  } else if (t == "star") {
    out.verdict = TestStarMinorFree(oracle, c.k, c.eps, seed);
  } else if (t == "tree") {
    RootedTree tree = RootedTree::FromPattern(Pattern::Parse(c.pattern), 0);
    out.verdict = TestTreeMinorFree(oracle, tree, c.eps, TreeConfig(c), seed);
  } else if (t == "forest") {
    out.verdict = TestForestMinorFree(oracle, Pattern::Parse(c.pattern), c.eps,
                                      TreeConfig(c), seed);
  } else if (t == "star_unbounded") {
    StarUnboundedConfig s;
    if (c.sample_factor) s.sample_factor = *c.sample_factor;
    out.verdict = TestStarUnbounded(oracle, c.k, c.eps, s, seed);
  } else {
    throw PreconditionError("unknown tester: " + t);
  }
  return out;
}

// The minor a rejection must exhibit, if the tester promises one.
std::optional<Pattern> ExpectedPattern(const ExperimentConfig& c) {
  const std::string& t = c.tester;
  if (t == "path") return Pattern::Path(c.k);
  if (t == "star" || t == "star_unbounded") return Pattern::Star(c.k);
  if (t == "triangle_edge") return Pattern::TrianglePlusEdge();
  if (t == "tree") {
    return Pattern::FromTree(
        RootedTree::FromPattern(Pattern::Parse(c.pattern), 0));
  }
  if (t == "forest") return Pattern::Parse(c.pattern);
  return std::nullopt;
}

bool Verify(const ExperimentConfig& c, const Graph& g, const Certificate& cert) {
  VerifyOptions options;
  if (c.tester == "ck") options.min_cycle_length = c.k;
  if (!VerifyCertificate(g, cert, options).ok()) return false;
  if (auto expected = ExpectedPattern(c)) {
    const auto* w = std::get_if<MinorWitness>(&cert);
    if (w == nullptr) return false;
    return w->pattern.size() == expected->size() &&
           w->pattern.edges() == expected->edges();
  }
  return std::holds_alternative<SimpleCycle>(cert);
}

TrialRecord RunTrial(const ExperimentConfig& c, const Instance& inst,
                     std::size_t trial) {
  TrialRecord r;
  r.trial = trial;
  QueryOracle oracle(inst.graph, c.budget);
  const auto start = std::chrono::steady_clock::now();
  try {
    TesterRun run = RunTester(c, oracle, DeriveSeed(c.seed, trial));
    const Verdict& v = run.verdict;
    r.walk_length = run.walk_length;
    r.truncated = v.truncated;
    r.sampling_failed = v.sampling_failed;
    r.exhaustive = v.exhaustive;
    r.lift_failed = v.lift_failed;
    if (v.reject) {
      r.verdict = "reject";
      if (!v.certificate) {
        throw InternalError("rejection without a certificate");
      }
      r.cert_kind = CertificateKind(*v.certificate);
      r.cert_size = CertificateSize(*v.certificate);
      r.verified = Verify(c, inst.graph, *v.certificate);
      r.certificate = CertificateToJson(*v.certificate);
    } else {
      r.verdict = "accept";
    }
  } catch (const BudgetExhausted&) {
    r.verdict = "budget";
  }
  r.neighbor_queries = oracle.neighbor_queries();
  r.degree_queries = oracle.degree_queries();
  if (c.timing) {
    r.wall_us = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::microseconds>(
            std::chrono::steady_clock::now() - start)
            .count());
  }
  return r;
}

std::uint64_t NearestRank(const std::vector<std::uint64_t>& sorted, double q) {
  if (sorted.empty()) return 0;
  auto rank = static_cast<std::size_t>(
      std::ceil(q * static_cast<double>(sorted.size()) - 1e-9));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return sorted[rank - 1];
}

json SummaryJson(const Summary& s) {
  return {{"trials", s.trials},
          {"rejects", s.rejects},
          {"reject_rate", s.reject_rate},
          {"budget_exhausted", s.budget_exhausted},
          {"truncated", s.truncated},
          {"sampling_failed", s.sampling_failed},
          {"unverified", s.unverified},
          {"queries", {{"min", s.queries_min},
                       {"p50", s.queries_p50},
                       {"p90", s.queries_p90},
                       {"max", s.queries_max}}},
          {"neighbor_queries_p50", s.neighbor_queries_p50},
          {"max_certificate_size", s.max_cert_size}};
}

}  // namespace

ExperimentConfig ParseExperimentConfig(const std::string& json_text) {
  json j = Parse(json_text, "config");
  CheckKeys(j,
            {"tester", "instance", "eps", "k", "pattern", "trials", "seed",
             "budget", "threads", "timing", "calibration"},
            "config");
  ExperimentConfig c;
  Read(j, "tester", c.tester);
  if (!kTesters.contains(c.tester)) {
    throw PreconditionError("unknown tester: " + c.tester);
  }
  if (!j.contains("instance")) throw PreconditionError("config needs instance");
  c.instance = SpecFromJson(j.at("instance"));
  Read(j, "eps", c.eps);
  Read(j, "k", c.k);
  Read(j, "pattern", c.pattern);
  Read(j, "trials", c.trials);
  Read(j, "seed", c.seed);
  ReadOptional(j, "budget", c.budget);
  Read(j, "threads", c.threads);
  Read(j, "timing", c.timing);
  if (j.contains("calibration")) {
    const json& cal = j.at("calibration");
    CheckKeys(cal,
              {"c3", "c_L", "c_K", "c_T", "tau_rounds", "eps_scale", "path_c",
               "max_explored", "sample_factor"},
              "calibration");
    ReadOptional(cal, "c3", c.c3);
    ReadOptional(cal, "c_L", c.c_L);
    ReadOptional(cal, "c_K", c.c_K);
    ReadOptional(cal, "c_T", c.c_T);
    ReadOptional(cal, "tau_rounds", c.tau_rounds);
    ReadOptional(cal, "eps_scale", c.eps_scale);
    ReadOptional(cal, "path_c", c.path_c);
    ReadOptional(cal, "max_explored", c.max_explored);
    ReadOptional(cal, "sample_factor", c.sample_factor);
  }
  if (c.threads == 0) throw PreconditionError("threads must be >= 1");
  return c;
}

std::string ExperimentConfigToJson(const ExperimentConfig& c) {
  json cal = json::object();
  auto put = [&](const char* key, const auto& value) {
    if (value) cal[key] = *value;
  };
  put("c3", c.c3);
  put("c_L", c.c_L);
  put("c_K", c.c_K);
  put("c_T", c.c_T);
  put("tau_rounds", c.tau_rounds);
  put("eps_scale", c.eps_scale);
  put("path_c", c.path_c);
  put("max_explored", c.max_explored);
  put("sample_factor", c.sample_factor);
  json j = {{"tester", c.tester},   {"instance", SpecToJson(c.instance)},
            {"eps", c.eps},         {"k", c.k},
            {"pattern", c.pattern}, {"trials", c.trials},
            {"seed", c.seed},       {"threads", c.threads},
            {"timing", c.timing},   {"calibration", cal}};
  j["budget"] = c.budget ? json(*c.budget) : json(nullptr);
  return j.dump();
}

InstanceSpec ParseInstanceSpec(const std::string& json_text) {
  return SpecFromJson(Parse(json_text, "instance"));
}

std::string GroundTruthToJson(const GroundTruth& t) {
  json j = {{"family", t.family},
            {"n", t.n},
            {"d", t.d},
            {"eps_target", t.eps_target},
            {"k", t.k},
            {"seed", t.seed},
            {"cycle_free_distance", t.cycle_free_distance},
            {"pattern", t.pattern},
            {"certified_minor_free", t.certified_minor_free}};
  j["minor_distance_lower_bound"] =
      t.minor_distance_lower_bound ? json(*t.minor_distance_lower_bound)
                                   : json(nullptr);
  j["witness"] = t.witness ? json::parse(CertificateToJson(*t.witness))
                           : json(nullptr);
  return j.dump(2);
}

ExperimentResult RunExperiment(const ExperimentConfig& config) {
  return RunExperimentOn(config, Generate(config.instance));
}

ExperimentResult RunExperimentOn(const ExperimentConfig& config,
                                 const Instance& instance) {
  if (!kTesters.contains(config.tester)) {
    throw PreconditionError("unknown tester: " + config.tester);
  }
  ExperimentResult out;
  out.records.resize(config.trials);
  const std::size_t workers = std::min(config.threads, config.trials);
  if (workers <= 1) {
    for (std::size_t i = 0; i < config.trials; ++i) {
      out.records[i] = RunTrial(config, instance, i);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < config.trials && !failed;
             i = next++) {
          try {
            out.records[i] = RunTrial(config, instance, i);
          } catch (...) {
            if (!failed.exchange(true)) error = std::current_exception();
          }
        }
      });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }
  out.summary = Summarize(out.records);
  return out;
}

Summary Summarize(const std::vector<TrialRecord>& records) {
  Summary s;
  s.trials = records.size();
  std::vector<std::uint64_t> queries, neighbor;
  for (const auto& r : records) {
    s.rejects += r.verdict == "reject";
    s.budget_exhausted += r.verdict == "budget";
    s.truncated += r.truncated;
    s.sampling_failed += r.sampling_failed;
    s.unverified += r.verdict == "reject" && !r.verified;
    s.max_cert_size = std::max(s.max_cert_size, r.cert_size);
    queries.push_back(r.neighbor_queries + r.degree_queries);
    neighbor.push_back(r.neighbor_queries);
  }
  std::sort(queries.begin(), queries.end());
  std::sort(neighbor.begin(), neighbor.end());
  if (!queries.empty()) {
    s.reject_rate =
        static_cast<double>(s.rejects) / static_cast<double>(s.trials);
    s.queries_min = queries.front();
    s.queries_max = queries.back();
  }
  s.queries_p50 = NearestRank(queries, 0.5);
  s.queries_p90 = NearestRank(queries, 0.9);
  s.neighbor_queries_p50 = NearestRank(neighbor, 0.5);
  return s;
}

std::string TrialCsvHeader() {
  return "trial,verdict,cert_kind,cert_size,verified,neighbor_queries,"
         "degree_queries,walk_length,truncated,sampling_failed,exhaustive,"
         "lift_failed,wall_us";
}

std::string TrialCsvRow(const TrialRecord& r) {
  std::ostringstream out;
  out << r.trial << ',' << r.verdict << ',' << r.cert_kind << ','
      << r.cert_size << ',' << (r.verdict == "reject" ? (r.verified ? "true" : "false") : "")
      << ',' << r.neighbor_queries << ',' << r.degree_queries << ','
      << r.walk_length << ',' << r.truncated << ',' << r.sampling_failed
      << ',' << r.exhaustive << ',' << r.lift_failed << ',' << r.wall_us;
  return out.str();
}

std::string TrialsToCsv(const std::vector<TrialRecord>& records) {
  std::string out = TrialCsvHeader() + "\n";
  for (const auto& r : records) out += TrialCsvRow(r) + "\n";
  return out;
}

std::string SummaryToJson(const ExperimentConfig& config, const Summary& s) {
  json j = SummaryJson(s);
  j["config"] = json::parse(ExperimentConfigToJson(config));
  return j.dump(2);
}

std::optional<double> LogLogSlope(const std::vector<double>& x,
                                  const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0) || !(y[i] > 0)) return std::nullopt;
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  const auto count = static_cast<double>(x.size());
  mx /= count;
  my /= count;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  if (sxx == 0) return std::nullopt;
  return sxy / sxx;
}

SweepResult RunSweep(const ExperimentConfig& base, const std::string& axis,
                     const std::vector<double>& values) {
  if (axis != "n" && axis != "eps") {
    throw PreconditionError("sweep axis must be n or eps");
  }
  SweepResult out;
  out.axis = axis;
  std::vector<double> xs, ys;
  for (double value : values) {
    ExperimentConfig c = base;
    if (axis == "n") {
      if (!(value >= 1) || value != std::floor(value)) {
        throw PreconditionError("n values must be positive integers");
      }
      c.instance.n = static_cast<std::size_t>(value);
    } else {
      c.eps = value;
    }
    ExperimentResult r = RunExperiment(c);
    out.points.push_back({value, r.summary});
    xs.push_back(value);
    ys.push_back(static_cast<double>(r.summary.neighbor_queries_p50));
  }
  if (axis == "n") out.slope = LogLogSlope(xs, ys);
  return out;
}

std::string SweepToCsv(const SweepResult& sweep) {
  std::ostringstream out;
  out << sweep.axis
      << ",trials,rejects,reject_rate,queries_p50,queries_p90,"
         "neighbor_queries_p50,budget_exhausted,unverified\n";
  for (const auto& p : sweep.points) {
    const Summary& s = p.summary;
    const bool integral = p.value == std::floor(p.value) && std::abs(p.value) < 1e15;
    out << (integral ? json(static_cast<std::int64_t>(p.value)) : json(p.value)).dump()
        << ',' << s.trials << ',' << s.rejects << ','
        << json(s.reject_rate).dump() << ',' << s.queries_p50 << ','
        << s.queries_p90 << ',' << s.neighbor_queries_p50 << ','
        << s.budget_exhausted << ',' << s.unverified << '\n';
  }
  return out.str();
}

std::string SweepToJson(const ExperimentConfig& base, const SweepResult& sweep) {
  json points = json::array();
  for (const auto& p : sweep.points) {
    json s = SummaryJson(p.summary);
    s["value"] = p.value;
    points.push_back(s);
  }
  json j = {{"axis", sweep.axis},
            {"points", points},
            {"config", json::parse(ExperimentConfigToJson(base))}};
  j["slope"] = sweep.slope ? json(*sweep.slope) : json(nullptr);
  return j.dump(2);
}

}  // namespace minorprop
