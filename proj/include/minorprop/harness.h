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

// Experiment driver: runs a tester for a number of trials on one
// generated instance, re-verifies every certificate, and renders
// per-trial CSV rows and summary JSON. Everything except wall time is a
// function of the config.

#ifndef MINORPROP_HARNESS_H_
#define MINORPROP_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minorprop/generators.h"

namespace minorprop {

// Tester ids: cycle, cycle_direct, ck, triangle_edge, path, star, tree,
// forest, star_unbounded, cycle_unbounded.
struct ExperimentConfig {
  std::string tester;
  InstanceSpec instance;
  double eps = 0.1;
  // Path length in edges (path), leaf count (star, star_unbounded), or
  // cycle length (ck).
  std::size_t k = 0;
  // Pattern text for tree and forest, e.g. "spider:2,1,1".
  std::string pattern;
  std::size_t trials = 1;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> budget;
  // Worker threads; results are merged in trial order.
  std::size_t threads = 1;
  // Record wall time per trial (breaks byte-identical CSV output).
  bool timing = false;

  // Calibration overrides; unset keeps the library default.
  std::optional<double> c3;
  std::optional<double> c_L;
  std::optional<double> c_K;
  std::optional<double> c_T;
  std::optional<std::size_t> tau_rounds;
  std::optional<double> eps_scale;
  std::optional<double> path_c;
  std::optional<std::size_t> max_explored;
  std::optional<double> sample_factor;
};

// Parses a config object. Unknown keys and missing required keys
// ("tester", "instance") throw PreconditionError.
ExperimentConfig ParseExperimentConfig(const std::string& json_text);
std::string ExperimentConfigToJson(const ExperimentConfig& config);
InstanceSpec ParseInstanceSpec(const std::string& json_text);
std::string GroundTruthToJson(const GroundTruth& truth);

struct TrialRecord {
  std::size_t trial = 0;
  // accept, reject, or budget (the oracle refused a query).
  std::string verdict;
  std::string cert_kind;
  std::size_t cert_size = 0;
  bool verified = false;
  std::uint64_t neighbor_queries = 0;
  std::uint64_t degree_queries = 0;
  // Walk length L of the cycle testers' walker; 0 for other testers.
  std::size_t walk_length = 0;
  bool truncated = false;
  bool sampling_failed = false;
  bool exhaustive = false;
  bool lift_failed = false;
  std::uint64_t wall_us = 0;
  // The certificate as JSON; empty unless rejected.
  std::string certificate;
};

struct Summary {
  std::size_t trials = 0;
  std::size_t rejects = 0;
  std::size_t budget_exhausted = 0;
  std::size_t truncated = 0;
  std::size_t sampling_failed = 0;
  std::size_t unverified = 0;
  double reject_rate = 0;
  // Nearest-rank quantiles of neighbor + degree queries.
  std::uint64_t queries_min = 0;
  std::uint64_t queries_p50 = 0;
  std::uint64_t queries_p90 = 0;
  std::uint64_t queries_max = 0;
  std::uint64_t neighbor_queries_p50 = 0;
  std::size_t max_cert_size = 0;
};

struct ExperimentResult {
  std::vector<TrialRecord> records;
  Summary summary;
};

// Generates the instance, then runs trial i with seed DeriveSeed(seed, i)
// on a fresh oracle. Throws PreconditionError for bad configs.
ExperimentResult RunExperiment(const ExperimentConfig& config);
// Same, on a given instance.
ExperimentResult RunExperimentOn(const ExperimentConfig& config,
                                 const Instance& instance);

Summary Summarize(const std::vector<TrialRecord>& records);

std::string TrialCsvHeader();
std::string TrialCsvRow(const TrialRecord& r);
std::string TrialsToCsv(const std::vector<TrialRecord>& records);
std::string SummaryToJson(const ExperimentConfig& config, const Summary& s);

// Least-squares slope of log(y) against log(x); nullopt for fewer than
// two distinct x or any non-positive value.
std::optional<double> LogLogSlope(const std::vector<double>& x,
                                  const std::vector<double>& y);

struct SweepPoint {
  double value = 0;
  Summary summary;
};

struct SweepResult {
  std::string axis;
  std::vector<SweepPoint> points;
  // Slope of median neighbor queries against n; nullopt unless the axis
  // is n and there are >= 2 points.
  std::optional<double> slope;
};

// Axis "n" sets instance.n; axis "eps" sets the tester's eps.
SweepResult RunSweep(const ExperimentConfig& base, const std::string& axis,
                     const std::vector<double>& values);
std::string SweepToCsv(const SweepResult& sweep);
std::string SweepToJson(const ExperimentConfig& base, const SweepResult& sweep);

}  // namespace minorprop

#endif  // MINORPROP_HARNESS_H_
