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

// Testers for graphs without a degree bound. Distances here count edges
// against 2|E| rather than dN. The oracle's degree bound is ignored
// except where a sampler is told to trust it.

#ifndef MINORPROP_UNBOUNDED_H_
#define MINORPROP_UNBOUNDED_H_

#include <cstddef>
#include <cstdint>

#include "minorprop/certificate.h"
#include "minorprop/cycle_tester.h"
#include "minorprop/graph.h"
#include "minorprop/query_oracle.h"
#include "minorprop/rng.h"

namespace minorprop {

enum class EdgeSamplerMethod {
  // d_max is the largest degree seen so far, after a warm-up of
  // ceil(sqrt(N)) degree queries. Exact once every vertex of larger
  // degree has been seen; edges at unseen heavier vertices are
  // under-sampled until then.
  kAdaptiveMaxDegree,
  // d_max is fixed by the caller and must bound every degree. Exactly
  // uniform.
  kKnownMaxDegree,
};

struct EdgeSamplerConfig {
  EdgeSamplerMethod method = EdgeSamplerMethod::kAdaptiveMaxDegree;
  // kKnownMaxDegree only; 0 means N - 1.
  std::size_t known_max_degree = 0;
  // Attempts per sample are capped at attempt_factor * d_max. With
  // |E| >= N/2 an attempt succeeds with probability >= 1/d_max, so the
  // cap fails with probability <= e^-attempt_factor.
  double attempt_factor = 32;
};

// Rejection sampling: a uniform vertex v is kept with probability
// deg(v) / d_max, then a uniform one of its incidences gives the edge.
// Each attempt costs one degree query, a kept one a neighbor query too.
class EdgeSampler {
 public:
  EdgeSampler(QueryOracle& oracle, const EdgeSamplerConfig& config = {});

  // Requires |E| >= N/2 (unchecked). Throws SamplingFailed at the cap,
  // which an edgeless or near-edgeless graph hits almost surely, and
  // BudgetExhausted from the oracle. The edge is oriented: `first` is
  // the vertex that was kept, `second` its sampled neighbor.
  std::pair<Vertex, Vertex> Sample(Rng& rng);
  // Degree of the kept endpoint of the last sample.
  std::size_t last_degree() const { return last_degree_; }

  std::size_t d_max() const { return d_max_; }
  std::uint64_t attempts() const { return attempts_; }
  // Worst relative deviation from uniform the method guarantees: 0 for
  // kKnownMaxDegree; for kAdaptiveMaxDegree none holds a priori, and the
  // reported 1/4 is the target its tests check empirically.
  double bias_bound() const;

 private:
  void WarmUp(Rng& rng);

  QueryOracle& oracle_;
  EdgeSamplerConfig config_;
  std::size_t d_max_ = 1;
  bool warmed_up_ = false;
  std::uint64_t attempts_ = 0;
  std::size_t last_degree_ = 0;
};

// Degree-oblivious cycle-freeness: the direct route, which never reads
// degrees. eps is the edge-fraction distance.
Verdict TestCycleFreeUnbounded(QueryOracle& oracle, double eps,
                               const CycleTesterConfig& config,
                               std::uint64_t seed);

struct StarUnboundedConfig {
  EdgeSamplerConfig sampler;
  // Edge samples: ceil(sample_factor / eps). A far graph whose distance
  // sits on heavy vertices has >= eps |E| such edges, so with bias <= 1/4
  // a sample misses all of them with probability <= e^-(0.75 * 2).
  double sample_factor = 2;
};

struct StarUnboundedInfo {
  bool heavy_in_emulation = false;
  bool minor_in_emulation = false;
  bool heavy_in_samples = false;
  std::size_t edge_samples = 0;
  std::size_t emulation_trials = 0;
};

// K_{1,k}-minor-freeness without a degree bound. Emulates the star tester
// with d = k - 1 and proximity eps / (4k), querying the degree of every
// vertex it meets; a vertex of degree >= k rejects with itself and k of
// its neighbors. Then samples edges and rejects on a heavy endpoint.
// Throws PreconditionError unless k >= 3 and eps is in (0, 1].
Verdict TestStarUnbounded(QueryOracle& oracle, std::size_t k, double eps,
                          const StarUnboundedConfig& config,
                          std::uint64_t seed,
                          StarUnboundedInfo* info = nullptr);

struct ExplorerConfig {
  // BFS depth around each random start.
  std::size_t depth = 1;
};

struct DistinguishingStats {
  std::size_t n = 0;
  std::uint64_t budget = 0;
  std::size_t trials = 0;
  // Trials that saw a vertex of degree >= 3.
  std::size_t detected_clique = 0;
  std::size_t detected_isolated = 0;
  double rate_clique = 0;
  double rate_isolated = 0;
  // Mean queries spent per trial on the clique instance.
  double mean_queries = 0;
};

// Explores random relabelings of clique+cycle and of cycle+isolated with
// `budget` queries each: a random start, its degree, then BFS to
// `config.depth` reading degrees of new vertices; repeated until the
// budget runs out. Detection means a degree answer >= 3. Requires n to
// be a perfect square >= 16.
DistinguishingStats DistinguishingExperiment(std::size_t n,
                                             std::uint64_t budget,
                                             std::size_t trials,
                                             std::uint64_t seed,
                                             const ExplorerConfig& config = {});

}  // namespace minorprop

#endif  // MINORPROP_UNBOUNDED_H_
