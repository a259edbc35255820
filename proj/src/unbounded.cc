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

#include "minorprop/unbounded.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <utility>
#include <vector>

#include "minorprop/errors.h"
#include "minorprop/exact.h"
#include "minorprop/generators.h"
#include "minorprop/pattern.h"
#include "minorprop/witness.h"

namespace minorprop {
namespace {

void CheckEps(double eps) {
  if (!(eps > 0 && eps <= 1)) throw PreconditionError("eps must be in (0,1]");
}

std::size_t CeilCount(double x) {
  if (!(x < 1e9)) throw PreconditionError("count too large");
  return static_cast<std::size_t>(std::ceil(x - 1e-9));
}

// K_{1,k} on x and its first k neighbors; requires deg(x) >= k.
MinorWitness HeavyWitness(QueryOracle& oracle, Vertex x, std::size_t k) {
  MinorWitness w;
  w.pattern = Pattern::Star(k);
  w.branch_sets.assign(k + 1, {});
  w.branch_sets[0] = {x};
  for (std::size_t i = 1; i <= k; ++i) {
    w.branch_sets[i] = {oracle.Neighbor(x, i)};
  }
  for (const auto& [a, b] : w.pattern.edges()) {
    w.connecting_edges.emplace_back(w.branch_sets[a][0], w.branch_sets[b][0]);
  }
  return w;
}

// Explored subgraph with local ids 1..size in discovery order.
class LightExploration {
 public:
  Vertex Add(Vertex v) {
    auto [it, fresh] = local_.try_emplace(v, 0);
    if (fresh) {
      global_.push_back(v);
      it->second = static_cast<Vertex>(global_.size());
    }
    return it->second;
  }
  void AddEdge(Vertex a, Vertex b) {
    Vertex x = Add(a), y = Add(b);
    if (x > y) std::swap(x, y);
    edges_.emplace_back(x, y);
  }
  Graph Build(std::size_t d) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    return Graph::FromEdges(global_.size(), d, edges_);
  }
  std::vector<Vertex> ToGlobal() const {
    std::vector<Vertex> out{kNoVertex};
    out.insert(out.end(), global_.begin(), global_.end());
    return out;
  }

 private:
  std::unordered_map<Vertex, Vertex> local_;
  std::vector<Vertex> global_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

}  // namespace

EdgeSampler::EdgeSampler(QueryOracle& oracle, const EdgeSamplerConfig& config)
    : oracle_(oracle), config_(config) {
  if (oracle.n() == 0) throw PreconditionError("edge sampler needs N >= 1");
  if (config.method == EdgeSamplerMethod::kKnownMaxDegree) {
    d_max_ = config.known_max_degree == 0 ? oracle.n() - 1
                                          : config.known_max_degree;
    d_max_ = std::max<std::size_t>(d_max_, 1);
    warmed_up_ = true;
  }
}

double EdgeSampler::bias_bound() const {
  return config_.method == EdgeSamplerMethod::kKnownMaxDegree ? 0.0 : 0.25;
}

void EdgeSampler::WarmUp(Rng& rng) {
  const auto rounds = static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(oracle_.n()))));
  for (std::size_t i = 0; i < rounds; ++i) {
    const auto v = static_cast<Vertex>(rng.Uniform(1, oracle_.n()));
    d_max_ = std::max(d_max_, oracle_.Degree(v));
  }
  warmed_up_ = true;
}

std::pair<Vertex, Vertex> EdgeSampler::Sample(Rng& rng) {
  if (!warmed_up_) WarmUp(rng);
  const bool adaptive =
      config_.method == EdgeSamplerMethod::kAdaptiveMaxDegree;
  for (std::uint64_t tries = 0;
       static_cast<double>(tries) < config_.attempt_factor *
                                        static_cast<double>(d_max_);
       ++tries) {
    ++attempts_;
    const auto v = static_cast<Vertex>(rng.Uniform(1, oracle_.n()));
    const std::size_t deg = oracle_.Degree(v);
    if (deg > d_max_) {
      if (!adaptive) {
        throw PreconditionError("vertex degree above the known maximum");
      }
      d_max_ = deg;
    }
    if (deg == 0 || rng.Uniform(1, d_max_) > deg) continue;
    const auto i = static_cast<std::size_t>(rng.Uniform(1, deg));
    last_degree_ = deg;
    return {v, oracle_.Neighbor(v, i)};
  }
  throw SamplingFailed("edge sampler hit its attempt cap");
}

Verdict TestCycleFreeUnbounded(QueryOracle& oracle, double eps,
                               const CycleTesterConfig& config,
                               std::uint64_t seed) {
  return TestCycleFreeDirect(oracle, eps, config, seed);
}

Verdict TestStarUnbounded(QueryOracle& oracle, std::size_t k, double eps,
                          const StarUnboundedConfig& config,
                          std::uint64_t seed, StarUnboundedInfo* info) {
  CheckEps(eps);
  if (k < 3) throw PreconditionError("unbounded star tester needs k >= 3");
  StarUnboundedInfo local;
  StarUnboundedInfo& out = info != nullptr ? *info : local;
  out = {};
  Rng rng(seed);

  // Emulation of the bounded-degree star tester with d = k - 1.
  const double inner_eps = eps / (4 * static_cast<double>(k));
  const std::size_t trials = CeilCount(4 / inner_eps);
  const std::size_t layers = CeilCount(2 * static_cast<double>(k) / inner_eps);
  const Pattern star = Pattern::Star(k);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    ++out.emulation_trials;
    const auto s = static_cast<Vertex>(rng.Uniform(1, oracle.n()));
    std::unordered_map<Vertex, std::size_t> degree;
    // Degree of a newly met vertex; heavy vertices end the run.
    auto meet = [&](Vertex x) -> bool {
      auto [it, fresh] = degree.try_emplace(x, 0);
      if (!fresh) return false;
      it->second = oracle.Degree(x);
      return it->second >= k;
    };
    if (meet(s)) {
      out.heavy_in_emulation = true;
      return Verdict::Reject(HeavyWitness(oracle, s, k));
    }
    LightExploration ex;
    ex.Add(s);
    std::vector<Vertex> level{s};
    for (std::size_t l = 0; l < layers && !level.empty() && level.size() < k;
         ++l) {
      std::vector<Vertex> next;
      for (Vertex x : level) {
        const std::size_t deg = degree.at(x);
        for (std::size_t i = 1; i <= deg; ++i) {
          const Vertex w = oracle.Neighbor(x, i);
          const bool fresh = !degree.contains(w);
          if (meet(w)) {
            out.heavy_in_emulation = true;
            return Verdict::Reject(HeavyWitness(oracle, w, k));
          }
          ex.AddEdge(x, w);
          if (fresh) next.push_back(w);
        }
      }
      level = std::move(next);
    }
    auto w = ExactFindMinor(ex.Build(k - 1), star);
    if (w) {
      out.minor_in_emulation = true;
      return Verdict::Reject(MapWitness(*w, ex.ToGlobal()));
    }
  }

  // Heavy vertices carrying the distance are found through edge samples.
  EdgeSampler sampler(oracle, config.sampler);
  const std::size_t samples = CeilCount(config.sample_factor / eps);
  Verdict accept = Verdict::Accept();
  for (std::size_t i = 0; i < samples; ++i) {
    std::pair<Vertex, Vertex> e;
    try {
      e = sampler.Sample(rng);
    } catch (const SamplingFailed&) {
      accept.sampling_failed = true;
      return accept;
    }
    ++out.edge_samples;
    if (sampler.last_degree() >= k) {
      out.heavy_in_samples = true;
      return Verdict::Reject(HeavyWitness(oracle, e.first, k));
    }
    if (oracle.Degree(e.second) >= k) {
      out.heavy_in_samples = true;
      return Verdict::Reject(HeavyWitness(oracle, e.second, k));
    }
  }
  return accept;
}

namespace {

// Random starts plus depth-limited BFS until the budget is spent.
// Returns true when some degree answer is >= 3.
bool Explore(QueryOracle& oracle, const ExplorerConfig& config, Rng& rng) {
  try {
    for (;;) {
      const auto s = static_cast<Vertex>(rng.Uniform(1, oracle.n()));
      std::unordered_map<Vertex, std::size_t> degree;
      degree[s] = oracle.Degree(s);
      if (degree[s] >= 3) return true;
      std::vector<Vertex> level{s};
      for (std::size_t l = 0; l < config.depth && !level.empty(); ++l) {
        std::vector<Vertex> next;
        for (Vertex x : level) {
          const std::size_t deg = degree.at(x);
          for (std::size_t i = 1; i <= deg; ++i) {
            const Vertex w = oracle.Neighbor(x, i);
            if (degree.contains(w)) continue;
            degree[w] = oracle.Degree(w);
            if (degree[w] >= 3) return true;
            next.push_back(w);
          }
        }
        level = std::move(next);
      }
    }
  } catch (const BudgetExhausted&) {
    return false;
  }
}

}  // namespace

DistinguishingStats DistinguishingExperiment(std::size_t n,
                                             std::uint64_t budget,
                                             std::size_t trials,
                                             std::uint64_t seed,
                                             const ExplorerConfig& config) {
  const Instance clique = GenCliquePlusCycle(n, false);
  const Instance isolated = GenCliquePlusCycle(n, true);
  DistinguishingStats stats;
  stats.n = n;
  stats.budget = budget;
  stats.trials = trials;
  double queries = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = DeriveSeed(seed, t);
    // Both instances see the same explorer randomness.
    {
      Instance copy = Scramble(clique, trial_seed);
      QueryOracle oracle(copy.graph, budget);
      Rng rng(trial_seed);
      stats.detected_clique += Explore(oracle, config, rng);
      queries += static_cast<double>(oracle.total_queries());
    }
    {
      Instance copy = Scramble(isolated, trial_seed);
      QueryOracle oracle(copy.graph, budget);
      Rng rng(trial_seed);
      stats.detected_isolated += Explore(oracle, config, rng);
    }
  }
  if (trials > 0) {
    const auto tr = static_cast<double>(trials);
    stats.rate_clique = static_cast<double>(stats.detected_clique) / tr;
    stats.rate_isolated = static_cast<double>(stats.detected_isolated) / tr;
    stats.mean_queries = queries / tr;
  }
  return stats;
}

}  // namespace minorprop
