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

#include "minorprop/cycle_tester.h"

#include <algorithm>
#include <utility>

#include "minorprop/errors.h"
#include "minorprop/rng.h"

namespace minorprop {

GTauView::GTauView(QueryOracle& oracle, const EdgeLabeling& tau)
    : owned_base_(std::in_place, oracle), base_(*owned_base_), tau_(tau) {}

GTauView::GTauView(GraphView& base, const EdgeLabeling& tau)
    : base_(base), tau_(tau) {}

std::size_t GTauView::vertex_count_estimate() const {
  return (base_.degree_bound() + 1) * base_.vertex_count_estimate();
}

VertexId GTauView::Neighbor(VertexId v, std::size_t i) {
  if (IsAux(v)) {
    auto [a, b] = AuxEndpoints(v);
    if (i == 1) return a;
    if (i == 2) return b;
    return 0;
  }
  const VertexId u = base_.Neighbor(v, i);
  if (u == 0) return 0;
  if (tau_.Tau(CanonicalEdge::Of(u, v)) == 2) {
    return AuxVertex(static_cast<Vertex>(v), static_cast<Vertex>(u));
  }
  return u;
}

std::optional<VertexId> GTauView::TrySample(Rng& rng) {
  const std::size_t d = base_.degree_bound();
  const std::optional<VertexId> v = base_.TrySample(rng);
  if (!v) return std::nullopt;
  return SampleOutcome(static_cast<Vertex>(*v),
                       rng.Uniform(0, 2 * (d + 1) - 1));
}

std::optional<VertexId> GTauView::SampleOutcome(Vertex v, std::uint64_t r) {
  const std::size_t d = base_.degree_bound();
  if (r < 2) return v;
  const std::uint64_t slot = r - 2;
  if (slot >= d) return std::nullopt;
  const VertexId u = base_.Neighbor(v, slot + 1);
  if (u == 0 || tau_.Tau(CanonicalEdge::Of(u, v)) != 2) {
    return std::nullopt;
  }
  return AuxVertex(v, static_cast<Vertex>(u));
}

std::size_t GTauView::sample_attempts() const {
  return (base_.degree_bound() + 1) *
         std::max(base_.sample_attempts(),
                  SampleRetryCap(base_.vertex_count_estimate()));
}

std::vector<VertexId> GTauView::Roots() const { return base_.Roots(); }

SimpleCycle ContractGTauCycle(const std::vector<VertexId>& cycle) {
  SimpleCycle out;
  for (VertexId x : cycle) {
    if (!IsAux(x)) out.vertices.push_back(static_cast<Vertex>(x));
  }
  if (out.vertices.size() < 3) {
    throw InternalError("contracted cycle shorter than 3");
  }
  return out;
}

Graph MaterializeGTau(const Graph& g, const std::vector<int>& tau_of_edge) {
  const auto edges = g.Edges();
  if (tau_of_edge.size() != edges.size()) {
    throw PreconditionError("one tau value per edge expected");
  }
  std::size_t aux = 0;
  for (int t : tau_of_edge) aux += t == 2 ? 1 : 0;
  Graph out(g.n() + aux, std::max<std::size_t>(g.degree_bound(), 2),
            g.is_multigraph());
  auto next = static_cast<Vertex>(g.n());
  for (std::size_t j = 0; j < edges.size(); ++j) {
    const auto u = static_cast<Vertex>(edges[j].u);
    const auto v = static_cast<Vertex>(edges[j].v);
    if (tau_of_edge[j] == 2) {
      ++next;
      out.AddEdge(u, next);
      out.AddEdge(next, v);
    } else {
      out.AddEdge(u, v);
    }
  }
  return out;
}

Graph MaterializeGTau(const Graph& g, const EdgeLabeling& tau) {
  std::vector<int> t;
  for (const auto& e : g.Edges()) t.push_back(tau.Tau(e));
  return MaterializeGTau(g, t);
}

Graph BuildDoubleCover(const Graph& g, const EdgeLabeling& lambda) {
  if (g.is_multigraph()) throw PreconditionError("double cover needs a simple graph");
  const auto n = static_cast<Vertex>(g.n());
  Graph out(2 * g.n(), 3 * g.degree_bound(), /*multigraph=*/true);
  for (Vertex v = 1; v <= n; ++v) {
    for (std::size_t j = 0; j < 2 * g.degree(v); ++j) out.AddEdge(v, n + v);
  }
  for (const auto& e : g.Edges()) {
    const auto u = static_cast<Vertex>(e.u);
    const auto v = static_cast<Vertex>(e.v);
    if (lambda.IsEq(e)) {
      out.AddEdge(u, n + v);
      out.AddEdge(n + u, v);
    } else {
      out.AddEdge(u, v);
      out.AddEdge(n + u, n + v);
    }
  }
  return out;
}

WalkerConfig CalibratedCycleWalker() {
  WalkerConfig c;
  c.c_L = 2.4e-7;
  c.c_K = 2.0e-6;
  c.c_T = 0.0125;
  return c;
}

WalkerConfig CalibratedDirectWalker() {
  WalkerConfig c;
  c.c_L = 6.0e-5;
  c.c_K = 4.0e-5;
  c.c_T = 0.05;
  return c;
}

Verdict TestCycleFree(QueryOracle& oracle, double eps,
                      const CycleTesterConfig& config, std::uint64_t seed,
                      CycleRunInfo* info) {
  if (!(eps > 0 && eps <= 1)) throw PreconditionError("eps must be in (0,1]");
  const std::size_t d = std::max<std::size_t>(oracle.degree_bound(), 1);
  const double walker_eps = config.c3 * eps / (2.0 * static_cast<double>(d));
  Verdict verdict;
  for (std::size_t round = 0; round < config.tau_rounds; ++round) {
    EdgeLabeling tau(DeriveSeed(seed, 2 * round), LabelDomain::kTau);
    GTauView view(oracle, tau);
    Rng rng(DeriveSeed(seed, 2 * round + 1));
    WalkOutcome w = WalkTest(view, walker_eps, config.walker, rng);
    if (info != nullptr) *info = CycleRunInfo{w.params, walker_eps};
    verdict.exhaustive = w.params.exhaustive;
    verdict.sampling_failed = verdict.sampling_failed || w.sampling_failed;
    if (w.odd_cycle) {
      Verdict r = Verdict::Reject(ContractGTauCycle(*w.odd_cycle));
      r.exhaustive = verdict.exhaustive;
      r.sampling_failed = verdict.sampling_failed;
      return r;
    }
  }
  return verdict;
}

Verdict TestCycleFreeDirect(QueryOracle& oracle, double eps,
                            const CycleTesterConfig& config,
                            std::uint64_t seed, CycleRunInfo* info) {
  if (!(eps > 0 && eps <= 1)) throw PreconditionError("eps must be in (0,1]");
  const double walker_eps = config.c3 * eps;
  Verdict verdict;
  for (std::size_t round = 0; round < config.tau_rounds; ++round) {
    EdgeLabeling lambda(DeriveSeed(seed, 2 * round), LabelDomain::kLambda);
    OracleView view(oracle, &lambda);
    Rng rng(DeriveSeed(seed, 2 * round + 1));
    WalkOutcome w = WalkTest(view, walker_eps, config.direct_walker, rng);
    if (info != nullptr) *info = CycleRunInfo{w.params, walker_eps};
    verdict.exhaustive = w.params.exhaustive;
    if (w.odd_cycle) {
      SimpleCycle c;
      for (VertexId x : *w.odd_cycle) c.vertices.push_back(static_cast<Vertex>(x));
      Verdict r = Verdict::Reject(std::move(c));
      r.exhaustive = verdict.exhaustive;
      return r;
    }
  }
  return verdict;
}

}  // namespace minorprop
