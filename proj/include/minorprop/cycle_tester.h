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

// One-sided cycle-freeness testers. The subdivision route draws a random
// tau : E -> {1, 2}, subdivides every tau = 2 edge through an auxiliary
// vertex a_e, and runs the bipartiteness walker on the result. A forest
// stays bipartite under every tau; a graph far from a forest becomes far
// from bipartite for most tau. The direct route labels the edges eq/neq
// at random instead and looks for a labeled odd cycle in G itself.

#ifndef MINORPROP_CYCLE_TESTER_H_
#define MINORPROP_CYCLE_TESTER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "minorprop/certificate.h"
#include "minorprop/labeling.h"
#include "minorprop/query_oracle.h"
#include "minorprop/view.h"
#include "minorprop/walker.h"

namespace minorprop {

// Auxiliary vertex ids carry this bit; originals are 1..N.
inline constexpr VertexId kAuxBit = VertexId{1} << 63;

// a_{u,v} for the base edge {u, v}.
constexpr VertexId AuxVertex(Vertex u, Vertex v) {
  return u < v ? kAuxBit | (VertexId{u} << 32) | v
               : kAuxBit | (VertexId{v} << 32) | u;
}
constexpr bool IsAux(VertexId x) { return (x & kAuxBit) != 0; }
// Endpoints (u < v) of the base edge behind an auxiliary vertex.
constexpr std::pair<Vertex, Vertex> AuxEndpoints(VertexId x) {
  return {static_cast<Vertex>((x & ~kAuxBit) >> 32),
          static_cast<Vertex>(x & 0xffffffffULL)};
}

// G_tau over a base view. tau is drawn lazily from `tau`. Base vertex ids
// must fit in 32 bits.
class GTauView : public GraphView {
 public:
  // Over the input graph itself.
  GTauView(QueryOracle& oracle, const EdgeLabeling& tau);
  // Over a virtual graph; `base` must outlive the view.
  GTauView(GraphView& base, const EdgeLabeling& tau);
  GTauView(const GTauView&) = delete;
  GTauView& operator=(const GTauView&) = delete;

  std::size_t degree_bound() const override { return base_.degree_bound(); }
  // (d + 1) times the base estimate bounds the number of virtual vertices.
  std::size_t vertex_count_estimate() const override;
  VertexId Neighbor(VertexId v, std::size_t i) override;
  // One base attempt yields v; output v with probability 1/(d+1), else
  // pick slot i with probability 1/(2(d+1)) and output a_{v,u} when the
  // i-th neighbor u exists and tau = 2. A uniform base sampler thus gives
  // every virtual vertex the same probability; over the oracle it is
  // exactly 1/((d+1) N) per attempt.
  std::optional<VertexId> TrySample(Rng& rng) override;
  // The attempt for base vertex v and slot r in [0, 2(d+1)).
  std::optional<VertexId> SampleOutcome(Vertex v, std::uint64_t r);
  // (d + 1) * max(base attempts, ceil(4 log2 n)).
  std::size_t sample_attempts() const override;
  std::vector<VertexId> Roots() const override;

 private:
  std::optional<OracleView> owned_base_;
  GraphView& base_;
  const EdgeLabeling& tau_;
};

// Drops the auxiliary vertices of a cycle in G_tau, giving the cycle of G
// with each subdivided edge contracted back.
SimpleCycle ContractGTauCycle(const std::vector<VertexId>& cycle);

// G_tau materialized: vertices 1..N keep their ids, auxiliary vertices
// follow as N+1, N+2, ... in the order of g.Edges(). tau_of_edge is
// indexed like g.Edges() and holds 1 or 2.
Graph MaterializeGTau(const Graph& g, const std::vector<int>& tau_of_edge);
Graph MaterializeGTau(const Graph& g, const EdgeLabeling& tau);

// The eq/neq double cover: 2N vertices, v and its twin N+v joined by
// 2 deg(v) parallel edges; a neq edge {u,v} becomes {u,v} and {N+u,N+v},
// an eq edge becomes {u,N+v} and {N+u,v}. Every vertex has degree
// 3 deg(v). Degree bound 3d. Throws PreconditionError on a multigraph.
Graph BuildDoubleCover(const Graph& g, const EdgeLabeling& lambda);

// Walker constants fixed by one calibration pass at d = 3, eps = 0.1
// (see README). They multiply the walker's own proximity parameter,
// which differs between the two routes, hence two presets.
WalkerConfig CalibratedCycleWalker();
WalkerConfig CalibratedDirectWalker();

struct CycleTesterConfig {
  // Lemma constant: the walker runs with proximity c3 * eps / (2d).
  double c3 = 0.25;
  WalkerConfig walker = CalibratedCycleWalker();
  WalkerConfig direct_walker = CalibratedDirectWalker();
  // Independent tau draws; reject if any draw rejects.
  std::size_t tau_rounds = 1;
};

struct CycleRunInfo {
  WalkerParams params;
  double walker_eps = 0;
};

// Subdivision route. Rejections carry a simple cycle of G.
Verdict TestCycleFree(QueryOracle& oracle, double eps,
                      const CycleTesterConfig& config, std::uint64_t seed,
                      CycleRunInfo* info = nullptr);

// Direct route: uniform eq/neq labels, walker on G with proximity
// c3 * eps. Never inspects degrees, so it also runs on graphs without a
// meaningful degree bound.
Verdict TestCycleFreeDirect(QueryOracle& oracle, double eps,
                            const CycleTesterConfig& config,
                            std::uint64_t seed, CycleRunInfo* info = nullptr);

}  // namespace minorprop

#endif  // MINORPROP_CYCLE_TESTER_H_
