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

// C_k-minor-freeness testers. A graph is C_k-minor-free iff it has no
// simple cycle of length >= k. The tester collapses every k-spot S (a
// 2-connected vertex set whose induced subgraph has only short cycles and
// whose outside detours are long) into a hub vertex <S> adjacent to S,
// deletes the edges inside S, and runs the cycle-freeness tester on the
// result G'. For k = 4 the hubs are all triangles instead of 4-spots.
// A C_k-minor-free graph yields a forest G'; a cycle of G' lifts to a
// cycle of length >= k in G.

#ifndef MINORPROP_CK_MINOR_H_
#define MINORPROP_CK_MINOR_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "minorprop/certificate.h"
#include "minorprop/cycle_tester.h"
#include "minorprop/errors.h"
#include "minorprop/graph.h"
#include "minorprop/query_oracle.h"
#include "minorprop/view.h"

namespace minorprop {

// Raised by spot discovery when it meets a simple cycle of length >= k.
// The cycle is a valid rejection certificate.
class LongCycleFound : public MinorpropError {
 public:
  explicit LongCycleFound(SimpleCycle cycle);
  const SimpleCycle& cycle() const { return cycle_; }

 private:
  SimpleCycle cycle_;
};

// Incidence lists read through an oracle, each vertex queried once.
class LocalGraph {
 public:
  explicit LocalGraph(QueryOracle& oracle) : oracle_(oracle) {}

  const std::vector<Vertex>& Neighbors(Vertex v);
  bool Adjacent(Vertex u, Vertex v);
  std::size_t n() const { return oracle_.n(); }
  std::size_t degree_bound() const { return oracle_.degree_bound(); }
  // Vertices whose lists have been read, sorted.
  std::vector<Vertex> Known() const;
  // Subgraph induced on `keep` (sorted, distinct; lists are read on
  // demand). keep[i] becomes vertex i + 1.
  Graph Induced(const std::vector<Vertex>& keep);

 private:
  QueryOracle& oracle_;
  std::unordered_map<Vertex, std::vector<Vertex>> adj_;
};

struct Spot {
  std::vector<Vertex> vertices;  // sorted
  std::size_t k = 0;
  SimpleCycle anchor;  // the short cycle the closure grew from
};

// All k-spots containing v, sorted by vertex set. Throws LongCycleFound
// on a simple cycle of length in [k, 2k] through v, or one of length >= k
// inside a closure; PreconditionError unless k >= 4.
std::vector<Spot> FindSpots(LocalGraph& local, Vertex v, std::size_t k);
std::vector<Spot> FindSpots(QueryOracle& oracle, Vertex v, std::size_t k);

// Hub ids carry this bit; original vertices need N < 2^31.
inline constexpr VertexId kHubBit = VertexId{1} << 31;
constexpr bool IsHub(VertexId x) { return (x & kHubBit) != 0; }

// Degree bound of G': d^2 for k = 4, d^(k-1) otherwise (saturating).
std::size_t GPrimeDegreeBound(std::size_t d, std::size_t k);

// One sampling attempt of G' spelled out as integer choices, so that
// the sampling tree can be enumerated. `pick` indexes the spot (k >= 5)
// or the ordered neighbor pair (k = 4); the attempt outputs when
// accept < numerator of the acceptance probability.
struct GPrimeDraw {
  Vertex v = 0;
  bool hub_branch = false;
  std::uint64_t pick = 0;
  std::uint64_t accept = 0;
};

// G' over an oracle, built on the fly. Original vertices keep their ids;
// hubs get kHubBit | index in order of discovery. Neighbor lists of an
// original vertex list its surviving base edges in oracle order, then its
// hubs; a hub lists its members in increasing order.
class GPrimeView : public GraphView {
 public:
  GPrimeView(QueryOracle& oracle, std::size_t k);

  std::size_t degree_bound() const override { return degree_bound_; }
  // N plus the hub count bound (N * C(d,2) / 3 triangles, dN/2 spots).
  std::size_t vertex_count_estimate() const override;
  VertexId Neighbor(VertexId x, std::size_t i) override;
  // Each vertex of G' has probability 1/(2dN) per attempt (k >= 5) or
  // d^-2/(2N) (k = 4).
  std::optional<VertexId> TrySample(Rng& rng) override;
  std::optional<VertexId> SampleOutcome(const GPrimeDraw& draw);
  // Number of values `pick` ranges over at v (0: the branch fails), and
  // of values `accept` ranges over given the pick.
  std::uint64_t PickRange(Vertex v, bool hub_branch);
  std::uint64_t AcceptRange(Vertex v, bool hub_branch, std::uint64_t pick);
  // 2 d ceil(4 log2 N) for k >= 5, 2 d^2 ceil(4 log2 N) for k = 4.
  std::size_t sample_attempts() const override;
  std::vector<VertexId> Roots() const override;

  std::size_t k() const { return k_; }
  const std::vector<VertexId>& Adjacency(VertexId x);
  // Hubs containing the original vertex v.
  const std::vector<VertexId>& HubsOf(Vertex v);
  const std::vector<Vertex>& HubMembers(VertexId hub) const;
  std::size_t hub_count() const { return hubs_.size(); }
  LocalGraph& local() { return local_; }

 private:
  // Sorted member sets of the hubs through v: triangles or spots.
  std::vector<std::vector<Vertex>> HubSets(Vertex v);
  VertexId Intern(const std::vector<Vertex>& members);

  LocalGraph local_;
  std::size_t k_;
  std::size_t d_;
  std::size_t degree_bound_;
  std::vector<std::vector<Vertex>> hubs_;
  std::map<std::vector<Vertex>, VertexId> hub_ids_;
  std::unordered_map<Vertex, std::vector<VertexId>> hubs_of_;
  std::unordered_map<Vertex, std::vector<VertexId>> adjacency_;
};

// G' of a whole graph: vertices 1..N, then hub j as N + 1 + j with
// members hubs[j]. Throws LongCycleFound if spot discovery meets a long
// cycle anywhere.
struct MaterializedGPrime {
  Graph graph;
  std::vector<std::vector<Vertex>> hubs;
};
MaterializedGPrime MaterializeGPrime(const Graph& g, std::size_t k);

// Turns a simple cycle of G' into a simple cycle of G of length >= k:
// expands every hub hop u <S> w through S, and when that is not simple
// or too short searches exactly among the cycle's vertices and hubs, then
// in everything `view` has read. nullopt when both searches fail.
std::optional<SimpleCycle> LiftGPrimeCycle(GPrimeView& view,
                                           const std::vector<VertexId>& cycle,
                                           std::uint64_t max_steps);

struct CkMinorConfig {
  // The cycle tester runs on G' with proximity eps_scale * eps * d^-k
  // (capped at 1). Calibrated once on disjoint C_4 instances (see README).
  double eps_scale = 400;
  CycleTesterConfig cycle;
  // Spot neighborhoods grow like d^O(k).
  std::size_t max_k = 6;
  // Step cap of each exact search while lifting.
  std::uint64_t lift_steps = 2'000'000;
};

struct CkRunInfo {
  CycleRunInfo cycle;
  double gprime_eps = 0;
  std::size_t hubs = 0;
  bool long_cycle_shortcut = false;
};

// Rejections carry a simple cycle of length >= k. Throws
// PreconditionError unless 4 <= k <= max_k and eps is in (0, 1].
Verdict TestCkMinorFree(QueryOracle& oracle, std::size_t k, double eps,
                        const CkMinorConfig& config, std::uint64_t seed,
                        CkRunInfo* info = nullptr);

// Tester for the triangle-with-pendant-edge minor. Runs the cycle tester
// while recording what it reads, then scans the recorded subgraph for
// cycles; a cycle with a vertex of degree > 2 yields the minor, a cycle
// without one is an isolated cycle of G and is dropped from the scan.
Verdict TestTrianglePlusEdge(QueryOracle& oracle, double eps,
                             const CycleTesterConfig& config,
                             std::uint64_t seed);

// The minor from a cycle of g and an extra edge {x, y} with x on the
// cycle: y off the cycle gives cycle + pendant, y on it a chord.
MinorWitness TrianglePlusEdgeWitness(const SimpleCycle& cycle, Vertex x,
                                     Vertex y);

}  // namespace minorprop

#endif  // MINORPROP_CK_MINOR_H_
