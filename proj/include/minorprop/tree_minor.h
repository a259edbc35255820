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

// Constant-query testers for forest minors, and the minor-or-sparse-cut
// machinery behind the general tree tester: BFS dichotomies, the
// recursive `Find`, and the decomposition of a graph accepted by the
// tree tester into minor-free pieces.

#ifndef MINORPROP_TREE_MINOR_H_
#define MINORPROP_TREE_MINOR_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "minorprop/certificate.h"
#include "minorprop/exact.h"
#include "minorprop/graph.h"
#include "minorprop/pattern.h"
#include "minorprop/query_oracle.h"

namespace minorprop {

struct PathTesterConfig {
  // Trials are ceil(c * d^k / eps). Each trial rejects with probability
  // at least eps / (2 d^k) on far inputs, so c = 3 leaves error
  // e^-1.5 < 1/3.
  double c = 3;
};

// Reject iff a random k-step walk from a uniform start traces a simple
// path; the walk is the witness. A step picks one of the d neighbor slots
// uniformly, and an empty slot ends the trial. Throws PreconditionError
// unless k >= 1 and eps is in (0, 1].
Verdict TestPathMinorFree(QueryOracle& oracle, std::size_t k, double eps,
                          const PathTesterConfig& config, std::uint64_t seed);

// ceil(4 / eps) trials, each a BFS from a uniform start that stops after
// ceil(2k / eps) expanded layers, at the first layer with >= k vertices,
// or when the component is exhausted; then an exact K_{1,k} check on the
// explored subgraph. Throws PreconditionError unless k >= 2 and eps is in
// (0, 1].
Verdict TestStarMinorFree(QueryOracle& oracle, std::size_t k, double eps,
                          std::uint64_t seed);

struct TreeTesterConfig {
  // A trial that discovers more vertices than this stops and accepts,
  // setting Verdict::truncated.
  std::size_t max_explored = 100'000;
  // Limits of the exact check; an over-limit check also truncates.
  MinorSearchLimits limits{.max_component = 100'000};
};

// BFS depth k (8d / eps)^(4k+2) for a tree with k nodes, saturating.
double TreeTesterDepth(std::size_t k, std::size_t d, double eps);

// ceil(4 / eps) uniform starts, each explored by BFS to depth
// TreeTesterDepth (in practice until the component is exhausted), then
// an exact T-minor check on the explored subgraph. Throws
// PreconditionError unless T has >= 2 nodes and eps is in (0, 1].
Verdict TestTreeMinorFree(QueryOracle& oracle, const RootedTree& t, double eps,
                          const TreeTesterConfig& config, std::uint64_t seed);

// Component by component: each tree component runs ceil(log_3(3m)) times
// with proximity eps / 2 on the graph minus every vertex earlier
// iterations visited. Accepts at the first component no run rejects;
// otherwise the disjoint component witnesses form an H-minor witness.
// Throws PreconditionError unless h is a forest and eps is in (0, 1].
Verdict TestForestMinorFree(QueryOracle& oracle, const Pattern& h, double eps,
                            const TreeTesterConfig& config, std::uint64_t seed);

// Constants of `Find`. The floor of f is k * floor_base^(4k+2), the
// recursion depth D_1 uses depth_base^(4k_1 - 2), and the guaranteed
// distance bound uses bound_base^(4k - 2). All three bases are 4d / zeta
// in the analysis; smaller bases make the preconditions satisfiable on
// small graphs, at the price that sub-call preconditions may then fail.
struct FindParams {
  double zeta = 0;
  double floor_base = 0;
  double depth_base = 0;
  double bound_base = 0;

  static FindParams Analysis(std::size_t d, double zeta);
};

// max(|F|, k * floor_base^(4k+2)).
double FindF(const FindParams& p, std::size_t k, std::size_t forbidden);
// bound_base^(4k-2) * ln(f / zeta).
double FindDistanceBound(const FindParams& p, std::size_t k, double f);

enum class FindTag { kMinor, kCut };

struct FindOutput {
  FindTag tag = FindTag::kCut;
  // Sorted; disjoint from F, every vertex reachable from v in G - F.
  std::vector<Vertex> set;
  // kMinor: a T-minor inside `set`, branch set h for tree node h, with v
  // in the root's set.
  std::optional<MinorWitness> witness;
  // kCut: `set` with zeta; its cut in the whole graph is zeta-sparse.
  std::optional<SparseCut> cut;
  // Largest G - F distance from v to `set`.
  std::size_t radius = 0;
  // Find invocations in this call tree, this one included.
  std::size_t calls = 1;
};

// Requires v in U, U and F disjoint, |U| >= 4f / zeta and every vertex
// of U within (4 / zeta) ln(f / zeta) of v in G - F; otherwise throws
// PreconditionError (also when a recursive call's requirement fails).
// Throws InternalError if an output would violate its guarantees.
FindOutput Find(const Graph& g, Vertex v, const std::vector<Vertex>& u,
                const RootedTree& t, const std::vector<Vertex>& forbidden,
                const FindParams& params);

// Vertices of S with a neighbor outside S and outside F.
std::vector<Vertex> Boundary(const Graph& g, const std::vector<Vertex>& s,
                             const std::vector<Vertex>& forbidden);

struct DichotomyResult {
  bool cut = false;
  // cut: R, the reached prefix whose next level had <= zeta |R| / 2
  // vertices. Otherwise every reached vertex. Sorted.
  std::vector<Vertex> reached;
  // The last level reached (empty on a cut).
  std::vector<Vertex> last_level;
  std::size_t depth = 0;
};

// BFS from M in G - F for floor(t) levels. Requires M, F disjoint and
// |M| >= (2 / zeta) |F|, which makes every returned cut zeta-sparse in G.
DichotomyResult BfsDichotomy(const Graph& g, const std::vector<Vertex>& m,
                             const std::vector<Vertex>& forbidden, double t,
                             double zeta);

struct CutOrGoodResult {
  bool cut = false;
  // cut: R. Otherwise U_v, the depth-floor(t) ball around `vertex` in G
  // minus (M \ boundary(M)) minus F. Sorted.
  std::vector<Vertex> set;
  Vertex vertex = kNoVertex;
};

// BfsDichotomy from M; without a cut, the boundary vertex of M whose
// ball is largest (ties to the smaller id).
CutOrGoodResult CutOrGood(const Graph& g, const std::vector<Vertex>& m,
                          const std::vector<Vertex>& forbidden, double t,
                          double zeta);

struct Decomposition {
  std::vector<CanonicalEdge> removed;
  // Vertices whose depth-D ball contains a T-minor; their edges go first.
  std::vector<Vertex> bad;
  double rho = 0;
  std::size_t bad_edges = 0;
  std::size_t cut_edges = 0;
  std::size_t find_calls = 0;
  // Components of the final graph, each checked T-minor-free exactly.
  std::vector<std::vector<Vertex>> components;
  // (rho + eps / 2) d n.
  double budget = 0;
};

// Makes g T-minor-free: removes the edges at bad vertices, then marks
// components within depth D of some vertex as minor-free and splits the
// others along zeta-sparse cuts (zeta = eps / 2) from BFS or `Find`.
// D = k * floor_base^(4k+2) with the params' base. Throws
// InstanceTooLarge when an exact check exceeds `limits`, and
// InternalError when a guarantee fails.
Decomposition DecomposeToMinorFree(const Graph& g, const RootedTree& t,
                                   double eps, const FindParams& params,
                                   const MinorSearchLimits& limits = {
                                       .max_component = 4096});

}  // namespace minorprop

#endif  // MINORPROP_TREE_MINOR_H_
