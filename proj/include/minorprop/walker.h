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

// Random-walk tester for (generalized) 2-colorability. From each of T
// random starts it runs K lazy walks of length L and keeps, per start, the
// parity with which every visited vertex was reached. Reaching a vertex
// with both parities closes an odd walk, which is reduced to a simple odd
// cycle. Never rejects a legally 2-colorable graph.

#ifndef MINORPROP_WALKER_H_
#define MINORPROP_WALKER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "minorprop/certificate.h"
#include "minorprop/labeling.h"
#include "minorprop/query_oracle.h"
#include "minorprop/rng.h"
#include "minorprop/view.h"

namespace minorprop {

// A walk from `start`. steps[j] is the j-th vertex (steps[0] == start)
// together with the parity of the prefix ending there. Lazy steps that
// stay in place are not recorded.
struct WalkRecord {
  VertexId start = 0;
  std::vector<std::pair<VertexId, int>> steps;
};

// L = ceil(c_L * log2(n) / eps^3), K = ceil(c_K * sqrt(n) * log2(n) /
// eps^2), T = ceil(c_T / eps). Explicit overrides win over the formula.
struct WalkerConfig {
  double c_L = 4;
  double c_K = 1;
  double c_T = 8;
  std::optional<std::size_t> length;
  std::optional<std::size_t> walks;
  std::optional<std::size_t> starts;
  // Exact BFS 2-coloring once T * K * L >= n * d.
  bool allow_exhaustive = true;
};

struct WalkerParams {
  std::size_t starts = 1;   // T
  std::size_t walks = 1;    // K
  std::size_t length = 1;   // L
  bool exhaustive = false;
};

WalkerParams ScheduleWalker(std::size_t n, std::size_t d, double eps,
                            const WalkerConfig& config);

struct WalkOutcome {
  // A simple cycle of the view with odd generalized length.
  std::optional<std::vector<VertexId>> odd_cycle;
  // Some start exhausted its sampling attempts and was skipped.
  bool sampling_failed = false;
  WalkerParams params;
};

// Runs the tester on `view`. Throws PreconditionError unless eps is in
// (0, 1]; BudgetExhausted propagates from the underlying oracle.
WalkOutcome WalkTest(GraphView& view, double eps, const WalkerConfig& config,
                     Rng& rng);

// Same, on the input graph itself. Without a labeling every edge is neq,
// which is plain bipartiteness.
Verdict Test2Colorable(QueryOracle& oracle, double eps,
                       const EdgeLabeling* labeling,
                       const WalkerConfig& config, std::uint64_t seed);

// Splices a.steps[0..ia] with the reverse of b.steps[0..ib] into a closed
// walk of odd parity and returns a simple odd cycle contained in it.
// Throws MalformedWalk unless both walks share the start, end at the same
// vertex, and reach it with different parities.
std::vector<VertexId> ExtractOddCycle(const WalkRecord& a, std::size_t ia,
                                      const WalkRecord& b, std::size_t ib);

// Exact generalized 2-coloring of every component reachable from the
// view's roots; returns an odd cycle if some component has none.
std::optional<std::vector<VertexId>> ExhaustiveOddCycle(GraphView& view);

}  // namespace minorprop

#endif  // MINORPROP_WALKER_H_
