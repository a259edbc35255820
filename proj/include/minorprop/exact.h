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

// Exponential-time ground truth for small graphs. Every routine here reads
// the whole graph and either answers exactly or throws InstanceTooLarge.

#ifndef MINORPROP_EXACT_H_
#define MINORPROP_EXACT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "minorprop/certificate.h"
#include "minorprop/graph.h"
#include "minorprop/labeling.h"
#include "minorprop/pattern.h"

namespace minorprop {

// Any cycle of g, or nullopt if g is a forest. Parallel edges and
// self-loops of a multigraph are reported as short cycles.
std::optional<SimpleCycle> FindAnyCycle(const Graph& g);
bool IsCycleFree(const Graph& g);
// Edges to delete to reach a forest: |E| - n + #components.
std::size_t ExactCycleFreeDistance(const Graph& g);

// A cycle with an odd number of flips (all edges flip when labeling is
// null), or nullopt if a legal coloring exists.
std::optional<SimpleCycle> FindOddCycle(const Graph& g,
                                        const EdgeLabeling* labeling);
// Minimum number of violated constraints over all 2-colorings. Parallel
// edges count separately. Throws InstanceTooLarge if some component has
// more than `max_component` vertices.
std::size_t ExactMinViolations(const Graph& g, const EdgeLabeling* labeling,
                               std::size_t max_component = 24);

// Simple cycle of length >= min_length, or nullopt.
std::optional<SimpleCycle> FindCycleAtLeast(const Graph& g,
                                            std::size_t min_length,
                                            std::uint64_t max_steps = 200'000'000);

struct MinorSearchLimits {
  // Largest connected component the generic search accepts.
  std::size_t max_component = 20;
  std::size_t max_pattern = 8;
  // Search-tree nodes before giving up with InstanceTooLarge.
  std::uint64_t max_steps = 50'000'000;
};

// Exact minor search. Paths, cycles and stars use dedicated exact
// routines; other patterns use the generic branch-set search.
std::optional<MinorWitness> ExactFindMinor(const Graph& g, const Pattern& h,
                                           const MinorSearchLimits& limits = {});
bool ExactHasMinor(const Graph& g, const Pattern& h,
                   const MinorSearchLimits& limits = {});
// The generic search alone: grows connected branch sets for the pattern
// nodes in BFS order, each new set touching its already placed neighbors.
std::optional<MinorWitness> ExactFindMinorGeneric(
    const Graph& g, const Pattern& h, const MinorSearchLimits& limits = {});

// Fewest edges whose removal leaves g free of h-minors.
std::size_t ExactMinorFreeDistance(const Graph& g, const Pattern& h,
                                   std::size_t max_edges = 16);

// Every k-spot of g (sorted sets, sorted lexicographically), by subset
// enumeration.
std::vector<std::vector<Vertex>> ExactSpots(const Graph& g, std::size_t k,
                                            std::size_t max_vertices = 12);

struct ExpansionResult {
  bool expanding = true;
  std::vector<Vertex> violating_set;
  std::size_t ball_size = 0;
  std::uint64_t sets_checked = 0;
};
// Checks cut(S) >= eps * |S| * d for every connected S inside the
// radius-R ball around s. Disconnected S follow from their components.
ExpansionResult CheckExpansion(const Graph& g, Vertex s, std::size_t radius,
                               double eps, std::size_t max_ball = 18);

// BFS distances from `sources` (distance 0) in g minus `blocked`.
// Unreached vertices get SIZE_MAX. Index 0 unused.
std::vector<std::size_t> BfsDistances(const Graph& g,
                                      const std::vector<Vertex>& sources,
                                      const std::vector<bool>* blocked = nullptr);

}  // namespace minorprop

#endif  // MINORPROP_EXACT_H_
