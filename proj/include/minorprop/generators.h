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

// Seeded instance families with ground truth. Every generator is a pure
// function of its parameters and seed.

#ifndef MINORPROP_GENERATORS_H_
#define MINORPROP_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "minorprop/certificate.h"
#include "minorprop/graph.h"
#include "minorprop/pattern.h"

namespace minorprop {

struct GroundTruth {
  std::string family;
  std::size_t n = 0;
  std::size_t d = 0;
  double eps_target = 0;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  // Edges to delete to reach a forest (|E| - n + c), always filled.
  std::size_t cycle_free_distance = 0;
  // Lower bound on edges to delete to remove every `pattern` minor.
  std::optional<std::size_t> minor_distance_lower_bound;
  std::string pattern;
  // One planted copy of the pattern.
  std::optional<MinorWitness> witness;
  // Every component was checked minor-free by the exact oracle (or is a
  // path/cycle whose minors are known by construction).
  bool certified_minor_free = false;
};

struct Instance {
  Graph graph;
  GroundTruth truth;
};

// Random forest with max degree <= d: each vertex attaches to a random
// earlier vertex with spare degree, or starts a new tree (prob 1/16).
Instance GenForest(std::size_t n, std::size_t d, std::uint64_t seed);

// Random spanning tree (max degree d-1) plus ceil(eps*d*n) random extra
// edges, so the cycle-free distance is exactly ceil(eps*d*n).
// Throws PreconditionError when eps*d*n > (d-2)*n/2 or d < 3.
Instance GenFarFromCycleFree(std::size_t n, std::size_t d, double eps,
                             std::uint64_t seed);

// Hamiltonian cycle 1..n plus a random perfect matching that avoids cycle
// edges (resampled). 3-regular. Throws PreconditionError unless n is even
// and at least 4.
Instance GenLowerBoundFamily(std::size_t n, std::uint64_t seed);

enum class PlantBase { kPath, kTree };

// n / block_size disjoint blocks; each holds a copy of `pattern` (a tree
// or cycle with max degree <= d) on which the remaining block vertices
// hang as a path or random tree. The witness names the first copy.
Instance GenPlantedMinor(std::size_t n, std::size_t d, const Pattern& pattern,
                         std::size_t block_size, PlantBase base,
                         std::uint64_t seed);

// Cycle on n - sqrt(n) vertices plus K_sqrt(n), or sqrt(n) isolated
// vertices when `isolated` is set. Degree bound sqrt(n) - 1 for both.
// Throws PreconditionError unless n is a square with sqrt(n) >= 4.
Instance GenCliquePlusCycle(std::size_t n, bool isolated);

// Pattern-minor-free instance: disjoint components chosen per pattern
// shape (short paths and stars for paths; paths, cycles and few-leaf
// spiders for stars; small trees, paths and cycles for other trees;
// cacti of cycles shorter than k for C_k). Every component with at most
// 20 vertices is re-checked by the exact oracle.
Instance GenMinorFree(std::size_t n, std::size_t d, const Pattern& pattern,
                      std::uint64_t seed);

// floor(n/k) disjoint C_k joined into a tree by single edges, leftovers as
// pendant vertices. Exactly one deletion per cycle is needed.
Instance GenDisjointCycles(std::size_t n, std::size_t d, std::size_t k,
                           std::uint64_t seed);

// floor(n/(k+1)) copies of K_{1,k} chained leaf to leaf.
Instance GenLinkedStars(std::size_t n, std::size_t d, std::size_t k,
                        std::uint64_t seed);

Instance GenPath(std::size_t n, std::size_t d);
Instance GenCycle(std::size_t n, std::size_t d);
Instance GenMatching(std::size_t n, std::size_t d);

// Dispatch by family name, for configs and the CLI.
struct InstanceSpec {
  std::string family;
  std::size_t n = 0;
  std::size_t d = 3;
  double eps = 0;
  std::size_t k = 0;
  std::string pattern;
  std::size_t block = 64;
  std::string base = "tree";
  bool isolated = false;
  std::uint64_t seed = 0;
};
Instance Generate(const InstanceSpec& spec);

// Random relabeling plus shuffled adjacency lists; witness follows.
Instance Scramble(Instance inst, std::uint64_t seed);

}  // namespace minorprop

#endif  // MINORPROP_GENERATORS_H_
