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

#ifndef MINORPROP_WITNESS_H_
#define MINORPROP_WITNESS_H_

#include <vector>

#include "minorprop/certificate.h"
#include "minorprop/graph.h"
#include "minorprop/pattern.h"

namespace minorprop {

// Fills in connecting edges for the given branch sets by scanning g.
// Throws InternalError if some pattern edge has no realizing graph edge.
MinorWitness CompleteWitness(const Graph& g, const Pattern& h,
                             std::vector<std::vector<Vertex>> sets);

// Renames vertex x of `w` to to_global[x].
MinorWitness MapWitness(const MinorWitness& w,
                        const std::vector<Vertex>& to_global);

// Disjoint union of witnesses; the pattern is the disjoint union of their
// patterns, nodes numbered in input order.
MinorWitness UnionWitness(const std::vector<MinorWitness>& parts);

// Splits a cycle (length >= k) into k consecutive arcs, giving a C_k minor.
MinorWitness CycleWitness(const Graph& g, const SimpleCycle& cycle,
                          std::size_t k);

// A simple path, read as a P_{len} witness with singleton branch sets.
MinorWitness PathWitness(const Graph& g, const std::vector<Vertex>& path);

}  // namespace minorprop

#endif  // MINORPROP_WITNESS_H_
