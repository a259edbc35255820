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

#ifndef MINORPROP_LABELING_H_
#define MINORPROP_LABELING_H_

#include <cstdint>
#include <map>

#include "minorprop/graph.h"

namespace minorprop {

// TAU labels an edge 1 or 2 (subdivision count). LAMBDA labels it eq or
// neq (required color relation). Both are a single fair bit per edge.
enum class LabelDomain { kTau, kLambda };

// A uniformly random edge labeling, materialized lazily. The bit of an
// edge is a keyed hash of (seed, u, v, multiplicity), so the label never
// depends on the order in which edges are first touched.
class EdgeLabeling {
 public:
  EdgeLabeling(std::uint64_t seed, LabelDomain domain)
      : seed_(seed), domain_(domain) {}

  // The raw label bit. For TAU, true means tau = 2; for LAMBDA, true
  // means eq.
  bool Bit(const CanonicalEdge& e) const;
  bool Bit(VertexId a, VertexId b) const { return Bit(CanonicalEdge::Of(a, b)); }

  // tau(e) in {1, 2}.
  int Tau(const CanonicalEdge& e) const { return Bit(e) ? 2 : 1; }
  // True iff lambda(e) = eq.
  bool IsEq(const CanonicalEdge& e) const { return Bit(e); }
  // Color flip across the edge: 1 for neq, 0 for eq. A cycle admits no
  // legal coloring iff its flips sum to an odd number.
  int Flip(VertexId a, VertexId b) const { return Bit(a, b) ? 0 : 1; }

  LabelDomain domain() const { return domain_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t materialized() const { return cache_.size(); }

 private:
  std::uint64_t seed_;
  LabelDomain domain_;
  mutable std::map<CanonicalEdge, bool> cache_;
};

}  // namespace minorprop

#endif  // MINORPROP_LABELING_H_
