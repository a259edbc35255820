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

// Query-level views of a (possibly virtual) graph. Testers that walk or
// explore are written against GraphView so that reductions can hand them
// an emulated graph built on top of a QueryOracle.

#ifndef MINORPROP_VIEW_H_
#define MINORPROP_VIEW_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "minorprop/graph.h"
#include "minorprop/labeling.h"
#include "minorprop/query_oracle.h"
#include "minorprop/rng.h"

namespace minorprop {

// Neighbor lists are prefix-closed: Neighbor(v, i) == 0 implies
// Neighbor(v, j) == 0 for all j > i. Vertex id 0 is never a vertex.
class GraphView {
 public:
  virtual ~GraphView() = default;

  virtual std::size_t degree_bound() const = 0;
  // Upper estimate of the number of vertices, within a constant factor.
  virtual std::size_t vertex_count_estimate() const = 0;
  // i-th neighbor, 1-based; 0 when v has fewer than i neighbors.
  virtual VertexId Neighbor(VertexId v, std::size_t i) = 0;
  // One sampling attempt. Every vertex is returned with the same
  // probability; the attempt may fail.
  virtual std::optional<VertexId> TrySample(Rng& rng) = 0;
  // Attempts a sampler may make before giving up.
  virtual std::size_t sample_attempts() const = 0;
  // Vertices from which a full traversal reaches every vertex.
  virtual std::vector<VertexId> Roots() const = 0;
  // Generalized parity of the edge {a, b}: 1 = neq (odd), 0 = eq (even).
  virtual int Flip(VertexId /*a*/, VertexId /*b*/) { return 1; }
};

// The input graph itself, through a QueryOracle, optionally labeled.
class OracleView : public GraphView {
 public:
  OracleView(QueryOracle& oracle, const EdgeLabeling* labeling = nullptr);

  std::size_t degree_bound() const override;
  std::size_t vertex_count_estimate() const override;
  VertexId Neighbor(VertexId v, std::size_t i) override;
  std::optional<VertexId> TrySample(Rng& rng) override;
  std::size_t sample_attempts() const override { return 1; }
  std::vector<VertexId> Roots() const override;
  int Flip(VertexId a, VertexId b) override;

 private:
  QueryOracle& oracle_;
  const EdgeLabeling* labeling_;
};

// ceil(4 * log2(n)), at least 1: the retry cap for rejection samplers.
std::size_t SampleRetryCap(std::size_t n);

// All neighbors of v in the view, stopping at the first 0.
std::vector<VertexId> ViewNeighbors(GraphView& view, VertexId v);

}  // namespace minorprop

#endif  // MINORPROP_VIEW_H_
