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

#include "minorprop/view.h"

#include <cmath>

namespace minorprop {

OracleView::OracleView(QueryOracle& oracle, const EdgeLabeling* labeling)
    : oracle_(oracle), labeling_(labeling) {}

std::size_t OracleView::degree_bound() const { return oracle_.degree_bound(); }

std::size_t OracleView::vertex_count_estimate() const { return oracle_.n(); }

VertexId OracleView::Neighbor(VertexId v, std::size_t i) {
  return oracle_.Neighbor(static_cast<Vertex>(v), i);
}

std::optional<VertexId> OracleView::TrySample(Rng& rng) {
  if (oracle_.n() == 0) return std::nullopt;
  return rng.Uniform(1, oracle_.n());
}

std::vector<VertexId> OracleView::Roots() const {
  std::vector<VertexId> roots(oracle_.n());
  for (std::size_t v = 0; v < roots.size(); ++v) roots[v] = v + 1;
  return roots;
}

int OracleView::Flip(VertexId a, VertexId b) {
  return labeling_ == nullptr ? 1 : labeling_->Flip(a, b);
}

std::size_t SampleRetryCap(std::size_t n) {
  if (n < 2) return 1;
  return static_cast<std::size_t>(
      std::ceil(4.0 * std::log2(static_cast<double>(n))));
}

std::vector<VertexId> ViewNeighbors(GraphView& view, VertexId v) {
  std::vector<VertexId> out;
  for (std::size_t i = 1; i <= view.degree_bound(); ++i) {
    VertexId u = view.Neighbor(v, i);
    if (u == 0) break;
    out.push_back(u);
  }
  return out;
}

}  // namespace minorprop
