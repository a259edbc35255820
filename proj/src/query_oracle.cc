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

#include "minorprop/query_oracle.h"

#include <string>

#include "minorprop/errors.h"

namespace minorprop {

QueryOracle::QueryOracle(const Graph& graph,
                         std::optional<std::uint64_t> budget)
    : graph_(graph), budget_(budget) {}

void QueryOracle::Charge(Vertex v) {
  if (v < 1 || v > graph_.n()) {
    throw PreconditionError("query on vertex out of range: " +
                            std::to_string(v));
  }
  if (budget_ && total_queries() >= *budget_) {
    throw BudgetExhausted("query budget of " + std::to_string(*budget_) +
                          " exhausted");
  }
}

Vertex QueryOracle::Neighbor(Vertex v, std::size_t i) {
  if (i == 0) throw PreconditionError("neighbor index is 1-based");
  Charge(v);
  ++neighbor_queries_;
  auto list = graph_.neighbors(v);
  return i <= list.size() ? list[i - 1] : kNoVertex;
}

std::size_t QueryOracle::Degree(Vertex v) {
  Charge(v);
  ++degree_queries_;
  return graph_.degree(v);
}

}  // namespace minorprop
