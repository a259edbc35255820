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

#ifndef MINORPROP_QUERY_ORACLE_H_
#define MINORPROP_QUERY_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <optional>

#include "minorprop/graph.h"

namespace minorprop {

// Incidence-list access to a graph. Testers see the graph only through
// this class, which counts every query and enforces an optional budget.
class QueryOracle {
 public:
  explicit QueryOracle(const Graph& graph,
                       std::optional<std::uint64_t> budget = std::nullopt);

  // i-th neighbor of v (1-based), or kNoVertex if deg(v) < i.
  // Throws PreconditionError for v outside 1..n or i == 0, and
  // BudgetExhausted when the budget is already spent.
  Vertex Neighbor(Vertex v, std::size_t i);
  // deg(v). Counted separately from neighbor queries.
  std::size_t Degree(Vertex v);

  std::size_t n() const { return graph_.n(); }
  std::size_t degree_bound() const { return graph_.degree_bound(); }

  std::uint64_t neighbor_queries() const { return neighbor_queries_; }
  std::uint64_t degree_queries() const { return degree_queries_; }
  std::uint64_t total_queries() const {
    return neighbor_queries_ + degree_queries_;
  }
  std::optional<std::uint64_t> budget() const { return budget_; }

 private:
  void Charge(Vertex v);

  const Graph& graph_;
  std::optional<std::uint64_t> budget_;
  std::uint64_t neighbor_queries_ = 0;
  std::uint64_t degree_queries_ = 0;
};

}  // namespace minorprop

#endif  // MINORPROP_QUERY_ORACLE_H_
