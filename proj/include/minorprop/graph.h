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

#ifndef MINORPROP_GRAPH_H_
#define MINORPROP_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace minorprop {

// Vertices of a materialized graph are 1..n. 0 is the null answer.
using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = 0;

// Vertices of a virtual graph (reductions, subdivisions). Ids 1..n are the
// base graph's vertices; larger ids are synthetic.
using VertexId = std::uint64_t;

// An undirected edge with u <= v. `multiplicity` numbers parallel copies
// 0, 1, ... in insertion order.
struct CanonicalEdge {
  VertexId u = 0;
  VertexId v = 0;
  std::uint32_t multiplicity = 0;

  static CanonicalEdge Of(VertexId a, VertexId b, std::uint32_t mult = 0) {
    return a <= b ? CanonicalEdge{a, b, mult} : CanonicalEdge{b, a, mult};
  }
  auto operator<=>(const CanonicalEdge&) const = default;
};

// An undirected graph on vertices 1..n with a declared degree bound d.
// Adjacency lists preserve insertion order; the query model exposes that
// order through neighbor indices.
class Graph {
 public:
  Graph() = default;
  // Creates an edgeless graph.
  Graph(std::size_t n, std::size_t degree_bound, bool multigraph = false);

  // Builds a graph and validates it. Throws PreconditionError on self-loops
  // or parallel edges in a simple graph, out-of-range endpoints, or a
  // degree above `degree_bound`.
  static Graph FromEdges(std::size_t n, std::size_t degree_bound,
                         std::span<const std::pair<Vertex, Vertex>> edges,
                         bool multigraph = false);

  // Appends an edge. Same checks as FromEdges.
  void AddEdge(Vertex u, Vertex v);

  std::size_t n() const { return adj_.empty() ? 0 : adj_.size() - 1; }
  std::size_t degree_bound() const { return degree_bound_; }
  bool is_multigraph() const { return multigraph_; }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::size_t max_degree() const;
  bool HasEdge(Vertex u, Vertex v) const;

  // Sorted canonical edge list; parallel copies carry distinct multiplicity.
  std::vector<CanonicalEdge> Edges() const;

  // Same edge multiset, adjacency lists in a seeded random order.
  Graph ShuffledAdjacency(std::uint64_t seed) const;
  // Relabels vertex v as perm[v - 1]. perm must be a permutation of 1..n.
  Graph Relabeled(std::span<const Vertex> perm) const;
  // Subgraph without the listed edges (one copy removed per listing).
  Graph WithoutEdges(std::span<const CanonicalEdge> removed) const;
  // Induced subgraph on `keep` (sorted, distinct). Vertex keep[i] becomes
  // i + 1 in the result.
  Graph Induced(std::span<const Vertex> keep) const;

  // Rechecks every structural invariant. Throws PreconditionError.
  void Validate() const;

  // Connected components as sorted vertex lists, ordered by least vertex.
  std::vector<std::vector<Vertex>> Components() const;

  bool operator==(const Graph& other) const;

 private:
  void CheckEndpoints(Vertex u, Vertex v) const;

  std::size_t degree_bound_ = 0;
  bool multigraph_ = false;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adj_;  // adj_[0] unused
};

// Text format: header "N d" or "N d multi", then one "u v" line per edge.
// Lines starting with '#' are comments. Writing emits the sorted edge list,
// so load-then-save is byte-stable for sorted input.
Graph ReadGraph(std::istream& in);
Graph ReadGraphFile(const std::string& path);
void WriteGraph(std::ostream& out, const Graph& g);
void WriteGraphFile(const std::string& path, const Graph& g);

}  // namespace minorprop

#endif  // MINORPROP_GRAPH_H_
