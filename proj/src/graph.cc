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

#include "minorprop/graph.h"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "minorprop/errors.h"
#include "minorprop/rng.h"

namespace minorprop {

Graph::Graph(std::size_t n, std::size_t degree_bound, bool multigraph)
    : degree_bound_(degree_bound), multigraph_(multigraph), adj_(n + 1) {}

Graph Graph::FromEdges(std::size_t n, std::size_t degree_bound,
                       std::span<const std::pair<Vertex, Vertex>> edges,
                       bool multigraph) {
  Graph g(n, degree_bound, multigraph);
  for (const auto& [u, v] : edges) g.AddEdge(u, v);
  return g;
}

void Graph::CheckEndpoints(Vertex u, Vertex v) const {
  if (u < 1 || v < 1 || u > n() || v > n()) {
    throw PreconditionError("edge endpoint out of range: " +
                            std::to_string(u) + " " + std::to_string(v));
  }
}

void Graph::AddEdge(Vertex u, Vertex v) {
  CheckEndpoints(u, v);
  if (!multigraph_) {
    if (u == v) {
      throw PreconditionError("self-loop in simple graph at " +
                              std::to_string(u));
    }
    if (HasEdge(u, v)) {
      throw PreconditionError("parallel edge in simple graph: " +
                              std::to_string(u) + " " + std::to_string(v));
    }
  }
  std::size_t extra = (u == v) ? 2 : 1;
  if (adj_[u].size() + extra > degree_bound_ ||
      adj_[v].size() + 1 > degree_bound_) {
    throw PreconditionError("degree bound " + std::to_string(degree_bound_) +
                            " exceeded by edge " + std::to_string(u) + " " +
                            std::to_string(v));
  }
  adj_[u].push_back(v);
  adj_[v].push_back(u);
  ++edge_count_;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (std::size_t v = 1; v < adj_.size(); ++v) {
    best = std::max(best, adj_[v].size());
  }
  return best;
}

bool Graph::HasEdge(Vertex u, Vertex v) const {
  const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
  Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
  return std::find(a.begin(), a.end(), other) != a.end();
}

std::vector<CanonicalEdge> Graph::Edges() const {
  std::vector<CanonicalEdge> out;
  out.reserve(edge_count_);
  std::map<std::pair<Vertex, Vertex>, std::uint32_t> seen;
  for (Vertex u = 1; u <= n(); ++u) {
    bool loop_half = false;
    for (Vertex v : adj_[u]) {
      if (v < u) continue;
      if (v == u) {
        // A self-loop appears twice in its own list.
        loop_half = !loop_half;
        if (!loop_half) continue;
      }
      std::uint32_t& m = seen[{u, v}];
      out.push_back(CanonicalEdge{u, v, m++});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::ShuffledAdjacency(std::uint64_t seed) const {
  Graph g = *this;
  Rng rng(seed);
  for (auto& list : g.adj_) std::shuffle(list.begin(), list.end(), rng.engine());
  return g;
}

Graph Graph::Relabeled(std::span<const Vertex> perm) const {
  if (perm.size() != n()) throw PreconditionError("permutation size mismatch");
  std::vector<bool> hit(n() + 1, false);
  for (Vertex p : perm) {
    if (p < 1 || p > n() || hit[p]) throw PreconditionError("not a permutation");
    hit[p] = true;
  }
  Graph g(n(), degree_bound_, multigraph_);
  for (Vertex u = 1; u <= n(); ++u) {
    for (Vertex v : adj_[u]) g.adj_[perm[u - 1]].push_back(perm[v - 1]);
  }
  g.edge_count_ = edge_count_;
  return g;
}

Graph Graph::WithoutEdges(std::span<const CanonicalEdge> removed) const {
  std::map<std::pair<VertexId, VertexId>, std::size_t> drop;
  for (const auto& e : removed) ++drop[{e.u, e.v}];
  Graph g(n(), degree_bound_, multigraph_);
  for (const auto& e : Edges()) {
    auto it = drop.find({e.u, e.v});
    if (it != drop.end() && it->second > 0) {
      --it->second;
      continue;
    }
    g.AddEdge(static_cast<Vertex>(e.u), static_cast<Vertex>(e.v));
  }
  for (const auto& [key, left] : drop) {
    if (left != 0) throw PreconditionError("removed edge not present");
  }
  return g;
}

Graph Graph::Induced(std::span<const Vertex> keep) const {
  std::vector<Vertex> index(n() + 1, kNoVertex);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    index[keep[i]] = static_cast<Vertex>(i + 1);
  }
  Graph g(keep.size(), degree_bound_, multigraph_);
  for (const auto& e : Edges()) {
    Vertex a = index[e.u], b = index[e.v];
    if (a != kNoVertex && b != kNoVertex) g.AddEdge(a, b);
  }
  return g;
}

void Graph::Validate() const {
  std::size_t half_edges = 0;
  for (Vertex u = 1; u <= n(); ++u) {
    if (adj_[u].size() > degree_bound_) {
      throw PreconditionError("degree bound violated at " + std::to_string(u));
    }
    half_edges += adj_[u].size();
    for (Vertex v : adj_[u]) {
      if (v < 1 || v > n()) throw PreconditionError("neighbor out of range");
      if (!multigraph_ && v == u) throw PreconditionError("self-loop");
      auto cu = std::count(adj_[u].begin(), adj_[u].end(), v);
      auto cv = std::count(adj_[v].begin(), adj_[v].end(), u);
      if (cu != cv) throw PreconditionError("asymmetric adjacency");
      if (!multigraph_ && cu > 1) throw PreconditionError("parallel edge");
    }
  }
  if (half_edges != 2 * edge_count_) {
    throw PreconditionError("edge count out of sync");
  }
}

std::vector<std::vector<Vertex>> Graph::Components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(n() + 1, false);
  for (Vertex s = 1; s <= n(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : adj_[comp[i]]) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return n() == other.n() && degree_bound_ == other.degree_bound_ &&
         multigraph_ == other.multigraph_ && Edges() == other.Edges();
}

Graph ReadGraph(std::istream& in) {
  std::string line;
  auto next_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      auto pos = out.find_first_not_of(" \t\r");
      if (pos == std::string::npos || out[pos] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line(line)) throw FormatError("empty graph file");
  std::istringstream header(line);
  long long n = -1, d = -1;
  std::string flag;
  header >> n >> d;
  if (!header || n < 0 || d < 0) throw FormatError("bad header: " + line);
  bool multi = false;
  if (header >> flag) {
    if (flag != "multi") throw FormatError("unknown header flag: " + flag);
    multi = true;
  }
  Graph g(static_cast<std::size_t>(n), static_cast<std::size_t>(d), multi);
  while (next_line(line)) {
    std::istringstream row(line);
    long long u = 0, v = 0;
    std::string rest;
    if (!(row >> u >> v) || (row >> rest)) {
      throw FormatError("bad edge line: " + line);
    }
    if (u < 1 || v < 1 || u > n || v > n) {
      throw FormatError("edge endpoint out of range: " + line);
    }
    try {
      g.AddEdge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    } catch (const PreconditionError& e) {
      throw FormatError(e.what());
    }
  }
  return g;
}

Graph ReadGraphFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return ReadGraph(in);
}

void WriteGraph(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.degree_bound();
  if (g.is_multigraph()) out << " multi";
  out << '\n';
  for (const auto& e : g.Edges()) out << e.u << ' ' << e.v << '\n';
}

void WriteGraphFile(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  WriteGraph(out, g);
}

}  // namespace minorprop
