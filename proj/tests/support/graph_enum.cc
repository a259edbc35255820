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

#include "support/graph_enum.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "minorprop/rng.h"

namespace minorprop::testing {
namespace {

using Rows = std::vector<std::uint32_t>;
using Partition = std::vector<std::vector<int>>;  // ordered cells

// Splits cells by (count of neighbors in each cell) until stable.
void Refine(const Rows& adj, Partition& p) {
  const int n = static_cast<int>(adj.size());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> cell_of(n);
    for (std::size_t c = 0; c < p.size(); ++c) {
      for (int v : p[c]) cell_of[v] = static_cast<int>(c);
    }
    Partition next;
    for (const auto& cell : p) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::map<std::vector<int>, std::vector<int>> groups;
      for (int v : cell) {
        std::vector<int> sig(p.size(), 0);
        for (int w = 0; w < n; ++w) {
          if (adj[v] >> w & 1) ++sig[cell_of[w]];
        }
        groups[sig].push_back(v);
      }
      if (groups.size() > 1) changed = true;
      for (auto& [sig, members] : groups) next.push_back(members);
    }
    p = std::move(next);
  }
}

std::uint64_t Encode(const Rows& adj, const Partition& p) {
  std::vector<int> order;
  for (const auto& cell : p) order.push_back(cell[0]);
  std::uint64_t bits = 0;
  int k = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j, ++k) {
      if (adj[order[i]] >> order[j] & 1) bits |= 1ULL << k;
    }
  }
  return bits;
}

void Search(const Rows& adj, Partition p, std::uint64_t& best, bool& have) {
  Refine(adj, p);
  std::size_t target = p.size();
  for (std::size_t c = 0; c < p.size(); ++c) {
    if (p[c].size() > 1) {
      target = c;
      break;
    }
  }
  if (target == p.size()) {
    std::uint64_t code = Encode(adj, p);
    if (!have || code < best) {
      best = code;
      have = true;
    }
    return;
  }
  for (int v : p[target]) {
    Partition q;
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (c != target) {
        q.push_back(p[c]);
        continue;
      }
      q.push_back({v});
      std::vector<int> rest;
      for (int w : p[c]) {
        if (w != v) rest.push_back(w);
      }
      q.push_back(rest);
    }
    Search(adj, q, best, have);
  }
}

std::pair<std::size_t, std::uint64_t> Canon(const Rows& adj) {
  const int n = static_cast<int>(adj.size());
  std::map<int, std::vector<int>> by_degree;
  for (int v = 0; v < n; ++v) by_degree[__builtin_popcount(adj[v])].push_back(v);
  Partition p;
  for (auto& [deg, cell] : by_degree) p.push_back(cell);
  std::uint64_t best = 0;
  bool have = false;
  Search(adj, p, best, have);
  return {adj.size(), best};
}

Graph ToGraph(const Rows& adj, std::size_t max_degree) {
  std::size_t top = 0;
  for (auto row : adj) top = std::max<std::size_t>(top, __builtin_popcount(row));
  std::size_t bound = max_degree < 64 ? max_degree : std::max<std::size_t>(3, top);
  Graph g(adj.size(), bound);
  for (std::size_t i = 0; i < adj.size(); ++i) {
    for (std::size_t j = i + 1; j < adj.size(); ++j) {
      if (adj[i] >> j & 1) g.AddEdge(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1));
    }
  }
  return g;
}

}  // namespace

std::pair<std::size_t, std::uint64_t> CanonicalForm(const Graph& g) {
  if (g.n() > 11) throw std::invalid_argument("canonical form limited to 11 vertices");
  Rows adj(g.n(), 0);
  for (Vertex v = 1; v <= g.n(); ++v) {
    for (Vertex w : g.neighbors(v)) adj[v - 1] |= 1u << (w - 1);
  }
  return Canon(adj);
}

std::vector<Graph> EnumerateConnectedGraphs(const EnumLimits& limits) {
  if (limits.max_vertices > 11) throw std::invalid_argument("too many vertices");
  std::vector<Graph> out;
  std::vector<Rows> level{Rows{0}};
  out.push_back(ToGraph(level[0], limits.max_degree));
  for (std::size_t m = 0; m < limits.max_edges && !level.empty(); ++m) {
    std::set<std::pair<std::size_t, std::uint64_t>> seen;
    std::vector<Rows> next;
    auto offer = [&](const Rows& child) {
      if (seen.insert(Canon(child)).second) next.push_back(child);
    };
    for (const Rows& adj : level) {
      const std::size_t n = adj.size();
      for (std::size_t v = 0; v < n; ++v) {
        if (static_cast<std::size_t>(__builtin_popcount(adj[v])) >= limits.max_degree) continue;
        if (n < limits.max_vertices) {
          Rows child = adj;
          child.push_back(1u << v);
          child[v] |= 1u << n;
          offer(child);
        }
        for (std::size_t w = v + 1; w < n; ++w) {
          if (adj[v] >> w & 1) continue;
          if (static_cast<std::size_t>(__builtin_popcount(adj[w])) >= limits.max_degree) continue;
          Rows child = adj;
          child[v] |= 1u << w;
          child[w] |= 1u << v;
          offer(child);
        }
      }
    }
    for (const Rows& adj : next) out.push_back(ToGraph(adj, limits.max_degree));
    level = std::move(next);
  }
  return out;
}

Graph RandomConnectedGraph(std::size_t n, std::size_t d, std::size_t extra,
                           std::uint64_t seed) {
  Rng rng(seed);
  Graph g(n, d);
  for (Vertex v = 2; v <= n; ++v) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
      Vertex u = static_cast<Vertex>(rng.Uniform(1, v - 1));
      if (g.degree(u) < d) {
        g.AddEdge(u, v);
        break;
      }
    }
  }
  for (std::size_t i = 0, tries = 0; i < extra && tries < 100 * (extra + 1); ++tries) {
    Vertex a = static_cast<Vertex>(rng.Uniform(1, n));
    Vertex b = static_cast<Vertex>(rng.Uniform(1, n));
    if (a == b || g.HasEdge(a, b) || g.degree(a) >= d || g.degree(b) >= d) continue;
    g.AddEdge(a, b);
    ++i;
  }
  return g;
}

}  // namespace minorprop::testing
