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

#include "minorprop/exact.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "minorprop/errors.h"
#include "minorprop/witness.h"

namespace minorprop {
namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

void CheckSteps(std::uint64_t& steps, std::uint64_t max_steps) {
  if (++steps > max_steps) {
    throw InstanceTooLarge("exact search exceeded " +
                           std::to_string(max_steps) + " steps");
  }
}

// Node order of a path or cycle pattern, walking from an end (or node 0).
std::vector<int> LinearOrder(const Pattern& h) {
  int start = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h.neighbors(static_cast<int>(i)).size() == 1) {
      start = static_cast<int>(i);
      break;
    }
  }
  std::vector<int> order{start};
  std::vector<bool> seen(h.size(), false);
  seen[start] = true;
  while (order.size() < h.size()) {
    int next = -1;
    for (int w : h.neighbors(order.back())) {
      if (!seen[w]) {
        next = w;
        break;
      }
    }
    if (next < 0) break;
    seen[next] = true;
    order.push_back(next);
  }
  return order;
}

std::optional<MinorWitness> FindPathMinor(const Graph& g, const Pattern& h,
                                          std::uint64_t max_steps) {
  const std::size_t len = h.size() - 1;
  std::vector<Vertex> path;
  std::vector<bool> on(g.n() + 1, false);
  std::uint64_t steps = 0;
  std::function<bool(Vertex)> extend = [&](Vertex x) {
    CheckSteps(steps, max_steps);
    path.push_back(x);
    on[x] = true;
    if (path.size() == len + 1) return true;
    for (Vertex w : g.neighbors(x)) {
      if (!on[w] && extend(w)) return true;
    }
    on[x] = false;
    path.pop_back();
    return false;
  };
  for (Vertex s = 1; s <= g.n(); ++s) {
    if (!extend(s)) continue;
    std::vector<int> order = LinearOrder(h);
    std::vector<std::vector<Vertex>> sets(h.size());
    for (std::size_t i = 0; i < order.size(); ++i) sets[order[i]] = {path[i]};
    return CompleteWitness(g, h, std::move(sets));
  }
  return std::nullopt;
}

std::optional<MinorWitness> FindCycleMinor(const Graph& g, const Pattern& h,
                                           std::uint64_t max_steps) {
  auto cycle = FindCycleAtLeast(g, h.size(), max_steps);
  if (!cycle) return std::nullopt;
  std::vector<int> order = LinearOrder(h);
  std::vector<std::vector<Vertex>> sets(h.size());
  const auto& cv = cycle->vertices;
  for (std::size_t i = 0; i < cv.size(); ++i) {
    sets[order[std::min(i, order.size() - 1)]].push_back(cv[i]);
  }
  return CompleteWitness(g, h, std::move(sets));
}

// K_{1,k} minor: a connected center set with k distinct outside neighbors.
class StarSearch {
 public:
  StarSearch(const Graph& g, std::size_t leaves, std::uint64_t max_steps)
      : g_(g), k_(leaves), max_steps_(max_steps),
        in_set_(g.n() + 1, false), excluded_(g.n() + 1, false) {}

  std::optional<std::vector<Vertex>> Run() {
    for (Vertex v = 1; v <= g_.n(); ++v) {
      if (g_.degree(v) >= k_) return std::vector<Vertex>{v};
    }
    if (k_ < 3) return std::nullopt;
    // A center set with >= 3 outside neighbors contains a vertex of degree
    // >= 3; let r be its least such vertex.
    for (Vertex r = 1; r <= g_.n(); ++r) {
      if (g_.degree(r) < 3) continue;
      set_ = {r};
      in_set_[r] = true;
      if (Grow()) return set_;
      in_set_[r] = false;
      excluded_[r] = true;  // later roots never use r
    }
    return std::nullopt;
  }

 private:
  bool Grow() {
    CheckSteps(steps_, max_steps_);
    std::vector<Vertex> outside;
    for (Vertex x : set_) {
      for (Vertex w : g_.neighbors(x)) {
        if (!in_set_[w] && std::find(outside.begin(), outside.end(), w) == outside.end()) {
          outside.push_back(w);
        }
      }
    }
    if (outside.size() >= k_) return true;
    for (Vertex u : outside) {
      if (excluded_[u]) continue;
      set_.push_back(u);
      in_set_[u] = true;
      if (Grow()) return true;
      in_set_[u] = false;
      set_.pop_back();
      excluded_[u] = true;
      bool found = Grow();
      excluded_[u] = false;
      return found;
    }
    return false;
  }

  const Graph& g_;
  std::size_t k_;
  std::uint64_t max_steps_;
  std::uint64_t steps_ = 0;
  std::vector<Vertex> set_;
  std::vector<bool> in_set_, excluded_;
};

std::optional<MinorWitness> FindStarMinor(const Graph& g, const Pattern& h,
                                          std::uint64_t max_steps) {
  const std::size_t leaves = h.size() - 1;
  StarSearch search(g, leaves, max_steps);
  auto center = search.Run();
  if (!center) return std::nullopt;
  std::vector<bool> in(g.n() + 1, false);
  for (Vertex x : *center) in[x] = true;
  std::vector<Vertex> outside;
  for (Vertex x : *center) {
    for (Vertex w : g.neighbors(x)) {
      if (!in[w] && std::find(outside.begin(), outside.end(), w) == outside.end()) {
        outside.push_back(w);
      }
    }
  }
  int hub = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (h.neighbors(static_cast<int>(i)).size() == leaves) hub = static_cast<int>(i);
  }
  std::vector<std::vector<Vertex>> sets(h.size());
  sets[hub] = *center;
  std::size_t next = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (static_cast<int>(i) != hub) sets[i] = {outside[next++]};
  }
  return CompleteWitness(g, h, std::move(sets));
}

class GenericSearch {
 public:
  GenericSearch(const Graph& g, const Pattern& h, const MinorSearchLimits& lim)
      : g_(g), h_(h), max_steps_(lim.max_steps), owner_(g.n() + 1, -1),
        sets_(h.size()), edge_choice_(h.edges().size()) {
    // BFS order per pattern component, starting at a max-degree node.
    std::vector<bool> seen(h.size(), false);
    while (order_.size() < h.size()) {
      int start = -1;
      for (std::size_t i = 0; i < h.size(); ++i) {
        if (!seen[i] && (start < 0 || h.neighbors(static_cast<int>(i)).size() >
                                          h.neighbors(start).size())) {
          start = static_cast<int>(i);
        }
      }
      seen[start] = true;
      std::size_t head = order_.size();
      order_.push_back(start);
      for (; head < order_.size(); ++head) {
        for (int w : h.neighbors(order_[head])) {
          if (!seen[w]) {
            seen[w] = true;
            order_.push_back(w);
          }
        }
      }
    }
    pos_.assign(h.size(), 0);
    for (std::size_t j = 0; j < order_.size(); ++j) pos_[order_[j]] = j;
    blocked_.assign(h.size(), std::vector<char>(g.n() + 1, 0));
    in_ext_.assign(h.size(), std::vector<char>(g.n() + 1, 0));
    free_count_ = g.n();
  }

  std::optional<MinorWitness> Run() {
    if (h_.size() == 0) return MinorWitness{h_, {}, {}};
    if (Place(0)) return witness_;
    return std::nullopt;
  }

 private:
  bool Place(std::size_t j) {
    if (j == order_.size()) {
      witness_ = MinorWitness{h_, sets_, edge_choice_};
      return true;
    }
    const int node = order_[j];
    std::vector<int> placed;
    std::size_t later = 0;
    for (int w : h_.neighbors(node)) {
      if (pos_[w] < j) {
        placed.push_back(w);
      } else {
        ++later;
      }
    }
    std::sort(placed.begin(), placed.end(),
              [&](int a, int b) { return pos_[a] < pos_[b]; });
    std::vector<Vertex> cands;
    if (placed.empty()) {
      for (Vertex v = 1; v <= g_.n(); ++v) {
        if (owner_[v] == -1) cands.push_back(v);
      }
    } else {
      for (Vertex x : sets_[placed[0]]) {
        for (Vertex w : g_.neighbors(x)) {
          if (owner_[w] == -1) cands.push_back(w);
        }
      }
      std::sort(cands.begin(), cands.end());
      cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
    }
    const bool singleton_only = later == 0 && placed.size() == 1;
    const std::size_t remaining = order_.size() - j - 1;
    if (free_count_ < remaining + 1) return false;
    const std::size_t cap = free_count_ - remaining;
    auto& blocked = blocked_[j];
    auto& in_ext = in_ext_[j];
    bool found = false;
    std::size_t idx = 0;
    for (; idx < cands.size() && !found; ++idx) {
      Vertex s = cands[idx];
      std::vector<Vertex> set{s};
      owner_[s] = node;
      --free_count_;
      if (singleton_only) {
        found = Try(j, node, set, placed, later);
      } else {
        std::vector<Vertex> ext;
        for (Vertex w : g_.neighbors(s)) {
          if (owner_[w] == -1 && !blocked[w] && !in_ext[w]) {
            in_ext[w] = 1;
            ext.push_back(w);
          }
        }
        found = Enumerate(j, node, set, ext, placed, later, cap);
        for (Vertex w : ext) in_ext[w] = 0;
      }
      owner_[s] = -1;
      ++free_count_;
      blocked[s] = 1;
    }
    for (std::size_t i = 0; i < idx; ++i) blocked[cands[i]] = 0;
    return found;
  }

  bool Enumerate(std::size_t j, int node, std::vector<Vertex>& set,
                 const std::vector<Vertex>& ext, const std::vector<int>& placed,
                 std::size_t later, std::size_t cap) {
    CheckSteps(steps_, max_steps_);
    if (Try(j, node, set, placed, later)) return true;
    if (set.size() >= cap) return false;
    auto& blocked = blocked_[j];
    auto& in_ext = in_ext_[j];
    std::vector<Vertex> done;
    bool found = false;
    for (std::size_t i = 0; i < ext.size() && !found; ++i) {
      Vertex v = ext[i];
      if (owner_[v] != -1 || blocked[v]) continue;
      std::vector<Vertex> child(ext.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                ext.end());
      std::vector<Vertex> added;
      for (Vertex w : g_.neighbors(v)) {
        if (owner_[w] == -1 && !blocked[w] && !in_ext[w] && w != v) {
          in_ext[w] = 1;
          added.push_back(w);
          child.push_back(w);
        }
      }
      owner_[v] = node;
      --free_count_;
      set.push_back(v);
      found = Enumerate(j, node, set, child, placed, later, cap);
      set.pop_back();
      owner_[v] = -1;
      ++free_count_;
      for (Vertex w : added) in_ext[w] = 0;
      blocked[v] = 1;
      done.push_back(v);
    }
    for (Vertex v : done) blocked[v] = 0;
    return found;
  }

  // Accepts `set` as the branch set of `node` if it touches every placed
  // neighbor and leaves room for the later ones, then recurses.
  bool Try(std::size_t j, int node, const std::vector<Vertex>& set,
           const std::vector<int>& placed, std::size_t later) {
    std::vector<std::pair<std::size_t, std::pair<Vertex, Vertex>>> chosen;
    for (int p : placed) {
      bool hit = false;
      for (Vertex x : set) {
        for (Vertex w : g_.neighbors(x)) {
          if (owner_[w] == p) {
            chosen.push_back({EdgeIndex(node, p), {x, w}});
            hit = true;
            break;
          }
        }
        if (hit) break;
      }
      if (!hit) return false;
    }
    if (later > 0) {
      std::vector<Vertex> outside;
      for (Vertex x : set) {
        for (Vertex w : g_.neighbors(x)) {
          if (owner_[w] == -1) outside.push_back(w);
        }
      }
      std::sort(outside.begin(), outside.end());
      outside.erase(std::unique(outside.begin(), outside.end()), outside.end());
      if (outside.size() < later) return false;
    }
    sets_[node] = set;
    for (const auto& [e, xy] : chosen) {
      auto [a, b] = h_.edges()[e];
      edge_choice_[e] = a == node ? xy : std::make_pair(xy.second, xy.first);
    }
    return Place(j + 1);
  }

  std::size_t EdgeIndex(int a, int b) const {
    if (a > b) std::swap(a, b);
    for (std::size_t e = 0; e < h_.edges().size(); ++e) {
      if (h_.edges()[e] == std::make_pair(a, b)) return e;
    }
    throw InternalError("pattern edge missing");
  }

  const Graph& g_;
  const Pattern& h_;
  std::uint64_t max_steps_;
  std::uint64_t steps_ = 0;
  std::vector<int> order_;
  std::vector<std::size_t> pos_;
  std::vector<int> owner_;
  std::vector<std::vector<Vertex>> sets_;
  std::vector<std::pair<Vertex, Vertex>> edge_choice_;
  std::vector<std::vector<char>> blocked_, in_ext_;
  std::size_t free_count_ = 0;
  MinorWitness witness_;
};

bool ConnectedInduced(const Graph& g, const std::vector<Vertex>& s,
                      Vertex skip) {
  std::vector<bool> in(g.n() + 1, false);
  std::size_t members = 0;
  Vertex start = kNoVertex;
  for (Vertex v : s) {
    if (v == skip) continue;
    in[v] = true;
    ++members;
    start = v;
  }
  if (members == 0) return true;
  std::vector<Vertex> stack{start};
  std::vector<bool> seen(g.n() + 1, false);
  seen[start] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(x)) {
      if (in[w] && !seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == members;
}

// Shortest path u ~> v whose interior avoids S; 0 if none has length >= 2.
std::size_t ShortestExternalPath(const Graph& g, const std::vector<bool>& in_s,
                                 Vertex u, Vertex v) {
  std::vector<Vertex> start;
  for (Vertex w : g.neighbors(u)) {
    if (!in_s[w]) start.push_back(w);
  }
  if (start.empty()) return 0;
  auto dist = BfsDistances(g, start, &in_s);
  std::size_t best = 0;
  for (Vertex w : g.neighbors(v)) {
    if (in_s[w] || dist[w] == kUnreached) continue;
    std::size_t len = dist[w] + 2;
    if (best == 0 || len < best) best = len;
  }
  return best;
}

}  // namespace

std::vector<std::size_t> BfsDistances(const Graph& g,
                                      const std::vector<Vertex>& sources,
                                      const std::vector<bool>* blocked) {
  std::vector<std::size_t> dist(g.n() + 1, kUnreached);
  std::vector<Vertex> queue;
  for (Vertex s : sources) {
    if (dist[s] == kUnreached && !(blocked && (*blocked)[s])) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Vertex x = queue[i];
    for (Vertex w : g.neighbors(x)) {
      if (dist[w] == kUnreached && !(blocked && (*blocked)[w])) {
        dist[w] = dist[x] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<SimpleCycle> FindAnyCycle(const Graph& g) {
  std::vector<int> state(g.n() + 1, 0);  // 0 new, 1 on stack, 2 done
  std::vector<Vertex> parent(g.n() + 1, kNoVertex);
  struct Frame {
    Vertex v;
    std::size_t next;
    bool skipped_parent;
  };
  for (Vertex root = 1; root <= g.n(); ++root) {
    if (state[root] != 0) continue;
    std::vector<Frame> stack{{root, 0, false}};
    state[root] = 1;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto nbrs = g.neighbors(f.v);
      if (f.next == nbrs.size()) {
        state[f.v] = 2;
        stack.pop_back();
        continue;
      }
      Vertex w = nbrs[f.next++];
      if (w == f.v) return SimpleCycle{{f.v}};
      if (w == parent[f.v] && !f.skipped_parent) {
        f.skipped_parent = true;
        continue;
      }
      if (state[w] == 1) {
        SimpleCycle c;
        for (Vertex x = f.v; x != w; x = parent[x]) c.vertices.push_back(x);
        c.vertices.push_back(w);
        std::reverse(c.vertices.begin(), c.vertices.end());
        return c;
      }
      if (state[w] == 0) {
        parent[w] = f.v;
        state[w] = 1;
        stack.push_back({w, 0, false});
      }
    }
  }
  return std::nullopt;
}

bool IsCycleFree(const Graph& g) { return !FindAnyCycle(g).has_value(); }

std::size_t ExactCycleFreeDistance(const Graph& g) {
  return g.edge_count() + g.Components().size() - g.n();
}

std::optional<SimpleCycle> FindOddCycle(const Graph& g,
                                        const EdgeLabeling* labeling) {
  auto flip = [&](Vertex a, Vertex b) {
    return labeling == nullptr ? 1 : labeling->Flip(a, b);
  };
  std::vector<int> color(g.n() + 1, -1);
  std::vector<Vertex> parent(g.n() + 1, kNoVertex);
  std::vector<std::size_t> depth(g.n() + 1, 0);
  for (Vertex root = 1; root <= g.n(); ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::vector<Vertex> queue{root};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      Vertex x = queue[i];
      for (Vertex y : g.neighbors(x)) {
        int want = color[x] ^ flip(x, y);
        if (color[y] == -1) {
          color[y] = want;
          parent[y] = x;
          depth[y] = depth[x] + 1;
          queue.push_back(y);
        } else if (color[y] != want) {
          if (x == y) return SimpleCycle{{x}};
          std::vector<Vertex> left, right;
          Vertex a = x, b = y;
          while (depth[a] > depth[b]) { left.push_back(a); a = parent[a]; }
          while (depth[b] > depth[a]) { right.push_back(b); b = parent[b]; }
          while (a != b) {
            left.push_back(a);
            right.push_back(b);
            a = parent[a];
            b = parent[b];
          }
          left.push_back(a);
          left.insert(left.end(), right.rbegin(), right.rend());
          return SimpleCycle{left};
        }
      }
    }
  }
  return std::nullopt;
}

std::size_t ExactMinViolations(const Graph& g, const EdgeLabeling* labeling,
                               std::size_t max_component) {
  std::size_t total = 0;
  std::vector<int> index(g.n() + 1, -1);
  std::vector<std::vector<std::pair<int, int>>> inc(g.n() + 1);
  std::size_t loops = 0;
  for (const auto& e : g.Edges()) {
    int f = labeling == nullptr ? 1 : (labeling->IsEq(e) ? 0 : 1);
    if (e.u == e.v) {
      loops += static_cast<std::size_t>(f);
      continue;
    }
    inc[e.u].push_back({static_cast<int>(e.v), f});
    inc[e.v].push_back({static_cast<int>(e.u), f});
  }
  total += loops;
  for (const auto& comp : g.Components()) {
    if (comp.size() > max_component) {
      throw InstanceTooLarge("component of " + std::to_string(comp.size()) +
                             " vertices exceeds coloring limit");
    }
    for (std::size_t i = 0; i < comp.size(); ++i) index[comp[i]] = static_cast<int>(i);
    std::vector<int> col(comp.size(), 0);
    long long current = 0;
    for (Vertex v : comp) {
      for (auto [w, f] : inc[v]) {
        if (v < static_cast<Vertex>(w) && f == 1) ++current;
      }
    }
    long long best = current;
    const std::uint64_t steps = comp.size() <= 1 ? 0 : (1ULL << (comp.size() - 1));
    for (std::uint64_t gray = 1; gray < steps; ++gray) {
      int bit = __builtin_ctzll(gray) + 1;  // vertex 0 stays colored 0
      Vertex v = comp[bit];
      for (auto [w, f] : inc[v]) {
        int other = col[index[w]];
        bool before = ((col[bit] ^ other) != f);
        current += before ? -1 : 1;
      }
      col[bit] ^= 1;
      best = std::min(best, current);
    }
    total += static_cast<std::size_t>(best);
  }
  return total;
}

std::optional<SimpleCycle> FindCycleAtLeast(const Graph& g,
                                            std::size_t min_length,
                                            std::uint64_t max_steps) {
  if (min_length <= 3) {
    auto c = FindAnyCycle(g);
    if (c && c->length() >= 3) return c;
    if (!g.is_multigraph()) return std::nullopt;
  }
  std::uint64_t steps = 0;
  std::vector<Vertex> path;
  std::vector<bool> on(g.n() + 1, false);
  Vertex s = kNoVertex;
  std::function<bool(Vertex)> extend = [&](Vertex x) {
    CheckSteps(steps, max_steps);
    path.push_back(x);
    on[x] = true;
    if (path.size() >= std::max<std::size_t>(min_length, 3) && g.HasEdge(x, s)) {
      return true;
    }
    for (Vertex w : g.neighbors(x)) {
      if (w > s && !on[w] && extend(w)) return true;
    }
    on[x] = false;
    path.pop_back();
    return false;
  };
  for (s = 1; s <= g.n(); ++s) {
    if (extend(s)) return SimpleCycle{path};
  }
  return std::nullopt;
}

std::optional<MinorWitness> ExactFindMinorGeneric(const Graph& g,
                                                  const Pattern& h,
                                                  const MinorSearchLimits& limits) {
  if (h.size() > limits.max_pattern) {
    throw InstanceTooLarge("pattern has " + std::to_string(h.size()) + " nodes");
  }
  for (const auto& comp : g.Components()) {
    if (comp.size() > limits.max_component && comp.size() >= h.size()) {
      throw InstanceTooLarge("component of " + std::to_string(comp.size()) +
                             " vertices exceeds minor-search limit");
    }
  }
  GenericSearch search(g, h, limits);
  return search.Run();
}

std::optional<MinorWitness> ExactFindMinor(const Graph& g, const Pattern& h,
                                           const MinorSearchLimits& limits) {
  if (g.is_multigraph()) throw PreconditionError("minor search needs a simple graph");
  switch (h.shape()) {
    case Pattern::Shape::kPath:
      return FindPathMinor(g, h, limits.max_steps);
    case Pattern::Shape::kCycle:
      return FindCycleMinor(g, h, limits.max_steps);
    case Pattern::Shape::kStar:
      return FindStarMinor(g, h, limits.max_steps);
    case Pattern::Shape::kOther:
      break;
  }
  return ExactFindMinorGeneric(g, h, limits);
}

bool ExactHasMinor(const Graph& g, const Pattern& h,
                   const MinorSearchLimits& limits) {
  return ExactFindMinor(g, h, limits).has_value();
}

std::size_t ExactMinorFreeDistance(const Graph& g, const Pattern& h,
                                   std::size_t max_edges) {
  auto edges = g.Edges();
  if (edges.size() > max_edges) {
    throw InstanceTooLarge("graph has " + std::to_string(edges.size()) + " edges");
  }
  const std::size_t m = edges.size();
  for (std::size_t r = 0; r <= m; ++r) {
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
    do {
      std::vector<CanonicalEdge> removed;
      for (std::size_t i = 0; i < m; ++i) {
        if (pick[i]) removed.push_back(edges[i]);
      }
      if (!ExactHasMinor(g.WithoutEdges(removed), h)) return r;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  throw InternalError("edgeless graph still contains the pattern");
}

std::vector<std::vector<Vertex>> ExactSpots(const Graph& g, std::size_t k,
                                            std::size_t max_vertices) {
  if (k < 4) throw PreconditionError("spots need k >= 4");
  if (g.n() > max_vertices) {
    throw InstanceTooLarge("spot enumeration limited to " +
                           std::to_string(max_vertices) + " vertices");
  }
  std::vector<std::vector<Vertex>> out;
  const std::uint64_t limit = 1ULL << g.n();
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    if (__builtin_popcountll(mask) < 3) continue;
    std::vector<Vertex> s;
    std::vector<bool> in_s(g.n() + 1, false);
    for (Vertex v = 1; v <= g.n(); ++v) {
      if (mask >> (v - 1) & 1) {
        s.push_back(v);
        in_s[v] = true;
      }
    }
    bool ok = ConnectedInduced(g, s, kNoVertex);
    for (std::size_t i = 0; ok && i < s.size(); ++i) {
      ok = ConnectedInduced(g, s, s[i]);
    }
    if (!ok) continue;
    if (FindCycleAtLeast(g.Induced(s), k).has_value()) continue;
    for (std::size_t i = 0; ok && i < s.size(); ++i) {
      for (std::size_t j = i + 1; ok && j < s.size(); ++j) {
        std::size_t len = ShortestExternalPath(g, in_s, s[i], s[j]);
        if (len != 0 && len < 2 * k) ok = false;
      }
    }
    if (ok) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExpansionResult CheckExpansion(const Graph& g, Vertex s, std::size_t radius,
                               double eps, std::size_t max_ball) {
  auto dist = BfsDistances(g, {s});
  std::vector<Vertex> ball;
  for (Vertex v = 1; v <= g.n(); ++v) {
    if (dist[v] <= radius) ball.push_back(v);
  }
  ExpansionResult result;
  result.ball_size = ball.size();
  if (ball.size() > max_ball) {
    throw InstanceTooLarge("ball of " + std::to_string(ball.size()) +
                           " vertices exceeds expansion limit");
  }
  std::vector<bool> in_ball(g.n() + 1, false);
  for (Vertex v : ball) in_ball[v] = true;
  std::vector<bool> in_set(g.n() + 1, false), blocked(g.n() + 1, false),
      in_ext(g.n() + 1, false);
  const double d = static_cast<double>(g.degree_bound());
  std::vector<Vertex> set;
  std::function<bool(const std::vector<Vertex>&)> grow =
      [&](const std::vector<Vertex>& ext) {
        ++result.sets_checked;
        std::size_t cut = 0;
        for (Vertex x : set) {
          for (Vertex w : g.neighbors(x)) cut += in_set[w] ? 0 : 1;
        }
        if (static_cast<double>(cut) < eps * static_cast<double>(set.size()) * d) {
          result.expanding = false;
          result.violating_set = set;
          std::sort(result.violating_set.begin(), result.violating_set.end());
          return true;
        }
        std::vector<Vertex> done;
        bool stop = false;
        for (std::size_t i = 0; i < ext.size() && !stop; ++i) {
          Vertex v = ext[i];
          std::vector<Vertex> child(ext.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                                    ext.end());
          std::vector<Vertex> added;
          for (Vertex w : g.neighbors(v)) {
            if (in_ball[w] && !in_set[w] && !blocked[w] && !in_ext[w] && w != v) {
              in_ext[w] = true;
              added.push_back(w);
              child.push_back(w);
            }
          }
          in_set[v] = true;
          set.push_back(v);
          stop = grow(child);
          set.pop_back();
          in_set[v] = false;
          for (Vertex w : added) in_ext[w] = false;
          blocked[v] = true;
          done.push_back(v);
        }
        for (Vertex v : done) blocked[v] = false;
        return stop;
      };
  for (Vertex root : ball) {
    set = {root};
    in_set[root] = true;
    std::vector<Vertex> ext;
    for (Vertex w : g.neighbors(root)) {
      if (in_ball[w] && !blocked[w] && !in_ext[w] && w != root) {
        in_ext[w] = true;
        ext.push_back(w);
      }
    }
    bool stop = grow(ext);
    for (Vertex w : ext) in_ext[w] = false;
    in_set[root] = false;
    if (stop) return result;
    blocked[root] = true;
  }
  return result;
}

}  // namespace minorprop
