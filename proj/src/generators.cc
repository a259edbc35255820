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

#include "minorprop/generators.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include "minorprop/errors.h"
#include "minorprop/exact.h"
#include "minorprop/rng.h"
#include "minorprop/witness.h"

namespace minorprop {
namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

// Edge list with degree bookkeeping; vertices are 1-based.
class Builder {
 public:
  Builder(std::size_t n, std::size_t d) : d_(d), deg_(n + 1, 0) {}

  void Add(Vertex u, Vertex v) {
    edges_.emplace_back(u, v);
    ++deg_[u];
    ++deg_[v];
  }
  std::size_t degree(Vertex v) const { return deg_[v]; }
  std::size_t spare(Vertex v) const { return d_ - deg_[v]; }
  Graph Build() const {
    return Graph::FromEdges(deg_.size() - 1, d_, edges_);
  }

 private:
  std::size_t d_;
  std::vector<std::size_t> deg_;
  EdgeList edges_;
};

Instance Finish(Graph g, GroundTruth truth) {
  truth.n = g.n();
  truth.d = g.degree_bound();
  truth.cycle_free_distance = ExactCycleFreeDistance(g);
  return Instance{std::move(g), std::move(truth)};
}

// Random tree on `size` local vertices (0-based) in which vertex i > 0
// hangs off a uniformly chosen earlier vertex that still has degree below
// `max_deg` and depth below `max_depth`. Stops early if no host remains.
std::vector<std::pair<int, int>> RandomTree(std::size_t size,
                                            std::size_t max_deg,
                                            std::size_t max_depth, Rng& rng) {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::size_t> deg{0};
  std::vector<std::size_t> depth{0};
  std::vector<int> hosts;
  if (max_deg > 0 && max_depth > 0) hosts.push_back(0);
  while (deg.size() < size && !hosts.empty()) {
    std::size_t slot = rng.Uniform(0, hosts.size() - 1);
    int parent = hosts[slot];
    int child = static_cast<int>(deg.size());
    edges.emplace_back(parent, child);
    deg.push_back(1);
    depth.push_back(depth[parent] + 1);
    if (++deg[parent] >= max_deg) {
      hosts[slot] = hosts.back();
      hosts.pop_back();
    }
    if (deg[child] < max_deg && depth[child] < max_depth) {
      hosts.push_back(child);
    }
  }
  return edges;
}

struct Component {
  std::size_t size = 1;
  std::vector<std::pair<int, int>> edges;
};

Component PathComponent(std::size_t size) {
  Component c{size, {}};
  for (std::size_t i = 1; i < size; ++i) {
    c.edges.emplace_back(static_cast<int>(i) - 1, static_cast<int>(i));
  }
  return c;
}

Component CycleComponent(std::size_t size) {
  Component c = PathComponent(size);
  c.edges.emplace_back(static_cast<int>(size) - 1, 0);
  return c;
}

Component SpiderComponent(std::size_t legs, std::size_t size, Rng& rng) {
  Component c{1, {}};
  std::vector<int> tips(legs, 0);
  for (std::size_t i = 0; i < legs && c.size < size; ++i) {
    c.edges.emplace_back(0, static_cast<int>(c.size));
    tips[i] = static_cast<int>(c.size++);
  }
  while (c.size < size) {
    std::size_t leg = rng.Uniform(0, legs - 1);
    c.edges.emplace_back(tips[leg], static_cast<int>(c.size));
    tips[leg] = static_cast<int>(c.size++);
  }
  return c;
}

// Cactus whose cycles all have length in [3, max_cycle]; max_cycle < 3
// gives a tree. Blocks attach at vertices with enough spare degree.
Component CactusComponent(std::size_t size, std::size_t d,
                          std::size_t max_cycle, Rng& rng) {
  Component c{1, {}};
  std::vector<std::size_t> deg{0};
  auto add_vertex = [&](int host) {
    int v = static_cast<int>(c.size++);
    deg.push_back(1);
    ++deg[host];
    c.edges.emplace_back(host, v);
    return v;
  };
  for (int attempts = 0; c.size < size && attempts < 64; ++attempts) {
    int host = static_cast<int>(rng.Uniform(0, c.size - 1));
    std::size_t room = size - c.size;
    if (max_cycle >= 3 && room >= 2 && d - deg[host] >= 2 && rng.Coin()) {
      std::size_t len = rng.Uniform(3, std::min(max_cycle, room + 1));
      int prev = host;
      for (std::size_t i = 1; i < len; ++i) prev = add_vertex(prev);
      c.edges.emplace_back(prev, host);
      ++deg[prev];
      ++deg[host];
    } else if (deg[host] < d) {
      add_vertex(host);
    }
  }
  return c;
}

Graph ComponentGraph(const Component& c, std::size_t d) {
  EdgeList e;
  for (auto [a, b] : c.edges) {
    e.emplace_back(static_cast<Vertex>(a + 1), static_cast<Vertex>(b + 1));
  }
  return Graph::FromEdges(c.size, d, e);
}

std::size_t Isqrt(std::size_t n) {
  auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

Instance Scramble(Instance inst, std::uint64_t seed) {
  const std::size_t n = inst.graph.n();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  Rng rng(DeriveSeed(seed, 0x5c4a));
  std::shuffle(perm.begin(), perm.end(), rng.engine());
  inst.graph = inst.graph.Relabeled(perm).ShuffledAdjacency(
      DeriveSeed(seed, 0x5c4b));
  if (inst.truth.witness) {
    std::vector<Vertex> to_global(n + 1, kNoVertex);
    for (std::size_t v = 1; v <= n; ++v) to_global[v] = perm[v - 1];
    inst.truth.witness = MapWitness(*inst.truth.witness, to_global);
  }
  return inst;
}

Instance GenForest(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (n == 0 || d == 0) throw PreconditionError("forest needs n, d >= 1");
  Rng rng(DeriveSeed(seed, 1));
  Builder b(n, d);
  std::vector<Vertex> hosts{1};
  for (Vertex v = 2; v <= n; ++v) {
    if (!hosts.empty() && rng.Uniform(0, 15) != 0) {
      std::size_t slot = rng.Uniform(0, hosts.size() - 1);
      Vertex host = hosts[slot];
      b.Add(host, v);
      if (b.spare(host) == 0) {
        hosts[slot] = hosts.back();
        hosts.pop_back();
      }
    }
    if (b.spare(v) > 0) hosts.push_back(v);
  }
  GroundTruth t;
  t.family = "forest";
  t.seed = seed;
  return Scramble(Finish(b.Build(), t), seed);
}

Instance GenFarFromCycleFree(std::size_t n, std::size_t d, double eps,
                             std::uint64_t seed) {
  if (n < 3 || d < 3 || eps < 0) {
    throw PreconditionError("far_from_cycle_free needs n >= 3, d >= 3");
  }
  const double want = eps * static_cast<double>(d * n);
  if (want > static_cast<double>((d - 2) * n) / 2.0) {
    throw PreconditionError("infeasible: eps*d*n exceeds (d-2)*n/2");
  }
  const auto extra = static_cast<std::size_t>(std::ceil(want - 1e-9));
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    Rng rng(DeriveSeed(seed, 2 + (attempt << 8)));
    // Spanning tree with max degree d - 1 leaves a free slot everywhere.
    auto tree = RandomTree(n, d - 1, n, rng);
    if (tree.size() != n - 1) continue;
    Builder b(n, d);
    Graph probe(n, d);
    for (auto [u, v] : tree) {
      b.Add(static_cast<Vertex>(u + 1), static_cast<Vertex>(v + 1));
      probe.AddEdge(static_cast<Vertex>(u + 1), static_cast<Vertex>(v + 1));
    }
    std::vector<Vertex> open;
    for (Vertex v = 1; v <= n; ++v) {
      if (b.spare(v) > 0) open.push_back(v);
    }
    std::size_t added = 0;
    std::size_t misses = 0;
    while (added < extra && open.size() >= 2 && misses < 64 * n) {
      std::size_t i = rng.Uniform(0, open.size() - 1);
      std::size_t j = rng.Uniform(0, open.size() - 1);
      Vertex u = open[i], v = open[j];
      if (u == v || probe.HasEdge(u, v)) {
        ++misses;
        continue;
      }
      b.Add(u, v);
      probe.AddEdge(u, v);
      ++added;
      // Remove full endpoints, larger index first so i, j stay valid.
      for (std::size_t s : {std::max(i, j), std::min(i, j)}) {
        if (b.spare(open[s]) == 0) {
          open[s] = open.back();
          open.pop_back();
        }
      }
    }
    if (added < extra) continue;
    GroundTruth t;
    t.family = "far_from_cycle_free";
    t.eps_target = eps;
    t.seed = seed;
    return Scramble(Finish(b.Build(), t), seed);
  }
  throw InternalError("far_from_cycle_free: extra edges did not fit");
}

Instance GenLowerBoundFamily(std::size_t n, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0) {
    throw PreconditionError("lower_bound family needs even n >= 4");
  }
  Rng rng(DeriveSeed(seed, 3));
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 1);
  auto on_cycle = [n](Vertex a, Vertex b) {
    Vertex lo = std::min(a, b), hi = std::max(a, b);
    return hi - lo == 1 || (lo == 1 && hi == n);
  };
  while (true) {
    std::shuffle(order.begin(), order.end(), rng.engine());
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; i += 2) {
      ok = !on_cycle(order[i], order[i + 1]);
    }
    if (!ok) continue;
    Builder b(n, 3);
    for (Vertex v = 1; v <= n; ++v) b.Add(v, v == n ? 1 : v + 1);
    for (std::size_t i = 0; i < n; i += 2) b.Add(order[i], order[i + 1]);
    GroundTruth t;
    t.family = "lower_bound";
    t.seed = seed;
    return Finish(b.Build(), t);
  }
}

Instance GenPlantedMinor(std::size_t n, std::size_t d, const Pattern& pattern,
                         std::size_t block_size, PlantBase base,
                         std::uint64_t seed) {
  const std::size_t k = pattern.size();
  const bool cycle = pattern.shape() == Pattern::Shape::kCycle;
  if (!cycle && !pattern.IsTree()) {
    throw PreconditionError("planted pattern must be a tree or a cycle");
  }
  if (pattern.max_degree() > d || d < 2 || block_size < k ||
      n < block_size) {
    throw PreconditionError("infeasible planted_minor parameters");
  }
  Rng rng(DeriveSeed(seed, 4));
  Builder b(n, d);
  const std::size_t blocks = n / block_size;
  for (std::size_t blk = 0; blk < blocks; ++blk) {
    const Vertex first = static_cast<Vertex>(blk * block_size + 1);
    for (auto [x, y] : pattern.edges()) {
      b.Add(first + x, first + y);
    }
    // Everything else in the block hangs off the copy.
    const std::size_t last =
        blk + 1 == blocks ? n : (blk + 1) * block_size;
    Vertex tail = first;
    for (Vertex v = first; v < first + k; ++v) {
      if (b.degree(v) < b.degree(tail)) tail = v;
    }
    std::vector<Vertex> hosts;
    for (Vertex v = first; v < first + k; ++v) {
      if (b.spare(v) > 0) hosts.push_back(v);
    }
    for (Vertex v = first + static_cast<Vertex>(k); v <= last; ++v) {
      if (base == PlantBase::kPath) {
        b.Add(tail, v);
        tail = v;
        continue;
      }
      if (hosts.empty()) throw PreconditionError("planted copy is saturated");
      std::size_t slot = rng.Uniform(0, hosts.size() - 1);
      Vertex host = hosts[slot];
      b.Add(host, v);
      if (b.spare(host) == 0) {
        hosts[slot] = hosts.back();
        hosts.pop_back();
      }
      hosts.push_back(v);
    }
  }
  Graph g = b.Build();
  std::vector<std::vector<Vertex>> sets;
  for (std::size_t h = 0; h < k; ++h) sets.push_back({Vertex(h + 1)});
  GroundTruth t;
  t.family = "planted_minor";
  t.seed = seed;
  t.k = k;
  t.pattern = pattern.name();
  t.minor_distance_lower_bound = blocks;
  t.witness = CompleteWitness(g, pattern, std::move(sets));
  return Scramble(Finish(std::move(g), t), seed);
}

Instance GenCliquePlusCycle(std::size_t n, bool isolated) {
  const std::size_t s = Isqrt(n);
  if (s * s != n || s < 4) {
    throw PreconditionError("clique_plus_cycle needs n = s^2 with s >= 4");
  }
  Builder b(n, s - 1);
  const Vertex m = static_cast<Vertex>(n - s);
  for (Vertex v = 1; v <= m; ++v) b.Add(v, v == m ? 1 : v + 1);
  if (!isolated) {
    for (Vertex u = m + 1; u <= n; ++u) {
      for (Vertex v = u + 1; v <= n; ++v) b.Add(u, v);
    }
  }
  GroundTruth t;
  t.family = isolated ? "cycle_plus_isolated" : "clique_plus_cycle";
  return Finish(b.Build(), t);
}

Instance GenMinorFree(std::size_t n, std::size_t d, const Pattern& pattern,
                      std::uint64_t seed) {
  constexpr std::size_t kMaxComponent = 20;
  if (n == 0 || d < 2) throw PreconditionError("minor_free needs n, d >= 2");
  if (pattern.size() < 2) {
    throw PreconditionError("every non-empty graph has this minor");
  }
  Rng rng(DeriveSeed(seed, 5));
  const auto shape = pattern.shape();
  const std::size_t param = pattern.shape_parameter();

  auto propose = [&](std::size_t size) -> Component {
    switch (shape) {
      case Pattern::Shape::kPath: {
        // Longest path below `param` edges: trees of depth <= (param-1)/2.
        if (param <= 1) return Component{1, {}};
        if (param == 2) return PathComponent(std::min<std::size_t>(size, 2));
        std::size_t depth = (param - 1) / 2;
        return Component{size, RandomTree(size, d, depth, rng)};
      }
      case Pattern::Shape::kStar: {
        std::size_t legs = std::min(param - 1, d);
        switch (rng.Uniform(0, 2)) {
          case 0:
            return PathComponent(size);
          case 1:
            if (size >= 3) return CycleComponent(size);
            return PathComponent(size);
          default:
            return SpiderComponent(std::max<std::size_t>(legs, 1), size, rng);
        }
      }
      case Pattern::Shape::kCycle:
        return CactusComponent(size, d, param - 1, rng);
      case Pattern::Shape::kOther:
        break;
    }
    // Anything with fewer nodes than the pattern is free of it; paths and
    // cycles only have path and cycle minors; forests have no cyclic
    // minors.
    switch (rng.Uniform(0, 2)) {
      case 0:
        if (!pattern.IsForest()) {
          return Component{size, RandomTree(size, d, size, rng)};
        }
        break;
      case 1:
        return size >= 3 ? CycleComponent(size) : PathComponent(size);
      default:
        return PathComponent(size);
    }
    std::size_t small = std::min(size, pattern.size() - 1);
    return Component{std::max<std::size_t>(small, 1),
                     RandomTree(std::max<std::size_t>(small, 1), d, small,
                                rng)};
  };

  Builder b(n, d);
  Vertex next = 1;
  while (next <= n) {
    std::size_t room = n - next + 1;
    std::size_t want = rng.Uniform(1, std::min(room, kMaxComponent));
    Component c{1, {}};
    for (int attempt = 0; attempt < 16; ++attempt) {
      Component cand = propose(want);
      if (cand.size > room) continue;
      if (ExactHasMinor(ComponentGraph(cand, d), pattern)) continue;
      c = std::move(cand);
      break;
    }
    for (auto [x, y] : c.edges) b.Add(next + x, next + y);
    next += static_cast<Vertex>(c.size);
  }
  GroundTruth t;
  t.family = "minor_free";
  t.seed = seed;
  t.k = pattern.size();
  t.pattern = pattern.name();
  t.minor_distance_lower_bound = 0;
  t.certified_minor_free = true;
  return Scramble(Finish(b.Build(), t), seed);
}

Instance GenDisjointCycles(std::size_t n, std::size_t d, std::size_t k,
                           std::uint64_t seed) {
  if (k < 3 || d < 3 || n < k) {
    throw PreconditionError("disjoint_cycles needs k >= 3, d >= 3, n >= k");
  }
  Rng rng(DeriveSeed(seed, 6));
  Builder b(n, d);
  const std::size_t count = n / k;
  auto vertex = [k](std::size_t cyc, std::size_t i) {
    return static_cast<Vertex>(cyc * k + i + 1);
  };
  std::vector<Vertex> hosts;
  for (std::size_t c = 0; c < count; ++c) {
    for (std::size_t i = 0; i < k; ++i) {
      b.Add(vertex(c, i), vertex(c, (i + 1) % k));
    }
    if (c > 0) {
      // Link edge from a fresh cycle vertex to an earlier cycle.
      std::size_t slot = rng.Uniform(0, hosts.size() - 1);
      Vertex host = hosts[slot];
      Vertex mine = vertex(c, rng.Uniform(0, k - 1));
      b.Add(host, mine);
      if (b.spare(host) == 0) {
        hosts[slot] = hosts.back();
        hosts.pop_back();
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (b.spare(vertex(c, i)) > 0) hosts.push_back(vertex(c, i));
    }
  }
  for (Vertex v = static_cast<Vertex>(count * k + 1); v <= n; ++v) {
    std::size_t slot = rng.Uniform(0, hosts.size() - 1);
    Vertex host = hosts[slot];
    b.Add(host, v);
    if (b.spare(host) == 0) {
      hosts[slot] = hosts.back();
      hosts.pop_back();
    }
    hosts.push_back(v);
  }
  Graph g = b.Build();
  std::vector<Vertex> first_cycle;
  for (std::size_t i = 0; i < k; ++i) first_cycle.push_back(vertex(0, i));
  GroundTruth t;
  t.family = "disjoint_cycles";
  t.seed = seed;
  t.k = k;
  t.pattern = Pattern::Cycle(k).name();
  t.minor_distance_lower_bound = count;
  t.witness = CycleWitness(g, SimpleCycle{first_cycle}, k);
  return Scramble(Finish(std::move(g), t), seed);
}

Instance GenLinkedStars(std::size_t n, std::size_t d, std::size_t k,
                        std::uint64_t seed) {
  if (k < 2 || d < k || n < k + 1) {
    throw PreconditionError("linked_stars needs 2 <= k <= d, n >= k + 1");
  }
  Builder b(n, d);
  const std::size_t count = n / (k + 1);
  auto vertex = [k](std::size_t s, std::size_t i) {
    return static_cast<Vertex>(s * (k + 1) + i + 1);
  };
  for (std::size_t s = 0; s < count; ++s) {
    for (std::size_t i = 1; i <= k; ++i) b.Add(vertex(s, 0), vertex(s, i));
    if (s > 0) b.Add(vertex(s - 1, k), vertex(s, 1));
  }
  Vertex tail = vertex(count - 1, k);
  for (Vertex v = static_cast<Vertex>(count * (k + 1) + 1); v <= n; ++v) {
    b.Add(tail, v);
    tail = v;
  }
  Graph g = b.Build();
  std::vector<std::vector<Vertex>> sets;
  for (std::size_t i = 0; i <= k; ++i) sets.push_back({vertex(0, i)});
  Pattern star = Pattern::Star(k);
  GroundTruth t;
  t.family = "linked_stars";
  t.seed = seed;
  t.k = k;
  t.pattern = star.name();
  t.minor_distance_lower_bound = count;
  t.witness = CompleteWitness(g, star, std::move(sets));
  return Scramble(Finish(std::move(g), t), seed);
}

Instance GenPath(std::size_t n, std::size_t d) {
  if (n == 0 || d < 2) throw PreconditionError("path needs n >= 1, d >= 2");
  Builder b(n, d);
  for (Vertex v = 1; v < n; ++v) b.Add(v, v + 1);
  GroundTruth t;
  t.family = "path";
  return Finish(b.Build(), t);
}

Instance GenCycle(std::size_t n, std::size_t d) {
  if (n < 3 || d < 2) throw PreconditionError("cycle needs n >= 3, d >= 2");
  Builder b(n, d);
  for (Vertex v = 1; v <= n; ++v) b.Add(v, v == n ? 1 : v + 1);
  GroundTruth t;
  t.family = "cycle";
  return Finish(b.Build(), t);
}

Instance GenMatching(std::size_t n, std::size_t d) {
  if (n == 0 || d < 1) throw PreconditionError("matching needs n, d >= 1");
  Builder b(n, d);
  for (Vertex v = 1; v + 1 <= n; v += 2) b.Add(v, v + 1);
  GroundTruth t;
  t.family = "matching";
  return Finish(b.Build(), t);
}

Instance Generate(const InstanceSpec& spec) {
  const std::string& f = spec.family;
  Instance inst;
  if (f == "forest") {
    inst = GenForest(spec.n, spec.d, spec.seed);
  } else if (f == "far_from_cycle_free") {
    inst = GenFarFromCycleFree(spec.n, spec.d, spec.eps, spec.seed);
  } else if (f == "lower_bound") {
    inst = GenLowerBoundFamily(spec.n, spec.seed);
  } else if (f == "planted_minor") {
    PlantBase base;
    if (spec.base == "path") {
      base = PlantBase::kPath;
    } else if (spec.base == "tree") {
      base = PlantBase::kTree;
    } else {
      throw PreconditionError("unknown plant base: " + spec.base);
    }
    inst = GenPlantedMinor(spec.n, spec.d, Pattern::Parse(spec.pattern),
                           spec.block, base, spec.seed);
  } else if (f == "clique_plus_cycle") {
    inst = GenCliquePlusCycle(spec.n, spec.isolated);
  } else if (f == "minor_free") {
    inst = GenMinorFree(spec.n, spec.d, Pattern::Parse(spec.pattern),
                        spec.seed);
  } else if (f == "disjoint_cycles") {
    inst = GenDisjointCycles(spec.n, spec.d, spec.k, spec.seed);
  } else if (f == "linked_stars") {
    inst = GenLinkedStars(spec.n, spec.d, spec.k, spec.seed);
  } else if (f == "path") {
    inst = GenPath(spec.n, spec.d);
  } else if (f == "cycle") {
    inst = GenCycle(spec.n, spec.d);
  } else if (f == "matching") {
    inst = GenMatching(spec.n, spec.d);
  } else {
    throw PreconditionError("unknown family: " + f);
  }
  inst.truth.eps_target = spec.eps;
  if (inst.truth.k == 0) inst.truth.k = spec.k;
  inst.truth.seed = spec.seed;
  return inst;
}

}  // namespace minorprop
