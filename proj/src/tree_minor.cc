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

#include "minorprop/tree_minor.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "minorprop/errors.h"
#include "minorprop/rng.h"
#include "minorprop/witness.h"

namespace minorprop {
namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();
// Slack for comparisons of integer counts against real thresholds.
constexpr double kSlack = 1e-9;

void CheckEps(double eps) {
  if (!(eps > 0 && eps <= 1)) {
    throw PreconditionError("eps must be in (0, 1]");
  }
}

std::size_t CeilCount(double x, const char* what) {
  if (!(x < 1e9)) {
    throw PreconditionError(std::string(what) + " exceeds 1e9");
  }
  return static_cast<std::size_t>(std::max(1.0, std::ceil(x - kSlack)));
}

// Number of BFS levels for a real depth bound: floor(t), capped at n.
std::size_t Levels(double t, std::size_t n) {
  if (!(t > 0)) return 0;
  if (t >= static_cast<double>(n)) return n;
  return static_cast<std::size_t>(std::floor(t));
}

std::vector<Vertex> SortedUnique(std::vector<Vertex> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<Vertex> Union(const std::vector<Vertex>& a,
                          const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

std::vector<Vertex> Minus(const std::vector<Vertex>& a,
                          const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool Disjoint(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out.empty();
}

bool Contains(const std::vector<Vertex>& sorted, Vertex x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Depth-limited multi-source BFS that only touches what it reaches.
class Bfs {
 public:
  explicit Bfs(const Graph& g) : g_(g), dist_(g.n() + 1, kUnreached) {}

  // Levels 0..max_depth from `sources`, avoiding `blocked` vertices.
  // Stops early when a level is empty.
  std::vector<std::vector<Vertex>> Run(const std::vector<Vertex>& sources,
                                       const std::vector<bool>& blocked,
                                       std::size_t max_depth) {
    Reset();
    std::vector<std::vector<Vertex>> levels(1);
    for (Vertex s : sources) {
      if (blocked[s] || dist_[s] != kUnreached) continue;
      dist_[s] = 0;
      touched_.push_back(s);
      levels[0].push_back(s);
    }
    for (std::size_t depth = 0; depth < max_depth; ++depth) {
      std::vector<Vertex> next;
      for (Vertex x : levels.back()) {
        for (Vertex w : g_.neighbors(x)) {
          if (blocked[w] || dist_[w] != kUnreached) continue;
          dist_[w] = depth + 1;
          touched_.push_back(w);
          next.push_back(w);
        }
      }
      if (next.empty()) break;
      levels.push_back(std::move(next));
    }
    return levels;
  }

  std::size_t dist(Vertex v) const { return dist_[v]; }

 private:
  void Reset() {
    for (Vertex x : touched_) dist_[x] = kUnreached;
    touched_.clear();
  }

  const Graph& g_;
  std::vector<std::size_t> dist_;
  std::vector<Vertex> touched_;
};

std::vector<bool> Mask(std::size_t n, const std::vector<Vertex>& s) {
  std::vector<bool> m(n + 1, false);
  for (Vertex x : s) m[x] = true;
  return m;
}

bool IsSparse(const Graph& g, const std::vector<Vertex>& s, double zeta) {
  return static_cast<double>(CutSize(g, s)) <=
         zeta * static_cast<double>(s.size()) *
                 static_cast<double>(g.degree_bound()) +
             kSlack;
}

// Largest G - F distance from v to a vertex of s; kUnreached if some
// vertex of s is unreachable.
std::size_t Radius(const Graph& g, Vertex v, const std::vector<Vertex>& s,
                   const std::vector<bool>& blocked) {
  Bfs bfs(g);
  bfs.Run({v}, blocked, g.n());
  std::size_t r = 0;
  for (Vertex x : s) r = std::max(r, bfs.dist(x));
  return r;
}

// Explored part of the input graph: discovered vertices and the edges
// read from expanded ones.
class Exploration {
 public:
  Vertex Add(Vertex x) {
    auto [it, fresh] = local_.emplace(x, static_cast<Vertex>(global_.size()));
    if (fresh) global_.push_back(x);
    return it->second + 1;
  }
  bool Known(Vertex x) const { return local_.count(x) != 0; }
  void AddEdge(Vertex a, Vertex b) {
    Vertex la = Add(a), lb = Add(b);
    edges_.insert(std::minmax(la, lb));
  }
  std::size_t size() const { return global_.size(); }
  const std::vector<Vertex>& vertices() const { return global_; }

  Graph Build(std::size_t d) const {
    std::vector<std::pair<Vertex, Vertex>> e(edges_.begin(), edges_.end());
    return Graph::FromEdges(global_.size(), d, e);
  }
  // Index 0 unused, then local i -> global.
  std::vector<Vertex> ToGlobal() const {
    std::vector<Vertex> out{kNoVertex};
    out.insert(out.end(), global_.begin(), global_.end());
    return out;
  }

 private:
  std::unordered_map<Vertex, Vertex> local_;
  std::vector<Vertex> global_;
  std::set<std::pair<Vertex, Vertex>> edges_;
};

// Expands x: reads its whole list, recording non-forbidden neighbors.
std::vector<Vertex> Expand(QueryOracle& oracle, Vertex x,
                           const std::unordered_set<Vertex>& forbidden,
                           Exploration& ex) {
  std::vector<Vertex> out;
  ex.Add(x);
  for (std::size_t i = 1; i <= oracle.degree_bound(); ++i) {
    Vertex w = oracle.Neighbor(x, i);
    if (w == kNoVertex) break;
    if (forbidden.count(w)) continue;
    ex.AddEdge(x, w);
    out.push_back(w);
  }
  return out;
}

struct TrialResult {
  std::optional<MinorWitness> witness;
  bool truncated = false;
  std::vector<Vertex> discovered;
};

// One tree-tester trial from s: BFS to `depth` levels or exhaustion, then
// an exact check. A forbidden start explores nothing.
TrialResult TreeTrial(QueryOracle& oracle, Vertex s, const Pattern& pattern,
                      double depth, const TreeTesterConfig& config,
                      const std::unordered_set<Vertex>& forbidden) {
  TrialResult r;
  if (forbidden.count(s)) return r;
  Exploration ex;
  std::unordered_set<Vertex> seen{s};
  std::vector<Vertex> level{s};
  ex.Add(s);
  const std::size_t levels = Levels(depth, oracle.n());
  for (std::size_t l = 0; l < levels && !level.empty(); ++l) {
    std::vector<Vertex> next;
    for (Vertex x : level) {
      for (Vertex w : Expand(oracle, x, forbidden, ex)) {
        if (seen.insert(w).second) next.push_back(w);
      }
      if (ex.size() > config.max_explored) {
        r.truncated = true;
        r.discovered = ex.vertices();
        return r;
      }
    }
    level = std::move(next);
  }
  r.discovered = ex.vertices();
  try {
    auto w = ExactFindMinor(ex.Build(oracle.degree_bound()), pattern,
                            config.limits);
    if (w) r.witness = MapWitness(*w, ex.ToGlobal());
  } catch (const InstanceTooLarge&) {
    r.truncated = true;
  }
  return r;
}

// Tree-tester runs on the graph minus `forbidden`; every discovered
// vertex is added to `visited`.
Verdict TreeRuns(QueryOracle& oracle, const Pattern& pattern, double eps,
                 std::size_t runs, const TreeTesterConfig& config, Rng& rng,
                 const std::unordered_set<Vertex>& forbidden,
                 std::vector<Vertex>& visited) {
  const double depth = TreeTesterDepth(pattern.size(), oracle.degree_bound(), eps);
  const std::size_t starts = CeilCount(4 / eps, "start count");
  Verdict verdict;
  for (std::size_t run = 0; run < runs; ++run) {
    for (std::size_t i = 0; i < starts; ++i) {
      Vertex s = static_cast<Vertex>(rng.Uniform(1, oracle.n()));
      TrialResult t = TreeTrial(oracle, s, pattern, depth, config, forbidden);
      visited.insert(visited.end(), t.discovered.begin(), t.discovered.end());
      verdict.truncated |= t.truncated;
      if (t.witness) {
        Verdict v = Verdict::Reject(*t.witness);
        v.truncated = verdict.truncated;
        return v;
      }
    }
  }
  return verdict;
}

// Output guarantees of Find, checked on every return.
void CheckFindOutput(const Graph& g, Vertex v, const RootedTree& t,
                     const std::vector<Vertex>& forbidden,
                     const std::vector<bool>& blocked, double bound,
                     const FindParams& p, FindOutput& out) {
  if (!Disjoint(out.set, forbidden)) {
    throw InternalError("find output meets the forbidden set");
  }
  out.radius = Radius(g, v, out.set, blocked);
  if (out.radius == kUnreached) {
    throw InternalError("find output not reachable from v");
  }
  if (static_cast<double>(out.radius) > bound + kSlack) {
    throw InternalError("find output radius " + std::to_string(out.radius) +
                        " exceeds the distance bound");
  }
  if (out.tag == FindTag::kCut) {
    if (!IsSparse(g, out.set, p.zeta)) {
      throw InternalError("find cut is not zeta-sparse in the whole graph");
    }
    out.cut = SparseCut{out.set, p.zeta};
    return;
  }
  const MinorWitness& w = *out.witness;
  if (!VerifyCertificate(g, w).ok() ||
      w.branch_sets.size() != t.size() ||
      std::find(w.branch_sets[t.root()].begin(), w.branch_sets[t.root()].end(),
                v) == w.branch_sets[t.root()].end()) {
    throw InternalError("find minor witness is invalid or not rooted at v");
  }
  for (const auto& set : w.branch_sets) {
    for (Vertex x : set) {
      if (!Contains(out.set, x)) {
        throw InternalError("find minor leaves its output set");
      }
    }
  }
}

FindOutput CutOutput(std::vector<Vertex> r) {
  FindOutput out;
  out.tag = FindTag::kCut;
  out.set = std::move(r);
  return out;
}

// Shortest G - F path from U to target, without its U endpoint; `anchor`
// receives that endpoint.
std::vector<Vertex> PathFromSet(const Graph& g, const std::vector<Vertex>& u,
                                Vertex target, const std::vector<bool>& blocked,
                                Vertex& anchor) {
  Bfs bfs(g);
  bfs.Run(u, blocked, g.n());
  if (bfs.dist(target) == kUnreached) {
    throw InternalError("boundary vertex unreachable from U");
  }
  std::vector<Vertex> path{target};
  Vertex cur = target;
  while (bfs.dist(cur) > 0) {
    for (Vertex w : g.neighbors(cur)) {
      if (!blocked[w] && bfs.dist(w) + 1 == bfs.dist(cur)) {
        cur = w;
        break;
      }
    }
    if (bfs.dist(cur) > 0) path.push_back(cur);
  }
  anchor = cur;
  std::reverse(path.begin(), path.end());
  return path;
}

// Shortest path inside `allowed` from v to some vertex with is_target.
template <typename Pred>
std::vector<Vertex> PathInside(const Graph& g, Vertex v,
                               const std::vector<bool>& allowed, Pred is_target) {
  std::unordered_map<Vertex, Vertex> parent{{v, kNoVertex}};
  std::vector<Vertex> queue{v};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Vertex x = queue[qi];
    if (is_target(x)) {
      std::vector<Vertex> path;
      for (Vertex y = x; y != kNoVertex; y = parent[y]) path.push_back(y);
      return path;
    }
    for (Vertex w : g.neighbors(x)) {
      if (allowed[w] && parent.emplace(w, x).second) queue.push_back(w);
    }
  }
  return {};
}

FindOutput FindImpl(const Graph& g, Vertex v, std::vector<Vertex> u,
                    const RootedTree& t, const std::vector<Vertex>& forbidden,
                    const FindParams& p) {
  const double zeta = p.zeta;
  const std::size_t k = t.size();
  const double f = FindF(p, k, forbidden.size());
  const double bound = FindDistanceBound(p, k, f);
  const std::vector<bool> blocked = Mask(g.n(), forbidden);
  u = SortedUnique(std::move(u));

  if (!Contains(u, v)) throw PreconditionError("find: v must lie in U");
  if (!Disjoint(u, forbidden)) {
    throw PreconditionError("find: U meets the forbidden set");
  }
  const double need = 4 * f / zeta;
  if (static_cast<double>(u.size()) + kSlack < need) {
    throw PreconditionError("find: |U| = " + std::to_string(u.size()) +
                            " is below 4f/zeta = " + std::to_string(need));
  }
  Bfs from_v(g);
  from_v.Run({v}, blocked, g.n());
  for (Vertex x : u) {
    if (static_cast<double>(from_v.dist(x)) >
        4 / zeta * std::log(f / zeta) + kSlack) {
      throw PreconditionError("find: U is not within (4/zeta) ln(f/zeta) of v");
    }
  }

  if (k == 1) {
    FindOutput out;
    out.tag = FindTag::kMinor;
    out.set = u;
    out.witness = MinorWitness{Pattern::FromTree(t), {{v}}, {}};
    CheckFindOutput(g, v, t, forbidden, blocked, bound, p, out);
    return out;
  }

  // Trim U to ceil(4f/zeta), farthest first, larger id first on ties.
  const std::size_t keep = static_cast<std::size_t>(std::ceil(need - kSlack));
  if (u.size() > keep) {
    std::vector<Vertex> order = u;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return std::make_pair(from_v.dist(a), a) < std::make_pair(from_v.dist(b), b);
    });
    order.resize(keep);
    u = SortedUnique(std::move(order));
  }

  // The root edge whose far side is largest, smaller node id on ties.
  int child = -1;
  for (int c : t.children(t.root())) {
    if (child < 0 || t.SubtreeSize(c) > t.SubtreeSize(child) ||
        (t.SubtreeSize(c) == t.SubtreeSize(child) && c < child)) {
      child = c;
    }
  }
  const RootedTree::Split split = t.SplitAt(child);
  const std::size_t k1 = split.upper.size();
  const double d1 = std::pow(p.depth_base, 4.0 * k1 - 2) *
                    std::log(6 * f / (zeta * zeta));

  auto finish = [&](FindOutput out) {
    CheckFindOutput(g, v, t, forbidden, blocked, bound, p, out);
    return out;
  };

  // Step 1: grow A, all vertices within 2 D_1 of U.
  DichotomyResult step1 = BfsDichotomy(g, u, forbidden, 2 * d1, zeta);
  if (step1.cut) return finish(CutOutput(step1.reached));
  const std::vector<Vertex>& a = step1.reached;

  // Step 2: a rooted T_2-minor beyond A.
  const std::vector<Vertex> a_boundary = Boundary(g, a, forbidden);
  const std::vector<Vertex> f2 = Union(Minus(a, a_boundary), forbidden);
  const double t2 = 3 / zeta * std::log(4 * static_cast<double>(f2.size()) / zeta);
  CutOrGoodResult step2 = CutOrGood(g, a, forbidden, t2, zeta);
  if (step2.cut) return finish(CutOutput(step2.set));
  const Vertex v2 = step2.vertex;
  FindOutput sub2 = FindImpl(g, v2, step2.set, split.lower, f2, p);
  std::size_t calls = 1 + sub2.calls;
  if (sub2.tag == FindTag::kCut) {
    FindOutput out = CutOutput(sub2.set);
    out.calls = calls;
    return finish(std::move(out));
  }

  // Step 3: a path P from U to v2 and a rooted T_1-minor at U's boundary.
  Vertex anchor = kNoVertex;
  const std::vector<Vertex> path = PathFromSet(g, u, v2, blocked, anchor);
  const std::vector<Vertex> f_prime = Union(forbidden, SortedUnique(path));
  const std::vector<Vertex> f1 =
      Union(Minus(u, Boundary(g, u, f_prime)), f_prime);
  const double ff1 = FindF(p, k1, f1.size());
  const double t3 = 3 / zeta * std::log(4 * ff1 / zeta);
  CutOrGoodResult step3 = CutOrGood(g, u, f_prime, t3, zeta);
  if (step3.cut) {
    FindOutput out = CutOutput(step3.set);
    out.calls = calls;
    return finish(std::move(out));
  }
  FindOutput sub1 = FindImpl(g, step3.vertex, step3.set, split.upper, f1, p);
  calls += sub1.calls;
  if (sub1.tag == FindTag::kCut) {
    FindOutput out = CutOutput(sub1.set);
    out.calls = calls;
    return finish(std::move(out));
  }

  // Compose: the root set joins v, the T_1 root set and P minus v2.
  const MinorWitness& w1 = *sub1.witness;
  const MinorWitness& w2 = *sub2.witness;
  std::vector<bool> taken(g.n() + 1, false);
  for (std::size_t i = 1; i < w1.branch_sets.size(); ++i) {
    for (Vertex x : w1.branch_sets[i]) taken[x] = true;
  }
  for (const auto& set : w2.branch_sets) {
    for (Vertex x : set) taken[x] = true;
  }
  const std::vector<Vertex> tail(path.begin(), path.end() - 1);
  std::vector<bool> allowed(g.n() + 1, false);
  for (Vertex x : u) allowed[x] = true;
  for (Vertex x : tail) allowed[x] = true;
  for (Vertex x : w1.branch_sets[0]) allowed[x] = true;
  for (Vertex x : forbidden) allowed[x] = false;
  bool clash = !allowed[v];
  for (Vertex x : tail) clash |= taken[x];
  for (Vertex x = 1; x <= g.n(); ++x) {
    if (taken[x]) allowed[x] = false;
  }
  const std::vector<bool> root1 = Mask(g.n(), w1.branch_sets[0]);
  const std::vector<bool> root2 = Mask(g.n(), w2.branch_sets[0]);
  std::vector<Vertex> to_root1 =
      PathInside(g, v, allowed, [&](Vertex x) { return root1[x]; });
  std::vector<Vertex> to_t2 = PathInside(g, v, allowed, [&](Vertex x) {
    for (Vertex w : g.neighbors(x)) {
      if (root2[w]) return true;
    }
    return false;
  });
  if (clash || to_root1.empty() || to_t2.empty()) {
    throw InternalError("find: the two rooted minors could not be joined");
  }
  std::vector<Vertex> root = w1.branch_sets[0];
  root.insert(root.end(), to_root1.begin(), to_root1.end());
  root.insert(root.end(), to_t2.begin(), to_t2.end());
  root = SortedUnique(std::move(root));

  std::vector<std::vector<Vertex>> sets(k);
  for (std::size_t i = 0; i < split.upper_nodes.size(); ++i) {
    sets[split.upper_nodes[i]] = i == 0 ? root : w1.branch_sets[i];
  }
  for (std::size_t i = 0; i < split.lower_nodes.size(); ++i) {
    sets[split.lower_nodes[i]] = w2.branch_sets[i];
  }
  FindOutput out;
  out.tag = FindTag::kMinor;
  out.set = Union(Union(u, SortedUnique(path)), Union(sub1.set, sub2.set));
  out.set = Union(out.set, root);
  out.witness = CompleteWitness(g, Pattern::FromTree(t), std::move(sets));
  out.calls = calls;
  return finish(std::move(out));
}

}  // namespace

Verdict TestPathMinorFree(QueryOracle& oracle, std::size_t k, double eps,
                          const PathTesterConfig& config, std::uint64_t seed) {
  CheckEps(eps);
  if (k < 1) throw PreconditionError("path tester needs k >= 1");
  const std::size_t d = oracle.degree_bound();
  const std::size_t trials = CeilCount(
      config.c * std::pow(static_cast<double>(d), static_cast<double>(k)) / eps,
      "trial count");
  Rng rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<Vertex> path{static_cast<Vertex>(rng.Uniform(1, oracle.n()))};
    while (path.size() <= k) {
      Vertex w = oracle.Neighbor(path.back(), rng.Uniform(1, d));
      if (w == kNoVertex ||
          std::find(path.begin(), path.end(), w) != path.end()) {
        break;
      }
      path.push_back(w);
    }
    if (path.size() == k + 1) {
      MinorWitness w{Pattern::Path(k), {}, {}};
      for (Vertex x : path) w.branch_sets.push_back({x});
      for (std::size_t i = 0; i < k; ++i) {
        w.connecting_edges.emplace_back(path[i], path[i + 1]);
      }
      return Verdict::Reject(std::move(w));
    }
  }
  return Verdict::Accept();
}

Verdict TestStarMinorFree(QueryOracle& oracle, std::size_t k, double eps,
                          std::uint64_t seed) {
  CheckEps(eps);
  if (k < 2) throw PreconditionError("star tester needs k >= 2");
  const std::size_t trials = CeilCount(4 / eps, "trial count");
  const std::size_t layers =
      CeilCount(2 * static_cast<double>(k) / eps, "layer count");
  const Pattern star = Pattern::Star(k);
  const std::unordered_set<Vertex> none;
  Rng rng(seed);
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const Vertex s = static_cast<Vertex>(rng.Uniform(1, oracle.n()));
    Exploration ex;
    ex.Add(s);
    std::unordered_set<Vertex> seen{s};
    std::vector<Vertex> level{s};
    for (std::size_t l = 0; l < layers && !level.empty() && level.size() < k;
         ++l) {
      std::vector<Vertex> next;
      for (Vertex x : level) {
        for (Vertex w : Expand(oracle, x, none, ex)) {
          if (seen.insert(w).second) next.push_back(w);
        }
      }
      level = std::move(next);
    }
    auto w = ExactFindMinor(ex.Build(oracle.degree_bound()), star);
    if (w) return Verdict::Reject(MapWitness(*w, ex.ToGlobal()));
  }
  return Verdict::Accept();
}

double TreeTesterDepth(std::size_t k, std::size_t d, double eps) {
  return static_cast<double>(k) *
         std::pow(8 * static_cast<double>(d) / eps, 4.0 * k + 2);
}

Verdict TestTreeMinorFree(QueryOracle& oracle, const RootedTree& t, double eps,
                          const TreeTesterConfig& config, std::uint64_t seed) {
  CheckEps(eps);
  if (t.size() < 2) throw PreconditionError("tree tester needs >= 2 nodes");
  Rng rng(seed);
  std::vector<Vertex> visited;
  return TreeRuns(oracle, Pattern::FromTree(t), eps, 1, config, rng, {},
                  visited);
}

Verdict TestForestMinorFree(QueryOracle& oracle, const Pattern& h, double eps,
                            const TreeTesterConfig& config, std::uint64_t seed) {
  CheckEps(eps);
  if (!h.IsForest() || h.size() == 0) {
    throw PreconditionError("forest tester needs a nonempty forest pattern");
  }
  const auto comps = h.Components();
  const std::size_t m = comps.size();
  // Error 1/3 per run; runs with error (1/3)^runs <= 1/(3m).
  const std::size_t runs = static_cast<std::size_t>(
      std::ceil(std::log(3.0 * static_cast<double>(m)) / std::log(3.0) - kSlack));
  Rng rng(seed);
  std::unordered_set<Vertex> forbidden;
  std::vector<MinorWitness> parts;
  bool truncated = false;
  for (const auto& nodes : comps) {
    std::vector<Vertex> visited;
    Verdict v = TreeRuns(oracle, h.Induced(nodes), eps / 2, std::max<std::size_t>(runs, 1),
                         config, rng, forbidden, visited);
    truncated |= v.truncated;
    if (!v.reject) {
      Verdict out = Verdict::Accept();
      out.truncated = truncated;
      return out;
    }
    parts.push_back(std::get<MinorWitness>(*v.certificate));
    forbidden.insert(visited.begin(), visited.end());
  }
  // Renumber the component witnesses into h's nodes and edge order.
  MinorWitness w{h, std::vector<std::vector<Vertex>>(h.size()), {}};
  std::vector<std::pair<int, int>> where(h.size());  // (component, index)
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t i = 0; i < comps[c].size(); ++i) {
      w.branch_sets[comps[c][i]] = parts[c].branch_sets[i];
      where[comps[c][i]] = {static_cast<int>(c), static_cast<int>(i)};
    }
  }
  for (auto [a, b] : h.edges()) {
    const MinorWitness& part = parts[where[a].first];
    const auto& pe = part.pattern.edges();
    const int ia = where[a].second, ib = where[b].second;
    for (std::size_t j = 0; j < pe.size(); ++j) {
      if (pe[j] == std::make_pair(std::min(ia, ib), std::max(ia, ib))) {
        auto e = part.connecting_edges[j];
        if (pe[j].first != ia) std::swap(e.first, e.second);
        w.connecting_edges.push_back(e);
        break;
      }
    }
  }
  Verdict out = Verdict::Reject(std::move(w));
  out.truncated = truncated;
  return out;
}

FindParams FindParams::Analysis(std::size_t d, double zeta) {
  const double base = 4 * static_cast<double>(d) / zeta;
  return FindParams{zeta, base, base, base};
}

double FindF(const FindParams& p, std::size_t k, std::size_t forbidden) {
  const double floor =
      static_cast<double>(k) * std::pow(p.floor_base, 4.0 * k + 2);
  return std::max(static_cast<double>(forbidden), floor);
}

double FindDistanceBound(const FindParams& p, std::size_t k, double f) {
  return std::pow(p.bound_base, 4.0 * k - 2) * std::log(f / p.zeta);
}

std::vector<Vertex> Boundary(const Graph& g, const std::vector<Vertex>& s,
                             const std::vector<Vertex>& forbidden) {
  const std::vector<bool> in_s = Mask(g.n(), s);
  const std::vector<bool> in_f = Mask(g.n(), forbidden);
  std::vector<Vertex> out;
  for (Vertex x : s) {
    for (Vertex w : g.neighbors(x)) {
      if (!in_s[w] && !in_f[w]) {
        out.push_back(x);
        break;
      }
    }
  }
  return SortedUnique(std::move(out));
}

DichotomyResult BfsDichotomy(const Graph& g, const std::vector<Vertex>& m,
                             const std::vector<Vertex>& forbidden, double t,
                             double zeta) {
  if (!(zeta > 0 && zeta <= 1)) throw PreconditionError("zeta must be in (0, 1]");
  const std::vector<Vertex> ms = SortedUnique(m);
  const std::vector<Vertex> fs = SortedUnique(forbidden);
  if (ms.empty() || !Disjoint(ms, fs)) {
    throw PreconditionError("BFS needs a nonempty M disjoint from F");
  }
  if (static_cast<double>(ms.size()) + kSlack <
      2 / zeta * static_cast<double>(fs.size())) {
    throw PreconditionError("BFS needs |M| >= (2/zeta)|F|");
  }
  const std::vector<bool> blocked = Mask(g.n(), fs);
  std::vector<bool> seen = Mask(g.n(), ms);
  DichotomyResult r;
  r.reached = ms;
  std::vector<Vertex> frontier = ms;
  const std::size_t levels = Levels(t, g.n());
  for (std::size_t depth = 0; depth < levels; ++depth) {
    std::vector<Vertex> next;
    for (Vertex x : frontier) {
      for (Vertex w : g.neighbors(x)) {
        if (blocked[w] || seen[w]) continue;
        seen[w] = true;
        next.push_back(w);
      }
    }
    if (static_cast<double>(next.size()) <=
        zeta * static_cast<double>(r.reached.size()) / 2 + kSlack) {
      r.cut = true;
      r.depth = depth;
      std::sort(r.reached.begin(), r.reached.end());
      if (!IsSparse(g, r.reached, zeta)) {
        throw InternalError("BFS cut is not zeta-sparse");
      }
      return r;
    }
    r.reached.insert(r.reached.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(r.reached.begin(), r.reached.end());
  r.last_level = SortedUnique(std::move(frontier));
  r.depth = levels;
  return r;
}

CutOrGoodResult CutOrGood(const Graph& g, const std::vector<Vertex>& m,
                          const std::vector<Vertex>& forbidden, double t,
                          double zeta) {
  DichotomyResult d = BfsDichotomy(g, m, forbidden, t, zeta);
  CutOrGoodResult r;
  if (d.cut) {
    r.cut = true;
    r.set = std::move(d.reached);
    return r;
  }
  const std::vector<Vertex> ms = SortedUnique(m);
  const std::vector<Vertex> boundary = Boundary(g, ms, forbidden);
  if (boundary.empty()) {
    // Every edge leaving M goes to F, and |F| <= zeta |M| / 2.
    r.cut = true;
    r.set = ms;
    return r;
  }
  const std::vector<bool> blocked =
      Mask(g.n(), Union(Minus(ms, boundary), SortedUnique(forbidden)));
  const std::size_t levels = Levels(t, g.n());
  Bfs bfs(g);
  for (Vertex b : boundary) {
    std::vector<Vertex> ball;
    for (auto& level : bfs.Run({b}, blocked, levels)) {
      ball.insert(ball.end(), level.begin(), level.end());
    }
    if (ball.size() > r.set.size()) {
      r.set = SortedUnique(std::move(ball));
      r.vertex = b;
    }
  }
  return r;
}

FindOutput Find(const Graph& g, Vertex v, const std::vector<Vertex>& u,
                const RootedTree& t, const std::vector<Vertex>& forbidden,
                const FindParams& params) {
  if (!(params.zeta > 0 && params.zeta <= 1)) {
    throw PreconditionError("zeta must be in (0, 1]");
  }
  if (v < 1 || v > g.n()) throw PreconditionError("find: v out of range");
  return FindImpl(g, v, u, t, SortedUnique(forbidden), params);
}

Decomposition DecomposeToMinorFree(const Graph& g, const RootedTree& t,
                                   double eps, const FindParams& params,
                                   const MinorSearchLimits& limits) {
  CheckEps(eps);
  if (std::abs(params.zeta - eps / 2) > kSlack) {
    throw PreconditionError("decomposition runs find with zeta = eps / 2");
  }
  const Pattern pattern = Pattern::FromTree(t);
  const std::size_t k = t.size();
  const std::size_t n = g.n();
  const double zeta = params.zeta;
  const double depth = FindF(params, k, 0);  // k * base^(4k+2)
  const std::size_t levels = Levels(depth, n);
  Decomposition out;

  // Bad vertices: the depth-D ball holds a T-minor. A ball that is a whole
  // component shares the component's answer.
  std::vector<int> comp_of(n + 1, -1);
  const auto comps = g.Components();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (Vertex x : comps[c]) comp_of[x] = static_cast<int>(c);
  }
  std::vector<int> comp_has(comps.size(), -1);
  Bfs bfs(g);
  const std::vector<bool> none(n + 1, false);
  for (Vertex v = 1; v <= n; ++v) {
    std::vector<Vertex> ball;
    for (auto& level : bfs.Run({v}, none, levels)) {
      ball.insert(ball.end(), level.begin(), level.end());
    }
    bool has = false;
    const int c = comp_of[v];
    if (ball.size() == comps[c].size()) {
      if (comp_has[c] < 0) {
        comp_has[c] = ExactHasMinor(g.Induced(comps[c]), pattern, limits);
      }
      has = comp_has[c] != 0;
    } else {
      std::sort(ball.begin(), ball.end());
      has = ExactHasMinor(g.Induced(ball), pattern, limits);
    }
    if (has) out.bad.push_back(v);
  }
  out.rho = n == 0 ? 0 : static_cast<double>(out.bad.size()) / static_cast<double>(n);
  const std::vector<bool> bad = Mask(n, out.bad);
  for (const CanonicalEdge& e : g.Edges()) {
    if (bad[e.u] || bad[e.v]) out.removed.push_back(e);
  }
  out.bad_edges = out.removed.size();
  Graph work = g.WithoutEdges(out.removed);

  std::vector<bool> marked(n + 1, false);
  for (;;) {
    std::vector<Vertex> open;
    for (const auto& c : work.Components()) {
      if (!marked[c.front()]) {
        open = c;
        break;
      }
    }
    if (open.empty()) break;
    // A component within depth D of one of its vertices has no T-minor,
    // since that vertex is not bad.
    Bfs within(work);
    auto covers = [&](Vertex x) {
      std::size_t reached = 0;
      for (auto& level : within.Run({x}, none, levels)) reached += level.size();
      return reached == open.size();
    };
    bool small = open.size() <= levels + 1;
    for (std::size_t i = 0; i < open.size() && !small; ++i) small = covers(open[i]);
    std::vector<Vertex> piece;
    if (small) {
      piece = open;
    } else {
      const Vertex s = open.front();
      const double f = FindF(params, k, 0);
      const double d0 = 3 / zeta * std::log(4 * f / zeta);
      DichotomyResult r = BfsDichotomy(work, {s}, {}, d0, zeta);
      if (r.cut) {
        piece = r.reached;
      } else {
        FindOutput fo = Find(work, s, r.reached, t, {}, params);
        out.find_calls += fo.calls;
        if (fo.tag == FindTag::kMinor) {
          throw InternalError("find met a T-minor around a vertex that is not bad");
        }
        piece = fo.set;
      }
      if (!IsSparse(work, piece, zeta)) {
        throw InternalError("decomposition cut is not zeta-sparse");
      }
      const std::vector<bool> in_piece = Mask(n, piece);
      std::vector<CanonicalEdge> cut;
      for (Vertex x : piece) {
        for (Vertex w : work.neighbors(x)) {
          if (!in_piece[w]) cut.push_back(CanonicalEdge::Of(x, w));
        }
      }
      out.cut_edges += cut.size();
      out.removed.insert(out.removed.end(), cut.begin(), cut.end());
      work = work.WithoutEdges(cut);
    }
    for (Vertex x : piece) marked[x] = true;
  }
  std::sort(out.removed.begin(), out.removed.end());
  out.components = work.Components();
  for (const auto& c : out.components) {
    if (ExactHasMinor(work.Induced(c), pattern, limits)) {
      throw InternalError("a marked component contains the tree minor");
    }
  }
  out.budget = (out.rho + eps / 2) * static_cast<double>(g.degree_bound()) *
               static_cast<double>(n);
  return out;
}

}  // namespace minorprop
