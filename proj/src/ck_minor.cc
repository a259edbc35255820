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

#include "minorprop/ck_minor.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <utility>

#include "minorprop/exact.h"
#include "minorprop/rng.h"
#include "minorprop/walker.h"

namespace minorprop {
namespace {

bool Contains(const std::vector<Vertex>& sorted, Vertex x) {
  return std::binary_search(sorted.begin(), sorted.end(), x);
}

SimpleCycle MapCycle(const SimpleCycle& local,
                     const std::vector<Vertex>& to_global) {
  SimpleCycle out;
  for (Vertex x : local.vertices) out.vertices.push_back(to_global[x - 1]);
  return out;
}

// Connected after deleting any single vertex, and at least 3 vertices.
bool IsBiconnected(const Graph& g) {
  if (g.n() < 3) return false;
  for (Vertex cut = 0; cut <= g.n(); ++cut) {
    std::vector<bool> seen(g.n() + 1, false);
    Vertex start = cut == 1 ? 2 : 1;
    std::vector<Vertex> stack{start};
    seen[start] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(x)) {
        if (w == cut || seen[w]) continue;
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
    if (reached != g.n() - (cut == 0 ? 0 : 1)) return false;
  }
  return true;
}

// Interior of a shortest path between distinct vertices of S of length
// <= max_len whose interior avoids S; empty if there is none.
std::vector<Vertex> ShortExternalPath(LocalGraph& local,
                                      const std::vector<Vertex>& s,
                                      std::size_t max_len) {
  for (Vertex u : s) {
    std::unordered_map<Vertex, std::pair<Vertex, std::size_t>> parent;
    std::vector<Vertex> queue;
    for (Vertex w : local.Neighbors(u)) {
      if (Contains(s, w) || parent.count(w)) continue;
      parent.emplace(w, std::make_pair(kNoVertex, 1));
      queue.push_back(w);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Vertex y = queue[qi];
      const std::size_t dist = parent.at(y).second;
      for (Vertex w : local.Neighbors(y)) {
        if (w != u && Contains(s, w)) {
          std::vector<Vertex> interior;
          for (Vertex z = y; z != kNoVertex; z = parent.at(z).first) {
            interior.push_back(z);
          }
          return interior;
        }
      }
      if (dist + 1 >= max_len) continue;
      for (Vertex w : local.Neighbors(y)) {
        if (Contains(s, w) || parent.count(w)) continue;
        parent.emplace(w, std::make_pair(y, dist + 1));
        queue.push_back(w);
      }
    }
  }
  return {};
}

std::size_t SaturatingPow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::size_t>::max() / base) {
      return std::numeric_limits<std::size_t>::max();
    }
    out *= base;
  }
  return out;
}

// Grows the closure of an anchor cycle by adjoining external paths of
// length < 2k until none is left.
std::vector<Vertex> GrowSpot(LocalGraph& local, const SimpleCycle& anchor,
                             std::size_t k, std::size_t size_cap) {
  std::vector<Vertex> s = anchor.vertices;
  std::sort(s.begin(), s.end());
  while (true) {
    Graph gs = local.Induced(s);
    if (auto c = FindCycleAtLeast(gs, k)) throw LongCycleFound(MapCycle(*c, s));
    if (!IsBiconnected(gs)) throw InternalError("spot closure lost 2-connectivity");
    if (s.size() > size_cap) throw InternalError("spot exceeds d^(k-1) vertices");
    std::vector<Vertex> interior = ShortExternalPath(local, s, 2 * k - 1);
    if (interior.empty()) return s;
    s.insert(s.end(), interior.begin(), interior.end());
    std::sort(s.begin(), s.end());
  }
}

}  // namespace

LongCycleFound::LongCycleFound(SimpleCycle cycle)
    : MinorpropError("cycle of length " + std::to_string(cycle.length()) +
                     " found during spot discovery"),
      cycle_(std::move(cycle)) {}

const std::vector<Vertex>& LocalGraph::Neighbors(Vertex v) {
  auto it = adj_.find(v);
  if (it != adj_.end()) return it->second;
  std::vector<Vertex> list;
  for (std::size_t i = 1; i <= oracle_.degree_bound(); ++i) {
    const Vertex u = oracle_.Neighbor(v, i);
    if (u == kNoVertex) break;
    list.push_back(u);
  }
  return adj_.emplace(v, std::move(list)).first->second;
}

bool LocalGraph::Adjacent(Vertex u, Vertex v) {
  const auto& nu = Neighbors(u);
  return std::find(nu.begin(), nu.end(), v) != nu.end();
}

std::vector<Vertex> LocalGraph::Known() const {
  std::vector<Vertex> out;
  for (const auto& [v, list] : adj_) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

Graph LocalGraph::Induced(const std::vector<Vertex>& keep) {
  Graph out(keep.size(), std::max<std::size_t>(oracle_.degree_bound(), 1));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (Vertex w : Neighbors(keep[i])) {
      auto it = std::lower_bound(keep.begin(), keep.end(), w);
      if (it == keep.end() || *it != w) continue;
      const auto j = static_cast<std::size_t>(it - keep.begin());
      if (j > i) out.AddEdge(static_cast<Vertex>(i + 1), static_cast<Vertex>(j + 1));
    }
  }
  return out;
}

std::vector<Spot> FindSpots(LocalGraph& local, Vertex v, std::size_t k) {
  if (k < 4) throw PreconditionError("spots need k >= 4");
  // Every simple cycle through v of length <= 2k; the long ones end the
  // search, the short ones anchor closures.
  std::vector<SimpleCycle> anchors;
  std::vector<Vertex> path{v};
  std::function<void(Vertex)> extend = [&](Vertex x) {
    for (Vertex w : local.Neighbors(x)) {
      if (w == v) {
        if (path.size() < 3) continue;
        SimpleCycle c{path};
        if (c.length() >= k) throw LongCycleFound(std::move(c));
        anchors.push_back(std::move(c));
      } else if (path.size() < 2 * k &&
                 std::find(path.begin(), path.end(), w) == path.end()) {
        path.push_back(w);
        extend(w);
        path.pop_back();
      }
    }
  };
  extend(v);

  const std::size_t cap = GPrimeDegreeBound(local.degree_bound(), k);
  std::map<std::vector<Vertex>, Spot> found;
  for (const SimpleCycle& anchor : anchors) {
    bool covered = false;
    for (const auto& [set, spot] : found) {
      covered = std::all_of(anchor.vertices.begin(), anchor.vertices.end(),
                            [&](Vertex x) { return Contains(set, x); });
      if (covered) break;
    }
    if (covered) continue;
    std::vector<Vertex> s = GrowSpot(local, anchor, k, cap);
    found.emplace(s, Spot{s, k, anchor});
  }

  std::vector<Spot> out;
  for (auto& [set, spot] : found) out.push_back(std::move(spot));
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      std::vector<Vertex> common;
      std::set_intersection(out[i].vertices.begin(), out[i].vertices.end(),
                            out[j].vertices.begin(), out[j].vertices.end(),
                            std::back_inserter(common));
      if (common.size() > 1) throw InternalError("two spots share an edge");
    }
  }
  return out;
}

std::vector<Spot> FindSpots(QueryOracle& oracle, Vertex v, std::size_t k) {
  LocalGraph local(oracle);
  return FindSpots(local, v, k);
}

std::size_t GPrimeDegreeBound(std::size_t d, std::size_t k) {
  return k == 4 ? SaturatingPow(d, 2) : SaturatingPow(d, k - 1);
}

GPrimeView::GPrimeView(QueryOracle& oracle, std::size_t k)
    : local_(oracle),
      k_(k),
      d_(std::max<std::size_t>(oracle.degree_bound(), 1)),
      degree_bound_(GPrimeDegreeBound(oracle.degree_bound(), k)) {
  if (k < 4) throw PreconditionError("G' needs k >= 4");
  if (oracle.n() >= kHubBit) throw PreconditionError("too many vertices for hub ids");
}

std::size_t GPrimeView::vertex_count_estimate() const {
  const std::size_t n = local_.n();
  const std::size_t hubs = k_ == 4 ? n * (d_ * (d_ - 1) / 2) / 3 : n * d_ / 2;
  return n + hubs;
}

std::vector<std::vector<Vertex>> GPrimeView::HubSets(Vertex v) {
  std::vector<std::vector<Vertex>> out;
  if (k_ == 4) {
    const std::vector<Vertex> nb = local_.Neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        if (!local_.Adjacent(nb[i], nb[j])) continue;
        std::vector<Vertex> t{v, nb[i], nb[j]};
        std::sort(t.begin(), t.end());
        out.push_back(std::move(t));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  for (Spot& s : FindSpots(local_, v, k_)) out.push_back(std::move(s.vertices));
  return out;
}

VertexId GPrimeView::Intern(const std::vector<Vertex>& members) {
  auto it = hub_ids_.find(members);
  if (it != hub_ids_.end()) return it->second;
  if (hubs_.size() >= kHubBit) throw InternalError("hub ids exhausted");
  const VertexId id = kHubBit | hubs_.size();
  hubs_.push_back(members);
  hub_ids_.emplace(members, id);
  return id;
}

const std::vector<VertexId>& GPrimeView::HubsOf(Vertex v) {
  auto it = hubs_of_.find(v);
  if (it != hubs_of_.end()) return it->second;
  std::vector<VertexId> ids;
  for (const auto& set : HubSets(v)) ids.push_back(Intern(set));
  return hubs_of_.emplace(v, std::move(ids)).first->second;
}

const std::vector<Vertex>& GPrimeView::HubMembers(VertexId hub) const {
  const VertexId index = hub & ~kHubBit;
  if (!IsHub(hub) || index >= hubs_.size()) {
    throw PreconditionError("unknown hub " + std::to_string(hub));
  }
  return hubs_[index];
}

const std::vector<VertexId>& GPrimeView::Adjacency(VertexId x) {
  auto it = adjacency_.find(static_cast<Vertex>(x));
  if (it != adjacency_.end()) return it->second;
  std::vector<VertexId> list;
  if (IsHub(x)) {
    for (Vertex m : HubMembers(x)) list.push_back(m);
  } else {
    if (x == 0 || x > local_.n()) {
      throw PreconditionError("vertex " + std::to_string(x) + " out of range");
    }
    const auto v = static_cast<Vertex>(x);
    const std::vector<VertexId> hubs = HubsOf(v);
    for (Vertex u : local_.Neighbors(v)) {
      const bool inside = std::any_of(hubs.begin(), hubs.end(), [&](VertexId h) {
        return Contains(HubMembers(h), u);
      });
      if (!inside) list.push_back(u);
    }
    list.insert(list.end(), hubs.begin(), hubs.end());
  }
  if (list.size() > degree_bound_) throw InternalError("G' degree bound exceeded");
  return adjacency_.emplace(static_cast<Vertex>(x), std::move(list)).first->second;
}

VertexId GPrimeView::Neighbor(VertexId x, std::size_t i) {
  const auto& list = Adjacency(x);
  return i >= 1 && i <= list.size() ? list[i - 1] : 0;
}

std::uint64_t GPrimeView::PickRange(Vertex v, bool hub_branch) {
  if (!hub_branch) return 1;
  if (k_ == 4) {
    const std::uint64_t deg = local_.Neighbors(v).size();
    return deg < 2 ? 0 : deg * (deg - 1);
  }
  return HubsOf(v).size();
}

std::uint64_t GPrimeView::AcceptRange(Vertex v, bool hub_branch,
                                      std::uint64_t pick) {
  if (!hub_branch) return k_ == 4 ? d_ * d_ : d_;
  if (k_ == 4) return 6 * d_ * d_;
  return d_ * HubMembers(HubsOf(v).at(pick)).size();
}

std::optional<VertexId> GPrimeView::SampleOutcome(const GPrimeDraw& draw) {
  if (draw.pick >= PickRange(draw.v, draw.hub_branch)) return std::nullopt;
  if (!draw.hub_branch) {
    if (draw.accept != 0) return std::nullopt;
    return draw.v;
  }
  if (k_ == 4) {
    // Ordered pair (a, b), a != b, accepted with probability
    // deg (deg - 1) / (6 d^2) = d^-2 C(deg, 2) / 3.
    const std::vector<Vertex>& nb = local_.Neighbors(draw.v);
    const std::uint64_t deg = nb.size();
    if (draw.accept >= deg * (deg - 1)) return std::nullopt;
    const std::uint64_t a = draw.pick / (deg - 1);
    std::uint64_t b = draw.pick % (deg - 1);
    if (b >= a) ++b;
    if (!local_.Adjacent(nb[a], nb[b])) return std::nullopt;
    std::vector<Vertex> t{draw.v, nb[a], nb[b]};
    std::sort(t.begin(), t.end());
    return Intern(t);
  }
  // Spot S in S_v accepted with probability |S_v| / (d |S|).
  const VertexId hub = HubsOf(draw.v)[draw.pick];
  if (draw.accept >= HubsOf(draw.v).size()) return std::nullopt;
  return hub;
}

std::optional<VertexId> GPrimeView::TrySample(Rng& rng) {
  const std::size_t n = local_.n();
  if (n == 0) return std::nullopt;
  GPrimeDraw draw;
  draw.v = static_cast<Vertex>(rng.Uniform(1, n));
  draw.hub_branch = rng.Uniform(0, 1) == 1;
  const std::uint64_t picks = PickRange(draw.v, draw.hub_branch);
  if (picks == 0) return std::nullopt;
  draw.pick = rng.Uniform(0, picks - 1);
  draw.accept =
      rng.Uniform(0, AcceptRange(draw.v, draw.hub_branch, draw.pick) - 1);
  return SampleOutcome(draw);
}

std::size_t GPrimeView::sample_attempts() const {
  return 2 * (k_ == 4 ? d_ * d_ : d_) * SampleRetryCap(local_.n());
}

std::vector<VertexId> GPrimeView::Roots() const {
  std::vector<VertexId> roots(local_.n());
  for (std::size_t v = 0; v < roots.size(); ++v) roots[v] = v + 1;
  return roots;
}

MaterializedGPrime MaterializeGPrime(const Graph& g, std::size_t k) {
  QueryOracle oracle(g);
  GPrimeView view(oracle, k);
  const auto n = static_cast<Vertex>(g.n());
  for (Vertex v = 1; v <= n; ++v) view.Adjacency(v);
  MaterializedGPrime out;
  out.graph = Graph(g.n() + view.hub_count(),
                    std::max<std::size_t>(view.degree_bound(), 1));
  for (Vertex v = 1; v <= n; ++v) {
    for (VertexId x : view.Adjacency(v)) {
      if (IsHub(x)) {
        out.graph.AddEdge(v, n + 1 + static_cast<Vertex>(x & ~kHubBit));
      } else if (x > v) {
        out.graph.AddEdge(v, static_cast<Vertex>(x));
      }
    }
  }
  for (std::size_t j = 0; j < view.hub_count(); ++j) {
    const auto& members = view.HubMembers(kHubBit | j);
    if (out.graph.degree(n + 1 + static_cast<Vertex>(j)) != members.size()) {
      throw InternalError("hub membership is not symmetric");
    }
    out.hubs.push_back(members);
  }
  return out;
}

std::optional<SimpleCycle> LiftGPrimeCycle(GPrimeView& view,
                                           const std::vector<VertexId>& cycle,
                                           std::uint64_t max_steps) {
  LocalGraph& local = view.local();
  const std::size_t k = view.k();
  const std::size_t m = cycle.size();

  // Direct expansion: each hub hop becomes the longest simple path through
  // its members that avoids everything already used.
  std::set<Vertex> used;
  for (VertexId x : cycle) {
    if (!IsHub(x)) used.insert(static_cast<Vertex>(x));
  }
  SimpleCycle direct;
  bool ok = true;
  for (std::size_t i = 0; i < m && ok; ++i) {
    if (!IsHub(cycle[i])) {
      direct.vertices.push_back(static_cast<Vertex>(cycle[i]));
      continue;
    }
    const auto from = static_cast<Vertex>(cycle[(i + m - 1) % m]);
    const auto to = static_cast<Vertex>(cycle[(i + 1) % m]);
    const std::vector<Vertex>& members = view.HubMembers(cycle[i]);
    std::vector<Vertex> best, cur;
    std::uint64_t steps = 0;
    std::function<void(Vertex)> dfs = [&](Vertex x) {
      if (++steps > max_steps) return;
      for (Vertex w : local.Neighbors(x)) {
        if (w == to) {
          if (cur.size() > best.size() || (best.empty() && cur.empty())) {
            best = cur;
          }
          continue;
        }
        if (!Contains(members, w) || used.count(w) ||
            std::find(cur.begin(), cur.end(), w) != cur.end()) {
          continue;
        }
        cur.push_back(w);
        dfs(w);
        cur.pop_back();
      }
    };
    bool reached = local.Adjacent(from, to);
    dfs(from);
    reached = reached || !best.empty();
    ok = reached;
    for (Vertex w : best) used.insert(w);
    direct.vertices.insert(direct.vertices.end(), best.begin(), best.end());
  }
  if (ok && direct.length() >= k) {
    std::set<Vertex> distinct(direct.vertices.begin(), direct.vertices.end());
    ok = distinct.size() == direct.length();
    for (std::size_t i = 0; ok && i < direct.length(); ++i) {
      ok = local.Adjacent(direct.vertices[i],
                          direct.vertices[(i + 1) % direct.length()]);
    }
    if (ok) return direct;
  }

  auto search = [&](std::vector<Vertex> keep) -> std::optional<SimpleCycle> {
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    try {
      Graph h = local.Induced(keep);
      if (auto c = FindCycleAtLeast(h, k, max_steps)) return MapCycle(*c, keep);
    } catch (const InstanceTooLarge&) {
    }
    return std::nullopt;
  };
  std::vector<Vertex> near;
  for (VertexId x : cycle) {
    if (IsHub(x)) {
      const auto& members = view.HubMembers(x);
      near.insert(near.end(), members.begin(), members.end());
    } else {
      near.push_back(static_cast<Vertex>(x));
    }
  }
  if (auto c = search(near)) return c;
  return search(local.Known());
}

Verdict TestCkMinorFree(QueryOracle& oracle, std::size_t k, double eps,
                        const CkMinorConfig& config, std::uint64_t seed,
                        CkRunInfo* info) {
  if (k < 4 || k > config.max_k) {
    throw PreconditionError("k must be in [4, " + std::to_string(config.max_k) +
                            "]");
  }
  if (!(eps > 0 && eps <= 1)) throw PreconditionError("eps must be in (0,1]");
  GPrimeView gprime(oracle, k);
  const double d = static_cast<double>(std::max<std::size_t>(oracle.degree_bound(), 1));
  const double gprime_eps =
      std::min(1.0, config.eps_scale * eps / std::pow(d, static_cast<double>(k)));
  const double walker_eps =
      config.cycle.c3 * gprime_eps / (2.0 * static_cast<double>(gprime.degree_bound()));
  CkRunInfo run;
  run.gprime_eps = gprime_eps;
  Verdict verdict;
  auto finish = [&](Verdict v) {
    run.hubs = gprime.hub_count();
    if (info != nullptr) *info = run;
    return v;
  };
  for (std::size_t round = 0; round < config.cycle.tau_rounds; ++round) {
    EdgeLabeling tau(DeriveSeed(seed, 2 * round), LabelDomain::kTau);
    GTauView view(gprime, tau);
    Rng rng(DeriveSeed(seed, 2 * round + 1));
    WalkOutcome w;
    try {
      w = WalkTest(view, walker_eps, config.cycle.walker, rng);
    } catch (const LongCycleFound& found) {
      run.long_cycle_shortcut = true;
      Verdict r = Verdict::Reject(found.cycle());
      r.sampling_failed = verdict.sampling_failed;
      return finish(r);
    }
    run.cycle = CycleRunInfo{w.params, walker_eps};
    verdict.exhaustive = w.params.exhaustive;
    verdict.sampling_failed = verdict.sampling_failed || w.sampling_failed;
    if (!w.odd_cycle) continue;
    std::vector<VertexId> gcycle;
    for (Vertex x : ContractGTauCycle(*w.odd_cycle).vertices) gcycle.push_back(x);
    if (auto lifted = LiftGPrimeCycle(gprime, gcycle, config.lift_steps)) {
      Verdict r = Verdict::Reject(std::move(*lifted));
      r.exhaustive = verdict.exhaustive;
      r.sampling_failed = verdict.sampling_failed;
      return finish(r);
    }
    verdict.lift_failed = true;
    return finish(verdict);
  }
  return finish(verdict);
}

MinorWitness TrianglePlusEdgeWitness(const SimpleCycle& cycle, Vertex x,
                                     Vertex y) {
  const std::size_t m = cycle.length();
  auto pos = std::find(cycle.vertices.begin(), cycle.vertices.end(), x);
  if (m < 3 || pos == cycle.vertices.end()) {
    throw PreconditionError("x must lie on a cycle of length >= 3");
  }
  // c[0] = x.
  std::vector<Vertex> c(pos, cycle.vertices.end());
  c.insert(c.end(), cycle.vertices.begin(), pos);
  MinorWitness w;
  w.pattern = Pattern::TrianglePlusEdge();
  auto at = std::find(c.begin(), c.end(), y);
  if (at == c.end()) {
    w.branch_sets = {{c[0]}, {c[1]}, std::vector<Vertex>(c.begin() + 2, c.end()), {y}};
    w.connecting_edges = {{c[0], c[1]}, {c[1], c[2]}, {c[0], c[m - 1]}, {c[0], y}};
    return w;
  }
  const auto j = static_cast<std::size_t>(at - c.begin());
  if (j < 2 || j + 2 > m) throw PreconditionError("{x, y} is not a chord");
  w.branch_sets = {{c[0]},
                   std::vector<Vertex>(c.begin() + 1, c.begin() + j),
                   {c[j]},
                   std::vector<Vertex>(c.begin() + j + 1, c.end())};
  w.connecting_edges = {{c[0], c[1]}, {c[j - 1], c[j]}, {c[0], c[j]}, {c[0], c[m - 1]}};
  return w;
}

namespace {

// Passes everything through to the oracle and remembers each edge read.
class RecordingView : public GraphView {
 public:
  explicit RecordingView(QueryOracle& oracle) : base_(oracle) {}

  std::size_t degree_bound() const override { return base_.degree_bound(); }
  std::size_t vertex_count_estimate() const override {
    return base_.vertex_count_estimate();
  }
  VertexId Neighbor(VertexId v, std::size_t i) override {
    const VertexId u = base_.Neighbor(v, i);
    if (u != 0) edges_.insert({std::min(u, v), std::max(u, v)});
    return u;
  }
  std::optional<VertexId> TrySample(Rng& rng) override { return base_.TrySample(rng); }
  std::size_t sample_attempts() const override { return base_.sample_attempts(); }
  std::vector<VertexId> Roots() const override { return base_.Roots(); }

  const std::set<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

 private:
  OracleView base_;
  std::set<std::pair<VertexId, VertexId>> edges_;
};

// Scans the recorded subgraph; isolated cycles are dropped one by one.
std::optional<MinorWitness> ScanRecorded(
    const std::set<std::pair<VertexId, VertexId>>& edges, LocalGraph& local) {
  std::vector<Vertex> ids;
  for (const auto& [a, b] : edges) {
    ids.push_back(static_cast<Vertex>(a));
    ids.push_back(static_cast<Vertex>(b));
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  auto index = [&](VertexId x) {
    return static_cast<Vertex>(
        std::lower_bound(ids.begin(), ids.end(), static_cast<Vertex>(x)) - ids.begin() + 1);
  };
  std::vector<std::pair<Vertex, Vertex>> list;
  for (const auto& [a, b] : edges) list.emplace_back(index(a), index(b));
  Graph h = Graph::FromEdges(ids.size(), std::max<std::size_t>(local.degree_bound(), 1),
                             list);
  while (auto found = FindAnyCycle(h)) {
    SimpleCycle cycle = MapCycle(*found, ids);
    const std::size_t m = cycle.length();
    for (std::size_t i = 0; i < m; ++i) {
      const Vertex x = cycle.vertices[i];
      const Vertex prev = cycle.vertices[(i + m - 1) % m];
      const Vertex next = cycle.vertices[(i + 1) % m];
      for (Vertex y : local.Neighbors(x)) {
        if (y != prev && y != next) return TrianglePlusEdgeWitness(cycle, x, y);
      }
    }
    std::vector<CanonicalEdge> drop;
    for (std::size_t i = 0; i < m; ++i) {
      drop.push_back(CanonicalEdge::Of(found->vertices[i], found->vertices[(i + 1) % m]));
    }
    h = h.WithoutEdges(drop);
  }
  return std::nullopt;
}

}  // namespace

Verdict TestTrianglePlusEdge(QueryOracle& oracle, double eps,
                             const CycleTesterConfig& config,
                             std::uint64_t seed) {
  if (!(eps > 0 && eps <= 1)) throw PreconditionError("eps must be in (0,1]");
  const std::size_t d = std::max<std::size_t>(oracle.degree_bound(), 1);
  const double walker_eps = config.c3 * eps / (2.0 * static_cast<double>(d));
  RecordingView recording(oracle);
  LocalGraph local(oracle);
  Verdict verdict;
  for (std::size_t round = 0; round < config.tau_rounds; ++round) {
    EdgeLabeling tau(DeriveSeed(seed, 2 * round), LabelDomain::kTau);
    GTauView view(recording, tau);
    Rng rng(DeriveSeed(seed, 2 * round + 1));
    WalkOutcome w = WalkTest(view, walker_eps, config.walker, rng);
    verdict.exhaustive = w.params.exhaustive;
    verdict.sampling_failed = verdict.sampling_failed || w.sampling_failed;
    if (auto witness = ScanRecorded(recording.edges(), local)) {
      Verdict r = Verdict::Reject(std::move(*witness));
      r.exhaustive = verdict.exhaustive;
      r.sampling_failed = verdict.sampling_failed;
      return r;
    }
  }
  return verdict;
}

}  // namespace minorprop
