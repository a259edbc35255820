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
#include <set>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "minorprop/errors.h"
#include "minorprop/exact.h"
#include "minorprop/generators.h"
#include "minorprop/rng.h"
#include "support/graph_enum.h"

namespace minorprop {
namespace {

using ::testing::ElementsAre;

Graph FromPairs(std::size_t n, std::size_t d,
                std::vector<std::pair<Vertex, Vertex>> edges) {
  return Graph::FromEdges(n, d, edges);
}

// Two K_m joined by the edge {m, m+1}.
Graph Barbell(std::size_t m) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex side = 0; side < 2; ++side) {
    const Vertex base = side * static_cast<Vertex>(m);
    for (Vertex a = 1; a <= m; ++a) {
      for (Vertex b = a + 1; b <= m; ++b) e.emplace_back(base + a, base + b);
    }
  }
  e.emplace_back(static_cast<Vertex>(m), static_cast<Vertex>(m + 1));
  return FromPairs(2 * m, m, e);
}

// The first `size` vertices in BFS order from v (ties by id) in g - F.
std::vector<Vertex> BallPrefix(const Graph& g, Vertex v, std::size_t size,
                               const std::vector<Vertex>& forbidden = {}) {
  std::vector<bool> blocked(g.n() + 1, false);
  for (Vertex x : forbidden) blocked[x] = true;
  auto dist = BfsDistances(g, {v}, &blocked);
  std::vector<std::pair<std::size_t, Vertex>> order;
  for (Vertex x = 1; x <= g.n(); ++x) {
    if (dist[x] != SIZE_MAX) order.emplace_back(dist[x], x);
  }
  std::sort(order.begin(), order.end());
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < size && i < order.size(); ++i) {
    out.push_back(order[i].second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Small-graph constants: f's floor is k, the recursion depth is
// logarithmic, and the distance bound keeps its analysis base.
FindParams DeskParams(std::size_t d, double zeta) {
  FindParams p = FindParams::Analysis(d, zeta);
  p.floor_base = 1;
  p.depth_base = 1;
  return p;
}

std::size_t UNeed(const FindParams& p, std::size_t k, std::size_t forbidden) {
  return static_cast<std::size_t>(std::ceil(4 * FindF(p, k, forbidden) / p.zeta - 1e-9));
}

// Independent recheck of every FindOutput guarantee.
void ExpectFindContract(const Graph& g, Vertex v, const RootedTree& t,
                        const std::vector<Vertex>& forbidden,
                        const FindParams& p, const FindOutput& out) {
  std::vector<bool> blocked(g.n() + 1, false);
  for (Vertex x : forbidden) blocked[x] = true;
  auto dist = BfsDistances(g, {v}, &blocked);
  std::size_t radius = 0;
  for (Vertex x : out.set) {
    ASSERT_FALSE(blocked[x]);
    ASSERT_NE(dist[x], SIZE_MAX);
    radius = std::max(radius, dist[x]);
  }
  EXPECT_EQ(radius, out.radius);
  const double f = FindF(p, t.size(), forbidden.size());
  EXPECT_LE(static_cast<double>(radius), FindDistanceBound(p, t.size(), f));
  if (out.tag == FindTag::kCut) {
    ASSERT_TRUE(out.cut.has_value());
    EXPECT_TRUE(VerifyCertificate(g, *out.cut).ok());
    EXPECT_EQ(out.cut->vertices, out.set);
  } else {
    ASSERT_TRUE(out.witness.has_value());
    EXPECT_TRUE(VerifyCertificate(g, *out.witness).ok());
    const auto& root = out.witness->branch_sets[t.root()];
    EXPECT_NE(std::find(root.begin(), root.end(), v), root.end());
    for (const auto& set : out.witness->branch_sets) {
      for (Vertex x : set) EXPECT_FALSE(blocked[x]);
    }
  }
}

// ---------------------------------------------------------------- paths

TEST(PathTesterTest, MatchingAlwaysAccepts) {
  Instance m = GenMatching(200, 3);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    QueryOracle oracle(m.graph);
    EXPECT_FALSE(TestPathMinorFree(oracle, 2, 0.2, {}, seed).reject);
  }
}

TEST(PathTesterTest, LongPathRejectsWithSubpath) {
  Instance p = GenPath(100, 2);
  QueryOracle oracle(p.graph);
  Verdict v = TestPathMinorFree(oracle, 3, 0.3, {}, 7);
  ASSERT_TRUE(v.reject);
  const auto& w = std::get<MinorWitness>(*v.certificate);
  EXPECT_EQ(w.pattern, Pattern::Path(3));
  EXPECT_TRUE(VerifyCertificate(p.graph, w).ok());
}

// Per-trial rejection probability on a long cycle: the fraction of the
// d^4 slot sequences that keep moving in one direction.
double CycleWalkProbability(std::size_t d) {
  std::size_t simple = 0, total = 0;
  std::vector<std::size_t> slots(4, 0);
  for (;;) {
    ++total;
    // Slot 0 moves to the successor, slot 1 to the predecessor, others
    // are empty.
    bool ok = true;
    for (std::size_t s : slots) ok &= s < 2;
    if (ok) ok = std::all_of(slots.begin(), slots.end(),
                             [&](std::size_t s) { return s == slots[0]; });
    simple += ok;
    std::size_t i = 0;
    while (i < 4 && ++slots[i] == d) slots[i++] = 0;
    if (i == 4) break;
  }
  return static_cast<double>(simple) / static_cast<double>(total);
}

TEST(PathTesterTest, CycleTrialProbabilityMatchesEnumeration) {
  EXPECT_DOUBLE_EQ(CycleWalkProbability(2), 2.0 / 16);
  EXPECT_DOUBLE_EQ(CycleWalkProbability(3), 2.0 / 81);
  PathTesterConfig one;
  one.c = 1e-12;  // a single trial
  for (std::size_t d : {2u, 3u}) {
    Instance c = GenCycle(1024, d);
    const int runs = 4000;
    int rejects = 0;
    for (int seed = 0; seed < runs; ++seed) {
      QueryOracle oracle(c.graph);
      rejects += TestPathMinorFree(oracle, 4, 1.0, one, seed).reject;
    }
    const double p = CycleWalkProbability(d);
    const double sigma = std::sqrt(p * (1 - p) / runs);
    EXPECT_NEAR(static_cast<double>(rejects) / runs, p, 2 * sigma) << "d=" << d;
  }
}

TEST(PathTesterTest, TrialCountAndQueries) {
  Instance m = GenMatching(100, 2);
  QueryOracle oracle(m.graph);
  PathTesterConfig c;
  c.c = 1;
  TestPathMinorFree(oracle, 3, 0.5, c, 1);
  // ceil(8 / 0.5) = 16 trials; each reads at most 2 slots before failing.
  EXPECT_LE(oracle.neighbor_queries(), 16u * 3u);
  EXPECT_GE(oracle.neighbor_queries(), 16u);
  EXPECT_THROW(TestPathMinorFree(oracle, 0, 0.5, c, 1), PreconditionError);
  EXPECT_THROW(TestPathMinorFree(oracle, 2, 0.0, c, 1), PreconditionError);
}

// ---------------------------------------------------------------- stars

TEST(StarTesterTest, StarItselfRejects) {
  Graph star = FromPairs(5, 4, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  QueryOracle oracle(star);
  Verdict v = TestStarMinorFree(oracle, 4, 0.5, 3);
  ASSERT_TRUE(v.reject);
  EXPECT_TRUE(VerifyCertificate(star, *v.certificate).ok());
  EXPECT_EQ(std::get<MinorWitness>(*v.certificate).pattern, Pattern::Star(4));
}

TEST(StarTesterTest, PathAlwaysAccepts) {
  Instance p = GenPath(500, 3);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    QueryOracle oracle(p.graph);
    EXPECT_FALSE(TestStarMinorFree(oracle, 3, 0.1, seed).reject);
  }
}

TEST(StarTesterTest, LinkedStarsRejectOften) {
  int rejects = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Instance inst = GenLinkedStars(4096, 3, 3, seed);
    QueryOracle oracle(inst.graph);
    Verdict v = TestStarMinorFree(oracle, 3, 0.1, seed);
    if (!v.reject) continue;
    ++rejects;
    ASSERT_TRUE(VerifyCertificate(inst.graph, *v.certificate).ok());
  }
  EXPECT_GE(rejects, 120);
}

TEST(StarTesterTest, MinorFreeFamiliesAccept) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Instance inst = GenMinorFree(600, 3, Pattern::Star(3), seed);
    ASSERT_TRUE(inst.truth.certified_minor_free);
    QueryOracle oracle(inst.graph);
    EXPECT_FALSE(TestStarMinorFree(oracle, 3, 0.1, seed).reject);
  }
}

// ---------------------------------------------------------------- trees

TEST(TreeTesterTest, DepthFormula) {
  // k (8d/eps)^(4k+2) with k = 2, d = 3, eps = 1: 2 * 24^10.
  EXPECT_DOUBLE_EQ(TreeTesterDepth(2, 3, 1.0), 2 * std::pow(24.0, 10));
}

TEST(TreeTesterTest, MatchingHasNoTwoEdgePath) {
  Instance m = GenMatching(300, 3);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    QueryOracle oracle(m.graph);
    EXPECT_FALSE(
        TestTreeMinorFree(oracle, RootedTree::Star(2), 0.2, {}, seed).reject);
  }
}

TEST(TreeTesterTest, PlantedSpidersRejectOften) {
  const RootedTree spider = RootedTree::Spider({2, 1, 1});
  const Pattern pattern = Pattern::FromTree(spider);
  int rejects = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Instance inst = GenPlantedMinor(4096, 3, pattern, 64, PlantBase::kTree, seed);
    QueryOracle oracle(inst.graph);
    Verdict v = TestTreeMinorFree(oracle, spider, 0.2, {}, seed);
    EXPECT_FALSE(v.truncated);
    if (!v.reject) continue;
    ++rejects;
    ASSERT_TRUE(VerifyCertificate(inst.graph, *v.certificate).ok());
  }
  EXPECT_GE(rejects, 60);
}

TEST(TreeTesterTest, PathInputHasOnlyPathMinors) {
  Instance p = GenPath(40, 3);
  QueryOracle oracle(p.graph);
  EXPECT_FALSE(TestTreeMinorFree(oracle, RootedTree::Spider({2, 1, 1}), 0.5, {}, 1)
                   .reject);
  EXPECT_FALSE(TestTreeMinorFree(oracle, RootedTree::Path(40), 0.5, {}, 1).reject);
  Verdict v = TestTreeMinorFree(oracle, RootedTree::Path(39), 0.5, {}, 1);
  ASSERT_TRUE(v.reject);
  EXPECT_TRUE(VerifyCertificate(p.graph, *v.certificate).ok());
}

TEST(TreeTesterTest, CapTruncatesAndAccepts) {
  Instance c = GenCycle(2000, 3);
  TreeTesterConfig cap;
  cap.max_explored = 50;
  QueryOracle oracle(c.graph);
  Verdict v = TestTreeMinorFree(oracle, RootedTree::Path(100), 0.5, cap, 2);
  EXPECT_FALSE(v.reject);
  EXPECT_TRUE(v.truncated);
}

TEST(TreeTesterTest, MinorFreeFamiliesAccept) {
  const RootedTree spider = RootedTree::Spider({2, 1, 1});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Instance inst = GenMinorFree(800, 3, Pattern::FromTree(spider), seed);
    ASSERT_TRUE(inst.truth.certified_minor_free);
    QueryOracle oracle(inst.graph);
    Verdict v = TestTreeMinorFree(oracle, spider, 0.2, {}, seed);
    EXPECT_FALSE(v.reject);
  }
}

// ---------------------------------------------------------------- forests

TEST(ForestTesterTest, TwoEdgesNeedTwoDisjointEdges) {
  Graph edge = FromPairs(2, 1, {{1, 2}});
  Pattern two_edges(4, {{0, 1}, {2, 3}});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    QueryOracle oracle(edge);
    EXPECT_FALSE(TestForestMinorFree(oracle, two_edges, 0.5, {}, seed).reject);
  }
}

TEST(ForestTesterTest, TwoSpidersGiveDisjointWitness) {
  Pattern twice(6, {{0, 1}, {0, 2}, {3, 4}, {3, 5}});
  Instance inst = GenPlantedMinor(1024, 3, Pattern::Star(3), 32,
                                  PlantBase::kTree, 5);
  int rejects = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    QueryOracle oracle(inst.graph);
    Verdict v = TestForestMinorFree(oracle, twice, 0.2, {}, seed);
    if (!v.reject) continue;
    ++rejects;
    const auto& w = std::get<MinorWitness>(*v.certificate);
    EXPECT_EQ(w.pattern, twice);
    ASSERT_TRUE(VerifyCertificate(inst.graph, w).ok());
    std::set<Vertex> first, second;
    for (int h = 0; h < 3; ++h) first.insert(w.branch_sets[h].begin(), w.branch_sets[h].end());
    for (int h = 3; h < 6; ++h) second.insert(w.branch_sets[h].begin(), w.branch_sets[h].end());
    for (Vertex x : first) EXPECT_EQ(second.count(x), 0u);
  }
  EXPECT_GE(rejects, 18);
}

TEST(ForestTesterTest, SingleComponentIsTheTreeTester) {
  const RootedTree spider = RootedTree::Spider({2, 1, 1});
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Instance inst = GenPlantedMinor(512, 3, Pattern::FromTree(spider), 64,
                                    PlantBase::kPath, seed);
    QueryOracle a(inst.graph), b(inst.graph);
    Verdict forest =
        TestForestMinorFree(a, Pattern::FromTree(spider), 0.4, {}, seed);
    Verdict tree = TestTreeMinorFree(b, spider, 0.2, {}, seed);
    EXPECT_EQ(forest.reject, tree.reject);
    EXPECT_EQ(a.neighbor_queries(), b.neighbor_queries());
    if (forest.reject) {
      EXPECT_EQ(std::get<MinorWitness>(*forest.certificate).branch_sets,
                std::get<MinorWitness>(*tree.certificate).branch_sets);
    }
  }
}

TEST(ForestTesterTest, RejectsNonForests) {
  Graph edge = FromPairs(2, 1, {{1, 2}});
  QueryOracle oracle(edge);
  EXPECT_THROW(TestForestMinorFree(oracle, Pattern::Cycle(3), 0.5, {}, 1),
               PreconditionError);
}

// ---------------------------------------------------------------- BFS claims

TEST(DichotomyTest, WholeComponentIsAZeroCut) {
  Graph g = FromPairs(5, 3, {{1, 2}, {2, 3}, {4, 5}});
  DichotomyResult r = BfsDichotomy(g, {1, 2, 3}, {}, 10, 0.1);
  ASSERT_TRUE(r.cut);
  EXPECT_THAT(r.reached, ElementsAre(1, 2, 3));
  EXPECT_EQ(CutSize(g, r.reached), 0u);
}

TEST(DichotomyTest, BinaryTreeLevelsGrow) {
  // Complete binary tree of depth 6 rooted at 1.
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex x = 2; x < 128; ++x) e.emplace_back(x / 2, x);
  Graph g = FromPairs(127, 3, e);
  DichotomyResult r = BfsDichotomy(g, {1}, {}, 6, 0.2);
  EXPECT_FALSE(r.cut);
  EXPECT_EQ(r.depth, 6u);
  EXPECT_EQ(r.last_level.size(), 64u);
  EXPECT_EQ(r.reached.size(), 127u);
  EXPECT_GE(static_cast<double>(r.last_level.size()), std::exp(0.2 / 3 * 6));
}

TEST(DichotomyTest, PathCutsEarly) {
  Instance p = GenPath(50, 2);
  // From {1}: levels have one vertex each. With zeta = 0.5 the next level
  // (1 vertex) is <= 0.25 |R| once |R| >= 4, so R = {1, 2, 3, 4}.
  DichotomyResult r = BfsDichotomy(p.graph, {1}, {}, 40, 0.5);
  ASSERT_TRUE(r.cut);
  EXPECT_THAT(r.reached, ElementsAre(1, 2, 3, 4));
  EXPECT_EQ(r.depth, 3u);
  EXPECT_TRUE(VerifyCertificate(p.graph, SparseCut{r.reached, 0.5}).ok());
}

TEST(DichotomyTest, ForbiddenBudgetIsAPrecondition) {
  Instance p = GenPath(10, 2);
  EXPECT_THROW(BfsDichotomy(p.graph, {1}, {5}, 3, 0.5), PreconditionError);
  EXPECT_THROW(BfsDichotomy(p.graph, {1, 2}, {2}, 3, 0.5), PreconditionError);
}

TEST(CutOrGoodTest, StarLeavesAreTheirOwnBoundary) {
  Graph star = FromPairs(5, 4, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  EXPECT_THAT(Boundary(star, {2, 3, 4, 5}, {}), ElementsAre(2, 3, 4, 5));
  EXPECT_THAT(Boundary(star, {1, 2}, {3, 4, 5}), ElementsAre());
}

TEST(CutOrGoodTest, ExpanderGivesAGoodVertex) {
  // 3-regular 64-vertex graph; radius-1 neighborhoods expand at zeta 0.2.
  Instance inst = GenLowerBoundFamily(64, 3);
  ASSERT_TRUE(CheckExpansion(inst.graph, 1, 1, 0.2).expanding);
  CutOrGoodResult r = CutOrGood(inst.graph, {1}, {}, 2, 0.2);
  ASSERT_FALSE(r.cut);
  EXPECT_EQ(r.vertex, 1u);
  EXPECT_GE(static_cast<double>(r.set.size()), std::exp(0.2 / 3 * 2));
  EXPECT_EQ(r.set.size(), 10u);  // the radius-2 ball of a 3-regular graph
}

TEST(CutOrGoodTest, DisconnectedRemainderIsAZeroCut) {
  Graph g = FromPairs(6, 3, {{1, 2}, {2, 3}, {4, 5}, {5, 6}});
  CutOrGoodResult r = CutOrGood(g, {1}, {}, 5, 0.3);
  ASSERT_TRUE(r.cut);
  EXPECT_EQ(CutSize(g, r.set), 0u);
  EXPECT_THAT(r.set, ElementsAre(1, 2, 3));
}

// ---------------------------------------------------------------- find

TEST(FindTest, SingletonOutputsU) {
  Instance p = GenPath(30, 2);
  FindParams params = DeskParams(2, 0.5);
  const std::size_t need = UNeed(params, 1, 0);
  EXPECT_EQ(need, 8u);
  std::vector<Vertex> u = BallPrefix(p.graph, 10, need);
  FindOutput out = Find(p.graph, 10, u, RootedTree::Singleton(), {}, params);
  EXPECT_EQ(out.tag, FindTag::kMinor);
  EXPECT_EQ(out.set, u);
  EXPECT_THAT(out.witness->branch_sets, ElementsAre(ElementsAre(10)));
  ExpectFindContract(p.graph, 10, RootedTree::Singleton(), {}, params, out);
}

TEST(FindTest, BarbellCutsTheBridge) {
  // K_40 on each side; |U| = 4 * 2 / 0.2 = 40 is exactly v's clique.
  Graph g = Barbell(40);
  FindParams params = DeskParams(40, 0.2);
  ASSERT_EQ(UNeed(params, 2, 0), 40u);
  std::vector<Vertex> u;
  for (Vertex x = 1; x <= 40; ++x) u.push_back(x);
  FindOutput out = Find(g, 3, u, RootedTree::Path(1), {}, params);
  ASSERT_EQ(out.tag, FindTag::kCut);
  EXPECT_EQ(out.set, u);
  EXPECT_EQ(CutSize(g, out.set), 1u);
  ExpectFindContract(g, 3, RootedTree::Path(1), {}, params, out);
}

TEST(FindTest, PreconditionsAreReported) {
  Instance p = GenPath(30, 2);
  FindParams params = DeskParams(2, 0.5);
  std::vector<Vertex> u = BallPrefix(p.graph, 10, 8);
  EXPECT_THROW(Find(p.graph, 10, {9, 10, 11}, RootedTree::Singleton(), {}, params),
               PreconditionError);
  EXPECT_THROW(Find(p.graph, 1, u, RootedTree::Singleton(), {}, params),
               PreconditionError);
  EXPECT_THROW(Find(p.graph, 10, u, RootedTree::Singleton(), {u[0]}, params),
               PreconditionError);
  // The analysis constants need |U| >= 4 (8/0.5)^6 / 0.5.
  EXPECT_THROW(Find(p.graph, 10, u, RootedTree::Singleton(), {},
                    FindParams::Analysis(2, 0.5)),
               PreconditionError);
}

// A 14-vertex 3-regular expander: its radius-1 balls expand, so a sparse
// cut around v must reach further out. Find returns the whole graph, the
// one zeta-sparse connected set there is, and check_expansion agrees
// that v's neighborhood of that radius does not expand.
TEST(FindTest, SmallExpanderOnlyHasTheTrivialCut) {
  const double zeta = 0.25;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Instance inst = GenLowerBoundFamily(14, seed);
    const Graph& g = inst.graph;
    FindParams params = DeskParams(3, zeta);
    ASSERT_TRUE(CheckExpansion(g, 1, 1, zeta).expanding);
    for (std::size_t k = 1; k <= 3; ++k) {
      RootedTree t = k == 1 ? RootedTree::Singleton() : RootedTree::Path(k - 1);
      std::vector<Vertex> u = BallPrefix(g, 1, UNeed(params, k, 0));
      if (u.size() < UNeed(params, k, 0)) continue;
      FindOutput out = Find(g, 1, u, t, {}, params);
      ExpectFindContract(g, 1, t, {}, params, out);
      if (out.tag == FindTag::kMinor) continue;
      EXPECT_GT(out.radius, 1u);
      EXPECT_FALSE(CheckExpansion(g, 1, out.radius, zeta).expanding);
    }
  }
}

// Randomized contract sweep: every output of find (and of its recursive
// calls) meets the guarantees; on instances whose neighborhood up to the
// distance bound is certified expanding the answer is a minor.
TEST(FindTest, ContractHoldsOnRandomSmallInstances) {
  int outputs = 0, singletons = 0, minors = 0, certified = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const std::size_t n = 8 + rng.Uniform(0, 56);
    Graph g = testing::RandomConnectedGraph(n, 3, rng.Uniform(0, n), seed);
    const double zeta = 0.25 + 0.25 * static_cast<double>(rng.Uniform(0, 3));
    FindParams params = DeskParams(3, zeta);
    const Vertex v = static_cast<Vertex>(rng.Uniform(1, n));
    std::vector<Vertex> forbidden;
    if (rng.Coin()) {
      Vertex x = static_cast<Vertex>(rng.Uniform(1, n));
      if (x != v) forbidden.push_back(x);
    }
    for (std::size_t k = 1; k <= 3; ++k) {
      RootedTree t = k == 1   ? RootedTree::Singleton()
                     : k == 2 ? RootedTree::Path(1)
                     : rng.Coin() ? RootedTree::Path(2)
                                  : RootedTree::FromPattern(Pattern::Path(2), 1);
      const std::size_t need = UNeed(params, k, forbidden.size());
      std::vector<Vertex> u = BallPrefix(g, v, need, forbidden);
      if (u.size() < need) continue;
      // U must also lie within (4 / zeta) ln(f / zeta) of v.
      std::vector<bool> blocked(n + 1, false);
      for (Vertex x : forbidden) blocked[x] = true;
      auto from_v = BfsDistances(g, {v}, &blocked);
      const double reach =
          4 / zeta * std::log(FindF(params, k, forbidden.size()) / zeta);
      if (std::any_of(u.begin(), u.end(), [&](Vertex x) {
            return static_cast<double>(from_v[x]) > reach;
          })) {
        continue;
      }
      FindOutput out = Find(g, v, u, t, forbidden, params);
      ++outputs;
      singletons += k == 1;
      ExpectFindContract(g, v, t, forbidden, params, out);
      minors += out.tag == FindTag::kMinor;
      // Radius of the certified neighborhood: the distance bound, capped
      // by v's eccentricity.
      auto dist = BfsDistances(g, {v});
      std::size_t ecc = 0;
      for (Vertex x = 1; x <= n; ++x) ecc = std::max(ecc, dist[x]);
      const double bound =
          FindDistanceBound(params, k, FindF(params, k, forbidden.size()));
      const std::size_t radius =
          static_cast<double>(ecc) < bound ? ecc : static_cast<std::size_t>(bound);
      std::size_t ball = 0;
      for (Vertex x = 1; x <= n; ++x) ball += dist[x] <= radius;
      if (forbidden.empty() && ball <= 18 &&
          CheckExpansion(g, v, radius, zeta).expanding) {
        ++certified;
        EXPECT_EQ(out.tag, FindTag::kMinor);
      }
    }
  }
  EXPECT_GT(outputs, 300);
  // The base case always answers with a minor.
  EXPECT_GE(minors, singletons);
  EXPECT_GT(singletons, 50);
  RecordProperty("certified", certified);
}

// ---------------------------------------------------------------- decomposition

TEST(DecomposeTest, MinorFreeGraphLosesNothing) {
  Instance inst = GenMinorFree(200, 3, Pattern::Path(2), 4);
  const double eps = 0.2;
  Decomposition d = DecomposeToMinorFree(inst.graph, RootedTree::Path(2), eps,
                                         FindParams::Analysis(3, eps / 2));
  EXPECT_TRUE(d.removed.empty());
  EXPECT_TRUE(d.bad.empty());
}

TEST(DecomposeTest, PlantedSpidersAreCut) {
  const RootedTree spider = RootedTree::Spider({2, 1, 1});
  Instance inst = GenPlantedMinor(256, 3, Pattern::FromTree(spider), 16,
                                  PlantBase::kPath, 3);
  const double eps = 0.2;
  Decomposition d = DecomposeToMinorFree(inst.graph, spider, eps,
                                         FindParams::Analysis(3, eps / 2));
  EXPECT_FALSE(d.removed.empty());
  EXPECT_LE(static_cast<double>(d.removed.size()), d.budget);
  Graph rest = inst.graph.WithoutEdges(d.removed);
  for (const auto& c : rest.Components()) {
    EXPECT_FALSE(ExactHasMinor(rest.Induced(c), Pattern::FromTree(spider)));
  }
}

// Desk constants: the depth D = k is small, so vertices far from every
// planted spider are not bad, and the decomposition has to cut.
TEST(DecomposeTest, ShallowDepthForcesSparseCuts) {
  const RootedTree spider = RootedTree::Spider({2, 1, 1});
  const double eps = 0.5;
  FindParams params = DeskParams(3, eps / 2);
  int with_cuts = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Instance inst = GenPlantedMinor(256, 3, Pattern::FromTree(spider), 64,
                                    PlantBase::kPath, seed);
    Decomposition d = DecomposeToMinorFree(inst.graph, spider, eps, params);
    with_cuts += d.cut_edges > 0;
    EXPECT_LE(static_cast<double>(d.removed.size()), d.budget);
    EXPECT_EQ(d.removed.size(), d.bad_edges + d.cut_edges);
    Graph rest = inst.graph.WithoutEdges(d.removed);
    EXPECT_EQ(rest.Components(), d.components);
  }
  EXPECT_GT(with_cuts, 0);
}

TEST(DecomposeTest, BudgetHoldsOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    const std::size_t n = 16 + rng.Uniform(0, 240);
    Graph g = testing::RandomConnectedGraph(n, 3, rng.Uniform(0, n / 4), seed);
    const double eps = 0.5;
    for (std::size_t k = 2; k <= 3; ++k) {
      RootedTree t = RootedTree::Path(k - 1);
      for (const FindParams& params :
           {FindParams::Analysis(3, eps / 2), DeskParams(3, eps / 2)}) {
        Decomposition d = DecomposeToMinorFree(g, t, eps, params);
        EXPECT_LE(static_cast<double>(d.removed.size()), d.budget);
        Graph rest = g.WithoutEdges(d.removed);
        for (const auto& c : rest.Components()) {
          EXPECT_FALSE(ExactHasMinor(rest.Induced(c), Pattern::FromTree(t)));
        }
      }
    }
  }
}

}  // namespace
}  // namespace minorprop
