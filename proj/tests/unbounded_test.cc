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

#include "minorprop/unbounded.h"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "minorprop/errors.h"
#include "minorprop/exact.h"
#include "minorprop/generators.h"
#include "support/graph_enum.h"

namespace minorprop {
namespace {

// Upper-tail p-value of Pearson's statistic against the uniform law on
// the graph's edges.
double UniformEdgePValue(const Graph& g, EdgeSampler& sampler, Rng& rng,
                         std::size_t draws) {
  std::map<CanonicalEdge, std::size_t> counts;
  for (const auto& e : g.Edges()) counts[e] = 0;
  for (std::size_t i = 0; i < draws; ++i) {
    auto [a, b] = sampler.Sample(rng);
    auto it = counts.find(CanonicalEdge::Of(a, b));
    EXPECT_NE(it, counts.end());
    if (it != counts.end()) ++it->second;
  }
  const double expected =
      static_cast<double>(draws) / static_cast<double>(counts.size());
  double stat = 0;
  for (const auto& [e, c] : counts) {
    const double diff = static_cast<double>(c) - expected;
    stat += diff * diff / expected;
  }
  boost::math::chi_squared dist(static_cast<double>(counts.size() - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

TEST(EdgeSamplerTest, RegularGraphIsUniformForBothMethods) {
  Instance inst = GenLowerBoundFamily(64, 2);
  for (auto method : {EdgeSamplerMethod::kKnownMaxDegree,
                      EdgeSamplerMethod::kAdaptiveMaxDegree}) {
    QueryOracle oracle(inst.graph);
    EdgeSamplerConfig c;
    c.method = method;
    c.known_max_degree = 3;
    EdgeSampler sampler(oracle, c);
    Rng rng(11);
    EXPECT_GT(UniformEdgePValue(inst.graph, sampler, rng, 40 * 96), 0.01);
    EXPECT_EQ(sampler.d_max(), 3u);
  }
}

TEST(EdgeSamplerTest, KnownMaximumIsUniformOnEveryFamily) {
  std::vector<InstanceSpec> specs;
  for (std::string f : {"forest", "far_from_cycle_free", "lower_bound",
                        "linked_stars", "disjoint_cycles", "path", "cycle"}) {
    InstanceSpec s;
    s.family = f;
    s.n = 64;
    s.d = 3;
    s.eps = 0.1;
    s.k = f == "linked_stars" ? 3 : 4;
    s.seed = 5;
    specs.push_back(s);
  }
  InstanceSpec planted;
  planted.family = "planted_minor";
  planted.n = 64;
  planted.pattern = "K1,3";
  planted.block = 16;
  specs.push_back(planted);
  InstanceSpec clique;
  clique.family = "clique_plus_cycle";
  clique.n = 64;
  specs.push_back(clique);
  for (const auto& spec : specs) {
    Instance inst = Generate(spec);
    if (2 * inst.graph.edge_count() < inst.graph.n()) continue;
    for (auto method : {EdgeSamplerMethod::kKnownMaxDegree,
                        EdgeSamplerMethod::kAdaptiveMaxDegree}) {
      QueryOracle oracle(inst.graph);
      EdgeSamplerConfig c;
      c.method = method;
      c.known_max_degree = inst.graph.degree_bound();
      EdgeSampler sampler(oracle, c);
      Rng rng(3);
      const double p = UniformEdgePValue(inst.graph, sampler, rng,
                                         40 * inst.graph.edge_count());
      EXPECT_GT(p, 0.01) << spec.family;
    }
  }
}

TEST(EdgeSamplerTest, CliqueShareOnCliquePlusCycle) {
  Instance inst = GenCliquePlusCycle(10000, false);
  // 100-clique: 4950 edges; 9900-cycle: 9900 edges.
  const double share = 4950.0 / 14850.0;
  for (auto method : {EdgeSamplerMethod::kKnownMaxDegree,
                      EdgeSamplerMethod::kAdaptiveMaxDegree}) {
    QueryOracle oracle(inst.graph);
    EdgeSamplerConfig c;
    c.method = method;
    c.known_max_degree = 99;
    EdgeSampler sampler(oracle, c);
    Rng rng(8);
    std::size_t in_clique = 0;
    for (int i = 0; i < 10000; ++i) {
      auto [a, b] = sampler.Sample(rng);
      ASSERT_TRUE(inst.graph.HasEdge(a, b));
      in_clique += a > 9900;
    }
    EXPECT_NEAR(static_cast<double>(in_clique) / 10000, share, share / 4);
  }
}

TEST(EdgeSamplerTest, SparseGraphsFailAtTheCap) {
  Graph empty(50, 3);
  QueryOracle a(empty);
  EdgeSampler s1(a);
  Rng rng(1);
  EXPECT_THROW(s1.Sample(rng), SamplingFailed);
  Graph one = Graph::FromEdges(400, 3, std::vector<std::pair<Vertex, Vertex>>{{1, 2}});
  QueryOracle b(one);
  EdgeSamplerConfig c;
  c.method = EdgeSamplerMethod::kKnownMaxDegree;
  c.known_max_degree = 3;
  EdgeSampler s2(b, c);
  EXPECT_THROW(s2.Sample(rng), SamplingFailed);
  EXPECT_EQ(s2.attempts(), 96u);
}

TEST(EdgeSamplerTest, KnownMaximumMustHold) {
  Instance inst = GenCycle(10, 2);
  QueryOracle oracle(inst.graph);
  EdgeSamplerConfig c;
  c.method = EdgeSamplerMethod::kKnownMaxDegree;
  c.known_max_degree = 1;
  EdgeSampler sampler(oracle, c);
  Rng rng(1);
  EXPECT_THROW(sampler.Sample(rng), PreconditionError);
}

// ---------------------------------------------------------------- stars

void ExpectHeavyOrMinorWitness(const Graph& g, const Verdict& v, std::size_t k) {
  ASSERT_TRUE(v.certificate.has_value());
  const auto& w = std::get<MinorWitness>(*v.certificate);
  EXPECT_EQ(w.pattern, Pattern::Star(k));
  EXPECT_TRUE(VerifyCertificate(g, w).ok());
}

TEST(StarUnboundedTest, PathAlwaysAccepts) {
  Instance p = GenPath(2000, 2);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    QueryOracle oracle(p.graph);
    EXPECT_FALSE(TestStarUnbounded(oracle, 3, 0.2, {}, seed).reject);
  }
}

TEST(StarUnboundedTest, CliquePlusCycleRejects) {
  Instance inst = GenCliquePlusCycle(10000, false);
  int rejects = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Instance copy = Scramble(inst, seed);
    QueryOracle oracle(copy.graph);
    StarUnboundedInfo info;
    Verdict v = TestStarUnbounded(oracle, 3, 0.1, {}, seed, &info);
    if (!v.reject) continue;
    ++rejects;
    ExpectHeavyOrMinorWitness(copy.graph, v, 3);
    // The center is a clique vertex.
    const Vertex center = std::get<MinorWitness>(*v.certificate).branch_sets[0][0];
    EXPECT_GE(copy.graph.degree(center), 3u);
  }
  EXPECT_GE(rejects, 60);
}

TEST(StarUnboundedTest, CycleWithIsolatedVerticesAccepts) {
  Instance inst = GenCliquePlusCycle(10000, true);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    QueryOracle oracle(inst.graph);
    EXPECT_FALSE(TestStarUnbounded(oracle, 3, 0.1, {}, seed).reject);
  }
}

TEST(StarUnboundedTest, LightVerticesCanFormTheMinor) {
  // Cubic graph, k = 4: no vertex is heavy, yet an edge contracts to a
  // degree-4 vertex.
  Instance inst = GenLowerBoundFamily(256, 4);
  QueryOracle oracle(inst.graph);
  StarUnboundedInfo info;
  Verdict v = TestStarUnbounded(oracle, 4, 0.5, {}, 1, &info);
  ASSERT_TRUE(v.reject);
  EXPECT_TRUE(info.minor_in_emulation);
  EXPECT_FALSE(info.heavy_in_emulation);
  ExpectHeavyOrMinorWitness(inst.graph, v, 4);
}

TEST(StarUnboundedTest, OneSidedOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    const std::size_t n = 6 + rng.Uniform(0, 40);
    const std::size_t d = 2 + rng.Uniform(0, 4);
    Graph g = testing::RandomConnectedGraph(n, d, rng.Uniform(0, n), seed);
    const std::size_t k = 3 + rng.Uniform(0, 2);
    QueryOracle oracle(g);
    Verdict v = TestStarUnbounded(oracle, k, 0.5, {}, seed);
    const bool has = ExactHasMinor(g, Pattern::Star(k));
    if (!has) EXPECT_FALSE(v.reject);
    if (v.reject) ExpectHeavyOrMinorWitness(g, v, k);
  }
}

TEST(StarUnboundedTest, Preconditions) {
  Instance p = GenPath(10, 2);
  QueryOracle oracle(p.graph);
  EXPECT_THROW(TestStarUnbounded(oracle, 2, 0.5, {}, 1), PreconditionError);
  EXPECT_THROW(TestStarUnbounded(oracle, 3, 1.5, {}, 1), PreconditionError);
}

TEST(StarUnboundedTest, BudgetPropagates) {
  Instance inst = GenCliquePlusCycle(10000, true);
  QueryOracle oracle(inst.graph, 50);
  EXPECT_THROW(TestStarUnbounded(oracle, 3, 0.1, {}, 1), BudgetExhausted);
  EXPECT_LE(oracle.total_queries(), 50u);
}

// ---------------------------------------------------------------- cycles

TEST(CycleUnboundedTest, HighDegreeForestAccepts) {
  // A star with 300 leaves hanging off a path.
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 2; v <= 301; ++v) e.emplace_back(1, v);
  for (Vertex v = 302; v <= 400; ++v) e.emplace_back(v - 1, v);
  Graph g = Graph::FromEdges(400, 300, e);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    QueryOracle oracle(g);
    EXPECT_FALSE(TestCycleFreeUnbounded(oracle, 0.1, {}, seed).reject);
  }
}

TEST(CycleUnboundedTest, WheelGivesVerifiedCycles) {
  // Hub 1 joined to every vertex of the rim cycle 2..257; half the edges
  // must go.
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 2; v <= 257; ++v) {
    e.emplace_back(1, v);
    e.emplace_back(v, v == 257 ? 2 : v + 1);
  }
  Graph g = Graph::FromEdges(257, 256, e);
  int rejects = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    QueryOracle oracle(g);
    Verdict v = TestCycleFreeUnbounded(oracle, 0.1, {}, seed);
    if (!v.reject) continue;
    ++rejects;
    EXPECT_TRUE(VerifyCertificate(g, *v.certificate).ok());
  }
  EXPECT_GT(rejects, 0);
}

// ---------------------------------------------------------------- experiment

TEST(DistinguishingTest, ZeroBudgetDetectsNothing) {
  DistinguishingStats s = DistinguishingExperiment(1024, 0, 20, 1);
  EXPECT_EQ(s.detected_clique, 0u);
  EXPECT_EQ(s.detected_isolated, 0u);
  EXPECT_EQ(s.mean_queries, 0.0);
}

TEST(DistinguishingTest, FullBudgetDetects) {
  DistinguishingStats s = DistinguishingExperiment(4096, 4096, 40, 2);
  EXPECT_GE(s.rate_clique, 0.95);
  EXPECT_EQ(s.detected_isolated, 0u);
}

TEST(DistinguishingTest, SmallBudgetRarelyDetects) {
  const std::size_t n = 16384;
  const auto q = static_cast<std::uint64_t>(std::sqrt(n) / 8);
  DistinguishingStats s = DistinguishingExperiment(n, q, 200, 3);
  EXPECT_EQ(q, 16u);
  EXPECT_LE(s.rate_clique, 0.1);
  EXPECT_EQ(s.detected_isolated, 0u);
  EXPECT_LE(s.mean_queries, 16.0);
}

TEST(DistinguishingTest, RootBudgetDetectsOften) {
  const std::size_t n = 16384;
  DistinguishingStats s = DistinguishingExperiment(n, 8 * 128, 200, 4);
  EXPECT_GE(s.rate_clique, 0.5);
  EXPECT_EQ(s.detected_isolated, 0u);
}

TEST(DistinguishingTest, NeedsPerfectSquare) {
  EXPECT_THROW(DistinguishingExperiment(1000, 10, 1, 1), PreconditionError);
}

}  // namespace
}  // namespace minorprop
