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

#include "minorprop/cycle_tester.h"

#include <bit>
#include <cmath>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "minorprop/errors.h"
#include "minorprop/exact.h"
#include "minorprop/generators.h"
#include "support/graph_enum.h"

namespace minorprop {
namespace {

using ::testing::ElementsAre;
using ::testing::UnorderedElementsAre;

Graph Make(std::size_t n, std::size_t d,
           std::vector<std::pair<Vertex, Vertex>> edges) {
  return Graph::FromEdges(n, d, edges);
}

// First seed whose labeling gives each edge of g the requested bit.
std::uint64_t SeedFor(const Graph& g, LabelDomain domain,
                      const std::vector<bool>& bits) {
  const auto edges = g.Edges();
  for (std::uint64_t seed = 0;; ++seed) {
    EdgeLabeling lab(seed, domain);
    bool ok = true;
    for (std::size_t j = 0; ok && j < edges.size(); ++j) {
      ok = lab.Bit(edges[j]) == bits[j];
    }
    if (ok) return seed;
  }
}

// Fewest monochromatic edges over all 2-colorings (parallel edges count
// separately). Brute force, n <= 16.
std::size_t BruteBipartiteDistance(const Graph& g) {
  std::size_t best = g.edge_count();
  const auto edges = g.Edges();
  for (std::uint32_t mask = 0; mask < (1u << g.n()); ++mask) {
    std::size_t bad = 0;
    for (const auto& e : edges) {
      bad += ((mask >> (e.u - 1)) & 1) == ((mask >> (e.v - 1)) & 1) ? 1 : 0;
    }
    best = std::min(best, bad);
  }
  return best;
}

TEST(GTauViewTest, SamplingTreeOnSingleEdge) {
  // Path 1-2, d = 3, tau(1,2) = 2: six virtual outcomes per base vertex.
  Graph g = Make(2, 3, {{1, 2}});
  EdgeLabeling tau(SeedFor(g, LabelDomain::kTau, {true}), LabelDomain::kTau);
  QueryOracle oracle(g);
  GTauView view(oracle, tau);
  std::map<VertexId, int> hits;
  int total = 0;
  for (Vertex v = 1; v <= 2; ++v) {
    for (std::uint64_t r = 0; r < 8; ++r) {
      ++total;
      if (auto x = view.SampleOutcome(v, r)) ++hits[*x];
    }
  }
  ASSERT_EQ(total, 16);
  // Each virtual vertex: 2 of 16 leaves = 1/((d+1) N) = 1/8.
  EXPECT_EQ(hits[1], 2);
  EXPECT_EQ(hits[2], 2);
  EXPECT_EQ(hits[AuxVertex(1, 2)], 2);
  EXPECT_EQ(hits.size(), 3u);
}

TEST(GTauViewTest, SamplingIsUniformOverVirtualVertices) {
  Graph g = Make(6, 3, {{1, 2}, {2, 3}, {3, 1}, {3, 4}, {4, 5}, {5, 6}, {6, 4}});
  EdgeLabeling tau(5, LabelDomain::kTau);
  QueryOracle oracle(g);
  GTauView view(oracle, tau);
  Graph mat = MaterializeGTau(g, tau);
  const double p = 1.0 / (4 * 6);
  const int samples = 100000;
  std::map<VertexId, int> hits;
  Rng rng(1);
  for (int i = 0; i < samples; ++i) {
    if (auto x = view.TrySample(rng)) ++hits[*x];
  }
  EXPECT_EQ(hits.size(), mat.n());
  const double sigma = std::sqrt(samples * p * (1 - p));
  for (auto [x, c] : hits) {
    EXPECT_NEAR(c, samples * p, 3 * sigma) << x;
  }
}

TEST(GTauViewTest, NoSubdivisionMeansOnlyOriginals) {
  Graph g = Make(3, 3, {{1, 2}, {2, 3}});
  EdgeLabeling tau(SeedFor(g, LabelDomain::kTau, {false, false}),
                   LabelDomain::kTau);
  QueryOracle oracle(g);
  GTauView view(oracle, tau);
  Rng rng(2);
  for (int i = 0; i < 2000; ++i) {
    if (auto x = view.TrySample(rng)) EXPECT_FALSE(IsAux(*x));
  }
  for (Vertex v = 1; v <= 3; ++v) {
    for (std::size_t i = 1; i <= 3; ++i) {
      EXPECT_EQ(view.Neighbor(v, i), VertexId{g.degree(v) >= i
                                                  ? g.neighbors(v)[i - 1]
                                                  : 0});
    }
  }
}

TEST(GTauViewTest, NeighborTranslation) {
  Graph g = Make(3, 3, {{1, 2}, {1, 3}, {2, 3}});
  // Edges() order: {1,2}, {1,3}, {2,3}; subdivide only {1,2}.
  EdgeLabeling tau(SeedFor(g, LabelDomain::kTau, {true, false, false}),
                   LabelDomain::kTau);
  QueryOracle oracle(g);
  GTauView view(oracle, tau);
  const VertexId a12 = AuxVertex(1, 2);
  EXPECT_EQ(view.Neighbor(1, 1), a12);
  EXPECT_EQ(view.Neighbor(1, 2), 3u);
  EXPECT_EQ(view.Neighbor(1, 3), 0u);
  EXPECT_EQ(view.Neighbor(a12, 1), 1u);
  EXPECT_EQ(view.Neighbor(a12, 2), 2u);
  EXPECT_EQ(view.Neighbor(a12, 3), 0u);
  EXPECT_EQ(AuxVertex(2, 1), a12);
  EXPECT_EQ(view.vertex_count_estimate(), 12u);
}

TEST(GTauViewTest, ContractionRemovesAuxiliaryVertices) {
  SimpleCycle c = ContractGTauCycle({1, AuxVertex(1, 2), 2, 3});
  EXPECT_THAT(c.vertices, ElementsAre(1u, 2u, 3u));
  EXPECT_THROW(ContractGTauCycle({1, AuxVertex(1, 2), 2}), InternalError);
}

// Subdivision keeps forests bipartite for every tau, and makes a cyclic
// graph non-bipartite for at least half of all tau.
TEST(GTauLemmaTest, ExhaustiveOverSmallConnectedGraphs) {
  testing::EnumLimits limits;
  limits.max_vertices = 8;
  limits.max_edges = 7;
  std::size_t graphs = 0;
  for (const Graph& g : testing::EnumerateConnectedGraphs(limits)) {
    const std::size_t m = g.edge_count();
    const bool forest = IsCycleFree(g);
    std::size_t odd = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      std::vector<int> t(m);
      for (std::size_t j = 0; j < m; ++j) t[j] = 1 + ((mask >> j) & 1);
      if (FindOddCycle(MaterializeGTau(g, t), nullptr)) ++odd;
    }
    if (forest) {
      EXPECT_EQ(odd, 0u);
    } else {
      EXPECT_GE(2 * odd, std::size_t{1} << m);
    }
    ++graphs;
  }
  // Connected graphs with 0..7 edges: 1+1+1+3+5+12+30+79.
  EXPECT_EQ(graphs, 132u);
}

TEST(DoubleCoverTest, SingleNeqEdge) {
  Graph g = Make(2, 3, {{1, 2}});
  EdgeLabeling lambda(SeedFor(g, LabelDomain::kLambda, {false}),
                      LabelDomain::kLambda);
  Graph cover = BuildDoubleCover(g, lambda);
  std::vector<std::tuple<VertexId, VertexId>> got;
  for (const auto& e : cover.Edges()) got.emplace_back(e.u, e.v);
  EXPECT_THAT(got, UnorderedElementsAre(std::tuple<VertexId, VertexId>{1, 2},
                                        std::tuple<VertexId, VertexId>{3, 4},
                                        std::tuple<VertexId, VertexId>{1, 3},
                                        std::tuple<VertexId, VertexId>{1, 3},
                                        std::tuple<VertexId, VertexId>{2, 4},
                                        std::tuple<VertexId, VertexId>{2, 4}));
}

TEST(DoubleCoverTest, DegreesTriple) {
  Graph g = testing::RandomConnectedGraph(8, 3, 3, 4);
  EdgeLabeling lambda(9, LabelDomain::kLambda);
  Graph cover = BuildDoubleCover(g, lambda);
  for (Vertex v = 1; v <= 8; ++v) {
    EXPECT_EQ(cover.degree(v), 3 * g.degree(v));
    EXPECT_EQ(cover.degree(v + 8), 3 * g.degree(v));
  }
}

TEST(DoubleCoverTest, BipartiteDistanceIsTwiceMinViolations) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Graph g = testing::RandomConnectedGraph(3 + seed % 5, 3, 1 + seed % 3, seed);
    EdgeLabeling lambda(seed * 13 + 5, LabelDomain::kLambda);
    Graph cover = BuildDoubleCover(g, lambda);
    EXPECT_EQ(BruteBipartiteDistance(cover), 2 * ExactMinViolations(g, &lambda))
        << seed;
  }
}

TEST(DoubleCoverTest, TriangleCoverOddIffNotColorable) {
  Graph tri = Make(3, 3, {{1, 2}, {1, 3}, {2, 3}});
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    std::vector<bool> bits{(mask & 1) != 0, (mask & 2) != 0, (mask & 4) != 0};
    EdgeLabeling lambda(SeedFor(tri, LabelDomain::kLambda, bits),
                        LabelDomain::kLambda);
    const bool colorable = ExactMinViolations(tri, &lambda) == 0;
    const bool cover_odd =
        FindOddCycle(BuildDoubleCover(tri, lambda), nullptr).has_value();
    EXPECT_EQ(cover_odd, !colorable) << mask;
    // Non-colorable exactly when the number of eq labels is even.
    EXPECT_EQ(colorable, std::popcount(mask) % 2 == 1) << mask;
  }
}

TEST(DirectLabelingTest, CycleNonColorableFractionIsHalf) {
  for (std::size_t k : {3, 4}) {
    Instance c = GenCycle(k, 3);
    int bad = 0;
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      std::vector<bool> bits;
      for (std::size_t j = 0; j < k; ++j) bits.push_back((mask >> j) & 1);
      EdgeLabeling lambda(SeedFor(c.graph, LabelDomain::kLambda, bits),
                          LabelDomain::kLambda);
      bad += ExactMinViolations(c.graph, &lambda) > 0 ? 1 : 0;
    }
    EXPECT_EQ(bad, 1 << (k - 1)) << k;
  }
}

TEST(CycleTesterTest, ForestsAlwaysAccept) {
  CycleTesterConfig config;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Instance f = GenForest(300, 3, seed);
    for (std::uint64_t run = 0; run < 20; ++run) {
      QueryOracle oracle(f.graph);
      EXPECT_FALSE(TestCycleFree(oracle, 0.1, config, run).reject);
      QueryOracle oracle2(f.graph);
      EXPECT_FALSE(TestCycleFreeDirect(oracle2, 0.1, config, run).reject);
    }
  }
}

TEST(CycleTesterTest, TriangleUnderExhaustiveFallback) {
  Graph tri = Make(3, 3, {{1, 2}, {1, 3}, {2, 3}});
  CycleTesterConfig config;
  config.walker = WalkerConfig{};  // formula defaults: T*K*L >= n*d
  config.tau_rounds = 16;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    QueryOracle oracle(tri);
    Verdict v = TestCycleFree(oracle, 0.5, config, seed);
    ASSERT_TRUE(v.reject) << seed;
    EXPECT_TRUE(v.exhaustive);
    EXPECT_THAT(std::get<SimpleCycle>(*v.certificate).vertices,
                UnorderedElementsAre(1u, 2u, 3u));
  }
}

TEST(CycleTesterTest, FarInstanceRejectsWithShortVerifiedCycles) {
  CycleTesterConfig config;
  int rejects = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Instance g = GenFarFromCycleFree(1024, 3, 0.1, seed);
    QueryOracle oracle(g.graph);
    CycleRunInfo info;
    Verdict v = TestCycleFree(oracle, 0.1, config, seed, &info);
    EXPECT_FALSE(info.params.exhaustive);
    // Base queries: one per walk step plus one per sampling attempt.
    EXPECT_LE(oracle.neighbor_queries(),
              info.params.starts * info.params.walks * info.params.length +
                  info.params.starts * SampleRetryCap(1024));
    if (!v.reject) continue;
    ++rejects;
    const auto& c = std::get<SimpleCycle>(*v.certificate);
    EXPECT_TRUE(VerifyCertificate(g.graph, c).ok());
    EXPECT_LE(c.length(), 2 * info.params.length);
  }
  EXPECT_GE(rejects, 30);
}

TEST(CycleTesterTest, DirectRouteOnLabeledFarInstance) {
  int rejects = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Instance g = GenFarFromCycleFree(2048, 3, 0.1, seed % 20);
    EdgeLabeling lambda(seed + 77, LabelDomain::kLambda);
    QueryOracle oracle(g.graph);
    Verdict v = Test2Colorable(oracle, 0.025, &lambda, CalibratedDirectWalker(),
                               seed);
    if (!v.reject) continue;
    ++rejects;
    VerifyOptions opts;
    opts.labeling = &lambda;
    EXPECT_TRUE(VerifyCertificate(g.graph, *v.certificate, opts).ok());
  }
  EXPECT_GE(rejects, 100);
}

TEST(CycleTesterTest, RejectsBadEps) {
  Graph tri = Make(3, 3, {{1, 2}, {1, 3}, {2, 3}});
  QueryOracle oracle(tri);
  EXPECT_THROW(TestCycleFree(oracle, 0, CycleTesterConfig{}, 1),
               PreconditionError);
  EXPECT_THROW(TestCycleFreeDirect(oracle, 2, CycleTesterConfig{}, 1),
               PreconditionError);
}

}  // namespace
}  // namespace minorprop
