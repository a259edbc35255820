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
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "minorprop/errors.h"
#include "minorprop/exact.h"

namespace minorprop {
namespace {

using ::testing::UnorderedElementsAre;

std::vector<std::size_t> ComponentSizes(const Graph& g) {
  std::vector<std::size_t> sizes;
  for (const auto& c : g.Components()) sizes.push_back(c.size());
  return sizes;
}

// Exact minor check per component; every component must be small.
bool AnyComponentHasMinor(const Graph& g, const Pattern& h) {
  for (const auto& c : g.Components()) {
    if (ExactHasMinor(g.Induced(c), h)) return true;
  }
  return false;
}

// Independent count of |E| - n + c by union-find.
std::size_t UnionFindDistance(const Graph& g) {
  std::vector<Vertex> parent(g.n() + 1);
  for (Vertex v = 0; v <= g.n(); ++v) parent[v] = v;
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t redundant = 0;
  for (const auto& e : g.Edges()) {
    Vertex a = find(static_cast<Vertex>(e.u));
    Vertex b = find(static_cast<Vertex>(e.v));
    if (a == b) {
      ++redundant;
    } else {
      parent[a] = b;
    }
  }
  return redundant;
}

TEST(GeneratorsTest, EveryFamilyIsDeterministicInSeed) {
  std::vector<InstanceSpec> specs = {
      {.family = "forest", .n = 300},
      {.family = "far_from_cycle_free", .n = 300, .eps = 0.1},
      {.family = "lower_bound", .n = 300},
      {.family = "planted_minor", .n = 256, .pattern = "spider:2,1,1"},
      {.family = "minor_free", .n = 200, .pattern = "K1,3"},
      {.family = "disjoint_cycles", .n = 200, .k = 5},
      {.family = "linked_stars", .n = 200, .k = 3},
  };
  for (InstanceSpec spec : specs) {
    spec.seed = 11;
    Instance a = Generate(spec);
    Instance b = Generate(spec);
    EXPECT_TRUE(a.graph == b.graph) << spec.family;
    EXPECT_EQ(a.graph.n(), spec.n);
    EXPECT_LE(a.graph.max_degree(), spec.d);
    spec.seed = 12;
    EXPECT_FALSE(Generate(spec).graph == a.graph) << spec.family;
  }
}

TEST(GeneratorsTest, ForestIsCycleFree) {
  EXPECT_EQ(GenForest(1, 3, 0).graph.n(), 1u);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Instance f = GenForest(500, 3, seed);
    EXPECT_TRUE(IsCycleFree(f.graph));
    EXPECT_LE(f.graph.max_degree(), 3u);
    EXPECT_EQ(f.truth.cycle_free_distance, 0u);
  }
}

TEST(GeneratorsTest, FarFromCycleFreeHitsDistanceFormula) {
  Instance g = GenFarFromCycleFree(100, 4, 0.05, 7);
  EXPECT_EQ(g.truth.cycle_free_distance, 20u);
  EXPECT_EQ(UnionFindDistance(g.graph), 20u);
  EXPECT_EQ(g.graph.Components().size(), 1u);

  Instance tree = GenFarFromCycleFree(100, 4, 0.0, 7);
  EXPECT_EQ(tree.graph.edge_count(), 99u);
  EXPECT_TRUE(IsCycleFree(tree.graph));

  EXPECT_THROW(GenFarFromCycleFree(100, 3, 0.2, 0), PreconditionError);
}

TEST(GeneratorsTest, FarFromCycleFreeDistanceFractionAtLeastEps) {
  for (std::size_t d : {3, 4, 5}) {
    for (double eps : {0.01, 0.05, 0.1, 0.15}) {
      if (eps * d > (d - 2) / 2.0) continue;
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Instance g = GenFarFromCycleFree(400, d, eps, seed);
        std::size_t delta = UnionFindDistance(g.graph);
        EXPECT_EQ(delta, g.truth.cycle_free_distance);
        EXPECT_GE(static_cast<double>(delta) / (d * 400.0), eps);
        EXPECT_LE(g.graph.max_degree(), d);
      }
    }
  }
}

TEST(GeneratorsTest, LowerBoundFamilyIsCubicAndFar) {
  EXPECT_THROW(GenLowerBoundFamily(11, 0), PreconditionError);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Instance g = GenLowerBoundFamily(4096, seed);
    for (Vertex v = 1; v <= 4096; ++v) ASSERT_EQ(g.graph.degree(v), 3u);
    for (Vertex v = 1; v <= 4096; ++v) {
      ASSERT_TRUE(g.graph.HasEdge(v, v % 4096 + 1));
    }
    std::size_t delta = UnionFindDistance(g.graph);
    EXPECT_EQ(delta, 3 * 4096 / 2 - 4096 + 1);
    EXPECT_GE(delta / (3.0 * 4096), 1.0 / 8);
  }
  // n = 4 leaves exactly one valid matching.
  Instance small = GenLowerBoundFamily(4, 3);
  EXPECT_TRUE(small.graph.HasEdge(1, 3));
  EXPECT_TRUE(small.graph.HasEdge(2, 4));
}

TEST(GeneratorsTest, PlantedMinorWitnessVerifies) {
  for (const char* spec : {"K1,3", "C5", "P4", "spider:2,1,1"}) {
    Pattern h = Pattern::Parse(spec);
    for (PlantBase base : {PlantBase::kPath, PlantBase::kTree}) {
      Instance g = GenPlantedMinor(96, 3, h, 16, base, 5);
      ASSERT_TRUE(g.truth.witness.has_value());
      EXPECT_TRUE(VerifyCertificate(g.graph, *g.truth.witness).ok()) << spec;
      EXPECT_EQ(g.truth.minor_distance_lower_bound, 6u);
      EXPECT_EQ(g.graph.Components().size(), 6u);
      EXPECT_TRUE(AnyComponentHasMinor(g.graph, h)) << spec;
    }
  }
  EXPECT_THROW(GenPlantedMinor(64, 3, Pattern::Star(4), 16, PlantBase::kTree,
                               0),
               PreconditionError);
  EXPECT_THROW(GenPlantedMinor(64, 3, Pattern::Complete(4), 16,
                               PlantBase::kTree, 0),
               PreconditionError);
}

TEST(GeneratorsTest, CliquePlusCycle) {
  Instance g = GenCliquePlusCycle(100, false);
  EXPECT_THAT(ComponentSizes(g.graph), UnorderedElementsAre(90u, 10u));
  EXPECT_EQ(g.graph.degree_bound(), 9u);
  Graph clique = g.graph.Induced(g.graph.Components()[1]);
  EXPECT_TRUE(ExactHasMinor(clique, Pattern::Star(3)));

  Instance iso = GenCliquePlusCycle(100, true);
  EXPECT_EQ(iso.graph.Components().size(), 11u);
  EXPECT_EQ(iso.graph.max_degree(), 2u);
  EXPECT_FALSE(ExactHasMinor(iso.graph, Pattern::Star(3)));

  EXPECT_THROW(GenCliquePlusCycle(99, false), PreconditionError);
  EXPECT_THROW(GenCliquePlusCycle(9, false), PreconditionError);
}

TEST(GeneratorsTest, MinorFreeFamiliesRecheckPerComponent) {
  for (const char* spec : {"P1", "P2", "P3", "P4", "K1,3", "K1,4", "C3",
                           "C4", "C5", "spider:2,1,1", "triangle+edge"}) {
    Pattern h = Pattern::Parse(spec);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      Instance g = GenMinorFree(300, 3, h, seed);
      EXPECT_TRUE(g.truth.certified_minor_free);
      EXPECT_EQ(g.graph.n(), 300u);
      EXPECT_LE(g.graph.max_degree(), 3u);
      EXPECT_FALSE(AnyComponentHasMinor(g.graph, h)) << spec;
    }
  }
}

TEST(GeneratorsTest, MinorFreeFamiliesAreNotTrivial) {
  // Each family should contain edges once the pattern allows them.
  EXPECT_GT(GenMinorFree(300, 3, Pattern::Star(3), 0).graph.edge_count(),
            150u);
  EXPECT_GT(GenMinorFree(300, 3, Pattern::Cycle(5), 0).graph.edge_count(),
            150u);
  Instance cacti = GenMinorFree(300, 3, Pattern::Cycle(5), 0);
  EXPECT_GT(cacti.truth.cycle_free_distance, 0u);
}

TEST(GeneratorsTest, DisjointCyclesNeedOneDeletionEach) {
  for (std::size_t k : {3, 4, 5, 6}) {
    Instance g = GenDisjointCycles(203, 3, k, 9);
    EXPECT_EQ(g.graph.Components().size(), 1u);
    EXPECT_EQ(g.truth.cycle_free_distance, 203 / k);
    EXPECT_EQ(g.truth.minor_distance_lower_bound, 203 / k);
    ASSERT_TRUE(g.truth.witness.has_value());
    EXPECT_TRUE(VerifyCertificate(g.graph, *g.truth.witness).ok());
  }
}

TEST(GeneratorsTest, LinkedStarsWitness) {
  Instance g = GenLinkedStars(130, 3, 3, 2);
  EXPECT_EQ(g.graph.Components().size(), 1u);
  EXPECT_EQ(g.truth.minor_distance_lower_bound, 32u);
  ASSERT_TRUE(g.truth.witness.has_value());
  EXPECT_TRUE(VerifyCertificate(g.graph, *g.truth.witness).ok());
}

TEST(GeneratorsTest, SimpleFamilies) {
  EXPECT_EQ(GenPath(10, 3).graph.edge_count(), 9u);
  EXPECT_EQ(GenCycle(10, 3).truth.cycle_free_distance, 1u);
  EXPECT_EQ(GenMatching(11, 3).graph.edge_count(), 5u);
  EXPECT_THROW(Generate({.family = "nope", .n = 3}), PreconditionError);
}

}  // namespace
}  // namespace minorprop
