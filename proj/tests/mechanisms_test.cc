#include <algorithm>

#include <gtest/gtest.h>

#include "graphveil/errors.h"
#include "graphveil/generators.h"
#include "graphveil/mechanisms.h"
#include "graphveil/random.h"
#include "graphveil/symmetry.h"

namespace graphveil {
namespace {

std::vector<Rational> Ints(std::initializer_list<std::int64_t> values) {
  std::vector<Rational> out;
  for (auto v : values) out.emplace_back(v);
  return out;
}

DegreeSequence SortedDegrees(const Graph& g) {
  auto d = DegreesOf(g);
  std::sort(d.begin(), d.end());
  return d;
}

TEST(NaiveCopiesTest, Triangle) {
  auto ag = NaiveCopies(CompleteGraph(3), 2);
  EXPECT_EQ(ag.published.num_nodes(), 6u);
  EXPECT_EQ(ag.published.num_edges(), 6u);
  EXPECT_EQ(PrivacyCost(ag), 3u);
  EXPECT_EQ(EdgeOverhead(ag), 3);
  EXPECT_TRUE(InvariantViolations(ag).empty());
}

TEST(NaiveCopiesTest, EdgeThreeCopies) {
  auto ag = NaiveCopies(PathGraph(2), 3);
  EXPECT_EQ(ag.published.num_nodes(), 6u);
  EXPECT_EQ(ag.published.num_edges(), 3u);
  EXPECT_TRUE(IsKIsomorphic(ag.published, 3));
  EXPECT_EQ(PrivacyCost(ag), 4u);
}

TEST(NaiveCopiesTest, SeededCopyIsSharedAndDeterministic) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto ag = NaiveCopies(PawGraph(), 3, seed);
    const std::size_t copy = *ag.sigma.Get(0) / 4;
    for (NodeId v = 0; v < 4; ++v) ASSERT_EQ(*ag.sigma.Get(v), ReplicaNode(copy, v, 4));
    ASSERT_EQ(ag.sigma, NaiveCopies(PawGraph(), 3, seed).sigma);
    ASSERT_TRUE(InvariantViolations(ag).empty());
  }
}

TEST(NaiveCopiesTest, RejectsSmallK) {
  EXPECT_THROW(NaiveCopies(CompleteGraph(3), 1), InvalidK);
  EXPECT_THROW(KFoldReplicate(CompleteGraph(3), 0), InvalidK);
}

TEST(ReplicationTest, TriangleExample) {
  auto ag = KFoldReplicate(CompleteGraph(3), 2);
  EXPECT_EQ(ag.published.num_nodes(), 6u);
  EXPECT_EQ(ag.published.num_edges(), 12u);
  EXPECT_EQ(PrivacyCost(ag), 3u);
  EXPECT_EQ(EdgeOverhead(ag), 9);
}

TEST(ReplicationTest, SingleEdgeGivesK22) {
  auto ag = KFoldReplicate(PathGraph(2), 2);
  EXPECT_EQ(ag.published.num_edges(), 4u);
  const Edge k22[] = {{0, 1}, {0, 3}, {2, 1}, {2, 3}};
  EXPECT_TRUE(FindIsomorphism(ag.published, Graph(4, k22)).isomorphic);
  EXPECT_FALSE(ag.published.HasEdge(0, 2));
}

TEST(ReplicationTest, StarDegreeLaw) {
  for (std::size_t n : {4, 5, 6}) {
    for (std::size_t k : {2, 3}) {
      DegreeSequence expected(k * (n - 1), k);
      expected.insert(expected.end(), k, k * (n - 1));
      EXPECT_EQ(SortedDegrees(KFoldReplicate(StarGraph(n), k).published), expected)
          << "n=" << n << " k=" << k;
    }
  }
}

// Structural law on random graphs: (i,j) ~ (r,v) iff j ~ v, edges (k^2)|E|.
TEST(ReplicationTest, StructuralLawOnRandomGraphs) {
  Rng rng(21);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.Below(8);
    const std::size_t k = 2 + rng.Below(2);
    Graph g = RandomGraph(n, Rational(1, 2), rng);
    auto ag = KFoldReplicate(g, k, rng.Next());
    ASSERT_EQ(ag.published.num_edges(), k * k * g.num_edges());
    ASSERT_TRUE(InvariantViolations(ag).empty());
    for (std::size_t i = 0; i < k; ++i) {
      for (NodeId j = 0; j < n; ++j) {
        for (std::size_t r = 0; r < k; ++r) {
          for (NodeId v = 0; v < n; ++v) {
            ASSERT_EQ(ag.published.HasEdge(ReplicaNode(i, j, n), ReplicaNode(r, v, n)),
                      g.HasEdge(j, v));
          }
        }
      }
      for (NodeId j = 0; j < n; ++j) {
        ASSERT_EQ(ag.published.degree(ReplicaNode(i, j, n)), k * g.degree(j));
      }
    }
  }
}

TEST(DegreeEqualizeTest, TriangleParams) {
  auto p = DegreeEqualizeParams(CompleteGraph(3), Rational(3));
  EXPECT_EQ(p.m, 1u);
  EXPECT_EQ(p.p, Ints({1, 1, 1}));
  EXPECT_EQ(p.q, Rational(0));
}

TEST(DegreeEqualizeTest, StarParams) {
  auto p = DegreeEqualizeParams(StarGraph(5), Rational(4));
  EXPECT_EQ(p.m, 3u);
  EXPECT_EQ(p.p, Ints({1, 1, 1, 1, 0}));
  for (const Rational& d : ExpectedDegrees(StarGraph(5), p)) EXPECT_EQ(d, Rational(4));
  EXPECT_EQ(ExpectedDegrees(StarGraph(5), p).size(), 8u);
}

TEST(DegreeEqualizeTest, FeasibilityBoundaryOnStar) {
  // a = 5: m = ceil(5 - 8/5) = 4, leaf p = 1.
  auto p5 = DegreeEqualizeParams(StarGraph(5), Rational(5));
  EXPECT_EQ(p5.m, 4u);
  EXPECT_EQ(p5.p[0], Rational(1));
  EXPECT_EQ(p5.p[4], Rational(1, 4));
  // a = 6 is the first infeasible integer target: m = 4, leaf p = 5/4.
  EXPECT_THROW(DegreeEqualizeParams(StarGraph(5), Rational(6)), InfeasibleTarget);
  EXPECT_THROW(DegreeEqualizeParams(StarGraph(5), Rational(100)), InfeasibleTarget);
  // Below the maximum degree the center needs a negative probability.
  EXPECT_THROW(DegreeEqualizeParams(StarGraph(5), Rational(3)), InfeasibleTarget);
}

TEST(DegreeEqualizeTest, DegenerateTargets) {
  EXPECT_THROW(DegreeEqualizeParams(CompleteGraph(3), Rational(2)), DegenerateTarget);
  EXPECT_THROW(DegreeEqualizeParams(CompleteGraph(3), Rational(0)), DegenerateTarget);
  EXPECT_THROW(DegreeEqualizeParams(CompleteGraph(3), Rational(-1)), DegenerateTarget);
}

TEST(DegreeEqualizeTest, RoundingDeviationWithoutCorrection) {
  // P3 with a = 5/2: slack = 15/2 - 4 = 7/2, m = ceil(7/5) = 2.
  const Graph g = PathGraph(3);
  auto p = DegreeEqualizeParams(g, Rational(5, 2));
  ASSERT_EQ(p.m, 2u);
  auto d = ExpectedDegrees(g, p);
  for (NodeId v = 0; v < 3; ++v) EXPECT_EQ(d[v], Rational(5, 2));
  EXPECT_EQ(d[3], Rational(7, 4));
  EXPECT_EQ(d[4], Rational(7, 4));
}

TEST(DegreeEqualizeTest, CorrectionRestoresFakeExpectation) {
  const Graph g = PathGraph(3);
  auto p = DegreeEqualizeParams(g, Rational(5, 2), true);
  EXPECT_EQ(p.q, Rational(3, 4));
  for (const Rational& d : ExpectedDegrees(g, p)) EXPECT_EQ(d, Rational(5, 2));
}

TEST(DegreeEqualizeTest, TriangleSampleIsK4) {
  const Graph g = CompleteGraph(3);
  auto params = DegreeEqualizeParams(g, Rational(3));
  for (std::uint64_t seed : std::initializer_list<std::uint64_t>{0, 1, 12345, kDefaultRngSeed}) {
    auto ag = SampleDegreeEqualize(g, params, seed);
    EXPECT_EQ(ag.published.edges(), CompleteGraph(4).edges());
    EXPECT_EQ(ag.published.kind(3), NodeKind::kFake);
    EXPECT_EQ(PrivacyCost(ag), 1u);
    EXPECT_EQ(EdgeOverhead(ag), 3);
    EXPECT_TRUE(InvariantViolations(ag).empty());
  }
}

TEST(DegreeEqualizeTest, ZeroProbabilitiesAddIsolatedNodes) {
  const Graph g = PathGraph(3);
  MechanismParams params{Rational(2), 2, Ints({0, 0, 0}), Rational(0), false};
  auto ag = SampleDegreeEqualize(g, params, 9);
  EXPECT_EQ(ag.published.num_nodes(), 5u);
  EXPECT_EQ(ag.published.num_edges(), 2u);
}

TEST(DegreeEqualizeTest, SameSeedSameGraph) {
  Rng rng(5);
  Graph g = RandomGraph(8, Rational(2, 5), rng);
  std::size_t max_degree = 0;
  for (NodeId v = 0; v < 8; ++v) max_degree = std::max(max_degree, g.degree(v));
  auto params = DegreeEqualizeParams(g, Rational(static_cast<std::int64_t>(max_degree)));
  EXPECT_EQ(SampleDegreeEqualize(g, params, 77).published,
            SampleDegreeEqualize(g, params, 77).published);
}

TEST(DegreeEqualizeTest, VarianceIsBernoulliSum) {
  const Graph g = PathGraph(3);
  auto p = DegreeEqualizeParams(g, Rational(5, 2), true);
  auto var = DegreeVariances(g, p);
  // Endpoint: 2 draws with p = 3/4; fake: 3 real draws plus one q draw.
  EXPECT_EQ(var[0], Rational(2) * Rational(3, 4) * Rational(1, 4));
  EXPECT_EQ(var[1], Rational(2) * Rational(1, 4) * Rational(3, 4));
  const Rational fake = Rational(3, 4) * Rational(1, 4) * 2 +
                        Rational(1, 4) * Rational(3, 4) +
                        Rational(3, 4) * Rational(1, 4);
  EXPECT_EQ(var[3], fake);
}

TEST(InvariantsTest, DetectsInjectedRealEdge) {
  auto ag = KFoldReplicate(PathGraph(3), 2);
  ag.published = ag.published.WithEdge(Edge(*ag.sigma.Get(0), *ag.sigma.Get(2)));
  EXPECT_FALSE(InvariantViolations(ag).empty());
}

}  // namespace
}  // namespace graphveil
