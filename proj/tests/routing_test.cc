#include <gtest/gtest.h>

#include "graphveil/generators.h"
#include "graphveil/mechanisms.h"
#include "graphveil/random.h"
#include "graphveil/routing.h"
#include "graphveil/traversal.h"

namespace graphveil {
namespace {

// Joins the images of some non-adjacent original pair; the edge is between
// real nodes, so it is a route the export policy would accept.
std::optional<AnonymizedGraph> InjectRealEdge(const AnonymizedGraph& ag, Rng& rng) {
  const std::size_t n = ag.original.num_nodes();
  std::vector<Edge> missing;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (!ag.original.HasEdge(u, v)) missing.emplace_back(u, v);
    }
  }
  if (missing.empty()) return std::nullopt;
  const Edge e = missing[rng.Below(missing.size())];
  AnonymizedGraph bad = ag;
  bad.published = ag.published.WithEdge(Edge(*ag.sigma.Get(e.u), *ag.sigma.Get(e.v)));
  return bad;
}

TEST(ValidRouteGraphTest, KeepsOnlyRealNodes) {
  auto ag = KFoldReplicate(PathGraph(3), 2);
  Graph routes = ValidRouteGraph(ag);
  EXPECT_EQ(routes.num_nodes(), 3u);
  EXPECT_EQ(routes.num_edges(), 2u);
  for (NodeId i = 0; i < 3; ++i) {
    EXPECT_EQ(ag.published.kind(static_cast<NodeId>(routes.label(i))), NodeKind::kReal);
  }
}

TEST(RoutingTest, MechanismsPreserveRoutes) {
  const Graph k3 = CompleteGraph(3);
  for (const auto& ag :
       {PublishIdentity(PawGraph()), NaiveCopies(PawGraph(), 2, 1),
        KFoldReplicate(PawGraph(), 3, 2),
        SampleDegreeEqualize(k3, DegreeEqualizeParams(k3, Rational(3)), 3)}) {
    EXPECT_TRUE(CheckReachabilityPreserved(ag).passed);
    EXPECT_TRUE(CheckShortestPathsPreserved(ag).passed);
  }
}

TEST(RoutingTest, FakeNodesDoNotShortenRoutes) {
  // Through the fake node every pair of P3 would be at distance 2; only
  // real-real edges count, so the endpoints stay 2 hops apart.
  const Graph p3 = PathGraph(3);
  MechanismParams params{Rational(2), 1, {Rational(1), Rational(1), Rational(1)},
                         Rational(0), false};
  auto ag = SampleDegreeEqualize(p3, params, 1);
  ASSERT_EQ(HopDistances(ag.published, 0)[2], 2u);
  EXPECT_TRUE(CheckShortestPathsPreserved(ag).passed);
}

TEST(RoutingTest, InjectedRealEdgeIsCaught) {
  auto ag = PublishIdentity(PathGraph(4));
  ag.published = ag.published.WithEdge(Edge(0, 3));
  auto paths = CheckShortestPathsPreserved(ag);
  EXPECT_FALSE(paths.passed);
  ASSERT_TRUE(paths.witness.has_value());
  EXPECT_EQ(*paths.witness, (std::pair<NodeId, NodeId>{0, 3}));
  // Reachability is unchanged by an edge inside one component.
  EXPECT_TRUE(CheckReachabilityPreserved(ag).passed);

  auto split = PublishIdentity(DisjointUnion(PathGraph(2), PathGraph(2)));
  split.published = split.published.WithEdge(Edge(1, 2));
  auto reach = CheckReachabilityPreserved(split);
  EXPECT_FALSE(reach.passed);
  EXPECT_EQ(*reach.witness, (std::pair<NodeId, NodeId>{1, 2}));
}

TEST(RoutingTest, RemovedEdgeIsCaught) {
  auto ag = PublishIdentity(PathGraph(3));
  ag.published = Graph(3, std::vector<Edge>{{0, 1}});
  EXPECT_FALSE(CheckReachabilityPreserved(ag).passed);
  EXPECT_FALSE(CheckShortestPathsPreserved(ag).passed);
}

TEST(RoutingTest, RandomGraphsAndNegativeControls) {
  Rng rng(51);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng.Below(9);
    Graph g = RandomGraph(n, Rational(2, 5), rng);
    for (const auto& ag : {NaiveCopies(g, 2, rng.Next()),
                           KFoldReplicate(g, 2 + rng.Below(2), rng.Next()),
                           PublishIdentity(g)}) {
      ASSERT_TRUE(CheckReachabilityPreserved(ag).passed);
      ASSERT_TRUE(CheckShortestPathsPreserved(ag).passed);
      auto bad = InjectRealEdge(ag, rng);
      if (!bad) continue;
      auto check = CheckShortestPathsPreserved(*bad);
      ASSERT_FALSE(check.passed);
      ASSERT_FALSE(ag.original.HasEdge(check.witness->first, check.witness->second));
    }
  }
}

}  // namespace
}  // namespace graphveil
