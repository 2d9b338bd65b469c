#include "graphveil/routing.h"

#include <vector>

#include "graphveil/errors.h"
#include "graphveil/traversal.h"

namespace graphveil {
namespace {

// The valid-route graph pulled back onto original ids through sigma.
Graph PulledBackRoutes(const AnonymizedGraph& ag) {
  const std::size_t n = ag.original.num_nodes();
  if (!ag.sigma.IsTotal() || ag.sigma.domain_size() != n) {
    throw InconsistentData("sigma must be total on the original graph");
  }
  std::vector<Edge> edges;
  for (const Edge& e : ag.published.edges()) {
    if (ag.published.kind(e.u) != NodeKind::kReal ||
        ag.published.kind(e.v) != NodeKind::kReal) {
      continue;
    }
    auto a = ag.sigma.Preimage(e.u), b = ag.sigma.Preimage(e.v);
    // A real-tagged node outside sigma's image has no original counterpart.
    if (a && b) edges.emplace_back(*a, *b);
  }
  return Graph(n, edges);
}

// Pairs to examine: real-real edges missing from the original come first, so
// a corrupted edge is reported as its own witness.
std::vector<std::pair<NodeId, NodeId>> WitnessOrder(const AnonymizedGraph& ag,
                                                    const Graph& routes) {
  std::vector<std::pair<NodeId, NodeId>> order;
  for (const Edge& e : routes.edges()) {
    if (!ag.original.HasEdge(e.u, e.v)) order.emplace_back(e.u, e.v);
  }
  const std::size_t n = ag.original.num_nodes();
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId w = u + 1; w < n; ++w) order.emplace_back(u, w);
  }
  return order;
}

}  // namespace

Graph ValidRouteGraph(const AnonymizedGraph& ag) {
  std::vector<NodeId> real;
  for (NodeId p = 0; p < ag.published.num_nodes(); ++p) {
    if (ag.published.kind(p) == NodeKind::kReal) real.push_back(p);
  }
  Graph induced = InducedSubgraph(ag.published, real);
  std::vector<std::uint64_t> labels(real.size());
  for (std::size_t i = 0; i < real.size(); ++i) {
    labels[i] = ag.published.label(real[i]);
  }
  return Graph(induced.kinds(), induced.edges(), std::move(labels));
}

RoutingCheck CheckReachabilityPreserved(const AnonymizedGraph& ag) {
  RoutingCheck result{"reachability", true, std::nullopt};
  const Graph routes = PulledBackRoutes(ag);
  const auto before = ComponentLabels(ag.original);
  const auto after = ComponentLabels(routes);
  for (auto [u, w] : WitnessOrder(ag, routes)) {
    if ((before[u] == before[w]) != (after[u] == after[w])) {
      result.passed = false;
      result.witness.emplace(u, w);
      break;
    }
  }
  return result;
}

RoutingCheck CheckShortestPathsPreserved(const AnonymizedGraph& ag) {
  RoutingCheck result{"shortest-paths", true, std::nullopt};
  const Graph routes = PulledBackRoutes(ag);
  const std::size_t n = ag.original.num_nodes();
  std::vector<std::vector<std::size_t>> before(n), after(n);
  for (NodeId u = 0; u < n; ++u) {
    before[u] = HopDistances(ag.original, u);
    after[u] = HopDistances(routes, u);
  }
  for (auto [u, w] : WitnessOrder(ag, routes)) {
    if (before[u][w] != after[u][w]) {
      result.passed = false;
      result.witness.emplace(u, w);
      break;
    }
  }
  return result;
}

}  // namespace graphveil
