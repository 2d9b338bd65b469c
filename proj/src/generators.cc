#include "graphveil/generators.h"

#include <vector>

namespace graphveil {

Graph CompleteGraph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph PathGraph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

Graph CycleGraph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  if (n >= 3) edges.emplace_back(static_cast<NodeId>(n - 1), 0);
  return Graph(n, edges);
}

Graph StarGraph(std::size_t n) {
  std::vector<Edge> edges;
  for (NodeId v = 0; v + 1 < n; ++v) {
    edges.emplace_back(v, static_cast<NodeId>(n - 1));
  }
  return Graph(n, edges);
}

Graph PawGraph() {
  const Edge edges[] = {{0, 1}, {1, 2}, {0, 2}, {2, 3}};
  return Graph(4, edges);
}

Graph EdgelessGraph(std::size_t n) { return Graph(n, std::vector<Edge>{}); }

Graph RandomGraph(std::size_t n, const Rational& p, Rng& rng) {
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.Bernoulli(p)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

Graph DisjointUnion(const Graph& a, const Graph& b) {
  const auto shift = static_cast<NodeId>(a.num_nodes());
  std::vector<NodeKind> kinds = a.kinds();
  kinds.insert(kinds.end(), b.kinds().begin(), b.kinds().end());
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);
  return Graph(std::move(kinds), edges);
}

}  // namespace graphveil
