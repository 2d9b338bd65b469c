#include "graphveil/traversal.h"

#include <deque>
#include <stdexcept>

namespace graphveil {

std::vector<std::size_t> ComponentLabels(const Graph& g) {
  std::vector<std::size_t> label(g.num_nodes(), kUnreachable);
  std::size_t next = 0;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < g.num_nodes(); ++s) {
    if (label[s] != kUnreachable) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId w : g.neighbors(u)) {
        if (label[w] == kUnreachable) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::vector<std::vector<NodeId>> ConnectedComponents(const Graph& g) {
  auto label = ComponentLabels(g);
  std::vector<std::vector<NodeId>> out;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    if (label[v] >= out.size()) out.resize(label[v] + 1);
    out[label[v]].push_back(v);
  }
  return out;
}

std::vector<std::size_t> HopDistances(const Graph& g, NodeId source) {
  std::vector<std::size_t> dist(g.num_nodes(), kUnreachable);
  std::deque<NodeId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    NodeId u = queue.front();
    queue.pop_front();
    for (NodeId w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Graph InducedSubgraph(const Graph& g, std::span<const NodeId> nodes) {
  std::vector<NodeId> index(g.num_nodes(), static_cast<NodeId>(-1));
  std::vector<NodeKind> kinds;
  kinds.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (index[nodes[i]] != static_cast<NodeId>(-1)) {
      throw std::invalid_argument("duplicate node in induced subgraph");
    }
    index[nodes[i]] = static_cast<NodeId>(i);
    kinds.push_back(g.kind(nodes[i]));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] != static_cast<NodeId>(-1) &&
        index[e.v] != static_cast<NodeId>(-1)) {
      edges.emplace_back(index[e.u], index[e.v]);
    }
  }
  return Graph(std::move(kinds), edges);
}

}  // namespace graphveil
