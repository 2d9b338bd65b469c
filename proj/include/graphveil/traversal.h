#ifndef GRAPHVEIL_TRAVERSAL_H_
#define GRAPHVEIL_TRAVERSAL_H_

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "graphveil/graph.h"

namespace graphveil {

inline constexpr std::size_t kUnreachable =
    std::numeric_limits<std::size_t>::max();

// component[v] numbers components in order of their smallest node.
std::vector<std::size_t> ComponentLabels(const Graph& g);

std::vector<std::vector<NodeId>> ConnectedComponents(const Graph& g);

// Hop distance from `source` to every node, kUnreachable if disconnected.
std::vector<std::size_t> HopDistances(const Graph& g, NodeId source);

// Subgraph induced by `nodes` (any order, no duplicates). Node i of the
// result is nodes[i]; kinds are carried over, labels are not.
Graph InducedSubgraph(const Graph& g, std::span<const NodeId> nodes);

}  // namespace graphveil

#endif  // GRAPHVEIL_TRAVERSAL_H_
