#ifndef GRAPHVEIL_ROUTING_H_
#define GRAPHVEIL_ROUTING_H_

#include <optional>
#include <string>
#include <utility>

#include "graphveil/graph.h"
#include "graphveil/mechanisms.h"

namespace graphveil {

// Export policy for fake networks: a fake node never announces a route through
// real networks, so a path between two real nodes is a valid route only if it
// uses real-real edges alone.
//
// Returns the subgraph of the published graph induced by its real nodes.
// Node i of the result is the i-th real published node; labels() holds the
// published ids.
Graph ValidRouteGraph(const AnonymizedGraph& ag);

struct RoutingCheck {
  std::string check;
  bool passed = true;
  // Original node pair on which the property first fails.
  std::optional<std::pair<NodeId, NodeId>> witness;
};

// For every pair of original nodes, connectivity in the original equals
// valid-route connectivity between their images.
RoutingCheck CheckReachabilityPreserved(const AnonymizedGraph& ag);

// Hop-count shortest-path distances between images over valid routes equal
// the original distances.
RoutingCheck CheckShortestPathsPreserved(const AnonymizedGraph& ag);

}  // namespace graphveil

#endif  // GRAPHVEIL_ROUTING_H_
