#ifndef GRAPHVEIL_SYMMETRY_H_
#define GRAPHVEIL_SYMMETRY_H_

#include <cstddef>
#include <span>
#include <vector>

#include "graphveil/graph.h"

namespace graphveil {

// Exact isomorphism and automorphism search: color refinement to an equitable
// partition, then individualization and backtracking. Exponential in the
// worst case, so graphs are bounded.
struct SearchLimits {
  // Largest graph the search accepts. Capped at kMaxSearchNodes.
  std::size_t max_nodes = 24;
};

inline constexpr std::size_t kMaxSearchNodes = 64;

struct IsomorphismResult {
  bool isomorphic = false;
  // witness[v] is the node of h that v of g maps to. Empty when not
  // isomorphic.
  std::vector<NodeId> witness;
};

// Node kinds are ignored; only adjacency matters. A returned witness has been
// checked edge by edge.
IsomorphismResult FindIsomorphism(const Graph& g, const Graph& h,
                                  const SearchLimits& limits = {});

// True iff `witness` is a bijection V(g)->V(h) with {u,v} in E(g) exactly
// when {witness[u], witness[v]} is in E(h).
bool IsIsomorphismWitness(const Graph& g, const Graph& h,
                          std::span<const NodeId> witness);

// Nodes w such that some automorphism of g maps v to w while fixing every
// node in `fixed` pointwise. When `colors` is non-empty (one entry per node)
// only color-preserving automorphisms count. Sorted; always contains v.
std::vector<NodeId> AutomorphismOrbit(const Graph& g,
                                      std::span<const NodeId> fixed, NodeId v,
                                      const SearchLimits& limits = {},
                                      std::span<const int> colors = {});

// orbit[v] = smallest node in v's orbit under the same group as above.
std::vector<NodeId> OrbitPartition(const Graph& g,
                                   std::span<const NodeId> fixed,
                                   const SearchLimits& limits = {},
                                   std::span<const int> colors = {});

// Size of the orbit of each node, from an OrbitPartition result.
std::vector<std::size_t> OrbitSizes(std::span<const NodeId> orbit);

// True iff the connected components can be dealt into k groups with
// pairwise isomorphic unions, i.e. every isomorphism class of components
// occurs a multiple of k times. The size limit applies per component.
bool IsKIsomorphic(const Graph& g, std::size_t k,
                   const SearchLimits& limits = {});

// True iff every node's automorphism orbit has at least k members.
bool IsKAutomorphic(const Graph& g, std::size_t k,
                    const SearchLimits& limits = {});

}  // namespace graphveil

#endif  // GRAPHVEIL_SYMMETRY_H_
