#ifndef GRAPHVEIL_GENERATORS_H_
#define GRAPHVEIL_GENERATORS_H_

#include <cstddef>

#include "graphveil/graph.h"
#include "graphveil/random.h"
#include "graphveil/rational.h"

namespace graphveil {

Graph CompleteGraph(std::size_t n);
Graph PathGraph(std::size_t n);
Graph CycleGraph(std::size_t n);
// n nodes; leaves 0..n-2, center n-1.
Graph StarGraph(std::size_t n);
// Triangle 0-1-2 with pendant 3 attached to 2.
Graph PawGraph();
Graph EdgelessGraph(std::size_t n);

// G(n, p): each pair joined independently with probability p.
Graph RandomGraph(std::size_t n, const Rational& p, Rng& rng);

// Nodes of b follow those of a.
Graph DisjointUnion(const Graph& a, const Graph& b);

}  // namespace graphveil

#endif  // GRAPHVEIL_GENERATORS_H_
