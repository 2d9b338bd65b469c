#include "graphveil/symmetry.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "graphveil/errors.h"
#include "graphveil/traversal.h"

namespace graphveil {
namespace {

using Row = std::uint64_t;

struct DenseGraph {
  std::size_t n = 0;
  std::vector<Row> adj;

  explicit DenseGraph(const Graph& g) : n(g.num_nodes()), adj(n, 0) {
    for (const Edge& e : g.edges()) {
      adj[e.u] |= Row{1} << e.v;
      adj[e.v] |= Row{1} << e.u;
    }
  }
  bool HasEdge(std::size_t u, std::size_t v) const { return (adj[u] >> v) & 1; }
};

void CheckSize(std::size_t n, const SearchLimits& limits) {
  const std::size_t bound = std::min(limits.max_nodes, kMaxSearchNodes);
  if (n > bound) {
    throw SizeLimitExceeded("graph with " + std::to_string(n) +
                            " nodes exceeds the exact search bound of " +
                            std::to_string(bound));
  }
}

using Coloring = std::vector<int>;

// Searches for an adjacency-preserving bijection A->B that maps color c to
// color c. Colors are compared across the two graphs, so refinement names new
// colors from a dictionary shared by both sides.
class PairSearch {
 public:
  PairSearch(const DenseGraph& a, const DenseGraph& b) : a_(a), b_(b) {}

  bool Run(Coloring ca, Coloring cb, std::vector<NodeId>* witness) {
    if (a_.n != b_.n) return false;
    witness_ = witness;
    int num_colors = 0;
    if (!Normalize(ca, cb, num_colors)) return false;
    return Search(std::move(ca), std::move(cb), num_colors);
  }

  // Refines a single coloring of A to its coarsest equitable refinement.
  static Coloring Equitable(const DenseGraph& g, Coloring c) {
    PairSearch self(g, g);
    Coloring copy = c;
    int num_colors = 0;
    self.Normalize(c, copy, num_colors);
    self.Refine(c, copy, num_colors);
    return c;
  }

 private:
  bool Normalize(Coloring& ca, Coloring& cb, int& num_colors) const {
    std::vector<int> values(ca.begin(), ca.end());
    values.insert(values.end(), cb.begin(), cb.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    const auto index = [&](int c) {
      return static_cast<int>(std::lower_bound(values.begin(), values.end(), c) -
                              values.begin());
    };
    for (int& c : ca) c = index(c);
    for (int& c : cb) c = index(c);
    num_colors = static_cast<int>(values.size());
    return SameHistogram(ca, cb, num_colors);
  }

  static bool SameHistogram(const Coloring& ca, const Coloring& cb,
                            int num_colors) {
    std::vector<int> count(static_cast<std::size_t>(num_colors), 0);
    for (int c : ca) ++count[c];
    for (int c : cb) --count[c];
    return std::all_of(count.begin(), count.end(), [](int x) { return x == 0; });
  }

  static std::vector<int> Signature(const DenseGraph& g, const Coloring& c,
                                    std::size_t v, int num_colors) {
    std::vector<int> sig(static_cast<std::size_t>(num_colors) + 1, 0);
    sig[0] = c[v];
    for (Row row = g.adj[v]; row != 0; row &= row - 1) {
      ++sig[1 + c[std::countr_zero(row)]];
    }
    return sig;
  }

  bool Refine(Coloring& ca, Coloring& cb, int& num_colors) const {
    const std::size_t n = a_.n;
    while (true) {
      std::vector<std::vector<int>> sig_a(n), sig_b(n);
      std::vector<std::vector<int>> all;
      all.reserve(2 * n);
      for (std::size_t v = 0; v < n; ++v) {
        sig_a[v] = Signature(a_, ca, v, num_colors);
        sig_b[v] = Signature(b_, cb, v, num_colors);
        all.push_back(sig_a[v]);
        all.push_back(sig_b[v]);
      }
      std::sort(all.begin(), all.end());
      all.erase(std::unique(all.begin(), all.end()), all.end());
      const auto index = [&](const std::vector<int>& s) {
        return static_cast<int>(std::lower_bound(all.begin(), all.end(), s) -
                                all.begin());
      };
      const int next = static_cast<int>(all.size());
      for (std::size_t v = 0; v < n; ++v) {
        ca[v] = index(sig_a[v]);
        cb[v] = index(sig_b[v]);
      }
      if (!SameHistogram(ca, cb, next)) return false;
      const bool stable = next == num_colors;
      num_colors = next;
      if (stable) return true;
    }
  }

  bool Search(Coloring ca, Coloring cb, int num_colors) {
    if (!Refine(ca, cb, num_colors)) return false;
    const std::size_t n = a_.n;
    if (static_cast<std::size_t>(num_colors) == n) return CheckLeaf(ca, cb);

    // Branch on the smallest non-singleton cell.
    std::vector<int> count(static_cast<std::size_t>(num_colors), 0);
    for (int c : ca) ++count[c];
    int cell = -1;
    for (int c = 0; c < num_colors; ++c) {
      if (count[c] > 1 && (cell < 0 || count[c] < count[cell])) cell = c;
    }
    std::size_t x = 0;
    while (ca[x] != cell) ++x;
    for (std::size_t y = 0; y < n; ++y) {
      if (cb[y] != cell) continue;
      Coloring na = ca, nb = cb;
      na[x] = num_colors;
      nb[y] = num_colors;
      if (Search(std::move(na), std::move(nb), num_colors + 1)) return true;
    }
    return false;
  }

  bool CheckLeaf(const Coloring& ca, const Coloring& cb) {
    const std::size_t n = a_.n;
    std::vector<NodeId> by_color(n), map(n);
    for (std::size_t y = 0; y < n; ++y) by_color[cb[y]] = static_cast<NodeId>(y);
    for (std::size_t x = 0; x < n; ++x) map[x] = by_color[ca[x]];
    for (std::size_t u = 0; u < n; ++u) {
      Row image = 0;
      for (Row row = a_.adj[u]; row != 0; row &= row - 1) {
        image |= Row{1} << map[std::countr_zero(row)];
      }
      if (image != b_.adj[map[u]]) return false;
    }
    if (witness_ != nullptr) *witness_ = std::move(map);
    return true;
  }

  const DenseGraph& a_;
  const DenseGraph& b_;
  std::vector<NodeId>* witness_ = nullptr;
};

Coloring BaseColoring(const Graph& g, std::span<const NodeId> fixed,
                      std::span<const int> colors) {
  const std::size_t n = g.num_nodes();
  if (!colors.empty() && colors.size() != n) {
    throw std::invalid_argument("coloring size does not match node count");
  }
  // Encode (color, fixed slot) as one integer; fixed nodes get unique slots.
  std::vector<int> slot(n, 0);
  int next = 1;
  for (NodeId f : fixed) {
    if (f >= n) throw std::invalid_argument("fixed node out of range");
    if (slot[f] == 0) slot[f] = next++;
  }
  int max_color = 0;
  for (int c : colors) max_color = std::max(max_color, c);
  Coloring c(n);
  for (std::size_t v = 0; v < n; ++v) {
    const int base = colors.empty() ? 0 : colors[v];
    c[v] = slot[v] * (max_color + 1) + base;
  }
  return c;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), NodeId{0});
  }
  NodeId Find(NodeId x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  // Keeps the smaller id as root so roots are orbit minima.
  void Union(NodeId a, NodeId b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return;
    if (a < b) {
      parent_[b] = a;
    } else {
      parent_[a] = b;
    }
  }

 private:
  std::vector<NodeId> parent_;
};

// Merges orbits of the group generated by the automorphisms found so far,
// searching only within the refined cells selected by `want_cell`.
std::vector<NodeId> Orbits(const Graph& g, std::span<const NodeId> fixed,
                           const SearchLimits& limits,
                           std::span<const int> colors,
                           const std::vector<bool>* cell_filter_nodes) {
  const std::size_t n = g.num_nodes();
  CheckSize(n, limits);
  DenseGraph dense(g);
  const Coloring base = BaseColoring(g, fixed, colors);
  const Coloring cells = PairSearch::Equitable(dense, base);

  UnionFind uf(n);
  std::set<std::pair<NodeId, NodeId>> distinct;
  std::map<int, std::vector<NodeId>> members;
  for (NodeId v = 0; v < n; ++v) members[cells[v]].push_back(v);

  for (const auto& [cell, nodes] : members) {
    if (nodes.size() < 2) continue;
    if (cell_filter_nodes != nullptr && !(*cell_filter_nodes)[nodes.front()]) {
      continue;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<NodeId> roots;
      for (NodeId v : nodes) roots.push_back(uf.Find(v));
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      for (std::size_t i = 0; i < roots.size() && !changed; ++i) {
        for (std::size_t j = i + 1; j < roots.size() && !changed; ++j) {
          const auto key = std::make_pair(roots[i], roots[j]);
          if (distinct.count(key)) continue;
          Coloring ca = base, cb = base;
          const int fresh = *std::max_element(base.begin(), base.end()) + 1;
          ca[roots[i]] = fresh;
          cb[roots[j]] = fresh;
          std::vector<NodeId> perm;
          PairSearch search(dense, dense);
          if (search.Run(std::move(ca), std::move(cb), &perm)) {
            for (NodeId x = 0; x < n; ++x) uf.Union(x, perm[x]);
            changed = true;
          } else {
            distinct.insert(key);
          }
        }
      }
    }
  }
  std::vector<NodeId> orbit(n);
  for (NodeId v = 0; v < n; ++v) orbit[v] = uf.Find(v);
  return orbit;
}

}  // namespace

IsomorphismResult FindIsomorphism(const Graph& g, const Graph& h,
                                  const SearchLimits& limits) {
  CheckSize(g.num_nodes(), limits);
  CheckSize(h.num_nodes(), limits);
  IsomorphismResult result;
  if (g.num_nodes() != h.num_nodes() || g.num_edges() != h.num_edges()) {
    return result;
  }
  DenseGraph a(g), b(h);
  PairSearch search(a, b);
  std::vector<NodeId> witness;
  if (search.Run(Coloring(g.num_nodes(), 0), Coloring(h.num_nodes(), 0),
                 &witness)) {
    if (!IsIsomorphismWitness(g, h, witness)) {
      throw std::logic_error("isomorphism search produced an invalid witness");
    }
    result.isomorphic = true;
    result.witness = std::move(witness);
  }
  return result;
}

bool IsIsomorphismWitness(const Graph& g, const Graph& h,
                          std::span<const NodeId> witness) {
  const std::size_t n = g.num_nodes();
  if (h.num_nodes() != n || witness.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (NodeId w : witness) {
    if (w >= n || hit[w]) return false;
    hit[w] = true;
  }
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (g.HasEdge(u, v) != h.HasEdge(witness[u], witness[v])) return false;
    }
  }
  return true;
}

std::vector<NodeId> AutomorphismOrbit(const Graph& g,
                                      std::span<const NodeId> fixed, NodeId v,
                                      const SearchLimits& limits,
                                      std::span<const int> colors) {
  if (v >= g.num_nodes()) throw std::invalid_argument("node out of range");
  CheckSize(g.num_nodes(), limits);
  // Only v's refined cell needs searching.
  DenseGraph dense(g);
  const Coloring cells =
      PairSearch::Equitable(dense, BaseColoring(g, fixed, colors));
  std::vector<bool> in_cell(g.num_nodes(), false);
  for (NodeId w = 0; w < g.num_nodes(); ++w) in_cell[w] = cells[w] == cells[v];
  auto orbit = Orbits(g, fixed, limits, colors, &in_cell);
  std::vector<NodeId> out;
  for (NodeId w = 0; w < g.num_nodes(); ++w) {
    if (orbit[w] == orbit[v]) out.push_back(w);
  }
  return out;
}

std::vector<NodeId> OrbitPartition(const Graph& g,
                                   std::span<const NodeId> fixed,
                                   const SearchLimits& limits,
                                   std::span<const int> colors) {
  return Orbits(g, fixed, limits, colors, nullptr);
}

std::vector<std::size_t> OrbitSizes(std::span<const NodeId> orbit) {
  std::vector<std::size_t> count(orbit.size(), 0);
  for (NodeId root : orbit) ++count[root];
  std::vector<std::size_t> size(orbit.size());
  for (std::size_t v = 0; v < orbit.size(); ++v) size[v] = count[orbit[v]];
  return size;
}

bool IsKIsomorphic(const Graph& g, std::size_t k, const SearchLimits& limits) {
  if (k == 0) throw InvalidK("k must be positive");
  if (k == 1) return true;
  std::vector<Graph> parts;
  for (const auto& nodes : ConnectedComponents(g)) {
    parts.push_back(InducedSubgraph(g, nodes));
  }
  // Group components into isomorphism classes.
  std::vector<std::size_t> class_count;
  std::vector<std::size_t> representative;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    bool placed = false;
    for (std::size_t c = 0; c < representative.size() && !placed; ++c) {
      if (FindIsomorphism(parts[representative[c]], parts[i], limits)
              .isomorphic) {
        ++class_count[c];
        placed = true;
      }
    }
    if (!placed) {
      CheckSize(parts[i].num_nodes(), limits);
      representative.push_back(i);
      class_count.push_back(1);
    }
  }
  return std::all_of(class_count.begin(), class_count.end(),
                     [k](std::size_t c) { return c % k == 0; });
}

bool IsKAutomorphic(const Graph& g, std::size_t k, const SearchLimits& limits) {
  if (k == 0) throw InvalidK("k must be positive");
  if (k == 1) return true;
  auto sizes = OrbitSizes(OrbitPartition(g, {}, limits));
  return std::all_of(sizes.begin(), sizes.end(),
                     [k](std::size_t s) { return s >= k; });
}

}  // namespace graphveil
