#ifndef GRAPHVEIL_GRAPH_H_
#define GRAPHVEIL_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace graphveil {

// Dense 0-based node index. External files may use arbitrary non-negative
// labels; those are remapped on load and kept in Graph::labels().
using NodeId = std::uint32_t;

enum class NodeKind : std::uint8_t { kReal, kFake };

std::string_view KindName(NodeKind kind);

// Unordered edge, normalized so that u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  Edge() = default;
  Edge(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph with a real/fake tag on every node. Immutable
// after construction.
class Graph {
 public:
  Graph() = default;

  // `num_nodes` real nodes joined by `edges`. Duplicate edges are collapsed;
  // self-loops and out-of-range endpoints throw std::invalid_argument.
  Graph(std::size_t num_nodes, std::span<const Edge> edges);

  // An empty `labels` means label(v) == v. Otherwise labels must be strictly
  // increasing so that reloading a saved graph reproduces the same dense ids.
  Graph(std::vector<NodeKind> kinds, std::span<const Edge> edges,
        std::vector<std::uint64_t> labels = {});

  std::size_t num_nodes() const { return kinds_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  NodeKind kind(NodeId v) const { return kinds_[v]; }
  const std::vector<NodeKind>& kinds() const { return kinds_; }
  std::size_t CountKind(NodeKind kind) const;

  std::uint64_t label(NodeId v) const {
    return labels_.empty() ? v : labels_[v];
  }
  const std::vector<std::uint64_t>& labels() const { return labels_; }
  // Dense id for an external label, if present.
  std::optional<NodeId> FindLabel(std::uint64_t label) const;

  // Sorted, each edge once with u < v.
  const std::vector<Edge>& edges() const { return edges_; }
  // Sorted ascending.
  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool HasEdge(NodeId u, NodeId v) const;

  // Copy of this graph with one extra edge. Used to build negative controls.
  Graph WithEdge(Edge e) const;
  // Copy with every node kind replaced.
  Graph WithKinds(std::vector<NodeKind> kinds) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.kinds_ == b.kinds_ && a.edges_ == b.edges_ &&
           a.labels_ == b.labels_;
  }

 private:
  void Build(std::span<const Edge> edges);

  std::vector<NodeKind> kinds_;
  std::vector<std::uint64_t> labels_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
};

// degrees[v] = number of edges incident to v.
using DegreeSequence = std::vector<std::size_t>;

DegreeSequence DegreesOf(const Graph& g);

// Injective partial function from the nodes of one graph to the nodes of
// another.
class Mapping {
 public:
  Mapping() = default;
  // `domain_size` bounds the source ids, `codomain_size` the targets.
  Mapping(std::size_t domain_size, std::size_t codomain_size);

  // Throws std::invalid_argument if the pair breaks injectivity or either id
  // is out of range. Re-setting an existing source to the same target is a
  // no-op.
  void Set(NodeId from, NodeId to);

  std::optional<NodeId> Get(NodeId from) const;
  std::optional<NodeId> Preimage(NodeId to) const;
  bool Contains(NodeId from) const { return Get(from).has_value(); }

  std::size_t size() const { return size_; }
  bool IsTotal() const { return size_ == forward_.size(); }
  std::size_t domain_size() const { return forward_.size(); }
  std::size_t codomain_size() const { return backward_.size(); }

  // (from, to) pairs in increasing `from` order.
  std::vector<std::pair<NodeId, NodeId>> pairs() const;
  // Sources with an image, ascending.
  std::vector<NodeId> domain() const;

  friend bool operator==(const Mapping&, const Mapping&) = default;

 private:
  std::vector<std::optional<NodeId>> forward_;
  std::vector<std::optional<NodeId>> backward_;
  std::size_t size_ = 0;
};

}  // namespace graphveil

#endif  // GRAPHVEIL_GRAPH_H_
