#include "graphveil/graph.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace graphveil {

std::string_view KindName(NodeKind kind) {
  return kind == NodeKind::kReal ? "real" : "fake";
}

Graph::Graph(std::size_t num_nodes, std::span<const Edge> edges)
    : kinds_(num_nodes, NodeKind::kReal) {
  Build(edges);
}

Graph::Graph(std::vector<NodeKind> kinds, std::span<const Edge> edges,
             std::vector<std::uint64_t> labels)
    : kinds_(std::move(kinds)), labels_(std::move(labels)) {
  if (!labels_.empty()) {
    if (labels_.size() != kinds_.size()) {
      throw std::invalid_argument("label table size does not match nodes");
    }
    for (std::size_t i = 1; i < labels_.size(); ++i) {
      if (labels_[i - 1] >= labels_[i]) {
        throw std::invalid_argument("labels must be strictly increasing");
      }
    }
    // An identity table carries no information.
    bool identity = true;
    for (std::size_t i = 0; i < labels_.size() && identity; ++i) {
      identity = labels_[i] == i;
    }
    if (identity) labels_.clear();
  }
  Build(edges);
}

void Graph::Build(std::span<const Edge> edges) {
  const std::size_t n = kinds_.size();
  edges_.assign(edges.begin(), edges.end());
  for (const Edge& e : edges_) {
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop on node " + std::to_string(e.u));
    }
    if (e.v >= n) {
      throw std::invalid_argument("edge endpoint " + std::to_string(e.v) +
                                  " is not a declared node");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.assign(offsets_[n], 0);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[cursor[e.u]++] = e.v;
    adjacency_[cursor[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(adjacency_.begin() + offsets_[v],
              adjacency_.begin() + offsets_[v + 1]);
  }
}

std::size_t Graph::CountKind(NodeKind kind) const {
  return static_cast<std::size_t>(std::count(kinds_.begin(), kinds_.end(), kind));
}

std::optional<NodeId> Graph::FindLabel(std::uint64_t label) const {
  if (labels_.empty()) {
    if (label < kinds_.size()) return static_cast<NodeId>(label);
    return std::nullopt;
  }
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<NodeId>(it - labels_.begin());
}

bool Graph::HasEdge(NodeId u, NodeId v) const {
  if (u >= num_nodes() || v >= num_nodes()) return false;
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Graph Graph::WithEdge(Edge e) const {
  std::vector<Edge> edges = edges_;
  edges.push_back(e);
  return Graph(kinds_, edges, labels_);
}

Graph Graph::WithKinds(std::vector<NodeKind> kinds) const {
  if (kinds.size() != kinds_.size()) {
    throw std::invalid_argument("kind vector size does not match nodes");
  }
  return Graph(std::move(kinds), edges_, labels_);
}

DegreeSequence DegreesOf(const Graph& g) {
  DegreeSequence d(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) d[v] = g.degree(v);
  return d;
}

Mapping::Mapping(std::size_t domain_size, std::size_t codomain_size)
    : forward_(domain_size), backward_(codomain_size) {}

void Mapping::Set(NodeId from, NodeId to) {
  if (from >= forward_.size() || to >= backward_.size()) {
    throw std::invalid_argument("mapping pair out of range");
  }
  if (forward_[from] == to) return;
  if (forward_[from].has_value()) {
    throw std::invalid_argument("node " + std::to_string(from) +
                                " already mapped");
  }
  if (backward_[to].has_value()) {
    throw std::invalid_argument("mapping would not be injective at " +
                                std::to_string(to));
  }
  forward_[from] = to;
  backward_[to] = from;
  ++size_;
}

std::optional<NodeId> Mapping::Get(NodeId from) const {
  if (from >= forward_.size()) return std::nullopt;
  return forward_[from];
}

std::optional<NodeId> Mapping::Preimage(NodeId to) const {
  if (to >= backward_.size()) return std::nullopt;
  return backward_[to];
}

std::vector<std::pair<NodeId, NodeId>> Mapping::pairs() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(size_);
  for (NodeId v = 0; v < forward_.size(); ++v) {
    if (forward_[v]) out.emplace_back(v, *forward_[v]);
  }
  return out;
}

std::vector<NodeId> Mapping::domain() const {
  std::vector<NodeId> out;
  out.reserve(size_);
  for (NodeId v = 0; v < forward_.size(); ++v) {
    if (forward_[v]) out.push_back(v);
  }
  return out;
}

}  // namespace graphveil
