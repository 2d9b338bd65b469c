#ifndef GRAPHVEIL_MECHANISMS_H_
#define GRAPHVEIL_MECHANISMS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "graphveil/graph.h"
#include "graphveil/rational.h"

namespace graphveil {

// Parameters of the degree-equalize mechanism: m fake nodes, each real node v
// attached to every fake node with probability p[v], fake pairs joined with
// probability q.
struct MechanismParams {
  Rational a;  // target expected degree
  std::size_t m = 0;
  std::vector<Rational> p;
  Rational q{0};
  // Fake-fake top-up that pulls fake expectations back to a after m was
  // rounded up.
  bool correction = false;

  friend bool operator==(const MechanismParams&,
                         const MechanismParams&) = default;
};

// Publishes the graph unchanged. Baseline for attacks and routing checks.
struct IdentityMechanism {
  friend bool operator==(const IdentityMechanism&,
                         const IdentityMechanism&) = default;
};
struct NaiveKCopy {
  std::size_t k = 2;
  friend bool operator==(const NaiveKCopy&, const NaiveKCopy&) = default;
};
struct KFoldReplication {
  std::size_t k = 2;
  friend bool operator==(const KFoldReplication&,
                         const KFoldReplication&) = default;
};
struct DegreeEqualize {
  MechanismParams params;
  friend bool operator==(const DegreeEqualize&,
                         const DegreeEqualize&) = default;
};

using Mechanism =
    std::variant<IdentityMechanism, NaiveKCopy, KFoldReplication, DegreeEqualize>;

// "identity", "naive-k-copy", "k-fold-replication", "degree-equalize".
std::string_view MechanismName(const Mechanism& mechanism);

// Replica count for the copy-based mechanisms, 1 otherwise.
std::size_t ReplicaCount(const Mechanism& mechanism);

// Output of a mechanism together with its ground truth.
struct AnonymizedGraph {
  Graph original;
  // Nodes tagged real exactly on the image of sigma.
  Graph published;
  // Total injection V(original) -> V(published).
  Mapping sigma;
  Mechanism mechanism;
  std::optional<std::uint64_t> rng_seed;
};

// Copy-based mechanisms place replica i of original node j at i*n + j
// (0-based i). The layout is part of the public mechanism description.
inline NodeId ReplicaNode(std::size_t replica, NodeId j, std::size_t n) {
  return static_cast<NodeId>(replica * n + j);
}

AnonymizedGraph PublishIdentity(const Graph& g);

// k disjoint copies. sigma maps into one copy: copy 0 when unseeded,
// otherwise a uniformly random copy shared by all nodes. Throws InvalidK for
// k < 2.
AnonymizedGraph NaiveCopies(const Graph& g, std::size_t k,
                            std::optional<std::uint64_t> rng_seed = {});

// k replicas of every node; (i,j) ~ (u,v) iff {j,v} is an original edge.
// sigma(j) = (r_j, j) with r_j = 0 when unseeded, otherwise drawn uniformly
// per node. Throws InvalidK for k < 2.
AnonymizedGraph KFoldReplicate(const Graph& g, std::size_t k,
                               std::optional<std::uint64_t> rng_seed = {});

// m = ceil(n - 2|E|/a), p[v] = (a - d_v)/m. Throws DegenerateTarget when
// n*a <= 2|E| and InfeasibleTarget when some p[v] leaves [0, 1]. a equal to
// the maximum degree is accepted and gives p = 0 there.
MechanismParams DegreeEqualizeParams(const Graph& g, const Rational& a,
                                     bool correction = false);

// g plus params.m fake nodes (ids n..n+m-1) with independent random edges.
// Same seed, same graph.
AnonymizedGraph SampleDegreeEqualize(const Graph& g,
                                     const MechanismParams& params,
                                     std::uint64_t rng_seed);

// Exact expected degree of every published node: d_v + m p[v] for real v,
// sum(p) + (m-1) q for each fake node.
std::vector<Rational> ExpectedDegrees(const Graph& g,
                                      const MechanismParams& params);

// Exact variance of each published degree (sum of independent Bernoulli
// terms).
std::vector<Rational> DegreeVariances(const Graph& g,
                                      const MechanismParams& params);

// |V^p| - |domain(sigma)|.
std::size_t PrivacyCost(const AnonymizedGraph& ag);
// |E^p| - |E|, signed so a corrupted input cannot wrap.
std::int64_t EdgeOverhead(const AnonymizedGraph& ag);

// Human-readable violations of the AnonymizedGraph invariants: sigma total
// and injective, real tags exactly on its image, every original edge present
// between images, and no real-real edge beyond them. Empty when valid.
std::vector<std::string> InvariantViolations(const AnonymizedGraph& ag);

}  // namespace graphveil

#endif  // GRAPHVEIL_MECHANISMS_H_
