#ifndef GRAPHVEIL_METRICS_H_
#define GRAPHVEIL_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "graphveil/graph.h"
#include "graphveil/mechanisms.h"
#include "graphveil/random.h"
#include "graphveil/symmetry.h"

namespace graphveil {

// What the adversary may use besides the published adjacency.
//
// kDisclosedLayout: the mechanism is public, including where the copy-based
// mechanisms put each replica. Node i*n + j is known to stand for original
// node j, and for naive copies the nodes of one copy are known to belong
// together. The only secret is which replica sigma picked. Identity and
// degree-equalize outputs are treated as relabeled, so nothing extra is
// disclosed for them.
//
// kStructureOnly: published ids carry no meaning; the candidate set is the
// plain automorphism orbit.
enum class PosteriorModel { kDisclosedLayout, kStructureOnly };

std::string_view PosteriorModelName(PosteriorModel model);
PosteriorModel ParsePosteriorModel(std::string_view name);

struct MetricsOptions {
  SearchLimits limits;
  PosteriorModel model = PosteriorModel::kDisclosedLayout;
  // FullReport enumerates every seed set when the published graph has at
  // most this many nodes.
  std::size_t exact_bound = 12;
  // Beyond exact_bound, sample seed sets instead of failing.
  bool allow_sampling = false;
  std::size_t samples_per_size = 200;
  std::uint64_t rng_seed = kDefaultRngSeed;
};

// Adversary side information: known (original, published) pairs, each of
// which must agree with sigma.
struct SeedSet {
  Mapping pairs;

  // Seeds the given original nodes with their true images.
  static SeedSet FromNodes(const AnonymizedGraph& ag,
                           std::span<const NodeId> nodes);
  std::vector<NodeId> nodes() const { return pairs.domain(); }
  std::size_t size() const { return pairs.size(); }
};

// Throws InconsistentData if a seed disagrees with sigma.
void ValidateSeeds(const AnonymizedGraph& ag, const SeedSet& seeds);

// The graph and vertex coloring whose color-preserving automorphisms are the
// relabelings the adversary cannot rule out. Node p < |V^p| is published node
// p; extra nodes, if any, encode the copy structure.
struct AdversaryView {
  Graph graph;
  std::vector<int> colors;
};

AdversaryView MakeAdversaryView(const AnonymizedGraph& ag, PosteriorModel model);

// Published nodes the true image of v could be, given the seeds. Sorted and
// always contains sigma(v). Requires v outside the seed set.
std::vector<NodeId> CandidateSet(const AnonymizedGraph& ag,
                                 const SeedSet& seeds, NodeId v,
                                 const MetricsOptions& options = {});

// min over |S| = lambda and v not in S of log2 |CandidateSet(S, v)|, by
// exhaustive enumeration of seed sets. Requires lambda <= n - 1.
double PrivacyFunctionPoint(const AnonymizedGraph& ag, std::size_t lambda,
                            const MetricsOptions& options = {});

// Smallest seed-set size that pins sigma(v) to a single candidate, i.e.
// min{tau : h_v(tau) = 0}. n - 1 if no seed set pins v.
std::size_t NodeTolerance(const AnonymizedGraph& ag, NodeId v,
                          const MetricsOptions& options = {});

std::size_t MechanismTolerance(const AnonymizedGraph& ag,
                               const MetricsOptions& options = {});

struct PrivacyPoint {
  std::size_t lambda = 0;
  double bits = 0;
  // False when sampled seed sets were used; bits is then an upper bound.
  bool exact = true;
};

struct PrivacyReport {
  std::size_t cost = 0;
  std::int64_t edge_overhead = 0;
  PosteriorModel model = PosteriorModel::kDisclosedLayout;
  std::vector<PrivacyPoint> privacy_function;  // lambda = 0..n-1
  std::vector<std::size_t> tolerance_per_node;  // indexed by original node
  std::size_t mechanism_tolerance = 0;
  bool tolerance_exact = true;
};

// Throws SizeLimitExceeded when the published graph is larger than
// options.exact_bound and sampling is off.
PrivacyReport FullReport(const AnonymizedGraph& ag,
                         const MetricsOptions& options = {});

// Calls fn(subset) for every subset of {0..n-1} of the given size that avoids
// `excluded`, in lexicographic order. Stops early when fn returns false.
void ForEachSubset(std::size_t n, std::size_t size,
                   std::span<const NodeId> excluded,
                   const std::function<bool(std::span<const NodeId>)>& fn);

}  // namespace graphveil

#endif  // GRAPHVEIL_METRICS_H_
