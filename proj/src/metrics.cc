#include "graphveil/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "graphveil/errors.h"

namespace graphveil {
namespace {

// Orbit size of every original node's image with the images of `seeds`
// fixed.
class OrbitOracle {
 public:
  OrbitOracle(const AnonymizedGraph& ag, const MetricsOptions& options)
      : ag_(ag), view_(MakeAdversaryView(ag, options.model)) {
    const std::size_t published = ag.published.num_nodes();
    const std::size_t bound = std::min(options.limits.max_nodes, kMaxSearchNodes);
    if (published > bound) {
      throw SizeLimitExceeded("published graph with " +
                              std::to_string(published) +
                              " nodes exceeds the exact search bound of " +
                              std::to_string(bound));
    }
    // Structure gadgets ride on top of the published bound.
    limits_.max_nodes = std::min(view_.graph.num_nodes(), kMaxSearchNodes);
    if (view_.graph.num_nodes() > kMaxSearchNodes) {
      throw SizeLimitExceeded("adversary view exceeds " +
                              std::to_string(kMaxSearchNodes) + " nodes");
    }
  }

  // sizes[v] for original v.
  std::vector<std::size_t> ImageOrbitSizes(std::span<const NodeId> seeds) const {
    std::vector<NodeId> fixed;
    fixed.reserve(seeds.size());
    for (NodeId s : seeds) fixed.push_back(*ag_.sigma.Get(s));
    auto orbit = OrbitPartition(view_.graph, fixed, limits_, view_.colors);
    auto sizes = OrbitSizes(orbit);
    std::vector<std::size_t> out(ag_.original.num_nodes());
    for (NodeId v = 0; v < out.size(); ++v) out[v] = sizes[*ag_.sigma.Get(v)];
    return out;
  }

  std::vector<NodeId> Candidates(std::span<const NodeId> fixed_published,
                                 NodeId target) const {
    auto orbit = AutomorphismOrbit(view_.graph, fixed_published, target,
                                   limits_, view_.colors);
    const auto published = static_cast<NodeId>(ag_.published.num_nodes());
    std::vector<NodeId> out;
    for (NodeId w : orbit) {
      if (w < published) out.push_back(w);
    }
    return out;
  }

 private:
  const AnonymizedGraph& ag_;
  AdversaryView view_;
  SearchLimits limits_;
};

void RequireTotalSigma(const AnonymizedGraph& ag) {
  if (ag.sigma.domain_size() != ag.original.num_nodes() ||
      ag.sigma.codomain_size() != ag.published.num_nodes() ||
      !ag.sigma.IsTotal()) {
    throw InconsistentData("sigma must be a total map onto the published graph");
  }
}

double Bits(std::size_t candidates) {
  return std::log2(static_cast<double>(candidates));
}

std::uint64_t Binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    if (r > std::numeric_limits<std::uint64_t>::max() / num) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    r = r * num / i;
  }
  return r;
}

}  // namespace

std::string_view PosteriorModelName(PosteriorModel model) {
  return model == PosteriorModel::kDisclosedLayout ? "disclosed-layout"
                                                   : "structure-only";
}

PosteriorModel ParsePosteriorModel(std::string_view name) {
  if (name == "disclosed-layout") return PosteriorModel::kDisclosedLayout;
  if (name == "structure-only") return PosteriorModel::kStructureOnly;
  throw std::invalid_argument("unknown posterior model: " + std::string(name));
}

SeedSet SeedSet::FromNodes(const AnonymizedGraph& ag,
                           std::span<const NodeId> nodes) {
  SeedSet seeds{Mapping(ag.original.num_nodes(), ag.published.num_nodes())};
  for (NodeId v : nodes) {
    auto image = ag.sigma.Get(v);
    if (!image) throw InconsistentData("seed node has no image");
    seeds.pairs.Set(v, *image);
  }
  return seeds;
}

void ValidateSeeds(const AnonymizedGraph& ag, const SeedSet& seeds) {
  for (auto [from, to] : seeds.pairs.pairs()) {
    if (ag.sigma.Get(from) != to) {
      throw InconsistentData("seed (" + std::to_string(from) + ", " +
                             std::to_string(to) + ") disagrees with sigma");
    }
  }
}

AdversaryView MakeAdversaryView(const AnonymizedGraph& ag,
                                PosteriorModel model) {
  const Graph& published = ag.published;
  const std::size_t np = published.num_nodes();
  const std::size_t n = ag.original.num_nodes();
  if (model == PosteriorModel::kStructureOnly) return {published, {}};

  if (std::holds_alternative<KFoldReplication>(ag.mechanism)) {
    // Columns are public; replica indices are independent per column.
    std::vector<int> colors(np);
    for (NodeId p = 0; p < np; ++p) colors[p] = static_cast<int>(p % n);
    return {published, std::move(colors)};
  }
  if (auto* naive = std::get_if<NaiveKCopy>(&ag.mechanism)) {
    // Columns are public and one copy index is shared by all of sigma. A hub
    // per copy makes automorphisms move whole copies.
    const std::size_t k = naive->k;
    std::vector<NodeKind> kinds = published.kinds();
    kinds.insert(kinds.end(), k, NodeKind::kFake);
    std::vector<Edge> edges = published.edges();
    for (NodeId p = 0; p < np; ++p) {
      edges.emplace_back(p, static_cast<NodeId>(np + p / n));
    }
    std::vector<int> colors(np + k, static_cast<int>(n));
    for (NodeId p = 0; p < np; ++p) colors[p] = static_cast<int>(p % n);
    return {Graph(std::move(kinds), edges), std::move(colors)};
  }
  return {published, {}};
}

std::vector<NodeId> CandidateSet(const AnonymizedGraph& ag,
                                 const SeedSet& seeds, NodeId v,
                                 const MetricsOptions& options) {
  RequireTotalSigma(ag);
  ValidateSeeds(ag, seeds);
  if (v >= ag.original.num_nodes()) throw std::invalid_argument("node out of range");
  if (seeds.pairs.Contains(v)) {
    throw std::invalid_argument("target node is itself a seed");
  }
  std::vector<NodeId> fixed;
  for (auto [from, to] : seeds.pairs.pairs()) fixed.push_back(to);
  OrbitOracle oracle(ag, options);
  return oracle.Candidates(fixed, *ag.sigma.Get(v));
}

void ForEachSubset(std::size_t n, std::size_t size,
                   std::span<const NodeId> excluded,
                   const std::function<bool(std::span<const NodeId>)>& fn) {
  std::vector<NodeId> pool;
  for (NodeId v = 0; v < n; ++v) {
    if (std::find(excluded.begin(), excluded.end(), v) == excluded.end()) {
      pool.push_back(v);
    }
  }
  if (size > pool.size()) return;
  std::vector<std::size_t> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = i;
  std::vector<NodeId> subset(size);
  while (true) {
    for (std::size_t i = 0; i < size; ++i) subset[i] = pool[idx[i]];
    if (!fn(subset)) return;
    // Advance to the next combination.
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == pool.size() - size + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

double PrivacyFunctionPoint(const AnonymizedGraph& ag, std::size_t lambda,
                            const MetricsOptions& options) {
  RequireTotalSigma(ag);
  const std::size_t n = ag.original.num_nodes();
  if (n == 0 || lambda > n - 1) {
    throw std::invalid_argument("lambda must lie in [0, n-1]");
  }
  OrbitOracle oracle(ag, options);
  double best = std::numeric_limits<double>::infinity();
  ForEachSubset(n, lambda, {}, [&](std::span<const NodeId> seeds) {
    auto sizes = oracle.ImageOrbitSizes(seeds);
    for (NodeId v = 0; v < n; ++v) {
      if (std::find(seeds.begin(), seeds.end(), v) != seeds.end()) continue;
      best = std::min(best, Bits(sizes[v]));
    }
    return best > 0;
  });
  return best;
}

std::size_t NodeTolerance(const AnonymizedGraph& ag, NodeId v,
                          const MetricsOptions& options) {
  RequireTotalSigma(ag);
  const std::size_t n = ag.original.num_nodes();
  if (v >= n) throw std::invalid_argument("node out of range");
  OrbitOracle oracle(ag, options);
  const NodeId excluded[] = {v};
  for (std::size_t size = 0; size + 1 < n; ++size) {
    bool pinned = false;
    ForEachSubset(n, size, excluded, [&](std::span<const NodeId> seeds) {
      pinned = oracle.ImageOrbitSizes(seeds)[v] == 1;
      return !pinned;
    });
    if (pinned) return size;
  }
  return n == 0 ? 0 : n - 1;
}

std::size_t MechanismTolerance(const AnonymizedGraph& ag,
                               const MetricsOptions& options) {
  const std::size_t n = ag.original.num_nodes();
  std::size_t best = n == 0 ? 0 : n - 1;
  for (NodeId v = 0; v < n; ++v) {
    best = std::min(best, NodeTolerance(ag, v, options));
  }
  return best;
}

PrivacyReport FullReport(const AnonymizedGraph& ag,
                         const MetricsOptions& options) {
  RequireTotalSigma(ag);
  const std::size_t n = ag.original.num_nodes();
  const std::size_t published = ag.published.num_nodes();
  const bool exhaustive = published <= options.exact_bound;
  if (!exhaustive && !options.allow_sampling) {
    throw SizeLimitExceeded(
        "published graph has " + std::to_string(published) +
        " nodes, above the exact report bound of " +
        std::to_string(options.exact_bound) +
        "; raise the bound or enable seed-set sampling");
  }
  OrbitOracle oracle(ag, options);

  PrivacyReport report;
  report.cost = PrivacyCost(ag);
  report.edge_overhead = EdgeOverhead(ag);
  report.model = options.model;
  report.tolerance_per_node.assign(n, n == 0 ? 0 : n - 1);

  const auto visit = [&](std::span<const NodeId> seeds, PrivacyPoint& point) {
    auto sizes = oracle.ImageOrbitSizes(seeds);
    for (NodeId v = 0; v < n; ++v) {
      if (std::find(seeds.begin(), seeds.end(), v) != seeds.end()) continue;
      point.bits = std::min(point.bits, Bits(sizes[v]));
      if (sizes[v] == 1) {
        report.tolerance_per_node[v] =
            std::min(report.tolerance_per_node[v], seeds.size());
      }
    }
  };

  for (std::size_t lambda = 0; lambda < n; ++lambda) {
    PrivacyPoint point{lambda, std::numeric_limits<double>::infinity(), true};
    if (exhaustive || Binomial(n, lambda) <= options.samples_per_size) {
      ForEachSubset(n, lambda, {}, [&](std::span<const NodeId> seeds) {
        visit(seeds, point);
        return true;
      });
    } else {
      point.exact = false;
      Rng rng(DeriveSeed(options.rng_seed, {lambda}));
      for (std::size_t s = 0; s < options.samples_per_size; ++s) {
        auto subset = rng.Subset(static_cast<std::uint32_t>(n),
                                 static_cast<std::uint32_t>(lambda));
        std::vector<NodeId> seeds(subset.begin(), subset.end());
        visit(seeds, point);
      }
      report.tolerance_exact = false;
    }
    report.privacy_function.push_back(point);
  }
  report.mechanism_tolerance =
      report.tolerance_per_node.empty()
          ? 0
          : *std::min_element(report.tolerance_per_node.begin(),
                              report.tolerance_per_node.end());
  return report;
}

}  // namespace graphveil
