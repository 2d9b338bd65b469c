#include "graphveil/mechanisms.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "graphveil/errors.h"
#include "graphveil/random.h"

namespace graphveil {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void CheckK(std::size_t k) {
  if (k < 2) throw InvalidK("k must be at least 2, got " + std::to_string(k));
}

void CheckNonEmpty(const Graph& g) {
  if (g.num_nodes() == 0) throw std::invalid_argument("graph has no nodes");
}

// Tags sigma's image real and everything else fake.
std::vector<NodeKind> KindsFor(const Mapping& sigma, std::size_t published) {
  std::vector<NodeKind> kinds(published, NodeKind::kFake);
  for (auto [from, to] : sigma.pairs()) kinds[to] = NodeKind::kReal;
  return kinds;
}

}  // namespace

std::string_view MechanismName(const Mechanism& mechanism) {
  return std::visit(
      Overloaded{
          [](const IdentityMechanism&) { return std::string_view("identity"); },
          [](const NaiveKCopy&) { return std::string_view("naive-k-copy"); },
          [](const KFoldReplication&) {
            return std::string_view("k-fold-replication");
          },
          [](const DegreeEqualize&) {
            return std::string_view("degree-equalize");
          },
      },
      mechanism);
}

std::size_t ReplicaCount(const Mechanism& mechanism) {
  if (auto* naive = std::get_if<NaiveKCopy>(&mechanism)) return naive->k;
  if (auto* rep = std::get_if<KFoldReplication>(&mechanism)) return rep->k;
  return 1;
}

AnonymizedGraph PublishIdentity(const Graph& g) {
  Mapping sigma(g.num_nodes(), g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v) sigma.Set(v, v);
  Graph published(std::vector<NodeKind>(g.num_nodes(), NodeKind::kReal),
                  g.edges());
  return AnonymizedGraph{g, std::move(published), std::move(sigma),
                         IdentityMechanism{}, std::nullopt};
}

AnonymizedGraph NaiveCopies(const Graph& g, std::size_t k,
                            std::optional<std::uint64_t> rng_seed) {
  CheckK(k);
  CheckNonEmpty(g);
  const std::size_t n = g.num_nodes();
  std::vector<Edge> edges;
  edges.reserve(k * g.num_edges());
  for (std::size_t i = 0; i < k; ++i) {
    for (const Edge& e : g.edges()) {
      edges.emplace_back(ReplicaNode(i, e.u, n), ReplicaNode(i, e.v, n));
    }
  }
  std::size_t copy = 0;
  if (rng_seed) {
    Rng rng(*rng_seed);
    copy = rng.Below(k);
  }
  Mapping sigma(n, k * n);
  for (NodeId j = 0; j < n; ++j) sigma.Set(j, ReplicaNode(copy, j, n));
  Graph published(KindsFor(sigma, k * n), edges);
  return AnonymizedGraph{g, std::move(published), std::move(sigma),
                         NaiveKCopy{k}, rng_seed};
}

AnonymizedGraph KFoldReplicate(const Graph& g, std::size_t k,
                               std::optional<std::uint64_t> rng_seed) {
  CheckK(k);
  CheckNonEmpty(g);
  const std::size_t n = g.num_nodes();
  std::vector<Edge> edges;
  edges.reserve(k * k * g.num_edges());
  for (const Edge& e : g.edges()) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t r = 0; r < k; ++r) {
        edges.emplace_back(ReplicaNode(i, e.u, n), ReplicaNode(r, e.v, n));
      }
    }
  }
  Mapping sigma(n, k * n);
  std::optional<Rng> rng;
  if (rng_seed) rng.emplace(*rng_seed);
  for (NodeId j = 0; j < n; ++j) {
    const std::size_t replica = rng ? rng->Below(k) : 0;
    sigma.Set(j, ReplicaNode(replica, j, n));
  }
  Graph published(KindsFor(sigma, k * n), edges);
  return AnonymizedGraph{g, std::move(published), std::move(sigma),
                         KFoldReplication{k}, rng_seed};
}

MechanismParams DegreeEqualizeParams(const Graph& g, const Rational& a,
                                     bool correction) {
  const std::size_t n = g.num_nodes();
  if (n == 0) throw DegenerateTarget("graph has no nodes");
  if (a <= 0) throw DegenerateTarget("target degree must be positive");
  const auto two_e = static_cast<std::int64_t>(2 * g.num_edges());
  const Rational slack = Rational(static_cast<std::int64_t>(n)) * a - two_e;
  if (slack <= 0) {
    throw DegenerateTarget("n*a = " + FormatRational(slack + two_e) +
                           " does not exceed 2|E| = " + std::to_string(two_e));
  }
  const std::int64_t m = Ceil(slack / a);

  MechanismParams params;
  params.a = a;
  params.m = static_cast<std::size_t>(m);
  params.correction = correction;
  params.p.reserve(n);
  for (NodeId v = 0; v < n; ++v) {
    const Rational p = (a - static_cast<std::int64_t>(g.degree(v))) / m;
    if (p < 0 || p > 1) {
      throw InfeasibleTarget("attachment probability " + FormatRational(p) +
                             " for node " + std::to_string(g.label(v)) +
                             " is outside [0,1] (a=" + FormatRational(a) +
                             ", m=" + std::to_string(m) + ")");
    }
    params.p.push_back(p);
  }
  if (correction && m >= 2) {
    const Rational fake_mean = slack / m;
    if (fake_mean < a) {
      params.q = std::clamp((a - fake_mean) / (m - 1), Rational(0), Rational(1));
    }
  }
  return params;
}

AnonymizedGraph SampleDegreeEqualize(const Graph& g,
                                     const MechanismParams& params,
                                     std::uint64_t rng_seed) {
  const std::size_t n = g.num_nodes();
  const std::size_t m = params.m;
  if (params.p.size() != n) {
    throw std::invalid_argument("parameters were built for another graph");
  }
  Rng rng(rng_seed);
  std::vector<Edge> edges = g.edges();
  for (NodeId v = 0; v < n; ++v) {
    for (std::size_t u = 0; u < m; ++u) {
      if (rng.Bernoulli(params.p[v])) {
        edges.emplace_back(v, static_cast<NodeId>(n + u));
      }
    }
  }
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t w = u + 1; w < m; ++w) {
      if (rng.Bernoulli(params.q)) {
        edges.emplace_back(static_cast<NodeId>(n + u), static_cast<NodeId>(n + w));
      }
    }
  }
  Mapping sigma(n, n + m);
  for (NodeId v = 0; v < n; ++v) sigma.Set(v, v);
  Graph published(KindsFor(sigma, n + m), edges);
  return AnonymizedGraph{g, std::move(published), std::move(sigma),
                         DegreeEqualize{params}, rng_seed};
}

std::vector<Rational> ExpectedDegrees(const Graph& g,
                                      const MechanismParams& params) {
  const std::size_t n = g.num_nodes();
  const auto m = static_cast<std::int64_t>(params.m);
  std::vector<Rational> out;
  out.reserve(n + params.m);
  Rational sum_p = 0;
  for (NodeId v = 0; v < n; ++v) {
    out.push_back(static_cast<std::int64_t>(g.degree(v)) + m * params.p[v]);
    sum_p += params.p[v];
  }
  const Rational fake = sum_p + (m - 1) * params.q;
  out.insert(out.end(), params.m, fake);
  return out;
}

std::vector<Rational> DegreeVariances(const Graph& g,
                                      const MechanismParams& params) {
  const std::size_t n = g.num_nodes();
  const auto m = static_cast<std::int64_t>(params.m);
  std::vector<Rational> out;
  out.reserve(n + params.m);
  Rational sum = 0;
  for (NodeId v = 0; v < n; ++v) {
    const Rational bernoulli = params.p[v] * (1 - params.p[v]);
    out.push_back(m * bernoulli);
    sum += bernoulli;
  }
  const Rational fake = sum + (m - 1) * params.q * (1 - params.q);
  out.insert(out.end(), params.m, fake);
  return out;
}

std::size_t PrivacyCost(const AnonymizedGraph& ag) {
  return ag.published.num_nodes() - ag.sigma.size();
}

std::int64_t EdgeOverhead(const AnonymizedGraph& ag) {
  return static_cast<std::int64_t>(ag.published.num_edges()) -
         static_cast<std::int64_t>(ag.original.num_edges());
}

std::vector<std::string> InvariantViolations(const AnonymizedGraph& ag) {
  std::vector<std::string> out;
  const Graph& g = ag.original;
  const Graph& p = ag.published;
  if (ag.sigma.domain_size() != g.num_nodes() ||
      ag.sigma.codomain_size() != p.num_nodes()) {
    out.push_back("sigma dimensions do not match the graphs");
    return out;
  }
  if (!ag.sigma.IsTotal()) out.push_back("sigma is not total");
  for (NodeId w = 0; w < p.num_nodes(); ++w) {
    const bool image = ag.sigma.Preimage(w).has_value();
    if (image && p.kind(w) != NodeKind::kReal) {
      out.push_back("image node " + std::to_string(w) + " is tagged fake");
    }
    if (!image && p.kind(w) != NodeKind::kFake) {
      out.push_back("non-image node " + std::to_string(w) + " is tagged real");
    }
  }
  for (const Edge& e : g.edges()) {
    auto a = ag.sigma.Get(e.u), b = ag.sigma.Get(e.v);
    if (a && b && !p.HasEdge(*a, *b)) {
      out.push_back("original edge " + std::to_string(e.u) + "-" +
                    std::to_string(e.v) + " missing from published graph");
    }
  }
  for (const Edge& e : p.edges()) {
    auto a = ag.sigma.Preimage(e.u), b = ag.sigma.Preimage(e.v);
    if (a && b && !g.HasEdge(*a, *b)) {
      out.push_back("fake edge between real nodes " + std::to_string(e.u) +
                    "-" + std::to_string(e.v));
    }
  }
  return out;
}

}  // namespace graphveil
