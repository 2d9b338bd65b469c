#include "graphveil/attacks.h"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "graphveil/errors.h"
#include "graphveil/random.h"

namespace graphveil {

AttackResult ScoreClaims(const AnonymizedGraph& ag, const SeedSet& seeds,
                         Mapping claims) {
  const std::size_t n = ag.original.num_nodes();
  AttackResult result;
  result.recovered = Mapping(n, ag.published.num_nodes());
  for (NodeId v = 0; v < n; ++v) {
    if (seeds.pairs.Contains(v)) continue;
    auto claim = claims.Get(v);
    if (!claim) {
      ++result.abstained;
      continue;
    }
    result.recovered.Set(v, *claim);
    if (ag.sigma.Get(v) == claim) {
      ++result.correct;
    } else {
      ++result.incorrect;
    }
  }
  const std::size_t targets = n - seeds.size();
  if (targets > 0) {
    result.reidentification_rate =
        Rational(static_cast<std::int64_t>(result.correct),
                 static_cast<std::int64_t>(targets));
  }
  return result;
}

AttackResult SeedAttackExact(const AnonymizedGraph& ag, const SeedSet& seeds,
                             const MetricsOptions& options) {
  ValidateSeeds(ag, seeds);
  const std::size_t n = ag.original.num_nodes();
  Mapping claims(n, ag.published.num_nodes());
  for (NodeId v = 0; v < n; ++v) {
    if (seeds.pairs.Contains(v)) continue;
    auto candidates = CandidateSet(ag, seeds, v, options);
    if (candidates.size() == 1) claims.Set(v, candidates.front());
  }
  return ScoreClaims(ag, seeds, std::move(claims));
}

Mapping PercolationMatch(const Graph& published, const Graph& original,
                         const Mapping& seeds, std::size_t threshold) {
  const std::size_t no = original.num_nodes();
  const std::size_t np = published.num_nodes();
  Mapping matched(no, np);
  for (auto [v, w] : seeds.pairs()) matched.Set(v, w);
  if (threshold == 0) throw std::invalid_argument("threshold must be >= 1");

  Mapping claims(no, np);
  std::vector<std::size_t> score(no * np);
  while (true) {
    std::fill(score.begin(), score.end(), 0);
    for (auto [x, y] : matched.pairs()) {
      for (NodeId v : original.neighbors(x)) {
        if (matched.Contains(v)) continue;
        for (NodeId w : published.neighbors(y)) {
          if (matched.Preimage(w)) continue;
          ++score[v * np + w];
        }
      }
    }
    std::vector<std::size_t> row_best(no, 0), row_count(no, 0);
    std::vector<std::size_t> col_best(np, 0), col_count(np, 0);
    for (NodeId v = 0; v < no; ++v) {
      for (NodeId w = 0; w < np; ++w) {
        const std::size_t s = score[v * np + w];
        if (s == 0) continue;
        if (s > row_best[v]) {
          row_best[v] = s;
          row_count[v] = 1;
        } else if (s == row_best[v]) {
          ++row_count[v];
        }
        if (s > col_best[w]) {
          col_best[w] = s;
          col_count[w] = 1;
        } else if (s == col_best[w]) {
          ++col_count[w];
        }
      }
    }
    std::optional<std::tuple<std::size_t, NodeId, NodeId>> pick;
    for (NodeId v = 0; v < no; ++v) {
      if (row_count[v] != 1 || row_best[v] < threshold) continue;
      for (NodeId w = 0; w < np; ++w) {
        const std::size_t s = score[v * np + w];
        if (s != row_best[v] || col_best[w] != s || col_count[w] != 1) continue;
        if (!pick || s > std::get<0>(*pick)) pick.emplace(s, v, w);
      }
    }
    if (!pick) break;
    auto [s, v, w] = *pick;
    matched.Set(v, w);
    claims.Set(v, w);
  }
  return claims;
}

AttackResult SeedAttackPercolation(const AnonymizedGraph& ag,
                                   const SeedSet& seeds,
                                   std::size_t threshold) {
  ValidateSeeds(ag, seeds);
  return ScoreClaims(
      ag, seeds,
      PercolationMatch(ag.published, ag.original, seeds.pairs, threshold));
}

std::size_t DisclosedDegree(const Mechanism& mechanism, std::size_t degree) {
  if (auto* rep = std::get_if<KFoldReplication>(&mechanism)) {
    return rep->k * degree;
  }
  return degree;
}

Mapping DegreeMatch(const Graph& published,
                    std::span<const std::size_t> original_degrees,
                    const std::function<std::size_t(std::size_t)>& degree_law) {
  std::map<std::size_t, std::size_t> original_count;
  for (std::size_t d : original_degrees) ++original_count[d];
  std::map<std::size_t, std::vector<NodeId>> by_degree;
  for (NodeId w = 0; w < published.num_nodes(); ++w) {
    by_degree[published.degree(w)].push_back(w);
  }
  Mapping claims(original_degrees.size(), published.num_nodes());
  for (NodeId v = 0; v < original_degrees.size(); ++v) {
    if (original_count[original_degrees[v]] != 1) continue;
    auto it = by_degree.find(degree_law(original_degrees[v]));
    if (it != by_degree.end() && it->second.size() == 1) {
      claims.Set(v, it->second.front());
    }
  }
  return claims;
}

AttackResult DegreeAttack(const AnonymizedGraph& ag) {
  const Mechanism mechanism = ag.mechanism;
  auto claims = DegreeMatch(ag.published, DegreesOf(ag.original),
                            [&mechanism](std::size_t d) {
                              return DisclosedDegree(mechanism, d);
                            });
  SeedSet none{Mapping(ag.original.num_nodes(), ag.published.num_nodes())};
  return ScoreClaims(ag, none, std::move(claims));
}

ExperimentTable RunExperiment(const AnonymizedGraph& ag,
                              std::span<const std::size_t> seed_sizes,
                              const ExperimentOptions& options) {
  const std::size_t n = ag.original.num_nodes();
  ExperimentTable table;
  for (std::size_t size : seed_sizes) {
    if (n == 0 || size > n - 1) {
      throw std::invalid_argument("seed size " + std::to_string(size) +
                                  " exceeds n-1");
    }
    std::map<std::string, std::vector<double>> rates;
    for (std::size_t trial = 0; trial < options.trials; ++trial) {
      Rng rng(DeriveSeed(options.rng_seed, {size, trial}));
      auto picked = rng.Subset(static_cast<std::uint32_t>(n),
                               static_cast<std::uint32_t>(size));
      std::vector<NodeId> nodes(picked.begin(), picked.end());
      SeedSet seeds = SeedSet::FromNodes(ag, nodes);

      const auto add = [&](const std::string& name, const AttackResult& r) {
        const double rate = ToDouble(r.reidentification_rate);
        table.rows.push_back(ExperimentRow{size, trial, name, r.correct,
                                           r.incorrect, r.abstained, rate});
        rates[name].push_back(rate);
      };
      add("exact", SeedAttackExact(ag, seeds, options.metrics));
      add("percolation",
          SeedAttackPercolation(ag, seeds, options.percolation_threshold));
    }
    for (const auto& [name, values] : rates) {
      ExperimentSummary s{size, name, 0, 0, 0};
      if (!values.empty()) {
        double total = 0;
        for (double v : values) total += v;
        s.mean_rate = total / static_cast<double>(values.size());
        s.min_rate = *std::min_element(values.begin(), values.end());
        s.max_rate = *std::max_element(values.begin(), values.end());
      }
      table.summary.push_back(s);
    }
  }
  return table;
}

}  // namespace graphveil
