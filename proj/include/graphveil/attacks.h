#ifndef GRAPHVEIL_ATTACKS_H_
#define GRAPHVEIL_ATTACKS_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "graphveil/graph.h"
#include "graphveil/mechanisms.h"
#include "graphveil/metrics.h"
#include "graphveil/rational.h"

namespace graphveil {

// Scored outcome of one attack run. Seeds are neither claimed nor counted.
struct AttackResult {
  // Claimed original -> published pairs, seeds excluded.
  Mapping recovered;
  std::size_t correct = 0;
  std::size_t incorrect = 0;
  std::size_t abstained = 0;
  // correct / (n - |seeds|); zero when every node is a seed.
  Rational reidentification_rate{0};
};

// Scores a claimed mapping against sigma.
AttackResult ScoreClaims(const AnonymizedGraph& ag, const SeedSet& seeds,
                         Mapping claims);

// Claims sigma(v) exactly when the candidate set of v is a singleton, so it
// never errs. Uses the same adversary model as the metrics.
AttackResult SeedAttackExact(const AnonymizedGraph& ag, const SeedSet& seeds,
                             const MetricsOptions& options = {});

// Seeded percolation matching over the graph structure alone. Each round
// scores every unmatched pair (v, w) by the number of matched pairs (x, y)
// with x ~ v in the original and y ~ w in the published graph. A pair
// qualifies when its score is at least `threshold` and strictly beats every
// other pair in its row and column; the best qualifying pair (lowest ids on
// equal score) is matched. Stops when nothing qualifies. Ties abstain.
Mapping PercolationMatch(const Graph& published, const Graph& original,
                         const Mapping& seeds, std::size_t threshold);

AttackResult SeedAttackPercolation(const AnonymizedGraph& ag,
                                   const SeedSet& seeds,
                                   std::size_t threshold = 1);

// Degree the mechanism is publicly known to give an original node of degree
// d: k*d for k-fold replication, d otherwise.
std::size_t DisclosedDegree(const Mechanism& mechanism, std::size_t degree);

// Claims (v, w) when d_v is unique in `original_degrees` and w is the only
// published node whose degree equals the disclosed image of d_v.
Mapping DegreeMatch(const Graph& published,
                    std::span<const std::size_t> original_degrees,
                    const std::function<std::size_t(std::size_t)>& degree_law);

AttackResult DegreeAttack(const AnonymizedGraph& ag);

struct ExperimentRow {
  std::size_t seed_size = 0;
  std::size_t trial = 0;
  std::string attack;  // "exact" or "percolation"
  std::size_t correct = 0;
  std::size_t incorrect = 0;
  std::size_t abstained = 0;
  double rate = 0;
};

struct ExperimentSummary {
  std::size_t seed_size = 0;
  std::string attack;
  double mean_rate = 0;
  double min_rate = 0;
  double max_rate = 0;
};

struct ExperimentTable {
  std::vector<ExperimentRow> rows;
  std::vector<ExperimentSummary> summary;
};

struct ExperimentOptions {
  std::size_t trials = 10;
  std::uint64_t rng_seed = kDefaultRngSeed;
  std::size_t percolation_threshold = 1;
  MetricsOptions metrics;
};

// For each seed size, `trials` uniformly random seed sets (true pairs), each
// attacked by both seed attacks. Trial t of size s draws from a stream derived
// from (rng_seed, s, t), so the table does not depend on evaluation order.
ExperimentTable RunExperiment(const AnonymizedGraph& ag,
                              std::span<const std::size_t> seed_sizes,
                              const ExperimentOptions& options = {});

}  // namespace graphveil

#endif  // GRAPHVEIL_ATTACKS_H_
