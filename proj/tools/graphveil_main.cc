// graphveil: anonymize graphs, measure privacy, run attacks and check
// routing utility. Run `graphveil --help` for the subcommands.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphveil/attacks.h"
#include "graphveil/errors.h"
#include "graphveil/io.h"
#include "graphveil/mechanisms.h"
#include "graphveil/metrics.h"
#include "graphveil/rational.h"
#include "graphveil/reference_fixtures.h"
#include "graphveil/routing.h"
#include "graphveil/serialization.h"

namespace {

using nlohmann::json;
namespace gv = graphveil;

// Exit codes.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kError = 2;

struct RunConfig {
  std::string input;
  std::string kinds;
  std::string output;
  std::string mechanism = "replicate";
  std::size_t k = 2;
  std::string a;
  bool correction = false;
  std::uint64_t rng_seed = gv::kDefaultRngSeed;
  std::vector<std::size_t> seed_sizes;
  std::size_t trials = 10;
  std::size_t threshold = 1;
  std::string attack = "seeded";
  std::string format = "json";
  bool json = false;
  bool sample = false;
  std::size_t samples = 200;
  std::size_t exact_bound = 12;
  std::size_t search_bound = 24;
  std::string posterior = "disclosed-layout";
  std::string tamper;
};

// Writes to --output atomically, or to stdout.
void Emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    gv::WriteFileAtomically(cfg.output, text);
  }
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

gv::MetricsOptions Metrics(const RunConfig& cfg) {
  gv::MetricsOptions options;
  options.limits.max_nodes = cfg.search_bound;
  options.model = gv::ParsePosteriorModel(cfg.posterior);
  options.exact_bound = cfg.exact_bound;
  options.allow_sampling = cfg.sample;
  options.samples_per_size = cfg.samples;
  options.rng_seed = cfg.rng_seed;
  return options;
}

int Anonymize(const RunConfig& cfg) {
  std::optional<std::filesystem::path> kinds;
  if (!cfg.kinds.empty()) kinds = cfg.kinds;
  const gv::Graph g = gv::LoadEdgeList(cfg.input, kinds);

  gv::AnonymizedGraph ag;
  if (cfg.mechanism == "identity") {
    ag = gv::PublishIdentity(g);
  } else if (cfg.mechanism == "naive") {
    ag = gv::NaiveCopies(g, cfg.k, cfg.rng_seed);
  } else if (cfg.mechanism == "replicate") {
    ag = gv::KFoldReplicate(g, cfg.k, cfg.rng_seed);
  } else {
    if (cfg.a.empty()) throw CLI::ValidationError("--a", "required for degree-eq");
    auto params = gv::DegreeEqualizeParams(g, gv::ParseRational(cfg.a),
                                           cfg.correction);
    ag = gv::SampleDegreeEqualize(g, params, cfg.rng_seed);
  }
  gv::SaveAnonymized(ag, cfg.output);

  const json summary{{"mechanism", gv::MechanismName(ag.mechanism)},
                     {"nodes", ag.published.num_nodes()},
                     {"edges", ag.published.num_edges()},
                     {"cost", gv::PrivacyCost(ag)},
                     {"edge_overhead", gv::EdgeOverhead(ag)},
                     {"edges_file", gv::EdgesPath(cfg.output).string()},
                     {"sidecar_file", gv::SidecarPath(cfg.output).string()}};
  if (cfg.json) {
    std::cout << Dump(summary);
  } else {
    std::cout << "cost " << gv::PrivacyCost(ag) << "\n"
              << "edge overhead " << gv::EdgeOverhead(ag) << "\n"
              << "wrote " << gv::EdgesPath(cfg.output).string() << " and "
              << gv::SidecarPath(cfg.output).string() << "\n";
  }
  return kOk;
}

int Measure(const RunConfig& cfg) {
  const auto ag = gv::LoadAnonymized(cfg.input);
  Emit(cfg, Dump(gv::ReportToJson(gv::FullReport(ag, Metrics(cfg)))));
  return kOk;
}

int Attack(const RunConfig& cfg) {
  const auto ag = gv::LoadAnonymized(cfg.input);
  if (cfg.attack == "degree") {
    Emit(cfg, Dump(gv::AttackResultToJson(gv::DegreeAttack(ag))));
    return kOk;
  }
  std::vector<std::size_t> sizes = cfg.seed_sizes;
  if (sizes.empty()) {
    for (std::size_t s = 0; s < ag.original.num_nodes(); ++s) sizes.push_back(s);
  }
  gv::ExperimentOptions options;
  options.trials = cfg.trials;
  options.rng_seed = cfg.rng_seed;
  options.percolation_threshold = cfg.threshold;
  options.metrics = Metrics(cfg);
  const auto table = gv::RunExperiment(ag, sizes, options);
  Emit(cfg, cfg.format == "csv" ? gv::ExperimentToCsv(table)
                                : Dump(gv::ExperimentToJson(table)));
  return kOk;
}

int RoutingCheck(const RunConfig& cfg) {
  const auto ag = gv::LoadAnonymized(cfg.input);
  const auto reach = gv::CheckReachabilityPreserved(ag);
  const auto paths = gv::CheckShortestPathsPreserved(ag);
  // Witnesses are reported with the labels of the input file.
  const auto labelled = [&ag](const gv::RoutingCheck& c) {
    json j = gv::RoutingCheckToJson(c);
    if (c.witness) {
      j["witness"] = json::array({ag.original.label(c.witness->first),
                                  ag.original.label(c.witness->second)});
    }
    return j;
  };
  const bool passed = reach.passed && paths.passed;
  Emit(cfg, Dump(json{{"checks", json::array({labelled(reach), labelled(paths)})},
                      {"passed", passed}}));
  return passed ? kOk : kCheckFailed;
}

int RunFixtures(const RunConfig& cfg) {
  gv::FixtureOptions options;
  if (!cfg.tamper.empty()) options.tamper = cfg.tamper;
  const auto results = gv::RunReferenceFixtures(options);
  Emit(cfg, cfg.json ? Dump(gv::FixturesToJson(results))
                     : gv::FormatFixtureTable(results));
  bool all = true;
  for (const auto& r : results) {
    if (!r.passed) {
      all = false;
      std::cerr << "failed fixture: " << r.name << "\n";
    }
  }
  return all ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graphveil: graph anonymization by fake-node addition"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto rng_seed = [&cfg](CLI::App* sub) {
    sub->add_option("--rng-seed", cfg.rng_seed, "Seed for every random choice")
        ->envname("GRAPHVEIL_RNG_SEED")
        ->capture_default_str();
  };
  const auto metric_flags = [&cfg](CLI::App* sub) {
    sub->add_option("--posterior", cfg.posterior, "Adversary model")
        ->check(CLI::IsMember({"disclosed-layout", "structure-only"}))
        ->envname("GRAPHVEIL_POSTERIOR")
        ->capture_default_str();
    sub->add_option("--exact-bound", cfg.exact_bound,
                    "Largest published graph measured exhaustively")
        ->envname("GRAPHVEIL_EXACT_BOUND")
        ->capture_default_str();
    sub->add_option("--search-bound", cfg.search_bound,
                    "Largest graph handed to the automorphism search (max 64)")
        ->check(CLI::Range(1, 64))
        ->envname("GRAPHVEIL_SEARCH_BOUND")
        ->capture_default_str();
    sub->add_flag("--sample", cfg.sample,
                  "Sample seed sets above the exact bound (non-exact entries)");
    sub->add_option("--samples", cfg.samples, "Seed sets sampled per size")
        ->envname("GRAPHVEIL_SAMPLES")
        ->capture_default_str();
  };

  auto* anonymize = app.add_subcommand("anonymize", "Publish an anonymized graph");
  anonymize->add_option("--input", cfg.input, "Edge list")->required();
  anonymize->add_option("--kinds", cfg.kinds, "Kinds file (id real|fake)");
  anonymize->add_option("--output", cfg.output,
                        "Output prefix; writes <prefix>.edges and <prefix>.json")
      ->required();
  anonymize->add_option("--mechanism", cfg.mechanism)
      ->check(CLI::IsMember({"identity", "naive", "replicate", "degree-eq"}))
      ->envname("GRAPHVEIL_MECHANISM")
      ->capture_default_str();
  anonymize->add_option("--k", cfg.k, "Copies for naive/replicate")
      ->envname("GRAPHVEIL_K")
      ->capture_default_str();
  anonymize->add_option("--a", cfg.a, "Target degree for degree-eq (7, 7/2, 3.5)")
      ->envname("GRAPHVEIL_A");
  anonymize->add_flag("--correction", cfg.correction,
                      "Fake-fake top-up so fake nodes also average a");
  anonymize->add_flag("--json", cfg.json, "Print the summary as JSON");
  rng_seed(anonymize);

  auto* measure = app.add_subcommand("measure", "Privacy report for a sidecar");
  measure->add_option("--input", cfg.input, "Prefix written by anonymize")->required();
  measure->add_option("--output", cfg.output, "Report file (default stdout)");
  metric_flags(measure);
  rng_seed(measure);

  auto* attack = app.add_subcommand("attack", "Run de-anonymization attacks");
  attack->add_option("--input", cfg.input, "Prefix written by anonymize")->required();
  attack->add_option("--output", cfg.output, "Result file (default stdout)");
  attack->add_option("--attack", cfg.attack, "seeded: exact and percolation")
      ->check(CLI::IsMember({"seeded", "degree"}))
      ->capture_default_str();
  attack->add_option("--seed-sizes", cfg.seed_sizes, "Comma-separated (default 0..n-1)")
      ->delimiter(',');
  attack->add_option("--trials", cfg.trials)
      ->envname("GRAPHVEIL_TRIALS")
      ->capture_default_str();
  attack->add_option("--threshold", cfg.threshold, "Percolation score threshold")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  attack->add_option("--format", cfg.format)
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("GRAPHVEIL_FORMAT")
      ->capture_default_str();
  metric_flags(attack);
  rng_seed(attack);

  auto* routing = app.add_subcommand(
      "routing-check", "Check reachability and shortest paths over valid routes");
  routing->add_option("--input", cfg.input, "Prefix written by anonymize")->required();
  routing->add_option("--output", cfg.output, "Result file (default stdout)");

  auto* reproduce = app.add_subcommand("reproduce-paper",
                                       "Run the built-in reference fixtures");
  reproduce->add_flag("--json", cfg.json, "Machine-readable output");
  reproduce->add_option("--output", cfg.output, "Result file (default stdout)");
  reproduce->add_option("--tamper", cfg.tamper,
                        "Corrupt the named fixture's expected value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kError;
  }

  try {
    if (*anonymize) return Anonymize(cfg);
    if (*measure) return Measure(cfg);
    if (*attack) return Attack(cfg);
    if (*routing) return RoutingCheck(cfg);
    if (*reproduce) return RunFixtures(cfg);
  } catch (const gv::InfeasibleTarget& e) {
    std::cerr << "error: infeasible target: " << e.what() << "\n";
  } catch (const gv::DegenerateTarget& e) {
    std::cerr << "error: degenerate target: " << e.what() << "\n";
  } catch (const gv::InvalidK& e) {
    std::cerr << "error: invalid k: " << e.what() << "\n";
  } catch (const gv::SizeLimitExceeded& e) {
    std::cerr << "error: size limit exceeded: " << e.what() << "\n"
              << "hint: raise --exact-bound / --search-bound, or pass --sample\n";
  } catch (const gv::ParseError& e) {
    std::cerr << "error: " << cfg.input << ": " << e.what() << "\n";
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kError;
}
