#ifndef GRAPHVEIL_REFERENCE_FIXTURES_H_
#define GRAPHVEIL_REFERENCE_FIXTURES_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace graphveil {

// Built-in worked examples with known answers: replication and naive copies of
// small graphs, the star degree law, and degree-equalize on K3.
struct FixtureResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool passed = false;
};

struct FixtureOptions {
  // Replaces the expected value of the named fixture with a wrong one.
  // Negative control for the harness; unknown names throw invalid_argument.
  std::optional<std::string> tamper;
};

std::vector<std::string> FixtureNames();

std::vector<FixtureResult> RunReferenceFixtures(const FixtureOptions& options = {});

// {"fixtures": [{name, expected, actual, passed}], "passed": N, "failed": M}
nlohmann::json FixturesToJson(const std::vector<FixtureResult>& results);

// Fixed-width table, one row per fixture, then a totals line.
std::string FormatFixtureTable(const std::vector<FixtureResult>& results);

}  // namespace graphveil

#endif  // GRAPHVEIL_REFERENCE_FIXTURES_H_
