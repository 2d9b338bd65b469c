#include "graphveil/reference_fixtures.h"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "graphveil/attacks.h"
#include "graphveil/generators.h"
#include "graphveil/mechanisms.h"
#include "graphveil/metrics.h"
#include "graphveil/serialization.h"
#include "graphveil/symmetry.h"

namespace graphveil {
namespace {

using nlohmann::json;

struct Fixture {
  std::string name;
  json expected;
  std::function<json()> actual;
};

json SortedDegrees(const Graph& g) {
  auto d = DegreesOf(g);
  std::sort(d.begin(), d.end());
  return d;
}

json PrivacyFunction(const AnonymizedGraph& ag) {
  json bits = json::array();
  for (std::size_t l = 0; l < ag.original.num_nodes(); ++l) {
    bits.push_back(PrivacyFunctionPoint(ag, l));
  }
  return bits;
}

std::vector<Fixture> Fixtures() {
  std::vector<Fixture> f;
  f.push_back({"degree-sequence-star4", json{1, 1, 1, 3},
               [] { return json(DegreesOf(StarGraph(4))); }});
  f.push_back({"naive-3-copy-p3-is-3-isomorphic", true, [] {
                 return json(IsKIsomorphic(NaiveCopies(PathGraph(3), 3).published, 3));
               }});
  f.push_back({"naive-2-copy-k3-size",
               json{{"nodes", 6}, {"edges", 6}, {"cost", 3}}, [] {
                 auto ag = NaiveCopies(CompleteGraph(3), 2);
                 return json{{"nodes", ag.published.num_nodes()},
                             {"edges", ag.published.num_edges()},
                             {"cost", PrivacyCost(ag)}};
               }});
  f.push_back({"naive-2-copy-k3-h0", 1.0, [] {
                 return json(PrivacyFunctionPoint(NaiveCopies(CompleteGraph(3), 2), 0));
               }});
  f.push_back({"replication-k3-size",
               json{{"nodes", 6}, {"edges", 12}, {"cost", 3}, {"edge_overhead", 9}},
               [] {
                 auto ag = KFoldReplicate(CompleteGraph(3), 2);
                 return json{{"nodes", ag.published.num_nodes()},
                             {"edges", ag.published.num_edges()},
                             {"cost", PrivacyCost(ag)},
                             {"edge_overhead", EdgeOverhead(ag)}};
               }});
  f.push_back({"replication-star4-degrees",
               json{2, 2, 2, 2, 2, 2, 6, 6},
               [] { return SortedDegrees(KFoldReplicate(StarGraph(4), 2).published); }});
  f.push_back({"replication-k3-candidates-all-but-one-seeded", json{2, 2, 2}, [] {
                 auto ag = KFoldReplicate(CompleteGraph(3), 2);
                 json sizes = json::array();
                 for (NodeId v = 0; v < 3; ++v) {
                   std::vector<NodeId> others;
                   for (NodeId u = 0; u < 3; ++u) {
                     if (u != v) others.push_back(u);
                   }
                   sizes.push_back(
                       CandidateSet(ag, SeedSet::FromNodes(ag, others), v).size());
                 }
                 return sizes;
               }});
  f.push_back({"replication-k3-privacy-function", json{1.0, 1.0, 1.0},
               [] { return PrivacyFunction(KFoldReplicate(CompleteGraph(3), 2)); }});
  f.push_back({"replication-star4-h3", 1.0, [] {
                 return json(PrivacyFunctionPoint(KFoldReplicate(StarGraph(4), 2), 3));
               }});
  f.push_back({"replication-k3-node-tolerance", json{2, 2, 2}, [] {
                 auto ag = KFoldReplicate(CompleteGraph(3), 2);
                 json out = json::array();
                 for (NodeId v = 0; v < 3; ++v) out.push_back(NodeTolerance(ag, v));
                 return out;
               }});
  f.push_back({"replication-k3-mechanism-tolerance", 2, [] {
                 return json(MechanismTolerance(KFoldReplicate(CompleteGraph(3), 2)));
               }});
  f.push_back({"replication-tolerance-is-n-minus-1", json{3, 2, 3, 3, 3, 2, 3, 3}, [] {
                 json out = json::array();
                 for (std::size_t k : {2, 3}) {
                   for (const Graph& g : {StarGraph(4), PathGraph(3), PawGraph(),
                                          CycleGraph(4)}) {
                     out.push_back(MechanismTolerance(KFoldReplicate(g, k)));
                   }
                 }
                 return out;
               }});
  f.push_back({"replication-k3-report",
               json{{"cost", 3}, {"edge_overhead", 9},
                    {"privacy_function", json{1.0, 1.0, 1.0}}, {"tolerance", 2}},
               [] {
                 auto report = FullReport(KFoldReplicate(CompleteGraph(3), 2));
                 json bits = json::array();
                 for (const auto& p : report.privacy_function) bits.push_back(p.bits);
                 return json{{"cost", report.cost},
                             {"edge_overhead", report.edge_overhead},
                             {"privacy_function", std::move(bits)},
                             {"tolerance", report.mechanism_tolerance}};
               }});
  f.push_back({"replication-k3-exact-attack-last-node",
               json{{"abstained", 1}, {"rate", "0"}}, [] {
                 auto ag = KFoldReplicate(CompleteGraph(3), 2);
                 const NodeId seeds[] = {0, 1};
                 auto r = SeedAttackExact(ag, SeedSet::FromNodes(ag, seeds));
                 return json{{"abstained", r.abstained},
                             {"rate", FormatRational(r.reidentification_rate)}};
               }});
  f.push_back({"replication-star4-degree-attack",
               json{{"center_images_of_degree_6", 2}, {"center_claimed", false}},
               [] {
                 auto ag = KFoldReplicate(StarGraph(4), 2);
                 std::size_t images = 0;
                 for (NodeId w = 0; w < ag.published.num_nodes(); ++w) {
                   if (ag.published.degree(w) == 6) ++images;
                 }
                 auto r = DegreeAttack(ag);
                 return json{{"center_images_of_degree_6", images},
                             {"center_claimed", r.recovered.Contains(3)}};
               }});
  f.push_back({"degree-equalize-k3-expected-degrees",
               json{"3", "3", "3", "3"}, [] {
                 const Graph g = CompleteGraph(3);
                 json out = json::array();
                 for (const Rational& d :
                      ExpectedDegrees(g, DegreeEqualizeParams(g, Rational(3)))) {
                   out.push_back(FormatRational(d));
                 }
                 return out;
               }});
  return f;
}

}  // namespace

std::vector<std::string> FixtureNames() {
  std::vector<std::string> names;
  for (const Fixture& f : Fixtures()) names.push_back(f.name);
  return names;
}

std::vector<FixtureResult> RunReferenceFixtures(const FixtureOptions& options) {
  auto fixtures = Fixtures();
  if (options.tamper) {
    auto it = std::find_if(fixtures.begin(), fixtures.end(),
                           [&](const Fixture& f) { return f.name == *options.tamper; });
    if (it == fixtures.end()) {
      throw std::invalid_argument("no fixture named '" + *options.tamper + "'");
    }
    it->expected = json{{"tampered", it->expected}};
  }
  std::vector<FixtureResult> results;
  for (const Fixture& f : fixtures) {
    FixtureResult r{f.name, f.expected.dump(), "", false};
    try {
      json actual = f.actual();
      r.actual = actual.dump();
      r.passed = actual == f.expected;
    } catch (const std::exception& e) {
      r.actual = std::string("error: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

json FixturesToJson(const std::vector<FixtureResult>& results) {
  json rows = json::array();
  std::size_t passed = 0;
  for (const FixtureResult& r : results) {
    rows.push_back(json{{"name", r.name},
                        {"expected", r.expected},
                        {"actual", r.actual},
                        {"passed", r.passed}});
    if (r.passed) ++passed;
  }
  return json{{"fixtures", std::move(rows)},
              {"passed", passed},
              {"failed", results.size() - passed}};
}

std::string FormatFixtureTable(const std::vector<FixtureResult>& results) {
  std::size_t width = 0;
  for (const FixtureResult& r : results) width = std::max(width, r.name.size());
  std::ostringstream out;
  std::size_t passed = 0;
  for (const FixtureResult& r : results) {
    out << (r.passed ? "PASS  " : "FAIL  ");
    if (r.passed) {
      out << r.name;
    } else {
      out << std::left << std::setw(static_cast<int>(width)) << r.name
          << "  expected " << r.expected << ", got " << r.actual;
    }
    out << '\n';
    if (r.passed) ++passed;
  }
  out << passed << "/" << results.size() << " fixtures passed\n";
  return out.str();
}

}  // namespace graphveil
