// Python bindings. Structured results (reports, attack results, checks,
// sidecars) cross the boundary as JSON text and are decoded on the Python
// side, so both languages see the same field names.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "graphveil/attacks.h"
#include "graphveil/errors.h"
#include "graphveil/generators.h"
#include "graphveil/io.h"
#include "graphveil/mechanisms.h"
#include "graphveil/metrics.h"
#include "graphveil/random.h"
#include "graphveil/reference_fixtures.h"
#include "graphveil/routing.h"
#include "graphveil/serialization.h"

namespace py = pybind11;
namespace gv = graphveil;

namespace {

gv::MetricsOptions Options(const std::string& posterior, std::size_t search_bound,
                           std::size_t exact_bound) {
  gv::MetricsOptions options;
  options.model = gv::ParsePosteriorModel(posterior);
  options.limits.max_nodes = search_bound;
  options.exact_bound = exact_bound;
  return options;
}

gv::Graph MakeGraph(std::size_t n, const std::vector<std::pair<gv::NodeId, gv::NodeId>>& edges) {
  std::vector<gv::Edge> list;
  list.reserve(edges.size());
  for (auto [u, v] : edges) list.emplace_back(u, v);
  return gv::Graph(n, list);
}

std::vector<std::pair<gv::NodeId, gv::NodeId>> EdgePairs(const gv::Graph& g) {
  std::vector<std::pair<gv::NodeId, gv::NodeId>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

std::string CheckJson(const gv::AnonymizedGraph& ag) {
  nlohmann::json checks = nlohmann::json::array();
  bool passed = true;
  for (const auto& c : {gv::CheckReachabilityPreserved(ag), gv::CheckShortestPathsPreserved(ag)}) {
    passed = passed && c.passed;
    checks.push_back(gv::RoutingCheckToJson(c));
  }
  return nlohmann::json{{"checks", checks}, {"passed", passed}}.dump();
}

}  // namespace

PYBIND11_MODULE(_graphveil, m) {
  m.doc() = "Graph anonymization mechanisms, privacy metrics and attacks.";

  auto base = py::register_exception<gv::Error>(m, "GraphveilError", PyExc_RuntimeError);
  py::register_exception<gv::ParseError>(m, "ParseError", base.ptr());
  py::register_exception<gv::IoFailure>(m, "IoFailure", base.ptr());
  py::register_exception<gv::SizeLimitExceeded>(m, "SizeLimitExceeded", base.ptr());
  py::register_exception<gv::InvalidK>(m, "InvalidK", base.ptr());
  py::register_exception<gv::InfeasibleTarget>(m, "InfeasibleTarget", base.ptr());
  py::register_exception<gv::DegenerateTarget>(m, "DegenerateTarget", base.ptr());
  py::register_exception<gv::InconsistentData>(m, "InconsistentData", base.ptr());

  m.attr("DEFAULT_RNG_SEED") = gv::kDefaultRngSeed;

  py::class_<gv::Graph>(m, "Graph")
      .def(py::init(&MakeGraph), py::arg("num_nodes"), py::arg("edges"))
      .def_static("parse", [](const std::string& text) {
        std::istringstream in(text);
        return gv::ParseEdgeList(in);
      }, py::arg("text"))
      .def("to_edge_list", &gv::FormatEdgeList)
      .def_property_readonly("num_nodes", &gv::Graph::num_nodes)
      .def_property_readonly("num_edges", &gv::Graph::num_edges)
      .def_property_readonly("edges", &EdgePairs)
      .def_property_readonly("labels", &gv::Graph::labels)
      .def_property_readonly("kinds", [](const gv::Graph& g) {
        std::vector<std::string> out;
        for (auto k : g.kinds()) out.emplace_back(gv::KindName(k));
        return out;
      })
      .def("degree", &gv::Graph::degree, py::arg("v"))
      .def("degrees", [](const gv::Graph& g) {
        std::vector<std::size_t> d;
        for (gv::NodeId v = 0; v < g.num_nodes(); ++v) d.push_back(g.degree(v));
        return d;
      })
      .def("has_edge", &gv::Graph::HasEdge, py::arg("u"), py::arg("v"))
      .def("__eq__", [](const gv::Graph& a, const gv::Graph& b) { return a == b; })
      .def("__repr__", [](const gv::Graph& g) {
        return "<Graph nodes=" + std::to_string(g.num_nodes()) +
               " edges=" + std::to_string(g.num_edges()) + ">";
      });

  m.def("complete_graph", &gv::CompleteGraph, py::arg("n"));
  m.def("path_graph", &gv::PathGraph, py::arg("n"));
  m.def("cycle_graph", &gv::CycleGraph, py::arg("n"));
  m.def("star_graph", &gv::StarGraph, py::arg("n"));
  m.def("paw_graph", &gv::PawGraph);
  m.def("edgeless_graph", &gv::EdgelessGraph, py::arg("n"));
  m.def("random_graph", [](std::size_t n, const std::string& p, std::uint64_t seed) {
    gv::Rng rng(seed);
    return gv::RandomGraph(n, gv::ParseRational(p), rng);
  }, py::arg("n"), py::arg("p"), py::arg("seed"));

  py::class_<gv::AnonymizedGraph>(m, "AnonymizedGraph")
      .def_readonly("original", &gv::AnonymizedGraph::original)
      .def_readonly("published", &gv::AnonymizedGraph::published)
      .def_property_readonly("mechanism", [](const gv::AnonymizedGraph& ag) {
        return std::string(gv::MechanismName(ag.mechanism));
      })
      .def_property_readonly("sigma", [](const gv::AnonymizedGraph& ag) { return ag.sigma.pairs(); })
      .def_property_readonly("cost", &gv::PrivacyCost)
      .def_property_readonly("edge_overhead", &gv::EdgeOverhead)
      .def("violations", &gv::InvariantViolations)
      .def("_sidecar_json", [](const gv::AnonymizedGraph& ag) { return gv::SidecarToJson(ag).dump(); })
      .def("save", [](const gv::AnonymizedGraph& ag, const std::string& prefix) {
        gv::SaveAnonymized(ag, prefix);
      }, py::arg("prefix"));

  m.def("load", [](const std::string& prefix) { return gv::LoadAnonymized(prefix); },
        py::arg("prefix"));
  m.def("publish_identity", &gv::PublishIdentity, py::arg("graph"));
  m.def("naive_copies", &gv::NaiveCopies, py::arg("graph"), py::arg("k"),
        py::arg("rng_seed") = py::none());
  m.def("replicate", &gv::KFoldReplicate, py::arg("graph"), py::arg("k"),
        py::arg("rng_seed") = py::none());
  m.def("degree_equalize", [](const gv::Graph& g, const std::string& a, bool correction,
                              std::uint64_t seed) {
    return gv::SampleDegreeEqualize(g, gv::DegreeEqualizeParams(g, gv::ParseRational(a), correction), seed);
  }, py::arg("graph"), py::arg("a"), py::arg("correction") = false,
     py::arg("rng_seed") = gv::kDefaultRngSeed);
  m.def("_degree_equalize_params", [](const gv::Graph& g, const std::string& a, bool correction) {
    return gv::MechanismParamsToJson(gv::DegreeEqualizeParams(g, gv::ParseRational(a), correction)).dump();
  }, py::arg("graph"), py::arg("a"), py::arg("correction") = false);
  m.def("_expected_degrees", [](const gv::Graph& g, const std::string& a, bool correction) {
    std::vector<std::string> out;
    for (const auto& d : gv::ExpectedDegrees(g, gv::DegreeEqualizeParams(g, gv::ParseRational(a), correction))) {
      out.push_back(gv::FormatRational(d));
    }
    return out;
  }, py::arg("graph"), py::arg("a"), py::arg("correction") = false);

  const auto posterior = py::arg("posterior") = std::string("disclosed-layout");
  const auto search_bound = py::arg("search_bound") = std::size_t{24};
  const auto exact_bound = py::arg("exact_bound") = std::size_t{12};

  m.def("candidate_set", [](const gv::AnonymizedGraph& ag, const std::vector<gv::NodeId>& seeds,
                            gv::NodeId v, const std::string& model, std::size_t sb, std::size_t eb) {
    return gv::CandidateSet(ag, gv::SeedSet::FromNodes(ag, seeds), v, Options(model, sb, eb));
  }, py::arg("ag"), py::arg("seeds"), py::arg("v"), posterior, search_bound, exact_bound);
  m.def("privacy_function_point", [](const gv::AnonymizedGraph& ag, std::size_t lambda,
                                     const std::string& model, std::size_t sb, std::size_t eb) {
    return gv::PrivacyFunctionPoint(ag, lambda, Options(model, sb, eb));
  }, py::arg("ag"), py::arg("lam"), posterior, search_bound, exact_bound);
  m.def("node_tolerance", [](const gv::AnonymizedGraph& ag, gv::NodeId v, const std::string& model,
                             std::size_t sb, std::size_t eb) {
    return gv::NodeTolerance(ag, v, Options(model, sb, eb));
  }, py::arg("ag"), py::arg("v"), posterior, search_bound, exact_bound);
  m.def("mechanism_tolerance", [](const gv::AnonymizedGraph& ag, const std::string& model,
                                  std::size_t sb, std::size_t eb) {
    return gv::MechanismTolerance(ag, Options(model, sb, eb));
  }, py::arg("ag"), posterior, search_bound, exact_bound);
  m.def("_report_json", [](const gv::AnonymizedGraph& ag, const std::string& model,
                           std::size_t sb, std::size_t eb) {
    return gv::ReportToJson(gv::FullReport(ag, Options(model, sb, eb))).dump();
  }, py::arg("ag"), posterior, search_bound, exact_bound);

  m.def("_exact_attack_json", [](const gv::AnonymizedGraph& ag, const std::vector<gv::NodeId>& seeds,
                                 const std::string& model) {
    return gv::AttackResultToJson(
               gv::SeedAttackExact(ag, gv::SeedSet::FromNodes(ag, seeds), Options(model, 24, 12)))
        .dump();
  }, py::arg("ag"), py::arg("seeds"), posterior);
  m.def("_percolation_attack_json", [](const gv::AnonymizedGraph& ag,
                                       const std::vector<gv::NodeId>& seeds, std::size_t threshold) {
    return gv::AttackResultToJson(
               gv::SeedAttackPercolation(ag, gv::SeedSet::FromNodes(ag, seeds), threshold))
        .dump();
  }, py::arg("ag"), py::arg("seeds"), py::arg("threshold") = std::size_t{1});
  m.def("_degree_attack_json", [](const gv::AnonymizedGraph& ag) {
    return gv::AttackResultToJson(gv::DegreeAttack(ag)).dump();
  }, py::arg("ag"));

  m.def("_routing_check_json", &CheckJson, py::arg("ag"));
  m.def("_reference_fixtures_json", [](std::optional<std::string> tamper) {
    gv::FixtureOptions options;
    options.tamper = tamper;
    return gv::FixturesToJson(gv::RunReferenceFixtures(options)).dump(2);
  }, py::arg("tamper") = py::none());
}
