#include "graphveil/serialization.h"

#include <algorithm>
#include <sstream>
#include <utility>

#include "graphveil/errors.h"
#include "graphveil/io.h"

namespace graphveil {
namespace {

using nlohmann::json;

constexpr std::string_view kSidecarFormat = "graphveil-sidecar/1";

json OriginalToJson(const Graph& g) {
  json nodes = json::array();
  for (NodeId v = 0; v < g.num_nodes(); ++v) nodes.push_back(g.label(v));
  json edges = json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back(json::array({g.label(e.u), g.label(e.v)}));
  }
  return json{{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

Graph OriginalFromJson(const json& j) {
  std::vector<std::uint64_t> labels = j.at("nodes").get<std::vector<std::uint64_t>>();
  std::vector<std::uint64_t> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != labels ||
      std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InconsistentData("original nodes must be strictly increasing");
  }
  const auto dense = [&labels](std::uint64_t label) {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) {
      throw InconsistentData("original edge references undeclared node " +
                             std::to_string(label));
    }
    return static_cast<NodeId>(it - labels.begin());
  };
  std::vector<Edge> edges;
  for (const json& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw InconsistentData("original edge must be a pair");
    }
    const NodeId u = dense(e[0].get<std::uint64_t>());
    const NodeId v = dense(e[1].get<std::uint64_t>());
    if (u == v) throw InconsistentData("original edge is a self-loop");
    edges.emplace_back(u, v);
  }
  std::vector<NodeKind> kinds(labels.size(), NodeKind::kReal);
  return Graph(std::move(kinds), edges, std::move(labels));
}

Rational RationalField(const json& j, const char* key) {
  const json& value = j.at(key);
  if (value.is_string()) return ParseRational(value.get<std::string>());
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  throw InconsistentData(std::string("field ") + key +
                         " must be a rational string");
}

}  // namespace

std::filesystem::path EdgesPath(const std::filesystem::path& prefix) {
  return std::filesystem::path(prefix.string() + ".edges");
}

std::filesystem::path SidecarPath(const std::filesystem::path& prefix) {
  return std::filesystem::path(prefix.string() + ".json");
}

json MechanismParamsToJson(const MechanismParams& params) {
  json p = json::array();
  for (const Rational& r : params.p) p.push_back(FormatRational(r));
  return json{{"a", FormatRational(params.a)},
              {"m", params.m},
              {"p", std::move(p)},
              {"q", FormatRational(params.q)},
              {"correction", params.correction}};
}

MechanismParams MechanismParamsFromJson(const json& j) {
  MechanismParams params;
  params.a = RationalField(j, "a");
  params.m = j.at("m").get<std::size_t>();
  for (const json& r : j.at("p")) {
    params.p.push_back(r.is_string() ? ParseRational(r.get<std::string>())
                                     : Rational(r.get<std::int64_t>()));
  }
  params.q = RationalField(j, "q");
  params.correction = j.value("correction", false);
  return params;
}

json SidecarToJson(const AnonymizedGraph& ag) {
  json out;
  out["format"] = kSidecarFormat;
  out["mechanism"] = MechanismName(ag.mechanism);
  if (auto* d = std::get_if<DegreeEqualize>(&ag.mechanism)) {
    out["params"] = MechanismParamsToJson(d->params);
  } else if (!std::holds_alternative<IdentityMechanism>(ag.mechanism)) {
    out["k"] = ReplicaCount(ag.mechanism);
  }
  json sigma = json::array();
  for (auto [v, w] : ag.sigma.pairs()) {
    sigma.push_back(json::array({ag.original.label(v), ag.published.label(w)}));
  }
  out["sigma"] = std::move(sigma);
  out["rng_seed"] = ag.rng_seed ? json(*ag.rng_seed) : json(nullptr);
  out["original"] = OriginalToJson(ag.original);
  return out;
}

AnonymizedGraph SidecarFromJson(const json& sidecar, Graph published) {
  try {
    if (sidecar.at("format").get<std::string>() != kSidecarFormat) {
      throw InconsistentData("unsupported sidecar format");
    }
    const std::string name = sidecar.at("mechanism").get<std::string>();
    Mechanism mechanism;
    if (name == "identity") {
      mechanism = IdentityMechanism{};
    } else if (name == "naive-k-copy") {
      mechanism = NaiveKCopy{sidecar.at("k").get<std::size_t>()};
    } else if (name == "k-fold-replication") {
      mechanism = KFoldReplication{sidecar.at("k").get<std::size_t>()};
    } else if (name == "degree-equalize") {
      mechanism = DegreeEqualize{MechanismParamsFromJson(sidecar.at("params"))};
    } else {
      throw InconsistentData("unknown mechanism '" + name + "'");
    }

    Graph original = OriginalFromJson(sidecar.at("original"));
    Mapping sigma(original.num_nodes(), published.num_nodes());
    for (const json& pair : sidecar.at("sigma")) {
      if (!pair.is_array() || pair.size() != 2) {
        throw InconsistentData("sigma entry must be a pair");
      }
      auto v = original.FindLabel(pair[0].get<std::uint64_t>());
      auto w = published.FindLabel(pair[1].get<std::uint64_t>());
      if (!v || !w) {
        throw InconsistentData("sigma references a node outside the graphs");
      }
      if (sigma.Contains(*v) || sigma.Preimage(*w)) {
        throw InconsistentData("sigma is not injective");
      }
      sigma.Set(*v, *w);
    }
    std::optional<std::uint64_t> rng_seed;
    if (sidecar.contains("rng_seed") && !sidecar.at("rng_seed").is_null()) {
      rng_seed = sidecar.at("rng_seed").get<std::uint64_t>();
    }
    return AnonymizedGraph{std::move(original), std::move(published),
                           std::move(sigma), std::move(mechanism), rng_seed};
  } catch (const json::exception& e) {
    throw InconsistentData(std::string("malformed sidecar: ") + e.what());
  }
}

void SaveAnonymized(const AnonymizedGraph& ag,
                    const std::filesystem::path& prefix) {
  const std::string sidecar = SidecarToJson(ag).dump(2) + "\n";
  WriteFileAtomically(EdgesPath(prefix), FormatEdgeList(ag.published));
  WriteFileAtomically(SidecarPath(prefix), sidecar);
}

AnonymizedGraph LoadAnonymized(const std::filesystem::path& prefix) {
  Graph published = LoadEdgeList(EdgesPath(prefix));
  json sidecar;
  try {
    sidecar = json::parse(ReadFile(SidecarPath(prefix)));
  } catch (const json::parse_error& e) {
    throw InconsistentData("sidecar is not valid JSON: " +
                           std::string(e.what()));
  }
  return SidecarFromJson(sidecar, std::move(published));
}

json ReportToJson(const PrivacyReport& report) {
  json points = json::array();
  for (const PrivacyPoint& p : report.privacy_function) {
    points.push_back(
        json{{"lambda", p.lambda}, {"bits", p.bits}, {"exact", p.exact}});
  }
  return json{{"cost", report.cost},
              {"edge_overhead", report.edge_overhead},
              {"model", PosteriorModelName(report.model)},
              {"privacy_function", std::move(points)},
              {"tolerance_per_node", report.tolerance_per_node},
              {"mechanism_tolerance", report.mechanism_tolerance},
              {"tolerance_exact", report.tolerance_exact}};
}

json AttackResultToJson(const AttackResult& result) {
  json recovered = json::array();
  for (auto [v, w] : result.recovered.pairs()) {
    recovered.push_back(json::array({v, w}));
  }
  return json{{"correct", result.correct},
              {"incorrect", result.incorrect},
              {"abstained", result.abstained},
              {"reidentification_rate",
               FormatRational(result.reidentification_rate)},
              {"recovered", std::move(recovered)}};
}

json ExperimentToJson(const ExperimentTable& table) {
  json rows = json::array();
  for (const ExperimentRow& r : table.rows) {
    rows.push_back(json{{"seed_size", r.seed_size},
                        {"trial", r.trial},
                        {"attack", r.attack},
                        {"correct", r.correct},
                        {"incorrect", r.incorrect},
                        {"abstained", r.abstained},
                        {"rate", r.rate}});
  }
  json summary = json::array();
  for (const ExperimentSummary& s : table.summary) {
    summary.push_back(json{{"seed_size", s.seed_size},
                           {"attack", s.attack},
                           {"mean_rate", s.mean_rate},
                           {"min_rate", s.min_rate},
                           {"max_rate", s.max_rate}});
  }
  return json{{"rows", std::move(rows)}, {"summary", std::move(summary)}};
}

std::string ExperimentToCsv(const ExperimentTable& table) {
  std::ostringstream out;
  out << "seed_size,trial,attack,correct,incorrect,abstained,rate\n";
  for (const ExperimentRow& r : table.rows) {
    out << r.seed_size << ',' << r.trial << ',' << r.attack << ','
        << r.correct << ',' << r.incorrect << ',' << r.abstained << ','
        << json(r.rate).dump() << '\n';
  }
  return out.str();
}

json RoutingCheckToJson(const RoutingCheck& check) {
  json out{{"check", check.check}, {"passed", check.passed}};
  if (check.witness) {
    out["witness"] = json::array({check.witness->first, check.witness->second});
  }
  return out;
}

}  // namespace graphveil
