#ifndef GRAPHVEIL_SERIALIZATION_H_
#define GRAPHVEIL_SERIALIZATION_H_

#include <filesystem>
#include <string>

#include "json.hpp"

#include "graphveil/attacks.h"
#include "graphveil/mechanisms.h"
#include "graphveil/metrics.h"
#include "graphveil/routing.h"

namespace graphveil {

// Sidecar describing an anonymized graph. Node references use graph labels,
// so a published file keeps its meaning after remapping on load:
//
//   {
//     "format": "graphveil-sidecar/1",
//     "mechanism": "k-fold-replication",
//     "k": 2,                         // copy-based mechanisms
//     "params": {"a": "7/2", "m": 3, "p": ["1", "1/3"], "q": "0",
//                "correction": false},  // degree-equalize
//     "sigma": [[0, 3], [1, 1]],      // original label -> published label
//     "rng_seed": 42,                 // or null
//     "original": {"nodes": [0, 1], "edges": [[0, 1]]}
//   }
//
// Keys are emitted in sorted order.
nlohmann::json SidecarToJson(const AnonymizedGraph& ag);

// `published` is the graph loaded from the companion edge list. Checks that
// sigma is an injection into it; it does not enforce the mechanism
// invariants, so corrupted inputs can still be inspected.
AnonymizedGraph SidecarFromJson(const nlohmann::json& sidecar,
                                Graph published);

// <prefix>.edges and <prefix>.json, each written atomically.
void SaveAnonymized(const AnonymizedGraph& ag, const std::filesystem::path& prefix);
AnonymizedGraph LoadAnonymized(const std::filesystem::path& prefix);

std::filesystem::path EdgesPath(const std::filesystem::path& prefix);
std::filesystem::path SidecarPath(const std::filesystem::path& prefix);

nlohmann::json MechanismParamsToJson(const MechanismParams& params);
MechanismParams MechanismParamsFromJson(const nlohmann::json& j);

// {cost, edge_overhead, model, privacy_function: [{lambda, bits, exact}],
//  tolerance_per_node: [...], tolerance_exact, mechanism_tolerance}
nlohmann::json ReportToJson(const PrivacyReport& report);

nlohmann::json AttackResultToJson(const AttackResult& result);

// {rows: [{seed_size, trial, attack, correct, incorrect, abstained, rate}],
//  summary: [{seed_size, attack, mean_rate, min_rate, max_rate}]}
nlohmann::json ExperimentToJson(const ExperimentTable& table);
// Rows only, with a header line.
std::string ExperimentToCsv(const ExperimentTable& table);

// {check, passed, witness?}
nlohmann::json RoutingCheckToJson(const RoutingCheck& check);

}  // namespace graphveil

#endif  // GRAPHVEIL_SERIALIZATION_H_
