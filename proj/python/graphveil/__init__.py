"""Graph anonymization mechanisms, privacy metrics and attacks.

Rational values (targets, probabilities, rates) are passed and returned as
``fractions.Fraction`` or strings such as ``"7/2"``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Optional

from . import _graphveil as _core
from ._graphveil import (  # noqa: F401
    DEFAULT_RNG_SEED,
    AnonymizedGraph,
    DegenerateTarget,
    Graph,
    GraphveilError,
    InconsistentData,
    InfeasibleTarget,
    InvalidK,
    IoFailure,
    ParseError,
    SizeLimitExceeded,
    candidate_set,
    complete_graph,
    cycle_graph,
    edgeless_graph,
    load,
    mechanism_tolerance,
    naive_copies,
    node_tolerance,
    paw_graph,
    path_graph,
    privacy_function_point,
    publish_identity,
    replicate,
    star_graph,
)


def _ratio(x) -> str:
    return str(Fraction(x)) if not isinstance(x, str) else x


def _decode_rates(result: dict) -> dict:
    result["reidentification_rate"] = Fraction(result["reidentification_rate"])
    return result


def random_graph(n: int, p, seed: int) -> Graph:
    return _core.random_graph(n, _ratio(p), seed)


def degree_equalize(graph: Graph, a, correction: bool = False,
                    rng_seed: int = DEFAULT_RNG_SEED) -> AnonymizedGraph:
    return _core.degree_equalize(graph, _ratio(a), correction, rng_seed)


def degree_equalize_params(graph: Graph, a, correction: bool = False) -> dict:
    params = json.loads(_core._degree_equalize_params(graph, _ratio(a), correction))
    for key in ("a", "q"):
        params[key] = Fraction(params[key])
    params["p"] = [Fraction(x) for x in params["p"]]
    return params


def expected_degrees(graph: Graph, a, correction: bool = False) -> list[Fraction]:
    return [Fraction(x) for x in _core._expected_degrees(graph, _ratio(a), correction)]


def sidecar(ag: AnonymizedGraph) -> dict:
    return json.loads(ag._sidecar_json())


def report(ag: AnonymizedGraph, posterior: str = "disclosed-layout",
           search_bound: int = 24, exact_bound: int = 12) -> dict:
    return json.loads(_core._report_json(ag, posterior, search_bound, exact_bound))


def exact_attack(ag: AnonymizedGraph, seeds: Iterable[int] = (),
                 posterior: str = "disclosed-layout") -> dict:
    return _decode_rates(json.loads(_core._exact_attack_json(ag, list(seeds), posterior)))


def percolation_attack(ag: AnonymizedGraph, seeds: Iterable[int] = (),
                       threshold: int = 1) -> dict:
    return _decode_rates(json.loads(_core._percolation_attack_json(ag, list(seeds), threshold)))


def degree_attack(ag: AnonymizedGraph) -> dict:
    return _decode_rates(json.loads(_core._degree_attack_json(ag)))


def routing_check(ag: AnonymizedGraph) -> dict:
    return json.loads(_core._routing_check_json(ag))


def reference_fixtures(tamper: Optional[str] = None) -> dict:
    return json.loads(_core._reference_fixtures_json(tamper))
