from fractions import Fraction
import math

import pytest

import graphveil as gv


def test_replicated_triangle():
    ag = gv.replicate(gv.complete_graph(3), 2)
    assert ag.cost == 3
    assert ag.published.num_nodes == 6
    assert ag.published.num_edges == 12
    assert gv.mechanism_tolerance(ag) == 2
    assert [gv.privacy_function_point(ag, lam) for lam in range(3)] == [1.0, 1.0, 1.0]
    assert gv.report(ag)["mechanism_tolerance"] == 2


def test_naive_paw_attack():
    ag = gv.naive_copies(gv.paw_graph(), 2, rng_seed=3)
    assert ag.cost == 4
    for s in range(4):
        assert gv.exact_attack(ag, [s])["reidentification_rate"] == 1


def test_degree_equalize():
    k3 = gv.complete_graph(3)
    assert gv.expected_degrees(k3, 3) == [Fraction(3)] * 4
    ag = gv.degree_equalize(k3, "3", rng_seed=7)
    assert ag.published.edges == gv.complete_graph(4).edges
    assert ag.published.kinds == ["real", "real", "real", "fake"]
    assert gv.degree_attack(ag)["reidentification_rate"] == 0
    assert gv.routing_check(ag)["passed"]
    params = gv.degree_equalize_params(gv.path_graph(3), Fraction(5, 2), correction=True)
    assert params["m"] == 2 and params["q"] == Fraction(3, 4)


def test_errors_map_to_python():
    with pytest.raises(gv.InfeasibleTarget):
        gv.degree_equalize(gv.star_graph(5), 100)
    with pytest.raises(gv.InvalidK):
        gv.replicate(gv.path_graph(3), 1)
    with pytest.raises(gv.ParseError):
        gv.Graph.parse("0 0\n")
    assert issubclass(gv.SizeLimitExceeded, gv.GraphveilError)


def test_save_load_round_trip(tmp_path):
    g = gv.Graph.parse("10 20\n20 30\n")
    ag = gv.replicate(g, 3, rng_seed=5)
    ag.save(str(tmp_path / "x"))
    back = gv.load(str(tmp_path / "x"))
    assert back.sigma == ag.sigma
    assert back.original.labels == [10, 20, 30]
    assert gv.sidecar(back)["mechanism"] == "k-fold-replication"


def test_reference_fixtures():
    out = gv.reference_fixtures()
    assert out["failed"] == 0
    assert gv.reference_fixtures(out["fixtures"][0]["name"])["failed"] == 1


def test_random_graph_is_deterministic():
    a = gv.random_graph(8, "1/2", 11)
    assert a == gv.random_graph(8, Fraction(1, 2), 11)
    assert math.isclose(gv.privacy_function_point(gv.replicate(a, 2), 0), 1.0)
