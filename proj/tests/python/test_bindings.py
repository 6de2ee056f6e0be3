import math

import pytest

import cyclemod as cm


def test_k4_spectrum_and_witness():
    k4 = cm.complete_graph(4)
    assert cm.residue_spectrum(k4, 3) == [0, 1]
    assert cm.has_cycle_mod(k4, 2, 3) is None
    w = cm.has_cycle_mod(k4, 1, 3)
    assert len(w) == 4


def test_graph6_round_trip():
    p = cm.petersen_graph()
    assert cm.Graph.from_graph6(p.graph6()) == p
    assert p.is_cubic() and p.connectivity() == 3
    assert cm.residue_spectrum(p, 3) == [0, 2]


def test_path_lengths_and_pairs():
    assert cm.xy_path_lengths(cm.complete_graph(4), 0, 1) == [1, 2, 3]
    pair = cm.find_pair_diff12(cm.complete_graph(4), 0, 1)
    assert pair["difference"] in (1, 2)
    assert cm.find_pair_diff12(cm.cycle_graph(6), 0, 3) is None


def test_erdos_szekeres():
    idx, direction = cm.erdos_szekeres([3, 1, 2, 5, 4], 3, 2)
    assert direction == "increasing" and len(idx) == 3


def test_theta_and_induced_cycle():
    t = cm.shortest_theta(cm.complete_graph(4), 0, 1)
    assert sorted(len(leg) - 1 for leg in t["legs"]) == [1, 2, 2]
    g = cm.random_cubic_3connected(12, seed=7)
    s, t = g.edges()[0]
    r = max(set(range(g.n)) - {s, t})
    c = cm.nonseparating_induced_cycle(g, s, t, r)
    assert s in c and t in c and r not in c


def test_errors_are_typed():
    with pytest.raises(cm.PreconditionError):
        cm.nonseparating_induced_cycle(cm.cycle_graph(5), 0, 2, 3)
    with pytest.raises(cm.CyclemodError):
        cm.Graph.from_graph6("~")


def test_counterexample_and_bounds():
    r = cm.build_counterexample(9, 12, 1)
    assert r["certified"] and r["residue_counts"][9] == 0
    b = cm.bounds(3)
    assert b["18k^2"] == 162 and b["3k^4"] == 243 and b["chain_holds"]


def test_kgood_search_shape():
    r = cm.kgood_search(cm.petersen_graph(), 2)
    assert set(r) >= {"certificate", "census", "case_report", "source"}
    assert r["certificate"] is not None
    w = dict(r["certificate"])
    w["host"] = {"n": 10, "edges": [list(e) for e in cm.petersen_graph().edges()]}
    assert cm.validate_witness(w, 2)["valid"]
