import json

import pytest

from crystalpoly.cartan import Weight
from crystalpoly.crystal import e_tilde, weight_of
from crystalpoly.explorer import (
    bfs_component,
    component_by_height,
    enumerate_inequality_set,
    export_graph,
    find_highest_weights,
    height,
    in_box,
    make_setting,
    oracle_compare,
)
from crystalpoly.sequences import FinSuppVector, iota_a, iota_affine
from crystalpoly.type_a import LambdaA, hwv_a

from conftest import vec


def test_depth_zero(aff):
    g = bfs_component(vec({}, (2, -1)), aff, 0)
    assert len(g) == 1 and g.edges == []


def test_depth_one_affine(aff):
    g = bfs_component(vec({}, (2, -1)), aff, 1)
    zero, v, x1 = vec({}, (2, -1)), vec({-1: -1}, (2, -1)), vec({1: 1}, (2, -1))
    assert set(g.vertices) == {zero, v, x1}
    assert g.edges == [(zero, 1, x1), (v, 2, zero)]
    with pytest.raises(ValueError):
        bfs_component(zero, aff, -1)


def test_highest_weight_search(aff, a2):
    g = bfs_component(vec({}, (2, -1)), aff, 3)
    assert find_highest_weights(g) == [vec({-1: -1}, (2, -1))]
    lam = LambdaA.from_coeffs((1, -1))
    g = bfs_component(FinSuppVector.zero(lam.weight), a2, 3)
    assert find_highest_weights(g) == [hwv_a(lam)]
    g = bfs_component(vec({}, (1, 2)), a2, 3)
    assert find_highest_weights(g) == [vec({}, (1, 2))]


@pytest.mark.parametrize("iota,lam", [(iota_affine(), (3, -2)), (iota_a(3), (1, -1, 0))])
def test_graph_invariants(iota, lam):
    g = bfs_component(vec({}, lam), iota, 4)
    for u, i, v in g.edges:
        assert e_tilde(v, iota, i) == u
    for x in g.vertices:
        # lam - wt(x) = sum_k x_k alpha_{i_k}; each step moves one coordinate by one
        assert weight_of(x, iota) == _weight_from(x, iota, lam)
        assert sum(abs(v) for _, v in x.entries) <= g.distance[x] <= 4


def _weight_from(x, iota, lam):
    wt = Weight(lam)
    for k, v in x.entries:
        wt = wt - iota.cartan.simple_root(iota.color_at(k)).scale(v)
    return wt


def test_budget_flag(aff):
    g = bfs_component(vec({}, (2, -1)), aff, 6, budget=5)
    assert g.truncated and len(g) == 5


def test_export_is_stable(aff):
    g = bfs_component(vec({}, (2, -1)), aff, 1)
    dot = export_graph(g, "dot")
    assert dot == export_graph(bfs_component(vec({}, (2, -1)), aff, 1), "dot")
    text = dot.decode()
    assert text.count("[label=") == 5
    assert 'label="1"' in text and 'label="2"' in text
    obj = json.loads(export_graph(g, "json"))
    assert len(obj["vertices"]) == 3 and len(obj["edges"]) == 2
    assert export_graph(g, "json") == export_graph(g, "json")
    with pytest.raises(ValueError):
        export_graph(g, "png")


def test_empty_graph_export(aff):
    g = bfs_component(vec({}, (2, -1)), aff, 0)
    g.vertices, g.edges = [], []
    assert export_graph(g, "dot") == b"digraph crystal {\n}\n"


def test_height_pruned_search_matches_plain_bfs():
    s = make_setting("a1affine", (2, -1))
    g = component_by_height(s, 3)
    plain = bfs_component(FinSuppVector.zero(s.weight), s.iota, 8)
    assert {x for x in g.vertices if height(x, s) <= 3} == {x for x in plain.vertices if height(x, s) <= 3}


def test_bfs_points_lie_in_box_and_satisfy_forms():
    for kind, lam in (("a", (2, -1, 0)), ("a1affine", (3, -2))):
        s = make_setting(kind, lam)
        forms = s.forms(4, 3)
        for x in component_by_height(s, 3).vertices:
            if height(x, s) <= 3:
                assert in_box(x, s, 3)
                assert all(f(x) >= 0 for f in forms)


def test_enumeration_is_deterministic():
    s = make_setting("a", (1, -1))
    forms = s.forms(4, 3)
    assert enumerate_inequality_set(s, 2, forms) == enumerate_inequality_set(s, 2, forms)


@pytest.mark.parametrize("kind,lam", [("a1affine", (2, -1)), ("a", (1, -1))])
def test_oracle_examples(kind, lam):
    rep = oracle_compare(kind, lam, 3, 6, 5)
    assert rep.verdict == "equal"
    assert rep.missing_from_bfs == [] and rep.missing_from_ineq == []
    obj = json.loads(rep.to_json())
    assert obj["params"]["lambda"] == list(lam) and obj["verdict"] == "equal"


def test_oracle_small_truncation_never_drops_bfs_points():
    for w, depth in ((1, 0), (2, 1), (3, 2)):
        rep = oracle_compare("a1affine", (3, -2), 3, w, depth)
        assert rep.missing_from_ineq == []


def test_setting_validation():
    with pytest.raises(ValueError):
        make_setting("a", (1, -1), family="restricted")
    with pytest.raises(ValueError):
        make_setting("a", (-1, 1))
    with pytest.raises(ValueError):
        make_setting("a1affine", (1, -1))
    assert make_setting("a1affine", (2, -1)).restricted
    assert not make_setting("a1affine", (2, -1), family="unrestricted").restricted
