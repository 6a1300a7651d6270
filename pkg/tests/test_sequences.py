import json

import pytest
from hypothesis import given, strategies as st

from crystalpoly.cartan import Weight, finite_a
from crystalpoly.sequences import (
    FinSuppVector,
    di_neg,
    di_neg_inv,
    di_pos,
    di_pos_inv,
    iota_a,
    iota_affine,
    iota_from_pattern,
    support_window,
)


def test_colors():
    assert iota_a(2).color_at(1) == 1
    assert iota_a(2).color_at(-1) == 2
    assert iota_affine().color_at(-1) == 2
    assert iota_affine().color_at(1) == 1
    assert iota_a(3).color_at(4) == 1
    with pytest.raises(ValueError):
        iota_a(2).color_at(0)


@pytest.mark.parametrize("iota,k,kp,km", [
    (iota_affine(), 1, 3, -2),
    (iota_affine(), -1, 2, -3),
    (iota_a(2), -2, 1, -4),
    (iota_a(2), 2, 4, -1),
])
def test_neighbours(iota, k, kp, km):
    assert iota.k_plus(k) == kp
    assert iota.k_minus(k) == km


@pytest.mark.parametrize("iota", [iota_a(1), iota_a(2), iota_a(3), iota_affine()])
def test_k_plus_minus_are_inverse(iota):
    for k in range(-30, 31):
        if k == 0:
            continue
        kp = iota.k_plus(k)
        assert kp != 0 and iota.color_at(kp) == iota.color_at(k)
        assert iota.k_minus(kp) == k
        assert all(t == 0 or iota.color_at(t) != iota.color_at(k) for t in range(k + 1, kp))


def test_one_sided_neighbours_stop_at_zero():
    iota = iota_affine()
    assert iota.k_plus_one_sided(-1) == 0
    assert iota.k_minus_one_sided(1) == 0
    assert iota.k_minus_one_sided(2) == 0
    assert iota.k_plus_one_sided(-3) == -1


def test_adjacency_condition():
    assert iota_a(2).adjacent_colors_differ()
    assert iota_affine().adjacent_colors_differ()
    # rank one has a single color, so the condition cannot hold
    assert not iota_a(1).adjacent_colors_differ()
    assert not iota_from_pattern(finite_a(2), (1, 2, 2), (2, 2, 1)).adjacent_colors_differ()


def test_double_indices():
    assert di_pos(2, 1, 1) == 1
    assert di_pos(3, 2, 3) == 6
    assert di_pos_inv(2, 5) == (3, 1)
    assert di_neg(2, 1, 2) == -1
    assert di_neg(2, 1, 1) == -2
    assert di_neg(2, 2, 2) == -3


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_double_index_bijection(n):
    for k in range(1, 40):
        assert di_pos(n, *di_pos_inv(n, k)) == k
        assert di_neg(n, *di_neg_inv(n, -k)) == -k
    iota = iota_a(n)
    for j in range(1, 5):
        for i in range(1, n + 1):
            assert iota.color_at(di_pos(n, j, i)) == i
            assert iota.color_at(di_neg(n, j, i)) == i


def test_vector_is_canonical():
    lam = Weight((1, 0))
    x = FinSuppVector.from_dict({3: 0, -1: -2, 2: 1}, lam)
    assert x.entries == ((-1, -2), (2, 1))
    assert x == FinSuppVector.from_dict({2: 1, -1: -2}, lam)
    assert x.bump(2, -1) == FinSuppVector.from_dict({-1: -2}, lam)
    with pytest.raises(ValueError):
        FinSuppVector.from_dict({0: 1}, lam)
    with pytest.raises(ValueError):
        FinSuppVector(((1, 0),), lam)


def test_vector_json():
    x = FinSuppVector.from_dict({-1: -1, 4: 2}, Weight((2, -1)))
    text = x.to_json()
    assert json.loads(text) == {"entries": {"-1": -1, "4": 2}, "lambda": [2, -1]}
    assert FinSuppVector.from_json(text) == x
    with pytest.raises(ValueError):
        FinSuppVector.from_json('{"entries": {"1": 0}, "lambda": [1]}')


@given(st.dictionaries(st.integers(-20, 20).filter(bool), st.integers(-5, 5), max_size=6))
def test_json_round_trip(d):
    x = FinSuppVector.from_dict(d, Weight((1, -1)))
    assert FinSuppVector.from_json(x.to_json()) == x
    assert hash(FinSuppVector.from_json(x.to_json())) == hash(x)


def test_support_window():
    lam = Weight((2, -1))
    lo, hi = support_window(FinSuppVector.zero(lam), iota_affine())
    assert lo < 0 < hi and hi - lo >= 2
    lo, hi = support_window(FinSuppVector.from_dict({-1: -1}, lam), iota_affine())
    assert lo <= -3 and hi >= 2
    lo, hi = support_window(FinSuppVector.from_dict({-5: 1, 3: 1}, Weight((0, 0))), iota_a(2))
    assert lo <= -7 and hi >= 5
