import pytest

from crystalpoly.affine import (
    LambdaAffine,
    affine_grid,
    c_cutoff,
    c_k,
    d_k,
    generate_xi_prime_affine,
    generate_xi_restricted,
    hwv_affine,
    phi_l,
    xi_restricted_seeds,
)
from crystalpoly.crystal import is_highest_weight, sigma, weight_of
from crystalpoly.forms import LinearForm, s_bar
from crystalpoly.sequences import FinSuppVector, iota_affine

L = LambdaAffine.from_coeffs


def test_weight_validation():
    assert len(affine_grid()) == 10
    for bad in ((0, 0), (1, 1), (1, -1), (2, -3), (1, 2, 3)):
        with pytest.raises(ValueError):
            L(bad)


def test_c_examples():
    assert [c_k(L((2, -1)), k) for k in (1, 2, 3)] == [1, 0, 0]
    assert [c_k(L((3, -2)), k) for k in (1, 2, 3)] == [2, 1, 0]
    assert all(c_k(L((3, 0)), k) == 0 for k in range(1, 10))
    with pytest.raises(ValueError):
        c_k(L((2, -1)), 0)


def test_cutoff_is_exact():
    for lam in affine_grid():
        cut = c_cutoff(lam)
        assert all(c_k(lam, k) > 0 for k in range(1, cut + 1))
        assert all(c_k(lam, k) == 0 for k in range(cut + 1, 40))


def test_hwv_examples():
    iota = iota_affine()
    v = hwv_affine(L((2, -1)))
    assert v.as_dict() == {-1: -1}
    assert weight_of(v, iota).coeffs == (0, 1)
    v = hwv_affine(L((3, -2)))
    assert v.as_dict() == {-1: -2, -2: -1}
    assert weight_of(v, iota).coeffs == (1, 0)


def test_hwv_on_grid():
    iota = iota_affine()
    for lam in affine_grid():
        v = hwv_affine(lam)
        assert is_highest_weight(v, iota)
        assert weight_of(v, iota).is_dominant()
        assert all(sigma(v, iota, -k) <= 0 for k in range(1, 13))


def test_implication_62():
    for lam in affine_grid():
        for k in range(1, 13):
            if -(k - 1) * lam.l1 - k * lam.l2 <= 0:
                assert -k * lam.l1 - (k + 1) * lam.l2 <= 0


def test_d_examples():
    for lam in affine_grid():
        assert d_k(lam, 1) == -lam.l2
        assert d_k(lam, 2) == 2 * max(0, -lam.l2) - lam.l1
    lam = L((2, -1))
    assert (d_k(lam, 2), c_k(lam, 2)) == (0, 0)


@pytest.mark.parametrize("lam", affine_grid(), ids=str)
def test_phi_l_modes_agree(lam):
    for k in range(1, 7):
        for l in range(0, 9):
            assert phi_l(lam, k, l, "composite") == phi_l(lam, k, l, "explicit")


def test_phi_l_regimes():
    lam = L((3, -1))
    l1, l2 = 3, -1
    for k in range(2, 7):
        if k >= 2:
            assert phi_l(lam, k, k - 2) == LinearForm.make({-2: k - 1, -1: -(k - 2)})
        assert phi_l(lam, k, k - 1) == LinearForm.make({-1: k, 1: -(k - 1)}, (k - 1) * l1)
        assert phi_l(lam, k, k) == LinearForm.make({1: k + 1, 2: -k}, (k - 1) * l1 + k * l2)
        for l in range(0, 2 * k + 2):
            assert c_k(lam, k) + phi_l(lam, k, l).constant >= 0


def test_restricted_seeds():
    seeds, banned = xi_restricted_seeds(2)
    assert seeds == [LinearForm.coordinate(2), LinearForm.coordinate(-2, -1)]
    assert banned == frozenset({1, -1})
    assert all(f(FinSuppVector.zero(L((2, -1)).weight)) == 0 for f in generate_xi_restricted(L((2, -1)), 4, 0))
    lam = L((2, -1))
    assert s_bar(iota_affine(), lam.weight, LinearForm.coordinate(2), 2) in generate_xi_restricted(lam, 2, 1)
    with pytest.raises(ValueError):
        xi_restricted_seeds(0)


def test_xi_prime_constants_nonnegative():
    for lam in affine_grid():
        assert all(f.constant >= 0 for f in generate_xi_prime_affine(lam, 6, 4))
