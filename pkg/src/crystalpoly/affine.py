"""Affine A_1^(1) at positive level: C_{-k}, the highest weight vector and the phi^(l) forms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cartan import Weight
from .crystal import sigma
from .forms import FormFamily, FormSet, LinearForm, generate, generate_xi, index_window, s_bar
from .sequences import FinSuppVector, iota_affine


@dataclass(frozen=True)
class LambdaAffine:
    """``lam_1 > 0``, ``lam_2 <= 0`` and ``lam_1 + lam_2 > 0``."""

    weight: Weight

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> LambdaAffine:
        if len(coeffs) != 2:
            raise ValueError("affine A_1 weights have two coordinates")
        l1, l2 = coeffs
        if not (l1 > 0 and l2 <= 0 and l1 + l2 > 0):
            raise ValueError(f"({l1},{l2}) is not a positive level weight with lam_1 > 0 >= lam_2")
        return cls(Weight((l1, l2)))

    @property
    def l1(self) -> int:
        return self.weight[1]

    @property
    def l2(self) -> int:
        return self.weight[2]


def c_k(lam: LambdaAffine, k: int) -> int:
    if k < 1:
        raise ValueError("k must be >= 1")
    return max(0, -(k - 1) * lam.l1 - k * lam.l2)


def c_cutoff(lam: LambdaAffine) -> int:
    """Largest k with C_{-k} > 0, or 0 when all vanish.

    ``-(k-1)l1 - k l2 > 0`` iff ``k (l1 + l2) < l1``.
    """
    level = lam.l1 + lam.l2
    return (lam.l1 - 1) // level


def hwv_affine(lam: LambdaAffine) -> FinSuppVector:
    entries = {-k: -c_k(lam, k) for k in range(1, c_cutoff(lam) + 1)}
    return FinSuppVector.from_dict(entries, lam.weight)


def phi_l(lam: LambdaAffine, k: int, l: int, mode: str = "composite") -> LinearForm:
    """Image of ``x_{-k}`` under the first ``l`` letters of
    S_{-k}, S_{-k+1}, ..., S_{-1}, S_1, S_2, ...  (applied in that order)."""
    if k < 1 or l < 0:
        raise ValueError("need k >= 1 and l >= 0")
    if mode == "composite":
        iota = iota_affine()
        word = list(range(-k, 0)) + list(range(1, l - k + 1))
        form = LinearForm.coordinate(-k)
        for idx in word[:l]:
            form = s_bar(iota, lam.weight, form, idx)
        return form
    if mode == "explicit":

        def theta(v):
            return 1 if v >= 0 else 0

        p = l - k + theta(l - k)
        q = l - k + 1 + theta(l - k + 1)
        if l >= k:
            constant = (k - 1) * lam.l1 + k * lam.l2
        elif l == k - 1:
            constant = (k - 1) * lam.l1
        else:
            constant = 0
        return LinearForm.make({p: l + 1, q: -l} if l else {p: 1}, constant)
    raise ValueError("mode must be 'composite' or 'explicit'")


def d_k(lam: LambdaAffine, k: int) -> int:
    return sigma(hwv_affine(lam), iota_affine(), -k) + c_k(lam, k)


def xi_prime_seeds_affine(lam: LambdaAffine, w: int) -> list[LinearForm]:
    return [LinearForm.coordinate(-k, 1, c_k(lam, k)) for k in range(1, w + 1)]


def generate_xi_prime_affine(lam: LambdaAffine, w: int, depth: int, all_indices: bool = True) -> FormSet:
    """Close the ``x_{-k} + C_{-k}`` seeds under S_k (negative k only if ``all_indices`` is off)."""
    reach = w + depth * 2
    return generate(
        iota_affine(), lam.weight, xi_prime_seeds_affine(lam, w), index_window(-reach, reach if all_indices else -1), depth,
        FormFamily.XI_PRIME_AFFINE,
    )


def xi_restricted_seeds(w: int) -> tuple[list[LinearForm], frozenset[int]]:
    """Seeds ``x_j``, ``-x_{-j}`` for ``2 <= j <= w``, plus the excluded rewrite indices."""
    if w < 1:
        raise ValueError("w must be >= 1")
    seeds = [LinearForm.coordinate(j) for j in range(2, w + 1)]
    seeds += [LinearForm.coordinate(-j, -1) for j in range(2, w + 1)]
    return seeds, frozenset({1, -1})


def generate_xi_restricted(lam: LambdaAffine, w: int, depth: int) -> FormSet:
    _, banned = xi_restricted_seeds(max(w, 1))
    return generate_xi(iota_affine(), lam.weight, w, depth, skip=banned)


def affine_grid(l1_range=range(1, 5), l2_range=range(-3, 1)) -> list[LambdaAffine]:
    return [
        LambdaAffine.from_coeffs((a, b)) for a in l1_range for b in l2_range if a + b > 0
    ]
