"""Type A_n: the C-table, the highest weight vector and the Xi' forms.

Coordinates are addressed by double indices: ``(j; i)`` on the positive side
is position ``(j-1)n + i`` and ``(-j; i)`` on the negative side is
``-jn + i - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import accumulate
from typing import Iterator, Sequence

from .cartan import Weight
from .crystal import sigma
from .forms import FormFamily, FormSet, LinearForm, generate, index_window, s_bar
from .sequences import FinSuppVector, IotaSequence, di_neg, di_pos, iota_a


@dataclass(frozen=True)
class LambdaA:
    """Weight with lam_1..lam_{i0} > 0 and lam_{i0+1}..lam_n <= 0."""

    weight: Weight
    i0: int

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> LambdaA:
        w = Weight(tuple(coeffs))
        i0 = 0
        while i0 < len(w) and w.coeffs[i0] > 0:
            i0 += 1
        if any(c > 0 for c in w.coeffs[i0:]):
            raise ValueError(f"{w} does not have the sign pattern (+,...,+,<=0,...,<=0)")
        return cls(w, i0)

    @property
    def n(self) -> int:
        return len(self.weight)

    def __getitem__(self, i: int) -> int:
        return self.weight[i]


def nested_plus(rs: Sequence[int]) -> int:
    """``r_1 + (r_2 + (... + (r_n)_+ ...)_+)_+`` by a right fold."""
    if not rs:
        raise ValueError("need at least one term")
    acc = rs[-1]
    for r in reversed(rs[:-1]):
        acc = r + max(0, acc)
    return acc


def max_prefix_sum(rs: Sequence[int]) -> int:
    if not rs:
        raise ValueError("need at least one term")
    return max(accumulate(rs))


def c_table(lam: LambdaA, j: int, i: int) -> int:
    n = lam.n
    if not (1 <= j <= i <= n):
        return 0
    return max(0, nested_plus([-lam[t] for t in range(i - j + 1, n - j + 2)]))


def _x(n: int, a: int, b: int) -> int | None:
    """Position of the double-indexed coordinate ``x_{a;b}``; None if b is out of range."""
    if not 1 <= b <= n:
        return None
    return di_pos(n, a, b) if a > 0 else di_neg(n, -a, b)


def hwv_a(lam: LambdaA) -> FinSuppVector:
    n = lam.n
    entries = {di_neg(n, j, i): -c_table(lam, j, i) for j in range(1, n + 1) for i in range(1, n + 1)}
    return FinSuppVector.from_dict(entries, lam.weight)


def xi_prime_seeds_a(lam: LambdaA, w: int) -> list[LinearForm]:
    """Seeds ``x_{-j;i} + C_{-j;i}`` for every negative position down to ``-w``."""
    n = lam.n
    seeds = []
    for j in range(1, w // n + 2):
        for i in range(1, n + 1):
            k = di_neg(n, j, i)
            if k >= -w:
                seeds.append(LinearForm.coordinate(k, 1, c_table(lam, j, i)))
    return seeds


def generate_xi_prime_a(lam: LambdaA, w: int, depth: int, all_indices: bool = True) -> FormSet:
    """Close the ``x_{-j;i} + C_{-j;i}`` seeds under S_k.

    With ``all_indices=False`` only negative k are used, which yields a
    strictly smaller family (the explicit phi^(mu) forms need positive k).
    """
    iota = iota_a(lam.n)
    reach = w + depth * iota.period
    lo = -reach
    hi = reach if all_indices else -1
    return generate(iota, lam.weight, xi_prime_seeds_a(lam, w), index_window(lo, hi), depth, FormFamily.XI_PRIME_A)


def admissible_partitions(n: int, i: int) -> Iterator[tuple[int, ...]]:
    """All ``mu`` with ``n-i+1 >= mu_1 >= ... >= mu_i >= 0``."""

    def rec(prefix, cap, left):
        if left == 0:
            yield tuple(prefix)
            return
        for m in range(cap, -1, -1):
            yield from rec(prefix + [m], m, left - 1)

    yield from rec([], n - i + 1, i)


def is_admissible(n: int, i: int, mu: Sequence[int]) -> bool:
    return (
        len(mu) == i
        and all(mu[t] >= mu[t + 1] for t in range(i - 1))
        and (i == 0 or (n - i + 1 >= mu[0] and mu[-1] >= 0))
    )


def _theta(v: int) -> int:
    return 1 if v >= 0 else 0


def phi_mu(lam: LambdaA, j: int, i: int, mu: Sequence[int], mode: str = "composite") -> LinearForm:
    """The form obtained from ``x_{-j;i}`` by the S-word indexed by ``mu``.

    The k-th block of the word rewrites at ``(-j+k-theta(j-k); i-k+1)``,
    ``(...; i-k+2)``, up to ``(...; i-k+mu_k)``; blocks are applied for
    k = 1, ..., i in order.  ``mode="explicit"`` builds the closed form.
    """
    n = lam.n
    if not is_admissible(n, i, mu):
        raise ValueError(f"{tuple(mu)} is not {i}-admissible for n={n}")
    if mode == "composite":
        iota = iota_a(n)
        form = LinearForm.coordinate(di_neg(n, j, i))
        for k in range(1, i + 1):
            a = -j + k - _theta(j - k)
            for b in range(i - k + 1, i - k + mu[k - 1] + 1):
                form = s_bar(iota, lam.weight, form, _x(n, a, b))
        return form
    if mode == "explicit":
        coeffs: dict[int, int] = {}
        for k in range(1, i + 1):
            m = mu[k - 1]
            for a, b, s in (
                (-j + k - _theta(j - k), i - k + 1 + m, 1),
                (-j + k + 1 - _theta(j - k - 1), i - k + m, -1),
            ):
                pos = _x(n, a, b)
                if pos is not None:
                    coeffs[pos] = coeffs.get(pos, 0) + s
        mu_j = mu[j - 1] if j <= i else 0
        constant = sum(lam[t] for t in range(i - j + 1, i - j + mu_j + 1))
        return LinearForm.make(coeffs, constant)
    raise ValueError("mode must be 'composite' or 'explicit'")


def d_value_a(lam: LambdaA, j: int, i: int) -> int:
    iota = iota_a(lam.n)
    return sigma(hwv_a(lam), iota, di_neg(lam.n, j, i)) + c_table(lam, j, i)


def sign_pattern_grid(n: int, lo: int = -3, hi: int = 3) -> list[LambdaA]:
    """Every weight with entries in ``[lo, hi]`` obeying the sign pattern."""
    out = []

    def rec(prefix, allow_positive):
        if len(prefix) == n:
            out.append(LambdaA.from_coeffs(prefix))
            return
        for v in range(lo, hi + 1):
            if v > 0 and not allow_positive:
                continue
            rec(prefix + [v], allow_positive and v > 0)

    rec([], True)
    return out


def a_iota(lam: LambdaA) -> IotaSequence:
    return iota_a(lam.n)
