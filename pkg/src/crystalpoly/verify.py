"""Exhaustive property sweeps over the default weight grids.

Each sweep returns a list of human readable violation strings; an empty list
means the property held everywhere it was checked.
"""

from __future__ import annotations

import random

from .affine import affine_grid, c_k, d_k, generate_xi_prime_affine, hwv_affine, phi_l
from .crystal import sigma
from .forms import check_pn
from .sequences import di_neg, iota_a, iota_affine
from .type_a import (
    admissible_partitions,
    c_table,
    d_value_a,
    generate_xi_prime_a,
    hwv_a,
    max_prefix_sum,
    nested_plus,
    phi_mu,
    sign_pattern_grid,
)

A_RANKS = (1, 2, 3)
AFFINE_K_MAX = 12


def a_grid() -> list:
    return [lam for n in A_RANKS for lam in sign_pattern_grid(n)]


def sweep_nested_plus(trials: int = 10_000, seed: int = 0) -> list[str]:
    rng = random.Random(seed)
    bad = []
    for _ in range(trials):
        rs = [rng.randint(-9, 9) for _ in range(rng.randint(1, 8))]
        if nested_plus(rs) != max_prefix_sum(rs):
            bad.append(f"nested_plus{rs} = {nested_plus(rs)} but max prefix sum is {max_prefix_sum(rs)}")
    return bad


def sweep_type_a_dichotomy() -> list[str]:
    """D <= 0 implies C = 0 and D > 0 implies D = C, over the type A grid."""
    bad = []
    for lam in a_grid():
        n = lam.n
        for j in range(1, n + 1):
            for i in range(1, n + 1):
                c, d = c_table(lam, j, i), d_value_a(lam, j, i)
                if (d <= 0 and c != 0) or (d > 0 and d != c):
                    bad.append(f"lam={lam.weight} (j;i)=(-{j};{i}): D={d}, C={c}")
    return bad


def sweep_affine_dichotomy(k_max: int = AFFINE_K_MAX) -> list[str]:
    bad = []
    for lam in affine_grid():
        for k in range(1, k_max + 1):
            c, d = c_k(lam, k), d_k(lam, k)
            if (d <= 0 and c != 0) or (d > 0 and d != c):
                bad.append(f"lam={lam.weight} k={k}: D={d}, C={c}")
    return bad


def sweep_csum() -> list[str]:
    """Partial-sum inequalities ``C_{-j;i} + lam_{i-j+1} + ... + lam_{i-j+m} >= 0``
    and the constant-term bound ``C + phi(0) >= 0`` for the explicit forms."""
    bad = []
    for lam in a_grid():
        n = lam.n
        for j in range(1, n + 1):
            for i in range(j, n + 1):
                c = c_table(lam, j, i)
                total = c
                for t in range(i - j + 1, n - j + 2):
                    total += lam[t]
                    if total < 0:
                        bad.append(f"lam={lam.weight} (j;i)=(-{j};{i}) partial sum to {t} is {total}")
        for j in range(1, n + 1):
            for i in range(1, n + 1):
                c = c_table(lam, j, i)
                for mu in admissible_partitions(n, i):
                    const = phi_mu(lam, j, i, mu, "explicit").constant
                    if c + const < 0:
                        bad.append(f"lam={lam.weight} (j;i)=(-{j};{i}) mu={mu}: C+phi(0)={c + const}")
    for lam in affine_grid():
        for k in range(1, AFFINE_K_MAX + 1):
            for l in range(0, 2 * k + 2):
                if c_k(lam, k) + phi_l(lam, k, l, "explicit").constant < 0:
                    bad.append(f"lam={lam.weight} k={k} l={l}: C+phi(0) < 0")
    return bad


def sweep_generated_constants(w: int = 6, depth: int = 4) -> list[str]:
    """Every generated Xi' form has a nonnegative constant term."""
    bad = []
    for lam in a_grid():
        for f in generate_xi_prime_a(lam, w, depth):
            if f.constant < 0:
                bad.append(f"lam={lam.weight}: {f}")
    for lam in affine_grid():
        for f in generate_xi_prime_affine(lam, w, depth):
            if f.constant < 0:
                bad.append(f"lam={lam.weight}: {f}")
    return bad


def sweep_hw_sigma() -> list[str]:
    """sigma at every negative position of v_lam is <= 0."""
    bad = []
    for lam in a_grid():
        n, v = lam.n, hwv_a(lam)
        iota = iota_a(n)
        for j in range(1, n + 2):
            for i in range(1, n + 1):
                s = sigma(v, iota, di_neg(n, j, i))
                if s > 0:
                    bad.append(f"lam={lam.weight} (j;i)=(-{j};{i}): sigma={s}")
    for lam in affine_grid():
        v = hwv_affine(lam)
        for k in range(1, AFFINE_K_MAX + 1):
            s = sigma(v, iota_affine(), -k)
            if s > 0:
                bad.append(f"lam={lam.weight} k={k}: sigma={s}")
    return bad


def sweep_pn(window: int = 8, depth: int = 5) -> list[str]:
    bad = []
    for name, iota in (("A_1", iota_a(1)), ("A_2", iota_a(2)), ("A_3", iota_a(3)), ("affine", iota_affine())):
        for side in ("positive", "negative"):
            for v in check_pn(iota, side, window, depth):
                bad.append(f"{name} {side}: coefficient {v.coefficient} at {v.index} in {v.form}")
    return bad


SUITES = {
    "lemma52": sweep_nested_plus,
    "lemma55": sweep_type_a_dichotomy,
    "lemma63": sweep_affine_dichotomy,
    "csum": sweep_csum,
    "pn": sweep_pn,
}
