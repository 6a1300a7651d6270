"""Crystal structure on ``Z^infty_iota[lam]``.

sigma_k is the piecewise-linear score of position k; the Kashiwara operators
bump one coordinate at an extremal maximizer of sigma over a color class.
Infinite attainer sets are detected by tail analysis: below the support the
score of each color is constant, above it (on the positive side) it is 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import Weight, subtract_root
from .sequences import FinSuppVector, IotaSequence, support_window


@dataclass(frozen=True)
class AttainerReport:
    sup_value: int
    window_attainers: tuple[int, ...]
    unbounded_left: bool
    unbounded_right: bool


@dataclass(frozen=True)
class _Profile:
    lo: int
    hi: int
    values: dict
    tails: dict  # color -> stabilized sigma on the far negative side


@lru_cache(maxsize=1 << 16)
def _profile(x: FinSuppVector, iota: IotaSequence) -> _Profile:
    cartan = iota.cartan
    lam = x.lam
    lo, hi = support_window(x, iota)
    coords = x.as_dict()
    n = cartan.rank
    mat = cartan.matrix
    totals = [0] * (n + 1)
    values = {}
    for k in range(hi, lo - 1, -1):
        if k == 0:
            continue
        c = iota.color_at(k)
        row = mat[c - 1]
        s = coords.get(k, 0) + sum(row[d - 1] * totals[d] for d in range(1, n + 1))
        if k < 0:
            s -= lam[c]
        values[k] = s
        totals[c] += coords.get(k, 0)
    tails = {
        c: -lam[c] + sum(mat[c - 1][d - 1] * totals[d] for d in range(1, n + 1))
        for c in range(1, n + 1)
    }
    return _Profile(lo, hi, values, tails)


def sigma(x: FinSuppVector, iota: IotaSequence, k: int) -> int:
    """Score of position ``k``; any nonzero ``k`` is accepted."""
    if k == 0:
        raise ValueError("sigma_0 is -infinity and never evaluated")
    prof = _profile(x, iota)
    if k in prof.values:
        return prof.values[k]
    if k > prof.hi:
        return 0
    return prof.tails[iota.color_at(k)]


def sigma_direct(x: FinSuppVector, iota: IotaSequence, k: int) -> int:
    """Term-by-term evaluation of sigma_k, independent of the sweep above."""
    if k == 0:
        raise ValueError("sigma_0 is -infinity and never evaluated")
    c = iota.color_at(k)
    s = x[k] + sum(iota.cartan.pairing(c, iota.color_at(j)) * v for j, v in x.entries if j > k)
    if k < 0:
        s -= x.lam[c]
    return s


def attainers(x: FinSuppVector, iota: IotaSequence, i: int) -> AttainerReport:
    prof = _profile(x, iota)
    tail = prof.tails[i]
    window = [(k, v) for k, v in prof.values.items() if iota.color_at(k) == i]
    sup = max([0, tail] + [v for _, v in window])
    hits = tuple(sorted(k for k, v in window if v == sup))
    return AttainerReport(sup, hits, tail == sup, sup == 0)


def f_tilde(x: FinSuppVector, iota: IotaSequence, i: int) -> FinSuppVector | None:
    rep = attainers(x, iota, i)
    if rep.unbounded_left:
        return None
    return x.bump(rep.window_attainers[0], 1)


def e_tilde(x: FinSuppVector, iota: IotaSequence, i: int) -> FinSuppVector | None:
    rep = attainers(x, iota, i)
    if rep.unbounded_right:
        return None
    return x.bump(rep.window_attainers[-1], -1)


def weight_of(x: FinSuppVector, iota: IotaSequence) -> Weight:
    wt = x.lam
    for k, v in x.entries:
        wt = subtract_root(wt, iota.cartan, iota.color_at(k), v)
    return wt


def epsilon(x: FinSuppVector, iota: IotaSequence, i: int) -> int:
    return attainers(x, iota, i).sup_value


def phi(x: FinSuppVector, iota: IotaSequence, i: int) -> int:
    return weight_of(x, iota)[i] + epsilon(x, iota, i)


def is_highest_weight(x: FinSuppVector, iota: IotaSequence) -> bool:
    return all(e_tilde(x, iota, i) is None for i in iota.cartan.colors())
