"""Doubly-infinite color sequences and finitely supported lattice vectors.

An index sequence is written ``(..., i_2, i_1, t_lam, i_-1, i_-2, ...)``; the
positive half is read right to left.  Both halves are periodic, so a
sequence is stored as two finite patterns.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

from .cartan import CartanData, Kind, Weight, affine_a1, finite_a


@dataclass(frozen=True)
class IotaSequence:
    """``i_k = pos_pattern[(k-1) % p]`` for ``k >= 1`` and
    ``i_k = neg_pattern[(-k-1) % q]`` for ``k <= -1``."""

    cartan: CartanData
    pos_pattern: tuple[int, ...]
    neg_pattern: tuple[int, ...]

    def __post_init__(self):
        if not self.pos_pattern or not self.neg_pattern:
            raise ValueError("patterns must be nonempty")
        for c in self.pos_pattern + self.neg_pattern:
            if not 1 <= c <= self.cartan.rank:
                raise ValueError(f"color {c} out of range")

    @property
    def period(self) -> int:
        """Length after which both halves are guaranteed to repeat."""
        return max(len(self.pos_pattern), len(self.neg_pattern))

    def color_at(self, k: int) -> int:
        if k > 0:
            return self.pos_pattern[(k - 1) % len(self.pos_pattern)]
        if k < 0:
            return self.neg_pattern[(-k - 1) % len(self.neg_pattern)]
        raise ValueError("position 0 carries t_lambda, not a color")

    def k_plus(self, k: int) -> int:
        return _k_plus(self, k)

    def k_minus(self, k: int) -> int:
        return _k_minus(self, k)

    def k_plus_one_sided(self, k: int) -> int:
        """Neighbor within the same half, as for a half-infinite sequence."""
        l = self.k_plus(k)
        return 0 if (k < 0 < l) else l

    def k_minus_one_sided(self, k: int) -> int:
        l = self.k_minus(k)
        return 0 if (l < 0 < k) else l

    def adjacent_colors_differ(self) -> bool:
        """Whether ``i_k != i_{k+1}`` inside each half."""
        ok = True
        for pat in (self.pos_pattern, self.neg_pattern):
            ok &= all(pat[t] != pat[(t + 1) % len(pat)] for t in range(len(pat)))
        return ok


@lru_cache(maxsize=None)
def _k_plus(iota: IotaSequence, k: int) -> int:
    if k == 0:
        raise ValueError("k must be nonzero")
    c = iota.color_at(k)
    stop = k + len(iota.pos_pattern) + len(iota.neg_pattern) + 2
    for l in range(k + 1, max(stop, len(iota.pos_pattern) + 2)):
        if l != 0 and iota.color_at(l) == c:
            return l
    return 0


@lru_cache(maxsize=None)
def _k_minus(iota: IotaSequence, k: int) -> int:
    if k == 0:
        raise ValueError("k must be nonzero")
    c = iota.color_at(k)
    stop = k - len(iota.pos_pattern) - len(iota.neg_pattern) - 2
    for l in range(k - 1, min(stop, -len(iota.neg_pattern) - 2), -1):
        if l != 0 and iota.color_at(l) == c:
            return l
    return 0


def iota_a(n: int) -> IotaSequence:
    """``(..., 2, 1, n, ..., 2, 1, t_lam, n, n-1, ..., 1, n, n-1, ...)``."""
    return IotaSequence(finite_a(n), tuple(range(1, n + 1)), tuple(range(n, 0, -1)))


def iota_affine() -> IotaSequence:
    """``(..., 2, 1, 2, 1, t_lam, 2, 1, 2, 1, ...)``."""
    return IotaSequence(affine_a1(), (1, 2), (2, 1))


def iota_for(kind: Kind, rank: int | None = None) -> IotaSequence:
    if kind is Kind.FINITE_A:
        if rank is None:
            raise ValueError("type A needs a rank")
        return iota_a(rank)
    return iota_affine()


def iota_from_pattern(cartan: CartanData, pos: tuple[int, ...], neg: tuple[int, ...]) -> IotaSequence:
    """Arbitrary periodic sequence; used for testing degenerate patterns."""
    return IotaSequence(cartan, tuple(pos), tuple(neg))


# (j; i) <-> k relabelling for type A_n

def di_pos(n: int, j: int, i: int) -> int:
    if not 1 <= i <= n or j < 1:
        raise ValueError(f"bad double index ({j};{i}) for n={n}")
    return (j - 1) * n + i


def di_pos_inv(n: int, k: int) -> tuple[int, int]:
    if k < 1:
        raise ValueError("positive index expected")
    return (k - 1) // n + 1, (k - 1) % n + 1


def di_neg(n: int, j: int, i: int) -> int:
    if not 1 <= i <= n or j < 1:
        raise ValueError(f"bad double index (-{j};{i}) for n={n}")
    return -j * n + i - 1


def di_neg_inv(n: int, k: int) -> tuple[int, int]:
    if k > -1:
        raise ValueError("negative index expected")
    j = (-k + n - 1) // n
    return j, k + j * n + 1


@dataclass(frozen=True)
class FinSuppVector:
    """A point of ``Z^infty[lam]``: sparse integer coordinates plus the weight marker.

    ``entries`` is a sorted tuple of ``(k, x_k)`` pairs with ``k != 0`` and
    ``x_k != 0``; use :meth:`from_dict` to build one from loose data.
    """

    entries: tuple[tuple[int, int], ...]
    lam: Weight

    def __post_init__(self):
        keys = [k for k, _ in self.entries]
        if keys != sorted(set(keys)) or any(k == 0 or v == 0 for k, v in self.entries):
            raise ValueError("entries must be sorted, unique, off zero and nonzero")

    @classmethod
    def from_dict(cls, entries: Mapping[int, int], lam: Weight) -> FinSuppVector:
        items = []
        for k, v in entries.items():
            if k == 0:
                raise ValueError("index 0 is reserved for t_lambda")
            if v:
                items.append((int(k), int(v)))
        return cls(tuple(sorted(items)), lam)

    @classmethod
    def zero(cls, lam: Weight) -> FinSuppVector:
        return cls((), lam)

    def __getitem__(self, k: int) -> int:
        for key, v in self.entries:
            if key == k:
                return v
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.entries)

    def bump(self, k: int, delta: int) -> FinSuppVector:
        d = self.as_dict()
        d[k] = d.get(k, 0) + delta
        return FinSuppVector.from_dict(d, self.lam)

    def total(self) -> int:
        return sum(v for _, v in self.entries)

    def __str__(self):
        body = ", ".join(f"x[{k}]={v}" for k, v in self.entries)
        return "{" + body + "}"

    def to_json_obj(self) -> dict:
        return {"lambda": list(self.lam.coeffs), "entries": {str(k): v for k, v in self.entries}}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True)

    @classmethod
    def from_json_obj(cls, obj: dict) -> FinSuppVector:
        entries = {int(k): int(v) for k, v in obj["entries"].items()}
        if any(v == 0 for v in entries.values()):
            raise ValueError("zero entries are not allowed in the JSON encoding")
        return cls.from_dict(entries, Weight(tuple(obj["lambda"])))

    @classmethod
    def from_json(cls, text: str) -> FinSuppVector:
        return cls.from_json_obj(json.loads(text))


def support_window(x: FinSuppVector, iota: IotaSequence) -> tuple[int, int]:
    """Index range ``[lo, hi]`` outside of which sigma is determined by tails.

    Below ``lo`` every sigma_k equals the stabilized negative-tail value for
    its color; above ``hi`` it is 0.  One period of slack on each side
    guarantees every color is sampled in both tails.
    """
    supp = x.support
    low = min(supp[0], 0) if supp else 0
    high = max(supp[-1], 0) if supp else 0
    lo = min(low, -1) - len(iota.neg_pattern) - 1
    hi = max(high, 1) + len(iota.pos_pattern) + 1
    return lo, hi
