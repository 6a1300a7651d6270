"""Cartan data and weights in the fundamental-weight basis.

Colors are 1-based throughout, matching the usual labelling of simple roots.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass


class Kind(enum.Enum):
    FINITE_A = "a"
    AFFINE_A1 = "a1affine"


@dataclass(frozen=True)
class Weight:
    """Integral weight ``sum coeffs[i-1] * Lambda_i``."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def zero(cls, rank: int) -> Weight:
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank: int, j: int) -> Weight:
        return cls(tuple(1 if i == j else 0 for i in range(1, rank + 1)))

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> int:
        """Return ``<h_i, self>`` for a 1-based color ``i``."""
        if not 1 <= i <= len(self.coeffs):
            raise IndexError(f"color {i} out of range 1..{len(self.coeffs)}")
        return self.coeffs[i - 1]

    def __add__(self, other: Weight) -> Weight:
        return Weight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: Weight) -> Weight:
        return Weight(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, m: int) -> Weight:
        return Weight(tuple(m * a for a in self.coeffs))

    def is_dominant(self) -> bool:
        return all(a >= 0 for a in self.coeffs)

    def __str__(self):
        return "(" + ",".join(str(a) for a in self.coeffs) + ")"


@dataclass(frozen=True)
class CartanData:
    """Generalized Cartan matrix with ``matrix[i-1][j-1] = <h_i, alpha_j>``."""

    rank: int
    kind: Kind
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = self.rank
        if n < 1 or len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise ValueError("Cartan matrix must be square of size rank")
        for i in range(n):
            if self.matrix[i][i] != 2:
                raise ValueError("diagonal entries must be 2")
            for j in range(n):
                if i != j:
                    if self.matrix[i][j] > 0:
                        raise ValueError("off-diagonal entries must be <= 0")
                    if (self.matrix[i][j] == 0) != (self.matrix[j][i] == 0):
                        raise ValueError("zero pattern must be symmetric")

    def _check(self, i: int):
        if not 1 <= i <= self.rank:
            raise IndexError(f"color {i} out of range 1..{self.rank}")

    def pairing(self, i: int, j: int) -> int:
        """``<h_i, alpha_j>``."""
        self._check(i)
        self._check(j)
        return self.matrix[i - 1][j - 1]

    def weight_pairing(self, i: int, lam: Weight) -> int:
        """``<h_i, lam>``, a coordinate read in the fundamental basis."""
        self._check(i)
        return lam[i]

    def simple_root(self, i: int) -> Weight:
        self._check(i)
        return Weight(tuple(self.matrix[j][i - 1] for j in range(self.rank)))

    def colors(self) -> range:
        return range(1, self.rank + 1)


def finite_a(n: int) -> CartanData:
    """Cartan matrix of type A_n."""
    if n < 1:
        raise ValueError("rank must be positive")
    rows = tuple(
        tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n))
        for i in range(n)
    )
    return CartanData(n, Kind.FINITE_A, rows)


def affine_a1() -> CartanData:
    """Cartan matrix of type A_1^(1)."""
    return CartanData(2, Kind.AFFINE_A1, ((2, -2), (-2, 2)))


def subtract_root(lam: Weight, cartan: CartanData, i: int, m: int) -> Weight:
    """Return ``lam - m * alpha_i``."""
    if m == 0:
        return lam
    return lam - cartan.simple_root(i).scale(m)
