"""Linear forms ``c + sum phi_k x_k`` and the rewriting operators S_k.

Inequality families are generated by closing a finite set of seed forms
under S_k for k in an explicit finite index set, to a fixed rewrite depth.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .cartan import Weight
from .sequences import FinSuppVector, IotaSequence


@dataclass(frozen=True)
class LinearForm:
    constant: int
    coeffs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        keys = [k for k, _ in self.coeffs]
        if keys != sorted(set(keys)) or any(v == 0 for _, v in self.coeffs):
            raise ValueError("coefficients must be sorted, unique and nonzero")

    @classmethod
    def make(cls, coeffs: Mapping[int, int] | None = None, constant: int = 0) -> LinearForm:
        items = sorted((int(k), int(v)) for k, v in (coeffs or {}).items() if v)
        return cls(int(constant), tuple(items))

    @classmethod
    def coordinate(cls, k: int, sign: int = 1, constant: int = 0) -> LinearForm:
        return cls.make({k: sign}, constant)

    def coeff(self, k: int) -> int:
        for key, v in self.coeffs:
            if key == k:
                return v
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.coeffs)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.coeffs)

    def __add__(self, other: LinearForm) -> LinearForm:
        d = self.as_dict()
        for k, v in other.coeffs:
            d[k] = d.get(k, 0) + v
        return LinearForm.make(d, self.constant + other.constant)

    def scale(self, m: int) -> LinearForm:
        return LinearForm.make({k: m * v for k, v in self.coeffs}, m * self.constant)

    def __sub__(self, other: LinearForm) -> LinearForm:
        return self + other.scale(-1)

    def linear_part(self) -> LinearForm:
        return LinearForm(0, self.coeffs)

    def __call__(self, x: FinSuppVector) -> int:
        return self.constant + sum(v * x[k] for k, v in self.coeffs)

    def evaluate_dict(self, x: Mapping[int, int]) -> int:
        return self.constant + sum(v * x.get(k, 0) for k, v in self.coeffs)

    def sort_key(self):
        return (self.coeffs, self.constant)

    def __str__(self):
        parts = []
        for k, v in self.coeffs:
            mag = "" if abs(v) == 1 else str(abs(v))
            sign = "-" if v < 0 else "+"
            parts.append(f"{sign} {mag}x[{k}]")
        if self.constant or not parts:
            parts.append(f"{'-' if self.constant < 0 else '+'} {abs(self.constant)}")
        s = " ".join(parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def to_json_obj(self) -> dict:
        return {"c": self.constant, "coeffs": {str(k): v for k, v in self.coeffs}}

    @classmethod
    def from_json_obj(cls, obj: dict) -> LinearForm:
        coeffs = {int(k): int(v) for k, v in obj["coeffs"].items()}
        if any(v == 0 for v in coeffs.values()):
            raise ValueError("zero coefficients are not allowed in the JSON encoding")
        return cls.make(coeffs, obj["c"])


ZERO_FORM = LinearForm(0, ())


class FormFamily(enum.Enum):
    XI_PLUS = "XiPlus"
    XI_MINUS = "XiMinus"
    XI = "Xi"
    XI_PRIME_A = "XiPrimeA"
    XI_PRIME_AFFINE = "XiPrimeAffine"
    XI_AFFINE_RESTRICTED = "XiAffineRestricted"
    CUSTOM = "Custom"


@dataclass(frozen=True)
class FormSet:
    forms: tuple[LinearForm, ...]
    depth: int
    window: tuple[int, int]
    tag: FormFamily = FormFamily.CUSTOM

    def __len__(self):
        return len(self.forms)

    def __iter__(self):
        return iter(self.forms)

    def __contains__(self, form):
        return form in set(self.forms)

    def union(self, other: FormSet, tag: FormFamily = FormFamily.CUSTOM) -> FormSet:
        forms = sorted(set(self.forms) | set(other.forms), key=LinearForm.sort_key)
        window = (min(self.window[0], other.window[0]), max(self.window[1], other.window[1]))
        return FormSet(tuple(forms), max(self.depth, other.depth), window, tag)

    def to_json(self) -> str:
        return json.dumps(
            {
                "tag": self.tag.value,
                "depth": self.depth,
                "window": list(self.window),
                "forms": [f.to_json_obj() for f in self.forms],
            },
            sort_keys=True,
        )


def beta_bar(iota: IotaSequence, lam: Weight, k: int) -> LinearForm:
    """``sigma_k - sigma_{k+}`` written out as a finite form (0 for k = 0)."""
    if k == 0:
        return ZERO_FORM
    kp = iota.k_plus(k)
    if kp == 0:
        raise ValueError(f"position {k} has no successor of the same color")
    c = iota.color_at(k)
    coeffs = {k: 1, kp: 1}
    for j in range(k + 1, kp):
        if j != 0:
            a = iota.cartan.pairing(c, iota.color_at(j))
            if a:
                coeffs[j] = a
    constant = -lam[c] if k < 0 < kp else 0
    return LinearForm.make(coeffs, constant)


def s_bar(iota: IotaSequence, lam: Weight, form: LinearForm, k: int) -> LinearForm:
    if k == 0:
        raise ValueError("S_0 is not defined")
    a = form.coeff(k)
    if a == 0:
        return form
    if a > 0:
        return form - beta_bar(iota, lam, k).scale(a)
    km = iota.k_minus(k)
    if km == 0:
        return form
    return form - beta_bar(iota, lam, km).scale(a)


def index_window(lo: int, hi: int) -> tuple[int, ...]:
    return tuple(k for k in range(lo, hi + 1) if k != 0)


def generate(
    iota: IotaSequence,
    lam: Weight,
    seeds: Iterable[LinearForm],
    allowed: Iterable[int],
    depth: int,
    tag: FormFamily = FormFamily.CUSTOM,
) -> FormSet:
    """Close ``seeds`` under S_k for k in ``allowed`` up to ``depth`` rewrites.

    Only k in the support of a form can change it, so the frontier expansion
    scans form supports rather than the whole index set.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    allowed = frozenset(allowed)
    if 0 in allowed:
        raise ValueError("index 0 cannot be rewritten")
    seen = set(seeds)
    frontier = sorted(seen, key=LinearForm.sort_key)
    for _ in range(depth):
        new = set()
        for form in frontier:
            for k in form.support:
                if k in allowed:
                    g = s_bar(iota, lam, form, k)
                    if g not in seen:
                        new.add(g)
        if not new:
            break
        seen |= new
        frontier = sorted(new, key=LinearForm.sort_key)
    window = (min(allowed), max(allowed)) if allowed else (0, 0)
    return FormSet(tuple(sorted(seen, key=LinearForm.sort_key)), depth, window, tag)


def first_violation(x: FinSuppVector | Mapping[int, int], forms: Iterable[LinearForm]) -> LinearForm | None:
    coords = x.as_dict() if isinstance(x, FinSuppVector) else x
    for form in forms:
        if form.evaluate_dict(coords) < 0:
            return form
    return None


def satisfies(x: FinSuppVector, forms: Iterable[LinearForm]) -> bool:
    return first_violation(x, forms) is None


def xi_seeds(w: int, skip: frozenset[int] = frozenset()) -> list[LinearForm]:
    """Coordinate seeds ``x_j`` and ``-x_{-j}`` for ``1 <= j <= w``."""
    seeds = [LinearForm.coordinate(j) for j in range(1, w + 1) if j not in skip]
    seeds += [LinearForm.coordinate(-j, -1) for j in range(1, w + 1) if -j not in skip]
    return seeds


def generate_xi(
    iota: IotaSequence,
    lam: Weight,
    w: int,
    depth: int,
    skip: frozenset[int] = frozenset(),
) -> FormSet:
    """Truncation of the family generated from coordinate forms.

    The plus half closes ``x_j`` under S_k with k > 0, the minus half closes
    ``-x_{-j}`` under S_k with k < 0.  Indices in ``skip`` are neither seeds
    nor rewrite positions.
    """
    reach = w + depth * iota.period
    plus = generate(
        iota, lam,
        [LinearForm.coordinate(j) for j in range(1, w + 1) if j not in skip],
        [k for k in index_window(1, reach) if k not in skip],
        depth,
    )
    minus = generate(
        iota, lam,
        [LinearForm.coordinate(-j, -1) for j in range(1, w + 1) if -j not in skip],
        [k for k in index_window(-reach, -1) if k not in skip],
        depth,
    )
    tag = FormFamily.XI_AFFINE_RESTRICTED if skip else FormFamily.XI
    out = plus.union(minus, tag)
    return FormSet(out.forms, depth, (-reach, reach), tag)


@dataclass(frozen=True)
class PNViolation:
    form: LinearForm
    index: int
    coefficient: int


def check_pn(iota: IotaSequence, side: str, window: int, depth: int) -> list[PNViolation]:
    """Empirical check of the sign assumptions on one half of ``iota``.

    ``side="positive"``: every first occurrence k of a color among positive
    indices must carry a nonnegative coefficient in all generated forms.
    ``side="negative"``: symmetric, with nonpositive coefficients at the
    occurrences closest to zero.
    """
    lam = Weight.zero(iota.cartan.rank)
    reach = window + depth * iota.period
    if side == "positive":
        seeds = [LinearForm.coordinate(j) for j in range(1, window + 1)]
        allowed = index_window(1, reach)
    elif side == "negative":
        seeds = [LinearForm.coordinate(-j, -1) for j in range(1, window + 1)]
        allowed = index_window(-reach, -1)
    else:
        raise ValueError("side must be 'positive' or 'negative'")
    fs = generate(iota, lam, seeds, allowed, depth)
    out = []
    for form in fs:
        for k, v in form.coeffs:
            if side == "positive" and k > 0 and iota.k_minus_one_sided(k) == 0 and v < 0:
                out.append(PNViolation(form, k, v))
            if side == "negative" and k < 0 and iota.k_plus_one_sided(k) == 0 and v > 0:
                out.append(PNViolation(form, k, v))
    return out
