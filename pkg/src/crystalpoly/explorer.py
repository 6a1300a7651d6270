"""Connected components, highest weight search and the inequality oracle."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .affine import (
    LambdaAffine,
    generate_xi_prime_affine,
    generate_xi_restricted,
    hwv_affine,
)
from .cartan import Kind
from .crystal import e_tilde, f_tilde, is_highest_weight, weight_of
from .forms import FormSet, LinearForm, generate_xi
from .sequences import FinSuppVector, IotaSequence, iota_a, iota_affine
from .type_a import LambdaA, generate_xi_prime_a, hwv_a

DEFAULT_VERTEX_BUDGET = 10**6


@dataclass
class CrystalGraph:
    iota: IotaSequence
    seed: FinSuppVector
    depth: int
    vertices: list[FinSuppVector]
    distance: dict[FinSuppVector, int]
    edges: list[tuple[FinSuppVector, int, FinSuppVector]]
    truncated: bool = False

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, x):
        return x in self.distance


def bfs_component(
    seed: FinSuppVector,
    iota: IotaSequence,
    depth: int,
    budget: int = DEFAULT_VERTEX_BUDGET,
    keep: Callable[[FinSuppVector], bool] | None = None,
) -> CrystalGraph:
    """All vertices within ``depth`` applications of f/e from ``seed``.

    ``keep`` prunes the search to a sub-region; edges only join retained
    vertices.  When ``budget`` is exceeded the partial graph is returned with
    ``truncated`` set.
    """
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    colors = list(iota.cartan.colors())
    dist = {seed: 0}
    edges = set()
    queue = deque([seed])
    truncated = False
    while queue:
        u = queue.popleft()
        du = dist[u]
        for i in colors:
            for op, forward in ((f_tilde, True), (e_tilde, False)):
                v = op(u, iota, i)
                if v is None or (keep is not None and not keep(v)):
                    continue
                if v not in dist:
                    if du >= depth:
                        continue
                    if len(dist) >= budget:
                        truncated = True
                        continue
                    dist[v] = du + 1
                    queue.append(v)
                edges.add((u, i, v) if forward else (v, i, u))
    order = sorted(dist, key=lambda x: (dist[x], x.entries))
    rank = {x: t for t, x in enumerate(order)}
    edge_list = sorted(edges, key=lambda e: (rank[e[0]], e[1], rank[e[2]]))
    return CrystalGraph(iota, seed, depth, order, dist, edge_list, truncated)


def find_highest_weights(g: CrystalGraph) -> list[FinSuppVector]:
    return [x for x in g.vertices if is_highest_weight(x, g.iota)]


def export_graph(g: CrystalGraph, fmt: str = "dot") -> bytes:
    ids = {x: t for t, x in enumerate(g.vertices)}
    if fmt == "dot":
        lines = ["digraph crystal {"]
        for x, t in ids.items():
            label = f"{x}\\nwt={weight_of(x, g.iota)}"
            lines.append(f'  v{t} [label="{label}"];')
        for u, i, v in g.edges:
            lines.append(f'  v{ids[u]} -> v{ids[v]} [label="{i}"];')
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    if fmt == "json":
        obj = {
            "lambda": list(g.seed.lam.coeffs),
            "seed": g.seed.to_json_obj(),
            "depth": g.depth,
            "truncated": g.truncated,
            "vertices": [
                {
                    "id": t,
                    "entries": {str(k): v for k, v in x.entries},
                    "weight": list(weight_of(x, g.iota).coeffs),
                    "distance": g.distance[x],
                }
                for x, t in ids.items()
            ],
            "edges": [{"source": ids[u], "color": i, "target": ids[v]} for u, i, v in g.edges],
        }
        return (json.dumps(obj, sort_keys=True, indent=1) + "\n").encode()
    raise ValueError("format must be 'dot' or 'json'")


# --- the two supported settings ----------------------------------------------


@dataclass(frozen=True)
class Setting:
    """Everything the oracle needs about one (type, lambda) pair."""

    kind: Kind
    lam: LambdaA | LambdaAffine
    iota: IotaSequence
    hwv: FinSuppVector
    restricted: bool = False
    prime_all_indices: bool = True

    @property
    def weight(self):
        return self.lam.weight

    def c_bound(self, k: int) -> int:
        """C at negative position k (so that ``x_k >= -C``)."""
        return -self.hwv[k]

    def sigma_family(self, w: int, depth: int) -> FormSet:
        if self.restricted:
            return generate_xi_restricted(self.lam, w, depth)
        return generate_xi(self.iota, self.weight, w, depth)

    def sigma_prime_family(self, w: int, depth: int) -> FormSet:
        if self.kind is Kind.FINITE_A:
            return generate_xi_prime_a(self.lam, w, depth, self.prime_all_indices)
        return generate_xi_prime_affine(self.lam, w, depth, self.prime_all_indices)

    def forms(self, w: int, depth: int) -> list[LinearForm]:
        fam = self.sigma_family(w, depth).union(self.sigma_prime_family(w, depth))
        # cheap coordinate forms first so most rejections exit early
        return sorted(fam.forms, key=lambda f: (len(f.coeffs), f.sort_key()))


def make_setting(
    kind: Kind | str,
    coeffs: Sequence[int],
    family: str = "default",
    prime_indices: str = "all",
) -> Setting:
    """Bundle the sequence, weight and form families for one (type, lambda) pair.

    ``family`` selects the Xi generators: ``"unrestricted"`` uses every
    coordinate form, ``"restricted"`` (affine only) drops index +-1, and
    ``"default"`` picks unrestricted for type A and restricted for affine.
    ``prime_indices`` is ``"all"`` or ``"negative"``: the rewrite positions
    used to close the Xi' seeds.
    """
    kind = Kind(kind) if isinstance(kind, str) else kind
    if family not in ("default", "unrestricted", "restricted"):
        raise ValueError("family must be 'default', 'unrestricted' or 'restricted'")
    if prime_indices not in ("all", "negative"):
        raise ValueError("prime_indices must be 'all' or 'negative'")
    prime_all = prime_indices == "all"
    if kind is Kind.FINITE_A:
        if family == "restricted":
            raise ValueError("the restricted family is only defined for affine A_1")
        lam = LambdaA.from_coeffs(coeffs)
        return Setting(kind, lam, iota_a(lam.n), hwv_a(lam), False, prime_all)
    lam = LambdaAffine.from_coeffs(coeffs)
    return Setting(kind, lam, iota_affine(), hwv_affine(lam), family != "unrestricted", prime_all)


def height(x: FinSuppVector, setting: Setting) -> int:
    """Number of f-steps separating ``x`` from the highest weight vector.

    ``wt(v) - wt(x) = sum_k (x_k - v_k) alpha_{i_k}``; its height is linear in x.
    """
    return x.total() - setting.hwv.total()


@dataclass
class OracleReport:
    params: dict
    bfs_size: int
    ineq_size: int
    missing_from_bfs: list[FinSuppVector]
    missing_from_ineq: list[FinSuppVector]
    stable: bool
    verdict: str
    stability_sizes: dict = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(
            {
                "params": self.params,
                "bfs_set_size": self.bfs_size,
                "ineq_set_size": self.ineq_size,
                "missing_from_bfs": [x.to_json_obj() for x in self.missing_from_bfs],
                "missing_from_ineq": [x.to_json_obj() for x in self.missing_from_ineq],
                "stable": self.stable,
                "stability_sizes": self.stability_sizes,
                "verdict": self.verdict,
            },
            sort_keys=True,
            indent=1,
        )


def component_by_height(setting: Setting, d: int, budget: int = DEFAULT_VERTEX_BUDGET) -> CrystalGraph:
    """Elements of the component of 0 lying at most ``d`` f-steps below v_lam.

    Searches outward from 0.  Any such element is reached from 0 by climbing
    to v_lam (``height(0)`` e-steps) and descending, never passing above
    height ``max(height(0), d)``, so the pruned search is complete.
    """
    zero = FinSuppVector.zero(setting.weight)
    h0 = height(zero, setting)
    cap = max(h0, d)
    return bfs_component(zero, setting.iota, h0 + d, budget, keep=lambda x: height(x, setting) <= cap)


def enumeration_box(setting: Setting, d: int) -> tuple[list[int], list[int]]:
    """Positions that may be nonzero for elements within height ``d``.

    Every f-step increments one coordinate at the leftmost maximizer; that
    never lies left of the current support, and on the positive side it lies
    within one period beyond it.  One extra period of slack is added to both
    sides so the inequalities, not the box, decide membership near the edge.
    """
    p = setting.iota.period
    supp = setting.hwv.support
    n0 = -supp[0] if supp else 0
    pos = list(range(1, (d + 1) * p + 1))
    neg = list(range(-(n0 + p), 0))
    return pos, neg


def in_box(x: FinSuppVector, setting: Setting, d: int) -> bool:
    pos, neg = enumeration_box(setting, d)
    allowed = set(pos) | set(neg)
    for k, v in x.entries:
        if k not in allowed:
            return False
        if k > 0 and not 0 <= v <= d:
            return False
        if k < 0 and not -setting.c_bound(k) <= v <= 0:
            return False
    return height(x, setting) <= d


def enumerate_inequality_set(setting: Setting, d: int, forms: list[LinearForm]) -> list[FinSuppVector]:
    """Lattice points of the box at height <= d satisfying every form."""
    pos, neg = enumeration_box(setting, d)
    slots = [(k, d) for k in pos] + [(k, setting.c_bound(k)) for k in neg if setting.c_bound(k) > 0]
    base = {k: -setting.c_bound(k) for k in neg if setting.c_bound(k) > 0}
    out = []
    coords = dict(base)

    def rec(t, budget):
        if t == len(slots):
            if all(f.evaluate_dict(coords) >= 0 for f in forms):
                out.append(FinSuppVector.from_dict(coords, setting.weight))
            return
        k, cap = slots[t]
        start = coords.get(k, 0)
        for e in range(0, min(cap, budget) + 1):
            coords[k] = start + e
            rec(t + 1, budget - e)
        coords[k] = start

    rec(0, d)
    return sorted(out, key=lambda x: x.entries)


def oracle_compare(
    kind: Kind | str,
    coeffs: Sequence[int],
    d: int,
    w: int,
    gen_depth: int,
    step: int = 2,
    budget: int = DEFAULT_VERTEX_BUDGET,
    family: str = "default",
    prime_indices: str = "all",
) -> OracleReport:
    """Compare the component of 0 with the truncated inequality description.

    Both sides are restricted to height <= d below the highest weight vector.
    """
    setting = make_setting(kind, coeffs, family, prime_indices)
    g = component_by_height(setting, d, budget)
    bfs = {x for x in g.vertices if height(x, setting) <= d}
    forms = setting.forms(w, gen_depth)
    ineq = set(enumerate_inequality_set(setting, d, forms))
    forms_next = setting.forms(w + step, gen_depth + step)
    ineq_next = set(enumerate_inequality_set(setting, d, forms_next))

    missing_from_ineq = sorted(
        (x for x in bfs if not in_box(x, setting, d) or any(f.evaluate_dict(x.as_dict()) < 0 for f in forms)),
        key=lambda x: x.entries,
    )
    missing_from_bfs = sorted(ineq - bfs, key=lambda x: x.entries)
    stable = ineq == ineq_next
    if missing_from_ineq or g.truncated:
        verdict = "unequal" if missing_from_ineq else "inconclusive"
    elif not stable:
        verdict = "inconclusive"
    elif missing_from_bfs:
        verdict = "unequal"
    else:
        verdict = "equal"
    params = {
        "type": setting.kind.value,
        "lambda": list(setting.weight.coeffs),
        "bfs_depth": d,
        "window": w,
        "gen_depth": gen_depth,
        "stability_step": step,
        "family": "restricted" if setting.restricted else "unrestricted",
        "prime_indices": prime_indices,
        "forms": len(forms),
        "bfs_truncated": g.truncated,
    }
    return OracleReport(
        params,
        len(bfs),
        len(ineq),
        missing_from_bfs,
        missing_from_ineq,
        stable,
        verdict,
        {"at_params": len(ineq), "at_params_plus_step": len(ineq_next)},
    )
