"""Command line entry point ``crystalpoly``."""

from __future__ import annotations

import argparse
import json
import sys

from .cartan import Kind
from .crystal import is_highest_weight, weight_of
from .explorer import bfs_component, export_graph, find_highest_weights, make_setting, oracle_compare
from .sequences import FinSuppVector
from .verify import SUITES


def _coeffs(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}")


def _setting(args):
    if args.rank is not None and args.rank != len(args.lam):
        raise ValueError(f"--rank {args.rank} does not match {len(args.lam)} lambda coefficients")
    return make_setting(args.type, args.lam, getattr(args, "sigma_family", "default"))


def _emit(data: bytes | str, out: str | None):
    if isinstance(data, str):
        data = data.encode()
    if out:
        with open(out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def cmd_explore(args) -> int:
    s = _setting(args)
    g = bfs_component(FinSuppVector.zero(s.weight), s.iota, args.depth, args.budget)
    _emit(export_graph(g, args.format), args.out)
    if g.truncated:
        print(f"vertex budget {args.budget} exceeded; graph is partial", file=sys.stderr)
        return 2
    return 0


def cmd_hwv(args) -> int:
    s = _setting(args)
    v = s.hwv
    ok = is_highest_weight(v, s.iota)
    wt = weight_of(v, s.iota)
    report = {
        "type": s.kind.value,
        "lambda": list(s.weight.coeffs),
        "hwv": v.to_json_obj(),
        "weight": list(wt.coeffs),
        "weight_dominant": wt.is_dominant(),
        "is_highest_weight": ok,
    }
    if args.depth is not None:
        g = bfs_component(FinSuppVector.zero(s.weight), s.iota, args.depth)
        found = find_highest_weights(g)
        report["bfs_depth"] = args.depth
        report["bfs_highest_weights"] = [x.to_json_obj() for x in found]
        ok = ok and found == [v]
    print(json.dumps(report, sort_keys=True, indent=1))
    return 0 if ok else 1


def cmd_forms(args) -> int:
    s = _setting(args)
    if args.family == "xi":
        fs = s.sigma_family(args.window, args.gen_depth)
    else:
        fs = s.sigma_prime_family(args.window, args.gen_depth)
    _emit(fs.to_json() + "\n", args.out)
    return 0


def cmd_oracle(args) -> int:
    rep = oracle_compare(
        args.type, args.lam, args.depth, args.window, args.gen_depth,
        step=args.step, family=args.sigma_family, prime_indices=args.prime_indices,
    )
    print(rep.to_json())
    return 0 if rep.verdict == "equal" else 1


def cmd_verify(args) -> int:
    bad = SUITES[args.suite]()
    for line in bad:
        print(line)
    print(f"{args.suite}: {len(bad)} violation(s)")
    return 1 if bad else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="crystalpoly", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--type", required=True, choices=[k.value for k in Kind])
        sp.add_argument("--rank", type=int)
        sp.add_argument("--lambda", dest="lam", required=True, type=_coeffs)

    sp = sub.add_parser("explore", help="BFS the component of 0 and export it")
    common(sp)
    sp.add_argument("--depth", type=int, required=True)
    sp.add_argument("--format", choices=["dot", "json"], default="dot")
    sp.add_argument("--out")
    sp.add_argument("--budget", type=int, default=10**6)
    sp.set_defaults(func=cmd_explore)

    sp = sub.add_parser("hwv", help="print v_lam and check it is highest weight")
    common(sp)
    sp.add_argument("--depth", type=int, help="also search the component of 0 to this depth")
    sp.set_defaults(func=cmd_hwv)

    sp = sub.add_parser("forms", help="print a generated inequality family")
    common(sp)
    sp.add_argument("--window", type=int, required=True)
    sp.add_argument("--gen-depth", type=int, required=True)
    sp.add_argument("--family", choices=["xi", "xiprime"], default="xi")
    sp.add_argument("--sigma-family", choices=["default", "unrestricted", "restricted"], default="default")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_forms)

    sp = sub.add_parser("oracle", help="compare the component of 0 with the inequality set")
    common(sp)
    sp.add_argument("--depth", type=int, required=True)
    sp.add_argument("--window", type=int, required=True)
    sp.add_argument("--gen-depth", type=int, required=True)
    sp.add_argument("--step", type=int, default=2)
    sp.add_argument("--sigma-family", choices=["default", "unrestricted", "restricted"], default="default")
    sp.add_argument("--prime-indices", choices=["all", "negative"], default="all")
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("verify", help="run a property sweep")
    sp.add_argument("--suite", required=True, choices=sorted(SUITES))
    sp.add_argument("--grid", choices=["default"], default="default")
    sp.set_defaults(func=cmd_verify)
    return p


def _glue_lambda(argv: list[str]) -> list[str]:
    """Let ``--lambda -1,2`` through; argparse would read ``-1,2`` as an option."""
    out = []
    it = iter(argv)
    for a in it:
        if a == "--lambda":
            nxt = next(it, None)
            out.append(a if nxt is None else f"--lambda={nxt}")
        else:
            out.append(a)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_glue_lambda(argv))
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
