"""Command-line interface.

Subcommands: mad, detect, solve, verify, oracle, discharge, gen.
Exit codes: 0 success, 1 negative result, 2 usage error,
3 internal inconsistency (a reducibility or discharging guarantee failed,
which always indicates a bug).
"""

from __future__ import annotations

import argparse
import sys

from . import configs, discharge, gen, oracle
from .errors import (
    BudgetExceeded, ExtensionImpossible, InternalInconsistency,
    MadweightError,
)
from .graph import format_graph, parse_graph
from .mad import mad_exact
from .solver import Status, solve_components
from .weighting import Mode, format_weighting, parse_weighting, violations

MODES = {"123": Mode.EDGE3, "12": Mode.TOTAL2}

CATALOGS = {
    "3w52": configs.W3_52,
    "2w52": configs.W2_52,
    "2w83": configs.W2_83,
    "3w83": configs.W3_83,
}

DEFAULT_SEED = 20260652


def _read_graph(path):
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _fmt_roles(roles):
    parts = []
    for name in sorted(roles):
        val = roles[name]
        if isinstance(val, tuple):
            parts.append(f"{name}=({','.join(map(str, val))})")
        else:
            parts.append(f"{name}={val}")
    return " ".join(parts)


def _fmt_core(g, inst):
    ends = sorted(g.edge_ends(e) for e in inst.core)
    return "core=[" + ",".join(f"{u}-{v}" for u, v in ends) + "]"


def cmd_mad(args):
    g = _read_graph(args.graph)
    r = mad_exact(g)
    print(f"{r.value.numerator}/{r.value.denominator} "
          + " ".join(map(str, r.witness)))
    return 0


def cmd_detect(args):
    g = _read_graph(args.graph)
    insts = configs.detect_all(g, CATALOGS[args.catalog])
    for inst in insts:
        print(f"{inst.kind} {_fmt_roles(inst.roles)} {_fmt_core(g, inst)}")
    return 0 if insts else 1


def cmd_solve(args):
    g = _read_graph(args.graph)
    out = solve_components(g, MODES[args.mode], int(args.level),
                           force=args.force)
    if out.status is Status.SOLVED:
        sys.stdout.write(format_weighting(g, out.weighting))
        if args.trace:
            for kind, roles in out.trace:
                print(f"reduce {kind} {_fmt_roles(roles)}", file=sys.stderr)
        return 0
    print(f"{out.status.value}: {out.reason}", file=sys.stderr)
    return 1


def cmd_verify(args):
    g = _read_graph(args.graph)
    with open(args.weighting, encoding="utf-8") as fh:
        w = parse_weighting(fh.read(), g, MODES[args.mode])
    bad = violations(g, w)
    for v in bad:
        print(f"violation {v.u}-{v.v} phi={v.phi_u}")
    print(f"{'proper' if not bad else 'improper'} ({len(bad)} violations)")
    return 0 if not bad else 1


def cmd_oracle(args):
    g = _read_graph(args.graph)
    mode = MODES[args.mode]
    if args.count:
        n = len(oracle.enumerate_proper(g, mode))
        print(n)
        return 0 if n else 1
    ok = oracle.exists_proper(g, mode)
    print("true" if ok else "false")
    return 0 if ok else 1


def cmd_discharge(args):
    g = _read_graph(args.graph)
    rules = discharge.RULE_SETS[args.rules]
    if args.check_catalog:
        verdict = discharge.check_unavoidability(g, rules)
        print(verdict.value)
        if verdict is discharge.Verdict.COUNTEREXAMPLE:
            return 3
        return 0
    rep = discharge.run(g, rules)
    for v in range(g.n):
        print(f"{v} {rep.initial[v]} {rep.final[v]}")
    print(f"min {rep.min_final.numerator}/{rep.min_final.denominator}")
    return 0


def cmd_gen(args):
    params = {}
    if args.n is not None:
        params["n"] = args.n
    if args.bound is not None:
        params["bound"] = args.bound
    if args.side is not None:
        params["side"] = args.side
    if args.base is not None:
        params["base"] = args.base
    if args.catalog is not None:
        params["catalog"] = CATALOGS.get(args.catalog, args.catalog)
    if args.tag is not None:
        params["tag"] = args.tag
    if args.variant is not None:
        params["variant"] = args.variant
    seed = DEFAULT_SEED if args.seed is None else args.seed
    print(f"seed {seed}", file=sys.stderr)
    g = gen.generate(gen.GenSpec.make(args.kind, seed=seed, **params))
    sys.stdout.write(format_graph(g))
    return 0


def build_parser():
    p = argparse.ArgumentParser(
        prog="madweight",
        description="proper 3-weightings and total 2-weightings for graphs "
                    "of maximum average degree below 8/3")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("mad", help="exact maximum average degree")
    q.add_argument("graph")
    q.set_defaults(fn=cmd_mad)

    q = sub.add_parser("detect", help="list configuration instances")
    q.add_argument("--catalog", required=True, choices=sorted(CATALOGS))
    q.add_argument("graph")
    q.set_defaults(fn=cmd_detect)

    q = sub.add_parser("solve", help="produce a proper weighting")
    q.add_argument("--mode", required=True, choices=("123", "12"))
    q.add_argument("--level", default="83", choices=("52", "83"))
    q.add_argument("--force", action="store_true",
                   help="skip the density precondition check")
    q.add_argument("--trace", action="store_true",
                   help="write the reduction trace to stderr")
    q.add_argument("graph")
    q.set_defaults(fn=cmd_solve)

    q = sub.add_parser("verify", help="check a weighting for violations")
    q.add_argument("--mode", required=True, choices=("123", "12"))
    q.add_argument("graph")
    q.add_argument("weighting")
    q.set_defaults(fn=cmd_verify)

    q = sub.add_parser("oracle", help="brute-force existence or count")
    q.add_argument("--mode", required=True, choices=("123", "12"))
    q.add_argument("--count", action="store_true")
    q.add_argument("graph")
    q.set_defaults(fn=cmd_oracle)

    q = sub.add_parser("discharge", help="run a discharging rule set")
    q.add_argument("--rules", required=True,
                   choices=("r52", "r83-12", "r83-123"))
    q.add_argument("--check-catalog", action="store_true",
                   help="couple with the structural catalog and report "
                        "the unavoidability verdict")
    q.add_argument("graph")
    q.set_defaults(fn=cmd_discharge)

    q = sub.add_parser("gen", help="generate a graph")
    q.add_argument("kind")
    q.add_argument("--n", type=int)
    q.add_argument("--bound")
    q.add_argument("--seed", type=int)
    q.add_argument("--side")
    q.add_argument("--base")
    q.add_argument("--catalog")
    q.add_argument("--tag")
    q.add_argument("--variant", type=int)
    q.set_defaults(fn=cmd_gen)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (InternalInconsistency,) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 3
    except (ExtensionImpossible, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (MadweightError, OSError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
