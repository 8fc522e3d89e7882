"""Command line interface.

Every subcommand is a thin wrapper over the library; anything it prints
can be recomputed with two or three lines of Python.  Output defaults to
plain text, with ``--format json`` (and ``csv`` where a row shape exists)
for scripting.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bounds, covering, numtheory, partitions, suite, tables
from .covering import (
    Alternating,
    BasicSet,
    Imprimitive,
    Intransitive,
    PrimitiveEntry,
    alt,
    sym,
)
from .errors import DomainError


def _group(args) -> covering.GroupKind:
    fam = getattr(args, "group", "sym")
    return sym(args.n) if fam == "sym" else alt(args.n)


def _emit(args, payload: dict, text: str):
    if getattr(args, "format", "text") == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _fmt_partition(p) -> str:
    return "[" + ",".join(str(t) for t in p) + "]"


def _parse_component(text: str, n: int):
    kind, _, arg = text.partition(":")
    if kind == "intransitive":
        return Intransitive(int(arg))
    if kind == "imprimitive":
        return Imprimitive(int(arg))
    if kind == "alternating":
        return Alternating()
    if kind == "primitive":
        p = partitions.canonical(int(t) for t in arg.split(","))
        return PrimitiveEntry("cli", p)
    raise DomainError(f"unknown component kind {kind!r}")


def _cmd_count(args) -> int:
    if args.cluster is not None:
        val = partitions.count_cluster_partitions(args.n, args.cluster, args.k)
        label = f"p{args.k}({args.n},{args.cluster})"
    elif args.coprime:
        val = partitions.count_coprime(args.n, args.k)
        label = f"p{args.k}'({args.n})"
    elif args.k is None:
        val = partitions.count_all_partitions(args.n)
        label = f"p({args.n})"
    else:
        val = partitions.count_partitions(args.n, args.k)
        label = f"p{args.k}({args.n})"
    _emit(args, {"label": label, "value": val}, f"{label} = {val}")
    return 0


def _cmd_enum(args) -> int:
    import math

    out = []
    for p in partitions.enumerate_partitions(args.n, args.k):
        if args.coprime and math.gcd(*p, 0) != 1:
            continue
        if args.cluster is not None and not partitions.has_cluster(p, args.cluster):
            continue
        out.append(p)
        if args.limit and len(out) >= args.limit:
            break
    if args.format == "json":
        print(json.dumps([list(p) for p in out]))
    else:
        for p in out:
            print(_fmt_partition(p))
    return 0


def _cmd_clusters(args) -> int:
    fam = partitions.ClusterFamily(args.n, tuple(sorted(args.x)))
    if args.union:
        val = partitions.union_cluster_count(fam)
        _emit(
            args,
            {"n": args.n, "x": list(fam.xs), "union_count": val},
            f"|union of clusters {list(fam.xs)} at n={args.n}| = {val}",
        )
        return 0
    inter = sorted(partitions.cluster_intersection(fam, verify=args.verify))
    payload = {"n": args.n, "x": list(fam.xs), "intersection": [list(p) for p in inter]}
    text = " ".join(_fmt_partition(p) for p in inter) if inter else "(empty)"
    _emit(args, payload, text)
    return 0


def _cmd_coprime(args) -> int:
    val = partitions.count_coprime(args.n, args.k)
    _emit(args, {"n": args.n, "k": args.k, "count": val},
          f"p{args.k}'({args.n}) = {val}")
    return 0


def _cmd_qset(args) -> int:
    reps = sorted(numtheory.q_set(args.n))
    payload = {"n": args.n, "q_set": [[q, d] for q, d in reps]}
    text = " ".join(f"({q},{d})" for q, d in reps) if reps else "(empty)"
    _emit(args, payload, text)
    return 0


def _cmd_covers(args) -> int:
    g = _group(args)
    p = partitions.canonical(int(t) for t in args.partition.split(","))
    comp = _parse_component(args.component, args.n)
    val = covering.covers(comp, p, g)
    _emit(
        args,
        {"component": str(comp), "partition": list(p), "group": str(g), "covers": val},
        f"{comp} covers {_fmt_partition(p)} in {g}: {str(val).lower()}",
    )
    return 0


def _cmd_maroti(args) -> int:
    bs = covering.maroti_basic_set(args.n)
    bound = covering.maroti_upper_bound(args.n)
    payload = {
        "n": args.n,
        "components": [str(c) for c in bs.components],
        "size": len(bs.components),
        "size_bound": f"{bound.numerator}/{bound.denominator}",
    }
    lines = [str(c) for c in bs.components]
    lines.append(f"size {len(bs.components)} <= n/3 + phi(n)/2 + omega(n) = {float(bound):g}")
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_verify(args) -> int:
    if args.maroti:
        bs = covering.maroti_basic_set(args.n)
    else:
        g = _group(args)
        comps = tuple(_parse_component(s, args.n) for s in args.component)
        bs = BasicSet(g, comps)
    report = covering.verify_basic_set(bs, limit=args.limit)
    payload = {
        "group": str(bs.group),
        "complete": report.complete,
        "checked": report.checked,
        "covered": report.covered_count,
        "uncovered_total": report.uncovered_total,
        "uncovered_sample": [list(p) for p in report.uncovered],
    }
    lines = [
        f"complete: {str(report.complete).lower()}, "
        f"partitions checked: {report.checked}"
    ]
    if not report.complete:
        lines.append(f"uncovered: {report.uncovered_total}")
        for p in report.uncovered:
            lines.append(f"  {_fmt_partition(p)}")
    _emit(args, payload, "\n".join(lines))
    return 0 if report.complete else 1


def _cmd_conjecture(args) -> int:
    val = covering.conjecture_value(args.n)
    _emit(args, {"n": args.n, "value": val}, f"conjectured value at n={args.n}: {val}")
    return 0


def _cmd_bound(args) -> int:
    g = _group(args)
    report = bounds.bound_report(g, prec=args.prec)
    if args.format == "csv":
        print(bounds.BoundReport.csv_header())
        print(report.to_csv_row())
    elif args.format == "json":
        print(json.dumps(report.to_dict(), sort_keys=True))
    else:
        for key, val in report.to_dict().items():
            print(f"{key}: {val}")
    return 0


def _cmd_tables(args) -> int:
    if args.action == "dump":
        sys.stdout.buffer.write(tables.table_bytes())
        return 0
    types = sorted(tables.catalog_types(args.n))
    payload = {"n": args.n, "types": [list(p) for p in types]}
    text = " ".join(_fmt_partition(p) for p in types) if types else "(empty)"
    _emit(args, payload, text)
    return 0


def _cmd_counterexample(args) -> int:
    report = covering.counterexample_check(args.p, args.r, prime_budget=args.budget)
    payload = {
        "p": args.p,
        "r": args.r,
        "feasible": report.feasible,
        "phi_ratio": f"{report.phi_ratio.numerator}/{report.phi_ratio.denominator}"
        if report.phi_ratio is not None
        else None,
        "a2_holds": report.a2_holds,
        "a3_holds": report.a3_surrogate_holds,
        "a4_holds": report.a4_holds,
        "note": report.note,
    }
    lines = [f"feasible within budget: {str(report.feasible).lower()}"]
    if report.phi_ratio is not None:
        lines.append(
            f"phi(N)/N = {report.phi_ratio.numerator}/{report.phi_ratio.denominator}"
            f" ~ {float(report.phi_ratio):.6f}"
        )
        lines.append(f"coefficient inequality: {str(report.a2_holds).lower()}")
        lines.append(f"growth inequality: {str(report.a3_surrogate_holds).lower()}")
        lines.append(f"density below 1/7: {str(report.a4_holds).lower()}")
    lines.append(report.note)
    _emit(args, payload, "\n".join(lines))
    return 0


def _cmd_suite(args) -> int:
    results = suite.run_suite(level=args.level, seed=args.seed)
    failed = [r for r in results if not r.ok]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="normcov",
        description="Partition combinatorics and certified bounds for normal "
        "covering numbers of Sym(n) and Alt(n).",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, func, help):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")
        return p

    p = add("count", _cmd_count, "count partitions of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None, help="number of parts")
    p.add_argument("--coprime", action="store_true", help="count coprime types only")
    p.add_argument("--cluster", type=int, default=None, help="count k-partitions with an x-cluster")

    p = add("enum", _cmd_enum, "list partitions of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--coprime", action="store_true")
    p.add_argument("--cluster", type=int, default=None)
    p.add_argument("--limit", type=int, default=None, help="stop after this many")

    p = add("clusters", _cmd_clusters, "intersect or union cluster sets of 3-partitions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=int, nargs="+", required=True, help="cluster sizes")
    p.add_argument("--union", action="store_true", help="count the union instead")
    p.add_argument("--verify", action="store_true", help="cross-check closed form by enumeration")

    p = add("coprime", _cmd_coprime, "count coprime partition types")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("qset", _cmd_qset, "projective parameter pairs (q,d) with n=(q^d-1)/(q-1)")
    p.add_argument("--n", type=int, required=True)

    p = add("covers", _cmd_covers, "does a component cover a cycle type")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--group", choices=["sym", "alt"], default="sym")
    p.add_argument("--component", required=True,
                   help="intransitive:K | imprimitive:B | alternating | primitive:a,b,c")
    p.add_argument("--partition", required=True, help="comma separated terms")

    p = add("maroti", _cmd_maroti, "the standard covering construction for composite n")
    p.add_argument("--n", type=int, required=True)

    p = add("verify", _cmd_verify, "exhaustively verify a basic set covers its group")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--group", choices=["sym", "alt"], default="sym")
    p.add_argument("--maroti", action="store_true", help="verify the standard construction")
    p.add_argument("--component", action="append", default=[],
                   help="repeatable; same syntax as covers --component")
    p.add_argument("--limit", type=int, default=10, help="max uncovered examples reported")

    p = add("conjecture", _cmd_conjecture, "conjectured covering number")
    p.add_argument("--n", type=int, required=True)

    p = add("bound", _cmd_bound, "full certified bound report")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--group", choices=["sym", "alt"], default="sym")
    p.add_argument("--prec", type=int, default=bounds.DEFAULT_PRECISION)

    p = add("tables", _cmd_tables, "primitive type catalog")
    p.add_argument("action", choices=["dump", "show"])
    p.add_argument("--n", type=int, default=None, help="degree (show only)")

    p = add("counterexample", _cmd_counterexample, "probe the counterexample inequality chain")
    p.add_argument("--p", type=int, required=True, help="smallest prime of the family")
    p.add_argument("--r", type=int, required=True, help="number of primes")
    p.add_argument("--budget", type=int, default=10**7,
                   help="largest prime the probe will materialize")

    p = add("suite", _cmd_suite, "run the verification battery")
    p.add_argument("--level", choices=["desk", "quick"], default="desk")
    p.add_argument("--seed", type=int, default=suite.DEFAULT_SEED)
    p.add_argument("--threads", type=int, default=1,
                   help="accepted for compatibility; execution is serial")

    return top


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "tables" and args.action == "show" and args.n is None:
        print("tables show requires --n", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
