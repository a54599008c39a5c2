"""Command-line interface: count, table, bijection, verify, export.

Exit codes: 0 ok, 1 usage or parse error, 2 verification failure or
engine/golden mismatch, 3 input outside the required class.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import checks
from .bijections import (DIRECTIONS, InternalCaseGap, NoValidChoice, PreconditionViolated,
                         TargetClassViolation, apply_map)
from .expansions import Monomial
from .partitions import ClassSpec, InvalidClassSpec, Partition, PartitionSyntaxError, count
from .recurrences import c4_triangular, d4_two_parts, table_for
from .series import UnsupportedClass, class_genfun
from .tables import ERRATA, GOLDEN_NK

EXIT_OK, EXIT_USAGE, EXIT_FAIL, EXIT_PRECONDITION = 0, 1, 2, 3

ORDER_ENV = "QPARTITIONS_ORDER"

CLASS_NAMES = {
    "modular": "modular", "congruent": "congruent", "duplicate": "duplicate",
    "congruent-distinct": "congruent_distinct", "eclass": "eclass",
    "vclass": "vclass", "wclass": "wclass", "pod": "pod", "ped": "ped",
    "unrestricted": "unrestricted", "two-part-duplicate4": "two_part_duplicate4",
}

SEQUENCES = {
    "pod": lambda N: list(class_genfun(ClassSpec.pod(), N)),
    "c6": lambda N: list(class_genfun(ClassSpec.congruent(6), N)),
    "d4k2": lambda N: [d4_two_parts(n) for n in range(N + 1)],
    "c4t3": lambda N: list(class_genfun(ClassSpec.congruent_distinct(4, 3), N)),
    "c4t5": lambda N: list(class_genfun(ClassSpec.congruent_distinct(4, 5), N)),
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def default_order(fallback: int | None) -> int | None:
    raw = os.environ.get(ORDER_ENV)
    if raw is None or raw == "":
        return fallback
    try:
        v = int(raw)
    except ValueError:
        raise UsageError(f"{ORDER_ENV} must be a non-negative integer, got {raw!r}")
    if v < 0:
        raise UsageError(f"{ORDER_ENV} must be a non-negative integer, got {raw!r}")
    return v


def _add_class_args(p, required=True):
    p.add_argument("--class", dest="cls", choices=sorted(CLASS_NAMES), required=required)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--i", type=int)


def _class_from(args) -> ClassSpec:
    kind = CLASS_NAMES[args.cls]
    return ClassSpec(kind, s=args.s, t=args.t, k=args.k, i=args.i)


# -- count ---------------------------------------------------------------

def _engines(c: ClassSpec):
    out = {"oracle": lambda n: count(n, c)}
    try:
        class_genfun(c, 0)
        out["series"] = lambda n: class_genfun(c, n)[n]
    except UnsupportedClass:
        pass
    if c.kind in ("modular", "congruent", "duplicate"):
        out["recurrence"] = lambda n: table_for(c, n, n).row_sum(n)
    if c.kind == "congruent" and c.s == 4:
        out["triangular"] = c4_triangular
    if c.kind == "two_part_duplicate4":
        out["recurrence"] = d4_two_parts
    return out


def cmd_count(args, out) -> int:
    c = _class_from(args)
    if args.n < 0:
        raise UsageError("n must be non-negative")
    engines = _engines(c)
    if args.check:
        values = {name: f(args.n) for name, f in engines.items()}
        if len(set(values.values())) != 1:
            for name, v in values.items():
                print(f"{name}: {v}", file=out)
            print(f"engine mismatch for {c} at n={args.n}", file=sys.stderr)
            return EXIT_FAIL
        print(next(iter(values.values())), file=out)
        return EXIT_OK
    engine = args.engine
    if engine == "recurrence" and "recurrence" not in engines and "triangular" in engines:
        engine = "triangular"
    if engine not in engines:
        raise UsageError(f"engine {args.engine!r} does not support {c}")
    print(engines[engine](args.n), file=out)
    return EXIT_OK


# -- table ---------------------------------------------------------------

def _golden_for(c: ClassSpec):
    for g in GOLDEN_NK.values():
        if g.kind == c.kind and g.s == c.s:
            return g
    return None


def cmd_table(args, out) -> int:
    c = _class_from(args)
    if c.kind not in ("modular", "congruent", "duplicate"):
        raise UsageError("tables exist for modular, congruent and duplicate classes")
    N = args.max_n
    K = args.max_k if args.max_k is not None else N
    if N < 0 or K < 0:
        raise UsageError("table bounds must be non-negative")
    tab = table_for(c, N, K)
    if args.format == "csv":
        print("n," + ",".join(f"k{k}" for k in range(K + 1)), file=out)
        for n in range(N + 1):
            print(f"{n}," + ",".join(str(tab.cell(n, k)) for k in range(K + 1)), file=out)
    elif args.format == "plain":
        width = max(len(str(tab.cell(n, k))) for n in range(N + 1) for k in range(K + 1))
        for n in range(N + 1):
            cells = " ".join(str(tab.cell(n, k)).rjust(width) for k in range(K + 1))
            print(f"{n:>3} | {cells}", file=out)
    else:
        raise UsageError("tables support plain and csv output")
    if not args.golden:
        return EXIT_OK
    g = _golden_for(c)
    if g is None:
        raise UsageError(f"no embedded reference table for {c}")
    diffs = []
    for n in range(1, min(N, g.max_n) + 1):
        for k in range(1, min(K, g.max_k) + 1):
            printed, got = g.cell(n, k), tab.cell(n, k)
            if printed != got:
                note = " (known misprint)" if (g.name, n, k) in ERRATA else ""
                diffs.append(f"golden {g.name} ({n},{k}): printed {printed}, computed {got}{note}")
    for line in diffs:
        print(line, file=sys.stderr)
    if diffs:
        return EXIT_FAIL
    print(f"golden {g.name}: all cells match", file=sys.stderr)
    return EXIT_OK


# -- bijection -----------------------------------------------------------

def cmd_bijection(args, out) -> int:
    try:
        lam = Partition.parse(args.partition)
    except PartitionSyntaxError as exc:
        raise UsageError(str(exc))
    try:
        img, steps = apply_map(args.direction, lam, args.s, literal=args.literal)
    except PreconditionViolated as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (TargetClassViolation, InternalCaseGap, NoValidChoice) as exc:
        print(f"map failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.trace:
        for st in steps:
            print(st, file=out)
    print(img, file=out)
    return EXIT_OK


# -- verify --------------------------------------------------------------

def _monomials(texts, size):
    try:
        ms = [Monomial.parse(t) for t in texts]
    except ValueError as exc:
        raise UsageError(str(exc))
    if len(ms) % size:
        raise UsageError(f"--params needs a multiple of {size} monomials")
    return [tuple(ms[i:i + size]) for i in range(0, len(ms), size)]


def cmd_verify(args, out) -> int:
    name = args.identity
    order = args.order if args.order is not None else default_order(None)
    kw = {}
    if name in ("gauss", "pentagonal", "lebesgue", "sylvester", "rogers-fine", "jacobi",
                "alladi", "generalized-expansion", "over-forms", "congruence-spot"):
        if order is not None:
            kw["order"] = order
    if name in ("merca", "andrews-vw", "equinumerosity"):
        n = args.max_n if args.max_n is not None else order
        if n is not None:
            kw["max_n"] = n
    elif args.max_n is not None:
        kw["order" if name != "alladi" else "max_n"] = args.max_n
    if name in ("generalized-expansion", "equinumerosity"):
        kw["s"] = args.s if args.s is not None else 4
    if name == "over-forms" and args.s is not None:
        kw["s_values"] = (args.s,)
    if name == "andrews-vw" and args.t is not None:
        kw["t_values"] = (args.t,)
    if name == "congruence-spot":
        kw["family"] = args.family
    if name == "rogers-fine" and args.params:
        kw["params"] = _monomials(args.params, 3)
    if name == "jacobi" and args.params:
        kw["params"] = _monomials(args.params, 2)
    if kw.get("s") is not None and (kw["s"] < 4 or kw["s"] % 2):
        raise UsageError("s must be an even integer >= 4")
    try:
        res = checks.CHECKS[name](**kw)
    except (ValueError, InvalidClassSpec) as exc:
        raise UsageError(str(exc))
    print(res.line(), file=out)
    return EXIT_OK if res.ok else EXIT_FAIL


# -- export --------------------------------------------------------------

def cmd_export(args, out) -> int:
    N = args.n if args.n is not None else default_order(30)
    if N < 0:
        raise UsageError("N must be non-negative")
    if args.sequence:
        values = SEQUENCES[args.sequence](N)
    else:
        if not args.cls:
            raise UsageError("give a sequence name or --class")
        c = _class_from(args)
        try:
            values = list(class_genfun(c, N))
        except UnsupportedClass:
            values = [count(n, c) for n in range(N + 1)]
    if args.format == "bfile":
        text = "".join(f"{n} {v}\n" for n, v in enumerate(values))
    elif args.format == "csv":
        text = "n,a(n)\n" + "".join(f"{n},{v}\n" for n, v in enumerate(values))
    else:
        text = ",".join(str(v) for v in values) + "\n"
    if args.output:
        with open(args.output, "w", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qpartitions", description="Exact counting, bijections and q-series checks "
                     "for s-modular, s-congruent and s-duplicate partitions.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("count", help="count partitions of n in a class")
    _add_class_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--engine", choices=["oracle", "series", "recurrence"], default="series")
    p.add_argument("--check", action="store_true", help="run every applicable engine and compare")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="(n, k) table from the recurrences")
    _add_class_args(p)
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-k", type=int)
    p.add_argument("--format", choices=["plain", "csv"], default="plain")
    p.add_argument("--golden", action="store_true", help="compare with the embedded reference table")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("bijection", help="apply one of the class bijections")
    p.add_argument("direction", choices=DIRECTIONS)
    p.add_argument("partition", help='e.g. "3,2,1^5"')
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--literal", action="store_true", help="use the literal reading of the map rules")
    p.set_defaults(func=cmd_bijection)

    p = sub.add_parser("verify", help="run a named identity or consistency check")
    p.add_argument("identity", choices=sorted(checks.CHECKS))
    p.add_argument("--order", type=int, help=f"truncation order (default: ${ORDER_ENV} or per check)")
    p.add_argument("--max-n", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--family", choices=sorted(checks.CONGRUENCE_FAMILIES), default="radu-sellers")
    p.add_argument("--params", nargs="+", help="monomials such as 1 q -2q^3")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write a sequence as a b-file, csv or plain list")
    p.add_argument("sequence", nargs="?", choices=sorted(SEQUENCES))
    _add_class_args(p, required=False)
    p.add_argument("--n", type=int, help=f"last index (default: ${ORDER_ENV} or 30)")
    p.add_argument("--format", choices=["plain", "csv", "bfile"], default="bfile")
    p.add_argument("--output", "-o")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except (UsageError, InvalidClassSpec) as exc:
        print(f"qpartitions: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
