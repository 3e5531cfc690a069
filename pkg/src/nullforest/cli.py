"""Command-line front end.

Subcommands: support, basis, sparsest, nnz, stats, verify, gen, bench.
Input files use the edge-list format of :mod:`nullforest.forest`; ``-`` reads
stdin.  Output is deterministic for fixed input (bench timing columns aside).
Exit codes: 0 success, 1 parse/validation error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import sys
import time
from math import floor, log10

from . import _backend
from .errors import NullForestError
from .forest import format_forest, parse_forest
from .formats import format_basis_mm, format_basis_text, parse_basis_text
from .generators import FAMILIES, GenSpec, generate
from .matching import maximum_matching
from .nullspace import null_basis, support_set
from .oracle import verify_basis
from .sparsest import build_support_forest, sparsest_basis, sparsest_nnz_count


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _read_source(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _fmt_ms(ms: float) -> str:
    """Milliseconds rounded to 3 significant digits, plain decimal."""
    if ms <= 0:
        return "0.00"
    exp = floor(log10(ms))
    nd = max(0, 2 - exp)
    return f"{round(ms, 2 - exp):.{nd}f}"


def _emit_basis(basis, fmt: str) -> None:
    if fmt == "mm":
        sys.stdout.write(format_basis_mm(basis))
    else:
        sys.stdout.write(format_basis_text(basis))


def _cmd_support(args) -> int:
    f = parse_forest(_read_source(args.input))
    s = support_set(f, maximum_matching(f))
    sys.stdout.write("".join(f"{v}\n" for v in s))
    return 0


def _cmd_basis(args) -> int:
    f = parse_forest(_read_source(args.input))
    _emit_basis(null_basis(f, maximum_matching(f)), args.format)
    return 0


def _cmd_sparsest(args) -> int:
    f = parse_forest(_read_source(args.input))
    basis = sparsest_basis(f)
    if args.sort_by_nnz:
        from .nullspace import NullBasis
        basis = NullBasis(
            basis.n, sorted(basis, key=lambda t: (t[1].nnz, t[0])))
    _emit_basis(basis, args.format)
    return 0


def _cmd_nnz(args) -> int:
    f = parse_forest(_read_source(args.input))
    sys.stdout.write(f"{sparsest_nnz_count(f)}\n")
    return 0


def _cmd_stats(args) -> int:
    f = parse_forest(_read_source(args.input))
    m = maximum_matching(f)
    s = support_set(f, m)
    g = build_support_forest(f, s)
    lines = [
        f"n={f.n}",
        f"m={f.m}",
        f"matching={m.size}",
        f"nullity={f.n - 2 * m.size}",
        f"support={len(s)}",
        f"core={g.core_count}",
        f"nnz={sparsest_nnz_count(f)}",
    ]
    sys.stdout.write("".join(line + "\n" for line in lines))
    return 0


def _cmd_verify(args) -> int:
    f = parse_forest(_read_source(args.forest))
    basis = parse_basis_text(_read_source(args.basis), f.n)
    report = verify_basis(f, basis)
    sys.stdout.write(str(report) + "\n")
    return 0 if report.ok else 2


def _cmd_gen(args) -> int:
    spec = GenSpec(args.family, args.n, components=args.components,
                   seed=args.seed)
    sys.stdout.write(format_forest(generate(spec)))
    return 0


def _cmd_bench(args) -> int:
    sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]
    if args.backend == "both":
        backends = list(_backend.available_backends())
        if len(backends) < 2:
            print("error: compiled backend is not built; cannot compare",
                  file=sys.stderr)
            return 1
    elif args.backend == "auto":
        backends = [_backend.backend_name()]
    else:
        backends = [args.backend]
    if args.csv:
        sys.stdout.write("backend,n,nnz,time_ms\n")
    else:
        sys.stdout.write(f"{'backend':>8} {'n':>10} {'nnz':>12} {'time_ms':>10}\n")
    previous = _backend.backend_name()
    try:
        for n in sizes:
            f = generate(GenSpec(args.family, n, seed=args.seed))
            for name in backends:
                try:
                    _backend.set_backend(name)
                except (RuntimeError, ValueError) as exc:
                    print(f"error: {exc}", file=sys.stderr)
                    return 1
                best = None
                basis = None
                for _ in range(max(1, args.repeat)):
                    t0 = time.perf_counter()
                    basis = sparsest_basis(f)
                    dt = time.perf_counter() - t0
                    best = dt if best is None else min(best, dt)
                ms = _fmt_ms(best * 1e3)
                nnz = basis.total_nnz
                if args.csv:
                    sys.stdout.write(f"{name},{n},{nnz},{ms}\n")
                else:
                    sys.stdout.write(f"{name:>8} {n:>10} {nnz:>12} {ms:>10}\n")
                sys.stdout.flush()
    finally:
        _backend.set_backend(previous)
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="nullforest",
                     description="Null-space supports and sparsest {-1,0,1} "
                                 "null bases of forests.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("support", help="print the null-space support set")
    p.add_argument("input", help="forest file, or - for stdin")
    p.set_defaults(func=_cmd_support)

    p = sub.add_parser("basis", help="print a {-1,0,1} null basis")
    p.add_argument("input")
    p.add_argument("--format", choices=("txt", "mm"), default="txt")
    p.set_defaults(func=_cmd_basis)

    p = sub.add_parser("sparsest", help="print a sparsest {-1,0,1} null basis")
    p.add_argument("input")
    p.add_argument("--format", choices=("txt", "mm"), default="txt")
    p.add_argument("--sort-by-nnz", action="store_true",
                   help="order vectors by nonzero count instead of anchor id")
    p.set_defaults(func=_cmd_sparsest)

    p = sub.add_parser("nnz", help="print the sparsest-basis nonzero count")
    p.add_argument("input")
    p.set_defaults(func=_cmd_nnz)

    p = sub.add_parser("stats", help="print size, matching, nullity, support stats")
    p.add_argument("input")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("verify", help="check a basis file against a forest file")
    p.add_argument("forest")
    p.add_argument("basis")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("gen", help="emit a generated forest")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--components", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="time sparsest-basis construction")
    p.add_argument("--family", choices=FAMILIES, default="path")
    p.add_argument("--sizes", default="10000,100000",
                   help="comma-separated vertex counts (may be empty)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeat", type=int, default=1,
                   help="repetitions per row; best time is reported")
    p.add_argument("--csv", action="store_true")
    p.add_argument("--backend", choices=("auto", "py", "ext", "both"),
                   default="auto")
    p.set_defaults(func=_cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except NullForestError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
