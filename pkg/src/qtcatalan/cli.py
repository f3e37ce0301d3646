"""Command-line interface: ``qtcatalan <command> ...``.

Exit codes: 0 success, 1 a verification check failed, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import checks
from .catalan_diagrams import catalan_diagrams, census
from .config import CheckConfig
from .constructions import ConstructionError, basis_certificate, construct_D_nu, construct_f_nu
from .diagrams import DiagramError, format_diagram, parse_diagram
from .dyck import build_table
from .phi import SizeGuardError, phi

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _n_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected A..B, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _partition(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated parts, got {text!r}") from None


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def cmd_table(args) -> int:
    t = build_table(args.n)
    _emit(args, t.to_json() if args.json else t.format_grid())
    return EXIT_OK


def cmd_coeff(args) -> int:
    t = build_table(args.n)
    c = t[args.d1, args.d2]
    _emit(args, json.dumps({"n": args.n, "d1": args.d1, "d2": args.d2, "coeff": str(c)}) if args.json else str(c))
    return EXIT_OK


def cmd_phi(args) -> int:
    d = parse_diagram(args.diagram)
    value = phi(d, method=args.method)
    _emit(args, value.to_json() if args.json else str(value))
    return EXIT_OK


def cmd_diagrams(args) -> int:
    if (args.d1 is None) != (args.d2 is None):
        raise UsageError("--d1 and --d2 go together")
    if args.d1 is None:
        t = census(args.n)
        _emit(args, t.to_json() if args.json else t.format_grid())
        return EXIT_OK
    ds = catalan_diagrams(args.n, (args.d1, args.d2))
    if args.json:
        _emit(args, json.dumps([format_diagram(d) for d in ds]))
    else:
        _emit(args, "\n".join(format_diagram(d) for d in ds))
    return EXIT_OK


def _cert_text(c) -> str:
    lines = [f"nu={tuple(c.nu)} bidegree={c.bidegree} method={c.method}"]
    for coeff, d in c.terms:
        lines.append(f"  {coeff:+d} {format_diagram(d)}")
    lines.append(f"  phi = {c.phi_value}")
    return "\n".join(lines)


def cmd_construct(args) -> int:
    if args.kind == "basis":
        rep = basis_certificate(args.n, args.d1, args.d2)
        if args.json:
            _emit(args, json.dumps(rep.to_json_obj(), indent=2))
        else:
            head = f"n={rep.n} bidegree={rep.bidegree} k={rep.k} rank={rep.rank}"
            _emit(args, "\n".join([head] + [_cert_text(c) for c in rep.certificates]))
        return EXIT_OK
    if args.partition is None:
        raise UsageError("--partition is required for dnu and fnu")
    fn = construct_D_nu if args.kind == "dnu" else construct_f_nu
    cert = fn(args.n, args.d1, args.d2, args.partition)
    _emit(args, json.dumps(cert.to_json_obj(), indent=2) if args.json else _cert_text(cert))
    return EXIT_OK


def cmd_check(args) -> int:
    suites = tuple(checks.SUITES) if not args.suite or "all" in args.suite else tuple(args.suite)
    cfg = CheckConfig(suites, args.n_range, args.seed, args.trials, args.parallel)
    rep = checks.check_all(cfg.suites, cfg.n_range, cfg.seed, cfg.trials, parallel=cfg.parallel)
    _emit(args, rep.to_json() if args.json else rep.format())
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_export(args) -> int:
    t = build_table(args.n)
    _emit(args, t.to_csv() if args.format == "csv" else t.to_json())
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qtcatalan", description="q,t-Catalan tables, diagrams and the phi map.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--out", help="write output to FILE instead of stdout")
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        return sp

    sp = common(sub.add_parser("table", help="coefficient grid of C_n(q,t)"))
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=cmd_table)

    sp = common(sub.add_parser("coeff", help="one coefficient of C_n(q,t)"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d1", type=int, required=True)
    sp.add_argument("--d2", type=int, required=True)
    sp.set_defaults(func=cmd_coeff)

    sp = common(sub.add_parser("phi", help="evaluate phi on a diagram"))
    sp.add_argument("--diagram", required=True, help='points like "(-1,1);(0,0);(0,1)"')
    sp.add_argument("--method", choices=["det", "perm", "both"], default="det")
    sp.set_defaults(func=cmd_phi)

    sp = common(sub.add_parser("diagrams", help="Catalan diagrams or their bidegree census"))
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d1", type=int)
    sp.add_argument("--d2", type=int)
    sp.set_defaults(func=cmd_diagrams)

    sp = common(sub.add_parser("construct", help="generator constructions"))
    sp.add_argument("kind", choices=["dnu", "fnu", "basis"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d1", type=int, required=True)
    sp.add_argument("--d2", type=int, required=True)
    sp.add_argument("--partition", type=_partition)
    sp.set_defaults(func=cmd_construct)

    sp = common(sub.add_parser("check", help="run verification suites"))
    sp.add_argument("--suite", action="append", choices=list(checks.SUITES) + ["all"])
    sp.add_argument("--n-range", type=_n_range, dest="n_range")
    sp.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    sp.add_argument("--trials", type=int)
    sp.add_argument("--parallel", type=int, default=0, metavar="WORKERS")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("export", help="export the coefficient table")
    sp.add_argument("format", choices=["csv", "json"])
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, DiagramError, SizeGuardError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConstructionError as exc:
        print(f"construction failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
