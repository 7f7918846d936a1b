"""Command-line front end: ``pelastica {eval,classify,trace,closed,special,verify}``.

Exit status: 0 success, 1 failed verification (or numerical failure),
2 usage error, 3 domain error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from . import curves, elliptic as ell, verify
from ._errors import AmbiguityError, DomainError, PElasticaError
from .classify import FlatCoreSpec, canonical_class, classify, regularity

EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 1, 2, 3

FUNCTIONS = ("F1", "F2", "E1", "E2", "am1", "am2", "sn", "cn", "dn", "sech", "tanh")
TRACE_FAMILIES = ("wavelike", "borderline", "orbitlike", "circular", "linear", "flatcore")
SPECIAL = ("qstar", "kp1", "K1", "K2", "E1c", "E2c", "regularity")


def _finite(text: str) -> float:
    try:
        v = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(v):
        raise argparse.ArgumentTypeError(f"must be finite: {text!r}")
    return v


def _exponent(text: str) -> float:
    v = _finite(text)
    if not v > 1.0:
        raise argparse.ArgumentTypeError(f"p must be > 1, got {text}")
    return v


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _range(text: str) -> tuple[float, float]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError("range must look like A:B")
    a, b = _finite(lo), _finite(hi)
    if not b > a:
        raise argparse.ArgumentTypeError("range needs A < B")
    return a, b


def _load_spec(path: str | None) -> FlatCoreSpec | None:
    if path is None:
        return None
    try:
        return FlatCoreSpec.from_dict(json.loads(Path(path).read_text()))
    except (OSError, json.JSONDecodeError) as exc:
        raise DomainError(f"cannot read flat-core spec {path}: {exc}") from None


def _emit(text: str, path: str | None) -> None:
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _num(v: float) -> str:
    return repr(float(v))


# ---------------------------------------------------------------------------
# subcommands


def cmd_eval(args) -> int:
    fn = args.fn
    if fn in ("sech", "tanh"):
        f = ell.sech if fn == "sech" else ell.tanh
        print(_num(f(args.p, args.x)))
        return 0
    if args.q is None:
        raise DomainError(f"--q is required for {fn}")
    if fn in ("F1", "F2", "E1", "E2"):
        print(_num(ell.integral(fn, args.p, args.x, args.q)))
    elif fn in ("am1", "am2"):
        print(_num(ell.amplitude(int(fn[-1]), args.p, args.x, args.q)))
    elif fn in ("sn", "cn"):
        sn, cn = ell.sn_cn(args.p, args.x, args.q)
        print(_num(sn), _num(cn))
    else:
        print(_num(ell.dn(args.p, args.x, args.q)))
    return 0


def cmd_classify(args) -> int:
    hint = _load_spec(args.flatcore_spec)
    if args.linear:
        hint = "linear"
    cls = classify(args.p, args.lam, (args.w0, args.wdot0), hint)
    print(json.dumps(cls.to_dict()))
    return 0


def _render(trace, fmt: str) -> str:
    return curves.to_svg(trace) if fmt == "svg" else curves.to_csv(trace)


def cmd_trace(args) -> int:
    spec = _load_spec(args.spec)
    if args.family in ("wavelike", "orbitlike") and args.q is None:
        raise DomainError(f"--q is required for {args.family}")
    trace = curves.trace_family(args.family, args.p, args.q, args.range, args.n, spec)
    _emit(_render(trace, args.out), args.file)
    return 0


def cmd_closed(args) -> int:
    if args.family == "eight":
        trace = curves.figure_eight(args.p, args.n_fold, n_samples=args.n)
    else:
        trace = curves.trace_family("circular", args.p, None, (0.0, 2.0 * math.pi * args.n_fold), args.n)
    report = curves.closure_check(trace)
    out = {"family": args.family, "p": args.p, "n_fold": args.n_fold, "length": trace.length,
           "report": report.to_dict(), "closed": report.closed()}
    if args.family == "eight":
        out["q"] = trace.params["q"]
        out["lambda"] = canonical_class("wavelike", args.p, q=out["q"]).lam
    else:
        out["lambda"] = canonical_class("circular", args.p).lam
    if args.file:
        Path(args.file).write_text(_render(trace, args.out))
    print(json.dumps(out))
    return 0


def cmd_special(args) -> int:
    what = args.what
    if what == "regularity":
        print(json.dumps(regularity(args.p, args.family).to_dict()))
        return 0
    if what == "qstar":
        print(_num(curves.qstar(args.p)))
        return 0
    if what == "kp1":
        print(_num(ell.complete("F1", args.p, 1.0)))
        return 0
    if args.q is None:
        raise DomainError(f"--q is required for {what}")
    kind = {"K1": "F1", "K2": "F2", "E1c": "E1", "E2c": "E2"}[what]
    print(_num(ell.complete(kind, args.p, args.q)))
    return 0


def cmd_verify(args) -> int:
    if args.trace:
        if args.lam is None:
            raise DomainError("--lambda is required with --trace")
        trace = curves.from_csv(Path(args.trace).read_text())
        reports = [verify.trace_weak_residual(trace, args.p, args.lam, seed=args.seed)]
    else:
        families = [args.family] if args.family else None
        reports = verify.run_suite(args.p, args.suite, families, args.q, args.lam, args.seed, _load_spec(args.spec))
    print(json.dumps([r.to_dict() for r in reports], indent=1))
    return 0 if all(r.passed for r in reports) else EXIT_FAIL


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pelastica", description="p-elliptic functions and p-elasticae")
    sub = parser.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", help="evaluate an integral, amplitude or p-elliptic function")
    e.add_argument("--fn", required=True, choices=FUNCTIONS)
    e.add_argument("--p", required=True, type=_exponent)
    e.add_argument("--q", type=_finite)
    e.add_argument("--x", required=True, type=_finite)
    e.set_defaults(run=cmd_eval)

    c = sub.add_parser("classify", help="solution class through initial curvature data (JSON)")
    c.add_argument("--p", required=True, type=_exponent)
    c.add_argument("--lambda", dest="lam", required=True, type=_finite)
    c.add_argument("--w0", required=True, type=_finite)
    c.add_argument("--wdot0", required=True, type=_finite)
    c.add_argument("--flatcore-spec", metavar="FILE")
    c.add_argument("--linear", action="store_true", help="resolve zero data as the straight line")
    c.set_defaults(run=cmd_classify)

    t = sub.add_parser("trace", help="sample a canonical profile as CSV or SVG")
    t.add_argument("--family", required=True, choices=TRACE_FAMILIES)
    t.add_argument("--p", required=True, type=_exponent)
    t.add_argument("--q", type=_finite)
    t.add_argument("--spec", metavar="FILE")
    t.add_argument("--range", required=True, type=_range)
    t.add_argument("--n", required=True, type=_positive_int)
    t.add_argument("--out", choices=("csv", "svg"), default="csv")
    t.add_argument("--file")
    t.set_defaults(run=cmd_trace)

    k = sub.add_parser("closed", help="closed p-elastica and its closure report (JSON)")
    k.add_argument("--p", required=True, type=_exponent)
    k.add_argument("--n-fold", required=True, type=_positive_int)
    k.add_argument("--family", choices=("eight", "circle"), default="eight")
    k.add_argument("--n", type=_positive_int, default=2001, help="number of samples")
    k.add_argument("--out", choices=("csv", "svg"), default="csv")
    k.add_argument("--file", help="write the closed trace here")
    k.set_defaults(run=cmd_closed)

    s = sub.add_parser("special", help="special values: q*, K_p(1), complete integrals, regularity")
    s.add_argument("--p", required=True, type=_exponent)
    s.add_argument("--what", required=True, choices=SPECIAL)
    s.add_argument("--q", type=_finite)
    s.add_argument("--family", default="wavelike", help="family for --what regularity")
    s.set_defaults(run=cmd_special)

    v = sub.add_parser("verify", help="run verification checks (JSON report array)")
    v.add_argument("--suite", choices=("all",) + verify.SUITES, default="all")
    v.add_argument("--p", required=True, type=_exponent)
    v.add_argument("--family", choices=TRACE_FAMILIES)
    v.add_argument("--q", type=_finite, default=0.8)
    v.add_argument("--lambda", dest="lam", type=_finite, help="override the matched multiplier")
    v.add_argument("--spec", metavar="FILE", help="flat-core spec JSON")
    v.add_argument("--trace", metavar="FILE", help="check a CSV trace instead of the canonical classes")
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(run=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.run(args)
    except (DomainError, AmbiguityError) as exc:
        print(f"pelastica: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except PElasticaError as exc:
        print(f"pelastica: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
