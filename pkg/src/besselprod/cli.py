"""Command-line front end.

Every operation of the library is reachable through a subcommand, with
deterministic machine-readable output: JSON Lines (one record per result)
or CSV.  Numbers are printed with 17 significant digits so that identical
invocations are byte-identical.

Exit codes: 0 success, 1 internal numerical failure, 2 usage error,
3 domain error, 4 verification failure.
"""
from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .bounds import convex_chain, starlike_chain
from .config import DEFAULTS, Settings, load_settings
from .errors import DomainError, NumericalError, VerificationError
from .hyperbolicity import JensenFamily, certify_hyperbolic
from .radii import Branch, Kind, RadiusQuery, radius_convex, radius_starlike
from .rayleigh import SumFamily, closed_form_sum, direct_sum, newton_sums
from .series import Family, SeriesSpec, eval_series
from .thresholds import convex_threshold, starlike_threshold
from .verify import SUITES, run_suite
from .zeros import FamilyTag, ZeroFamily, zeros

EXIT_OK = 0
EXIT_NUMERICAL = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_VERIFICATION = 4


def _fmt(value) -> str:
    """Deterministic JSON fragment with 17-significant-digit floats."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "%.17g" % value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return '"%s"' % value
    if isinstance(value, str):
        return '"%s"' % value.replace("\\", "\\\\").replace('"', '\\"')
    if isinstance(value, dict):
        items = ", ".join('"%s": %s' % (k, _fmt(value[k])) for k in sorted(value))
        return "{%s}" % items
    if isinstance(value, (list, tuple)):
        return "[%s]" % ", ".join(_fmt(v) for v in value)
    if value is None:
        return "null"
    return '"%s"' % value


def _csv_cell(value) -> str:
    if isinstance(value, float):
        return "%.17g" % value
    if isinstance(value, (list, tuple)):
        return ";".join(_csv_cell(v) for v in value)
    if isinstance(value, dict):
        return ";".join("%s=%s" % (k, _csv_cell(value[k])) for k in sorted(value))
    return str(value)


def _emit(records, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "json":
        for rec in records:
            out.write(_fmt(rec) + "\n")
        return
    if not records:
        return
    keys = sorted({k for rec in records for k in rec})
    out.write(",".join(keys) + "\n")
    for rec in records:
        out.write(",".join(_csv_cell(rec.get(k, "")) for k in keys) + "\n")


def _record(command: str, inputs: dict, outputs: dict, provenance) -> dict:
    return {"command": command, "inputs": inputs, "outputs": outputs,
            "provenance": list(provenance)}


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational number: {text!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="besselprod",
        description="Bessel product/cross-product series, zeros, radii and "
                    "certificates")
    parser.add_argument("--format", choices=("json", "csv"), default="json")
    parser.add_argument("--config", metavar="PATH", default=None)
    parser.add_argument("--seed", default="none",
                        help="accepted for interface compatibility; the tool "
                             "is deterministic")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("eval", help="evaluate a series family at a point")
    p.add_argument("--family", required=True,
                   choices=[f.value for f in Family])
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--z", type=float, required=True)

    p = sub.add_parser("zeros", help="ordered positive zeros of a family")
    p.add_argument("--family", required=True,
                   choices=[t.value for t in FamilyTag])
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("rayleigh", help="power sums of reciprocal fourth powers")
    p.add_argument("--family", required=True,
                   choices=[f.value for f in SumFamily])
    p.add_argument("--nu", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=("closed", "newton", "direct"),
                   default="closed")
    p.add_argument("--terms", type=int, default=200)

    p = sub.add_parser("radii", help="radius of starlikeness or convexity")
    p.add_argument("--kind", required=True, choices=[k.value for k in Kind])
    p.add_argument("--mode", required=True, choices=("starlike", "convex"))
    p.add_argument("--nu", type=float, required=True)
    p.add_argument("--alpha", type=float, default=0.0)
    p.add_argument("--branch", choices=("principal", "rotated"),
                   default="principal")

    p = sub.add_parser("bounds", help="Euler-Rayleigh bound chain for a radius")
    p.add_argument("--kind", required=True, choices=[k.value for k in Kind])
    p.add_argument("--mode", required=True, choices=("starlike", "convex"))
    p.add_argument("--nu", type=float, required=True)

    p = sub.add_parser("thresholds", help="critical order making the disk maximal")
    p.add_argument("--kind", required=True, choices=[k.value for k in Kind])
    p.add_argument("--mode", required=True, choices=("starlike", "convex"))
    p.add_argument("--alpha", type=float, default=0.0)

    p = sub.add_parser("certify", help="exact hyperbolicity certification")
    p.add_argument("--family", required=True,
                   choices=[f.value for f in JensenFamily])
    p.add_argument("--nu", required=True, metavar="P/Q")
    p.add_argument("--nmax", type=int, default=32)

    p = sub.add_parser("verify", help="run the invariant suites")
    p.add_argument("--suite", default="all",
                   choices=("all",) + tuple(SUITES))
    return parser


def _cmd_eval(args, cfg: Settings):
    spec = SeriesSpec(Family(args.family), args.nu)
    res = eval_series(spec, args.z, cfg)
    rec = _record("eval",
                  {"family": args.family, "nu": args.nu, "z": args.z},
                  {"value": res.value, "truncation_index": res.truncation_index,
                   "est_tail": res.est_tail},
                  ["ascending-series"])
    return [rec], EXIT_OK


def _cmd_zeros(args, cfg: Settings):
    table = zeros(ZeroFamily(FamilyTag(args.family), args.nu), args.n, cfg)
    recs = [_record("zeros",
                    {"family": args.family, "nu": args.nu, "n": i + 1},
                    {"zero": z, "residual": r,
                     "bracket": list(table.brackets[i])},
                    ["bracketed-bisection"])
            for i, (z, r) in enumerate(zip(table.zeros, table.residuals))]
    return recs, EXIT_OK


def _cmd_rayleigh(args, cfg: Settings):
    family = SumFamily(args.family)
    k = args.k
    if args.method == "closed":
        nu = _parse_rational(args.nu)
        value = closed_form_sum(family, k, nu)
        outputs = {"sum": value if isinstance(value, Fraction) else float(value),
                   "sum_float": float(value)}
        prov = ["closed-form"]
    elif args.method == "newton":
        nu = _parse_rational(args.nu)
        ps = newton_sums(family, nu, k)
        value = ps.values[k - 1]
        outputs = {"sum": value if isinstance(value, Fraction) else float(value),
                   "sum_float": float(value)}
        prov = ["newton-identities"]
    else:
        ds = direct_sum(family, k, float(Fraction(args.nu)), args.terms, cfg)
        outputs = {"sum_float": ds.value, "tail_bound": ds.tail_bound,
                   "zeros_used": ds.n_used}
        prov = ["direct-summation"]
    rec = _record("rayleigh",
                  {"family": args.family, "nu": args.nu, "k": k,
                   "method": args.method},
                  outputs, prov)
    return [rec], EXIT_OK


def _cmd_radii(args, cfg: Settings):
    query = RadiusQuery(Kind(args.kind), args.nu, args.alpha,
                        Branch(args.branch))
    if args.mode == "starlike":
        res = radius_starlike(query, cfg)
    else:
        if query.branch is Branch.ROTATED:
            raise DomainError("convexity has no rotated branch")
        res = radius_convex(query, cfg)
    rec = _record("radii",
                  {"kind": args.kind, "mode": args.mode, "nu": args.nu,
                   "alpha": args.alpha, "branch": args.branch},
                  {"radius": res.radius, "residual": res.residual},
                  ["weighted-series-root"])
    return [rec], EXIT_OK


def _cmd_bounds(args, cfg: Settings):
    kind = Kind(args.kind)
    chain = (starlike_chain if args.mode == "starlike" else convex_chain)(
        kind, args.nu, cfg)
    rec = _record("bounds",
                  {"kind": args.kind, "mode": args.mode, "nu": args.nu},
                  {"crude_upper": chain.crude_upper,
                   "lowers": list(chain.lowers), "uppers": list(chain.uppers),
                   "radius": chain.radius, "verdict": chain.verdict,
                   "ill_conditioned": chain.ill_conditioned},
                  ["closed-form", "weighted-series-root"])
    code = EXIT_OK if chain.verdict else EXIT_VERIFICATION
    return [rec], code


def _cmd_thresholds(args, cfg: Settings):
    kind = Kind(args.kind)
    fn = starlike_threshold if args.mode == "starlike" else convex_threshold
    th = fn(kind, args.alpha, cfg)
    rec = _record("thresholds",
                  {"kind": args.kind, "mode": args.mode, "alpha": args.alpha},
                  {"nu": th.nu, "residual": th.residual},
                  ["nu-scan-bisection"])
    return [rec], EXIT_OK


def _cmd_certify(args, cfg: Settings):
    nu = _parse_rational(args.nu)
    report = certify_hyperbolic(JensenFamily(args.family), nu, args.nmax)
    n_pass = report.n_max - len(report.failures)
    rec = _record("certify",
                  {"family": args.family, "nu": str(nu), "nmax": args.nmax},
                  {"certified": report.certified,
                   "report": f"{n_pass}/{report.n_max} hyperbolic",
                   "failures": [list(f) for f in report.failures]},
                  ["sturm-exact"])
    code = EXIT_OK if report.certified else EXIT_VERIFICATION
    return [rec], code


def _cmd_verify(args, cfg: Settings):
    results = run_suite(args.suite, cfg)
    recs = [_record("verify",
                    {"suite": r.suite, "check": r.name},
                    {"ok": r.ok, "detail": r.detail},
                    ["invariant-suite"])
            for r in results]
    code = EXIT_OK if all(r.ok for r in results) else EXIT_VERIFICATION
    return recs, code


_COMMANDS = {
    "eval": _cmd_eval,
    "zeros": _cmd_zeros,
    "rayleigh": _cmd_rayleigh,
    "radii": _cmd_radii,
    "bounds": _cmd_bounds,
    "thresholds": _cmd_thresholds,
    "certify": _cmd_certify,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        cfg = load_settings(args.config) if args.config else DEFAULTS
        records, code = _COMMANDS[args.subcommand](args, cfg)
        _emit(records, args.format)
        return code
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except VerificationError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return EXIT_VERIFICATION
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
