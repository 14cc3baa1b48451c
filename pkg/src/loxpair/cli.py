"""Command-line front end.

Verbs: classify, params, pair-geometry, verify, constants, sweep,
from-params, lemma3. Results go to stdout as JSON (CSV for sweep);
numeric output carries 12 significant digits. Exit codes: 0 success,
2 usage error, 3 domain error (one-line JSON on stderr).
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import sys

from . import extremal
from .algebra import matrix_from_json, matrix_to_json
from .errors import DomainError
from .moebius import Kind, beta, classify, translation_data
from .pair import axis_geometry, group_from_parameters, pair_parameters

USAGE_ERROR = 2
DOMAIN_ERROR = 3


def _fnum(x: float):
    """Round to 12 significant digits; NaN becomes None (JSON null)."""
    if x != x:
        return None
    if x == 0.0:
        x = 0.0  # normalize -0.0
    return float(format(x, ".12g"))


def _cnum(z: complex):
    return [_fnum(z.real), _fnum(z.imag)]


def _reject_constant(name):
    raise ValueError(f"non-finite number {name!r} in input JSON")


def _read_input(args) -> str:
    sources = [s for s in (args.inline, args.file) if s is not None]
    if args.stdin:
        sources.append("-")
    if len(sources) != 1:
        raise ValueError("exactly one of --in, --file, --stdin is required")
    if args.stdin:
        return sys.stdin.read()
    if args.file is not None:
        with open(args.file, "r", encoding="utf-8") as fh:
            return fh.read()
    return args.inline


def _load_json(text: str):
    return json.loads(text, parse_constant=_reject_constant)


def _matrix_arg(args):
    return matrix_from_json(_load_json(_read_input(args)))


def _pair_arg(args):
    obj = _load_json(_read_input(args))
    if not isinstance(obj, dict) or "f" not in obj or "g" not in obj:
        raise ValueError('pair input must be {"f": <matrix>, "g": <matrix>}')
    return matrix_from_json(obj["f"]), matrix_from_json(obj["g"])


def _complex_field(obj, key) -> complex:
    try:
        re, im = obj[key]
    except (KeyError, TypeError, ValueError):
        raise ValueError(f"field {key!r} must be a [re, im] pair")
    return complex(re, im)


def _emit(obj) -> int:
    sys.stdout.write(json.dumps(obj) + "\n")
    return 0


def _cmd_constants(args) -> int:
    k, u_star = extremal.theorem2_proof_constants()
    return _emit(
        {
            "c": _fnum(extremal.C),
            "d": _fnum(extremal.D),
            "lambda_a": _fnum(extremal.LAMBDA_A),
            "b_low": _fnum(extremal.B_LOW),
            "b_high": _fnum(extremal.B_HIGH),
            "four_d": _fnum(4.0 * extremal.D),
            "sixteen_dc": _fnum(k),
            "u_star": _fnum(u_star),
        }
    )


def _cmd_classify(args) -> int:
    m = _matrix_arg(args)
    k = classify(m)
    out = {
        "kind": k.kind.value,
        "multiplier": None if k.multiplier is None else _cnum(k.multiplier),
        "beta": _cnum(beta(m)),
        "t": None,
        "theta": None,
    }
    if k.kind not in (Kind.IDENTITY, Kind.PARABOLIC):
        td = translation_data(m)
        out["t"] = _fnum(td.t)
        out["theta"] = _fnum(td.theta)
    else:
        out["multiplier"] = None
    return _emit(out)


def _cmd_params(args) -> int:
    f, g = _pair_arg(args)
    p = pair_parameters(f, g)
    return _emit(
        {"beta_f": _cnum(p.beta_f), "beta_g": _cnum(p.beta_g), "gamma": _cnum(p.gamma)}
    )


def _cmd_pair_geometry(args) -> int:
    f, g = _pair_arg(args)
    p = pair_parameters(f, g)
    geo = axis_geometry(f, g)
    return _emit(
        {
            "beta_f": _cnum(p.beta_f),
            "beta_g": _cnum(p.beta_g),
            "gamma": _cnum(p.gamma),
            "delta": _fnum(geo.delta),
            "phi": _fnum(geo.phi),
            "coplanar": geo.coplanar,
        }
    )


def _cmd_verify(args) -> int:
    f, g = _pair_arg(args)
    report = extremal.evaluate_theorem(args.theorem, f, g, b=args.b, order=args.order)
    return _emit(
        {
            "theorem_id": report.theorem_id,
            "lhs": _fnum(report.lhs),
            "rhs": _fnum(report.rhs),
            "satisfied": report.satisfied,
            "margin": _fnum(report.margin),
            "applicable": report.applicable,
            "reason": report.reason,
        }
    )


def _cmd_from_params(args) -> int:
    obj = _load_json(_read_input(args))
    if not isinstance(obj, dict):
        raise ValueError("from-params input must be a JSON object")
    f, g = group_from_parameters(
        _complex_field(obj, "beta_f"),
        _complex_field(obj, "beta_g"),
        _complex_field(obj, "gamma"),
    )

    def rounded(m):
        return {key: [_fnum(re), _fnum(im)] for key, (re, im) in matrix_to_json(m).items()}

    return _emit({"f": rounded(f), "g": rounded(g)})


def _cmd_lemma3(args) -> int:
    m = _matrix_arg(args)
    found = extremal.lemma3_find_m(m, cap=args.cap)
    from .moebius import beta_of_power

    td = translation_data(m)
    bound = (4.0 * math.pi / math.sqrt(3.0)) * math.sinh(td.t)
    return _emit(
        {
            "m": found,
            "abs_beta_power": _fnum(abs(beta_of_power(m, found))),
            "bound": _fnum(bound),
        }
    )


SWEEP_COLUMNS = ("lambda", "mu", "delta", "sinh_delta", "trace_fg_inv_re", "trace_fg_inv_im", "u")


def _cmd_sweep(args) -> int:
    try:
        lambdas = [float(tok) for tok in args.lam.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"--lambda must be a comma list of reals, got {args.lam!r}")
    points = extremal.counterexample_sweep(args.mu, lambdas)
    rows = [
        (
            p.lam,
            p.mu,
            p.delta,
            math.sinh(p.delta),
            p.trace_fg_inv.real,
            p.trace_fg_inv.imag,
            p.u,
        )
        for p in points
    ]
    if args.out == "json":
        return _emit([dict(zip(SWEEP_COLUMNS, map(_fnum, row))) for row in rows])
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(SWEEP_COLUMNS)
    for row in rows:
        writer.writerow([format(x if x != 0.0 else 0.0, ".12g") for x in row])
    return 0


def _add_input_flags(sub):
    sub.add_argument("--in", dest="inline", metavar="JSON", help="inline JSON input")
    sub.add_argument("--file", help="path to a JSON input file")
    sub.add_argument("--stdin", action="store_true", help="read JSON input from stdin")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="loxpair",
        description="Numerics for two-generator Moebius groups.",
    )
    subs = parser.add_subparsers(dest="verb", required=True)

    sub = subs.add_parser("constants", help="built-in bound constants")
    sub.set_defaults(func=_cmd_constants)

    sub = subs.add_parser("classify", help="classify one matrix")
    _add_input_flags(sub)
    sub.set_defaults(func=_cmd_classify)

    sub = subs.add_parser("params", help="parameter triple of a pair")
    _add_input_flags(sub)
    sub.set_defaults(func=_cmd_params)

    sub = subs.add_parser("pair-geometry", help="axis distance and angle of a pair")
    _add_input_flags(sub)
    sub.set_defaults(func=_cmd_pair_geometry)

    sub = subs.add_parser("verify", help="evaluate an inequality on a pair")
    _add_input_flags(sub)
    sub.add_argument("--theorem", required=True, choices=extremal.THEOREM_IDS)
    sub.add_argument("--b", type=float, default=extremal.B_LOW, help="b constant override")
    sub.add_argument("--order", type=int, default=None, help="asserted elliptic order (T5)")
    sub.set_defaults(func=_cmd_verify)

    sub = subs.add_parser("from-params", help="build a pair from a parameter triple")
    _add_input_flags(sub)
    sub.set_defaults(func=_cmd_from_params)

    sub = subs.add_parser("lemma3", help="smallest admissible power exponent")
    _add_input_flags(sub)
    sub.add_argument("--cap", type=int, default=10**6, help="search cap")
    sub.set_defaults(func=_cmd_lemma3)

    sub = subs.add_parser("sweep", help="evaluate the counterexample family")
    sub.add_argument("--mu", type=float, required=True)
    sub.add_argument("--lambda", dest="lam", required=True, metavar="LIST", help="comma list")
    sub.add_argument("--out", choices=("csv", "json"), default="csv")
    sub.set_defaults(func=_cmd_sweep)

    return parser


def run(argv: list[str]) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except DomainError as exc:
        sys.stderr.write(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}) + "\n"
        )
        return DOMAIN_ERROR
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(json.dumps({"error": "InvalidInput", "message": str(exc)}) + "\n")
        return DOMAIN_ERROR


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
