"""Command-line frontend.

Polynomials are one line of whitespace-separated coefficients in ascending
degree (a_0 first), each an integer or ``p/q``.  Matrices are one row per
line.  Results go to stdout (``--json`` for a single JSON object),
diagnostics to stderr.  Exit status: 0 success, 1 computational failure,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import re
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, TextIO

from algentropy.entropy import endo_entropy
from algentropy.errors import NotMonicError, ParseError, ShapeMismatchError, ZeroPolynomialError
from algentropy.exact_core.matrix import RatMatrix
from algentropy.exact_core.polynomial import IntPolynomial, RatPolynomial
from algentropy.mahler.cyclotomic import is_cyclotomic
from algentropy.mahler.measure import lehmer_delta, lehmer_limit_profile, mahler_measure, mahler_measure_rat
from algentropy.mahler.roots import PRECISION_ENV, RootFinderConfig
from algentropy.mahler.search import search_small_measures
from algentropy.suites import SUITES, SuiteConfig, run_suite
from algentropy.trajectory import (
    DEFAULT_CAP,
    EndoAction,
    MatrixAction,
    ProductAction,
    ScalarAction,
    ShiftAction,
    enumerate_trajectory,
    growth_estimate,
)

SUBCOMMANDS = ("mahler", "entropy", "trajectory", "lehmer-seq", "kronecker", "search", "verify")
LOG_BASES = {"e": 1.0, "2": math.log(2), "10": math.log(10)}
UNIT_NAMES = {"e": "nats", "2": "bits", "10": "log10 units"}

_TOKEN = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


class UsageError(ValueError):
    pass


def parse_rational(token: str, line: int | None = None, column: int | None = None) -> Fraction:
    if not _TOKEN.match(token):
        raise ParseError(f"malformed rational {token!r}", line, column)
    if "/" in token:
        p, q = token.split("/")
        if int(q) == 0:
            raise ParseError(f"zero denominator in {token!r}", line, column)
        return Fraction(int(p), int(q))
    return Fraction(int(token))


def _tokens_with_columns(text: str):
    for m in re.finditer(r"\S+", text):
        yield m.group(), m.start() + 1


def parse_polynomial(text: str) -> RatPolynomial:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) != 1:
        raise ParseError(f"expected one line of coefficients, got {len(lines)}")
    coeffs = [parse_rational(tok, 1, col) for tok, col in _tokens_with_columns(lines[0])]
    poly = RatPolynomial(coeffs)
    if poly.is_zero:
        raise ParseError("zero polynomial", 1)
    return poly


def parse_matrix(text: str) -> RatMatrix:
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        rows.append((lineno, [parse_rational(tok, lineno, col) for tok, col in _tokens_with_columns(line)]))
    if not rows:
        raise ParseError("empty matrix")
    width = len(rows[0][1])
    for lineno, row in rows:
        if len(row) != width:
            raise ParseError(f"ragged row: {len(row)} entries, expected {width}", lineno)
    if len(rows) != width:
        raise ParseError(f"matrix is {len(rows)}x{width}, must be square", rows[-1][0])
    return RatMatrix([r for _, r in rows])


def parse_action(spec: str) -> EndoAction:
    """``scalar:R[:DIM]``, ``shift:M`` or ``matrix:PATH``."""
    kind, _, rest = spec.partition(":")
    try:
        if kind == "scalar":
            parts = rest.split(":")
            r = parse_rational(parts[0])
            dim = int(parts[1]) if len(parts) > 1 else 1
            return ScalarAction(r, dim)
        if kind == "shift":
            return ShiftAction(int(rest))
    except ParseError:
        raise
    except ValueError as exc:
        raise UsageError(f"bad action {spec!r}: {exc}") from exc
    if kind == "matrix":
        return MatrixAction(parse_matrix(_read_input(rest)))
    raise UsageError(f"unknown action {spec!r}; use scalar:R[:DIM], shift:M or matrix:PATH")


_SHIFT_TERM = re.compile(r"(\d*)e(\d+)\Z")


def parse_element(action: EndoAction, text: str):
    text = text.strip()
    if isinstance(action, ShiftAction):
        if text == "0":
            return ()
        pairs = []
        for term in text.split("+"):
            m = _SHIFT_TERM.match(term.strip())
            if not m:
                raise ParseError(f"malformed sequence term {term!r}; expected [v]e<index>")
            pairs.append((int(m.group(2)), int(m.group(1) or 1)))
        return action.canonical(pairs)
    return action.canonical(tuple(parse_rational(tok.strip()) for tok in text.split(",")))


def parse_set(action: EndoAction, text: str) -> list:
    return [parse_element(action, part) for part in text.split(";") if part.strip()]


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


@dataclass
class CommandRequest:
    subcommand: str
    payload: dict[str, Any] = field(default_factory=dict)
    precision_bits: int = 128
    tolerance: float = 1e-9
    horizon: int = 20
    cap: int = DEFAULT_CAP
    workers: int | None = None
    log_base: str | None = None
    json_output: bool = False


def _display(value: float, base: str) -> float:
    return value / LOG_BASES[base]


def _fmt(value: float, base: str) -> str:
    return f"{_display(value, base):.12g} {UNIT_NAMES[base]}"


def _integer_poly(poly: RatPolynomial, what: str) -> IntPolynomial:
    if not poly.is_integral:
        raise UsageError(f"{what} expects integer coefficients")
    return poly.to_integer()


def _cmd_mahler(req: CommandRequest, cfg: RootFinderConfig, base: str):
    text = req.payload["text"]
    poly = parse_polynomial(text)
    if poly.is_integral:
        res = mahler_measure(poly.to_integer(), req.tolerance, cfg)
    elif poly.is_monic:
        res = mahler_measure_rat(poly, req.tolerance, cfg)
    else:
        raise UsageError("non-integer polynomial must be monic")
    result = {
        "polynomial": str(poly),
        "value_nats": res.value_nats,
        "log_leading": res.log_leading,
        "expanding_terms": [[i, t] for i, t in res.expanding_terms],
        "exponential": res.exponential,
    }
    lines = [
        f"m(f) = {_fmt(res.value_nats, base)}",
        f"M(f) = {res.exponential:.12g}",
        f"log|a_k| = {_fmt(res.log_leading, base)}",
        f"error bound = {res.error_bound:.3g} nats at {res.precision_bits} bits",
    ]
    return text.strip(), result, res.error_bound, res.precision_bits, res.value_nats, lines


def _cmd_entropy(req: CommandRequest, cfg: RootFinderConfig, base: str):
    text = req.payload["text"]
    mat = parse_matrix(text)
    ev = endo_entropy(mat, req.tolerance, cfg)
    result = {
        "value_nats": ev.value_nats,
        "log_s_term": ev.log_s_term,
        "expanding_terms": [[z.real, z.imag, t] for z, t in ev.expanding_terms],
        "reduced_dimension": ev.reduced_dimension,
    }
    lines = [
        f"h = {_fmt(ev.value_nats, base)}",
        f"log s = {_fmt(ev.log_s_term, base)}",
        f"reduced dimension = {ev.reduced_dimension} of {mat.n}",
        f"error bound = {ev.error_bound:.3g} nats",
    ]
    return text.strip(), result, ev.error_bound, cfg.start_bits, ev.value_nats, lines


def _cmd_trajectory(req: CommandRequest, cfg: RootFinderConfig, base: str):
    specs = req.payload["actions"]
    sets = req.payload["sets"]
    if not specs:
        raise UsageError("trajectory needs at least one --action")
    if len(sets) != len(specs):
        raise UsageError("give one --set per --action")
    actions = [parse_action(s) for s in specs]
    factor_sets = [parse_set(a, s) for a, s in zip(actions, sets)]
    action = actions[-1]
    elements = factor_sets[-1]
    for a, fs in zip(reversed(actions[:-1]), reversed(factor_sets[:-1])):
        action = ProductAction(a, action)
        elements = [(x, y) for x in fs for y in elements]
    rec = enumerate_trajectory(action, elements, req.horizon, req.cap)
    result: dict[str, Any] = {"sizes": list(rec.sizes), "c": list(rec.c), "N": rec.N, "truncated": rec.truncated}
    lines = [f"n={n:<4d} |T_n|={s}" for n, s in enumerate(rec.sizes, start=1)]
    scalar = None
    if rec.N >= 2:
        g = growth_estimate(rec)
        result["fekete_upper"] = g.fekete_upper
        result["tail_slope"] = g.tail_slope
        scalar = g.tail_slope
        lines.append(f"fekete upper bound = {_fmt(g.fekete_upper, base)}")
        lines.append(f"tail slope = {_fmt(g.tail_slope, base)}")
    if rec.truncated:
        lines.append(f"truncated: cap {req.cap} reached")
    echo = {"actions": specs, "sets": sets, "N": req.horizon, "cap": req.cap}
    return echo, result, 0.0, None, scalar, lines


def _cmd_lehmer(req: CommandRequest, cfg: RootFinderConfig, base: str):
    text = req.payload["text"]
    f = _integer_poly(parse_polynomial(text), "lehmer-seq")
    profile = lehmer_limit_profile(f, req.horizon)
    delta = lehmer_delta(f, req.horizon)
    rows = [[n, v] for n, v in profile]
    if req.log_base is not None:
        rows = [[n, v, None if v is None else _display(v, base)] for n, v in profile]
    result = {"profile": rows, "delta_N": str(delta)}
    lines = [f"n={n:<5d} " + ("Delta_n = 0" if v is None else f"log(Delta_n)/n = {_fmt(v, base)}") for n, v in profile]
    lines.append(f"Delta_{req.horizon} = {delta}")
    return text.strip(), result, 0.0, None, None, lines


def _cmd_kronecker(req: CommandRequest, cfg: RootFinderConfig, base: str):
    text = req.payload["text"]
    f = _integer_poly(parse_polynomial(text), "kronecker")
    flag = is_cyclotomic(f)
    return text.strip(), {"cyclotomic": flag}, 0.0, None, None, [f"cyclotomic: {str(flag).lower()}"]


def _cmd_search(req: CommandRequest, cfg: RootFinderConfig, base: str):
    p = req.payload
    found = search_small_measures(p["degree"], p["height"], p["threshold"], req.workers, req.tolerance, cfg)
    findings = []
    lines = []
    for f, res in found:
        item = {"coeffs": list(f.coeffs), "polynomial": str(f), "value_nats": res.value_nats, "error_bound": res.error_bound}
        if req.log_base is not None:
            item["display_value"] = _display(res.value_nats, base)
        findings.append(item)
        lines.append(f"{_fmt(res.value_nats, base)}  {' '.join(map(str, f.coeffs))}  ({f})")
    if not lines:
        lines.append("no polynomials found")
    echo = {"max_degree": p["degree"], "height": p["height"], "threshold_nats": p["threshold"]}
    bound = max((r.error_bound for _, r in found), default=0.0)
    return echo, {"findings": findings}, bound, cfg.start_bits, None, lines


def _cmd_verify(req: CommandRequest, cfg: RootFinderConfig, base: str):
    p = req.payload
    summary = run_suite(p["suite"], SuiteConfig(cases=p["cases"], seed=p["seed"], tolerance=min(req.tolerance, 1e-12), workers=req.workers))
    result = {
        "suite": summary.suite,
        "cases": summary.cases,
        "checks": summary.checks,
        "max_defect": summary.max_defect,
        "max_bound": summary.max_bound,
        "failures": list(summary.failures),
        "ok": summary.ok,
    }
    lines = [
        f"suite {summary.suite}: {summary.cases} cases, {summary.checks} checks",
        f"max defect = {summary.max_defect:.3g} nats (max allowed {summary.max_bound:.3g})",
        f"failures: {len(summary.failures)}",
    ]
    echo = {"suite": p["suite"], "cases": p["cases"], "seed": p["seed"]}
    return echo, result, summary.max_bound, None, None, lines


_HANDLERS = {
    "mahler": _cmd_mahler,
    "entropy": _cmd_entropy,
    "trajectory": _cmd_trajectory,
    "lehmer-seq": _cmd_lehmer,
    "kronecker": _cmd_kronecker,
    "search": _cmd_search,
    "verify": _cmd_verify,
}


def run(req: CommandRequest, stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    base = req.log_base or "e"
    cfg = RootFinderConfig(start_bits=req.precision_bits, max_bits=max(2048, req.precision_bits))
    try:
        echo, result, bound, bits, scalar, lines = _HANDLERS[req.subcommand](req, cfg, base)
    except (ParseError, UsageError, NotMonicError, ZeroPolynomialError, ShapeMismatchError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except Exception as exc:  # computational failure
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    if req.json_output:
        obj = {
            "subcommand": req.subcommand,
            "input_echo": echo,
            "result": result,
            "error_bound": bound,
            "precision_bits": bits,
            "log_base": base,
        }
        if req.log_base is not None and scalar is not None:
            obj["display_value"] = _display(scalar, base)
        stdout.write(json.dumps(obj, sort_keys=True) + "\n")
    else:
        stdout.write("\n".join(lines) + "\n")
    if req.subcommand == "verify" and not result["ok"]:
        return 1
    return 0


def _precision(text: str) -> int:
    bits = int(text)
    if not 64 <= bits <= 2048:
        raise argparse.ArgumentTypeError("precision must be within 64..2048 bits")
    return bits


def _tolerance(text: str) -> float:
    tol = float(text)
    if not tol >= 1e-15:
        raise argparse.ArgumentTypeError("tolerance must be >= 1e-15")
    return tol


def _positive(text: str) -> int:
    n = int(text)
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def _default_precision() -> int:
    raw = os.environ.get(PRECISION_ENV)
    return _precision(raw) if raw else 128


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object on stdout")
    common.add_argument("--log-base", choices=sorted(LOG_BASES), default=None, help="display logarithms in this base")
    common.add_argument(
        "--precision", type=_precision, default=None, help=f"starting precision in bits (default 128, env {PRECISION_ENV})"
    )
    common.add_argument("--tolerance", type=_tolerance, default=1e-9, help="absolute tolerance in nats")
    common.add_argument("--workers", type=_positive, default=None, help="worker processes (default: all CPUs)")

    parser = argparse.ArgumentParser(prog="algentropy", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("mahler", parents=[common], help="Mahler measure of a polynomial")
    p.add_argument("file", help="coefficient file, or - for stdin")

    p = sub.add_parser("entropy", parents=[common], help="algebraic entropy of a rational matrix")
    p.add_argument("file")

    p = sub.add_parser("trajectory", parents=[common], help="brute-force trajectory sizes")
    p.add_argument("--action", action="append", default=[], help="scalar:R[:DIM] | shift:M | matrix:PATH (repeat for products)")
    p.add_argument("--set", action="append", default=[], help="';'-separated elements, one --set per --action")
    p.add_argument("-N", type=_positive, default=20, help="horizon")
    p.add_argument("--cap", type=_positive, default=DEFAULT_CAP)

    p = sub.add_parser("lehmer-seq", parents=[common], help="log(Delta_n)/n for n = 1..N")
    p.add_argument("file")
    p.add_argument("-N", type=_positive, default=20)

    p = sub.add_parser("kronecker", parents=[common], help="exact cyclotomic test")
    p.add_argument("file")

    p = sub.add_parser("search", parents=[common], help="monic polynomials of small positive measure")
    p.add_argument("-d", "--degree", type=_positive, required=True)
    p.add_argument("-H", "--height", type=_positive, required=True)
    p.add_argument("-t", "--threshold", type=float, required=True)

    p = sub.add_parser("verify", parents=[common], help="seeded random checks of the entropy laws")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--cases", type=_positive, default=100)
    p.add_argument("--seed", type=int, default=1)
    return parser


def request_from_args(args: argparse.Namespace) -> CommandRequest:
    payload: dict[str, Any] = {}
    if args.subcommand in ("mahler", "entropy", "lehmer-seq", "kronecker"):
        payload["text"] = _read_input(args.file)
    elif args.subcommand == "trajectory":
        payload.update(actions=args.action, sets=args.set)
    elif args.subcommand == "search":
        payload.update(degree=args.degree, height=args.height, threshold=args.threshold)
    elif args.subcommand == "verify":
        payload.update(suite=args.suite, cases=args.cases, seed=args.seed)
    return CommandRequest(
        subcommand=args.subcommand,
        payload=payload,
        precision_bits=args.precision if args.precision is not None else _default_precision(),
        tolerance=args.tolerance,
        horizon=getattr(args, "N", 20),
        cap=getattr(args, "cap", DEFAULT_CAP),
        workers=args.workers,
        log_base=args.log_base,
        json_output=args.json,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        req = request_from_args(args)
    except (OSError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return run(req)


if __name__ == "__main__":
    sys.exit(main())
