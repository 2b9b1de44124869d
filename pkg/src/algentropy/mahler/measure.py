"""Mahler measure and Lehmer's sequence Delta_n."""

from __future__ import annotations

import math
from dataclasses import dataclass

import gmpy2
from gmpy2 import mpfr

from algentropy.errors import NotMonicError, ZeroPolynomialError
from algentropy.exact_core.polynomial import (
    IntPolynomial,
    RatPolynomial,
    clear_denominators,
    powmod_monic,
    resultant,
)
from algentropy.mahler.roots import RootFinderConfig, RootSet, find_roots


@dataclass(frozen=True)
class MahlerResult:
    """m(f) in nats with its split into log|a_k| and the log|alpha_i| of roots outside the circle.

    ``expanding_terms`` holds (index into ``roots.roots``, log|alpha_i|).
    ``error_bound`` bounds the distance from ``value_nats`` to the exact
    measure coming from the root enclosures.
    """

    value_nats: float
    log_leading: float
    expanding_terms: tuple[tuple[int, float], ...]
    error_bound: float
    precision_bits: int
    roots: RootSet | None = None

    @property
    def exponential(self) -> float:
        """M(f) = exp(m(f))."""
        return math.exp(self.value_nats)


def _root_error(center_modulus: mpfr, radius: mpfr) -> mpfr:
    # |log max(1,|a|) - log max(1,|c|)| <= log(1 + r/(max(1,|c|) - r)) <= r/(max(1,|c|) - r)
    slack = max(mpfr(1), center_modulus) - radius
    return radius / slack if slack > 0 else radius


def mahler_measure(
    f: IntPolynomial, tolerance: float = 1e-12, config: RootFinderConfig | None = None
) -> MahlerResult:
    """log|a_k| + sum over roots of log max(1, |alpha_i|)."""
    if f.is_zero:
        raise ZeroPolynomialError("mahler_measure")
    log_leading = math.log(abs(f.leading))
    if f.degree == 0:
        return MahlerResult(log_leading, log_leading, (), 0.0, 0, None)
    target = tolerance / (4 * f.degree)
    rs = find_roots(f, target, config)
    with gmpy2.context(precision=rs.precision_bits):
        total = gmpy2.log(abs(mpfr(f.leading)))
        err = mpfr(0)
        terms = []
        for i, ball in enumerate(rs.roots):
            mod = abs(ball.center)
            if mod > 1:
                term = gmpy2.log(mod)
                total += term
                terms.append((i, float(term)))
            err += _root_error(mod, ball.radius)
        error_bound = float(err)
        value = float(total)
    if error_bound > tolerance:
        raise ArithmeticError(f"error bound {error_bound:g} exceeds tolerance {tolerance:g}")
    return MahlerResult(value, log_leading, tuple(terms), error_bound, rs.precision_bits, rs)


def mahler_measure_rat(
    g: RatPolynomial, tolerance: float = 1e-12, config: RootFinderConfig | None = None
) -> MahlerResult:
    """Measure of a monic rational polynomial via its primitive multiple s*g."""
    return mahler_measure(clear_denominators(g).primitive, tolerance, config)


def _require_monic(f: IntPolynomial) -> None:
    if f.is_zero:
        raise ZeroPolynomialError("lehmer_delta")
    if not f.is_monic:
        raise NotMonicError(f"Delta_n defined for monic polynomials, got {f}")


def _delta_from_power(f: IntPolynomial, power: IntPolynomial) -> int:
    r = power - IntPolynomial((1,))
    if r.is_zero:
        return 0
    return abs(resultant(f, r))


def lehmer_delta(f: IntPolynomial, n: int) -> int:
    """Delta_n(f) = prod |1 - alpha_i^n| = |Res(f, t^n - 1)|, exactly.

    t^n - 1 is first reduced modulo the monic f, which leaves the resultant
    unchanged and keeps the Sylvester matrix at most 2 deg f wide.
    """
    _require_monic(f)
    if n < 1:
        raise ValueError("n must be positive")
    if f.degree == 0:
        return 1
    return _delta_from_power(f, powmod_monic(n, f))


def lehmer_limit_profile(f: IntPolynomial, horizon: int) -> list[tuple[int, float | None]]:
    """(n, log Delta_n / n) for n = 1..horizon; None where Delta_n = 0."""
    _require_monic(f)
    if horizon < 1:
        raise ValueError("horizon must be positive")
    out: list[tuple[int, float | None]] = []
    k = f.degree
    if k == 0:
        return [(n, 0.0) for n in range(1, horizon + 1)]
    low = f.coeffs[:k]
    power = list(powmod_monic(1, f).coeffs) + [0] * k
    power = power[:k]
    for n in range(1, horizon + 1):
        delta = _delta_from_power(f, IntPolynomial(power))
        out.append((n, math.log(delta) / n if delta else None))
        # multiply by t and reduce modulo f
        top = power[-1]
        power = [0] + power[:-1]
        if top:
            power = [p - top * a for p, a in zip(power, low)]
    return out
