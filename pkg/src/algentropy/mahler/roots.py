"""Certified complex roots of integer polynomials.

Roots are isolated per squarefree factor, so every factor handed to the
iteration has simple roots.  The iteration is Aberth-Ehrlich: a cheap
double-precision pass from points on a circle, then refinement in MPFR/MPC
arithmetic at doubling precision until the inclusion discs below are small
enough and pairwise disjoint.

Inclusion test: for approximations z_1..z_d of a degree-d polynomial p with
leading coefficient a_d, let W_i = p(z_i) / (a_d * prod_{j != i}(z_i - z_j)).
Every root of p lies in the union of the discs |z - z_i| <= d|W_i|, and a
connected component made of k discs holds exactly k roots.  Pairwise disjoint
discs therefore each hold exactly one root.
"""

from __future__ import annotations

import cmath
import math
import os
from dataclasses import dataclass, field

import gmpy2
from gmpy2 import mpc, mpfr

from algentropy.errors import RootFindingError, ZeroPolynomialError
from algentropy.exact_core.polynomial import IntPolynomial, squarefree_decomposition

PRECISION_ENV = "ALGENTROPY_PRECISION_BITS"


def _default_start_bits() -> int:
    raw = os.environ.get(PRECISION_ENV)
    if not raw:
        return 128
    bits = int(raw)
    if not 64 <= bits <= 2048:
        raise ValueError(f"{PRECISION_ENV}={raw} outside 64..2048")
    return bits


@dataclass(frozen=True)
class RootFinderConfig:
    start_bits: int = field(default_factory=_default_start_bits)
    max_bits: int = 2048
    float_iterations: int = 200
    iterations_per_precision: int = 80


@dataclass(frozen=True)
class ComplexBall:
    center: mpc
    radius: mpfr

    def __post_init__(self) -> None:
        if not (gmpy2.is_finite(self.radius) and self.radius >= 0):
            raise ValueError(f"invalid ball radius {self.radius}")

    @property
    def modulus(self) -> mpfr:
        return abs(self.center)

    def contains(self, z) -> bool:
        return abs(complex(self.center) - complex(z)) <= float(self.radius) * (1 + 1e-12) + 1e-300

    def __complex__(self) -> complex:
        return complex(self.center)


@dataclass(frozen=True)
class RootSet:
    """All roots of a polynomial with multiplicity; repeated roots repeat their ball."""

    roots: tuple[ComplexBall, ...]
    precision_bits: int

    def __len__(self) -> int:
        return len(self.roots)

    @property
    def max_radius(self) -> float:
        return max((float(b.radius) for b in self.roots), default=0.0)


def _float_aberth(coeffs: list[int], iterations: int) -> list[complex] | None:
    """Double-precision Aberth sweep; returns None if floats overflow."""
    d = len(coeffs) - 1
    try:
        lead = float(coeffs[-1])
        a = [float(c) / lead for c in coeffs]
    except OverflowError:
        return None
    radius = 1.0 + max(abs(x) for x in a[:-1])
    if not math.isfinite(radius) or radius > 1e30:
        return None
    z = [radius * cmath.exp(1j * (2 * math.pi * j / d + 0.4)) for j in range(d)]
    da = [k * a[k] for k in range(1, d + 1)]
    try:
        for _ in range(iterations):
            moved = False
            for i in range(d):
                zi = z[i]
                p = 0j
                for c in reversed(a):
                    p = p * zi + c
                if p == 0:
                    continue
                dp = 0j
                for c in reversed(da):
                    dp = dp * zi + c
                s = 0j
                for j in range(d):
                    if j != i:
                        s += 1.0 / (zi - z[j])
                if dp == 0:
                    continue
                ratio = p / dp
                w = ratio / (1.0 - ratio * s)
                z[i] = zi - w
                if abs(w) > 1e-13 * max(1.0, abs(zi)):
                    moved = True
            if not moved:
                break
    except (ZeroDivisionError, OverflowError):
        return None
    if not all(cmath.isfinite(x) for x in z):
        return None
    return z


def _initial_guesses(coeffs: list[int]) -> list[mpc]:
    d = len(coeffs) - 1
    lead = mpfr(coeffs[-1])
    radius = 1 + max(abs(mpfr(c) / lead) for c in coeffs[:-1])
    pi2 = 2 * gmpy2.const_pi()
    return [radius * gmpy2.exp(mpc(0, pi2 * j / d + mpfr("0.4"))) for j in range(d)]


def _mp_sweep(a: list[mpfr], da: list[mpfr], z: list[mpc]) -> mpfr:
    """One Gauss-Seidel Aberth sweep in place; returns max relative correction."""
    d = len(z)
    worst = mpfr(0)
    for i in range(d):
        zi = z[i]
        p = mpc(0)
        for c in reversed(a):
            p = p * zi + c
        if p == 0:
            continue
        dp = mpc(0)
        for c in reversed(da):
            dp = dp * zi + c
        s = mpc(0)
        for j in range(d):
            if j != i:
                s += 1 / (zi - z[j])
        if dp == 0:
            worst = mpfr("inf")
            continue
        ratio = p / dp
        w = ratio / (1 - ratio * s)
        z[i] = zi - w
        rel = abs(w) / max(mpfr(1), abs(zi))
        if not gmpy2.is_finite(rel):
            rel = mpfr("inf")
        if rel > worst:
            worst = rel
    return worst


def _inclusion_radii(a: list[mpfr], z: list[mpc], bits: int) -> list[mpfr] | None:
    """Radii d|W_i| inflated for rounding; None when discs overlap."""
    d = len(z)
    lead = abs(a[-1])
    unit = mpfr(2) ** (-bits)
    radii = []
    for i in range(d):
        zi = z[i]
        p = mpc(0)
        for c in reversed(a):
            p = p * zi + c
        mod = abs(zi)
        magnitude = mpfr(0)
        for c in reversed(a):
            magnitude = magnitude * mod + abs(c)
        eval_err = 4 * (2 * d + 2) * unit * magnitude
        denom = lead
        for j in range(d):
            if j != i:
                denom *= abs(zi - z[j])
        if denom == 0:
            return None
        radii.append(d * (abs(p) + eval_err) / denom * (1 + 1024 * unit))
    for i in range(d):
        for j in range(i + 1, d):
            if abs(z[i] - z[j]) <= radii[i] + radii[j]:
                return None
    return radii


def _isolate_squarefree(g: IntPolynomial, target: float, config: RootFinderConfig) -> tuple[list[ComplexBall], int]:
    coeffs = list(g.coeffs)
    d = g.degree
    bits = config.start_bits
    if d == 1:
        with gmpy2.context(precision=bits):
            c = mpfr(-coeffs[0]) / mpfr(coeffs[1])
            r = abs(c) * mpfr(2) ** (2 - bits)
            return [ComplexBall(mpc(c), r)], bits
    start = _float_aberth(coeffs, config.float_iterations)
    z: list | None = None
    best: list | None = None
    while True:
        with gmpy2.context(precision=bits):
            a = [mpfr(c) for c in coeffs]
            da = [k * a[k] for k in range(1, d + 1)]
            if z is None:
                z = [mpc(x) for x in start] if start is not None else _initial_guesses(coeffs)
            else:
                z = [mpc(x) for x in z]
            stop = mpfr(2) ** (16 - bits)
            for _ in range(config.iterations_per_precision):
                if _mp_sweep(a, da, z) <= stop:
                    break
            if not all(gmpy2.is_finite(x.real) and gmpy2.is_finite(x.imag) for x in z):
                z = _initial_guesses(coeffs)
                radii = None
            else:
                radii = _inclusion_radii(a, z, bits)
            if radii is not None:
                best = [float(r) for r in radii]
                if max(radii) <= target:
                    return [ComplexBall(zi, ri) for zi, ri in zip(z, radii)], bits
        if bits >= config.max_bits:
            raise RootFindingError(
                f"could not isolate roots of {g} to {target:g} within {config.max_bits} bits",
                radii=best,
                precision_bits=bits,
            )
        bits = min(2 * bits, config.max_bits)


def find_roots(f: IntPolynomial, target_error: float = 1e-20, config: RootFinderConfig | None = None) -> RootSet:
    """All complex roots of f with multiplicity, each enclosed in a ball of radius <= target_error."""
    if f.is_zero:
        raise ZeroPolynomialError("find_roots")
    if f.degree < 1:
        raise ValueError("find_roots needs a polynomial of degree >= 1")
    config = config or RootFinderConfig()
    balls: list[ComplexBall] = []
    used = config.start_bits
    for g, mult in squarefree_decomposition(f):
        found, bits = _isolate_squarefree(g, target_error, config)
        used = max(used, bits)
        for b in found:
            balls.extend([b] * mult)
    balls.sort(key=lambda b: (float(b.center.real), float(b.center.imag)))
    return RootSet(tuple(balls), used)
