"""Algebraic entropy of endomorphisms of Q^n given by rational matrices.

For an automorphism with matrix A the entropy is log s plus the log-moduli of
the eigenvalues outside the unit circle, where s clears the denominators of
the characteristic polynomial; equivalently it is the Mahler measure of that
polynomial.  Singular matrices are first reduced to the injective map induced
on the quotient by the hyperkernel, which carries all of the entropy.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from algentropy.errors import BlockStructureError, SingularMatrixError
from algentropy.exact_core.matrix import RatMatrix, char_poly, companion_matrix, hyperkernel_basis, quotient_matrix
from algentropy.exact_core.polynomial import IntPolynomial, clear_denominators
from algentropy.mahler.measure import mahler_measure_rat
from algentropy.mahler.roots import RootFinderConfig


@dataclass(frozen=True)
class EntropyValue:
    value_nats: float
    log_s_term: float
    expanding_terms: tuple[tuple[complex, float], ...]
    reduced_dimension: int
    error_bound: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.value_nats):
            raise ValueError("entropy of a finite-rank map must be finite")


ZERO_ENTROPY = EntropyValue(0.0, 0.0, (), 0, 0.0)


def yuzvinski_entropy(a: RatMatrix, tolerance: float = 1e-12, config: RootFinderConfig | None = None) -> EntropyValue:
    if a.determinant() == 0:
        raise SingularMatrixError("matrix is singular; use endo_entropy for non-injective maps")
    chi = char_poly(a)
    s = clear_denominators(chi).s
    res = mahler_measure_rat(chi, tolerance, config)
    terms = tuple((complex(res.roots.roots[i].center), t) for i, t in res.expanding_terms)
    return EntropyValue(res.value_nats, math.log(s), terms, a.n, res.error_bound)


def endo_entropy(a: RatMatrix, tolerance: float = 1e-12, config: RootFinderConfig | None = None) -> EntropyValue:
    """Entropy of any endomorphism of Q^n, via the quotient by the hyperkernel."""
    kernel = hyperkernel_basis(a)
    if not kernel:
        return yuzvinski_entropy(a, tolerance, config)
    if len(kernel) == a.n:
        return ZERO_ENTROPY
    return yuzvinski_entropy(quotient_matrix(a, kernel), tolerance, config)


def multiplication_entropy(r, n: int) -> EntropyValue:
    """Entropy of x -> r x on Q^n in closed form: n log max(|a|, b) for r = a/b."""
    r = Fraction(r)
    a, b = abs(r.numerator), r.denominator
    if n < 1:
        raise ValueError("dimension must be positive")
    if a == 0:
        return ZERO_ENTROPY
    log_s = n * math.log(b)
    terms: tuple[tuple[complex, float], ...] = ()
    if a > b:
        terms = ((complex(float(r)), math.log(a) - math.log(b)),) * n
    return EntropyValue(n * math.log(max(a, b)), log_s, terms, n, 0.0)


def algebraic_number_entropy(
    minpoly: IntPolynomial, tolerance: float = 1e-12, config: RootFinderConfig | None = None
) -> EntropyValue:
    """Entropy of multiplication by a root of ``minpoly`` on Q(alpha); irreducibility is not checked."""
    if minpoly.is_zero or minpoly.degree < 1:
        raise ValueError("minimal polynomial must have degree >= 1")
    if minpoly.coeffs[0] == 0:
        raise ValueError("constant term must be nonzero (the companion matrix would be singular)")
    g = minpoly.to_rational().monic()
    res = mahler_measure_rat(g, tolerance, config)
    terms = tuple((complex(res.roots.roots[i].center), t) for i, t in res.expanding_terms)
    s = clear_denominators(g).s
    return EntropyValue(res.value_nats, math.log(s), terms, minpoly.degree, res.error_bound)


def companion_entropy(f: IntPolynomial, tolerance: float = 1e-12, config: RootFinderConfig | None = None) -> EntropyValue:
    return yuzvinski_entropy(companion_matrix(f.to_rational()), tolerance, config)


@dataclass(frozen=True)
class AdditionReport:
    h_total: float
    h_sub: float
    h_quotient: float
    defect: float
    bound: float

    @property
    def ok(self) -> bool:
        return self.defect <= self.bound


def check_addition(
    a: RatMatrix, split: int, tolerance: float = 1e-12, config: RootFinderConfig | None = None
) -> AdditionReport:
    """Compare h(A) with h(A_1) + h(A_2) for A = [[A_1, B], [0, A_2]], A_1 of size split."""
    n = a.n
    if not 0 < split < n:
        raise ValueError(f"split must lie in 1..{n - 1}")
    for i in range(split, n):
        for j in range(split):
            if a[i, j] != 0:
                raise BlockStructureError(i, j, a[i, j])
    total = yuzvinski_entropy(a, tolerance, config)
    sub = yuzvinski_entropy(a.submatrix(range(split), range(split)), tolerance, config)
    quot = yuzvinski_entropy(a.submatrix(range(split, n), range(split, n)), tolerance, config)
    defect = abs(total.value_nats - sub.value_nats - quot.value_nats)
    bound = total.error_bound + sub.error_bound + quot.error_bound + _float_slack(total.value_nats)
    return AdditionReport(total.value_nats, sub.value_nats, quot.value_nats, defect, bound)


@dataclass(frozen=True)
class LawReport:
    lhs: float
    rhs: float
    defect: float
    bound: float

    @property
    def ok(self) -> bool:
        return self.defect <= self.bound


def _float_slack(value: float) -> float:
    # three doubles rounded from exact-at-working-precision values
    return 8 * 2.0**-52 * max(1.0, abs(value))


def check_power_law(
    a: RatMatrix, k: int, tolerance: float = 1e-12, config: RootFinderConfig | None = None
) -> LawReport:
    """|h(A^k) - |k| h(A)| with A^k formed exactly (negative k through the exact inverse)."""
    base = yuzvinski_entropy(a, tolerance, config)
    if k == 0:
        power = ZERO_ENTROPY
    else:
        power = yuzvinski_entropy(a**k, tolerance, config)
    rhs = abs(k) * base.value_nats
    defect = abs(power.value_nats - rhs)
    bound = power.error_bound + abs(k) * base.error_bound + _float_slack(max(rhs, power.value_nats))
    return LawReport(power.value_nats, rhs, defect, bound)


def check_product(
    a: RatMatrix, b: RatMatrix, tolerance: float = 1e-12, config: RootFinderConfig | None = None
) -> LawReport:
    """h(A x B) against h(A) + h(B) on the block-diagonal matrix."""
    ha = yuzvinski_entropy(a, tolerance, config)
    hb = yuzvinski_entropy(b, tolerance, config)
    hab = yuzvinski_entropy(RatMatrix.block_diagonal(a, b), tolerance, config)
    rhs = ha.value_nats + hb.value_nats
    defect = abs(hab.value_nats - rhs)
    bound = ha.error_bound + hb.error_bound + hab.error_bound + _float_slack(hab.value_nats)
    return LawReport(hab.value_nats, rhs, defect, bound)


def check_conjugation(
    a: RatMatrix, p: RatMatrix, tolerance: float = 1e-12, config: RootFinderConfig | None = None
) -> LawReport:
    ha = yuzvinski_entropy(a, tolerance, config)
    hc = yuzvinski_entropy(p @ a @ p.inverse(), tolerance, config)
    defect = abs(hc.value_nats - ha.value_nats)
    return LawReport(hc.value_nats, ha.value_nats, defect, ha.error_bound + hc.error_bound + _float_slack(ha.value_nats))
