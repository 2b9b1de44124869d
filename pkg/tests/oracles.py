"""Independent reference computations used only by the tests.

None of these share code with the package's fast paths: determinants by the
Leibniz expansion, real roots by bisection over Fractions, complex roots via
mpmath's Durand-Kerner solver.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import mpmath


def perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_det(rows):
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        term = perm_sign(perm)
        for i in range(n):
            term *= rows[i][perm[i]]
            if term == 0:
                break
        total += term
    return total


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def sylvester_resultant(f, g):
    """Res(f, g) from the Leibniz expansion of the Sylvester matrix (ascending coefficient lists)."""
    m, n = len(f) - 1, len(g) - 1
    size = m + n
    fd, gd = f[::-1], g[::-1]
    rows = [[0] * i + fd + [0] * (size - m - 1 - i) for i in range(n)]
    rows += [[0] * i + gd + [0] * (size - n - 1 - i) for i in range(m)]
    return leibniz_det(rows)


def charpoly_by_expansion(rows):
    """det(tI - A) as an ascending coefficient list, by Leibniz over polynomial entries."""
    n = len(rows)
    entries = [[[-Fraction(rows[i][j]), Fraction(1)] if i == j else [-Fraction(rows[i][j])] for j in range(n)] for i in range(n)]
    total = [Fraction(0)] * (n + 1)
    for perm in itertools.permutations(range(n)):
        term = [Fraction(perm_sign(perm))]
        for i in range(n):
            term = poly_mul(term, entries[i][perm[i]])
        for k, c in enumerate(term):
            total[k] += c
    return total


def bisect_root(coeffs, lo: Fraction, hi: Fraction, steps: int = 200) -> Fraction:
    def ev(x):
        acc = Fraction(0)
        for c in reversed(coeffs):
            acc = acc * x + c
        return acc

    flo = ev(lo)
    assert flo * ev(hi) < 0
    for _ in range(steps):
        mid = (lo + hi) / 2
        fm = ev(mid)
        if fm == 0:
            return mid
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return (lo + hi) / 2


def mp_roots(coeffs, dps: int = 60):
    """All complex roots from mpmath.polyroots (descending input expected there)."""
    with mpmath.workdps(dps):
        return mpmath.polyroots([mpmath.mpf(c) for c in reversed(coeffs)], maxsteps=500, extraprec=4 * dps)


def mp_mahler(coeffs, dps: int = 60) -> float:
    with mpmath.workdps(dps):
        roots = mp_roots(coeffs, dps)
        total = mpmath.log(abs(coeffs[-1]))
        for r in roots:
            if abs(r) > 1:
                total += mpmath.log(abs(r))
        return float(total)


def delta_by_roots(coeffs, n: int, dps: int = 80):
    with mpmath.workdps(dps):
        roots = mp_roots(coeffs, dps)
        prod = mpmath.mpf(1)
        for r in roots:
            prod *= abs(1 - r**n)
        return prod


def is_cyclotomic_by_roots(coeffs, dps: int = 50) -> bool:
    """Every root is an m-th root of unity for some m <= 2*deg^2 (numerical)."""
    d = len(coeffs) - 1
    bound = 2 * d * d
    with mpmath.workdps(dps):
        for r in mp_roots(coeffs, dps):
            if abs(abs(r) - 1) > mpmath.mpf(10) ** (-20):
                return False
            k = mpmath.arg(r) / (2 * mpmath.pi)
            if not any(abs(k * m - mpmath.nint(k * m)) < mpmath.mpf(10) ** (-15) for m in range(1, bound + 1)):
                return False
    return True


def log_ratio(a: int, b: int) -> float:
    return math.log(a) - math.log(b)
