"""Exact test for polynomials whose roots are all roots of unity."""

from __future__ import annotations

from functools import lru_cache
from math import lcm

from algentropy.errors import ZeroPolynomialError
from algentropy.exact_core.polynomial import IntPolynomial, powmod_monic, squarefree_part


def euler_phi(m: int) -> int:
    result = m
    p = 2
    k = m
    while p * p <= k:
        if k % p == 0:
            while k % p == 0:
                k //= p
            result -= result // p
        p += 1
    if k > 1:
        result -= result // k
    return result


@lru_cache(maxsize=None)
def unity_exponent(degree: int) -> int:
    """lcm of every m with phi(m) <= degree.

    phi(m) >= sqrt(m/2) bounds the candidates by m <= 2 * degree^2.
    """
    out = 1
    for m in range(1, 2 * degree * degree + 1):
        if euler_phi(m) <= degree:
            out = lcm(out, m)
    return out


def is_cyclotomic(f: IntPolynomial) -> bool:
    """True when every complex root of f is a root of unity (decided over Z, no floats).

    A root of unity of order m has degree phi(m) over Q, so the roots of the
    squarefree part g all have order dividing L = unity_exponent(deg g), and
    that happens exactly when g divides t^L - 1.
    """
    if f.is_zero:
        raise ZeroPolynomialError("is_cyclotomic")
    if abs(f.leading) != 1:
        return False
    if f.degree == 0:
        return True
    g = squarefree_part(f)
    if g.leading != 1:
        return False
    rem = powmod_monic(unity_exponent(g.degree), g)
    return rem.coeffs == (1,)
