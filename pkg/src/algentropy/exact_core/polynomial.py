"""Univariate polynomials over Z and Q with exact coefficients.

Coefficients are stored in ascending order (a_0 first).  The zero polynomial
is the empty tuple and has degree -1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence

from algentropy.errors import NotMonicError, ZeroPolynomialError


def _trim(coeffs: Sequence) -> tuple:
    end = len(coeffs)
    while end and coeffs[end - 1] == 0:
        end -= 1
    return tuple(coeffs[:end])


def _add(a: Sequence, b: Sequence) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _mul(a: Sequence, b: Sequence) -> list:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _horner(coeffs: Sequence, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _format(coeffs: Sequence, var: str = "t") -> str:
    if not coeffs:
        return "0"
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if k == 0:
            body = str(mag)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        terms.append((sign, body))
    first_sign, first_body = terms[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with arbitrary-precision integer coefficients."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(tuple(int(c) for c in self.coeffs)))

    @classmethod
    def from_roots(cls, roots: Iterable[int]) -> IntPolynomial:
        out = cls((1,))
        for r in roots:
            out = out * cls((-r, 1))
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    @property
    def is_primitive(self) -> bool:
        return bool(self.coeffs) and reduce(gcd, self.coeffs, 0) == 1

    @property
    def height(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)

    def __call__(self, x):
        return _horner(self.coeffs, x)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        return IntPolynomial(_add(self.coeffs, other.coeffs))

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial(c * other for c in self.coeffs)
        return IntPolynomial(_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> IntPolynomial:
        out = IntPolynomial((1,))
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> IntPolynomial:
        return IntPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def reciprocal(self) -> IntPolynomial:
        """t^deg f(1/t); requires f(0) != 0 to keep the degree."""
        return IntPolynomial(reversed(self.coeffs))

    def to_rational(self) -> RatPolynomial:
        return RatPolynomial(self.coeffs)

    def __str__(self) -> str:
        return _format(self.coeffs)


@dataclass(frozen=True)
class RatPolynomial:
    """Polynomial with exact rational coefficients."""

    coeffs: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(tuple(Fraction(c) for c in self.coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return self.leading == 1

    @property
    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def monic(self) -> RatPolynomial:
        if self.is_zero:
            raise ZeroPolynomialError("monic normalization")
        lead = self.leading
        return RatPolynomial(c / lead for c in self.coeffs)

    def to_integer(self) -> IntPolynomial:
        if not self.is_integral:
            raise ValueError(f"polynomial {self} has non-integer coefficients")
        return IntPolynomial(c.numerator for c in self.coeffs)

    def __call__(self, x):
        return _horner(self.coeffs, x)

    def __add__(self, other: RatPolynomial) -> RatPolynomial:
        return RatPolynomial(_add(self.coeffs, other.coeffs))

    def __neg__(self) -> RatPolynomial:
        return RatPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: RatPolynomial) -> RatPolynomial:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RatPolynomial(c * other for c in self.coeffs)
        return RatPolynomial(_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __divmod__(self, other: RatPolynomial) -> tuple[RatPolynomial, RatPolynomial]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return RatPolynomial(quot), RatPolynomial(rem[:dq] if dq > 0 else [])

    def __floordiv__(self, other: RatPolynomial) -> RatPolynomial:
        return divmod(self, other)[0]

    def __mod__(self, other: RatPolynomial) -> RatPolynomial:
        return divmod(self, other)[1]

    def derivative(self) -> RatPolynomial:
        return RatPolynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def __str__(self) -> str:
        return _format(self.coeffs)


@dataclass(frozen=True)
class ClearedPolynomial:
    """A monic rational polynomial g written as primitive / s."""

    s: int
    primitive: IntPolynomial


def content_and_primitive(f: IntPolynomial) -> tuple[int, IntPolynomial]:
    """Split f as content * primitive part, primitive part with positive leading coefficient."""
    if f.is_zero:
        raise ZeroPolynomialError("content_and_primitive")
    content = reduce(gcd, f.coeffs, 0)
    sign = 1 if f.leading > 0 else -1
    return content, IntPolynomial(sign * (c // content) for c in f.coeffs)


def primitive_part(f: RatPolynomial | IntPolynomial) -> IntPolynomial:
    """Integer primitive part of a rational polynomial (positive leading coefficient)."""
    if isinstance(f, IntPolynomial):
        return content_and_primitive(f)[1]
    if f.is_zero:
        raise ZeroPolynomialError("primitive_part")
    den = reduce(lcm, (c.denominator for c in f.coeffs), 1)
    return content_and_primitive(IntPolynomial((c * den).numerator for c in f.coeffs))[1]


def clear_denominators(g: RatPolynomial) -> ClearedPolynomial:
    if g.is_zero:
        raise ZeroPolynomialError("clear_denominators")
    if not g.is_monic:
        raise NotMonicError(f"clear_denominators requires monic polynomial, got {g}")
    s = reduce(lcm, (c.denominator for c in g.coeffs), 1)
    primitive = IntPolynomial((c * s).numerator for c in g.coeffs)
    # gcd of s*g divides the leading coefficient s and every s*a_i; minimality of s forces 1
    assert primitive.is_primitive, f"s*g not primitive for {g}"
    return ClearedPolynomial(s, primitive)


def rat_gcd(f: RatPolynomial, g: RatPolynomial) -> RatPolynomial:
    """Monic gcd over Q (zero only when both inputs are zero)."""
    while not g.is_zero:
        f, g = g, f % g
    return f if f.is_zero else f.monic()


def poly_gcd(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """Primitive gcd over Z[t], positive leading coefficient."""
    d = rat_gcd(f.to_rational(), g.to_rational())
    return IntPolynomial() if d.is_zero else primitive_part(d)


def exact_divide(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """f / g, where g is known to divide f over Q; result is returned over Z when integral."""
    q, r = divmod(f.to_rational(), g.to_rational())
    if not r.is_zero:
        raise ValueError(f"{g} does not divide {f}")
    return q.to_integer()


def squarefree_part(f: IntPolynomial) -> IntPolynomial:
    """Primitive part of f / gcd(f, f')."""
    if f.is_zero:
        raise ZeroPolynomialError("squarefree_part")
    if f.degree == 0:
        return IntPolynomial((1,))
    rf = f.to_rational()
    d = rat_gcd(rf, rf.derivative())
    return primitive_part(rf // d)


def squarefree_decomposition(f: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun's algorithm: f = c * prod g_i^i with every g_i primitive and squarefree.

    Only factors of positive degree are returned, as (g_i, i) pairs.
    """
    if f.is_zero:
        raise ZeroPolynomialError("squarefree_decomposition")
    if f.degree == 0:
        return []
    a = f.to_rational()
    da = a.derivative()
    b = rat_gcd(a, da)
    c = a // b
    d = da // b - c.derivative()
    out = []
    i = 1
    while c.degree > 0:
        g = rat_gcd(c, d)
        if g.degree > 0:
            out.append((primitive_part(g), i))
        c = c // g
        d = d // g - c.derivative()
        i += 1
    return out


def powmod_monic(exponent: int, modulus: IntPolynomial) -> IntPolynomial:
    """t^exponent reduced modulo a monic integer polynomial, exactly over Z."""
    if not modulus.is_monic:
        raise NotMonicError("powmod_monic requires a monic modulus")
    k = modulus.degree
    low = modulus.coeffs[:k]

    def reduce_(p: list[int]) -> list[int]:
        for top in range(len(p) - 1, k - 1, -1):
            c = p[top]
            if c:
                base = top - k
                for j, a in enumerate(low):
                    p[base + j] -= c * a
                p[top] = 0
        return p[:k]

    result = reduce_([1])
    square = reduce_([0, 1])
    e = exponent
    while e:
        if e & 1:
            result = reduce_(_mul(result, square))
        e >>= 1
        if e:
            square = reduce_(_mul(square, square))
    return IntPolynomial(result)


def _bareiss_det(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def sylvester_matrix(f: IntPolynomial, g: IntPolynomial) -> list[list[int]]:
    """Sylvester matrix with deg g shifted rows of f followed by deg f rows of g."""
    m, n = f.degree, g.degree
    size = m + n
    fd = list(reversed(f.coeffs))
    gd = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + fd + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gd + [0] * (size - n - 1 - i))
    return rows


def resultant(f: IntPolynomial, g: IntPolynomial) -> int:
    """Res(f, g) as the Sylvester determinant, by fraction-free elimination."""
    if f.is_zero or g.is_zero:
        raise ZeroPolynomialError("resultant")
    if f.degree == 0:
        return f.leading ** g.degree
    if g.degree == 0:
        return g.leading ** f.degree
    return _bareiss_det(sylvester_matrix(f, g))
