"""Square matrices over Q and the exact linear algebra built on them."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from algentropy.errors import SingularMatrixError, ZeroQuotientError
from algentropy.exact_core.polynomial import RatPolynomial

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class RatMatrix:
    rows: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(Fraction(x) for x in r) for r in self.rows)
        n = len(rows)
        if n == 0:
            raise ValueError("matrix dimension must be at least 1")
        for i, r in enumerate(rows):
            if len(r) != n:
                raise ValueError(f"row {i} has length {len(r)}, expected {n} (matrix must be square)")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def scalar(cls, r, n: int) -> RatMatrix:
        return cls(tuple(tuple(r if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def diagonal(cls, entries: Sequence) -> RatMatrix:
        n = len(entries)
        return cls(tuple(tuple(entries[i] if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def block_upper(cls, a1: RatMatrix, b: Sequence[Sequence], a2: RatMatrix) -> RatMatrix:
        """[[a1, b], [0, a2]]; b is k x (n-k)."""
        k, m = a1.n, a2.n
        rows = [list(a1.rows[i]) + list(b[i]) for i in range(k)]
        rows += [[0] * k + list(a2.rows[i]) for i in range(m)]
        return cls(rows)

    @classmethod
    def block_diagonal(cls, a: RatMatrix, b: RatMatrix) -> RatMatrix:
        return cls.block_upper(a, [[0] * b.n for _ in range(a.n)], b)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def submatrix(self, rows: range, cols: range) -> RatMatrix:
        return RatMatrix(tuple(tuple(self.rows[i][j] for j in cols) for i in rows))

    def __add__(self, other: RatMatrix) -> RatMatrix:
        return RatMatrix(tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __mul__(self, c) -> RatMatrix:
        return RatMatrix(tuple(tuple(c * x for x in r) for r in self.rows))

    __rmul__ = __mul__

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        cols = list(zip(*other.rows))
        return RatMatrix(tuple(tuple(sum(x * y for x, y in zip(r, c)) for c in cols) for r in self.rows))

    def apply(self, v: Sequence) -> Vector:
        return tuple(sum(x * y for x, y in zip(r, v)) for r in self.rows)

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(self.n)), Fraction(0))

    def transpose(self) -> RatMatrix:
        return RatMatrix(tuple(zip(*self.rows)))

    def determinant(self) -> Fraction:
        m = [list(r) for r in self.rows]
        n = self.n
        det = Fraction(1)
        for k in range(n):
            p = next((i for i in range(k, n) if m[i][k] != 0), None)
            if p is None:
                return Fraction(0)
            if p != k:
                m[k], m[p] = m[p], m[k]
                det = -det
            pivot = m[k][k]
            det *= pivot
            for i in range(k + 1, n):
                f = m[i][k] / pivot
                if f:
                    m[i] = [a - f * b for a, b in zip(m[i], m[k])]
        return det

    def is_invertible(self) -> bool:
        return self.determinant() != 0

    def inverse(self) -> RatMatrix:
        n = self.n
        m = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(self.rows)]
        for k in range(n):
            p = next((i for i in range(k, n) if m[i][k] != 0), None)
            if p is None:
                raise SingularMatrixError("matrix is singular")
            m[k], m[p] = m[p], m[k]
            pivot = m[k][k]
            m[k] = [x / pivot for x in m[k]]
            for i in range(n):
                if i != k and m[i][k]:
                    f = m[i][k]
                    m[i] = [a - f * b for a, b in zip(m[i], m[k])]
        return RatMatrix(tuple(tuple(r[n:]) for r in m))

    def __pow__(self, k: int) -> RatMatrix:
        base = self
        if k < 0:
            base = self.inverse()
            k = -k
        result = RatMatrix.identity(self.n)
        while k:
            if k & 1:
                result = result @ base
            k >>= 1
            if k:
                base = base @ base
        return result

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in r) for r in self.rows)


def char_poly(a: RatMatrix) -> RatPolynomial:
    """Monic det(tI - A) by the Faddeev-LeVerrier recurrence."""
    n = a.n
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    m = RatMatrix.scalar(0, n)
    for k in range(1, n + 1):
        m = a @ m + RatMatrix.scalar(coeffs[n - k + 1], n)
        coeffs[n - k] = -(a @ m).trace() / k
    return RatPolynomial(coeffs)


def companion_matrix(f: RatPolynomial) -> RatMatrix:
    """Ones on the subdiagonal, last column -a_i / a_k."""
    k = f.degree
    if k < 1:
        raise ValueError("companion matrix needs a polynomial of degree >= 1")
    lead = f.leading
    rows = [[Fraction(0)] * k for _ in range(k)]
    for i in range(1, k):
        rows[i][i - 1] = Fraction(1)
    for i in range(k):
        rows[i][k - 1] = -f.coeffs[i] / lead
    return RatMatrix(rows)


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pivot = m[r][c]
        m[r] = [x / pivot for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(vectors: Sequence[Sequence]) -> int:
    if not vectors:
        return 0
    return len(_rref([[Fraction(x) for x in v] for v in vectors])[1])


def nullspace(a: RatMatrix) -> list[Vector]:
    """Basis of {v : A v = 0}, one vector per free column of the reduced echelon form."""
    n = a.n
    m, pivots = _rref([list(r) for r in a.rows])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -m[row][fc]
        basis.append(tuple(v))
    return basis


def hyperkernel_basis(a: RatMatrix) -> list[Vector]:
    """Basis of ker A^n, which is the whole hyperkernel for an n x n matrix."""
    return nullspace(a ** a.n)


def complete_basis(kernel: Sequence[Sequence]) -> list[int]:
    """Indices of unit vectors that extend ``kernel`` to a basis, chosen greedily in index order."""
    n = len(kernel[0]) if kernel else 0
    return _greedy_units([list(v) for v in kernel], n)


def _greedy_units(current: list[list], n: int) -> list[int]:
    chosen = []
    r = rank(current)
    for i in range(n):
        if r == n:
            break
        e = [0] * n
        e[i] = 1
        r2 = rank(current + [e])
        if r2 > r:
            current.append(e)
            chosen.append(i)
            r = r2
    return chosen


def quotient_matrix(a: RatMatrix, kernel: Sequence[Sequence]) -> RatMatrix:
    """Matrix of the map induced by A on Q^n / span(kernel).

    The quotient basis is the image of the unit vectors picked by greedy
    completion of ``kernel``; ``kernel`` must span an A-invariant subspace.
    """
    n = a.n
    k = len(kernel)
    if k == 0:
        return a
    if rank(kernel) >= n:
        raise ZeroQuotientError()
    units = _greedy_units([list(v) for v in kernel], n)
    basis_cols = [list(v) for v in kernel]
    for i in units:
        e = [0] * n
        e[i] = 1
        basis_cols.append(e)
    p = RatMatrix(tuple(zip(*basis_cols)))
    b = p.inverse() @ a @ p
    for i in range(k, n):
        for j in range(k):
            if b[i, j] != 0:
                raise ValueError("kernel basis does not span an invariant subspace")
    return b.submatrix(range(k, n), range(k, n))
