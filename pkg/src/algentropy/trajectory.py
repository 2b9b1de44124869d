"""Brute-force trajectory growth: |F + phi(F) + ... + phi^{n-1}(F)| computed exactly.

Elements are plain hashable tuples so the trajectories can live in Python sets:

* vectors of Q^n are tuples of ``int`` / ``Fraction`` (integral entries may be
  either; the two compare and hash equal, so set membership is unaffected);
* elements of the direct sum (Z/m)^(N) are sorted tuples of (index, residue)
  pairs with every residue in 1..m-1;
* elements of a product group are pairs (x1, x2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from algentropy.errors import ShapeMismatchError
from algentropy.exact_core.matrix import RatMatrix

DEFAULT_CAP = 5_000_000


def _num(x):
    x = Fraction(x)
    return x.numerator if x.denominator == 1 else x


def _compact(r):
    """int when the rational is integral, which keeps the hot loops in int arithmetic."""
    return r.numerator if r.denominator == 1 else r


class EndoAction:
    """An endomorphism together with the group law of the group it acts on."""

    def zero(self):
        raise NotImplementedError

    def canonical(self, x):
        """Validate an element and return its canonical encoding."""
        raise NotImplementedError

    def apply(self, x):
        raise NotImplementedError

    def add(self, x, y):
        raise NotImplementedError


@dataclass(frozen=True)
class _VectorAction(EndoAction):
    def zero(self):
        return (0,) * self.dim

    def canonical(self, x):
        if isinstance(x, (int, Fraction)):
            x = (x,)
        x = tuple(x)
        if len(x) != self.dim:
            raise ShapeMismatchError(f"expected a vector of length {self.dim}, got {len(x)}")
        return tuple(_num(v) for v in x)

    def add(self, x, y):
        return tuple(a + b for a, b in zip(x, y))


@dataclass(frozen=True)
class MatrixAction(_VectorAction):
    matrix: RatMatrix

    def __post_init__(self) -> None:
        object.__setattr__(self, "_rows", tuple(tuple(_compact(v) for v in r) for r in self.matrix.rows))

    @property
    def dim(self) -> int:
        return self.matrix.n

    def apply(self, x):
        return tuple(sum(a * b for a, b in zip(row, x) if a) for row in self._rows)


@dataclass(frozen=True)
class ScalarAction(_VectorAction):
    r: Fraction
    n: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", Fraction(self.r))
        object.__setattr__(self, "_factor", _compact(self.r))
        if self.n < 1:
            raise ValueError("dimension must be positive")

    @property
    def dim(self) -> int:
        return self.n

    def apply(self, x):
        r = self._factor
        return tuple(r * v for v in x)


@dataclass(frozen=True)
class ShiftAction(EndoAction):
    """Right Bernoulli shift on the direct sum of countably many copies of Z/m."""

    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")

    def zero(self):
        return ()

    def canonical(self, x):
        if isinstance(x, dict):
            x = x.items()
        out = {}
        try:
            for idx, val in x:
                if int(idx) < 0:
                    raise ShapeMismatchError("sequence indices must be non-negative")
                out[int(idx)] = (out.get(int(idx), 0) + int(val)) % self.modulus
        except TypeError as exc:
            raise ShapeMismatchError(f"not a finitely supported sequence: {x!r}") from exc
        return tuple(sorted((i, v) for i, v in out.items() if v))

    def apply(self, x):
        return tuple((i + 1, v) for i, v in x)

    def add(self, x, y):
        m = self.modulus
        out = []
        i = j = 0
        while i < len(x) and j < len(y):
            a, b = x[i], y[j]
            if a[0] == b[0]:
                v = (a[1] + b[1]) % m
                if v:
                    out.append((a[0], v))
                i += 1
                j += 1
            elif a[0] < b[0]:
                out.append(a)
                i += 1
            else:
                out.append(b)
                j += 1
        out.extend(x[i:])
        out.extend(y[j:])
        return tuple(out)


@dataclass(frozen=True)
class ProductAction(EndoAction):
    first: EndoAction
    second: EndoAction

    def zero(self):
        return (self.first.zero(), self.second.zero())

    def canonical(self, x):
        try:
            a, b = x
        except (TypeError, ValueError) as exc:
            raise ShapeMismatchError(f"product element must be a pair, got {x!r}") from exc
        return (self.first.canonical(a), self.second.canonical(b))

    def apply(self, x):
        return (self.first.apply(x[0]), self.second.apply(x[1]))

    def add(self, x, y):
        return (self.first.add(x[0], y[0]), self.second.add(x[1], y[1]))


def product_action(a: EndoAction, b: EndoAction) -> ProductAction:
    return ProductAction(a, b)


def apply(action: EndoAction, x):
    """phi(x), exactly; raises ShapeMismatchError for elements of the wrong group."""
    return action.apply(action.canonical(x))


@dataclass(frozen=True)
class TrajectoryRecord:
    sizes: tuple[int, ...]
    c: tuple[float, ...]
    N: int
    truncated: bool


@dataclass(frozen=True)
class GrowthEstimate:
    fekete_upper: float
    tail_slope: float
    horizon: int
    truncated: bool


def enumerate_trajectory(
    action: EndoAction, F: Iterable, N: int, cap: int = DEFAULT_CAP
) -> TrajectoryRecord:
    """Sizes of T_n = F + phi(F) + ... + phi^{n-1}(F) for n = 1..N, with 0 added to F.

    Built as T_{n+1} = T_n + phi^n(F).  Stops, flagging ``truncated``, as soon as
    a trajectory would exceed ``cap`` elements; ``N`` then counts the sizes
    actually completed.
    """
    if N < 1:
        raise ValueError("horizon N must be >= 1")
    zero = action.zero()
    base = {action.canonical(x) for x in F}
    if not base:
        raise ValueError("F must be non-empty")
    base.add(zero)
    if cap < len(base):
        raise ValueError(f"cap {cap} is smaller than |F| = {len(base)}")
    add = action.add
    traj = set(base)
    sizes = [len(traj)]
    image = base
    truncated = False
    for _ in range(2, N + 1):
        image = {action.apply(x) for x in image}
        grown = set(traj)
        for y in image:
            if y == zero:
                continue
            grown.update(add(t, y) for t in traj)
            if len(grown) > cap:
                truncated = True
                break
        if truncated:
            break
        traj = grown
        sizes.append(len(traj))
    c = tuple(math.log(s) for s in sizes)
    return TrajectoryRecord(tuple(sizes), c, len(sizes), truncated)


def growth_estimate(record: TrajectoryRecord) -> GrowthEstimate:
    """Fekete bound min_n c_n / n and the last increment c_N - c_{N-1}."""
    if record.N < 2:
        raise ValueError("growth estimate needs a horizon of at least 2")
    fekete = min(c / n for n, c in enumerate(record.c, start=1))
    return GrowthEstimate(fekete, record.c[-1] - record.c[-2], record.N, record.truncated)
