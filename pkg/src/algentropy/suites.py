"""Seeded random verification suites for the entropy laws."""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from algentropy.entropy import check_addition, check_conjugation, check_power_law, check_product
from algentropy.exact_core.matrix import RatMatrix

SUITES = ("addition", "power", "product", "conjugation")
POWER_EXPONENTS = tuple(range(-3, 6))


@dataclass(frozen=True)
class SuiteConfig:
    cases: int = 200
    seed: int = 1
    max_block: int = 4
    max_numerator: int = 9
    max_denominator: int = 9
    tolerance: float = 1e-12
    workers: int | None = 1


@dataclass(frozen=True)
class SuiteSummary:
    suite: str
    cases: int
    checks: int
    max_defect: float
    max_bound: float
    failures: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def random_rational(rng: random.Random, cfg: SuiteConfig) -> Fraction:
    return Fraction(rng.randint(-cfg.max_numerator, cfg.max_numerator), rng.randint(1, cfg.max_denominator))


def random_invertible(rng: random.Random, n: int, cfg: SuiteConfig) -> RatMatrix:
    while True:
        m = RatMatrix([[random_rational(rng, cfg) for _ in range(n)] for _ in range(n)])
        if m.determinant() != 0:
            return m


def random_block_triangular(rng: random.Random, cfg: SuiteConfig) -> tuple[RatMatrix, int]:
    k = rng.randint(1, cfg.max_block)
    m = rng.randint(1, cfg.max_block)
    a1 = random_invertible(rng, k, cfg)
    a2 = random_invertible(rng, m, cfg)
    b = [[random_rational(rng, cfg) for _ in range(m)] for _ in range(k)]
    return RatMatrix.block_upper(a1, b, a2), k


def _case_inputs(suite: str, cfg: SuiteConfig) -> list:
    """Draw every case up front from one RNG so results do not depend on scheduling."""
    rng = random.Random(cfg.seed)
    cases = []
    for _ in range(cfg.cases):
        if suite == "addition":
            cases.append(random_block_triangular(rng, cfg))
        elif suite == "power":
            cases.append(random_invertible(rng, rng.randint(1, cfg.max_block), cfg))
        elif suite == "product":
            a = random_invertible(rng, rng.randint(1, cfg.max_block), cfg)
            b = random_invertible(rng, rng.randint(1, cfg.max_block), cfg)
            cases.append((a, b))
        elif suite == "conjugation":
            n = rng.randint(1, cfg.max_block)
            cases.append((random_invertible(rng, n, cfg), random_invertible(rng, n, cfg)))
        else:
            raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    return cases


def _run_case(job) -> list[tuple[float, float]]:
    suite, case, tol = job
    if suite == "addition":
        rep = check_addition(case[0], case[1], tol)
        return [(rep.defect, rep.bound)]
    if suite == "power":
        return [(r.defect, r.bound) for r in (check_power_law(case, k, tol) for k in POWER_EXPONENTS)]
    if suite == "product":
        rep = check_product(case[0], case[1], tol)
        return [(rep.defect, rep.bound)]
    rep = check_conjugation(case[0], case[1], tol)
    return [(rep.defect, rep.bound)]


def run_suite(suite: str, cfg: SuiteConfig = SuiteConfig()) -> SuiteSummary:
    cases = _case_inputs(suite, cfg)
    jobs = [(suite, c, cfg.tolerance) for c in cases]
    workers = cfg.workers or os.cpu_count() or 1
    if workers == 1:
        results = [_run_case(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_case, jobs))
    max_defect = max((d for r in results for d, _ in r), default=0.0)
    max_bound = max((b for r in results for _, b in r), default=0.0)
    failures = tuple(i for i, r in enumerate(results) if any(d > b for d, b in r))
    return SuiteSummary(suite, len(cases), sum(len(r) for r in results), max_defect, max_bound, failures)
