"""Exhaustive searches over monic integer polynomials of bounded degree and height.

Candidates are enumerated lexicographically over (a_0, ..., a_{d-1}) for each
degree d in turn, split into contiguous chunks, and handed to worker
processes.  Results are merged and sorted, so the output never depends on
how many workers ran.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from algentropy.exact_core.polynomial import IntPolynomial
from algentropy.mahler.cyclotomic import is_cyclotomic
from algentropy.mahler.measure import MahlerResult, mahler_measure
from algentropy.mahler.roots import RootFinderConfig


@dataclass(frozen=True)
class SearchConfig:
    max_degree: int
    height: int
    threshold_nats: float
    workers: int | None = None
    tolerance: float = 1e-12
    chunk_size: int = 4096
    # float screen: keep a candidate when its double-precision measure is
    # within this margin of the threshold or its roots are nearly repeated
    screen_margin: float = 0.05
    screen_separation: float = 1e-3
    root_config: RootFinderConfig | None = None


def _chunks(max_degree: int, height: int, chunk_size: int) -> list[tuple[int, int, int]]:
    out = []
    for d in range(1, max_degree + 1):
        total = 2 * height * (2 * height + 1) ** (d - 1)
        for start in range(0, total, chunk_size):
            out.append((d, start, min(start + chunk_size, total)))
    return out


def _candidates(d: int, height: int, start: int, stop: int):
    values = range(-height, height + 1)
    constants = [v for v in values if v != 0]
    tuples = itertools.product(constants, *([values] * (d - 1)))
    for low in itertools.islice(tuples, start, stop):
        yield low + (1,)


def _float_screen(coeffs: tuple[int, ...], threshold: float, margin: float, separation: float) -> bool:
    roots = np.roots(coeffs[::-1])
    mods = np.abs(roots)
    estimate = float(np.sum(np.log(np.maximum(mods, 1.0))))
    if estimate < threshold + margin:
        return True
    if len(roots) > 1:
        gaps = np.abs(roots[:, None] - roots[None, :])
        np.fill_diagonal(gaps, np.inf)
        if gaps.min() < separation:
            return True
    return False


def _search_chunk(args) -> list[tuple[tuple[int, ...], MahlerResult]]:
    (d, start, stop), cfg = args
    found = []
    for coeffs in _candidates(d, cfg.height, start, stop):
        if not _float_screen(coeffs, cfg.threshold_nats, cfg.screen_margin, cfg.screen_separation):
            continue
        f = IntPolynomial(coeffs)
        if is_cyclotomic(f):
            continue
        res = mahler_measure(f, cfg.tolerance, cfg.root_config)
        if 0 < res.value_nats < cfg.threshold_nats:
            found.append((coeffs, _strip_roots(res)))
    return found


def _strip_roots(res: MahlerResult) -> MahlerResult:
    return MahlerResult(
        res.value_nats, res.log_leading, res.expanding_terms, res.error_bound, res.precision_bits, None
    )


def _run_chunks(fn, chunks, cfg, workers: int | None):
    workers = workers or os.cpu_count() or 1
    jobs = [(c, cfg) for c in chunks]
    if workers == 1:
        return [fn(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, jobs))


def search_small_measures(
    max_degree: int,
    height: int,
    threshold_nats: float,
    workers: int | None = None,
    tolerance: float = 1e-12,
    root_config: RootFinderConfig | None = None,
) -> list[tuple[IntPolynomial, MahlerResult]]:
    """All non-cyclotomic monic f with deg <= max_degree, height <= height, f(0) != 0
    and 0 < m(f) < threshold_nats, sorted by measure then coefficients.

    Root enclosures are dropped from the returned results to keep them small.
    """
    if max_degree < 1 or height < 1:
        raise ValueError("max_degree and height must be >= 1")
    cfg = SearchConfig(max_degree, height, threshold_nats, workers, tolerance, root_config=root_config)
    chunks = _chunks(max_degree, height, cfg.chunk_size)
    merged = [hit for part in _run_chunks(_search_chunk, chunks, cfg, workers) for hit in part]
    merged.sort(key=lambda item: (round(item[1].value_nats, 9), item[0]))
    return [(IntPolynomial(c), r) for c, r in merged]


def _kronecker_chunk(args) -> list[tuple[tuple[int, ...], float, bool]]:
    (d, start, stop), cfg = args
    bad = []
    for coeffs in _candidates(d, cfg.height, start, stop):
        f = IntPolynomial(coeffs)
        value = mahler_measure(f, cfg.tolerance, cfg.root_config).value_nats
        cyclo = is_cyclotomic(f)
        if (value < cfg.threshold_nats) != cyclo:
            bad.append((coeffs, value, cyclo))
    return bad


def kronecker_sweep(
    max_degree: int,
    height: int,
    zero_threshold: float = 1e-8,
    workers: int | None = None,
    tolerance: float = 1e-12,
) -> tuple[int, list[tuple[IntPolynomial, float, bool]]]:
    """Compare (m(f) < zero_threshold) with is_cyclotomic(f) over every monic candidate.

    Returns the number of polynomials checked and the list of disagreements.
    """
    cfg = SearchConfig(max_degree, height, zero_threshold, workers, tolerance)
    chunks = _chunks(max_degree, height, cfg.chunk_size)
    checked = sum(stop - start for _, start, stop in chunks)
    bad = [b for part in _run_chunks(_kronecker_chunk, chunks, cfg, workers) for b in part]
    bad.sort(key=lambda b: (len(b[0]), b[0]))
    return checked, [(IntPolynomial(c), v, cy) for c, v, cy in bad]
