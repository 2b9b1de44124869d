"""Mahler measures, Lehmer sequences, Kronecker's criterion and small-measure search."""

from algentropy.mahler.cyclotomic import is_cyclotomic
from algentropy.mahler.measure import (
    MahlerResult,
    lehmer_delta,
    lehmer_limit_profile,
    mahler_measure,
    mahler_measure_rat,
)
from algentropy.mahler.roots import ComplexBall, RootFinderConfig, RootSet, find_roots
from algentropy.mahler.search import kronecker_sweep, search_small_measures

LEHMER_POLYNOMIAL_COEFFS = (1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1)

__all__ = [
    "ComplexBall",
    "LEHMER_POLYNOMIAL_COEFFS",
    "MahlerResult",
    "RootFinderConfig",
    "RootSet",
    "find_roots",
    "is_cyclotomic",
    "kronecker_sweep",
    "lehmer_delta",
    "lehmer_limit_profile",
    "mahler_measure",
    "mahler_measure_rat",
    "search_small_measures",
]
