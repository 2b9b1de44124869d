"""Exhaustive check that zero measure and the exact cyclotomic test agree.

    python scripts/kronecker_sweep.py --degree 6 --height 2 --workers 4
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from algentropy.mahler import kronecker_sweep


@dataclass(frozen=True)
class SweepConfig:
    degree: int = 6
    height: int = 2
    zero_threshold: float = 1e-8
    workers: int | None = None


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree", type=int, default=SweepConfig.degree)
    ap.add_argument("--height", type=int, default=SweepConfig.height)
    ap.add_argument("--zero-threshold", type=float, default=SweepConfig.zero_threshold)
    ap.add_argument("--workers", type=int, default=None)
    cfg = SweepConfig(**vars(ap.parse_args()))

    start = time.perf_counter()
    checked, bad = kronecker_sweep(cfg.degree, cfg.height, cfg.zero_threshold, cfg.workers)
    print(f"checked {checked} polynomials in {time.perf_counter() - start:.1f} s")
    print(f"disagreements: {len(bad)}")
    for f, value, cyclo in bad:
        print(f"  {f}: m = {value:.3e}, cyclotomic = {cyclo}")


if __name__ == "__main__":
    main()
