"""Search for monic integer polynomials of small positive Mahler measure.

    python scripts/lehmer_search.py --degree 10 --height 1 --threshold 0.17
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from algentropy.mahler import search_small_measures


@dataclass(frozen=True)
class SearchRun:
    degree: int = 10
    height: int = 1
    threshold: float = 0.17
    workers: int | None = None


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--degree", type=int, default=SearchRun.degree)
    ap.add_argument("--height", type=int, default=SearchRun.height)
    ap.add_argument("--threshold", type=float, default=SearchRun.threshold)
    ap.add_argument("--workers", type=int, default=None)
    cfg = SearchRun(**vars(ap.parse_args()))

    start = time.perf_counter()
    found = search_small_measures(cfg.degree, cfg.height, cfg.threshold, cfg.workers)
    print(f"{len(found)} polynomial(s) below {cfg.threshold} nats ({time.perf_counter() - start:.1f} s)")
    for f, res in found:
        print(f"  {res.value_nats:.12f}  M = {res.exponential:.12f}  {f}")


if __name__ == "__main__":
    main()
