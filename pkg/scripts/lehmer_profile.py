"""Print log(Delta_n)/n against the Mahler measure for a polynomial given on the command line.

    python scripts/lehmer_profile.py 1 1 0 -1 -1 -1 -1 -1 0 1 1 --horizon 2000 --every 250
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from algentropy.exact_core import IntPolynomial
from algentropy.mahler import lehmer_limit_profile, mahler_measure


@dataclass(frozen=True)
class ProfileConfig:
    coeffs: tuple[int, ...]
    horizon: int = 1000
    every: int = 100


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("coeffs", type=int, nargs="+", help="ascending integer coefficients of a monic polynomial")
    ap.add_argument("--horizon", type=int, default=ProfileConfig.horizon)
    ap.add_argument("--every", type=int, default=ProfileConfig.every)
    args = ap.parse_args()
    cfg = ProfileConfig(tuple(args.coeffs), args.horizon, args.every)

    f = IntPolynomial(cfg.coeffs)
    m = mahler_measure(f).value_nats
    print(f"f = {f}, m(f) = {m:.10f}")
    for n, value in lehmer_limit_profile(f, cfg.horizon):
        if n % cfg.every == 0 or n == cfg.horizon:
            shown = "Delta_n = 0" if value is None else f"{value:.10f}  (diff {value - m:+.2e})"
            print(f"n = {n:6d}  {shown}")


if __name__ == "__main__":
    main()
