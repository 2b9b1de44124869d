"""Run the trajectory oracle on a few maps and compare its growth estimates with the formula.

    python scripts/calibrate_oracle.py --horizon 25
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass
from fractions import Fraction

from algentropy.entropy import yuzvinski_entropy
from algentropy.exact_core import RatMatrix
from algentropy.trajectory import MatrixAction, ScalarAction, enumerate_trajectory, growth_estimate


@dataclass(frozen=True)
class CalibrationConfig:
    horizon: int = 25
    cap: int = 5_000_000


CASES = {
    "fibonacci": (RatMatrix([[0, 1], [1, 1]]), [(0, 0), (1, 0), (0, 1)]),
    "shear": (RatMatrix([[1, 1], [0, 1]]), [(a, b) for a in (-1, 0, 1) for b in (-1, 0, 1)]),
    "cat": (RatMatrix([[2, 1], [1, 1]]), [(0, 0), (1, 0), (0, 1)]),
    "three_halves": (RatMatrix([[Fraction(3, 2)]]), [(0,), (1,), (2,)]),
}


def calibrate(cfg: CalibrationConfig) -> list[dict]:
    rows = []
    for name, (matrix, F) in CASES.items():
        action = ScalarAction(matrix[0, 0]) if matrix.n == 1 else MatrixAction(matrix)
        start = time.perf_counter()
        rec = enumerate_trajectory(action, F, cfg.horizon, cfg.cap)
        est = growth_estimate(rec)
        h = yuzvinski_entropy(matrix).value_nats
        rows.append(
            {
                "case": name,
                "h_formula": h,
                "fekete_upper": est.fekete_upper,
                "tail_slope": est.tail_slope,
                "fekete_minus_h": est.fekete_upper - h,
                "slope_minus_h": est.tail_slope - h,
                "horizon": est.horizon,
                "final_size": rec.sizes[-1],
                "truncated": rec.truncated,
                "seconds": round(time.perf_counter() - start, 2),
            }
        )
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--horizon", type=int, default=CalibrationConfig.horizon)
    ap.add_argument("--cap", type=int, default=CalibrationConfig.cap)
    cfg = CalibrationConfig(**vars(ap.parse_args()))
    print(json.dumps({"config": asdict(cfg), "results": calibrate(cfg)}, indent=2))


if __name__ == "__main__":
    main()
