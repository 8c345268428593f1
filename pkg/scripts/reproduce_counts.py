"""Print every pipeline for a range of degrees, with timings."""
from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from tropcurves import counts
from tropcurves.paths import enumerate_paths


@dataclass
class Config:
    max_degree: int = 5
    workers: int | None = None


def main(cfg: Config) -> None:
    print(f"{'d':>2} {'paths':>6} {'ntrop':>8} {'severi':>8} {'large_j':>8} {'small_j':>8} {'corollary':>9} {'sec':>6}")
    for d in range(1, cfg.max_degree + 1):
        t0 = time.perf_counter()
        row = [
            len(enumerate_paths(d)),
            counts.n_trop(d, cfg.workers),
            counts.severi_degree(d, cfg.workers),
            counts.e_trop_large_j(d, cfg.workers),
            counts.e_trop_small_j(d, cfg.workers),
            counts.n_via_corollary(d, cfg.workers) if d >= 3 else "-",
        ]
        dt = time.perf_counter() - t0
        print(f"{d:>2} {row[0]:>6} {row[1]:>8} {row[2]:>8} {row[3]:>8} {row[4]:>8} {row[5]:>9} {dt:>6.1f}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=5)
    ap.add_argument("--workers", type=int, default=None)
    a = ap.parse_args()
    main(Config(a.max_degree, a.workers))
