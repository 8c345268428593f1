"""Where the lattice-path formula and the irreducible count part ways.

The formula sums the small-j weight over every column-wise subdivision,
reducible curves included. This script splits that sum into irreducible
and reducible parts, grouped by the number of curve components.
"""
from __future__ import annotations

import argparse
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from tropcurves import counts
from tropcurves.lattice import dual_curve_components
from tropcurves.subdivisions import generate_subdivisions, subdivision_multiplicity


@dataclass
class Config:
    degree: int = 5


def main(cfg: Config) -> None:
    d = cfg.degree
    by_components: Counter = Counter()
    for p in counts.corollary_paths(d):
        for s in generate_subdivisions(p):
            k = dual_curve_components(s.cells)
            by_components[k] += counts.small_j_factor(s) * subdivision_multiplicity(s)
    formula = sum((counts.corollary_contribution(p) for p in counts.corollary_paths(d)), Fraction(0))
    explicit = sum(by_components.values(), Fraction(0))
    scale = comb(d - 1, 2)
    print(f"degree {d}, C(d-1,2) = {scale}")
    print(f"lattice-path formula sum      {formula}  -> {formula / scale}")
    print(f"explicit sum, all curves      {explicit}")
    for k in sorted(by_components):
        print(f"  curves with {k} component(s)  {by_components[k]}")
    print(f"irreducible count n_trop      {counts.n_trop(d)}")
    print(f"reducible excess / C(d-1,2)   {(formula - by_components[1]) / scale}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-d", "--degree", type=int, default=5)
    main(Config(ap.parse_args().degree))
