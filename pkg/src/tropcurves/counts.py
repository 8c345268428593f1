"""Curve counts through 3d-1 points: rational curves and both elliptic pipelines.

Rational counts use irreducible curves only. Column-wise subdivisions also
describe reducible curves (unions of lower-degree curves through subsets of
the points); those are filtered out by dual-graph connectivity. The
lattice-path formula in :func:`n_via_corollary` works on multisets only and
cannot filter them.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Callable, Sequence, TypeVar

from .lattice import area, boundary_nonvertex_count, interior_count
from .paths import LatticePath, column_profile, enumerate_paths, has_big_step
from .subdivisions import (
    ColumnwiseSubdivision,
    count_subdivisions_and_multiplicity,
    generate_subdivisions,
    genus,
    is_irreducible,
    strip_pools,
    subdivision_multiplicity,
)

T = TypeVar("T")


class GenusError(ValueError):
    pass


class ConsistencyError(ArithmeticError):
    """An exact identity that must hold did not."""


def _require_degree(d: int, least: int = 1) -> None:
    if not isinstance(d, int) or d < least:
        raise ValueError(f"degree must be an integer >= {least}, got {d!r}")


# --- per-subdivision factors ------------------------------------------------


def elliptic_factor_large_j(s: ColumnwiseSubdivision) -> Fraction:
    """Sum over triangles of (Area - 1/2) plus the parallelogram areas."""
    if genus(s) != 0:
        raise GenusError("factor is defined for rational curves only")
    half = Fraction(1, 2)
    return sum((area(c) - half if c.is_triangle else area(c) for c in s.cells), Fraction(0))


def small_j_factor(s: ColumnwiseSubdivision) -> Fraction:
    """Sum over triangles of 2*Area^2 - 1/2."""
    if genus(s) != 0:
        raise GenusError("factor is defined for rational curves only")
    return sum((2 * area(t) ** 2 - Fraction(1, 2) for t in s.triangles), Fraction(0))


@dataclass(frozen=True)
class SmallJTerms:
    interior: Fraction  # sum of i(T) * 2 Area(T)
    boundary: Fraction  # sum of b(T) * Area(T)
    excess: Fraction  # sum of Area(T) - 1/2

    @property
    def total(self) -> Fraction:
        return self.interior + self.boundary + self.excess


def small_j_decomposition(s: ColumnwiseSubdivision) -> SmallJTerms:
    """Split the small-j factor by Pick's formula into interior, boundary and excess parts."""
    inner = bound = exc = Fraction(0)
    for t in s.triangles:
        a = area(t)
        inner += interior_count(t) * 2 * a
        bound += boundary_nonvertex_count(t) * a
        exc += a - Fraction(1, 2)
    return SmallJTerms(inner, bound, exc)


# --- per-path contributions -------------------------------------------------


@dataclass(frozen=True)
class PathTally:
    """Exact per-path sums over the compatible column-wise subdivisions."""

    subdivisions: int
    all_mult: int
    irreducible_mult: int
    large_j: Fraction  # over irreducible curves
    small_j: Fraction  # over irreducible curves


@lru_cache(maxsize=None)
def path_tally(path: LatticePath) -> PathTally:
    n = all_m = irr = 0
    large = small = Fraction(0)
    for s in generate_subdivisions(path):
        m = subdivision_multiplicity(s)
        n += 1
        all_m += m
        if is_irreducible(s):
            irr += m
            large += elliptic_factor_large_j(s) * m
            small += small_j_factor(s) * m
    return PathTally(n, all_m, irr, large, small)


def corollary_contribution(path: LatticePath) -> Fraction:
    """The path's term in the lattice-path formula (before dividing by C(d-1,2))."""
    profile = column_profile(path)
    total = Fraction(0)
    for c in count_subdivisions_and_multiplicity(profile):
        bracket = Fraction(0)
        for pool_b, bi, pool_a, bpi in strip_pools(profile, c.betas):
            bracket += (pool_b - bi).half_square_excess() + (pool_a - bpi).half_square_excess()
        total += c.count * c.mult * bracket
    return total


def _map(fn: Callable[[LatticePath], T], paths: Sequence[LatticePath], workers: int | None) -> list[T]:
    if not workers or workers <= 1 or len(paths) < 64:
        return [fn(p) for p in paths]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves input order, so reductions are identical to the serial run
        return list(pool.map(fn, paths, chunksize=max(1, len(paths) // (8 * workers))))


_TALLY_CACHE: dict[int, list[PathTally]] = {}


def tallies(d: int, workers: int | None = None) -> list[PathTally]:
    """Per-path tallies in enumeration order (cached per degree)."""
    _require_degree(d)
    if d not in _TALLY_CACHE:
        _TALLY_CACHE[d] = _map(path_tally, enumerate_paths(d), workers)
    return _TALLY_CACHE[d]


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise ConsistencyError(f"{what} is not an integer: {x}")
    return x.numerator


# --- pipelines --------------------------------------------------------------


def n_trop(d: int, workers: int | None = None) -> int:
    """Rational degree-d curves through 3d-1 general points, with multiplicity."""
    return sum(t.irreducible_mult for t in tallies(d, workers))


def severi_degree(d: int, workers: int | None = None) -> int:
    """Like :func:`n_trop` but counting reducible curves too."""
    return sum(t.all_mult for t in tallies(d, workers))


def e_trop_large_j(d: int, workers: int | None = None) -> int:
    """Elliptic count for large j: per-curve factor times multiplicity, summed.

    Each rational curve contributes its large-j factor, which equals
    C(d-1, 2) for every curve, so the result is C(d-1, 2) * n_trop(d).
    """
    return _as_int(sum((t.large_j for t in tallies(d, workers)), Fraction(0)), "large-j count")


def e_trop_small_j(d: int, workers: int | None = None) -> int:
    return _as_int(sum((t.small_j for t in tallies(d, workers)), Fraction(0)), "small-j count")


def corollary_paths(d: int) -> list[LatticePath]:
    """Paths that can contribute to the lattice-path formula (those with a step longer than 1)."""
    return [p for p in enumerate_paths(d) if has_big_step(p)]


def n_via_corollary(d: int, workers: int | None = None) -> int:
    _require_degree(d)
    if d < 3:
        raise ValueError("the lattice-path formula needs d >= 3")
    total = sum(_map(corollary_contribution, corollary_paths(d), workers), Fraction(0))
    q = total / comb(d - 1, 2)
    if q.denominator != 1:
        raise ConsistencyError(f"sum {total} is not divisible by C({d - 1}, 2)")
    return q.numerator


def expected_large_j(d: int) -> int:
    return comb(d - 1, 2) * n_trop(d)


PIPELINES: dict[str, Callable[[int], int]] = {
    "ntrop": n_trop,
    "large_j": e_trop_large_j,
    "small_j": e_trop_small_j,
    "corollary": n_via_corollary,
}
