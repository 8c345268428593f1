"""Column-wise Newton subdivisions of the degree-d triangle compatible with a path.

Strip ``i`` is the region between the lines x = i and x = i + 1, for
i = 0..d-1. Below the path, each strip is cut by the vertical segments on its
right line (the path's own steps on x = i + 1, then the segments ``beta^{i+1}``
coming from the strip to the right). Some of these are matched with the left
segments ``beta^i`` to form parallelograms; the rest become left-pointing
triangles. Above the path the picture is mirrored: segments live on the left
line (path steps read bottom to top, then ``beta'^i``) and are matched with
right segments ``beta'^{i+1}``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import prod
from typing import Iterator, NamedTuple, Sequence

from .lattice import (
    LatticePoint,
    LatticePolygon,
    double_area,
    dual_curve_components,
)
from .paths import ColumnProfile, LatticePath, StepSequence, column_profile


@dataclass(frozen=True)
class BetaSequences:
    """``beta[i]`` lies on x = i below the path, ``beta_prime[i]`` on x = i above it."""

    beta: tuple[StepSequence, ...]
    beta_prime: tuple[StepSequence, ...]


class SubdivisionCount(NamedTuple):
    count: int
    mult: int
    betas: BetaSequences


def _sub_multisets(pool: StepSequence, weight: int) -> Iterator[StepSequence]:
    """Sub-multisets of ``pool`` whose entries sum to ``weight``, in increasing count order."""
    counts = pool.counts

    def rec(k: int, rem: int, acc: tuple[int, ...]):
        if k == len(counts):
            if rem == 0:
                yield StepSequence(acc)
            return
        size = k + 1
        for c in range(min(counts[k], rem // size) + 1):
            yield from rec(k + 1, rem - c * size, acc + (c,))

    yield from rec(0, weight, ())


def _above_target(profile: ColumnProfile, i: int) -> int:
    """I(beta'^i) = d - i - h(i), with h(d) = 0."""
    d = profile.d
    return 0 if i >= d else d - i - profile.entry[i]


def enumerate_beta_sequences(profile: ColumnProfile) -> list[BetaSequences]:
    """All beta / beta' sequences compatible with the path's column profile.

    Returns an empty list when a vertical step on x = 0 is longer than 1
    (those paths carry no degree-d curve).
    """
    d = profile.d
    alpha = profile.alpha
    exits = profile.exit
    zero = StepSequence.zero(d)
    if any(s != 1 for s in profile.steps[0]):
        return []

    belows: list[tuple[StepSequence, ...]] = []

    def below(i: int, chain: tuple[StepSequence, ...]):
        if i < 0:
            belows.append(chain)
            return
        pool = alpha[i + 1] + chain[0]
        for b in _sub_multisets(pool, exits[i]):
            if i == 0 and b.weight != len(b):
                continue  # ends on the left edge have weight 1
            below(i - 1, (b,) + chain)

    below(d - 1, (zero,))

    aboves: list[tuple[StepSequence, ...]] = []

    def above(i: int, chain: tuple[StepSequence, ...]):
        if i == d:
            aboves.append(chain)
            return
        pool = alpha[i] + chain[-1]
        for b in _sub_multisets(pool, _above_target(profile, i + 1)):
            above(i + 1, chain + (b,))

    above(0, (zero,))
    return [BetaSequences(b, bp) for b in belows for bp in aboves]


def strip_pools(profile: ColumnProfile, betas: BetaSequences):
    """Per strip i: (below pool, below matched, above pool, above matched)."""
    alpha = profile.alpha
    b, bp = betas.beta, betas.beta_prime
    for i in range(profile.d):
        yield alpha[i + 1] + b[i + 1], b[i], alpha[i] + bp[i], bp[i + 1]


def triangle_sizes(profile: ColumnProfile, betas: BetaSequences) -> StepSequence:
    """Vertical side lengths (= double areas) of all triangles, as one multiset."""
    total = StepSequence.zero(profile.d)
    for pool_b, bi, pool_a, bpi in strip_pools(profile, betas):
        total = total + (pool_b - bi) + (pool_a - bpi)
    return total


def count_subdivisions_and_multiplicity(profile: ColumnProfile) -> list[SubdivisionCount]:
    out = []
    for betas in enumerate_beta_sequences(profile):
        count = 1
        for pool_b, bi, pool_a, bpi in strip_pools(profile, betas):
            count *= pool_b.choose(bi) * pool_a.choose(bpi)
        out.append(SubdivisionCount(count, triangle_sizes(profile, betas).size_power(), betas))
    return out


def closed_form_multiplicity(path: LatticePath) -> int:
    """Sum of count * mult over all beta solutions (counts reducible curves too)."""
    return sum(c.count * c.mult for c in count_subdivisions_and_multiplicity(column_profile(path)))


# --- explicit subdivisions --------------------------------------------------


@dataclass(frozen=True)
class ColumnwiseSubdivision:
    d: int
    cells: tuple[LatticePolygon, ...]
    source_path: LatticePath | None = field(default=None, compare=False)

    def __post_init__(self):
        cells = tuple(self.cells)
        object.__setattr__(self, "cells", cells)
        for c in cells:
            for v in c.vertices:
                if v.x < 0 or v.y < 0 or v.x + v.y > self.d:
                    raise ValueError(f"cell {c} leaves the degree-{self.d} triangle")
        total = sum(double_area(c) for c in cells)
        if total != self.d * self.d:
            raise ValueError(f"cells cover double area {total}, expected {self.d * self.d}")

    @property
    def triangles(self) -> list[LatticePolygon]:
        return [c for c in self.cells if c.is_triangle]

    @property
    def parallelograms(self) -> list[LatticePolygon]:
        return [c for c in self.cells if not c.is_triangle]


def _column_steps(path: LatticePath) -> list[list[int]]:
    steps: list[list[int]] = [[] for _ in range(path.d + 1)]
    for p, q in path.steps():
        if p.x == q.x:
            steps[p.x].append(p.y - q.y)
    return steps


def _choices(segments: Sequence[int], weight: int, unit_only: bool = False):
    """Index sets of ``segments`` (ordered) summing to ``weight``."""
    n = len(segments)
    for r in range(n + 1):
        for chosen in combinations(range(n), r):
            picked = [segments[k] for k in chosen]
            if sum(picked) != weight:
                continue
            if unit_only and any(s != 1 for s in picked):
                continue
            yield frozenset(chosen), picked


def _below_cells(i: int, right: Sequence[int], chosen, y_right: int, y_left: int):
    cells = []
    for k, s in enumerate(right):
        top_r, bot_r = LatticePoint(i + 1, y_right), LatticePoint(i + 1, y_right - s)
        if k in chosen:
            cells.append(LatticePolygon.of((LatticePoint(i, y_left), top_r, bot_r, LatticePoint(i, y_left - s))))
            y_left -= s
        else:
            cells.append(LatticePolygon.of((LatticePoint(i, y_left), top_r, bot_r)))
        y_right -= s
    return cells


def _above_cells(i: int, left: Sequence[int], chosen, y_left: int, y_right: int):
    cells = []
    for k, s in enumerate(left):
        lo, hi = LatticePoint(i, y_left), LatticePoint(i, y_left + s)
        if k in chosen:
            cells.append(LatticePolygon.of((lo, hi, LatticePoint(i + 1, y_right + s), LatticePoint(i + 1, y_right))))
            y_right += s
        else:
            cells.append(LatticePolygon.of((lo, hi, LatticePoint(i + 1, y_right))))
        y_left += s
    return cells


def generate_subdivisions(path: LatticePath) -> list[ColumnwiseSubdivision]:
    """All column-wise subdivisions compatible with a column path.

    Built directly from ordered segment choices, without going through the
    beta multisets, so it can be checked against the binomial count.
    """
    profile = column_profile(path)
    d = path.d
    steps = _column_steps(path)
    entry, exits = profile.entry, profile.exit

    below_parts: list[list[LatticePolygon]] = []

    def below(i: int, incoming: list[int], cells: list[LatticePolygon]):
        if i < 0:
            below_parts.append(cells)
            return
        right = steps[i + 1] + incoming
        for chosen, picked in _choices(right, exits[i], unit_only=(i == 0)):
            new = _below_cells(i, right, chosen, entry[i + 1], exits[i])
            below(i - 1, picked, new + cells)

    above_parts: list[list[LatticePolygon]] = []

    def above(i: int, incoming: list[int], cells: list[LatticePolygon]):
        if i == d:
            above_parts.append(cells)
            return
        left = list(reversed(steps[i])) + incoming
        next_entry = entry[i + 1] if i + 1 < d else 0
        for chosen, picked in _choices(left, d - i - 1 - next_entry):
            new = _above_cells(i, left, chosen, exits[i], next_entry)
            above(i + 1, picked, cells + new)

    if any(s != 1 for s in steps[0]):
        return []
    below(d - 1, [], [])
    if not below_parts:
        return []
    above(0, [], [])
    return [
        ColumnwiseSubdivision(d, tuple(b + a), path)
        for b in below_parts
        for a in above_parts
    ]


def subdivision_multiplicity(s: ColumnwiseSubdivision) -> int:
    return prod(double_area(t) for t in s.triangles)


def genus(s: ColumnwiseSubdivision) -> int:
    """Cell corners strictly inside the triangle, minus the number of parallelograms."""
    d = s.d
    corners = {v for c in s.cells for v in c.vertices if v.x > 0 and v.y > 0 and v.x + v.y < d}
    return len(corners) - len(s.parallelograms)


def is_irreducible(s: ColumnwiseSubdivision) -> bool:
    return dual_curve_components(s.cells) == 1
