"""Lambda-increasing lattice paths in the triangle of degree d.

The order is lambda(x, y) = x - eps*y with eps infinitesimal, realised exactly
by comparing x ascending and then y descending. Paths run from (0, d) to (d, 0).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd, prod
from typing import Iterable, Iterator, Sequence

from .lattice import LatticePoint, LatticePolygon, det2, dual_curve_components


class EmptyDomainError(ValueError):
    pass


def lambda_less(p: Sequence[int], q: Sequence[int]) -> bool:
    return p[0] < q[0] or (p[0] == q[0] and p[1] > q[1])


def in_triangle(p: Sequence[int], d: int) -> bool:
    return p[0] >= 0 and p[1] >= 0 and p[0] + p[1] <= d


def triangle_points(d: int) -> list[LatticePoint]:
    """All lattice points of the degree-d triangle, in lambda order."""
    return [LatticePoint(x, y) for x in range(d + 1) for y in range(d - x, -1, -1)]


@dataclass(frozen=True)
class StepSequence:
    """A finite multiset of positive step sizes.

    ``counts[k]`` is the number of entries of size ``k + 1``.
    """

    counts: tuple[int, ...]

    @classmethod
    def zero(cls, length: int) -> "StepSequence":
        return cls((0,) * length)

    @classmethod
    def from_sizes(cls, sizes: Iterable[int], length: int) -> "StepSequence":
        counts = [0] * length
        for s in sizes:
            if not 1 <= s <= length:
                raise ValueError(f"step size {s} outside 1..{length}")
            counts[s - 1] += 1
        return cls(tuple(counts))

    @property
    def weight(self) -> int:
        """I(alpha): the sum of the entries."""
        return sum((k + 1) * c for k, c in enumerate(self.counts))

    def __len__(self) -> int:
        return sum(self.counts)

    def __add__(self, other: "StepSequence") -> "StepSequence":
        return StepSequence(tuple(a + b for a, b in zip(self.counts, other.counts, strict=True)))

    def __sub__(self, other: "StepSequence") -> "StepSequence":
        diff = tuple(a - b for a, b in zip(self.counts, other.counts, strict=True))
        if min(diff, default=0) < 0:
            raise ValueError(f"{other} is not contained in {self}")
        return StepSequence(diff)

    def contains(self, other: "StepSequence") -> bool:
        return all(a >= b for a, b in zip(self.counts, other.counts, strict=True))

    def choose(self, other: "StepSequence") -> int:
        """Componentwise binomial product."""
        return prod(comb(a, b) for a, b in zip(self.counts, other.counts, strict=True))

    def size_power(self) -> int:
        """I^alpha = product of the entries."""
        return prod((k + 1) ** c for k, c in enumerate(self.counts))

    def half_square_excess(self) -> Fraction:
        """Sum of (k^2 - 1)/2 over the entries k."""
        return sum((Fraction((k + 1) ** 2 - 1, 2) * c for k, c in enumerate(self.counts)), Fraction(0))

    def sizes(self) -> list[int]:
        return [k + 1 for k, c in enumerate(self.counts) for _ in range(c)]

    def trimmed(self) -> tuple[int, ...]:
        """``counts`` without trailing zeros, e.g. (0, 1) for a single step of size 2."""
        body = list(self.counts)
        while body and body[-1] == 0:
            body.pop()
        return tuple(body)

    def __repr__(self) -> str:
        return f"StepSequence({self.trimmed()})"


@dataclass(frozen=True)
class LatticePath:
    d: int
    points: tuple[LatticePoint, ...]

    def __post_init__(self):
        if self.d < 1:
            raise EmptyDomainError("degree must be at least 1")
        pts = tuple(LatticePoint(int(p[0]), int(p[1])) for p in self.points)
        if not pts:
            raise ValueError("a path needs at least one point")
        for p in pts:
            if not in_triangle(p, self.d):
                raise ValueError(f"{p} lies outside the degree-{self.d} triangle")
        object.__setattr__(self, "points", pts)

    @classmethod
    def of(cls, d: int, points: Iterable[Sequence[int]]) -> "LatticePath":
        return cls(d, tuple(points))

    @property
    def n_steps(self) -> int:
        return len(self.points) - 1

    def steps(self) -> Iterator[tuple[LatticePoint, LatticePoint]]:
        return zip(self.points, self.points[1:])

    def __len__(self) -> int:
        return len(self.points)


def is_lambda_increasing(path: LatticePath) -> bool:
    pts = path.points
    if pts[0] != (0, path.d) or pts[-1] != (path.d, 0):
        return False
    return all(lambda_less(p, q) for p, q in path.steps())


def is_column_path(path: LatticePath) -> bool:
    """Lambda-increasing, and each step either moves one column right or goes down in its column."""
    if not is_lambda_increasing(path):
        return False
    return all(q.x - p.x in (0, 1) for p, q in path.steps())


def step_length(p: Sequence[int], q: Sequence[int]) -> int:
    return gcd(q[0] - p[0], q[1] - p[1])


def has_big_step(path: LatticePath) -> bool:
    return any(step_length(p, q) >= 2 for p, q in path.steps())


def enumerate_paths(d: int, n_steps: int | None = None) -> list[LatticePath]:
    """Column paths from (0, d) to (d, 0) with ``n_steps`` steps (default 3d - 1).

    Vertical steps on the left edge x = 0 have length 1, as ends of degree-d
    curves have weight 1. Output is in lexicographic order of the point lists.
    """
    if d < 1:
        raise EmptyDomainError("degree must be at least 1")
    target = 3 * d - 1 if n_steps is None else n_steps
    # lattice points lambda-after (x, y): everything in later columns plus the rest of this one
    after_column = [sum(d - c + 1 for c in range(x + 1, d + 1)) for x in range(d + 1)]

    def room(p: LatticePoint) -> int:
        return after_column[p.x] + p.y

    out: list[LatticePath] = []
    start = LatticePoint(0, d)
    stack: list[tuple[LatticePoint, ...]] = [(start,)]
    while stack:
        pts = stack.pop()
        last = pts[-1]
        used = len(pts) - 1
        if last == (d, 0):
            if used == target:
                out.append(LatticePath(d, pts))
            continue
        left = target - used
        if left < d - last.x or left > room(last):
            continue
        children: list[LatticePoint] = []
        if last.x == 0:
            if last.y > 0:
                children.append(LatticePoint(0, last.y - 1))
        else:
            children.extend(LatticePoint(last.x, y) for y in range(last.y))
        if last.x < d:
            children.extend(LatticePoint(last.x + 1, y) for y in range(d - last.x))
        for c in reversed(children):
            stack.append(pts + (c,))
    return out


@dataclass(frozen=True)
class ColumnProfile:
    """Column-by-column description of a column path.

    ``steps[i]`` lists the vertical steps on the line x = i from top to bottom,
    ``entry[i]`` is h(i), the height at which the path reaches x = i (its
    topmost point there). ``alpha[i]`` is the multiset of ``steps[i]``.
    """

    d: int
    steps: tuple[tuple[int, ...], ...]
    entry: tuple[int, ...]

    @property
    def alpha(self) -> tuple[StepSequence, ...]:
        return tuple(StepSequence.from_sizes(s, self.d) for s in self.steps)

    @property
    def exit(self) -> tuple[int, ...]:
        return tuple(h - sum(s) for h, s in zip(self.entry, self.steps))

    def h(self, i: int) -> int:
        return self.entry[i]


def column_profile(path: LatticePath) -> ColumnProfile:
    if not is_column_path(path):
        raise ValueError("column profiles exist only for column paths")
    d = path.d
    steps: list[list[int]] = [[] for _ in range(d + 1)]
    entry: list[int | None] = [None] * (d + 1)
    for p in path.points:
        if entry[p.x] is None:
            entry[p.x] = p.y
    for p, q in path.steps():
        if p.x == q.x:
            steps[p.x].append(p.y - q.y)
    return ColumnProfile(d, tuple(tuple(s) for s in steps), tuple(entry))


def profile_to_path(profile: ColumnProfile) -> LatticePath:
    pts: list[LatticePoint] = []
    for x, (h, col) in enumerate(zip(profile.entry, profile.steps)):
        y = h
        pts.append(LatticePoint(x, y))
        for s in col:
            y -= s
            pts.append(LatticePoint(x, y))
    return LatticePath(profile.d, tuple(pts))


# --- Mikhalkin's recursive multiplicity -------------------------------------


def _boundary_paths(d: int) -> tuple[tuple, tuple]:
    upper = tuple(LatticePoint(i, d - i) for i in range(d + 1))
    lower = tuple(LatticePoint(0, y) for y in range(d, -1, -1)) + tuple(
        LatticePoint(x, 0) for x in range(1, d + 1)
    )
    return upper, lower


def _first_turn(g: tuple, sign: int):
    for j in range(1, len(g) - 1):
        a, b, c = g[j - 1], g[j], g[j + 1]
        turn = det2((b[0] - a[0], b[1] - a[1]), (c[0] - b[0], c[1] - b[1]))
        if turn * sign > 0:
            return j, abs(turn)
    return None


@lru_cache(maxsize=None)
def _mu_side(g: tuple, sign: int, d: int) -> int:
    upper, lower = _boundary_paths(d)
    if g == (upper if sign > 0 else lower):
        return 1
    turn = _first_turn(g, sign)
    if turn is None:
        return 0
    j, weight = turn
    a, b, c = g[j - 1], g[j], g[j + 1]
    total = weight * _mu_side(g[:j] + g[j + 1:], sign, d)
    q = LatticePoint(a[0] + c[0] - b[0], a[1] + c[1] - b[1])
    if in_triangle(q, d):
        total += _mu_side(g[:j] + (q,) + g[j + 1:], sign, d)
    return total


def _side_completions(g: tuple, sign: int, d: int) -> list[tuple[LatticePolygon, ...]]:
    upper, lower = _boundary_paths(d)
    if g == (upper if sign > 0 else lower):
        return [()]
    turn = _first_turn(g, sign)
    if turn is None:
        return []
    j, _ = turn
    a, b, c = g[j - 1], g[j], g[j + 1]
    tri = LatticePolygon.of((a, b, c))
    out = [cells + (tri,) for cells in _side_completions(g[:j] + g[j + 1:], sign, d)]
    q = LatticePoint(a[0] + c[0] - b[0], a[1] + c[1] - b[1])
    if in_triangle(q, d):
        par = LatticePolygon.of((a, b, c, q))
        out += [cells + (par,) for cells in _side_completions(g[:j] + (q,) + g[j + 1:], sign, d)]
    return out


def mikhalkin_subdivisions(path: LatticePath) -> list[tuple[LatticePolygon, ...]]:
    """Subdivisions produced by Mikhalkin's recursion (upper side, then lower side)."""
    if not is_lambda_increasing(path):
        raise ValueError("path is not lambda-increasing")
    ups = _side_completions(path.points, 1, path.d)
    if not ups:
        return []
    downs = _side_completions(path.points, -1, path.d)
    return [u + w for u in ups for w in downs]


def mikhalkin_multiplicity(path: LatticePath, irreducible: bool = False) -> int:
    """Mikhalkin's path multiplicity mu_+ * mu_-.

    With ``irreducible=True`` only subdivisions whose dual curve is connected
    are counted; this needs the explicit subdivisions and is much slower.
    """
    if not is_lambda_increasing(path):
        raise ValueError("path is not lambda-increasing")
    if not irreducible:
        plus = _mu_side(path.points, 1, path.d)
        return plus and plus * _mu_side(path.points, -1, path.d)
    total = 0
    for cells in mikhalkin_subdivisions(path):
        if dual_curve_components(cells) == 1:
            total += prod(_tri_double_area(c) for c in cells if c.is_triangle)
    return total


def _tri_double_area(t: LatticePolygon) -> int:
    a, b, c = t.vertices
    return abs(det2((b.x - a.x, b.y - a.y), (c.x - a.x, c.y - a.y)))
