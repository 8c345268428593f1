"""Exact lattice geometry: points, directions, triangles and parallelograms.

Everything here works on Python integers and ``Fraction``; nothing touches
floating point.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple, Sequence


class LatticePoint(NamedTuple):
    x: int
    y: int


class Direction(NamedTuple):
    dx: int
    dy: int

    @property
    def weight(self) -> int:
        """Lattice length: the positive integer ``w`` with ``self = w * primitive``."""
        return gcd(self.dx, self.dy)

    def is_primitive(self) -> bool:
        return self.weight == 1

    def primitive(self) -> "Direction":
        w = self.weight
        if w == 0:
            raise ValueError("the zero vector has no primitive direction")
        return Direction(self.dx // w, self.dy // w)


def det2(u: Sequence[int], v: Sequence[int]) -> int:
    """Signed determinant ``u.x * v.y - u.y * v.x``."""
    return u[0] * v[1] - u[1] * v[0]


def _sub(p: Sequence[int], q: Sequence[int]) -> Direction:
    return Direction(p[0] - q[0], p[1] - q[1])


class PolygonKind(enum.Enum):
    TRIANGLE = "triangle"
    PARALLELOGRAM = "parallelogram"


class DegeneratePolygon(ValueError):
    pass


@dataclass(frozen=True)
class LatticePolygon:
    """A lattice triangle or parallelogram.

    Build instances with :meth:`of` (or :func:`triangle` / :func:`parallelogram`),
    which orients the vertices counterclockwise and rotates the lexicographically
    smallest vertex to the front, so two polygons are equal iff they have the
    same vertex set.
    """

    vertices: tuple[LatticePoint, ...]
    kind: PolygonKind

    @classmethod
    def of(cls, points: Iterable[Sequence[int]]) -> "LatticePolygon":
        pts = [LatticePoint(int(p[0]), int(p[1])) for p in points]
        if len(pts) not in (3, 4):
            raise DegeneratePolygon(f"need 3 or 4 vertices, got {len(pts)}")
        if len(set(pts)) != len(pts):
            raise DegeneratePolygon(f"repeated vertex in {pts}")
        if _signed_double_area(pts) < 0:
            pts.reverse()
        n = len(pts)
        for i in range(n):
            a, b, c = pts[i], pts[(i + 1) % n], pts[(i + 2) % n]
            if det2(_sub(b, a), _sub(c, b)) <= 0:
                raise DegeneratePolygon(f"vertices {pts} are not strictly convex")
        if n == 4:
            if _sub(pts[1], pts[0]) != _sub(pts[2], pts[3]):
                raise DegeneratePolygon(f"{pts} is not a parallelogram")
            kind = PolygonKind.PARALLELOGRAM
        else:
            kind = PolygonKind.TRIANGLE
        k = pts.index(min(pts))
        return cls(tuple(pts[k:] + pts[:k]), kind)

    @property
    def is_triangle(self) -> bool:
        return self.kind is PolygonKind.TRIANGLE

    def edges(self) -> list[tuple[LatticePoint, LatticePoint]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def __repr__(self) -> str:
        pts = ", ".join(f"({p.x},{p.y})" for p in self.vertices)
        return f"{self.kind.value}[{pts}]"


def triangle(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> LatticePolygon:
    return LatticePolygon.of((a, b, c))


def parallelogram(a, b, c, d) -> LatticePolygon:
    return LatticePolygon.of((a, b, c, d))


def _signed_double_area(pts: Sequence[Sequence[int]]) -> int:
    n = len(pts)
    return sum(det2(pts[i], pts[(i + 1) % n]) for i in range(n))


def double_area(p: LatticePolygon) -> int:
    return _signed_double_area(p.vertices)


def area(p: LatticePolygon) -> Fraction:
    return Fraction(double_area(p), 2)


def boundary_nonvertex_count(p: LatticePolygon) -> int:
    return sum(_sub(b, a).weight - 1 for a, b in p.edges())


def interior_count(p: LatticePolygon) -> int:
    # Pick: 2A = 2i + B - 2, with B counting every boundary lattice point.
    boundary = boundary_nonvertex_count(p) + len(p.vertices)
    twice = double_area(p) - boundary + 2
    assert twice % 2 == 0 and twice >= 0
    return twice // 2


def interior_count_scan(p: LatticePolygon) -> int:
    """Interior lattice points found by scanning the bounding box; O(area)."""
    xs = [v.x for v in p.vertices]
    ys = [v.y for v in p.vertices]
    edges = p.edges()
    count = 0
    for x in range(min(xs) + 1, max(xs)):
        for y in range(min(ys) + 1, max(ys)):
            if all(det2(_sub(b, a), (x - a.x, y - a.y)) > 0 for a, b in edges):
                count += 1
    return count


def pick_constant(p: LatticePolygon) -> Fraction:
    return Fraction(1, 2) if p.is_triangle else Fraction(1)


def pick_identity_holds(p: LatticePolygon) -> bool:
    """Check Area = i + b/2 + c (c = 1/2 for triangles, 1 for parallelograms).

    The interior count comes from a direct scan, so this is a real check of
    Pick's theorem rather than a restatement of :func:`interior_count`.
    """
    rhs = interior_count_scan(p) + Fraction(boundary_nonvertex_count(p), 2) + pick_constant(p)
    return area(p) == rhs


def exact_det(rows: Sequence[Sequence]) -> int | Fraction:
    """Determinant by fraction-free Bareiss elimination.

    Integer input gives an integer result; ``Fraction`` entries are accepted too.
    """
    m = [list(r) for r in rows]
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("matrix must be square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = m[i][j] * pivot - m[i][k] * m[k][j]
                m[i][j] = num // prev if isinstance(num, int) and isinstance(prev, int) else num / prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def dual_curve_components(cells: Sequence[LatticePolygon]) -> int:
    """Number of connected components of the tropical curve dual to ``cells``.

    Only valid for subdivisions into triangles and parallelograms (simple
    curves). Triangles are vertices of the curve. Each triangle edge is followed
    straight through any chain of parallelograms, which are crossings of two
    edges, until it reaches another triangle or the boundary.
    """
    owners: dict[frozenset, list[int]] = {}
    for idx, cell in enumerate(cells):
        for a, b in cell.edges():
            owners.setdefault(frozenset((a, b)), []).append(idx)

    parent = list(range(len(cells)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for idx, cell in enumerate(cells):
        if not cell.is_triangle:
            continue
        for a, b in cell.edges():
            cur, edge = idx, frozenset((a, b))
            while True:
                nxt = [j for j in owners[edge] if j != cur]
                if not nxt:
                    break  # an end of the curve
                j = nxt[0]
                if cells[j].is_triangle:
                    parent[find(idx)] = find(j)
                    break
                es = [frozenset(e) for e in cells[j].edges()]
                edge = es[(es.index(edge) + 2) % 4]
                cur = j
    return len({find(i) for i, c in enumerate(cells) if c.is_triangle})
