"""Local formulas for elliptic tropical curves with fixed j-invariant.

Stratum dimensions and weights, the four ev x j multiplicity formulas, and the
determinant identity that makes the count independent of the point
configuration when crossing a codimension-one wall.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import NamedTuple, Sequence

from .lattice import Direction, det2, exact_det


@dataclass(frozen=True)
class CombinatorialType:
    d: int
    n: int
    genus: int
    excess_valences: tuple[int, ...] = ()
    deficiency: int = 0

    def __post_init__(self):
        object.__setattr__(self, "excess_valences", tuple(sorted(self.excess_valences)))
        if self.d < 1 or self.n < 0:
            raise ValueError("need d >= 1 and n >= 0")
        if self.genus not in (0, 1):
            raise ValueError("genus must be 0 or 1")
        if self.deficiency not in (0, 1, 2):
            raise ValueError("deficiency must be 0, 1 or 2")
        if self.deficiency and self.genus != 1:
            raise ValueError("only genus-1 types have positive deficiency")
        if any(v < 4 for v in self.excess_valences):
            raise ValueError("excess valences must be at least 4")


@dataclass(frozen=True)
class LocalCycleData:
    """Flat cycle germ: two edges of weights n and m along the primitive direction u."""

    u: Direction
    v: Direction
    w_n: int
    w_m: int
    marked_point_on_cycle: bool = False

    def __post_init__(self):
        object.__setattr__(self, "u", Direction(*self.u))
        object.__setattr__(self, "v", Direction(*self.v))
        if self.w_n < 1 or self.w_m < 1:
            raise ValueError("weights must be positive")
        if gcd(self.w_n, self.w_m) != 1:
            raise ValueError(f"weights {self.w_n}, {self.w_m} are not coprime")
        if not self.u.is_primitive():
            raise ValueError(f"{self.u} is not primitive")


def stratum_dimension(t: CombinatorialType) -> int:
    excess = sum(v - 3 for v in t.excess_valences)
    return 3 * t.d + t.n + t.genus - 1 - excess + t.deficiency


class Codim1Case(enum.Enum):
    A = "one 4-valent vertex, no deficiency"
    B = "flat cycle, two 4-valent vertices"
    C = "flat cycle, one 5-valent vertex"
    D = "contracted cycle, three 4-valent vertices"
    E = "contracted cycle, one 5-valent and one 4-valent vertex"
    F = "contracted cycle, one 6-valent vertex"
    NOT_CODIM1 = "not of codimension one"


_CASES = {
    (0, (4,)): Codim1Case.A,
    (1, (4, 4)): Codim1Case.B,
    (1, (5,)): Codim1Case.C,
    (2, (4, 4, 4)): Codim1Case.D,
    (2, (4, 5)): Codim1Case.E,
    (2, (6,)): Codim1Case.F,
}


def codim1_case(t: CombinatorialType) -> Codim1Case:
    if t.genus != 1 or stratum_dimension(t) != 3 * t.d + t.n - 1:
        return Codim1Case.NOT_CODIM1
    return _CASES.get((t.deficiency, t.excess_valences), Codim1Case.NOT_CODIM1)


# --- weights and multiplicities ---------------------------------------------


def stratum_weight_flat_cycle(c: LocalCycleData) -> Fraction:
    w = Fraction(abs(det2(c.u, c.v)))
    if c.w_n == c.w_m and not c.marked_point_on_cycle:
        return w / 2  # the two edges may be swapped
    return w


def stratum_weight_contracted_loop(u: Sequence[int], v: Sequence[int]) -> Fraction:
    return Fraction(abs(det2(u, v)) - 1, 2)


def mult_contracted_loop(mult_V: int, mult_Cprime: int) -> Fraction:
    return Fraction(mult_V - 1, 2) * mult_Cprime


def mult_contracted_edge(u: Sequence[int], v: Sequence[int], mult_Cprime: int) -> int:
    return abs(det2(u, v)) * mult_Cprime


def mult_flat_cycle(c: LocalCycleData, v1: Sequence[int], mult_Cprime: int) -> int:
    """Multiplicity with a flat cycle; ``v1`` is an edge leaving the cycle."""
    det = abs(det2(c.u, v1))
    if c.w_n != c.w_m:
        return (c.w_n + c.w_m) * det * mult_Cprime
    return det * mult_Cprime


def mult_three_edge_cycle(v1: Sequence[int], v2: Sequence[int], v3: Sequence[int], mult_Cprime: int) -> int:
    bracket = abs(det2(v1, v2)) + abs(det2(v1, v3)) + abs(det2(v2, v3))
    return bracket * mult_Cprime


def vertex_multiplicity(*directions: Sequence[int]) -> int:
    """|det| of two edge directions at a 3-valent vertex.

    Given all three (balanced) directions, checks that every pair gives the
    same value.
    """
    if len(directions) not in (2, 3):
        raise ValueError("pass two or three directions")
    m = abs(det2(directions[0], directions[1]))
    if len(directions) == 3:
        a, b, c = directions
        if (a[0] + b[0] + c[0], a[1] + b[1] + c[1]) != (0, 0):
            raise ValueError("directions are not balanced")
        assert abs(det2(a, c)) == m and abs(det2(b, c)) == m
    return m


# --- the wall-crossing identity ---------------------------------------------


class WallDeterminants(NamedTuple):
    detA1: int
    detA2: int
    detB3: int
    detB4: int


class SideDeterminants(NamedTuple):
    detA3: int
    detA4: int


def _wall_inputs(u, v1, v2, n, m):
    if n < 1 or m < 1 or gcd(n, m) != 1:
        raise ValueError(f"weights {n}, {m} must be positive and coprime")
    return det2(u, v1), det2(u, v2), det2(v1, v2)


def wall_determinants(u, v1, v2, n: int, m: int) -> WallDeterminants:
    a, b, c = _wall_inputs(u, v1, v2, n, m)
    da = -n * (n + m) ** 2 * a * b
    db3 = -a * b * n * ((n * n + n * m) * (a + b) + n * c)
    db4 = a * b * n * ((m * m + n * m) * (a + b) - n * c)
    return WallDeterminants(da, da, db3, db4)


def side_determinants(u, v1, v2, n: int, m: int) -> SideDeterminants:
    a, b, c = _wall_inputs(u, v1, v2, n, m)
    return SideDeterminants(
        a * b * n * n * ((n * n + n * m) * (a + b) + n * c),
        -a * b * n * n * ((m * m + n * m) * (a + b) - n * c),
    )


def wall_identity_holds(u, v1, v2, n: int, m: int) -> bool:
    w = wall_determinants(u, v1, v2, n, m)
    return det2(u, v2) * w.detA1 + det2(u, v1) * w.detA2 - w.detB3 + w.detB4 == 0


def _block(rows: Sequence[Sequence]) -> list[list[int]]:
    """Assemble a matrix from block rows.

    A block row is a list of 2x2 identities ("E"), 2x2 zeros ("Z"), vectors
    (2-tuples) and 0; a plain list of ints is a scalar row.
    """
    out: list[list[int]] = []
    for row in rows:
        if all(isinstance(x, int) for x in row):
            out.append(list(row))
            continue
        top: list[int] = []
        bot: list[int] = []
        for blk in row:
            if blk == "E":
                top += [1, 0]
                bot += [0, 1]
            elif blk == "Z":
                top += [0, 0]
                bot += [0, 0]
            elif blk == 0:
                top.append(0)
                bot.append(0)
            else:
                top.append(blk[0])
                bot.append(blk[1])
        out += [top, bot]
    return out


def wall_matrices(u, v1, v2, n: int, m: int) -> dict[str, list[list[int]]]:
    """The six integer matrices whose determinants enter the wall identity."""
    _wall_inputs(u, v1, v2, n, m)

    def s(k, x):
        return (k * x[0], k * x[1])

    def add(x, y):
        return (x[0] + y[0], x[1] + y[1])

    nu, mu = s(n, u), s(m, u)
    nmu, nm_u = s(n * m, u), s(n + m, u)
    a, b, c = det2(u, v1), det2(u, v2), det2(v1, v2)
    M1 = -c + n * det2(v1, u) - n * b
    M2 = -n * b
    M3 = n * a
    M1p = -c - m * a - m * b
    neg_v1_nu = add(s(-1, v1), s(-1, nu))
    neg_v1_mu = add(s(-1, v1), s(-1, mu))
    v2_nu = add(v2, s(-1, nu))
    v2_mu = add(v2, s(-1, mu))
    Z = "Z"
    mats = {
        "A1": [["E", 0, 0, nu, 0, nm_u], ["E", v1, 0, 0, 0, 0], ["E", 0, v2, 0, nmu, nm_u],
               [0, 0, 0, 0, 0, m + n, 0]],
        "A2": [["E", 0, 0, nu, 0, 0], ["E", v1, 0, 0, 0, 0], ["E", 0, v2, 0, nmu, nm_u],
               [0, 0, 0, 0, 0, m + n, 0]],
        "B3": [["E", 0, 0, nu, 0, 0, 0, 0], ["E", v1, 0, 0, 0, 0, 0, 0], ["E", 0, v2, nu, nu, 0, 0, 0],
               [Z, 0, 0, nu, nu, s(-m, u), add(v1, nu), add(s(-1, v2), nu)],
               [0, 0, 0, 0, 1, 1, 1, 1, 1]],
        "B4": [["E", 0, 0, nu, 0, 0, neg_v1_mu, 0], ["E", v1, 0, 0, 0, 0, 0, 0],
               ["E", 0, v2, nu, nu, 0, neg_v1_mu, v2_mu],
               [Z, 0, 0, nu, nu, s(-m, u), neg_v1_mu, v2_mu],
               [0, 0, 0, 0, 1, 1, 1, 1, 1]],
        "A3": [["E", 0, 0, nu, 0, 0], ["E", v1, 0, 0, 0, 0],
               ["E", 0, v2, 0, nmu, add(s(-M2, neg_v1_nu), s(M3, v2_nu))],
               [0, 0, 0, 0, 0, m + n, M1 - M2 + M3]],
        "A4": [["E", 0, 0, nu, 0, s(M2, neg_v1_mu)], ["E", v1, 0, 0, 0, 0], ["E", 0, v2, 0, nmu, 0],
               [0, 0, 0, 0, 0, m + n, M1p + M2 - M3]],
    }
    return {k: _block(v) for k, v in mats.items()}


def wall_determinants_from_matrices(u, v1, v2, n: int, m: int) -> dict[str, int]:
    return {k: exact_det(mat) for k, mat in wall_matrices(u, v1, v2, n, m).items()}
