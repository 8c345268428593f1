from __future__ import annotations

from fractions import Fraction
from math import gcd

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from tropcurves.elliptic import (
    Codim1Case,
    CombinatorialType,
    LocalCycleData,
    codim1_case,
    mult_contracted_edge,
    mult_contracted_loop,
    mult_flat_cycle,
    mult_three_edge_cycle,
    side_determinants,
    stratum_dimension,
    stratum_weight_contracted_loop,
    stratum_weight_flat_cycle,
    vertex_multiplicity,
    wall_determinants,
    wall_determinants_from_matrices,
    wall_identity_holds,
)
from tropcurves.lattice import det2, double_area, exact_det, triangle

vec = st.tuples(st.integers(-10, 10), st.integers(-10, 10))
coprime = st.tuples(st.integers(1, 7), st.integers(1, 7)).filter(lambda t: gcd(*t) == 1)


class TestStrata:
    def test_top_dimension(self):
        assert stratum_dimension(CombinatorialType(4, 11, 1)) == 3 * 4 + 11

    def test_one_four_valent(self):
        t = CombinatorialType(4, 11, 1, (4,), 0)
        assert stratum_dimension(t) == 3 * 4 + 11 - 1
        assert codim1_case(t) is Codim1Case.A

    def test_five_valent_flat(self):
        t = CombinatorialType(3, 8, 1, (5,), 1)
        assert stratum_dimension(t) == 3 * 3 + 8 - 1
        assert codim1_case(t) is Codim1Case.C

    def test_rational_variant(self):
        assert stratum_dimension(CombinatorialType(3, 8, 0, (4,))) == 3 * 3 + 8 - 1 - 1

    @pytest.mark.parametrize(
        "vals,defi,case",
        [((4,), 0, "A"), ((4, 4), 1, "B"), ((5,), 1, "C"), ((4, 4, 4), 2, "D"), ((5, 4), 2, "E"), ((6,), 2, "F")],
    )
    def test_all_cases_are_codim_one(self, vals, defi, case):
        top = stratum_dimension(CombinatorialType(5, 14, 1))
        t = CombinatorialType(5, 14, 1, vals, defi)
        assert top - stratum_dimension(t) == 1
        assert codim1_case(t) is Codim1Case[case]

    def test_not_codim1(self):
        assert codim1_case(CombinatorialType(3, 8, 1)) is Codim1Case.NOT_CODIM1
        assert codim1_case(CombinatorialType(3, 8, 1, (4, 4), 0)) is Codim1Case.NOT_CODIM1

    @pytest.mark.parametrize(
        "kwargs",
        [dict(genus=0, deficiency=1), dict(genus=2), dict(deficiency=3), dict(excess_valences=(3,))],
    )
    def test_invalid_types(self, kwargs):
        base = dict(d=3, n=8, genus=1)
        base.update(kwargs)
        with pytest.raises(ValueError):
            CombinatorialType(**base)


class TestWeights:
    def test_flat_cycle(self):
        assert stratum_weight_flat_cycle(LocalCycleData((1, 0), (0, 1), 2, 1)) == 1
        assert stratum_weight_flat_cycle(LocalCycleData((1, 0), (0, 1), 1, 1)) == Fraction(1, 2)
        assert stratum_weight_flat_cycle(LocalCycleData((1, 0), (1, 3), 1, 1, True)) == 3

    def test_cycle_data_validation(self):
        with pytest.raises(ValueError):
            LocalCycleData((1, 0), (0, 1), 2, 2)
        with pytest.raises(ValueError):
            LocalCycleData((2, 0), (0, 1), 1, 2)

    def test_contracted_loop(self):
        assert stratum_weight_contracted_loop((1, 0), (0, 1)) == 0
        assert stratum_weight_contracted_loop((1, 0), (1, 2)) == Fraction(1, 2)
        assert stratum_weight_contracted_loop((1, 0), (0, 3)) == 1

    @given(vec, vec, st.booleans(), coprime)
    def test_weights_nonnegative(self, u, v, marked, nm):
        assume(det2(u, v) != 0 and gcd(*u) == 1)
        assert stratum_weight_contracted_loop(u, v) >= 0
        assert stratum_weight_flat_cycle(LocalCycleData(u, v, *nm, marked)) > 0


class TestMultiplicities:
    def test_contracted_loop(self):
        assert mult_contracted_loop(1, 5) == 0
        assert mult_contracted_loop(2, 4) == 2
        assert mult_contracted_loop(3, 1) == 1

    def test_contracted_edge(self):
        assert mult_contracted_edge((1, 0), (0, 1), 1) == 1
        assert mult_contracted_edge((1, 1), (-2, 1), 5) == 15
        assert mult_contracted_edge((1, 1), (2, 2), 5) == 0

    def test_flat_cycle(self):
        assert mult_flat_cycle(LocalCycleData((1, 0), (0, 1), 2, 1), (0, 1), 1) == 3
        assert mult_flat_cycle(LocalCycleData((1, 0), (0, 1), 1, 1), (0, 1), 7) == 7
        assert mult_flat_cycle(LocalCycleData((0, 1), (1, 0), 3, 2), (1, 0), 2) == 10

    def test_three_edge_cycle(self):
        assert mult_three_edge_cycle((1, 0), (0, 1), (-1, -1), 1) == 3
        assert mult_three_edge_cycle((1, 0), (0, 1), (-1, -1), 4) == 12
        assert mult_three_edge_cycle((1, 0), (1, 1), (0, 1), 1) == 3
        assert mult_three_edge_cycle((1, 0), (0, 1), (-1, -1), 0) == 0

    @given(vec, vec, vec)
    def test_three_edge_bracket_is_triangle_area(self, v1, v2, v3):
        # when the origin is strictly inside the triangle v1 v2 v3, the three
        # small triangles at the origin fill it
        d12, d23, d31 = det2(v1, v2), det2(v2, v3), det2(v3, v1)
        assume((d12 > 0 and d23 > 0 and d31 > 0) or (d12 < 0 and d23 < 0 and d31 < 0))
        big = double_area(triangle(v1, v2, v3))
        assert mult_three_edge_cycle(v1, v2, v3, 1) == big
        assert abs(exact_det([[1, 1, 1], [v1[0], v2[0], v3[0]], [v1[1], v2[1], v3[1]]])) == big

    def test_vertex_multiplicity(self):
        assert vertex_multiplicity((1, 0), (0, 1)) == 1
        assert vertex_multiplicity((2, 1), (-1, 1), (-1, -2)) == 3
        with pytest.raises(ValueError):
            vertex_multiplicity((1, 0), (0, 1), (1, 1))


class TestWall:
    def test_example(self):
        w = wall_determinants((1, 0), (0, 1), (1, 1), 1, 1)
        assert w.detA1 == w.detA2 == -4
        m = wall_determinants_from_matrices((1, 0), (0, 1), (1, 1), 1, 1)
        assert m["A1"] == -4

    def test_identity_example(self):
        assert wall_identity_holds((1, 0), (0, 1), (1, 1), 2, 1)

    def test_degenerate(self):
        assert wall_determinants((1, 0), (2, 0), (3, 0), 2, 3) == (0, 0, 0, 0)
        assert wall_identity_holds((1, 0), (2, 0), (3, 0), 2, 3)
        assert wall_determinants((1, 0), (2, 0), (1, 1), 2, 3) == (0, 0, 0, 0)

    def test_rejects_non_coprime(self):
        with pytest.raises(ValueError):
            wall_determinants((1, 0), (0, 1), (1, 1), 2, 4)

    @given(vec, vec, vec, coprime)
    def test_identity_random(self, u, v1, v2, nm):
        assert wall_identity_holds(u, v1, v2, *nm)

    @given(vec, vec, vec, coprime)
    def test_matrices_match_closed_forms(self, u, v1, v2, nm):
        m = wall_determinants_from_matrices(u, v1, v2, *nm)
        w = wall_determinants(u, v1, v2, *nm)
        s = side_determinants(u, v1, v2, *nm)
        assert (m["A1"], m["A2"], m["B3"], m["B4"]) == tuple(w)
        assert (m["A3"], m["A4"]) == tuple(s)
