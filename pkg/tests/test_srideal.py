"""Abstract complexes, the two Hilbert routes, and f-vector realization."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from ehrhil.complexes import PolytopalComplex, RelativeComplex
from ehrhil.polytope import LatticePolytope
from ehrhil.srideal import (
    AbstractComplex,
    RelativeSRIdeal,
    comb,
    hilbert_by_enumeration,
    hilbert_from_f,
    minimal_nonfaces,
    realize_polynomial,
)

FULL = AbstractComplex.from_maximal("abc", ["abc"])
BOUNDARY = AbstractComplex.from_maximal("abc", ["ab", "bc", "ac"])
TWO_EDGES = AbstractComplex.from_maximal("abcd", ["ab", "cd"])


class TestAbstractComplex:
    def test_closure_enforced(self):
        with pytest.raises(ValueError):
            AbstractComplex("ab", [frozenset("ab")])

    def test_nonempty_needs_empty_face(self):
        with pytest.raises(ValueError):
            AbstractComplex("a", [frozenset("a"), frozenset()] [:1])

    def test_empty_and_void_differ(self):
        empty = AbstractComplex("", [])
        void = AbstractComplex("", [frozenset()])
        assert empty != void
        assert empty.f_vector() == () and void.f_vector() == ()

    def test_from_maximal(self):
        assert len(FULL.faces) == 8
        assert FULL.f_vector() == (3, 3, 1)
        assert BOUNDARY.f_vector() == (3, 3)

    def test_comb_of_triangle(self):
        tri = realize_polynomial((0, 0, 1)).pulled_pair()[0]
        assert comb(tri).f_vector() == (3, 3, 1)


class TestMinimalNonfaces:
    def test_full_simplex(self):
        assert minimal_nonfaces(FULL) == []

    def test_triangle_boundary(self):
        assert minimal_nonfaces(BOUNDARY) == [frozenset("abc")]

    def test_two_disjoint_edges(self):
        assert sorted(map(sorted, minimal_nonfaces(TWO_EDGES))) == [
            ["a", "c"], ["a", "d"], ["b", "c"], ["b", "d"]]


class TestHilbertFromF:
    def test_constant(self):
        assert all(hilbert_from_f((1,), k) == 1 for k in range(1, 6))

    def test_closed_triangle(self):
        for k in range(1, 7):
            assert hilbert_from_f((3, 3, 1), k) == math.comb(k + 2, 2)

    def test_chromatic_k3_vector(self):
        assert hilbert_from_f((0, 0, 6, 6), 3) == 6
        assert hilbert_from_f((0, 0, 6, 6), 4) == 24

    def test_k0_is_alternating_sum(self):
        assert hilbert_from_f((0, 0, 6, 6), 0) == 0
        assert hilbert_from_f((3, 3, 1), 0) == 1
        assert hilbert_from_f((), 0) == 0

    def test_rejects_bad_coefficients(self):
        with pytest.raises(ValueError):
            hilbert_from_f((-1, 1), 2)
        with pytest.raises(ValueError):
            hilbert_from_f((0.5,), 2)
        with pytest.raises(ValueError):
            hilbert_from_f((1,), -1)


class TestHilbertByEnumeration:
    def test_single_vertex(self):
        ideal = RelativeSRIdeal(AbstractComplex.from_maximal("a", ["a"]),
                                AbstractComplex("a", [frozenset()]))
        assert hilbert_by_enumeration(ideal, 5) == 1

    def test_open_edge(self):
        edge = AbstractComplex.from_maximal("ab", ["ab"])
        ends = AbstractComplex.from_maximal("ab", ["a", "b"])
        ideal = RelativeSRIdeal(edge, ends)
        assert hilbert_by_enumeration(ideal, 3) == 2
        assert [hilbert_by_enumeration(ideal, k) for k in range(5)] == \
            [0, 0, 1, 2, 3]

    def test_sub_equal_complex(self):
        ideal = RelativeSRIdeal(FULL, FULL)
        assert all(hilbert_by_enumeration(ideal, k) == 0 for k in range(1, 5))

    def test_subcomplex_required(self):
        with pytest.raises(ValueError):
            RelativeSRIdeal(BOUNDARY, FULL)

    def test_degree_zero_counts_empty_support(self):
        edge = AbstractComplex.from_maximal("ab", ["ab"])
        ends = AbstractComplex.from_maximal("ab", ["a", "b"])
        assert hilbert_by_enumeration(RelativeSRIdeal(edge, ends), 0) == 0
        nothing_removed = AbstractComplex("ab", [])
        assert hilbert_by_enumeration(
            RelativeSRIdeal(edge, nothing_removed), 0) == 1


class TestFormulaAgainstEnumeration:
    def cases(self):
        square = LatticePolytope([(0, 0), (1, 0), (0, 1), (1, 1)])
        cx = PolytopalComplex.generated_by([square])
        half = RelativeComplex(cx, cx.faces_in_hyperplanes(
            [((1, 0), 0), ((0, 1), 0)]))
        open_sq = RelativeComplex(cx, cx.faces_in_hyperplanes(
            [((1, 0), 0), ((1, 0), 1), ((0, 1), 0), ((0, 1), 1)]))
        return [half, open_sq, realize_polynomial((1, 2, 1))]

    def test_three_routes_agree(self):
        for rel in self.cases():
            delta, gamma = rel.pulled_pair(require_unimodular=True)
            ideal = RelativeSRIdeal(comb(delta), comb(gamma))
            f = rel.pulled_f_vector()
            for k in range(1, 5):
                formula = hilbert_from_f(f, k)
                assert formula == hilbert_by_enumeration(ideal, k)
                assert formula == rel.count_points(k)


class TestRealizePolynomial:
    def test_open_segment(self):
        rel = realize_polynomial((0, 1))
        assert [rel.count_points(k) for k in (1, 2, 3, 4)] == [0, 1, 2, 3]

    def test_chromatic_k3_realization(self):
        rel = realize_polynomial((0, 0, 6, 6))
        assert rel.count_points(4) == 24

    def test_rejects_negative_and_fractional(self):
        with pytest.raises(ValueError, match="not realizable"):
            realize_polynomial((-1, 1))
        with pytest.raises(ValueError, match="not realizable"):
            realize_polynomial((1.5,))

    def test_zero_vector(self):
        rel = realize_polynomial(())
        assert rel.count_points(3) == 0
        assert rel.pulled_f_vector() == ()

    def test_points_only(self):
        rel = realize_polynomial((3,))
        assert all(rel.count_points(k) == 3 for k in (1, 2, 5))

    def test_cells_are_disjoint_and_valid(self):
        rel = realize_polynomial((1, 1, 2))
        rel.complex.validate()
        assert len(rel.complex.maximal_cells) == 4

    @settings(max_examples=25, deadline=None)
    @given(st.lists(st.integers(0, 4), max_size=4).filter(
        lambda f: sum(f) <= 8))
    def test_round_trip(self, f):
        rel = realize_polynomial(f)
        expect = tuple(f)
        while expect and expect[-1] == 0:
            expect = expect[:-1]
        assert rel.pulled_f_vector() == expect
        for k in (1, 2, 3):
            assert rel.count_points(k) == hilbert_from_f(expect, k)
