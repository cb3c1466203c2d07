"""Multigraph structure and pinned values for the enumeration oracles."""

import pytest
from hypothesis import given, settings, strategies as st

from ehrhil.graphs import (
    Graph,
    chromatic_bf,
    complete_graph,
    cycle_basis,
    cycle_graph,
    incidence_matrix,
    int_flow_bf,
    int_tension_bf,
    mod_flow_bf,
    mod_tension_bf,
    path_graph,
)

K2 = complete_graph(2)
K3 = complete_graph(3)
K4 = complete_graph(4)
C3 = cycle_graph(3)
C4 = cycle_graph(4)
P3 = path_graph(3)
DIGON = Graph((0, 1), ((0, 1), (0, 1)))
THETA = Graph((0, 1), ((0, 1), (0, 1), (0, 1)))
LOOP = Graph((0,), ((0, 0),))
K3_PENDANT = Graph((0, 1, 2, 3), ((0, 1), (1, 2), (2, 0), (2, 3)))
EDGELESS2 = Graph((0, 1), ())

SUITE = [K2, K3, K4, P3, C3, C4, DIGON, THETA, K3_PENDANT, LOOP]
LOOPLESS = [g for g in SUITE if not g.has_loop()]


@st.composite
def graphs(draw):
    n = draw(st.integers(1, 4))
    m = draw(st.integers(0, 5))
    edges = tuple(
        (draw(st.integers(0, n - 1)), draw(st.integers(0, n - 1)))
        for _ in range(m))
    return Graph(tuple(range(n)), edges)


class TestStructure:
    def test_unknown_vertex_rejected(self):
        with pytest.raises(ValueError):
            Graph((0,), ((0, 1),))

    def test_duplicate_vertex_rejected(self):
        with pytest.raises(ValueError):
            Graph((0, 0), ())

    def test_incidence_k3(self):
        assert incidence_matrix(K3) == (
            (-1, -1, 0),
            (1, 0, -1),
            (0, 1, 1),
        )

    def test_incidence_loop_column_zero(self):
        assert incidence_matrix(LOOP) == ((0,),)

    def test_components(self):
        g = Graph((0, 1, 2, 3), ((0, 1), (2, 2)))
        assert set(g.components()) == {frozenset({0, 1}), frozenset({2}),
                                       frozenset({3})}

    def test_cyclomatic_numbers(self):
        assert K4.cyclomatic_number() == 3
        assert C3.cyclomatic_number() == 1
        assert P3.cyclomatic_number() == 0
        assert DIGON.cyclomatic_number() == 1
        assert THETA.cyclomatic_number() == 2
        assert LOOP.cyclomatic_number() == 1

    def test_tension_rank(self):
        assert K4.tension_rank() == 3
        assert Graph((0, 1, 2, 3), ((0, 1), (2, 3))).tension_rank() == 2

    def test_reoriented(self):
        assert K2.reoriented([0]).edges == ((1, 0),)
        assert K2.reoriented([]).edges == K2.edges


class TestCycleBasis:
    def test_tree_has_empty_basis(self):
        assert cycle_basis(P3) == ()

    def test_c3(self):
        assert cycle_basis(C3) == ((1, 1, 1),)

    def test_digon(self):
        assert cycle_basis(DIGON) == ((-1, 1),)

    def test_loop_unit_vector(self):
        assert cycle_basis(LOOP) == ((1,),)

    @settings(max_examples=80, deadline=None)
    @given(graphs())
    def test_orthogonal_to_incidence_rows(self, g):
        basis = cycle_basis(g)
        assert len(basis) == g.cyclomatic_number()
        for vec in basis:
            assert all(x in (-1, 0, 1) for x in vec)
            for row in incidence_matrix(g):
                assert sum(a * c for a, c in zip(row, vec)) == 0


class TestChromatic:
    def test_k3(self):
        assert chromatic_bf(K3, 3) == 6
        assert [chromatic_bf(K3, k) for k in (1, 2, 3, 4)] == [0, 0, 6, 24]

    def test_loop_kills(self):
        assert chromatic_bf(LOOP, 5) == 0

    def test_edgeless(self):
        assert chromatic_bf(EDGELESS2, 3) == 9

    def test_parallel_edges_as_one(self):
        assert chromatic_bf(DIGON, 4) == chromatic_bf(K2, 4) == 12


class TestFlows:
    def test_int_flow_c3(self):
        assert int_flow_bf(C3, 3) == 4
        assert [int_flow_bf(C3, k) for k in (1, 2, 3, 4, 5)] == [0, 2, 4, 6, 8]

    def test_bridge_kills_flows(self):
        for k in (2, 3):
            assert int_flow_bf(P3, k) == 0
            assert int_flow_bf(K3_PENDANT, k) == 0
            assert mod_flow_bf(P3, k) == 0
            assert mod_flow_bf(K3_PENDANT, k) == 0

    def test_edgeless_is_one(self):
        assert int_flow_bf(EDGELESS2, 3) == 1
        assert mod_flow_bf(EDGELESS2, 3) == 1

    def test_mod_flow_c3(self):
        assert mod_flow_bf(C3, 5) == 4

    def test_mod_flow_k4(self):
        assert [mod_flow_bf(K4, k) for k in (2, 3, 4, 5)] == [0, 0, 6, 24]

    def test_loop_factor(self):
        looped = Graph((0, 1, 2), ((0, 1), (1, 2), (2, 0), (1, 1)))
        for k in (2, 3, 4):
            assert int_flow_bf(looped, k) == 2 * (k - 1) * int_flow_bf(C3, k)
            assert mod_flow_bf(looped, k) == (k - 1) * mod_flow_bf(C3, k)


class TestTensions:
    def test_int_tension_k2(self):
        assert int_tension_bf(K2, 3) == 4
        assert [int_tension_bf(K2, k) for k in (1, 2, 3)] == [0, 2, 4]

    def test_loop_kills_tensions(self):
        for k in (2, 5):
            assert int_tension_bf(LOOP, k) == 0
            assert mod_tension_bf(LOOP, k) == 0

    def test_int_tension_c3_small(self):
        # +-1 values on a triangle cannot sum to zero
        assert int_tension_bf(C3, 2) == 0

    def test_mod_tension_k2(self):
        assert mod_tension_bf(K2, 4) == 3
        assert [mod_tension_bf(K2, k) for k in (1, 2, 3, 4, 5, 6)] == \
            [0, 1, 2, 3, 4, 5]

    def test_mod_tension_k3(self):
        assert mod_tension_bf(K3, 3) == 2

    def test_mod_tension_divides_chromatic(self):
        for g in LOOPLESS:
            c = len(g.components())
            for k in (1, 2, 3, 4):
                assert chromatic_bf(g, k) == k ** c * mod_tension_bf(g, k)


class TestOracleHygiene:
    def test_k_must_be_positive(self):
        with pytest.raises(ValueError):
            chromatic_bf(K2, 0)
        with pytest.raises(ValueError):
            int_flow_bf(K2, -1)

    def test_state_budget(self):
        fat = Graph((0, 1), (((0, 1)),) * 40)
        with pytest.raises(ValueError, match="enumeration space"):
            int_flow_bf(fat, 2)

    @settings(max_examples=40, deadline=None)
    @given(graphs(), st.integers(2, 3), st.data())
    def test_orientation_invariance(self, g, k, data):
        flips = data.draw(st.sets(st.integers(0, max(len(g.edges) - 1, 0))))
        h = g.reoriented(flips)
        assert chromatic_bf(h, k) == chromatic_bf(g, k)
        assert int_flow_bf(h, k) == int_flow_bf(g, k)
        assert mod_flow_bf(h, k) == mod_flow_bf(g, k)
        assert int_tension_bf(h, k) == int_tension_bf(g, k)
        assert mod_tension_bf(h, k) == mod_tension_bf(g, k)
