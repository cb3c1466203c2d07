"""Relative polytopal complexes that count colorings, flows, and tensions.

Each of the five counting functions of a graph is realized as the lattice
point count of a relative complex:

  chromatic    cells of the hyperplane arrangement x_head = x_tail inside
               the unit cube over the vertices, minus those hyperplanes and
               the upper cube facets (a half-open cube decomposition)
  flow         unit boxes of the flow space slice of (-1,1)^E, minus the
               outer cube boundary and the coordinate hyperplanes
  modflow      slices {Af = b} of the unit cube over the edges, minus the
               cube boundary
  tension      as flow, with the cycle space in place of the flow space
  modtension   as modflow, with cycle sums in place of vertex balances

Candidate cells are kept only when their open part is nonempty (exact LP),
then rebuilt from their inequality description so that fractional vertices
are caught instead of silently rounded: the matrices involved are totally
unimodular, and `from_inequalities` turns that argument into a check.
"""

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .complexes import PolytopalComplex, RelativeComplex
from .exact import LinearSystem, lp_feasible
from .graphs import (
    chromatic_bf,
    cycle_basis,
    incidence_matrix,
    int_flow_bf,
    int_tension_bf,
    mod_flow_bf,
    mod_tension_bf,
)
from .polytope import LatticePolytope


@dataclass(frozen=True, eq=False)
class CellFamily:
    """A construction's kept candidates and the relative complex they form."""

    kind: str
    graph: object
    labels: tuple
    relative: RelativeComplex


def _unit(n, i):
    return tuple(1 if j == i else 0 for j in range(n))


def _assemble(cells, ambient, planes):
    total = PolytopalComplex.generated_by(cells, ambient_dim=ambient)
    return RelativeComplex(total, total.faces_in_hyperplanes(planes))


def _build_chromatic(g):
    nv = len(g.vertices)
    if g.has_loop():
        empty = PolytopalComplex([], ambient_dim=nv)
        return (), RelativeComplex(empty, empty)
    idx = {v: i for i, v in enumerate(g.vertices)}
    edge_rows = [tuple((j == idx[h]) - (j == idx[t]) for j in range(nv))
                 for t, h in g.edges]
    bounds = []
    for v in range(nv):
        bounds.append((tuple(-x for x in _unit(nv, v)), 0))
        bounds.append((_unit(nv, v), 1))
    labels, cells = [], []
    for sigma in itertools.product((1, -1), repeat=len(g.edges)):
        rows = [(tuple(-s * x for x in row), 0)
                for s, row in zip(sigma, edge_rows)]
        if lp_feasible(LinearSystem(nv, lt=bounds + rows)) is None:
            continue
        cell = LatticePolytope.from_inequalities(
            LinearSystem(nv, le=bounds + rows), [(0, 1)] * nv)
        labels.append(sigma)
        cells.append(cell)
    planes = [(row, 0) for row in edge_rows]
    planes += [(_unit(nv, v), 1) for v in range(nv)]
    return tuple(labels), _assemble(cells, nv, planes)


def _interval_cells(g, matrix):
    """Unit boxes a + [0,1]^E meeting the solution space of `matrix` openly."""
    ne = len(g.edges)
    eq = [(row, 0) for row in matrix]
    labels, cells = [], []
    for a in itertools.product((-1, 0), repeat=ne):
        strict = []
        for e, lo in enumerate(a):
            strict.append((tuple(-x for x in _unit(ne, e)), -lo))
            strict.append((_unit(ne, e), lo + 1))
        if lp_feasible(LinearSystem(ne, eq=eq, lt=strict)) is None:
            continue
        cell = LatticePolytope.from_inequalities(
            LinearSystem(ne, eq=eq, le=strict),
            [(lo, lo + 1) for lo in a])
        labels.append(a)
        cells.append(cell)
    planes = [(_unit(ne, e), c) for e in range(ne) for c in (-1, 0, 1)]
    return tuple(labels), _assemble(cells, ne, planes)


def _slice_cells(g, matrix, ranges):
    """Unit cube slices {matrix . y = b} with nonempty open part."""
    ne = len(g.edges)
    strict = []
    box = []
    for e in range(ne):
        strict.append((tuple(-x for x in _unit(ne, e)), 0))
        strict.append((_unit(ne, e), 1))
        box.append((0, 1))
    labels, cells = [], []
    for b in itertools.product(*(range(lo, hi + 1) for lo, hi in ranges)):
        eq = [(row, rhs) for row, rhs in zip(matrix, b)]
        if lp_feasible(LinearSystem(ne, eq=eq, lt=strict)) is None:
            continue
        cell = LatticePolytope.from_inequalities(
            LinearSystem(ne, eq=eq, le=strict), box)
        labels.append(b)
        cells.append(cell)
    planes = [(_unit(ne, e), c) for e in range(ne) for c in (0, 1)]
    return tuple(labels), _assemble(cells, ne, planes)


def _build_int_flow(g):
    rows = [row for row in incidence_matrix(g) if any(row)]
    return _interval_cells(g, rows)


def _build_int_tension(g):
    return _interval_cells(g, list(cycle_basis(g)))


def _build_mod_flow(g):
    # vertex balances of points in the open cube stay within these degrees
    idx = {v: i for i, v in enumerate(g.vertices)}
    indeg = [0] * len(g.vertices)
    outdeg = [0] * len(g.vertices)
    for t, h in g.edges:
        if t != h:
            indeg[idx[h]] += 1
            outdeg[idx[t]] += 1
    ranges = [(-o, i) for o, i in zip(outdeg, indeg)]
    return _slice_cells(g, incidence_matrix(g), ranges)


def _build_mod_tension(g):
    basis = cycle_basis(g)
    ranges = [(-sum(x == -1 for x in c), sum(x == 1 for x in c))
              for c in basis]
    return _slice_cells(g, basis, ranges)


_SPECS = {
    "chromatic": (_build_chromatic, chromatic_bf,
                  lambda g: len(g.vertices)),
    "flow": (_build_int_flow, int_flow_bf,
             lambda g: g.cyclomatic_number()),
    "modflow": (_build_mod_flow, mod_flow_bf,
                lambda g: g.cyclomatic_number()),
    "tension": (_build_int_tension, int_tension_bf,
                lambda g: g.tension_rank()),
    "modtension": (_build_mod_tension, mod_tension_bf,
                   lambda g: g.tension_rank()),
}

KINDS = tuple(_SPECS)


def degree_bound(kind, g):
    """Degree of the counting polynomial; also the cell dimension."""
    return _SPECS[kind][2](g)


def oracle(kind, g, k):
    """The brute-force count the construction must reproduce."""
    return _SPECS[kind][1](g, k)


@lru_cache(maxsize=None)
def build_family(kind, g):
    if kind not in _SPECS:
        raise ValueError(f"unknown kind {kind!r}, expected one of {KINDS}")
    builder, _, bound = _SPECS[kind]
    labels, relative = builder(g)
    expected = bound(g)
    for cell in relative.complex.maximal_cells:
        assert cell.dim == expected, \
            f"{kind} cell of dimension {cell.dim}, expected {expected}"
    return CellFamily(kind, g, labels, relative)


def chromatic_complex(g):
    return build_family("chromatic", g).relative


def int_flow_complex(g):
    return build_family("flow", g).relative


def mod_flow_complex(g):
    return build_family("modflow", g).relative


def int_tension_complex(g):
    return build_family("tension", g).relative


def mod_tension_complex(g):
    return build_family("modtension", g).relative
