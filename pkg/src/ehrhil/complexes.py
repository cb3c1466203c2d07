"""Polytopal complexes, relative pairs, and their pulling triangulations.

A complex is stored by its maximal cells; faces are recovered from the
cells' own face lattices and identified across cells by vertex set.  A
relative pair (C, C') with C' a subcomplex of C stands for the point set
union(C) minus union(C'), which is what gets counted.

Validation checks that all cells meet in common faces.  It is enough to
check maximal cells pairwise: if P cap Q is a common face R for maximal
P, Q, then for any faces F of P and G of Q the set F cap G equals
(F cap R) cap (G cap R), an intersection of two faces of the polytope R,
hence a face of R contained in F and G, hence a face of each.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cached_property

from .exact import LinearSystem, dot, lp_feasible
from .polytope import LatticePolytope, simplex_is_unimodular


class InvalidComplexError(ValueError):
    """Two cells meet outside a common face."""


class NotCompressedError(RuntimeError):
    """A pulling triangulation produced a non-unimodular simplex."""


# ---------------------------------------------------------------------------
# pairwise intersection checking


def _separating_reduction(p, q):
    """Shrink the pair along a hyperplane that has p and q on opposite sides.

    Returns ("disjoint", None), ("pair", (fp, fq)) with fp, fq faces and
    fp cap fq == p cap q, or None when no usable hyperplane exists among
    the facets and hull equalities of either side.
    """
    for a_poly, b_poly, swap in ((p, q, False), (q, p, True)):
        for (a, b), tight in zip(a_poly.facets, a_poly._facet_vertex_sets):
            vals = [dot(a, w) for w in b_poly.vertices]
            mn = min(vals)
            if mn > b:
                return "disjoint", None
            if mn == b:
                other = frozenset(w for w, v in zip(b_poly.vertices, vals)
                                  if v == b)
                fa = a_poly.face(tight)
                fb = b_poly.face(other)
                return "pair", ((fb, fa) if swap else (fa, fb))
    for a_poly, b_poly, swap in ((p, q, False), (q, p, True)):
        for h, c in a_poly.hull_equalities:
            vals = [dot(h, w) for w in b_poly.vertices]
            mn, mx = min(vals), max(vals)
            if mn > c or mx < c:
                return "disjoint", None
            # the plane must support b_poly without swallowing it, or the
            # recursion would not shrink
            if (mn == c) != (mx == c):
                level = c
                other = frozenset(w for w, v in zip(b_poly.vertices, vals)
                                  if v == level)
                fb = b_poly.face(other)
                return "pair", ((fb, a_poly) if swap else (a_poly, fb))
    return None


def _relint_point(eq, le):
    """Relative interior point of {eq, le} or None when infeasible.

    One LP per inequality decides whether it can hold strictly; averaging
    the strict witnesses gives a point that is strict wherever possible.
    """
    n = len(eq[0][0]) if eq else len(le[0][0])
    base = LinearSystem(n, eq=eq, le=le)
    anchor = lp_feasible(base)
    if anchor is None:
        return None
    witnesses = []
    for i in range(len(le)):
        w = lp_feasible(LinearSystem(n, eq=eq, le=le[:i] + le[i + 1:],
                                     lt=[le[i]]))
        if w is not None:
            witnesses.append(w)
    if not witnesses:
        return anchor
    m = len(witnesses)
    return tuple(sum(w[j] for w in witnesses) / m for j in range(n))


def _smallest_face_at(poly, z):
    vs = frozenset(poly.vertices)
    for (a, b), tight in zip(poly.facets, poly._facet_vertex_sets):
        if dot(a, z) == b:
            vs &= tight
    return vs


def _lp_face_check(p, q):
    """Decide `p cap q is a common face` from a relative interior point.

    With z in relint(p cap q), the intersection is a common face exactly
    when the smallest face of p containing z and the smallest face of q
    containing z have the same vertex set.
    """
    eq = list(p.hull_equalities) + list(q.hull_equalities)
    le = list(p.facets) + list(q.facets)
    if not eq and not le:
        raise ValueError("unconstrained pair")
    z = _relint_point(eq, le)
    if z is None:
        return True
    return _smallest_face_at(p, z) == _smallest_face_at(q, z)


def meet_in_common_face(p, q):
    """True when p cap q is a face of both polytopes (the empty set counts)."""
    if frozenset(p.vertices) == frozenset(q.vertices):
        return True
    step = _separating_reduction(p, q)
    if step is None:
        return _lp_face_check(p, q)
    kind, pair = step
    if kind == "disjoint":
        return True
    return meet_in_common_face(*pair)


# ---------------------------------------------------------------------------
# complexes


class PolytopalComplex:
    """Finite polytopal complex, held by its maximal cells."""

    def __init__(self, cells, ambient_dim=None):
        cells = sorted(cells, key=lambda c: c.vertices)
        dims = {c.ambient_dim for c in cells}
        if len(dims) > 1:
            raise ValueError("cells live in different ambient spaces")
        if dims:
            ambient = dims.pop()
            if ambient_dim is not None and ambient_dim != ambient:
                raise ValueError("ambient_dim does not match the cells")
            ambient_dim = ambient
        self.ambient_dim = ambient_dim
        self.maximal_cells = tuple(cells)

    @classmethod
    def generated_by(cls, polytopes, ambient_dim=None):
        """Complex of all faces of the given polytopes (maximal ones kept)."""
        unique = {frozenset(p.vertices): p for p in polytopes}
        polys = list(unique.values())
        kept = []
        for p in polys:
            # after the dedupe, mutual containment cannot happen
            contained = any(
                q is not p and all(q.contains(v) for v in p.vertices)
                for q in polys)
            if not contained:
                kept.append(p)
        return cls(kept, ambient_dim=ambient_dim)

    def __eq__(self, other):
        return (isinstance(other, PolytopalComplex)
                and self.maximal_cells == other.maximal_cells)

    def __repr__(self):
        return (f"PolytopalComplex({len(self.maximal_cells)} maximal cells, "
                f"dim={self.dim})")

    @property
    def is_empty(self):
        return not self.maximal_cells

    @property
    def dim(self):
        return max((c.dim for c in self.maximal_cells), default=-1)

    @cached_property
    def all_faces(self):
        """Every face of every cell, identified across cells by vertex set."""
        faces = {}
        for cell in self.maximal_cells:
            for vs in cell.face_vertex_sets:
                if vs not in faces:
                    faces[vs] = cell.face(vs)
        return faces

    def f_vector(self):
        if self.is_empty:
            return ()
        f = [0] * (self.dim + 1)
        for poly in self.all_faces.values():
            f[poly.dim] += 1
        return tuple(f)

    def lattice_points(self, k=1):
        pts = set()
        for cell in self.maximal_cells:
            pts.update(cell.lattice_points(k))
        return pts

    def contains_point(self, point, k=1):
        return any(cell.contains(point, k) for cell in self.maximal_cells)

    def minimal_face_at(self, point):
        """Smallest face containing the point, or None when it lies outside.

        Faces containing a common point are closed under intersection, so
        intersecting the tightest face of every cell around the point gives
        the unique minimal one; the point is in its relative interior.
        """
        vs = None
        for cell in self.maximal_cells:
            if cell.contains(point):
                tight = _smallest_face_at(cell, point)
                vs = tight if vs is None else vs & tight
        return None if vs is None else self.all_faces[vs]

    def faces_in_hyperplanes(self, planes):
        """Subcomplex of all faces lying inside one of the given hyperplanes."""
        selected = []
        for vs, poly in self.all_faces.items():
            if any(all(dot(a, v) == b for v in vs) for a, b in planes):
                selected.append(poly)
        return PolytopalComplex.generated_by(selected,
                                             ambient_dim=self.ambient_dim)

    def validate(self):
        """Raise InvalidComplexError unless all cells meet in common faces."""
        for p, q in itertools.combinations(self.maximal_cells, 2):
            if not meet_in_common_face(p, q):
                raise InvalidComplexError(
                    f"cells {list(p.vertices)} and {list(q.vertices)} "
                    f"do not meet in a common face")

    def is_valid(self):
        try:
            self.validate()
        except InvalidComplexError:
            return False
        return True


class GeomSimplicialComplex:
    """Geometric simplicial complex given by its maximal simplices."""

    def __init__(self, simplices):
        cells = {frozenset(s) for s in simplices}
        self.maximal_simplices = frozenset(
            s for s in cells if not any(s < t for t in cells))

    @cached_property
    def faces(self):
        out = set()
        for cell in self.maximal_simplices:
            pts = sorted(cell)
            for r in range(1, len(pts) + 1):
                out.update(map(frozenset, itertools.combinations(pts, r)))
        return frozenset(out)

    @property
    def dim(self):
        return max((len(s) for s in self.maximal_simplices), default=0) - 1

    def f_vector(self):
        if not self.maximal_simplices:
            return ()
        f = [0] * (self.dim + 1)
        for s in self.faces:
            f[len(s) - 1] += 1
        return tuple(f)


def pull_complex(cx, order=None, require_unimodular=False):
    """Pulling triangulation of a whole complex under one global point order.

    Triangulating each cell with the same order is consistent across shared
    faces because pulling a face equals the restriction of pulling the cell.
    With require_unimodular, a non-unimodular maximal simplex raises
    NotCompressedError instead of silently producing a wrong f-vector.
    """
    pts = cx.lattice_points(1)
    if order is None:
        order = sorted(pts)
    rank = {p: i for i, p in enumerate(order)}
    missing = pts - rank.keys()
    if missing:
        raise ValueError(f"order is missing lattice points: {sorted(missing)}")
    simplices = []
    for cell in cx.maximal_cells:
        for s in cell.pull_maximal_simplices(rank):
            if require_unimodular and not simplex_is_unimodular(s):
                raise NotCompressedError(
                    f"pulled simplex {list(s)} is not unimodular")
            simplices.append(s)
    return GeomSimplicialComplex(simplices)


def pull_polytope(poly, order=None):
    """Pulling triangulation of a single polytope as a simplicial complex."""
    return pull_complex(PolytopalComplex([poly]), order)


def relative_f_vector(delta, gamma):
    """Face counts by dimension of faces(delta) minus faces(gamma)."""
    if not gamma.faces <= delta.faces:
        raise ValueError("gamma is not a subcomplex of delta")
    kept = delta.faces - gamma.faces
    if not kept:
        return ()
    f = [0] * max(len(s) for s in kept)
    for s in kept:
        f[len(s) - 1] += 1
    return tuple(f)


class RelativeComplex:
    """Pair (C, C') standing for the lattice point set union(C) - union(C')."""

    def __init__(self, complex, sub):
        if not sub.is_empty:
            if sub.ambient_dim != complex.ambient_dim:
                raise ValueError("ambient spaces differ")
            faces = complex.all_faces
            for cell in sub.maximal_cells:
                if frozenset(cell.vertices) not in faces:
                    raise ValueError(
                        f"{list(cell.vertices)} is not a face of the complex")
        self.complex = complex
        self.sub = sub

    def __repr__(self):
        return f"RelativeComplex({self.complex!r} minus {self.sub!r})"

    def count_points(self, k):
        """Number of lattice points of k * (union(C) - union(C'))."""
        if self.complex.is_empty:
            return 0
        big = self.complex.lattice_points(k)
        small = self.sub.lattice_points(k)
        assert small <= big
        return len(big) - len(small)

    def pulled_pair(self, order=None, require_unimodular=False):
        """Triangulate C, then carve out the simplices lying inside C'.

        A simplex lies in a face of C' exactly when all its vertices do
        (faces are convex), so the carved-out part equals the pulling of C'
        under the same order: pulling a face is the restriction of pulling
        any cell around it.
        """
        if order is None and not self.complex.is_empty:
            order = sorted(self.complex.lattice_points(1))
        delta = pull_complex(self.complex, order, require_unimodular)
        sub_pts = [frozenset(c.lattice_points()) for c in self.sub.maximal_cells]
        gamma = GeomSimplicialComplex(
            s for s in delta.faces if any(s <= pts for pts in sub_pts))
        return delta, gamma

    def pulled_f_vector(self, order=None):
        """Relative f-vector of the pulled pair; demands unimodular cells.

        This is the vector feeding the binomial count sum_i f_i C(k-1, i),
        which only counts points when every open simplex is unimodular.
        """
        delta, gamma = self.pulled_pair(order, require_unimodular=True)
        return relative_f_vector(delta, gamma)
