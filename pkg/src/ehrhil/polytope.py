"""Lattice polytopes: exact face lattice, point enumeration, pulling.

A polytope is the convex hull of finitely many integer points.  Everything
derived from it (affine hull, facets, faces, lattice points in dilates,
triangulations) is computed over exact integers and rationals.

The facet description is recovered from the points directly: every subset
of vertices of size dim that spans a hyperplane inside the affine hull is
a candidate, and the candidates that support the polytope on one side
survive.  Vertex counts stay small in this code base, so the subset scan
is cheaper than being clever.
"""

from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from functools import cached_property

from .exact import (
    LinearSystem,
    canonical_direction,
    dot,
    integer_kernel,
    lp_feasible,
    lp_maximize,
    rational_rank,
    reduce_content,
    smith_normal_form,
)


class IntegralityError(ValueError):
    """A region that must be a lattice polytope has a fractional vertex."""


def affine_rank(points):
    """Dimension of the affine span of a point collection (-1 when empty)."""
    pts = list(points)
    if not pts:
        return -1
    p0 = pts[0]
    dirs = [[p[i] - p0[i] for i in range(len(p0))] for p in pts[1:]]
    return rational_rank(dirs) if dirs else 0


def simplex_is_unimodular(points):
    """Edge vectors form a basis of the lattice inside the affine hull.

    Equivalent to all invariant factors of the edge matrix being 1, which
    covers lower dimensional simplices in a larger ambient space too.
    """
    pts = list(points)
    p0 = pts[0]
    rows = [[p[i] - p0[i] for i in range(len(p0))] for p in pts[1:]]
    if not rows:
        return True
    s, _, _ = smith_normal_form(rows)
    return all(s[i][i] == 1 for i in range(len(rows)))


class LatticePolytope:
    """Convex hull of integer points, with cached combinatorial structure."""

    def __init__(self, points):
        pts = sorted({tuple(int(c) for c in p) for p in points})
        if not pts:
            raise ValueError("a lattice polytope needs at least one point")
        if len({len(p) for p in pts}) != 1:
            raise ValueError("points live in different ambient spaces")
        self.ambient_dim = len(pts[0])
        p0 = pts[0]
        dirs = [[p[i] - p0[i] for i in range(self.ambient_dim)] for p in pts[1:]]
        self.dim = rational_rank(dirs) if dirs else 0
        eqs = []
        if self.dim < self.ambient_dim:
            for a in integer_kernel(dirs, ncols=self.ambient_dim):
                a = canonical_direction(reduce_content(a))
                eqs.append((tuple(a), dot(a, p0)))
        self.hull_equalities = tuple(sorted(eqs))
        self.vertices = self._extract_vertices(pts)
        self.facets, self._facet_vertex_sets = self._enumerate_facets()
        self._face_cache = {}
        self._points_cache = {}

    # -- construction helpers ------------------------------------------------

    def _extract_vertices(self, pts):
        if len(pts) <= self.dim + 1:
            # affinely independent: every point is extreme
            return tuple(pts)
        out = []
        for i, p in enumerate(pts):
            others = pts[:i] + pts[i + 1:]
            m = len(others)
            eq = [(tuple(q[c] for q in others), p[c])
                  for c in range(self.ambient_dim)]
            eq.append(((1,) * m, 1))
            le = [(tuple(-1 if j == t else 0 for j in range(m)), 0)
                  for t in range(m)]
            if lp_feasible(LinearSystem(m, eq=eq, le=le)) is None:
                out.append(p)
        return tuple(out)

    def _enumerate_facets(self):
        if self.dim == 0:
            return (), ()
        n = self.ambient_dim
        verts = self.vertices
        found = {}
        for sub in itertools.combinations(verts, self.dim):
            s0 = sub[0]
            rows = [[q[i] - s0[i] for i in range(n)] for q in sub[1:]]
            if rows and rational_rank(rows) != self.dim - 1:
                continue
            normal = None
            for cand in integer_kernel(rows, ncols=n):
                if len({dot(cand, v) for v in verts}) > 1:
                    normal = cand
                    break
            if normal is None:
                continue
            b = dot(normal, s0)
            values = [dot(normal, v) for v in verts]
            lo, hi = min(values), max(values)
            if lo < b < hi:
                continue  # hyperplane cuts the polytope
            if hi > b:
                normal = [-c for c in normal]
            a = reduce_content(normal)
            b = dot(a, s0)
            if (a, b) not in found:
                found[(a, b)] = frozenset(
                    v for v in verts if dot(a, v) == b)
        ordered = sorted(found)
        return tuple(ordered), tuple(found[key] for key in ordered)

    @classmethod
    def from_inequalities(cls, system, box):
        """Hull of the region's lattice points, verified to BE the region.

        `box` gives integer bounds wide enough to contain the region.  After
        collecting the lattice points inside, every facet and hull equality
        of their hull is certified against the region by exact LP; any slack
        means a fractional vertex, reported as IntegralityError.
        """
        if system.lt:
            raise ValueError("from_inequalities expects a closed system")
        if len(box) != system.n_vars:
            raise ValueError("box arity mismatch")
        pts = [cand
               for cand in itertools.product(*(range(lo, hi + 1)
                                               for lo, hi in box))
               if all(dot(a, cand) == b for a, b in system.eq)
               and all(dot(a, cand) <= b for a, b in system.le)]
        if not pts:
            raise IntegralityError(
                "region has no lattice points in the given box")
        poly = cls(pts)
        to_check = list(poly.facets)
        for h, c in poly.hull_equalities:
            to_check.append((h, c))
            to_check.append((tuple(-v for v in h), -c))
        for a, b in to_check:
            got = lp_maximize(system, a)
            if got is not None and got[0] > b:
                raise IntegralityError(
                    f"region exceeds its lattice hull: max {a}.x = {got[0]} > {b}")
        return poly

    # -- basic structure -----------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, LatticePolytope)
                and self.vertices == other.vertices)

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        return f"LatticePolytope(dim={self.dim}, vertices={list(self.vertices)})"

    @cached_property
    def bounding_box(self):
        return tuple(
            (min(v[i] for v in self.vertices), max(v[i] for v in self.vertices))
            for i in range(self.ambient_dim))

    def contains(self, point, k=1):
        """Membership of a rational point in the k-th dilate."""
        return (all(dot(h, point) == k * c for h, c in self.hull_equalities)
                and all(dot(a, point) <= k * b for a, b in self.facets))

    def is_simplex(self):
        return len(self.vertices) == self.dim + 1

    def is_empty_polytope(self):
        """No lattice points besides the vertices."""
        return len(self.lattice_points()) == len(self.vertices)

    def is_empty_simplex(self):
        """A simplex whose only lattice points are its vertices."""
        return self.is_simplex() and self.is_empty_polytope()

    def is_unimodular_simplex(self):
        return self.is_simplex() and simplex_is_unimodular(self.vertices)

    # -- face lattice ----------------------------------------------------------

    @cached_property
    def face_vertex_sets(self):
        """All nonempty faces as vertex sets, the polytope itself included.

        Every proper face is an intersection of facets, so closing the facet
        sets under pairwise intersection enumerates the whole lattice.
        """
        full = frozenset(self.vertices)
        sets = {full, *self._facet_vertex_sets}
        frontier = list(self._facet_vertex_sets)
        while frontier:
            fresh = []
            for f in frontier:
                for g in self._facet_vertex_sets:
                    h = f & g
                    if h and h not in sets:
                        sets.add(h)
                        fresh.append(h)
            frontier = fresh
        return frozenset(sets)

    def face(self, vertex_set):
        fs = frozenset(vertex_set)
        if fs == frozenset(self.vertices):
            return self
        got = self._face_cache.get(fs)
        if got is None:
            if fs not in self.face_vertex_sets:
                raise ValueError(f"{sorted(fs)} is not a face")
            got = LatticePolytope(fs)
            self._face_cache[fs] = got
        return got

    def facet_subpolytopes(self):
        return [self.face(fs) for fs in self._facet_vertex_sets]

    # -- lattice points --------------------------------------------------------

    def lattice_points(self, k=1):
        """Integer points of the k-th dilate, in ascending lex order.

        Depth first scan over the scaled bounding box; partial assignments
        are pruned with per constraint interval bounds, so the walk touches
        little more than the points themselves.
        """
        if k < 1:
            raise ValueError("dilation factor must be >= 1")
        cached = self._points_cache.get(k)
        if cached is not None:
            return cached
        n = self.ambient_dim
        cons = [(a, k * b) for a, b in self.facets]
        for h, c in self.hull_equalities:
            cons.append((h, k * c))
            cons.append((tuple(-v for v in h), -k * c))
        lo = [k * self.bounding_box[i][0] for i in range(n)]
        hi = [k * self.bounding_box[i][1] for i in range(n)]
        # suffix_min[c][i] = least possible value of sum_{j>=i} a_j x_j
        suffix_min = []
        for a, _ in cons:
            row = [0] * (n + 1)
            for i in range(n - 1, -1, -1):
                row[i] = row[i + 1] + min(a[i] * lo[i], a[i] * hi[i])
            suffix_min.append(row)

        out = []
        x = [0] * n

        def walk(i, residual):
            if i == n:
                out.append(tuple(x))
                return
            lo_i, hi_i = lo[i], hi[i]
            for c, (a, _) in enumerate(cons):
                rem = residual[c] - suffix_min[c][i + 1]
                ai = a[i]
                if ai > 0:
                    hi_i = min(hi_i, rem // ai)
                elif ai < 0:
                    # ceil(rem / ai) with ai negative
                    lo_i = max(lo_i, -(rem // (-ai)))
                elif rem < 0:
                    return
                if lo_i > hi_i:
                    return
            for v in range(lo_i, hi_i + 1):
                x[i] = v
                walk(i + 1, [residual[c] - cons[c][0][i] * v
                             for c in range(len(cons))])

        walk(0, [rhs for _, rhs in cons])
        result = tuple(out)
        self._points_cache[k] = result
        return result

    def interior_lattice_points(self, k=1):
        """Lattice points in the relative interior of the k-th dilate."""
        return tuple(
            p for p in self.lattice_points(k)
            if all(dot(a, p) < k * b for a, b in self.facets))

    # -- lattice geometry predicates -------------------------------------------

    def lattice_spacing(self, functional):
        """Gap between consecutive values of a functional on the hull lattice."""
        rows = [list(h) for h, _ in self.hull_equalities]
        g = 0
        for z in integer_kernel(rows, ncols=self.ambient_dim):
            g = math.gcd(g, abs(dot(functional, z)))
        return g

    def is_two_level(self):
        """Each facet normal takes exactly two consecutive lattice values."""
        for (a, b), _ in zip(self.facets, self._facet_vertex_sets):
            g = self.lattice_spacing(a)
            if sorted({dot(a, v) for v in self.vertices}) != [b - g, b]:
                return False
        return True

    def normality_counterexample(self, k_max=None):
        """First (k, point) where k-fold sums of height-1 points fall short.

        Checking degrees up to max(2, dim - 1) decides normality: beyond
        dim - 1 the dilate points are always sums of lower ones.  Returns
        None when the polytope is normal.
        """
        if k_max is None:
            k_max = max(2, self.dim - 1)
        base = set(self.lattice_points(1))
        level = base
        for k in range(2, k_max + 1):
            sums = {tuple(p[i] + q[i] for i in range(self.ambient_dim))
                    for p in level for q in base}
            target = self.lattice_points(k)
            for z in target:
                if z not in sums:
                    return k, z
            level = set(target)
        return None

    def is_normal(self, k_max=None):
        return self.normality_counterexample(k_max) is None

    # -- pulling triangulations --------------------------------------------------

    def pull_maximal_simplices(self, rank):
        """Maximal cells of the pulling triangulation for a point order.

        `rank` maps every lattice point to its priority (lower pulls first).
        The recursion is literal: an empty simplex stays whole; otherwise the
        lowest lattice point v is coned over the pulling of every facet that
        misses v.
        """
        pts = self.lattice_points()
        if self.is_simplex() and len(pts) == len(self.vertices):
            return [self.vertices]
        v = min(pts, key=rank.__getitem__)
        cells = []
        for (a, b), tight in zip(self.facets, self._facet_vertex_sets):
            if dot(a, v) == b:
                continue
            for cell in self.face(tight).pull_maximal_simplices(rank):
                cells.append(tuple(sorted({*cell, v})))
        return cells

    def is_compressed(self, order_budget=50, seed=0):
        """Every pulling triangulation unimodular, checked over point orders.

        Exhaustive over all orders when there are few enough lattice points
        (n! <= order_budget); otherwise the lex order plus order_budget
        seeded shuffles.  A non-vertex lattice point already rules the
        property out, so that case returns early.
        """
        if not self.is_empty_polytope():
            return False
        pts = self.lattice_points()
        n = len(pts)
        if math.factorial(n) <= order_budget:
            orders = itertools.permutations(pts)
        else:
            rng = random.Random(seed)
            orders = [pts]
            for _ in range(order_budget):
                perm = list(pts)
                rng.shuffle(perm)
                orders.append(tuple(perm))
        for order in orders:
            rank = {p: i for i, p in enumerate(order)}
            for cell in self.pull_maximal_simplices(rank):
                if not simplex_is_unimodular(cell):
                    return False
        return True
