"""Exact integer and rational linear algebra.

Everything downstream of this module (polytopes, complexes, monomial
counting) is decided, never approximated: arbitrary precision integers and
`fractions.Fraction` only, no floating point anywhere.

Matrices are plain lists of lists in row major order; vectors are lists or
tuples.  The structured pieces are `LinearSystem` (a block of equalities,
weak inequalities and strict inequalities) together with `lp_feasible`,
an exact two phase simplex, and `fourier_motzkin_feasible`, an independent
elimination based feasibility test used to cross check the simplex.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


# ---------------------------------------------------------------------------
# integer matrices


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for row in a]


def mat_vec(m, x):
    return [sum(c * v for c, v in zip(row, x)) for row in m]


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def content(vec):
    g = 0
    for v in vec:
        g = gcd(g, abs(int(v)))
    return g


def reduce_content(vec):
    """Divide an integer vector by its content, keeping the direction."""
    g = content(vec)
    if g == 0:
        return tuple(int(v) for v in vec)
    return tuple(int(v) // g for v in vec)


def canonical_direction(vec):
    """Content reduced with the first nonzero entry positive."""
    red = reduce_content(vec)
    for v in red:
        if v:
            return red if v > 0 else tuple(-x for x in red)
    return red


def scale_to_integer(vec):
    """Smallest positive rational multiple of `vec` that is integral."""
    fracs = [Fraction(v) for v in vec]
    lcm = 1
    for f in fracs:
        lcm = lcm * f.denominator // gcd(lcm, f.denominator)
    ints = [int(f * lcm) for f in fracs]
    return reduce_content(ints)


def det(m):
    """Exact integer determinant by fraction free Bareiss elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [[int(v) for v in row] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pivot_row = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pivot_row is None:
                return 0
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_normal_form(m):
    """Diagonalize an integer matrix by unimodular row and column operations.

    Returns (s, left, right) with left * m * right == s, s diagonal with
    non-negative entries d0 | d1 | ... and |det(left)| = |det(right)| = 1.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [[int(v) for v in row] for row in m]
    left = identity_matrix(rows)
    right = identity_matrix(cols)

    def row_sub(i, j, q):
        a[i] = [x - q * y for x, y in zip(a[i], a[j])]
        left[i] = [x - q * y for x, y in zip(left[i], left[j])]

    def col_sub(i, j, q):
        for r in a:
            r[i] -= q * r[j]
        for r in right:
            r[i] -= q * r[j]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        left[i], left[j] = left[j], left[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in right:
            r[i], r[j] = r[j], r[i]

    def row_neg(i):
        a[i] = [-x for x in a[i]]
        left[i] = [-x for x in left[i]]

    for t in range(min(rows, cols)):
        while True:
            # move the submatrix entry of least magnitude to the pivot seat
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j] != 0 and (best is None
                                         or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            if best[0] != t:
                row_swap(t, best[0])
            if best[1] != t:
                col_swap(t, best[1])
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    row_sub(i, t, a[i][t] // p)
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    col_sub(j, t, a[t][j] // p)
                    if a[t][j]:
                        dirty = True
            if dirty:
                continue
            # pivot must divide the rest of the submatrix for the chain d0 | d1 | ...
            bad = next((i for i in range(t + 1, rows)
                        for j in range(t + 1, cols) if a[i][j] % p), None)
            if bad is None:
                break
            row_sub(t, bad, -1)
        if t < rows and t < cols and a[t][t] < 0:
            row_neg(t)
    return a, left, right


def integer_kernel(m, ncols=None):
    """Lattice basis of {z integer : m z = 0} via the Smith form."""
    if ncols is None:
        if not m:
            raise ValueError("ncols required for a matrix with no rows")
        ncols = len(m[0])
    if not m:
        return [tuple(row) for row in identity_matrix(ncols)]
    s, _left, right = smith_normal_form(m)
    rows = len(s)
    free = [j for j in range(ncols) if j >= rows or s[j][j] == 0]
    return [tuple(right[i][j] for i in range(ncols)) for j in free]


# ---------------------------------------------------------------------------
# rational elimination


def _as_fraction_rows(rows):
    return [[Fraction(v) for v in row] for row in rows]


def rref(rows):
    """Reduced row echelon form over Fraction. Returns (matrix, pivot columns)."""
    a = _as_fraction_rows(rows)
    if not a:
        return a, []
    ncols = len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if pivot_row is None:
            continue
        a[r], a[pivot_row] = a[pivot_row], a[r]
        inv = a[r][c]
        a[r] = [v / inv for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return a, pivots


def rational_rank(rows):
    return len(rref(rows)[1])


def rational_kernel(rows, ncols=None):
    """Basis of the rational null space of the given row matrix."""
    if ncols is None:
        if not rows:
            raise ValueError("ncols required for a matrix with no rows")
        ncols = len(rows[0])
    if not rows:
        return [tuple(Fraction(v) for v in row) for row in identity_matrix(ncols)]
    a, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            vec[pc] = -a[i][fc]
        basis.append(tuple(vec))
    return basis


def solve_rational(a, b, ncols=None):
    """Solve a x = b exactly over the rationals.

    Returns (particular, kernel_basis) with free variables set to zero, or
    None when the system is inconsistent.
    """
    if ncols is None:
        if not a:
            raise ValueError("ncols required for a system with no rows")
        ncols = len(a[0])
    if not a:
        zero = tuple(Fraction(0) for _ in range(ncols))
        return zero, rational_kernel([], ncols)
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    particular = [Fraction(0)] * ncols
    for i, pc in enumerate(pivots):
        particular[pc] = red[i][ncols]
    kernel = rational_kernel(a, ncols)
    return tuple(particular), kernel


# ---------------------------------------------------------------------------
# linear systems and exact feasibility


def _norm_block(block, n_vars):
    out = []
    for coeffs, rhs in block:
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) != n_vars:
            raise ValueError("constraint arity does not match n_vars")
        out.append((coeffs, Fraction(rhs)))
    return tuple(out)


@dataclass(frozen=True)
class LinearSystem:
    """A x = b, C x <= d, E x < f over exact rationals."""

    n_vars: int
    eq: tuple = ()
    le: tuple = ()
    lt: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "eq", _norm_block(self.eq, self.n_vars))
        object.__setattr__(self, "le", _norm_block(self.le, self.n_vars))
        object.__setattr__(self, "lt", _norm_block(self.lt, self.n_vars))


def _pivot(tableau, basis, row, col):
    piv = tableau[row][col]
    tableau[row] = [v / piv for v in tableau[row]]
    pivot_row = tableau[row]
    for i, r in enumerate(tableau):
        if i != row and r[col] != 0:
            f = r[col]
            tableau[i] = [x - f * y for x, y in zip(r, pivot_row)]
    if basis is not None:
        basis[row] = col


def _run_simplex(tableau, basis, obj, ncols):
    """Maximize, Bland's rule.  `obj` holds reduced costs; obj[-1] is -value."""
    m = len(tableau)
    while True:
        entering = next((j for j in range(ncols) if obj[j] > 0), None)
        if entering is None:
            return -obj[-1]
        leave = None
        best = None
        for i in range(m):
            coef = tableau[i][entering]
            if coef > 0:
                ratio = tableau[i][-1] / coef
                if best is None or ratio < best or (ratio == best
                                                    and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            raise ArithmeticError("unbounded linear program")
        _pivot(tableau, basis, leave, entering)
        f = obj[entering]
        if f != 0:
            row = tableau[leave]
            for j in range(len(obj)):
                obj[j] -= f * row[j]


def _reduced_costs(tableau, basis, cost, ncols):
    m = len(tableau)
    cb = [cost[b] for b in basis]
    obj = []
    for j in range(ncols + 1):
        cj = cost[j] if j < ncols else Fraction(0)
        obj.append(cj - sum(cb[i] * tableau[i][j if j < ncols else -1]
                            for i in range(m)))
    return obj


def _simplex_max(a_rows, b_vec, cost):
    """Maximize cost . x subject to A x = b, x >= 0 (two phase, exact).

    Returns (value, x) or None when infeasible.
    """
    m = len(a_rows)
    n = len(cost)
    a = [[Fraction(v) for v in row] for row in a_rows]
    b = [Fraction(v) for v in b_vec]
    for i in range(m):
        if b[i] < 0:
            a[i] = [-v for v in a[i]]
            b[i] = -b[i]

    tableau = [a[i] + [Fraction(1) if j == i else Fraction(0) for j in range(m)]
               + [b[i]] for i in range(m)]
    basis = list(range(n, n + m))
    phase1_cost = [Fraction(0)] * n + [Fraction(-1)] * m
    obj = _reduced_costs(tableau, basis, phase1_cost, n + m)
    if _run_simplex(tableau, basis, obj, n + m) < 0:
        return None

    # pivot artificial variables out of the basis, dropping redundant rows
    keep = []
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if tableau[i][j] != 0), None)
            if col is None:
                continue
            _pivot(tableau, basis, i, col)
        keep.append(i)
    tableau = [tableau[i][:n] + [tableau[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]

    obj = _reduced_costs(tableau, basis, list(cost), n)
    value = _run_simplex(tableau, basis, obj, n)
    x = [Fraction(0)] * n
    for i, bv in enumerate(basis):
        x[bv] = tableau[i][-1]
    return value, x


def lp_feasible(system):
    """Exact witness for a mixed weak/strict rational system, or None.

    Strict inequalities are handled by maximizing a shared margin eps
    (capped at 1): the system is strictly feasible iff the optimum is
    positive.  Returns a rational point or None.
    """
    n = system.n_vars
    if n == 0:
        ok = (all(rhs == 0 for _, rhs in system.eq)
              and all(rhs >= 0 for _, rhs in system.le)
              and all(rhs > 0 for _, rhs in system.lt))
        return () if ok else None

    n_le = len(system.le)
    n_lt = len(system.lt)
    # columns: u_0..u_{n-1}, w_0..w_{n-1}, eps, le slacks, lt slacks, cap slack
    eps_col = 2 * n
    total = 2 * n + 1 + n_le + n_lt + 1
    rows = []
    rhs = []

    def base_row(coeffs):
        row = [Fraction(0)] * total
        for j, c in enumerate(coeffs):
            row[j] = Fraction(c)
            row[n + j] = -Fraction(c)
        return row

    for coeffs, b in system.eq:
        rows.append(base_row(coeffs))
        rhs.append(b)
    for idx, (coeffs, b) in enumerate(system.le):
        row = base_row(coeffs)
        row[eps_col + 1 + idx] = Fraction(1)
        rows.append(row)
        rhs.append(b)
    for idx, (coeffs, b) in enumerate(system.lt):
        row = base_row(coeffs)
        row[eps_col] = Fraction(1)
        row[eps_col + 1 + n_le + idx] = Fraction(1)
        rows.append(row)
        rhs.append(b)
    cap = [Fraction(0)] * total
    cap[eps_col] = Fraction(1)
    cap[-1] = Fraction(1)
    rows.append(cap)
    rhs.append(Fraction(1))

    cost = [Fraction(0)] * total
    cost[eps_col] = Fraction(1)
    result = _simplex_max(rows, rhs, cost)
    if result is None:
        return None
    value, x = result
    if n_lt and value <= 0:
        return None
    return tuple(x[j] - x[n + j] for j in range(n))


def lp_maximize(system, cost):
    """Maximize cost . x over a closed system (eq and le rows only).

    Returns (optimum, witness) with Fraction entries, or None when the
    system is infeasible.  Propagates ArithmeticError when unbounded.
    """
    if system.lt:
        raise ValueError("lp_maximize expects a closed system")
    n = system.n_vars
    if n == 0:
        ok = (all(rhs == 0 for _, rhs in system.eq)
              and all(rhs >= 0 for _, rhs in system.le))
        return (Fraction(0), ()) if ok else None
    n_le = len(system.le)
    rows = []
    rhs = []

    def base_row(coeffs):
        row = [Fraction(0)] * (2 * n + n_le)
        for j, c in enumerate(coeffs):
            row[j] = Fraction(c)
            row[n + j] = -Fraction(c)
        return row

    for coeffs, b in system.eq:
        rows.append(base_row(coeffs))
        rhs.append(b)
    for idx, (coeffs, b) in enumerate(system.le):
        row = base_row(coeffs)
        row[2 * n + idx] = Fraction(1)
        rows.append(row)
        rhs.append(b)
    obj = [Fraction(0)] * (2 * n + n_le)
    for j, c in enumerate(cost):
        obj[j] = Fraction(c)
        obj[n + j] = -Fraction(c)
    result = _simplex_max(rows, rhs, obj)
    if result is None:
        return None
    value, x = result
    return value, tuple(x[j] - x[n + j] for j in range(n))


def fourier_motzkin_feasible(system):
    """Variable elimination feasibility for the same systems as lp_feasible.

    Exponential in the worst case; used as an independent cross check at
    small dimension.
    """
    cons = set()

    def add(coeffs, rhs, strict):
        data = tuple(Fraction(c) for c in coeffs) + (Fraction(rhs),)
        lcm = 1
        for f in data:
            lcm = lcm * f.denominator // gcd(lcm, f.denominator)
        ints = [int(f * lcm) for f in data]
        g = content(ints)
        if g:
            ints = [v // g for v in ints]
        cons.add((tuple(ints[:-1]), ints[-1], strict))

    for coeffs, b in system.eq:
        add(coeffs, b, False)
        add(tuple(-c for c in coeffs), -b, False)
    for coeffs, b in system.le:
        add(coeffs, b, False)
    for coeffs, b in system.lt:
        add(coeffs, b, True)

    n = system.n_vars
    remaining = list(range(n))
    while remaining:
        # eliminate the variable producing the fewest pairings
        def cost(v):
            pos = sum(1 for c, _, _ in cons if c[v] > 0)
            neg = sum(1 for c, _, _ in cons if c[v] < 0)
            return pos * neg
        var = min(remaining, key=cost)
        remaining.remove(var)
        pos = [c for c in cons if c[0][var] > 0]
        neg = [c for c in cons if c[0][var] < 0]
        keep = {c for c in cons if c[0][var] == 0}
        for cp, bp, sp in pos:
            for cn, bn, sn in neg:
                p = cp[var]
                q = -cn[var]
                coeffs = tuple(q * x + p * y for x, y in zip(cp, cn))
                rhs = q * bp + p * bn
                ints = reduce_content(coeffs + (rhs,))
                keep.add((ints[:-1], ints[-1], sp or sn))
        cons = keep

    for coeffs, rhs, strict in cons:
        if strict:
            if not rhs > 0:
                return False
        elif not rhs >= 0:
            return False
    return True
