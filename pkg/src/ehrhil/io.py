"""JSON formats for graphs, polytopes, relative complexes and polynomials.

Every loader validates shape and content and raises InputError on anything
malformed, so the command line can map bad input to its own exit status
without sniffing message strings.  Dumpers sort everything they emit;
equal inputs produce byte-identical documents.
"""

import json
from fractions import Fraction

from .complexes import PolytopalComplex, RelativeComplex
from .graphs import Graph
from .polynomials import BinomialPolynomial
from .polytope import LatticePolytope


class InputError(ValueError):
    """Malformed user-supplied data (bad JSON, wrong shape, bad values)."""


def read_json_file(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def write_json_file(path, data):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _require_dict(data, keys, what):
    if not isinstance(data, dict):
        raise InputError(f"{what} must be a JSON object")
    missing = [k for k in keys if k not in data]
    if missing:
        raise InputError(f"{what} is missing key(s): {', '.join(missing)}")


# -- graphs -------------------------------------------------------------------

def graph_to_json(g):
    return {
        "vertices": list(g.vertices),
        "edges": [{"tail": t, "head": h} for t, h in g.edges],
    }


def graph_from_json(data):
    _require_dict(data, ("vertices", "edges"), "a graph")
    vertices = data["vertices"]
    if (not isinstance(vertices, list)
            or not all(isinstance(v, str) for v in vertices)):
        raise InputError("graph vertices must be a list of strings")
    edges = []
    if not isinstance(data["edges"], list):
        raise InputError("graph edges must be a list")
    for e in data["edges"]:
        if not isinstance(e, dict) or set(e) != {"tail", "head"}:
            raise InputError(
                'each edge must be an object {"tail": ..., "head": ...}')
        edges.append((e["tail"], e["head"]))
    try:
        return Graph(tuple(vertices), tuple(edges))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


# -- polytopes ----------------------------------------------------------------

def _lattice_point(p, ambient, what):
    if (not isinstance(p, list) or len(p) != ambient
            or not all(isinstance(c, int) and not isinstance(c, bool)
                       for c in p)):
        raise InputError(
            f"{what}: every point must be a list of {ambient} integers")
    return tuple(p)


def polytope_to_json(p):
    return {
        "ambient_dim": p.ambient_dim,
        "vertices": [list(v) for v in p.vertices],
    }


def polytope_from_json(data):
    _require_dict(data, ("ambient_dim", "vertices"), "a polytope")
    ambient = data["ambient_dim"]
    if not isinstance(ambient, int) or ambient < 0:
        raise InputError("ambient_dim must be a non-negative integer")
    vertices = data["vertices"]
    if not isinstance(vertices, list) or not vertices:
        raise InputError("a polytope needs a nonempty vertex list")
    points = [_lattice_point(v, ambient, "polytope vertices") for v in vertices]
    return LatticePolytope(points)


# -- relative complexes -------------------------------------------------------

def complex_to_json(rel):
    """Vertex table plus the maximal cells of C and of C' as index lists."""
    table = sorted({v for c in rel.complex.maximal_cells for v in c.vertices}
                   | {v for c in rel.sub.maximal_cells for v in c.vertices})
    index = {v: i for i, v in enumerate(table)}

    def rows(cx):
        return sorted(sorted(index[v] for v in c.vertices)
                      for c in cx.maximal_cells)

    out = {"vertices": [list(v) for v in table], "faces": rows(rel.complex)}
    if not rel.sub.is_empty:
        out["sub_faces"] = rows(rel.sub)
    return out


def _cells_from_rows(rows, table, what):
    if not isinstance(rows, list):
        raise InputError(f"{what} must be a list of faces")
    cells = []
    for row in rows:
        if (not isinstance(row, list) or not row
                or not all(isinstance(i, int) and not isinstance(i, bool)
                           and 0 <= i < len(table) for i in row)):
            raise InputError(
                f"{what}: each face must be a nonempty list of vertex indices "
                f"in range 0..{len(table) - 1}")
        cells.append(LatticePolytope([table[i] for i in row]))
    return cells


def complex_from_json(data):
    _require_dict(data, ("vertices", "faces"), "a complex")
    raw = data["vertices"]
    if not isinstance(raw, list):
        raise InputError("complex vertices must be a list of lattice points")
    ambient = len(raw[0]) if raw and isinstance(raw[0], list) else 0
    table = [_lattice_point(v, ambient, "complex vertices") for v in raw]
    cells = _cells_from_rows(data["faces"], table, "faces")
    sub_cells = _cells_from_rows(data.get("sub_faces", []), table, "sub_faces")
    total = PolytopalComplex.generated_by(cells)
    sub = PolytopalComplex.generated_by(
        sub_cells, ambient_dim=total.ambient_dim)
    try:
        return RelativeComplex(total, sub)
    except ValueError as exc:
        raise InputError(f"sub_faces do not form a subcomplex: {exc}") from exc


# -- polynomials --------------------------------------------------------------

def polynomial_to_json(p):
    return {
        "monomial": [str(c) for c in p.coefficients],
        "binomial": [str(c) for c in p.binomial_basis],
    }


def _fractions(values, what):
    if not isinstance(values, list) or not values:
        raise InputError(f"{what} coefficients must be a nonempty list")
    out = []
    for c in values:
        if isinstance(c, bool) or not isinstance(c, (str, int)):
            raise InputError(f"{what} coefficients must be exact strings")
        try:
            out.append(Fraction(c))
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"{what}: {c!r} is not a rational") from exc
    return out


def polynomial_from_json(data):
    """Rebuild from the monomial list; a binomial list must then agree."""
    _require_dict(data, ("monomial",), "a polynomial")
    p = BinomialPolynomial(_fractions(data["monomial"], "monomial"))
    if "binomial" in data:
        stated = _fractions(data["binomial"], "binomial")
        while len(stated) > 1 and stated[-1] == 0:
            stated.pop()
        if tuple(stated) != p.binomial_basis:
            raise InputError(
                "binomial coefficients do not match the monomial ones")
    return p
