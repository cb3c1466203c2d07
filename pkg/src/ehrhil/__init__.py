"""Graph counting polynomials three ways: brute force, lattice points, Hilbert functions."""

from .complexes import (
    PolytopalComplex,
    RelativeComplex,
    pull_complex,
    pull_polytope,
    relative_f_vector,
)
from .constructions import (
    KINDS,
    build_family,
    chromatic_complex,
    degree_bound,
    int_flow_complex,
    int_tension_complex,
    mod_flow_complex,
    mod_tension_complex,
    oracle,
)
from .graphs import (
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
from .normal_sr import (
    GREVLEX,
    GRLEX,
    NormalityError,
    hilbert_normal,
    homogenize,
    minimal_representatives,
)
from .polynomials import BinomialPolynomial, interpolate
from .polytope import IntegralityError, LatticePolytope
from .srideal import (
    AbstractComplex,
    RelativeSRIdeal,
    comb,
    hilbert_by_enumeration,
    hilbert_from_f,
    minimal_nonfaces,
    realize_polynomial,
)

__version__ = "0.1.0"

__all__ = [
    "AbstractComplex",
    "BinomialPolynomial",
    "GREVLEX",
    "GRLEX",
    "Graph",
    "IntegralityError",
    "KINDS",
    "LatticePolytope",
    "NormalityError",
    "PolytopalComplex",
    "RelativeComplex",
    "RelativeSRIdeal",
    "build_family",
    "chromatic_bf",
    "chromatic_complex",
    "comb",
    "complete_graph",
    "cycle_basis",
    "cycle_graph",
    "degree_bound",
    "hilbert_by_enumeration",
    "hilbert_from_f",
    "hilbert_normal",
    "homogenize",
    "incidence_matrix",
    "int_flow_bf",
    "int_flow_complex",
    "int_tension_bf",
    "int_tension_complex",
    "interpolate",
    "minimal_nonfaces",
    "minimal_representatives",
    "mod_flow_bf",
    "mod_flow_complex",
    "mod_tension_bf",
    "mod_tension_complex",
    "oracle",
    "path_graph",
    "pull_complex",
    "pull_polytope",
    "realize_polynomial",
    "relative_f_vector",
]
