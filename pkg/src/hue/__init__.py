"""Hypergraph coloring complexes: construction, enumerative invariants and exact topology."""

from .complexes import (
    Face,
    SimplicialComplex,
    box_complex,
    build_coloring_complex,
    cube_complex,
    edge_sphere_complex,
    f_h_vectors,
    link_of_face,
    subspace_complex,
)
from .enumerative import (
    METHODS,
    chromatic_f_vector,
    chromatic_polynomial,
    cube_face_formulas,
    ehrhart_series_check,
    fh_basis_transforms,
    truncated_bounds,
    uniform_bounds,
)
from .hypergraph import (
    Hypergraph,
    HypergraphError,
    IsolatedVertexWarning,
    component_partition,
    generate_family,
    parse_hypergraph,
    s_table,
)
from .kernels import BudgetExceeded
from .polynomial import RationalPolynomial
from .topology import (
    connectedness_check,
    cup_product_analysis,
    integral_homology,
    partitionability_obstruction,
    rational_betti,
    rational_cohomology,
    reisner_cm_check,
)
from .wedge import intersection_poset, wedge_decomposition

__version__ = "0.1.0"

__all__ = [
    "Face",
    "SimplicialComplex",
    "box_complex",
    "build_coloring_complex",
    "cube_complex",
    "edge_sphere_complex",
    "f_h_vectors",
    "link_of_face",
    "subspace_complex",
    "METHODS",
    "chromatic_f_vector",
    "chromatic_polynomial",
    "cube_face_formulas",
    "ehrhart_series_check",
    "fh_basis_transforms",
    "truncated_bounds",
    "uniform_bounds",
    "Hypergraph",
    "HypergraphError",
    "IsolatedVertexWarning",
    "component_partition",
    "generate_family",
    "parse_hypergraph",
    "s_table",
    "BudgetExceeded",
    "RationalPolynomial",
    "connectedness_check",
    "cup_product_analysis",
    "integral_homology",
    "partitionability_obstruction",
    "rational_betti",
    "rational_cohomology",
    "reisner_cm_check",
    "intersection_poset",
    "wedge_decomposition",
    "__version__",
]
