"""Finite-geometry toolkit over GF(q).

Builds projective-space designs, Grassmann and twisted Grassmann
graphs, block graphs, and the machinery to verify their structure:
2-design parameter checking, distance-regularity via BFS, explicit
isomorphism certificates, incidence p-ranks, and lifting of
hyperplane-stabilizing semilinear maps to design automorphisms.
"""

from .gf import Field, field_new, field_from_order
from .linalg import Matrix
from .subspace import (
    Subspace,
    ProjectivePoint,
    span,
    full_space,
    zero_space,
    coordinate_hyperplane,
    enumerate_k_subspaces,
    gaussian_binomial,
    projective_points,
    affine_points,
)
from .polarity import Polarity, polarity_new
from .geometry import (
    Graph,
    Design,
    DesignParameters,
    grassmann_graph,
    twisted_grassmann,
    pg_design,
    jt_design,
    f_map,
    block_graph,
    intersection_spectrum,
    point_index_map,
)
from .drg import (
    IntersectionArray,
    NotDRG,
    NotDesign,
    IsoCertificate,
    GraphStructureError,
    intersection_array,
    check_isomorphism,
    f_certificate,
    check_2design,
    p_rank,
    vertex_statistics,
)
from .autgroup import (
    SemilinearMap,
    PointPermutation,
    NotAutomorphism,
    Theorem2Violation,
    LiftCheckReport,
    random_stabilizer_element,
    lift,
    is_design_automorphism,
    induced_block_permutation,
    check_theorem2_relation,
    stabilizer_order,
    exhaustive_lift_check,
)
from .formats import (
    encode_graph6,
    decode_graph6,
    encode_dimacs,
    graph_to_json,
    graph_from_json,
    design_to_json,
    design_from_json,
    incidence_csv,
)

__all__ = [
    "Field",
    "field_new",
    "field_from_order",
    "Matrix",
    "Subspace",
    "ProjectivePoint",
    "span",
    "full_space",
    "zero_space",
    "coordinate_hyperplane",
    "enumerate_k_subspaces",
    "gaussian_binomial",
    "projective_points",
    "affine_points",
    "Polarity",
    "polarity_new",
    "Graph",
    "Design",
    "DesignParameters",
    "grassmann_graph",
    "twisted_grassmann",
    "pg_design",
    "jt_design",
    "f_map",
    "block_graph",
    "intersection_spectrum",
    "point_index_map",
    "IntersectionArray",
    "NotDRG",
    "NotDesign",
    "IsoCertificate",
    "GraphStructureError",
    "intersection_array",
    "check_isomorphism",
    "f_certificate",
    "check_2design",
    "p_rank",
    "vertex_statistics",
    "SemilinearMap",
    "PointPermutation",
    "NotAutomorphism",
    "Theorem2Violation",
    "LiftCheckReport",
    "random_stabilizer_element",
    "lift",
    "is_design_automorphism",
    "induced_block_permutation",
    "check_theorem2_relation",
    "stabilizer_order",
    "exhaustive_lift_check",
    "encode_graph6",
    "decode_graph6",
    "encode_dimacs",
    "graph_to_json",
    "graph_from_json",
    "design_to_json",
    "design_from_json",
    "incidence_csv",
]

__version__ = "0.1.0"
