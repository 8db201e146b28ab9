"""Kulkarni limit sets of real hyperbolic groups SO+(m,1) acting on P_C^n.

Points are classified pointwise into the limit set Lambda or its complement
Omega; see ``classify``.  Submodules:

- ``hermitian``: the form of signature (n,1), Sylvester types, the invariant f
- ``projective``: canonical representatives, tangent hyperplanes, Q_m
- ``limit_set``: region labels and the U_0/U_+/U_- partition
- ``fibration``: the projection Pi onto H_R^n, Lorentz matrices, embeddings
- ``census``/``raster``/``verify``: Monte Carlo census, slice images, property suite
"""
from .fibration import (
    DomainError,
    IsometryMatrix,
    adapted_basis,
    eta,
    fiber_point,
    hyp_matrix,
    iota_embed,
    pi_projection,
    pi_tilde,
    random_isometry,
)
from .hermitian import (
    DEFAULT_TOL,
    DimensionError,
    SpanClass,
    VectorClass,
    classify_vector,
    conj_dependent,
    f_value,
    gram2,
    herm_inner,
    span_class_det,
    span_class_eig,
)
from .limit_set import (
    DegenerateDeterminantError,
    PartitionLabel,
    RegionLabel,
    classify,
    classify_batch,
    omega2_component,
    partition_label,
)
from .projective import (
    Lambda0Error,
    ProjectivePoint,
    RealIntersectionKind,
    hyperplane_of,
    normalize,
    q_project,
    real_intersection_kind,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_TOL",
    "DegenerateDeterminantError",
    "DimensionError",
    "DomainError",
    "IsometryMatrix",
    "Lambda0Error",
    "PartitionLabel",
    "ProjectivePoint",
    "RealIntersectionKind",
    "RegionLabel",
    "SpanClass",
    "VectorClass",
    "adapted_basis",
    "classify",
    "classify_batch",
    "classify_vector",
    "conj_dependent",
    "eta",
    "f_value",
    "fiber_point",
    "gram2",
    "herm_inner",
    "hyp_matrix",
    "hyperplane_of",
    "iota_embed",
    "normalize",
    "omega2_component",
    "partition_label",
    "pi_projection",
    "pi_tilde",
    "q_project",
    "random_isometry",
    "real_intersection_kind",
    "span_class_det",
    "span_class_eig",
]
