"""Null-space supports and sparsest {-1,0,1} null bases of forests.

The null space of a forest is the kernel of its 0/1 adjacency matrix.  This
package computes, in time proportional to input plus output size: a maximum
matching, the set of vertices carrying a nonzero of some null vector, a
{-1,0,1} null basis, and a provably sparsest {-1,0,1} null basis, together
with exact-arithmetic oracles that certify all of it on small instances.

Hot loops run in a compiled extension when available and fall back to pure
Python otherwise; see :mod:`nullforest._backend`.
"""

from ._backend import available_backends, backend_name, set_backend
from .errors import (
    CycleError,
    DuplicateEdgeError,
    InternalError,
    InvalidRootError,
    InvalidSpecError,
    NotInSupportError,
    NotMaximumError,
    NullForestError,
    ParseError,
    SelfLoopError,
    SizeLimitError,
)
from .forest import (
    Forest,
    RootedForest,
    components,
    format_forest,
    parse_forest,
    root_at,
)
from .generators import FAMILIES, GenSpec, SplitMix64, generate
from .matching import Matching, has_augmenting_path, maximum_matching, nullity
from .nullspace import (
    AltDigraph,
    NullBasis,
    SparseVector,
    build_alternating_digraph,
    null_basis,
    support_set,
)
from .oracle import (
    RationalMatrix,
    VerificationReport,
    adjacency_matrix,
    min_weight,
    null_dimension,
    sparsest_total_oracle,
    support_oracle,
    verify_basis,
)
from .sparsest import (
    SupportForest,
    SupportWeights,
    WeightMatching,
    build_support_forest,
    compute_weights,
    sparsest_basis,
    sparsest_nnz_count,
    weight_matching,
)

__version__ = "0.1.0"

__all__ = [
    "AltDigraph",
    "CycleError",
    "DuplicateEdgeError",
    "FAMILIES",
    "Forest",
    "GenSpec",
    "InternalError",
    "InvalidRootError",
    "InvalidSpecError",
    "Matching",
    "NotInSupportError",
    "NotMaximumError",
    "NullBasis",
    "NullForestError",
    "ParseError",
    "RationalMatrix",
    "RootedForest",
    "SelfLoopError",
    "SizeLimitError",
    "SparseVector",
    "SplitMix64",
    "SupportForest",
    "SupportWeights",
    "VerificationReport",
    "WeightMatching",
    "adjacency_matrix",
    "available_backends",
    "backend_name",
    "build_alternating_digraph",
    "build_support_forest",
    "components",
    "compute_weights",
    "format_forest",
    "generate",
    "has_augmenting_path",
    "maximum_matching",
    "min_weight",
    "null_basis",
    "null_dimension",
    "nullity",
    "parse_forest",
    "root_at",
    "set_backend",
    "sparsest_basis",
    "sparsest_nnz_count",
    "sparsest_total_oracle",
    "support_oracle",
    "support_set",
    "verify_basis",
    "weight_matching",
]
