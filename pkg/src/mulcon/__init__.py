"""Multiplication-contraction maps on bigraded symmetric tensors.

Exact matrices for S^r V (x) S^t W* -> S^(r+a) V (x) S^(t-b) W*, generic
maximal-rank certificates over prime fields, and cohomology of line
bundles on curves of type (a, b) in P^1 x P^1.
"""

__version__ = "0.1.0"

from .basis import BasisIndexer, BiMonomial, ExponentVector, dimension, index_of, monomial_at
from .certify import Certificate, generic_rank_certificate, target_rank
from .cohomology import (
    CohomologyResult,
    check_theorem,
    h0_h1,
    h0_h1_routed,
    make_curve,
    serre_dual,
    swap_rulings,
)
from .exceptions import DomainError, PreconditionError
from .fields import DEFAULT_PRIME, ESCALATION_PRIME, QQ, FieldDescriptor
from .forms import (
    BiForm,
    QPoint,
    build_diff_matrix,
    build_mulcon_matrix,
    evaluation_matrix,
    grid_curve_form,
    multiply_biforms,
    random_biform,
    smoothness_certificate,
    substitute_linear,
)
from .grid import (
    BipartiteGraph,
    Grid,
    ZSubset,
    bipartite_graph,
    construct_Z,
    grid_points_minus,
    verify_Z,
)
from .linalg import cokernel_dim, is_maximal_rank, kernel_dim, rank
from .matrix import MapMatrix
from .reduction import (
    Decomposition,
    ReductionResult,
    classify,
    critical_band,
    decompose,
    degree,
    genus,
    recompose,
)
