"""Exact models of affine Hecke algebras, their tensor-space bimodule,
and the window modules cut out by multisegments.

All arithmetic is exact: symbolic rational functions of the quantum
parameter by default, plain rationals under a numeric specialization.
The public surface re-exports the working vocabulary; the submodules
hold the detail.
"""

from .combinatorics import (
    Multisegment,
    Permutation,
    Segment,
    compositions,
    dual_partition,
    index_tuples,
    min_coset_reps,
    multisegments_over,
    partitions,
    young_subgroup,
)
from .drinfeld import DominantTuple, g_projection, pa, pa_inverse, tilde
from .errors import DomainError, ResourceLimitError
from .hecke import (
    AffineHeckeElem,
    EvalModuleElem,
    FiniteHeckeElem,
    affine_mul,
    c_element,
    eval_action,
    finite_mul,
    ideal_I,
    ideal_J,
    y_mu,
)
from .linalg import SubspaceBasis
from .scalar import (
    FieldElem,
    QV,
    RationalScalars,
    SymbolicScalars,
    UPoly,
    quantum_binomial,
    quantum_integer,
)
from .schur_functor import (
    PseudoHWReport,
    SpannedModule,
    central_character,
    factorization_check,
    highest_weight_vectors,
    product_drinfeld_check,
    pseudo_hw_report,
    schur_image,
    weight_dimension_report,
)
from .tensor_space import TensorVector, commutation_witness, h_act, u_act, weight_of

__version__ = "0.1.0"

__all__ = [
    "Multisegment",
    "Permutation",
    "Segment",
    "compositions",
    "dual_partition",
    "index_tuples",
    "min_coset_reps",
    "multisegments_over",
    "partitions",
    "young_subgroup",
    "DominantTuple",
    "g_projection",
    "pa",
    "pa_inverse",
    "tilde",
    "DomainError",
    "ResourceLimitError",
    "AffineHeckeElem",
    "EvalModuleElem",
    "FiniteHeckeElem",
    "affine_mul",
    "c_element",
    "eval_action",
    "finite_mul",
    "ideal_I",
    "ideal_J",
    "y_mu",
    "SubspaceBasis",
    "FieldElem",
    "QV",
    "RationalScalars",
    "SymbolicScalars",
    "UPoly",
    "quantum_binomial",
    "quantum_integer",
    "PseudoHWReport",
    "SpannedModule",
    "central_character",
    "factorization_check",
    "highest_weight_vectors",
    "product_drinfeld_check",
    "pseudo_hw_report",
    "schur_image",
    "weight_dimension_report",
    "TensorVector",
    "commutation_witness",
    "h_act",
    "u_act",
    "weight_of",
    "__version__",
]
