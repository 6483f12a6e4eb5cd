"""Quantum codes from quaternary cyclic, duadic and quadratic-residue codes.

The package builds 0-dimensional binary quantum codes (equivalently,
Hermitian self-dual linear codes over the 4-element field) and certifies
minimum-distance bounds: exactly at desk scale by packed Gray-walk
enumeration, and by honest intervals beyond the enumeration budget.

Hot kernels run under numba by default; set DUADIQ_BACKEND=numpy to force
the pure-numpy fallback (same results, compared in bench/bench_kernels.py).
"""

from ._kernels import active_backend
from .cyclic import (
    CosetPartition,
    CyclicCode,
    DefiningSet,
    all_cosets,
    apply_multiplier,
    apply_multiplier_set,
    cyclotomic_coset,
    dual_defining_set,
    is_dual_containing,
    near_orthogonality,
)
from .distance import (
    DistanceBound,
    binary_shadow_distance,
    compose_bounds,
    default_budget,
    duadic_distances,
    fixed_subcode,
    fixed_subcode_coincidence,
    fixed_subcode_lower_bound,
    min_distance_exact,
    min_weight_difference,
    square_root_bounds,
    weight_distribution,
)
from .duadic import (
    DuadicPair,
    Splitting,
    duadic_from_splitting,
    find_splittings,
    is_self_orthogonal_even_duadic,
    qr_splitting,
    splitting_predictions,
    verify_duadic_properties,
)
from .errors import (
    BudgetExceededError,
    DuadiqError,
    InputError,
    InvariantError,
    NotApplicableError,
)
from .extfield import ExtField, ext_build, minimal_poly
from .quantum import (
    Annotation,
    QuantumParams,
    SelfDualCode,
    binary_cyclic_quantum,
    cyclic_zero_dim,
    dual_containing_to_zero_dim,
    extend_nearly_self_orthogonal,
    extended_duadic_quantum,
    general_zero_dim,
    load_annotations,
    params_from_annotation,
    qr_quantum_refinements,
    quantum_from_dual_containing,
    secondary_chain,
    secondary_constructions,
    zero_dim_from_classical_annotation,
)

__version__ = "0.1.0"

__all__ = [
    "active_backend",
    "all_cosets",
    "apply_multiplier",
    "apply_multiplier_set",
    "binary_cyclic_quantum",
    "binary_shadow_distance",
    "compose_bounds",
    "cyclic_zero_dim",
    "cyclotomic_coset",
    "default_budget",
    "duadic_distances",
    "duadic_from_splitting",
    "dual_containing_to_zero_dim",
    "dual_defining_set",
    "ext_build",
    "extend_nearly_self_orthogonal",
    "extended_duadic_quantum",
    "find_splittings",
    "fixed_subcode",
    "fixed_subcode_coincidence",
    "fixed_subcode_lower_bound",
    "general_zero_dim",
    "is_dual_containing",
    "is_self_orthogonal_even_duadic",
    "load_annotations",
    "min_distance_exact",
    "min_weight_difference",
    "minimal_poly",
    "near_orthogonality",
    "params_from_annotation",
    "qr_quantum_refinements",
    "qr_splitting",
    "quantum_from_dual_containing",
    "secondary_chain",
    "secondary_constructions",
    "splitting_predictions",
    "square_root_bounds",
    "verify_duadic_properties",
    "weight_distribution",
    "zero_dim_from_classical_annotation",
    "Annotation",
    "BudgetExceededError",
    "CosetPartition",
    "CyclicCode",
    "DefiningSet",
    "DistanceBound",
    "DuadicPair",
    "DuadiqError",
    "ExtField",
    "InputError",
    "InvariantError",
    "NotApplicableError",
    "QuantumParams",
    "SelfDualCode",
    "Splitting",
]
