"""Exact calculator for generalized gradients and their conformal weights."""

from .casimir import (
    ConformalWeight, casimir_normalized, casimir_number, closed_form, conformal_weight,
    conformal_weight_closed, ordering_check,
)
from .catalog import NamedOperator, adjoint, laplacian_sweep, lookup, second_order_invariant
from .dominance import DominantWeight, certify, dominant_sweep, is_dominant
from .errors import (
    GroupError, InternalInconsistency, NotDominant, NotRelevant, OutOfRange, WeightFormatError,
    WeightLengthError, WrongGroup,
)
from .oracle import (
    SignedWeight, reflect_to_dominant, tensor_decompose_oracle, weight_operator_eigenvalues_forms,
    weyl_dim,
)
from .selection import Decomposition, GradientTarget, decompose, relevant_weights, split_holomorphic
from .weight_space import GroupDescriptor, GroupId, descriptor, inner, parse_weight, weight
