"""Exact computations with parameter arrays of Leonard systems."""
from __future__ import annotations

from .affine import AffineMap, apply, is_affine_isomorphic, solve
from .classify import (CaseTag, brute_force_partition, main_case, pair_self_maps, pair_swap_maps,
                       relative_condition)
from .d4 import D4Element, act, compose, orbit
from .field import QQ, BinaryField, PrimeField, QuadraticExtension, parse_field, solve_quadratic
from .parray import (ParameterArray, ValidationReport, beta_common_value, check_split_equations,
                     validate, vartheta)
from .realize import (a_parameters, primitive_idempotents, recover_split_sequences, split_realize,
                      tridiagonal_check)
from .typefit import (TypeKind, TypeTag, detect_type, fit, generate, predict_case,
                      random_typedata)

__all__ = [
    "AffineMap", "apply", "is_affine_isomorphic", "solve",
    "CaseTag", "brute_force_partition", "main_case", "pair_self_maps", "pair_swap_maps",
    "relative_condition",
    "D4Element", "act", "compose", "orbit",
    "QQ", "BinaryField", "PrimeField", "QuadraticExtension", "parse_field", "solve_quadratic",
    "ParameterArray", "ValidationReport", "beta_common_value", "check_split_equations", "validate",
    "vartheta",
    "a_parameters", "primitive_idempotents", "recover_split_sequences", "split_realize",
    "tridiagonal_check",
    "TypeKind", "TypeTag", "detect_type", "fit", "generate", "predict_case", "random_typedata",
]
