"""Exact curve-class computations on M_{0,n}-bar: F-curves, invariant curves,
effective-expression search and Losev-Manin degenerations."""

from .core import (
    BoundaryDivisor,
    CurveClass,
    DivisorClass,
    FCurve,
    FCurveExpression,
    KeelRelation,
    act,
    all_divisors,
    canonical_divisor,
    canonical_divisor_rep,
    class_of_expression,
    cyclic_component_count,
    dual_curve,
    expand_in_dual_basis,
    forgetful_degree,
    keel_relation_expression,
    nonadjacent_basis,
    pair_divisor_fcurve,
    psi_divisor,
    total_boundary,
)
from .permutations import Permutation, parse_permutation

__version__ = "0.1.0"
