"""
Criteria package: the decision routes and their certificates.
"""

from .certificate import (
    Certificate,
    Condition,
    ConditionStatus,
    FactWitness,
    NilpotencyBounds,
    SteenrodWitness,
    Verdict,
    finalize,
)
from .classify import classify, classify_all, nilpotency_bounds
from .rational import InternalCheckError, build_fiber_model, minimal_model, rational_route
from .steenrod_route import apply_operation, evaluate_recipe, steenrod_route, suspension_condition

__all__ = [
    "Certificate",
    "Condition",
    "ConditionStatus",
    "FactWitness",
    "NilpotencyBounds",
    "SteenrodWitness",
    "Verdict",
    "finalize",
    "classify",
    "classify_all",
    "nilpotency_bounds",
    "InternalCheckError",
    "build_fiber_model",
    "minimal_model",
    "rational_route",
    "apply_operation",
    "evaluate_recipe",
    "steenrod_route",
    "suspension_condition",
]
