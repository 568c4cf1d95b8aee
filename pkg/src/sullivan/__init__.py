"""
Sullivan package: rational models of homotopy fibers, minimization and the
quadratic-differential witness.
"""

from .models import (
    D2Witness,
    NonMinimalModelError,
    NotPureModelError,
    SullivanModel,
    check_d_squared,
    d2_witness,
    d2_witnesses,
    fiber_model,
    minimize,
)

__all__ = [
    "D2Witness",
    "NonMinimalModelError",
    "NotPureModelError",
    "SullivanModel",
    "check_d_squared",
    "d2_witness",
    "d2_witnesses",
    "fiber_model",
    "minimize",
]
