"""
Rational Route

Builds the pure Sullivan model of the homotopy fiber, checks d^2 = 0,
minimizes and looks for a generator whose differential has a nonzero
quadratic part. Such a generator detects a nonzero rational Whitehead
product in the space, hence a nonvanishing Samelson product in its loop
space.
"""

import logging
from typing import List, Optional

from families import SpaceSpec
from sullivan import SullivanModel, check_d_squared, d2_witnesses, fiber_model, minimize

from .certificate import (
    Certificate,
    Condition,
    ConditionStatus,
    Verdict,
    consumed_facts,
    finalize,
    new_certificate,
)

LOGGER = logging.getLogger(__name__)

WITNESS_FACTS = ("fht-d2-whitehead", "whitehead-samelson")


class InternalCheckError(RuntimeError):
    """Raised when a constructed model violates d^2 = 0."""


def _fiber_facts(spec: SpaceSpec) -> tuple:
    return tuple(f.id for f in spec.facts if f.role == "fiber-model")


def _checked(model: SullivanModel, stage: str) -> SullivanModel:
    if not check_d_squared(model):
        raise InternalCheckError(f"d^2 != 0 {stage} {model.name}:\n{model.dump_text()}")
    return model


def build_fiber_model(spec: SpaceSpec) -> SullivanModel:
    """The unminimized fiber model of spec; raises InternalCheckError if d^2 != 0."""
    fiber = spec.fiber
    if fiber is None:
        raise ValueError(f"{spec.label} has no fiber data")
    model = fiber_model(fiber.base, fiber.target, fiber.pullback_map, fiber.fiber_name_map, spec.label)
    return _checked(model, "on the fiber model")


def minimal_model(spec: SpaceSpec, reverse_ties: bool = False) -> SullivanModel:
    return _checked(minimize(build_fiber_model(spec), reverse_ties), "after minimizing")


def rational_route(spec: SpaceSpec, reverse_ties: bool = False) -> Certificate:
    """Classify spec through its minimal model."""
    conditions: List[Condition] = []
    fiber_facts = _fiber_facts(spec)
    try:
        model = build_fiber_model(spec)
    except ValueError as exc:
        LOGGER.warning("%s: fiber model could not be built: %s", spec.label, exc)
        conditions.append(Condition("fiber-model", ConditionStatus.FAILED, str(exc), fiber_facts))
        return finalize(new_certificate(
            spec, "rational", verdict=Verdict.INCONCLUSIVE, conditions=tuple(conditions),
            facts=consumed_facts(spec, fiber_facts),
        ))

    odd = sum(1 for g in model.generators if g.is_odd)
    conditions.append(Condition(
        "fiber-model",
        ConditionStatus.CHECKED,
        f"{len(model.generators) - odd} even and {odd} odd generators, d given by the pullback",
        fiber_facts,
    ))
    conditions.append(Condition("d-squared", ConditionStatus.CHECKED, "d(d g) = 0 for every generator"))

    minimal = _checked(minimize(model, reverse_ties), "after minimizing")
    pairs = ", ".join(f"({x}, {z})" for x, z in minimal.eliminated) or "none"
    conditions.append(Condition(
        "minimal", ConditionStatus.CHECKED,
        f"no linear differentials after eliminating {pairs}",
    ))

    witnesses = d2_witnesses(minimal)
    witness: Optional[object] = witnesses[0] if witnesses else None
    if witness is not None:
        conditions.append(Condition(
            "quadratic-part", ConditionStatus.CHECKED,
            f"d {witness.generator.name} has quadratic part {witness.quadratic_part}",
            WITNESS_FACTS,
        ))
        verdict = Verdict.NOT_HOMOTOPY_COMMUTATIVE
    else:
        conditions.append(Condition(
            "quadratic-part", ConditionStatus.FAILED,
            "every differential of the minimal model has zero quadratic part",
        ))
        verdict = Verdict.INCONCLUSIVE

    LOGGER.debug("%s: %d quadratic witnesses", spec.label, len(witnesses))
    cert = new_certificate(
        spec,
        "rational",
        verdict=verdict,
        witness=witness,
        alternates=tuple(w.to_dict() for w in witnesses[1:]),
        conditions=tuple(conditions),
        facts=consumed_facts(spec, fiber_facts + WITNESS_FACTS),
        model=minimal,
    )
    return finalize(cert)
