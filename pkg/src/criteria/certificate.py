"""
Certificate Module

Structured verdict traces. A certificate records the route taken, the
witness, every condition with its status, the facts consumed, optional
homotopy-nilpotency bounds and any catalog repairs. finalize is the single
soundness gate every route passes its certificate through.
"""

import dataclasses
import json
import logging
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Optional, Tuple

from families import Fact, Repair, SpaceSpec
from steenrod import SteenrodExpansion
from sullivan import SullivanModel

LOGGER = logging.getLogger(__name__)


class Verdict(str, Enum):
    NOT_HOMOTOPY_COMMUTATIVE = "NotHomotopyCommutative"
    HOMOTOPY_COMMUTATIVE = "HomotopyCommutative"
    INCONCLUSIVE = "Inconclusive"


class ConditionStatus(str, Enum):
    CHECKED = "checked"
    CERTIFIED_FACT = "certified-fact"
    FAILED = "failed"
    UNAVAILABLE = "unavailable"


@dataclass(frozen=True)
class Condition:
    """
    One checklist item.

    Attributes:
        id: e.g. 'condition-2' or 'quadratic-part'.
        status: checked, certified-fact, failed or unavailable.
        detail: What was verified, or why it could not be.
        facts: Fact ids the item relies on.
    """
    id: str
    status: ConditionStatus
    detail: str
    facts: Tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        if self.status is ConditionStatus.CHECKED:
            return True
        return self.status is ConditionStatus.CERTIFIED_FACT and bool(self.facts)

    def to_dict(self) -> Dict[str, object]:
        return {"id": self.id, "status": self.status.value, "detail": self.detail, "facts": list(self.facts)}


@dataclass(frozen=True)
class SteenrodWitness:
    """
    theta(x) containing the term a b.

    Attributes:
        label: Recipe label, e.g. 'p=2: Sq^2 c_2'.
        expansion: theta(x) in normal form.
        a, b: Generator names of the spherical classes.
        term: The product a b as printed.
        coefficient: Coefficient of a b in theta(x), in F_p.
        degree_a, degree_b: |a| and |b|.
    """
    label: str
    expansion: SteenrodExpansion
    a: str
    b: str
    term: str
    coefficient: str
    degree_a: int
    degree_b: int

    def to_dict(self) -> Dict[str, object]:
        return {
            "kind": "steenrod",
            "label": self.label,
            "prime": self.expansion.operation.prime,
            "operation": self.expansion.operation.label,
            "x": str(self.expansion.x),
            "expansion": self.expansion.describe(),
            "a": self.a,
            "b": self.b,
            "term": self.term,
            "coefficient": self.coefficient,
            "degrees": [self.degree_a, self.degree_b],
        }


@dataclass(frozen=True)
class FactWitness:
    """A verdict resting on literature facts."""
    facts: Tuple[str, ...]
    reasoning: Tuple[str, ...]

    def to_dict(self) -> Dict[str, object]:
        return {"kind": "fact", "facts": list(self.facts), "reasoning": list(self.reasoning)}


@dataclass(frozen=True)
class NilpotencyBounds:
    lower: int
    upper: int
    justification: Tuple[str, ...]

    def to_dict(self) -> Dict[str, object]:
        return {"lower": self.lower, "upper": self.upper, "justification": list(self.justification)}


# ---------------------------------------------------------------------- #
#  Certificate                                                             #
# ---------------------------------------------------------------------- #

@dataclass(frozen=True)
class Certificate:
    """
    The outcome of classifying one space.

    Attributes:
        space: Space label, e.g. 'CI(5)'.
        family: Family name.
        parameters: (name, value) pairs.
        title: Homogeneous-space description.
        verdict: The verdict after the soundness gate.
        route: Route that produced the verdict.
        witness: D2Witness, SteenrodWitness or FactWitness.
        alternates: Other witnesses or route summaries, as plain dicts.
        conditions: The checklist.
        facts: Facts consumed, in catalog order.
        nilpotency: Homotopy-nilpotency bounds (flag manifolds only).
        repairs: Catalog repairs applied to the input data.
        notes: Normalizations and remarks.
        failed_condition: First failed or unavailable item of an Inconclusive verdict.
        expected: Verdict the literature predicts.
        model: Minimal model, when the rational route ran.
    """
    space: str
    family: str
    parameters: Tuple[Tuple[str, object], ...]
    title: str
    verdict: Verdict
    route: str
    witness: Optional[object] = None
    alternates: Tuple[Dict[str, object], ...] = ()
    conditions: Tuple[Condition, ...] = ()
    facts: Tuple[Fact, ...] = ()
    nilpotency: Optional[NilpotencyBounds] = None
    repairs: Tuple[Repair, ...] = ()
    notes: Tuple[str, ...] = ()
    failed_condition: Optional[str] = None
    expected: str = Verdict.NOT_HOMOTOPY_COMMUTATIVE.value
    model: Optional[SullivanModel] = None

    @property
    def definitive(self) -> bool:
        return self.verdict is not Verdict.INCONCLUSIVE

    @property
    def as_expected(self) -> bool:
        return self.verdict.value == self.expected

    def condition(self, condition_id: str) -> Optional[Condition]:
        for c in self.conditions:
            if c.id == condition_id:
                return c
        return None

    def to_dict(self) -> Dict[str, object]:
        return {
            "space": self.space,
            "family": self.family,
            "parameters": {k: v for k, v in self.parameters},
            "title": self.title,
            "verdict": self.verdict.value,
            "route": self.route,
            "witness": self.witness.to_dict() if self.witness is not None else None,
            "alternates": list(self.alternates),
            "conditions": [c.to_dict() for c in self.conditions],
            "facts": [f.to_dict() for f in self.facts],
            "nilpotency": self.nilpotency.to_dict() if self.nilpotency else None,
            "repairs": [r.to_dict() for r in self.repairs],
            "notes": list(self.notes),
            "failed_condition": self.failed_condition,
            "expected": self.expected,
            "model": self.model.to_dict() if self.model is not None else None,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def new_certificate(spec: SpaceSpec, route: str, **fields) -> Certificate:
    """A certificate pre-filled with the identity fields of spec."""
    return Certificate(
        space=spec.label,
        family=spec.family.value,
        parameters=spec.params,
        title=spec.title,
        route=route,
        repairs=spec.repairs,
        notes=spec.notes,
        expected=spec.expected,
        **fields,
    )


def consumed_facts(spec: SpaceSpec, ids: Iterable[str]) -> Tuple[Fact, ...]:
    """The facts of spec named in ids, in catalog order."""
    wanted = set(ids)
    missing = wanted - {f.id for f in spec.facts}
    if missing:
        raise KeyError(f"{spec.label} does not carry fact(s) {', '.join(sorted(missing))}")
    return tuple(f for f in spec.facts if f.id in wanted)


def first_failure(conditions: Iterable[Condition]) -> Optional[str]:
    for c in conditions:
        if not c.ok:
            return c.id
    return None


def finalize(cert: Certificate) -> Certificate:
    """
    Enforce the soundness gate: a definitive verdict survives only with a
    witness and every condition checked or backed by a consumed fact.
    Anything else becomes Inconclusive naming the first offending item.
    """
    if cert.verdict is Verdict.INCONCLUSIVE:
        failed = cert.failed_condition or first_failure(cert.conditions) or "witness"
        return dataclasses.replace(cert, failed_condition=failed)

    failed = first_failure(cert.conditions)
    if failed is None and cert.witness is None:
        failed = "witness"
    if failed is None:
        known = {f.id for f in cert.facts}
        for c in cert.conditions:
            if c.status is ConditionStatus.CERTIFIED_FACT and not set(c.facts) <= known:
                failed = c.id
                break
    if failed is not None:
        LOGGER.warning("%s: %s downgraded to Inconclusive at %s", cert.space, cert.verdict.value, failed)
        return dataclasses.replace(cert, verdict=Verdict.INCONCLUSIVE, failed_condition=failed)
    return dataclasses.replace(cert, failed_condition=None)


def fact_certificate(spec: SpaceSpec, route: str) -> Certificate:
    """Certificate for a verdict taken from spec.known."""
    known = spec.known
    if known is None:
        raise ValueError(f"{spec.label} has no known result")
    condition = Condition(
        "known-result", ConditionStatus.CERTIFIED_FACT, "; ".join(known.reasoning), tuple(known.facts)
    )
    return new_certificate(
        spec,
        route,
        verdict=Verdict(known.verdict),
        witness=FactWitness(tuple(known.facts), tuple(known.reasoning)),
        conditions=(condition,),
        facts=consumed_facts(spec, known.facts),
    )


def sorted_certificates(certs: Iterable[Certificate], order: List[str]) -> List[Certificate]:
    """Certificates ordered like the space labels in order."""
    rank = {label: i for i, label in enumerate(order)}
    return sorted(certs, key=lambda c: rank.get(c.space, len(rank)))
