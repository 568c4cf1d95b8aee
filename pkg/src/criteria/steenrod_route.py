"""
Steenrod Route

Checks the four conditions of the Steenrod-operation criterion for a pair
of maps alpha: A -> X, beta: B -> X from suspensions and an operation theta
with theta(x) containing the product a b:

  1. alpha*(a) != 0, beta*(b) != 0, and alpha*(b) = 0 or beta*(a) = 0
     (for odd p with |a| = |b|: a = b and alpha = beta).
  2. theta(x) is decomposable and its normal form contains a b, with a b != 0.
  3. a and b are indecomposable and span QH in their degrees.
  4. theta vanishes on H~*(A x B).

When all hold, the Samelson product of the adjoints of alpha and beta is
nonzero and the loop space is not homotopy commutative.
"""

import dataclasses
import logging
from math import factorial
from typing import Dict, List, Optional, Tuple

from algebra import DegreeBoundError
from families import SpaceSpec, SphericalClass, SteenrodRecipe
from steenrod import InsufficientDataError, SteenrodExpansion, power_op_on_chern, table_apply

from .certificate import (
    Certificate,
    Condition,
    ConditionStatus,
    SteenrodWitness,
    Verdict,
    consumed_facts,
    fact_certificate,
    finalize,
    first_failure,
    new_certificate,
)

LOGGER = logging.getLogger(__name__)

ROUTE_FACTS = ("steenrod-criterion", "whitehead-samelson")


# ---------------------------------------------------------------------- #
#  Individual conditions                                                   #
# ---------------------------------------------------------------------- #

def spherical_condition(condition_id: str, cls: SphericalClass, p: int) -> Condition:
    """
    alpha*(a) != 0. A Chern class c_i is detected by S^{2i} -> BU(m) mod p
    exactly when (i-1)! is invertible mod p, i.e. i <= p.
    """
    if cls.chern_index is not None:
        i = cls.chern_index
        residue = factorial(i - 1) % p
        if i <= p and residue:
            return Condition(
                condition_id, ConditionStatus.CHECKED,
                f"{cls.name} on {cls.source}: ({i}-1)! = {residue} mod {p} is a unit", cls.facts,
            )
        return Condition(
            condition_id, ConditionStatus.FAILED,
            f"{cls.name} on {cls.source}: ({i}-1)! = 0 mod {p}, the class is not spherical", cls.facts,
        )
    if not cls.facts:
        return Condition(condition_id, ConditionStatus.UNAVAILABLE, f"no fact makes {cls.name} spherical")
    return Condition(
        condition_id, ConditionStatus.CERTIFIED_FACT, f"{cls.name} is detected by {cls.source}", cls.facts,
    )


def vanishing_condition(recipe: SteenrodRecipe, a_degree: int, b_degree: int) -> Condition:
    """alpha*(b) = 0 or beta*(a) = 0, or the odd-primary diagonal case."""
    alpha, beta, p = recipe.alpha, recipe.beta, recipe.prime
    if p == 2:
        if b_degree not in alpha.cells:
            return Condition(
                "condition-1", ConditionStatus.CHECKED,
                f"alpha*({beta.name}) = 0: {alpha.source} has no cell in degree {b_degree}",
            )
        if a_degree not in beta.cells:
            return Condition(
                "condition-1", ConditionStatus.CHECKED,
                f"beta*({alpha.name}) = 0: {beta.source} has no cell in degree {a_degree}",
            )
        return Condition(
            "condition-1", ConditionStatus.UNAVAILABLE,
            f"both {alpha.source} and {beta.source} have cells in degrees {a_degree} and {b_degree}",
        )
    if a_degree == b_degree:
        if alpha.name == beta.name and alpha.source == beta.source:
            return Condition(
                "condition-1", ConditionStatus.CHECKED,
                f"a = b = {alpha.name} and alpha = beta on {alpha.source}",
            )
        return Condition(
            "condition-1", ConditionStatus.FAILED,
            f"|a| = |b| = {a_degree} at odd p needs a = b and alpha = beta",
        )
    return Condition(
        "condition-1", ConditionStatus.CHECKED,
        f"|a| = {a_degree} != |b| = {b_degree}: alpha*(a) and beta*(b) nonzero suffice at p = {p}",
    )


def _part_vanishes(cells: Tuple[int, ...], j: int, p: int) -> bool:
    """theta^j is zero on the reduced cohomology of a suspension with these cells."""
    if j == 0:
        return False
    shift = j if p == 2 else 2 * j * (p - 1)
    for d in cells:
        unstable = j > d if p == 2 else 2 * j > d
        top = j == d if p == 2 else 2 * j == d
        # top powers are cup powers, zero in a suspension
        if not (unstable or top or d + shift not in cells):
            return False
    return True


def suspension_condition(recipe: SteenrodRecipe) -> Condition:
    """theta vanishes on H~*(A x B) by the Cartan formula, split by split."""
    op, p = recipe.operation, recipe.prime
    splits = []
    for i in range(op.index + 1):
        j = op.index - i
        if _part_vanishes(recipe.alpha.cells, i, p):
            splits.append(f"({i},{j}): zero on {recipe.alpha.source}")
        elif _part_vanishes(recipe.beta.cells, j, p):
            splits.append(f"({i},{j}): zero on {recipe.beta.source}")
        else:
            return Condition(
                "condition-4", ConditionStatus.UNAVAILABLE,
                f"cannot show the ({i},{j}) part of {op.label} vanishes on "
                f"{recipe.alpha.source} x {recipe.beta.source}",
            )
    return Condition("condition-4", ConditionStatus.CHECKED, "; ".join(splits))


def apply_operation(recipe: SteenrodRecipe) -> SteenrodExpansion:
    """theta(x), from the table when there is one, else by the splitting principle."""
    ring, op = recipe.ring, recipe.operation
    x = ring.gen(recipe.x)
    if recipe.table is not None:
        return table_apply(recipe.table, op, x)
    # chern rings list c_1..c_m in order
    j = ring.algebra.index(recipe.x) + 1
    m = len(ring.generators)
    k = op.index // 2 if op.prime == 2 else op.index
    expansion = power_op_on_chern(m, op.prime, k, j)
    return SteenrodExpansion(x, op, ring.normal_form(expansion.result))


# ---------------------------------------------------------------------- #
#  Recipe evaluation                                                       #
# ---------------------------------------------------------------------- #

def evaluate_recipe(recipe: SteenrodRecipe) -> Tuple[List[Condition], Optional[SteenrodWitness]]:
    """The six checklist items for one recipe, and the witness if theta(x) has the term a b."""
    ring, p = recipe.ring, recipe.prime
    a, b = ring.gen(recipe.alpha.name), ring.gen(recipe.beta.name)
    conditions = [
        spherical_condition("spherical-a", recipe.alpha, p),
        spherical_condition("spherical-b", recipe.beta, p),
        vanishing_condition(recipe, a.degree, b.degree),
    ]

    witness = None
    try:
        expansion = apply_operation(recipe)
        decomposable = _decomposable_condition(recipe, expansion, a, b)
    except (InsufficientDataError, DegreeBoundError) as exc:
        conditions.append(Condition("condition-2", ConditionStatus.UNAVAILABLE, str(exc)))
    else:
        conditions.append(decomposable)
        if decomposable.ok:
            ab = a * b
            witness = SteenrodWitness(
                label=recipe.label,
                expansion=expansion,
                a=recipe.alpha.name,
                b=recipe.beta.name,
                term=str(ab),
                coefficient=str(expansion.coefficient(ab)),
                degree_a=a.degree,
                degree_b=b.degree,
            )

    try:
        dims = (ring.indecomposables_dim(a.degree), ring.indecomposables_dim(b.degree))
    except DegreeBoundError as exc:
        conditions.append(Condition("condition-3", ConditionStatus.UNAVAILABLE, str(exc)))
    else:
        status = ConditionStatus.CHECKED if dims == (1, 1) else ConditionStatus.FAILED
        conditions.append(Condition(
            "condition-3", status, f"dim QH^{a.degree} = {dims[0]}, dim QH^{b.degree} = {dims[1]}",
        ))

    conditions.append(suspension_condition(recipe))
    LOGGER.debug("%s: %s", recipe.label, ", ".join(f"{c.id}={c.status.value}" for c in conditions))
    return conditions, witness


def _decomposable_condition(recipe: SteenrodRecipe, expansion: SteenrodExpansion, a, b) -> Condition:
    ring = recipe.ring
    facts = recipe.facts if recipe.table is not None else ()
    if not expansion.is_decomposable:
        return Condition(
            "condition-2", ConditionStatus.FAILED, f"{expansion.describe()} is not decomposable", facts,
        )
    ab = a * b
    if not ring.is_nonzero(ab):
        return Condition("condition-2", ConditionStatus.FAILED, f"{ab} = 0 in {ring.name}", facts)
    if ring.normal_form(ab) != ab:
        return Condition(
            "condition-2", ConditionStatus.UNAVAILABLE, f"{ab} is not a normal-form monomial of {ring.name}", facts,
        )
    coefficient = expansion.coefficient(ab)
    if not coefficient:
        return Condition(
            "condition-2", ConditionStatus.FAILED, f"{expansion.describe()} has no {ab} term", facts,
        )
    return Condition(
        "condition-2", ConditionStatus.CHECKED,
        f"{expansion.describe()}; coefficient of {ab} is {coefficient} mod {recipe.prime}",
        facts,
    )


def alternate_summary(recipe: SteenrodRecipe) -> Dict[str, object]:
    conditions, witness = evaluate_recipe(recipe)
    failed = first_failure(conditions)
    return {
        "kind": "steenrod-recipe",
        "label": recipe.label,
        "holds": failed is None and witness is not None,
        "failed_condition": failed,
        "witness": witness.to_dict() if witness is not None else None,
    }


def steenrod_route(spec: SpaceSpec) -> Certificate:
    """Classify spec through its Steenrod recipe, or through its known result when it has one."""
    recipe = spec.steenrod
    if spec.known is not None:
        cert = fact_certificate(spec, "steenrod")
        if recipe is not None:
            cert = dataclasses.replace(cert, alternates=cert.alternates + (alternate_summary(recipe),))
        return finalize(cert)

    if recipe is None:
        condition = Condition("condition-2", ConditionStatus.UNAVAILABLE, f"no Steenrod data for {spec.label}")
        return finalize(new_certificate(spec, "steenrod", verdict=Verdict.INCONCLUSIVE, conditions=(condition,)))

    conditions, witness = evaluate_recipe(recipe)
    failed = first_failure(conditions)
    verdict = Verdict.NOT_HOMOTOPY_COMMUTATIVE if failed is None and witness is not None else Verdict.INCONCLUSIVE
    fact_ids = ROUTE_FACTS + tuple(f for c in conditions for f in c.facts) + recipe.facts
    cert = new_certificate(
        spec,
        "steenrod",
        verdict=verdict,
        witness=witness,
        alternates=tuple(alternate_summary(alt) for alt in recipe.alternates),
        conditions=tuple(conditions),
        facts=consumed_facts(spec, fact_ids),
        failed_condition=failed,
    )
    return finalize(cert)

