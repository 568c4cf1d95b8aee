"""
Complex Grassmannians (AIII)

G_{m,n} = U(m+n)/U(m)xU(n), normalized to m <= n. The criterion is checked
in H*(BU(m); F_p) and carried to G_{m,n} through the (2m+1)-equivalence
G_{m,n} -> BU(m), whose lifting steps are certified facts. For m = 2 the
witness is Sq^2 c_2 = c_1 c_2; for m >= 3 it is P^1 c_{m-p+2} for a prime
p in (m/2, m] not dividing m+1.
"""

import dataclasses
from typing import Dict, List, Optional, Tuple

from algebra import GF
from primes import choose_p
from steenrod import SteenrodOperation

from .base import BaseFamily
from .catalog import Family, Route, SpaceSpec, SphericalClass, SteenrodRecipe
from .cpn import cpn_verdict
from .rings import bu_ring, grassmannian_ring

LIFTING_FACTS = ("grassmannian-equivalence", "grassmannian-lift", "whitehead-naturality")


def _sphere(i: int) -> SphericalClass:
    return SphericalClass(f"c_{i}", f"S^{2 * i}", (2 * i,), ("spherical-chern",), chern_index=i)


def chern_recipe(m: int, p: int, degree_bound: int) -> SteenrodRecipe:
    """
    (x, theta, a, b) on BU(m): (c_2, Sq^2, c_1, c_2) at p = 2, otherwise
    (c_{m-p+2}, P^1, c_k, c_{m-k+1}) with k = ceil(m/2).
    """
    ring = bu_ring(m, GF(p), degree_bound)
    if p == 2:
        if m != 2:
            raise ValueError(f"The mod 2 recipe is only used for m = 2, got m = {m}")
        return SteenrodRecipe(
            ring, SteenrodOperation(2, 2), "c_2", _sphere(1), _sphere(2),
            facts=LIFTING_FACTS, label="p=2: Sq^2 c_2",
        )
    # Odd m gives a = b = c_k, and mod p the coefficient of the square c_k^2
    # is -(m+1)/2, not the -(m+1) carried by the cross term c_k c_{m-k+1} for
    # even m. Both are units since p is odd and does not divide m+1.
    k = (m + 1) // 2
    j = m - p + 2
    return SteenrodRecipe(
        ring, SteenrodOperation(p, 1), f"c_{j}", _sphere(k), _sphere(m - k + 1),
        facts=LIFTING_FACTS, label=f"p={p}: P^1 c_{j}",
    )


class AIIIFamily(BaseFamily):
    """Complex Grassmannians G_{m,n}."""

    @property
    def family(self) -> Family:
        return Family.AIII

    @property
    def route(self) -> Route:
        return Route.STEENROD

    @property
    def parameter_names(self) -> Tuple[str, ...]:
        return ("m", "n")

    def enumerate(self, max_param: int) -> List[Dict[str, object]]:
        return [{"m": m, "n": n} for m in range(2, max_param + 1) for n in range(m, max_param + 1)]

    def expected_verdict(self, params) -> str:
        m, n = sorted((params["m"], params["n"]))
        return cpn_verdict(n) if m == 1 else "NotHomotopyCommutative"

    def space(self, degree_bound: Optional[int] = None, **params) -> SpaceSpec:
        clean = self.validate(**params)
        m, n = clean["m"], clean["n"]
        if m <= n:
            return self.build(clean, degree_bound)
        spec = self.build({"m": n, "n": m}, degree_bound)
        symmetry = self.catalog.fact("grassmannian-symmetry")
        facts = spec.facts if symmetry in spec.facts else spec.facts + (symmetry,)
        note = f"G_({m},{n}) is identified with G_({n},{m})"
        return dataclasses.replace(spec, facts=facts, notes=(note,) + spec.notes)

    def build(self, params: Dict[str, object], degree_bound: Optional[int] = None) -> SpaceSpec:
        m, n = params["m"], params["n"]
        if m > n:
            raise ValueError(f"build expects m <= n, got ({m}, {n})")
        label = self.label(params)
        title = f"U({m + n})/U({m})xU({n})"
        if m == 1:
            cp = self.catalog.family(Family.CPN.value).build({"n": n}, degree_bound)
            return dataclasses.replace(
                cp,
                family=Family.AIII,
                params=(("m", 1), ("n", n)),
                label=label,
                title=title,
                notes=(f"G_(1,{n}) = CP^{n}",) + cp.notes,
            )

        bound = self.bound(2 * (m + 1), degree_bound)
        notes: List[str] = []
        if m == 2:
            recipe = chern_recipe(2, 2, bound)
        else:
            choice = choose_p(m, self.catalog.prime_cap)
            alternates = tuple(chern_recipe(m, q, bound) for q in choice.alternates)
            recipe = dataclasses.replace(chern_recipe(m, choice.p, bound), alternates=alternates)
            notes.append(f"p = {choice.p} is the largest odd prime in ({m}/2, {m}] and does not divide {m + 1}")
        presentations = (recipe.ring, grassmannian_ring(m, n, recipe.ring.field, 2 * m))
        return SpaceSpec(
            family=Family.AIII,
            params=(("m", m), ("n", n)),
            label=label,
            title=title,
            route=Route.STEENROD,
            presentations=presentations,
            steenrod=recipe,
            facts=self.facts(),
            notes=tuple(notes),
        )
