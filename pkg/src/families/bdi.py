"""
Complex Quadrics (BDI)

Q_n = SO(n+2)/SO(2)xSO(n). For odd n = 2m - 1 the mod 2 cohomology is
F_2[t, e]/(t^m, e^2) with Sq^2 e = t e, and the criterion applies to
alpha: S^2 -> Q_n (t) and beta: SigmaB -> Q_n (e), B = S^{n-1} u_2 e^n.
When n + 1 is a power of 2 that is the certificate; otherwise the
Whitehead square of the fibre inclusion is already known to be non-trivial.
"""

from typing import Dict, List, Optional, Tuple

from steenrod import SteenrodOperation

from .base import BaseFamily
from .catalog import Family, KnownResult, Route, SpaceSpec, SphericalClass, SteenrodRecipe, table_from_data
from .rings import quadric_ring

KNOWN_FACTS = ("oshima-whitehead-square", "bdi-projection", "whitehead-samelson")


def is_power_of_two(k: int) -> bool:
    return k > 0 and k & (k - 1) == 0


class BDIFamily(BaseFamily):
    """Complex quadrics Q_n."""

    @property
    def family(self) -> Family:
        return Family.BDI

    @property
    def route(self) -> Route:
        return Route.STEENROD

    @property
    def parameter_names(self) -> Tuple[str, ...]:
        return ("n",)

    def enumerate(self, max_param: int) -> List[Dict[str, object]]:
        return [{"n": n} for n in range(3, max_param + 1)]

    def recipe(self, n: int, degree_bound: Optional[int] = None) -> SteenrodRecipe:
        """The Sq^2 e = t e recipe for odd n."""
        if n % 2 == 0:
            raise ValueError(f"The quadric recipe needs odd n, got {n}")
        m = (n + 1) // 2
        ring = quadric_ring(m, self.bound(2 * m + 2, degree_bound)).reduce_mod(2)
        table = table_from_data(ring, self.data["table"])
        alpha = SphericalClass("t", "S^2", (2,), ("bdi-hurewicz",))
        beta = SphericalClass("e", "SigmaB", (n, n + 1), ("bdi-cells", "bdi-gysin"))
        return SteenrodRecipe(
            ring, SteenrodOperation(2, 2), "e", alpha, beta,
            table=table, facts=("bdi-cohomology",), label="p=2: Sq^2 e",
        )

    def build(self, params: Dict[str, object], degree_bound: Optional[int] = None) -> SpaceSpec:
        n = params["n"]
        recipe = self.recipe(n, degree_bound) if n % 2 else None
        known = None
        notes: Tuple[str, ...] = ()
        if n % 2 == 0:
            known = KnownResult(
                "NotHomotopyCommutative",
                KNOWN_FACTS,
                (f"n = {n} is even, so n + 1 = {n + 1} is odd and greater than 1, hence not a power of 2",),
            )
        elif not is_power_of_two(n + 1):
            known = KnownResult(
                "NotHomotopyCommutative",
                KNOWN_FACTS,
                (f"n + 1 = {n + 1} is not a power of 2",),
            )
        else:
            notes = (f"n + 1 = {n + 1} is a power of 2, so the Steenrod criterion is used",)
        presentations = ()
        if recipe is not None:
            m = (n + 1) // 2
            presentations = (quadric_ring(m, recipe.ring.degree_bound), recipe.ring)
        return SpaceSpec(
            family=Family.BDI,
            params=(("n", n),),
            label=self.label(params),
            title=f"SO({n + 2})/SO(2)xSO({n})",
            route=Route.STEENROD,
            presentations=presentations,
            steenrod=recipe,
            known=known,
            facts=self.facts(),
            notes=notes,
        )
