"""
Complex Projective Spaces

CP^n is the one Hermitian symmetric family with a positive answer: its loop
space is homotopy commutative exactly for n = 3. The verdict comes from the
literature; the rational model (dz = x^{n+1}) is still built so that the
n = 1 witness can be reported alongside it.
"""

from typing import Dict, List, Optional, Tuple

from algebra import QQ, GradedAlgebra, Presentation

from .base import BaseFamily
from .catalog import FiberData, Family, KnownResult, Route, SpaceSpec

GANEA_EXCEPTION = 3


def cpn_fiber(n: int, degree_bound: int) -> FiberData:
    """CP^n as the fiber of x^{n+1}: K(Z, 2) -> K(Z, 2n + 2)."""
    base = Presentation(GradedAlgebra.free((("x", 2),), QQ), (), degree_bound, "H*(CP^inf)")
    target = Presentation(GradedAlgebra.free((("y", 2 * n + 2),), QQ), (), degree_bound, f"H*(K(Q,{2 * n + 2}))")
    return FiberData(base, target, (("y", base.gen("x") ** (n + 1)),), (("y", "z"),))


def cpn_verdict(n: int) -> str:
    return "HomotopyCommutative" if n == GANEA_EXCEPTION else "NotHomotopyCommutative"


class CPnFamily(BaseFamily):
    """Complex projective spaces CP^n = U(n+1)/U(1)xU(n)."""

    @property
    def family(self) -> Family:
        return Family.CPN

    @property
    def route(self) -> Route:
        return Route.KNOWN_RESULT

    @property
    def parameter_names(self) -> Tuple[str, ...]:
        return ("n",)

    def enumerate(self, max_param: int) -> List[Dict[str, object]]:
        return [{"n": n} for n in range(1, max_param + 1)]

    def expected_verdict(self, params) -> str:
        return cpn_verdict(params["n"])

    def build(self, params: Dict[str, object], degree_bound: Optional[int] = None) -> SpaceSpec:
        n = params["n"]
        fiber = cpn_fiber(n, self.bound(2 * n + 2, degree_bound))
        x = fiber.base.gen("x")
        ring = Presentation(fiber.base.algebra, (x ** (n + 1),), fiber.base.degree_bound, f"H*(CP^{n})")
        verdict = cpn_verdict(n)
        reasoning = (
            f"Omega CP^n is homotopy commutative if and only if n = {GANEA_EXCEPTION}; here n = {n}",
        )
        return SpaceSpec(
            family=Family.CPN,
            params=(("n", n),),
            label=self.label(params),
            title=f"CP^{n}",
            route=Route.KNOWN_RESULT,
            presentations=(ring,),
            fiber=fiber,
            known=KnownResult(verdict, ("ganea-cpn",), reasoning),
            facts=self.facts(),
            expected=verdict,
        )
