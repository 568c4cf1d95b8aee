"""
Sp(n)/U(n) (CI)

Rationally the fiber of q: BU(n) -> BSp(n), with
q*(q_i) = sum_{k+l=2i} (-1)^{i+k} c_k c_l.
"""

from typing import Dict, List, Optional, Tuple

from algebra import GradedPoly, Presentation

from .base import BaseFamily
from .catalog import FiberData, Family, Route, SpaceSpec
from .rings import bsp_ring, bu_ring


def chern(base: Presentation, n: int, k: int) -> GradedPoly:
    """c_k with c_0 = 1 and c_k = 0 for k > n."""
    if k == 0:
        return base.algebra.one()
    if k > n:
        return base.algebra.zero()
    return base.gen(f"c_{k}")


def symplectic_fiber(n: int, degree_bound: int) -> FiberData:
    base = bu_ring(n, degree_bound=degree_bound)
    target = bsp_ring(n, degree_bound=degree_bound)
    pullback = []
    for i in range(1, n + 1):
        image = base.algebra.zero()
        for k in range(2 * i + 1):
            term = chern(base, n, k) * chern(base, n, 2 * i - k)
            image = image + (term if (i + k) % 2 == 0 else -term)
        pullback.append((f"q_{i}", image))
    names = tuple((f"q_{i}", f"r_{i}") for i in range(1, n + 1))
    return FiberData(base, target, tuple(pullback), names)


class CIFamily(BaseFamily):
    """Lagrangian Grassmannians Sp(n)/U(n)."""

    @property
    def family(self) -> Family:
        return Family.CI

    @property
    def route(self) -> Route:
        return Route.RATIONAL

    @property
    def parameter_names(self) -> Tuple[str, ...]:
        return ("n",)

    def enumerate(self, max_param: int) -> List[Dict[str, object]]:
        return [{"n": n} for n in range(4, max_param + 1)]

    def build(self, params: Dict[str, object], degree_bound: Optional[int] = None) -> SpaceSpec:
        n = params["n"]
        fiber = symplectic_fiber(n, self.bound(4 * n, degree_bound))
        return SpaceSpec(
            family=Family.CI,
            params=(("n", n),),
            label=self.label(params),
            title=f"Sp({n})/U({n})",
            route=Route.RATIONAL,
            presentations=(fiber.base, fiber.target),
            fiber=fiber,
            facts=self.facts(),
        )
