"""
SO(2n)/U(n) (DIII)

Rationally the fiber of r: BU(n) -> BSO(2n), with
r*(p_i) = sum_{k+l=2i} (-1)^k c_k c_l and r*(e) = c_n. The Euler class is
declared first, so its pair (c_n, r_e) is eliminated before the r_i pair of
the same degree; the minimal model is then that of Sp(n-1)/U(n-1).
"""

from typing import Dict, List, Optional, Tuple

from .base import BaseFamily
from .catalog import FiberData, Family, Route, SpaceSpec
from .ci import chern
from .rings import bso_even_ring, bu_ring


def orthogonal_fiber(n: int, degree_bound: int) -> FiberData:
    base = bu_ring(n, degree_bound=degree_bound)
    target = bso_even_ring(n, degree_bound=degree_bound)
    pullback = [("e", base.gen(f"c_{n}"))]
    for i in range(1, n):
        image = base.algebra.zero()
        for k in range(2 * i + 1):
            term = chern(base, n, k) * chern(base, n, 2 * i - k)
            image = image + (term if k % 2 == 0 else -term)
        pullback.append((f"p_{i}", image))
    names = (("e", "r_e"),) + tuple((f"p_{i}", f"r_{i}") for i in range(1, n))
    return FiberData(base, target, tuple(pullback), names)


class DIIIFamily(BaseFamily):
    """SO(2n)/U(n)."""

    @property
    def family(self) -> Family:
        return Family.DIII

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
        fiber = orthogonal_fiber(n, self.bound(4 * n, degree_bound))
        return SpaceSpec(
            family=Family.DIII,
            params=(("n", n),),
            label=self.label(params),
            title=f"SO({2 * n})/U({n})",
            route=Route.RATIONAL,
            presentations=(fiber.base, fiber.target),
            fiber=fiber,
            facts=self.facts(),
        )
