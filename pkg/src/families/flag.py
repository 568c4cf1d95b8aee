"""
Flag Manifolds (FLAG)

G/T for classical G, modelled as the fiber of BT -> BG through the Weyl
invariants. Certificates carry homotopy-nilpotency bounds: the quadratic
witness gives honil >= 2, and honil(T) = 1 bounds it above by 2.
"""

from typing import Dict, List, Optional, Tuple

from .base import BaseFamily, SelectorError
from .catalog import CLASSICAL_TYPES, Family, Route, SpaceSpec, torus_size, weyl_invariants

MIN_RANK = {"A": 1, "B": 1, "C": 1, "D": 2}


def flag_title(lie_type: str, rank: int) -> str:
    if lie_type == "A":
        N = torus_size(lie_type, rank)
        return f"U({N})/T^{N}"
    group = {"B": f"Spin({2 * rank + 1})", "C": f"Sp({rank})", "D": f"Spin({2 * rank})"}[lie_type]
    return f"{group}/T"


class FlagFamily(BaseFamily):
    """Complete flag manifolds of the classical groups."""

    @property
    def family(self) -> Family:
        return Family.FLAG

    @property
    def route(self) -> Route:
        return Route.RATIONAL

    @property
    def parameter_names(self) -> Tuple[str, ...]:
        return ("type", "rank")

    def validate(self, **params) -> Dict[str, object]:
        clean = super().validate(**params)
        minimum = MIN_RANK[clean["type"]]
        if clean["rank"] < minimum:
            raise SelectorError(f"FLAG type {clean['type']} needs rank >= {minimum}, got {clean['rank']}")
        return clean

    def enumerate(self, max_param: int) -> List[Dict[str, object]]:
        return [
            {"type": t, "rank": r}
            for t in CLASSICAL_TYPES
            for r in range(MIN_RANK[t], max_param + 1)
        ]

    def build(self, params: Dict[str, object], degree_bound: Optional[int] = None) -> SpaceSpec:
        lie_type, rank = params["type"], params["rank"]
        N = torus_size(lie_type, rank)
        top = {"A": 2 * N, "B": 4 * N, "C": 4 * N, "D": 4 * (N - 1)}[lie_type]
        fiber = weyl_invariants(lie_type, rank, self.bound(top, degree_bound))
        return SpaceSpec(
            family=Family.FLAG,
            params=(("type", lie_type), ("rank", rank)),
            label=self.label(params),
            title=flag_title(lie_type, rank),
            route=Route.RATIONAL,
            presentations=(fiber.base, fiber.target),
            fiber=fiber,
            facts=self.facts(),
            nilpotency=True,
        )
