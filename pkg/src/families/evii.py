"""
E7/E6.T1 (EVII)

Rationally the fiber of j: B(E6.T1) -> BE7. The pullback formulas are read
from the catalog file; terms whose degree disagrees with the target
generator are dropped only when the typo ledger documents them.
"""

from typing import Dict, List, Optional, Tuple

from .base import BaseFamily
from .catalog import FiberData, Family, Route, SpaceSpec, presentation_from_data, repaired_pullback


class EVIIFamily(BaseFamily):
    """The exceptional Hermitian symmetric space E7/E6.T1."""

    @property
    def family(self) -> Family:
        return Family.EVII

    @property
    def route(self) -> Route:
        return Route.RATIONAL

    @property
    def parameter_names(self) -> Tuple[str, ...]:
        return ()

    def enumerate(self, max_param: int) -> List[Dict[str, object]]:
        return [{}]

    def fiber(self, degree_bound: Optional[int] = None) -> Tuple[FiberData, list]:
        bound = self.bound(36, degree_bound)
        base = presentation_from_data(self.data["base"], "H*(B(E6.T1))", bound)
        target = presentation_from_data(self.data["target"], "H*(BE7)", bound)
        pullback, repairs = repaired_pullback(
            self.name, base.algebra, target, self.data["pullback"], self.catalog.ledger
        )
        names = tuple((y.name, self.data["fiber_names"][y.name]) for y in target.generators)
        fiber = FiberData(base, target, tuple((y.name, pullback[y.name]) for y in target.generators), names)
        return fiber, repairs

    def build(self, params: Dict[str, object], degree_bound: Optional[int] = None) -> SpaceSpec:
        fiber, repairs = self.fiber(degree_bound)
        return SpaceSpec(
            family=Family.EVII,
            params=(),
            label=self.label(params),
            title="E7/E6.T1",
            route=Route.RATIONAL,
            presentations=(fiber.base, fiber.target),
            fiber=fiber,
            facts=self.facts(),
            repairs=tuple(repairs),
            notes=(
                "the images of x_20, x_28, x_36 are known modulo (x_4, x_12, x_16, x_24); "
                "those generators pair off with y_3, y_11, y_15, y_23, so the minimal model "
                "does not see the ideal part",
            ),
        )
