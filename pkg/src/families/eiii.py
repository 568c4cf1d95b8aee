"""
E6/Spin(10).T1 (EIII)

The mod 2 ring F_2[t, w']/(t w'^2, t^12 + w'^3) and the table entry
Sq^2 w' = t w' come from the catalog file.
"""

from typing import Dict, List, Optional, Tuple

from steenrod import SteenrodOperation

from .base import BaseFamily
from .catalog import Family, Route, SpaceSpec, SphericalClass, SteenrodRecipe, presentation_from_data, table_from_data


class EIIIFamily(BaseFamily):
    """The exceptional Hermitian symmetric space E6/Spin(10).T1."""

    @property
    def family(self) -> Family:
        return Family.EIII

    @property
    def route(self) -> Route:
        return Route.STEENROD

    @property
    def parameter_names(self) -> Tuple[str, ...]:
        return ()

    def enumerate(self, max_param: int) -> List[Dict[str, object]]:
        return [{}]

    def build(self, params: Dict[str, object], degree_bound: Optional[int] = None) -> SpaceSpec:
        ring = presentation_from_data(self.data["ring"], "H*(EIII; F_2)", self.bound(10, degree_bound))
        table = table_from_data(ring, self.data["table"])
        recipe = SteenrodRecipe(
            ring,
            SteenrodOperation(2, 2),
            "w'",
            SphericalClass("t", "S^2", (2,), ("eiii-hurewicz",)),
            SphericalClass("w'", "S^8", (8,), ("conlon-relative", "cayley-plane", "eiii-gysin")),
            table=table,
            facts=("eiii-cohomology",),
            label="p=2: Sq^2 w'",
        )
        return SpaceSpec(
            family=Family.EIII,
            params=(),
            label=self.label(params),
            title="E6/Spin(10).T1",
            route=Route.STEENROD,
            presentations=(ring,),
            steenrod=recipe,
            facts=self.facts(),
        )
