"""
Families package: the space catalog.

Each family class carries the family-specific data (parameter ranges,
presentations, recipes, facts) while the decision routes in criteria contain
only the checking logic.
"""

from .catalog import (
    CATALOG_ENV,
    CATALOG_PATH,
    DEFAULT_MAX_PARAM,
    Catalog,
    CatalogError,
    Fact,
    Family,
    FiberData,
    KnownResult,
    Repair,
    Route,
    SpaceSpec,
    SphericalClass,
    SteenrodRecipe,
    default_catalog_path,
    load,
    weyl_group_generators,
    weyl_invariants,
)
from .base import BaseFamily, SelectorError
from .aiii import AIIIFamily
from .bdi import BDIFamily
from .ci import CIFamily
from .diii import DIIIFamily
from .eiii import EIIIFamily
from .evii import EVIIFamily
from .flag import FlagFamily
from .cpn import CPnFamily

FAMILY_REGISTRY = {
    "AIII": AIIIFamily,
    "BDI": BDIFamily,
    "CI": CIFamily,
    "DIII": DIIIFamily,
    "EIII": EIIIFamily,
    "EVII": EVIIFamily,
    "FLAG": FlagFamily,
    "CPn": CPnFamily,
}

__all__ = [
    "CATALOG_ENV",
    "CATALOG_PATH",
    "DEFAULT_MAX_PARAM",
    "Catalog",
    "CatalogError",
    "Fact",
    "Family",
    "FiberData",
    "KnownResult",
    "Repair",
    "Route",
    "SpaceSpec",
    "SphericalClass",
    "SteenrodRecipe",
    "default_catalog_path",
    "load",
    "weyl_group_generators",
    "weyl_invariants",
    "BaseFamily",
    "SelectorError",
    "AIIIFamily",
    "BDIFamily",
    "CIFamily",
    "DIIIFamily",
    "EIIIFamily",
    "EVIIFamily",
    "FlagFamily",
    "CPnFamily",
    "FAMILY_REGISTRY",
]
