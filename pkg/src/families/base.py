"""
Base Family Module

Defines the abstract base class every space family implements. A family
carries all family-specific constants (parameter ranges, presentations,
recipes, the facts it relies on) while the decision routes contain only the
checking logic.
"""

from abc import ABC, abstractmethod
from typing import Dict, List, Mapping, Optional, Tuple

from .catalog import Catalog, CatalogError, Fact, Family, Route, SpaceSpec


class SelectorError(ValueError):
    """Raised when family parameters are missing or out of range."""


class BaseFamily(ABC):
    """
    Abstract base class defining the contract every space family follows.

    Subclasses turn validated parameters into a SpaceSpec; ranges and fact
    lists come from the catalog file so that they are versioned with it.
    """

    def __init__(self, catalog: Catalog):
        self.catalog = catalog
        self.data: Mapping = catalog.family_data(self.family.value)

    # ------------------------------------------------------------------ #
    #  Identity                                                            #
    # ------------------------------------------------------------------ #

    @property
    @abstractmethod
    def family(self) -> Family:
        """Family enum member."""

    @property
    def name(self) -> str:
        return self.family.value

    @property
    def description(self) -> str:
        """One-line description for listings and the UI."""
        return self.data.get("description", "")

    @property
    @abstractmethod
    def route(self) -> Route:
        """Primary decision route."""

    @property
    @abstractmethod
    def parameter_names(self) -> Tuple[str, ...]:
        """Names of the integer (or type) parameters, in label order."""

    @property
    def parameter_ranges(self) -> Dict[str, Mapping]:
        """Parameter name -> {'min': ...} or {'choices': [...]}, from the catalog."""
        return dict(self.data.get("parameters", {}))

    # ------------------------------------------------------------------ #
    #  Parameters                                                          #
    # ------------------------------------------------------------------ #

    def validate(self, **params) -> Dict[str, object]:
        """Check parameters against the catalog ranges and return them normalized."""
        missing = [p for p in self.parameter_names if params.get(p) is None]
        if missing:
            raise SelectorError(f"{self.name} needs parameter(s) {', '.join(missing)}")
        extra = [p for p, v in params.items() if p not in self.parameter_names and v is not None]
        if extra:
            raise SelectorError(f"{self.name} takes no parameter(s) {', '.join(sorted(extra))}")
        clean: Dict[str, object] = {}
        for pname in self.parameter_names:
            value = params[pname]
            bounds = self.parameter_ranges.get(pname, {})
            if "choices" in bounds:
                value = str(value).upper()
                if value not in bounds["choices"]:
                    raise SelectorError(
                        f"{self.name}: {pname} must be one of {', '.join(bounds['choices'])}, got {params[pname]!r}"
                    )
            else:
                try:
                    value = int(value)
                except (TypeError, ValueError):
                    raise SelectorError(f"{self.name}: {pname} must be an integer, got {params[pname]!r}") from None
                if value < bounds.get("min", 1):
                    raise SelectorError(f"{self.name}: {pname} must be >= {bounds.get('min', 1)}, got {value}")
            clean[pname] = value
        return clean

    def label(self, params: Mapping[str, object]) -> str:
        if not self.parameter_names:
            return self.name
        return f"{self.name}({','.join(str(params[p]) for p in self.parameter_names)})"

    @abstractmethod
    def enumerate(self, max_param: int) -> List[Dict[str, object]]:
        """Parameter sets with every integer parameter at most max_param."""

    # ------------------------------------------------------------------ #
    #  Specs                                                               #
    # ------------------------------------------------------------------ #

    @abstractmethod
    def build(self, params: Dict[str, object], degree_bound: Optional[int] = None) -> SpaceSpec:
        """SpaceSpec for validated parameters."""

    def space(self, degree_bound: Optional[int] = None, **params) -> SpaceSpec:
        return self.build(self.validate(**params), degree_bound)

    def facts(self, *extra: str) -> Tuple[Fact, ...]:
        """The family's catalog facts plus extra ids, in catalog order, without repeats."""
        ids: List[str] = []
        for fact_id in list(self.data.get("facts", ())) + list(extra):
            if fact_id not in ids:
                ids.append(fact_id)
        try:
            return tuple(self.catalog.fact(i) for i in ids)
        except CatalogError as exc:
            raise CatalogError(f"{self.name}: {exc}") from exc

    def expected_verdict(self, params: Mapping[str, object]) -> str:
        return "NotHomotopyCommutative"

    @staticmethod
    def bound(default: int, override: Optional[int]) -> int:
        """Degree bound: the override when given, else 2 + the largest degree a criterion queries."""
        return override if override is not None else default + 2
