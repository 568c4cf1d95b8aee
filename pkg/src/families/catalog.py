"""
Catalog Module

Loads the versioned catalog file (certified facts, fixed presentations,
Steenrod tables and the typo ledger) and exposes the space specifications the
decision routes consume. Family-specific knowledge lives in the family
classes; this module holds the shared record types and the file plumbing.
"""

import json
import logging
import os
from dataclasses import dataclass, field
from enum import Enum
from itertools import combinations
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import jsonschema

from algebra import (
    GF,
    QQ,
    GradedAlgebra,
    GradedPoly,
    Presentation,
    PolynomialSyntaxError,
    parse_poly,
)
from algebra.presented import DEFAULT_DEGREE_BOUND
from primes import DEFAULT_PRIME_CAP
from steenrod import SteenrodOperation, SteenrodTable, TableEntry

from .rings import torus_ring

LOGGER = logging.getLogger(__name__)

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
CATALOG_PATH = os.path.join(PROJECT_ROOT, "data", "catalog.json")
CATALOG_SCHEMA_PATH = os.path.join(PROJECT_ROOT, "data", "catalog.schema.json")
CATALOG_ENV = "LOOPCOMM_CATALOG"
DEFAULT_MAX_PARAM = 8


class CatalogError(ValueError):
    """Raised for schema violations, unknown families and untracked inhomogeneous data."""


class Family(str, Enum):
    AIII = "AIII"
    BDI = "BDI"
    CI = "CI"
    DIII = "DIII"
    EIII = "EIII"
    EVII = "EVII"
    FLAG = "FLAG"
    CPN = "CPn"


class Route(str, Enum):
    RATIONAL = "rational"
    STEENROD = "steenrod"
    KNOWN_RESULT = "known_result"


# ---------------------------------------------------------------------- #
#  Record types                                                            #
# ---------------------------------------------------------------------- #

@dataclass(frozen=True)
class Fact:
    """
    A certified external input.

    Attributes:
        id: Stable identifier, e.g. 'ganea-cpn'.
        statement: One-line statement.
        citation: Literature reference.
        role: The condition or lifting step it certifies.
    """
    id: str
    statement: str
    citation: str
    role: str

    def to_dict(self) -> Dict[str, str]:
        return {"id": self.id, "statement": self.statement, "citation": self.citation, "role": self.role}


@dataclass(frozen=True)
class LedgerEntry:
    """One documented degree-inconsistent term of a catalog formula."""
    family: str
    polynomial: str
    term: str
    degree: int
    expected_degree: int
    note: str


@dataclass(frozen=True)
class Repair:
    """
    A ledger-backed change applied while loading.

    Attributes:
        family: Family of the repaired entry.
        polynomial: Name of the target generator whose image was repaired.
        term: The dropped term as written in the catalog.
        degree: Degree of the dropped term.
        expected_degree: Degree of the polynomial it was found in.
        action: What was done ('dropped').
        note: Ledger explanation.
    """
    family: str
    polynomial: str
    term: str
    degree: int
    expected_degree: int
    action: str
    note: str

    def to_dict(self) -> Dict[str, object]:
        return {
            "family": self.family,
            "polynomial": self.polynomial,
            "term": self.term,
            "degree": self.degree,
            "expected_degree": self.expected_degree,
            "action": self.action,
            "note": self.note,
        }


@dataclass(frozen=True)
class FiberData:
    """
    A map of free rational polynomial rings whose homotopy fiber is modelled.

    Attributes:
        base: Cohomology of the source (e.g. BU(n)).
        target: Cohomology of the target (e.g. BSp(n)).
        pullback: (target generator, image in base) pairs.
        fiber_names: (target generator, fiber generator name) pairs.
    """
    base: Presentation
    target: Presentation
    pullback: Tuple[Tuple[str, GradedPoly], ...]
    fiber_names: Tuple[Tuple[str, str], ...] = ()

    @property
    def pullback_map(self) -> Dict[str, GradedPoly]:
        return dict(self.pullback)

    @property
    def fiber_name_map(self) -> Dict[str, str]:
        return dict(self.fiber_names)

    def scaled(self, factor) -> "FiberData":
        """The same map with every image multiplied by a nonzero rational."""
        return FiberData(
            self.base, self.target, tuple((y, img.scale(factor)) for y, img in self.pullback), self.fiber_names
        )


@dataclass(frozen=True)
class SphericalClass:
    """
    A cohomology class detected by a map from a suspension.

    Attributes:
        name: Generator name of the class (a or b).
        source: Display name of the suspension, e.g. 'S^4' or 'SigmaB'.
        cells: Positive cell degrees of the suspension.
        facts: Fact ids that make the class spherical.
        chern_index: i for a Chern class c_i, whose sphericality is gated on (i-1)! mod p.
    """
    name: str
    source: str
    cells: Tuple[int, ...]
    facts: Tuple[str, ...] = ()
    chern_index: Optional[int] = None


@dataclass(frozen=True)
class SteenrodRecipe:
    """
    The data the Steenrod route checks for one space.

    Attributes:
        ring: Mod-p cohomology presentation.
        operation: theta.
        x: Name of the class theta is applied to.
        alpha: Class a with its detecting map.
        beta: Class b with its detecting map.
        table: Tabled operations; None when theta is computed by the splitting principle.
        facts: Fact ids consumed beyond sphericality (cohomology tables, lifting chain).
        alternates: Other recipes that would also work, reported but not required.
        label: Short description, e.g. 'p=5: P^1 c_2'.
    """
    ring: Presentation
    operation: SteenrodOperation
    x: str
    alpha: SphericalClass
    beta: SphericalClass
    table: Optional[SteenrodTable] = None
    facts: Tuple[str, ...] = ()
    alternates: Tuple["SteenrodRecipe", ...] = ()
    label: str = ""

    @property
    def prime(self) -> int:
        return self.operation.prime


@dataclass(frozen=True)
class KnownResult:
    """
    A verdict taken from the literature.

    Attributes:
        verdict: 'NotHomotopyCommutative' or 'HomotopyCommutative'.
        facts: Fact ids the verdict rests on.
        reasoning: Lines explaining why the facts apply to these parameters.
    """
    verdict: str
    facts: Tuple[str, ...]
    reasoning: Tuple[str, ...] = ()


@dataclass(frozen=True)
class SpaceSpec:
    """
    Everything the routes need about one space.

    Attributes:
        family: Space family.
        params: (name, value) parameter pairs, normalized.
        label: Identifier such as 'AIII(2,3)'.
        title: Homogeneous-space description.
        route: Primary route.
        presentations: Rings shown in reports.
        fiber: Map whose homotopy fiber is the space (rational route).
        steenrod: Criterion data (Steenrod route).
        known: Literature verdict (known-result route, or Steenrod fallback).
        facts: Every fact the space may consume.
        repairs: Typo-ledger repairs applied while loading.
        expected: The verdict the literature predicts.
        nilpotency: True when the certificate should carry homotopy-nilpotency bounds.
        notes: Normalizations and other remarks.
    """
    family: Family
    params: Tuple[Tuple[str, object], ...]
    label: str
    title: str
    route: Route
    presentations: Tuple[Presentation, ...] = ()
    fiber: Optional[FiberData] = None
    steenrod: Optional[SteenrodRecipe] = None
    known: Optional[KnownResult] = None
    facts: Tuple[Fact, ...] = ()
    repairs: Tuple[Repair, ...] = ()
    expected: str = "NotHomotopyCommutative"
    nilpotency: bool = False
    notes: Tuple[str, ...] = ()

    @property
    def parameters(self) -> Dict[str, object]:
        return dict(self.params)

    def fact(self, fact_id: str) -> Fact:
        for f in self.facts:
            if f.id == fact_id:
                return f
        raise KeyError(f"{self.label} carries no fact {fact_id!r}")


# ---------------------------------------------------------------------- #
#  Data-file helpers                                                       #
# ---------------------------------------------------------------------- #

def _field_from_data(characteristic: int):
    return QQ if characteristic == 0 else GF(characteristic)


def presentation_from_data(data: Mapping, name: str, degree_bound: int = DEFAULT_DEGREE_BOUND) -> Presentation:
    """Build a presentation from {'field', 'generators', 'relations'} catalog data."""
    algebra = GradedAlgebra.free(
        ((g["name"], g["degree"]) for g in data["generators"]), _field_from_data(data.get("field", 0))
    )
    try:
        relations = tuple(parse_poly(text, algebra) for text in data.get("relations", ()))
    except (PolynomialSyntaxError, ValueError) as exc:
        raise CatalogError(f"Bad relation in {name}: {exc}") from exc
    return Presentation(algebra, relations, degree_bound, name)


def table_from_data(ring: Presentation, entries: Sequence[Mapping]) -> SteenrodTable:
    p = ring.field.characteristic
    parsed = []
    for entry in entries:
        operation = SteenrodOperation.parse(entry["operation"], p)
        try:
            value = parse_poly(entry["value"], ring.algebra)
        except (PolynomialSyntaxError, ValueError) as exc:
            raise CatalogError(f"Bad table value for {entry['operation']} {entry['generator']}: {exc}") from exc
        parsed.append(TableEntry(operation, entry["generator"], value, entry.get("citation", "")))
    return SteenrodTable(ring, tuple(parsed))


def repaired_pullback(
    family: str,
    base: GradedAlgebra,
    target: Presentation,
    texts: Mapping[str, str],
    ledger: Sequence[LedgerEntry],
) -> Tuple[Dict[str, GradedPoly], List[Repair]]:
    """
    Parse pullback formulas. Homogeneous components of the wrong degree are
    dropped only when the typo ledger lists them; anything else is an error.
    """
    pullback: Dict[str, GradedPoly] = {}
    repairs: List[Repair] = []
    for y in target.generators:
        if y.name not in texts:
            raise CatalogError(f"{family}: no pullback formula for {y.name}")
        text = texts[y.name]
        try:
            poly = parse_poly(text, base, allow_inhomogeneous=True)
        except PolynomialSyntaxError as exc:
            raise CatalogError(f"{family}: cannot read image of {y.name}: {exc}") from exc
        kept = base.zero()
        for degree, component in sorted(poly.homogeneous_components().items()):
            if degree == y.degree:
                kept = kept + component
                continue
            entry = _ledger_match(family, y.name, component, base, ledger)
            if entry is None:
                raise CatalogError(
                    f"{family}: image of {y.name} has an untracked term {component} of degree "
                    f"{degree}, expected {y.degree}"
                )
            repairs.append(
                Repair(family, y.name, entry.term, degree, y.degree, "dropped", entry.note)
            )
            LOGGER.info("%s: dropped %s from the image of %s (ledger)", family, entry.term, y.name)
        pullback[y.name] = kept
    return pullback, repairs


def _ledger_match(
    family: str, polynomial: str, component: GradedPoly, base: GradedAlgebra, ledger: Sequence[LedgerEntry]
) -> Optional[LedgerEntry]:
    for entry in ledger:
        if entry.family != family or entry.polynomial != polynomial:
            continue
        term = parse_poly(entry.term, base)
        if term == component and term.degree == entry.degree:
            return entry
    return None


# ---------------------------------------------------------------------- #
#  Weyl invariants                                                         #
# ---------------------------------------------------------------------- #

CLASSICAL_TYPES = ("A", "B", "C", "D")


def _check_type(lie_type: str, rank: int) -> None:
    if lie_type not in CLASSICAL_TYPES:
        raise NotImplementedError(f"Weyl invariants of type {lie_type} are not implemented")
    minimum = 2 if lie_type == "D" else 1
    if rank < minimum:
        raise ValueError(f"Type {lie_type} needs rank >= {minimum}, got {rank}")


def torus_size(lie_type: str, rank: int) -> int:
    """Number of splitting variables: rank + 1 for U(rank + 1), rank otherwise."""
    return rank + 1 if lie_type == "A" else rank


def _elementary(values: Sequence[GradedPoly], j: int, algebra: GradedAlgebra) -> GradedPoly:
    total = algebra.zero()
    for combo in combinations(values, j):
        term = algebra.one()
        for v in combo:
            term = term * v
        total = total + term
    return total


def weyl_invariants(lie_type: str, rank: int, degree_bound: int = DEFAULT_DEGREE_BOUND) -> FiberData:
    """
    The map H*(BG; Q) -> H*(BT; Q) as polynomial generators of the Weyl
    invariants: e_i(t) for type A (U(rank + 1)), e_i(t^2) for B and C, and
    e_i(t^2) for i < n together with t_1...t_n for D.
    """
    _check_type(lie_type, rank)
    N = torus_size(lie_type, rank)
    torus = torus_ring(N, QQ, degree_bound)
    algebra = torus.algebra
    t = algebra.gens()
    if lie_type == "A":
        images = [_elementary(t, i, algebra) for i in range(1, N + 1)]
    else:
        squares = [v * v for v in t]
        count = N - 1 if lie_type == "D" else N
        images = [_elementary(squares, i, algebra) for i in range(1, count + 1)]
        if lie_type == "D":
            images.append(_elementary(t, N, algebra))
    spec = [(f"x_{i}", img.degree) for i, img in enumerate(images, 1)]
    target = Presentation(GradedAlgebra.free(spec, QQ), (), degree_bound, f"H*(BG) type {lie_type}{rank}")
    pullback = tuple((f"x_{i}", img) for i, img in enumerate(images, 1))
    fiber_names = tuple((f"x_{i}", f"y_{i}") for i in range(1, len(images) + 1))
    return FiberData(torus, target, pullback, fiber_names)


def weyl_group_generators(lie_type: str, rank: int) -> List[Dict[str, GradedPoly]]:
    """
    Generators of the Weyl group acting on t_1..t_N, as substitutions:
    adjacent transpositions, a sign change of t_N for B and C, and the paired
    sign change of t_{N-1}, t_N for D.
    """
    _check_type(lie_type, rank)
    N = torus_size(lie_type, rank)
    algebra = torus_ring(N).algebra
    t = algebra.gens()
    moves: List[Dict[str, GradedPoly]] = []
    for i in range(N - 1):
        moves.append({f"t_{i + 1}": t[i + 1], f"t_{i + 2}": t[i]})
    if lie_type in ("B", "C"):
        moves.append({f"t_{N}": -t[N - 1]})
    if lie_type == "D":
        moves.append({f"t_{N - 1}": -t[N - 2], f"t_{N}": -t[N - 1]})
    return moves


# ---------------------------------------------------------------------- #
#  Catalog                                                                 #
# ---------------------------------------------------------------------- #

def default_catalog_path() -> str:
    return os.environ.get(CATALOG_ENV) or CATALOG_PATH


@dataclass(frozen=True)
class Catalog:
    """
    The loaded catalog file.

    Attributes:
        version: Catalog format version.
        path: File it was read from.
        facts: Fact id -> Fact.
        families: Family name -> raw family data.
        ledger: Typo ledger entries.
        prime_cap: Sieve cap used when a family chooses a prime.
    """
    version: str
    path: str
    facts: Mapping[str, Fact] = field(repr=False)
    families: Mapping[str, Mapping] = field(repr=False)
    ledger: Tuple[LedgerEntry, ...] = ()
    prime_cap: int = DEFAULT_PRIME_CAP

    @classmethod
    def from_file(cls, path: Optional[str] = None, prime_cap: int = DEFAULT_PRIME_CAP) -> "Catalog":
        path = path or default_catalog_path()
        try:
            with open(path, encoding="utf-8") as f:
                data = json.load(f)
        except FileNotFoundError as exc:
            raise CatalogError(f"Catalog file not found: {path}") from exc
        except json.JSONDecodeError as exc:
            raise CatalogError(f"Catalog {path} is not valid JSON: {exc}") from exc
        return cls.from_dict(data, path, prime_cap)

    @classmethod
    def from_dict(cls, data: Mapping, path: str = "<memory>", prime_cap: int = DEFAULT_PRIME_CAP) -> "Catalog":
        with open(CATALOG_SCHEMA_PATH, encoding="utf-8") as f:
            schema = json.load(f)
        try:
            jsonschema.validate(data, schema)
        except jsonschema.ValidationError as exc:
            raise CatalogError(f"Catalog {path} violates the schema: {exc.message}") from exc

        facts: Dict[str, Fact] = {}
        for item in data["facts"]:
            if item["id"] in facts:
                raise CatalogError(f"Duplicate fact id {item['id']!r}")
            if not item["citation"].strip():
                raise CatalogError(f"Fact {item['id']!r} has no citation")
            facts[item["id"]] = Fact(item["id"], item["statement"], item["citation"], item["role"])

        from . import FAMILY_REGISTRY

        for name in data["families"]:
            if name not in FAMILY_REGISTRY:
                raise CatalogError(f"Unknown family {name!r} in {path}")
            for fact_id in data["families"][name].get("facts", ()):
                if fact_id not in facts:
                    raise CatalogError(f"Family {name} cites unknown fact {fact_id!r}")
        ledger = tuple(
            LedgerEntry(e["family"], e["polynomial"], e["term"], e["degree"], e["expected_degree"], e["note"])
            for e in data.get("typo_ledger", ())
        )
        catalog = cls(data["version"], path, facts, dict(data["families"]), ledger, prime_cap)
        LOGGER.info(
            "catalog %s (version %s): %d facts, %d families, %d ledger entries",
            path, catalog.version, len(facts), len(catalog.families), len(ledger),
        )
        return catalog

    def fact(self, fact_id: str) -> Fact:
        try:
            return self.facts[fact_id]
        except KeyError:
            raise CatalogError(f"Unknown fact {fact_id!r}") from None

    def family_data(self, name: str) -> Mapping:
        try:
            return self.families[name]
        except KeyError:
            raise CatalogError(f"Family {name!r} is not in catalog {self.path}") from None

    def family(self, name: str):
        """Instantiate the family class registered under name."""
        from . import FAMILY_REGISTRY

        key = _family_key(name)
        if key not in FAMILY_REGISTRY or key not in self.families:
            raise CatalogError(f"Unknown family {name!r}; known: {', '.join(FAMILY_REGISTRY)}")
        return FAMILY_REGISTRY[key](self)

    def space(self, family: str, degree_bound: Optional[int] = None, **params) -> SpaceSpec:
        return self.family(family).space(degree_bound=degree_bound, **params)

    def spaces(
        self,
        max_param: int = DEFAULT_MAX_PARAM,
        families: Optional[Sequence[str]] = None,
        degree_bound: Optional[int] = None,
    ) -> List[SpaceSpec]:
        """Every catalog space with parameters up to max_param, in canonical order."""
        from . import FAMILY_REGISTRY

        wanted = [_family_key(f) for f in families] if families else list(FAMILY_REGISTRY)
        specs: List[SpaceSpec] = []
        for name in FAMILY_REGISTRY:
            if name not in wanted or name not in self.families:
                continue
            fam = self.family(name)
            for params in fam.enumerate(max_param):
                specs.append(fam.space(degree_bound=degree_bound, **params))
        return specs


def _family_key(name: str) -> str:
    for member in Family:
        if member.value.lower() == str(name).lower():
            return member.value
    return str(name)


def load(
    path: Optional[str] = None,
    max_param: int = DEFAULT_MAX_PARAM,
    families: Optional[Sequence[str]] = None,
) -> List[SpaceSpec]:
    """Load the catalog file and return its space specifications."""
    return Catalog.from_file(path).spaces(max_param, families)
