"""
Presented Ring Module

Finitely presented graded-commutative rings over Q or F_p, handled one degree
at a time: the degree-d piece is the span of degree-d monomials modulo the
span of monomial multiples of the relations. Everything is computed up to a
fixed degree bound.
"""

import dataclasses
import functools
import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .graded import (
    AmbientMismatchError,
    DegreeMismatchError,
    GradedAlgebra,
    GradedPoly,
    Monomial,
    transfer,
    word_length,
)
from .linalg import Echelon
from .scalars import GF

LOGGER = logging.getLogger(__name__)

DEFAULT_DEGREE_BOUND = 64


class DegreeBoundError(ValueError):
    """Raised when a presentation is queried above its degree bound."""


@dataclass(frozen=True)
class GradedBasis:
    """
    Linear-algebra data of one graded piece.

    Attributes:
        degree: The degree d.
        monomials: All degree-d monomials of the free algebra, canonical order.
        relation_rank: Rank of the degree-d relation subspace.
        standard_monomials: Monomials whose classes form a basis of the quotient.
    """
    degree: int
    monomials: Tuple[Monomial, ...]
    relation_rank: int
    standard_monomials: Tuple[Monomial, ...]
    echelon: Echelon = dataclasses.field(repr=False, compare=False)

    @property
    def dim(self) -> int:
        return len(self.monomials) - self.relation_rank


@dataclass(frozen=True)
class Presentation:
    """
    A graded ring given by generators and homogeneous relations.

    Attributes:
        algebra: Free algebra on the generators (fixes the field).
        relations: Homogeneous nonzero relations.
        degree_bound: Largest degree for which bases may be computed.
        name: Display name, e.g. 'H*(BU(2))'.
    """
    algebra: GradedAlgebra
    relations: Tuple[GradedPoly, ...] = ()
    degree_bound: int = DEFAULT_DEGREE_BOUND
    name: str = ""

    def __post_init__(self):
        kept = []
        for rel in self.relations:
            if rel.algebra != self.algebra:
                raise AmbientMismatchError(
                    f"Relation {rel} of {self.name or 'presentation'} is not in its algebra"
                )
            if not rel.is_homogeneous():
                raise DegreeMismatchError(f"Relation {rel} is not homogeneous")
            if rel:
                kept.append(rel)
        object.__setattr__(self, "relations", tuple(kept))

    @property
    def generators(self):
        return self.algebra.generators

    @property
    def field(self):
        return self.algebra.field

    @property
    def is_free(self) -> bool:
        return not self.relations

    def gen(self, name: str) -> GradedPoly:
        return self.algebra.gen(name)

    def with_degree_bound(self, bound: int) -> "Presentation":
        return dataclasses.replace(self, degree_bound=bound)

    def reduce_mod(self, p: int) -> "Presentation":
        """Reduce an integral presentation (stored over Q) modulo a prime."""
        target = self.algebra.with_field(GF(p))
        try:
            rels = tuple(transfer(r, target) for r in self.relations)
        except ZeroDivisionError as exc:
            raise ValueError(f"{self.name} has a relation that is not integral at {p}: {exc}") from exc
        return Presentation(target, rels, self.degree_bound, f"{self.name} mod {p}".strip())

    # ---------------------------------------------------------------- #
    #  Degree-wise linear algebra                                        #
    # ---------------------------------------------------------------- #

    def _check_degree(self, d: int) -> None:
        if d > self.degree_bound:
            raise DegreeBoundError(
                f"Degree {d} exceeds the degree bound {self.degree_bound} of {self.name or 'presentation'}"
            )

    def basis(self, d: int) -> GradedBasis:
        self._check_degree(d)
        return _basis(self, d)

    def graded_dim(self, d: int) -> int:
        return self.basis(d).dim

    def indecomposables_dim(self, d: int) -> int:
        self._check_degree(d)
        return _indecomposables_dim(self, d)

    def normal_form(self, x: GradedPoly) -> GradedPoly:
        if x.algebra != self.algebra:
            raise AmbientMismatchError(f"{x} does not live in {self.name}")
        if x.is_zero():
            return x
        d = x.degree
        basis = self.basis(d)
        columns = _column_index(basis.monomials)
        vector = {columns[m]: c for m, c in x.raw_terms().items()}
        reduced = basis.echelon.normal_form(vector)
        size = len(basis.monomials)
        return GradedPoly._raw(
            self.algebra, {basis.monomials[size - 1 - col]: c for col, c in reduced.items()}
        )

    def is_nonzero(self, x: GradedPoly) -> bool:
        return not self.normal_form(x).is_zero()

    def describe(self) -> str:
        gens = ", ".join(f"{g.name}({g.degree})" for g in self.generators)
        rels = ", ".join(str(r) for r in self.relations)
        base = f"{self.field}[{gens}]"
        return f"{base}/({rels})" if rels else base


def _column_index(monomials: Tuple[Monomial, ...]) -> Dict[Monomial, int]:
    # longest monomials get the smallest columns, so they are pivoted first
    size = len(monomials)
    return {m: size - 1 - i for i, m in enumerate(monomials)}


def _relation_rows(pres: Presentation, d: int, columns: Dict[Monomial, int]) -> List[Dict[int, object]]:
    rows = []
    algebra = pres.algebra
    for rel in pres.relations:
        rd = rel.degree
        if rd > d:
            continue
        for mono in algebra.monomials_of_degree(d - rd):
            multiple = GradedPoly._raw(algebra, {mono: algebra.field.normalize(1)}) * rel
            rows.append({columns[m]: c for m, c in multiple.raw_terms().items()})
    return rows


@functools.lru_cache(maxsize=None)
def _basis(pres: Presentation, d: int) -> GradedBasis:
    monomials = pres.algebra.monomials_of_degree(d) if d >= 0 else ()
    columns = _column_index(monomials)
    echelon = Echelon(pres.field)
    echelon.extend(_relation_rows(pres, d, columns))
    size = len(monomials)
    pivots = set(echelon.pivots)
    standard = tuple(m for m in monomials if columns[m] not in pivots)
    LOGGER.debug("%s degree %d: %d monomials, relation rank %d", pres.name, d, size, echelon.rank)
    return GradedBasis(d, monomials, echelon.rank, standard, echelon)


@functools.lru_cache(maxsize=None)
def _indecomposables_dim(pres: Presentation, d: int) -> int:
    if d <= 0:
        return 0
    monomials = pres.algebra.monomials_of_degree(d)
    columns = _column_index(monomials)
    echelon = Echelon(pres.field)
    echelon.extend(_relation_rows(pres, d, columns))
    unit = pres.field.normalize(1)
    echelon.extend({columns[m]: unit} for m in monomials if word_length(m) >= 2)
    return len(monomials) - echelon.rank


# -------------------------------------------------------------------- #
#  Module-level operations                                               #
# -------------------------------------------------------------------- #

def graded_dim(pres: Presentation, d: int) -> int:
    """Dimension of the degree-d piece of the quotient ring."""
    return pres.graded_dim(d)


def indecomposables_dim(pres: Presentation, d: int) -> int:
    """Dimension of the degree-d indecomposables QA^d."""
    return pres.indecomposables_dim(d)


def is_nonzero(pres: Presentation, x: GradedPoly) -> bool:
    """True iff x lies outside the degree-d relation subspace."""
    return pres.is_nonzero(x)


def free_presentation(name: str, algebra: GradedAlgebra, degree_bound: int = DEFAULT_DEGREE_BOUND) -> Presentation:
    return Presentation(algebra, (), degree_bound, name)
