"""
Tabled Steenrod actions on presented rings.

Some rings come with a handful of known operations on their generators.
Those values are applied by linearity, and over products by the Cartan
formula only when every operation the formula needs is either tabled or fixed
by instability.
"""

import functools
from dataclasses import dataclass
from typing import Optional, Tuple

from algebra import AmbientMismatchError, DegreeMismatchError, GradedPoly, Monomial, Presentation

from .splitting import SteenrodExpansion, SteenrodOperation


class InsufficientDataError(LookupError):
    """Raised when an operation is needed on a generator that has no table entry."""


@dataclass(frozen=True)
class TableEntry:
    """
    One tabled value theta(g).

    Attributes:
        operation: theta.
        generator: Name of g.
        value: theta(g) in the ring's algebra.
        citation: Where the value comes from.
    """
    operation: SteenrodOperation
    generator: str
    value: GradedPoly
    citation: str


@dataclass(frozen=True)
class SteenrodTable:
    """
    Tabled operations on a mod-p presented ring.

    Attributes:
        ring: The presented ring over F_p.
        entries: Tabled values.
    """
    ring: Presentation
    entries: Tuple[TableEntry, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        p = self.ring.field.characteristic
        for entry in self.entries:
            if entry.operation.prime != p:
                raise ValueError(
                    f"{entry.operation.label} is a mod {entry.operation.prime} operation; ring is over {self.ring.field}"
                )
            if entry.value.algebra != self.ring.algebra:
                raise AmbientMismatchError(f"Value of {entry.operation.label} {entry.generator} is not in the ring")
            expected = self.ring.algebra.generator(entry.generator).degree + entry.operation.degree
            if entry.value and entry.value.degree != expected:
                raise DegreeMismatchError(
                    f"{entry.operation.label} {entry.generator} = {entry.value} has degree "
                    f"{entry.value.degree}, expected {expected}"
                )

    def lookup(self, operation: SteenrodOperation, generator: str) -> Optional[TableEntry]:
        for entry in self.entries:
            if entry.operation == operation and entry.generator == generator:
                return entry
        return None


def table_apply(table: SteenrodTable, operation: SteenrodOperation, x: GradedPoly) -> SteenrodExpansion:
    """theta(x) from the table, reduced in the presented ring."""
    ring = table.ring
    if x.algebra != ring.algebra:
        raise AmbientMismatchError(f"{x} does not live in {ring.name}")
    if operation.prime != ring.field.characteristic:
        raise ValueError(f"{operation.label} does not act on a ring over {ring.field}")
    result = ring.algebra.zero()
    for mono, coeff in x.terms():
        result = result + _apply_monomial(table, operation.index, mono).scale(coeff)
    return SteenrodExpansion(x, operation, ring.normal_form(result))


def _apply_generator(table: SteenrodTable, index: int, i: int) -> GradedPoly:
    algebra = table.ring.algebra
    gen = algebra.generators[i]
    p = algebra.field.characteristic
    g = algebra.gen(gen.name)
    if index == 0:
        return g
    shift = index if p == 2 else 2 * index
    if shift > gen.degree:
        return algebra.zero()
    if shift == gen.degree:
        return g ** p
    entry = table.lookup(SteenrodOperation(p, index), gen.name)
    if entry is None:
        raise InsufficientDataError(
            f"insufficient data: {SteenrodOperation(p, index).label} {gen.name} is not tabled in {table.ring.name}"
        )
    return entry.value


def _apply_monomial(table: SteenrodTable, index: int, mono: Monomial) -> GradedPoly:
    algebra = table.ring.algebra

    @functools.lru_cache(maxsize=None)
    def power_op(n: int, factors: Tuple[int, ...]) -> GradedPoly:
        if not factors:
            return algebra.one() if n == 0 else algebra.zero()
        if len(factors) == 1:
            return _apply_generator(table, n, factors[0])
        head, rest = factors[0], factors[1:]
        total = algebra.zero()
        for i in range(n + 1):
            head_value = _apply_generator(table, i, head)
            if head_value:
                total = total + head_value * power_op(n - i, rest)
        return total

    factors = tuple(i for i, e in mono for _ in range(e))
    return power_op(index, factors)
