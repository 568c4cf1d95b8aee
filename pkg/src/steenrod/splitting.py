"""
Splitting Principle Module

Steenrod operations on Chern classes computed from first principles: a Chern
class c_j is the elementary symmetric polynomial e_j(t_1..t_m) in degree-2
variables, on which the total operation acts multiplicatively by
t -> t + t^p. The symmetric result is rewritten in elementary symmetric
classes through the monomial-symmetric basis.
"""

import functools
import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from math import comb
from typing import Dict, Iterator, List, Optional, Tuple

from sympy import isprime
from sympy.utilities.iterables import multiset_permutations, partitions

from algebra import GF, Field, GradedAlgebra, GradedPoly, Monomial

LOGGER = logging.getLogger(__name__)

Partition = Tuple[int, ...]


class NotSymmetricError(ValueError):
    """Raised when a polynomial expected to be symmetric is not."""


# ---------------------------------------------------------------------- #
#  Operations and expansions                                               #
# ---------------------------------------------------------------------- #

@dataclass(frozen=True)
class SteenrodOperation:
    """
    A single Steenrod operation.

    Attributes:
        prime: 2 for Sq^index, an odd prime p for P^index.
        index: Upper index.
    """
    prime: int
    index: int

    def __post_init__(self):
        if not isprime(self.prime):
            raise ValueError(f"Steenrod operations need a prime, got {self.prime}")
        if self.index < 0:
            raise ValueError(f"Operation index must be nonnegative, got {self.index}")

    @property
    def symbol(self) -> str:
        return "Sq" if self.prime == 2 else "P"

    @property
    def degree(self) -> int:
        return self.index if self.prime == 2 else 2 * self.index * (self.prime - 1)

    @property
    def label(self) -> str:
        return f"{self.symbol}^{self.index}"

    def with_index(self, index: int) -> "SteenrodOperation":
        return SteenrodOperation(self.prime, index)

    @classmethod
    def parse(cls, text: str, prime: Optional[int] = None) -> "SteenrodOperation":
        """Read 'Sq^2' or 'P^1' (the latter needs the prime)."""
        symbol, _, index = text.strip().partition("^")
        if not index.isdigit():
            raise ValueError(f"Cannot read Steenrod operation {text!r}")
        if symbol == "Sq":
            return cls(2, int(index))
        if symbol == "P":
            if prime is None or prime == 2:
                raise ValueError(f"{text!r} needs an odd prime")
            return cls(prime, int(index))
        raise ValueError(f"Unknown Steenrod operation {text!r}")

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class SteenrodExpansion:
    """
    The value of an operation on a class, in normal form.

    Attributes:
        x: Input class.
        operation: The operation applied.
        result: theta(x), reduced in the ambient ring.
    """
    x: GradedPoly
    operation: SteenrodOperation
    result: GradedPoly

    @property
    def decomposable_part(self) -> GradedPoly:
        return self.result - self.result.word_length_component(0) - self.result.linear_part()

    @property
    def is_decomposable(self) -> bool:
        return self.result.word_length_component(0).is_zero() and self.result.linear_part().is_zero()

    def coefficient(self, term: GradedPoly):
        return self.result.coefficient(term)

    def describe(self) -> str:
        return f"{self.operation.label} {self.x} = {self.result}"

    def to_dict(self) -> Dict[str, object]:
        return {
            "operation": self.operation.label,
            "prime": self.operation.prime,
            "x": str(self.x),
            "result": str(self.result),
            "decomposable": self.is_decomposable,
        }


# ---------------------------------------------------------------------- #
#  Splitting variables                                                     #
# ---------------------------------------------------------------------- #

@functools.lru_cache(maxsize=None)
def splitting_algebra(m: int, field: Field) -> GradedAlgebra:
    """Q or F_p [t_1..t_m], every t_i of degree 2."""
    return GradedAlgebra.free(((f"t_{i}", 2) for i in range(1, m + 1)), field)


@functools.lru_cache(maxsize=None)
def chern_algebra(m: int, field: Field) -> GradedAlgebra:
    """Free algebra on c_1..c_m, |c_i| = 2i."""
    return GradedAlgebra.free(((f"c_{i}", 2 * i) for i in range(1, m + 1)), field)


def elementary_symmetric(j: int, algebra: GradedAlgebra) -> GradedPoly:
    """e_j in all generators of algebra."""
    n = len(algebra.generators)
    return GradedPoly(
        algebra, {tuple((i, 1) for i in combo): 1 for combo in itertools.combinations(range(n), j)}
    )


def _check_splitting(poly: GradedPoly) -> None:
    if any(g.degree != 2 for g in poly.algebra.generators):
        raise ValueError("The total operation is only defined here on degree-2 variables")


def total_operation_component(poly: GradedPoly, p: int, k: int) -> GradedPoly:
    """
    The part of the total operation (t -> t + t^p on each variable) that
    raises exponents by k*(p-1) in total: P^k for odd p, Sq^{2k} for p = 2.
    """
    _check_splitting(poly)
    fld = poly.field
    out: Dict[Monomial, object] = {}
    for mono, coeff in poly.raw_terms().items():
        states: Dict[Tuple[int, Monomial], int] = {(0, ()): 1}
        for i, a in mono:
            nxt: Dict[Tuple[int, Monomial], int] = {}
            for (used, partial), c in states.items():
                for ki in range(0, min(a, k - used) + 1):
                    key = (used + ki, partial + ((i, a + ki * (p - 1)),))
                    nxt[key] = nxt.get(key, 0) + c * comb(a, ki)
            states = nxt
        for (used, partial), c in states.items():
            if used == k:
                out[partial] = fld.reduce_raw(out.get(partial, 0) + fld.normalize(c) * coeff)
    return GradedPoly._raw(poly.algebra, out)


def total_operation(poly: GradedPoly, p: int) -> GradedPoly:
    """The full total operation, all components summed."""
    _check_splitting(poly)
    top = poly.max_word_length()
    result = poly.algebra.zero()
    for k in range(top + 1):
        result = result + total_operation_component(poly, p, k)
    return result


# ---------------------------------------------------------------------- #
#  Symmetric functions                                                     #
# ---------------------------------------------------------------------- #

def _orbit_size(partition: Partition, m: int) -> int:
    padded = partition + (0,) * (m - len(partition))
    size = 1
    remaining = m
    for mult in Counter(padded).values():
        size *= comb(remaining, mult)
        remaining -= mult
    return size


def conjugate(partition: Partition) -> Partition:
    if not partition:
        return ()
    return tuple(sum(1 for part in partition if part >= i) for i in range(1, partition[0] + 1))


@dataclass(frozen=True)
class SymmetricExpansion:
    """
    A symmetric polynomial in m degree-2 variables, stored in the
    monomial-symmetric basis.

    Attributes:
        variables: Number m of splitting variables.
        field: Coefficient field.
        coefficients: (partition, raw coefficient) pairs, largest partition first.
    """
    variables: int
    field: Field
    coefficients: Tuple[Tuple[Partition, object], ...]

    @classmethod
    def from_poly(cls, poly: GradedPoly) -> "SymmetricExpansion":
        _check_splitting(poly)
        m = len(poly.algebra.generators)
        coeffs: Dict[Partition, object] = {}
        counts: Counter = Counter()
        for mono, c in poly.raw_terms().items():
            part = tuple(sorted((e for _, e in mono), reverse=True))
            if part in coeffs and coeffs[part] != c:
                raise NotSymmetricError(
                    f"Coefficients differ inside the orbit of {part}: {coeffs[part]} vs {c}"
                )
            coeffs[part] = c
            counts[part] += 1
        for part, seen in counts.items():
            if seen != _orbit_size(part, m):
                raise NotSymmetricError(
                    f"Orbit of {part} has {seen} of {_orbit_size(part, m)} monomials"
                )
        ordered = tuple(sorted(coeffs.items(), reverse=True))
        return cls(m, poly.field, ordered)

    def to_poly(self, algebra: Optional[GradedAlgebra] = None) -> GradedPoly:
        algebra = algebra or splitting_algebra(self.variables, self.field)
        terms: Dict[Monomial, object] = {}
        for part, c in self.coefficients:
            padded = list(part) + [0] * (self.variables - len(part))
            for perm in multiset_permutations(padded):
                mono = tuple((i, e) for i, e in enumerate(perm) if e)
                terms[mono] = c
        return GradedPoly(algebra, terms)


def _partitions_bounded(n: int, max_parts: int, max_size: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for part in partitions(n, m=max_parts, k=max_size):
        yield tuple(sorted(
            (size for size, mult in part.items() for _ in range(mult)), reverse=True
        ))


@functools.lru_cache(maxsize=None)
def _count_01_matrices(rows: Partition, cols: Partition) -> int:
    """Number of 0-1 matrices with row sums rows and column sums cols."""
    if not cols:
        return 1 if not rows else 0
    if sum(rows) != sum(cols) or (rows and rows[0] > len(cols)):
        return 0
    c, rest = cols[0], cols[1:]
    groups = sorted(Counter(rows).items(), reverse=True)
    total = 0

    def choose(g: int, need: int, ways: int, new_rows: List[int]):
        nonlocal total
        if g == len(groups):
            if need == 0:
                key = tuple(sorted((r for r in new_rows if r > 0), reverse=True))
                total += ways * _count_01_matrices(key, rest)
            return
        value, count = groups[g]
        for take in range(0, min(count, need) + 1):
            choose(
                g + 1,
                need - take,
                ways * comb(count, take),
                new_rows + [value] * (count - take) + [value - 1] * take,
            )

    choose(0, c, 1, [])
    return total


@functools.lru_cache(maxsize=None)
def elementary_product_expansion(mu: Partition, m: int) -> Tuple[Tuple[Partition, int], ...]:
    """Monomial-symmetric expansion of e_mu in m variables (integer coefficients)."""
    n = sum(mu)
    out = []
    for nu in _partitions_bounded(n, m, len(mu)):
        count = _count_01_matrices(tuple(sorted(mu, reverse=True)), nu)
        if count:
            out.append((nu, count))
    return tuple(out)


def symmetric_to_elementary(s: SymmetricExpansion) -> GradedPoly:
    """
    Rewrite a symmetric polynomial in c_1..c_m by repeatedly subtracting the
    product of elementary classes whose leading partition is the largest one
    left (lexicographic order).
    """
    m = s.variables
    fld = s.field
    target = chern_algebra(m, fld)
    coeffs: Dict[Partition, object] = {part: c for part, c in s.coefficients if c}
    out: Dict[Monomial, object] = {}
    steps = 0
    while coeffs:
        lead = max(coeffs)
        c = coeffs[lead]
        mu = conjugate(lead)
        if len(lead) > m:
            raise NotSymmetricError(f"Partition {lead} has more than {m} parts")
        mono = tuple(sorted(Counter(part - 1 for part in mu).items()))
        out[mono] = fld.reduce_raw(out.get(mono, 0) + c)
        for nu, count in elementary_product_expansion(mu, m):
            updated = fld.reduce_raw(coeffs.get(nu, 0) - c * count)
            if updated:
                coeffs[nu] = updated
            else:
                coeffs.pop(nu, None)
        steps += 1
    LOGGER.debug("symmetric rewrite in %d variables took %d steps", m, steps)
    return GradedPoly._raw(target, out)


# ---------------------------------------------------------------------- #
#  Operations on Chern classes                                             #
# ---------------------------------------------------------------------- #

def power_op_on_chern(m: int, p: int, k: int, j: int) -> SteenrodExpansion:
    """
    theta(c_j) in H*(BU(m); F_p) with theta = Sq^{2k} for p = 2 and P^k for
    odd p, computed through the splitting principle.
    """
    if not isprime(p):
        raise ValueError(f"{p} is not prime")
    if not 1 <= j <= m:
        raise ValueError(f"Chern index {j} out of range 1..{m}")
    if k < 0:
        raise ValueError(f"Operation index must be nonnegative, got {k}")
    fld = GF(p)
    split = splitting_algebra(m, fld)
    image = total_operation_component(elementary_symmetric(j, split), p, k)
    result = symmetric_to_elementary(SymmetricExpansion.from_poly(image))
    operation = SteenrodOperation(p, 2 * k if p == 2 else k)
    x = chern_algebra(m, fld).gen(f"c_{j}")
    LOGGER.debug("%s c_%d in BU(%d) has %d terms", operation.label, j, m, len(result))
    return SteenrodExpansion(x, operation, result)
