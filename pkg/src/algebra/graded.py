"""
Graded Algebra Module

Free graded-commutative polynomial algebras over Q or F_p with Koszul signs.

Monomials are sparse: a tuple of (generator index, exponent) pairs in
increasing index order. The declaration order of the generators fixes the
normal form of every monomial, so equality and hashing are deterministic.
Over F_2 parity is ignored entirely (no signs, odd classes may be squared),
which matches mod-2 cohomology rings such as F_2[t, e].
"""

import functools
import dataclasses
from dataclasses import dataclass
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .scalars import QQ, Field, FieldMismatchError, Scalar

Monomial = Tuple[Tuple[int, int], ...]
ONE: Monomial = ()


class AmbientMismatchError(ValueError):
    """Raised when polynomials from different algebras are combined."""


class DegreeMismatchError(ValueError):
    """Raised when an image or relation does not have the degree it must have."""


@dataclass(frozen=True)
class GenSymbol:
    """
    A generator of a free graded-commutative algebra.

    Attributes:
        name: Identifier as printed (e.g. 'c_1', "w'").
        degree: Positive cohomological degree.
    """
    name: str
    degree: int

    def __post_init__(self):
        if not self.name or any(ch.isspace() for ch in self.name):
            raise ValueError(f"Invalid generator name {self.name!r}")
        if not isinstance(self.degree, int) or self.degree <= 0:
            raise ValueError(
                f"Generator {self.name} must have a positive integer degree, got {self.degree!r}"
            )

    @property
    def is_odd(self) -> bool:
        return self.degree % 2 == 1

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class GradedAlgebra:
    """
    The free graded-commutative algebra on an ordered list of generators.

    Attributes:
        generators: Generators in declaration (canonical) order.
        field: Coefficient field.
    """
    generators: Tuple[GenSymbol, ...]
    field: Field = QQ
    _index: Dict[str, int] = dataclasses.field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        index: Dict[str, int] = {}
        for i, gen in enumerate(self.generators):
            if gen.name in index:
                raise ValueError(f"Duplicate generator name {gen.name!r}")
            index[gen.name] = i
        object.__setattr__(self, "_index", index)

    @classmethod
    def free(cls, spec: Iterable[Tuple[str, int]], field: Field = QQ) -> "GradedAlgebra":
        """Build an algebra from (name, degree) pairs."""
        return cls(tuple(GenSymbol(name, degree) for name, degree in spec), field)

    # ---------------------------------------------------------------- #
    #  Generators                                                        #
    # ---------------------------------------------------------------- #

    @property
    def names(self) -> List[str]:
        return [g.name for g in self.generators]

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def index(self, name: Union[str, GenSymbol]) -> int:
        key = name.name if isinstance(name, GenSymbol) else name
        try:
            return self._index[key]
        except KeyError:
            raise KeyError(f"Generator {key!r} not in algebra {self.names}") from None

    def generator(self, name: Union[str, GenSymbol]) -> GenSymbol:
        return self.generators[self.index(name)]

    def gen(self, name: Union[str, GenSymbol]) -> "GradedPoly":
        return GradedPoly(self, {((self.index(name), 1),): 1})

    def gens(self) -> List["GradedPoly"]:
        return [self.gen(g.name) for g in self.generators]

    def is_signed_odd(self, i: int) -> bool:
        """True when generator i anticommutes (odd degree, characteristic != 2)."""
        return self.field.is_signed and self.generators[i].is_odd

    def with_field(self, field: Field) -> "GradedAlgebra":
        return GradedAlgebra(self.generators, field)

    # ---------------------------------------------------------------- #
    #  Constructors for elements                                          #
    # ---------------------------------------------------------------- #

    def zero(self) -> "GradedPoly":
        return GradedPoly(self, {})

    def one(self) -> "GradedPoly":
        return GradedPoly(self, {ONE: 1})

    def constant(self, value) -> "GradedPoly":
        return GradedPoly(self, {ONE: value})

    def monomial(self, exponents: Mapping[str, int]) -> Monomial:
        """Sparse monomial from a {name: exponent} mapping."""
        pairs = sorted((self.index(name), e) for name, e in exponents.items() if e)
        for _, e in pairs:
            if e < 0:
                raise ValueError(f"Negative exponent in {dict(exponents)}")
        return tuple(pairs)

    def term(self, coefficient, exponents: Mapping[str, int]) -> "GradedPoly":
        return GradedPoly(self, {self.monomial(exponents): coefficient})

    # ---------------------------------------------------------------- #
    #  Monomial bookkeeping                                              #
    # ---------------------------------------------------------------- #

    def monomial_degree(self, mono: Monomial) -> int:
        return sum(self.generators[i].degree * e for i, e in mono)

    def dense(self, mono: Monomial) -> Tuple[int, ...]:
        vec = [0] * len(self.generators)
        for i, e in mono:
            vec[i] = e
        return tuple(vec)

    def sort_key(self, mono: Monomial) -> Tuple:
        """Canonical order: word length ascending, then exponents lexicographically descending."""
        return (word_length(mono), tuple(-e for e in self.dense(mono)))

    def format_monomial(self, mono: Monomial) -> str:
        return " ".join(
            self.generators[i].name if e == 1 else f"{self.generators[i].name}^{e}"
            for i, e in mono
        )

    def monomials_of_degree(self, d: int) -> Tuple[Monomial, ...]:
        """All nonzero monomials of degree d, in canonical order."""
        return _monomials_of_degree(self, d)

    def multiply_monomials(self, a: Monomial, b: Monomial) -> Optional[Tuple[int, Monomial]]:
        """Product of two monomials as (sign, monomial), or None when it vanishes."""
        if not a:
            return 1, b
        if not b:
            return 1, a
        merged: Dict[int, int] = dict(a)
        for i, e in b:
            if i in merged:
                if self.is_signed_odd(i):
                    return None
                merged[i] += e
            else:
                merged[i] = e
        sign = 1
        if self.field.is_signed:
            odd_a = [i for i, _ in a if self.generators[i].is_odd]
            if odd_a:
                swaps = 0
                for j, _ in b:
                    if self.generators[j].is_odd:
                        swaps += sum(1 for i in odd_a if i > j)
                if swaps % 2:
                    sign = -1
        return sign, tuple(sorted(merged.items()))


def word_length(mono: Monomial) -> int:
    return sum(e for _, e in mono)


@functools.lru_cache(maxsize=None)
def _monomials_of_degree(algebra: GradedAlgebra, d: int) -> Tuple[Monomial, ...]:
    if d < 0:
        return ()
    gens = algebra.generators
    found: List[Monomial] = []

    def extend(start: int, remaining: int, prefix: List[Tuple[int, int]]):
        if remaining == 0:
            found.append(tuple(prefix))
            return
        for i in range(start, len(gens)):
            deg = gens[i].degree
            if deg > remaining:
                continue
            max_e = remaining // deg
            if algebra.is_signed_odd(i):
                max_e = min(max_e, 1)
            for e in range(max_e, 0, -1):
                prefix.append((i, e))
                extend(i + 1, remaining - e * deg, prefix)
                prefix.pop()

    extend(0, d, [])
    return tuple(sorted(found, key=algebra.sort_key))


class GradedPoly:
    """
    An element of a free graded-commutative algebra with exact coefficients.

    Coefficients are stored raw (Fraction over Q, int in [0, p) over F_p) and
    exposed as Scalar. Instances are immutable and hashable.
    """

    __slots__ = ("algebra", "_terms", "_hash")

    def __init__(self, algebra: GradedAlgebra, terms: Mapping[Monomial, object] = None):
        self.algebra = algebra
        clean: Dict[Monomial, object] = {}
        fld = algebra.field
        for mono, coeff in (terms or {}).items():
            value = fld.normalize(coeff)
            if not value:
                continue
            if any(e > 1 and algebra.is_signed_odd(i) for i, e in mono):
                continue
            clean[mono] = value
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, algebra: GradedAlgebra, terms: Dict[Monomial, object]) -> "GradedPoly":
        """Wrap already-normalized raw terms, dropping zeros."""
        obj = cls.__new__(cls)
        obj.algebra = algebra
        obj._terms = {m: c for m, c in terms.items() if c}
        obj._hash = None
        return obj

    # ---------------------------------------------------------------- #
    #  Introspection                                                     #
    # ---------------------------------------------------------------- #

    @property
    def field(self) -> Field:
        return self.algebra.field

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def monomials(self) -> List[Monomial]:
        return sorted(self._terms, key=self.algebra.sort_key)

    def terms(self) -> List[Tuple[Monomial, Scalar]]:
        """(monomial, coefficient) pairs in canonical order."""
        fld = self.field
        return [(m, Scalar(fld, self._terms[m])) for m in self.monomials()]

    def raw_terms(self) -> Dict[Monomial, object]:
        return dict(self._terms)

    def coefficient(self, mono: Union[Monomial, "GradedPoly"]) -> Scalar:
        if isinstance(mono, GradedPoly):
            if len(mono) != 1:
                raise ValueError(f"Expected a single monomial, got {mono}")
            mono = next(iter(mono._terms))
        return Scalar(self.field, self._terms.get(mono, self.field.normalize(0)))

    def degrees(self) -> List[int]:
        return sorted({self.algebra.monomial_degree(m) for m in self._terms})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> Optional[int]:
        """Degree of a homogeneous polynomial; None for zero."""
        degs = self.degrees()
        if not degs:
            return None
        if len(degs) > 1:
            raise DegreeMismatchError(f"{self} is not homogeneous (degrees {degs})")
        return degs[0]

    def generators_used(self) -> List[GenSymbol]:
        used = sorted({i for m in self._terms for i, _ in m})
        return [self.algebra.generators[i] for i in used]

    def homogeneous_components(self) -> Dict[int, "GradedPoly"]:
        parts: Dict[int, Dict[Monomial, object]] = {}
        for m, c in self._terms.items():
            parts.setdefault(self.algebra.monomial_degree(m), {})[m] = c
        return {d: GradedPoly._raw(self.algebra, parts[d]) for d in sorted(parts)}

    def word_length_component(self, length: int) -> "GradedPoly":
        return GradedPoly._raw(
            self.algebra, {m: c for m, c in self._terms.items() if word_length(m) == length}
        )

    def linear_part(self) -> "GradedPoly":
        return self.word_length_component(1)

    def max_word_length(self) -> int:
        return max((word_length(m) for m in self._terms), default=0)

    # ---------------------------------------------------------------- #
    #  Arithmetic                                                        #
    # ---------------------------------------------------------------- #

    def _coerce(self, other) -> "GradedPoly":
        if isinstance(other, GradedPoly):
            if other.algebra is not self.algebra and other.algebra != self.algebra:
                if other.algebra.field != self.algebra.field:
                    raise FieldMismatchError(
                        f"Cannot combine polynomials over {self.field} and {other.field}"
                    )
                raise AmbientMismatchError(
                    f"Polynomials live in different algebras: {self.algebra.names} vs {other.algebra.names}"
                )
            return other
        if isinstance(other, Scalar) or isinstance(other, int):
            return self.algebra.constant(other)
        return NotImplemented

    def __add__(self, other) -> "GradedPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        fld = self.field
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = fld.reduce_raw(out.get(m, 0) + c)
        return GradedPoly._raw(self.algebra, out)

    __radd__ = __add__

    def __neg__(self) -> "GradedPoly":
        fld = self.field
        return GradedPoly._raw(self.algebra, {m: fld.reduce_raw(-c) for m, c in self._terms.items()})

    def __sub__(self, other) -> "GradedPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "GradedPoly":
        return (-self) + other

    def scale(self, scalar) -> "GradedPoly":
        fld = self.field
        value = fld.normalize(scalar)
        return GradedPoly._raw(
            self.algebra, {m: fld.reduce_raw(c * value) for m, c in self._terms.items()}
        )

    def __mul__(self, other) -> "GradedPoly":
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return multiply(self, other)

    def __rmul__(self, other) -> "GradedPoly":
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, exponent: int) -> "GradedPoly":
        if exponent < 0:
            raise ValueError("Negative powers are not defined")
        result = self.algebra.one()
        for _ in range(exponent):
            result = multiply(result, self)
        return result

    # ---------------------------------------------------------------- #
    #  Equality and display                                              #
    # ---------------------------------------------------------------- #

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == self.algebra.constant(other)
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return (
            (self.algebra is other.algebra or self.algebra == other.algebra)
            and self._terms == other._terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.algebra, frozenset(self._terms.items())))
        return self._hash

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"GradedPoly({format_poly(self)!r} over {self.field})"


def format_poly(poly: GradedPoly) -> str:
    """Render in canonical monomial order, e.g. 'c_3^2 - c_1^3 c_3 + 1/8 c_1^6'."""
    if poly.is_zero():
        return "0"
    pieces: List[str] = []
    for mono, coeff in poly.terms():
        negative = coeff.is_negative()
        magnitude = -coeff.value if negative else coeff.value
        body = poly.algebra.format_monomial(mono)
        if not body:
            text = str(magnitude)
        elif magnitude == 1:
            text = body
        else:
            text = f"{magnitude} {body}"
        if not pieces:
            pieces.append(f"-{text}" if negative else text)
        else:
            pieces.append(f"- {text}" if negative else f"+ {text}")
    return " ".join(pieces)


# -------------------------------------------------------------------- #
#  Module-level operations                                               #
# -------------------------------------------------------------------- #

def multiply(a: GradedPoly, b: GradedPoly) -> GradedPoly:
    """Bilinear product with Koszul signs."""
    b = a._coerce(b)
    algebra = a.algebra
    fld = algebra.field
    out: Dict[Monomial, object] = {}
    for ma, ca in a._terms.items():
        for mb, cb in b._terms.items():
            prod = algebra.multiply_monomials(ma, mb)
            if prod is None:
                continue
            sign, mono = prod
            value = ca * cb if sign > 0 else -(ca * cb)
            out[mono] = fld.reduce_raw(out.get(mono, 0) + value)
    return GradedPoly._raw(algebra, out)


def word_length_component(poly: GradedPoly, length: int) -> GradedPoly:
    """Sum of the terms whose exponent sum equals length."""
    if length < 0:
        raise ValueError("Word length must be nonnegative")
    return poly.word_length_component(length)


def _assignment_key(key: Union[str, GenSymbol]) -> str:
    return key.name if isinstance(key, GenSymbol) else key


def substitute(
    poly: GradedPoly,
    assignment: Mapping[Union[str, GenSymbol], GradedPoly],
    target: Optional[GradedAlgebra] = None,
) -> GradedPoly:
    """
    Extend a generator assignment to an algebra map and apply it to poly.

    Generators without an image are sent to the generator of the same name in
    the target algebra. Images must be homogeneous of the generator's degree
    (zero is always allowed). Coefficients are carried into the target field,
    so substitution also realizes reduction mod p.
    """
    source = poly.algebra
    images: Dict[str, GradedPoly] = {_assignment_key(k): v for k, v in assignment.items()}
    if target is None:
        target = next(iter(images.values())).algebra if images else source
    for name in images:
        if name not in source:
            raise KeyError(f"Assignment names {name!r}, which is not a generator of {source.names}")

    resolved: List[Optional[GradedPoly]] = []
    for gen in source.generators:
        image = images.get(gen.name)
        if image is None:
            if gen.name in target and target.generator(gen.name).degree == gen.degree:
                image = target.gen(gen.name)
            else:
                resolved.append(None)
                continue
        if image.algebra != target:
            raise AmbientMismatchError(f"Image of {gen.name} does not live in the target algebra")
        if image and image.degree != gen.degree:
            raise DegreeMismatchError(
                f"Image of {gen.name} has degree {image.degree}, expected {gen.degree}"
            )
        resolved.append(image)

    powers: Dict[Tuple[int, int], GradedPoly] = {}

    def power(i: int, e: int) -> GradedPoly:
        key = (i, e)
        if key not in powers:
            base = resolved[i]
            if base is None:
                raise KeyError(
                    f"No image for generator {source.generators[i].name} in the target algebra"
                )
            powers[key] = base if e == 1 else multiply(power(i, e - 1), base)
        return powers[key]

    fld = target.field
    result: Dict[Monomial, object] = {}
    for mono, coeff in poly._terms.items():
        value = fld.normalize(coeff)
        if not value:
            continue
        product = target.constant(value)
        for i, e in mono:
            product = multiply(product, power(i, e))
            if product.is_zero():
                break
        for m, c in product._terms.items():
            result[m] = fld.reduce_raw(result.get(m, 0) + c)
    return GradedPoly._raw(target, result)


def transfer(poly: GradedPoly, target: GradedAlgebra) -> GradedPoly:
    """Move poly into another algebra by generator name (identity substitution)."""
    return substitute(poly, {}, target)


def sum_polys(polys: Sequence[GradedPoly], algebra: GradedAlgebra) -> GradedPoly:
    total = algebra.zero()
    for p in polys:
        total = total + p
    return total
