"""
Scalars Module

Exact coefficient fields for every computation in the package: the rationals
(arbitrary-precision fractions in lowest terms) and prime fields F_p.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from sympy import isprime


class FieldMismatchError(ValueError):
    """Raised when scalars or polynomials over different fields are combined."""


@dataclass(frozen=True)
class Field:
    """
    A coefficient field: Q when characteristic is 0, otherwise F_p.

    Attributes:
        characteristic: 0 for the rationals, or a prime p.
    """
    characteristic: int = 0

    def __post_init__(self):
        if self.characteristic < 0 or (
            self.characteristic != 0 and not isprime(self.characteristic)
        ):
            raise ValueError(
                f"Field characteristic must be 0 or a prime, got {self.characteristic}"
            )

    @property
    def is_rational(self) -> bool:
        return self.characteristic == 0

    @property
    def is_signed(self) -> bool:
        """False over F_2, where graded-commutativity signs disappear."""
        return self.characteristic != 2

    def normalize(self, value) -> Union[Fraction, int]:
        """Bring a raw int/Fraction/sympy rational into this field's canonical form."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(f"Scalar over {value.field} used in {self}")
            return value.value
        if isinstance(value, int):
            if not self.is_rational:
                return value % self.characteristic
            return Fraction(value)
        if isinstance(value, Fraction):
            frac = value
        elif hasattr(value, "p") and hasattr(value, "q"):
            # sympy Integer / Rational
            frac = Fraction(int(value.p), int(value.q))
        else:
            raise TypeError(f"Not an exact rational: {value!r}")
        if self.is_rational:
            return frac
        p = self.characteristic
        if frac.denominator % p == 0:
            raise ZeroDivisionError(
                f"{frac} has no reduction mod {p} (denominator divisible by {p})"
            )
        return (frac.numerator * pow(frac.denominator, -1, p)) % p

    def reduce_raw(self, value):
        """Fast path for already-normalized raw values combined by + - *."""
        if self.is_rational:
            return value
        return value % self.characteristic

    def __call__(self, value) -> "Scalar":
        return Scalar(self, self.normalize(value))

    def zero(self) -> "Scalar":
        return self(0)

    def one(self) -> "Scalar":
        return self(1)

    def __str__(self) -> str:
        return "Q" if self.is_rational else f"F_{self.characteristic}"


QQ = Field(0)


def GF(p: int) -> Field:
    """The prime field with p elements."""
    return Field(p)


@dataclass(frozen=True)
class Scalar:
    """
    An element of a Field, always stored normalized.

    Attributes:
        field: The field the value lives in.
        value: Fraction in lowest terms (Q) or an int in [0, p) (F_p).
    """
    field: Field
    value: Union[Fraction, int]

    def _coerce(self, other) -> Union[Fraction, int]:
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise FieldMismatchError(
                    f"Cannot combine scalars over {self.field} and {other.field}"
                )
            return other.value
        return self.field.normalize(other)

    def _wrap(self, raw) -> "Scalar":
        return Scalar(self.field, self.field.normalize(raw))

    def __add__(self, other) -> "Scalar":
        return self._wrap(self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other) -> "Scalar":
        return self._wrap(self.value - self._coerce(other))

    def __rsub__(self, other) -> "Scalar":
        return self._wrap(self._coerce(other) - self.value)

    def __mul__(self, other) -> "Scalar":
        return self._wrap(self.value * self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self) -> "Scalar":
        return self._wrap(-self.value)

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError(f"Zero has no inverse in {self.field}")
        if self.field.is_rational:
            return Scalar(self.field, 1 / self.value)
        return Scalar(self.field, pow(self.value, -1, self.field.characteristic))

    def __truediv__(self, other) -> "Scalar":
        return self * self._wrap(self._coerce(other)).inverse()

    def __bool__(self) -> bool:
        return self.value != 0

    def is_one(self) -> bool:
        return self.value == 1

    def is_negative(self) -> bool:
        """Only rationals print with a sign; F_p values are shown in [0, p)."""
        return self.field.is_rational and self.value < 0

    def __str__(self) -> str:
        return str(self.value)
