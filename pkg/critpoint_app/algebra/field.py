from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Sequence, Tuple, Union

from ..errors import BadInput, NonRealInput

_ZERO_Q = Fraction(0)


def parse_rational(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise BadInput(f"boolean is not a rational number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise BadInput(f"not an exact rational: {value!r}") from exc
    raise BadInput(f"expected an exact rational as 'p/q', got {type(value).__name__}: {value!r}")


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True, eq=False, slots=True)
class FieldElem:
    """Element of Q(i); ``im == 0`` is the rational subfield."""

    re: Fraction = _ZERO_Q
    im: Fraction = _ZERO_Q

    def __post_init__(self) -> None:
        if not isinstance(self.re, Fraction):
            object.__setattr__(self, "re", parse_rational(self.re))
        if not isinstance(self.im, Fraction):
            object.__setattr__(self, "im", parse_rational(self.im))

    @classmethod
    def _raw(cls, re: Fraction, im: Fraction = _ZERO_Q) -> "FieldElem":
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    @property
    def is_zero(self) -> bool:
        return not self.re and not self.im

    @property
    def is_real(self) -> bool:
        return not self.im

    def real_value(self) -> Fraction:
        if self.im:
            raise NonRealInput(f"{self} has a nonzero imaginary part")
        return self.re

    def conjugate(self) -> "FieldElem":
        if not self.im:
            return self
        return FieldElem._raw(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "FieldElem":
        if self.is_zero:
            raise ZeroDivisionError("inverse of zero field element")
        if not self.im:
            return FieldElem._raw(1 / self.re)
        n = self.norm()
        return FieldElem._raw(self.re / n, -self.im / n)

    def sort_key(self) -> Tuple[Fraction, Fraction]:
        return (self.re, self.im)

    def __add__(self, other: Any) -> "FieldElem":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return FieldElem._raw(self.re + o.re)
        return FieldElem._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "FieldElem":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return FieldElem._raw(self.re - o.re)
        return FieldElem._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Any) -> "FieldElem":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: Any) -> "FieldElem":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return FieldElem._raw(self.re * o.re)
        return FieldElem._raw(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "FieldElem":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            if not o.re:
                raise ZeroDivisionError("division by zero field element")
            return FieldElem._raw(self.re / o.re)
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> "FieldElem":
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self) -> "FieldElem":
        return FieldElem._raw(-self.re, -self.im if self.im else _ZERO_Q)

    def __pos__(self) -> "FieldElem":
        return self

    def __pow__(self, exponent: int) -> "FieldElem":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: Any) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        if not self.im:
            return format_rational(self.re)
        if not self.re:
            return f"{format_rational(self.im)}i"
        sign = "+" if self.im > 0 else "-"
        return f"{format_rational(self.re)}{sign}{format_rational(abs(self.im))}i"

    def __repr__(self) -> str:
        return f"FieldElem({self})"

    def to_json(self) -> Union[str, Dict[str, str]]:
        if not self.im:
            return format_rational(self.re)
        return {"re": format_rational(self.re), "im": format_rational(self.im)}

    @classmethod
    def from_json(cls, value: Any) -> "FieldElem":
        if isinstance(value, FieldElem):
            return value
        if isinstance(value, dict):
            unknown = set(value) - {"re", "im"}
            if unknown:
                raise BadInput(f"unexpected keys in field element: {sorted(unknown)}")
            return cls(parse_rational(value.get("re", 0)), parse_rational(value.get("im", 0)))
        return cls(parse_rational(value))


def _coerce(value: Any) -> "FieldElem | None":
    if isinstance(value, FieldElem):
        return value
    if isinstance(value, bool):
        return None
    if isinstance(value, int):
        return FieldElem._raw(Fraction(value))
    if isinstance(value, Fraction):
        return FieldElem._raw(value)
    return None


def as_field(value: Any) -> FieldElem:
    coerced = _coerce(value)
    if coerced is not None:
        return coerced
    return FieldElem.from_json(value)


ZERO = FieldElem._raw(_ZERO_Q)
ONE = FieldElem._raw(Fraction(1))
IMAG_UNIT = FieldElem._raw(_ZERO_Q, Fraction(1))

Point = Tuple[FieldElem, FieldElem]


def as_point(pair: Sequence[Any]) -> Point:
    if len(pair) != 2:
        raise BadInput(f"a point needs exactly two coordinates, got {len(pair)}")
    return (as_field(pair[0]), as_field(pair[1]))


def point_to_json(pt: Point) -> list:
    return [pt[0].to_json(), pt[1].to_json()]


def point_is_real(pt: Point) -> bool:
    return pt[0].is_real and pt[1].is_real


def point_key(pt: Point) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    return (pt[0].re, pt[0].im, pt[1].re, pt[1].im)
