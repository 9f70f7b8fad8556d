from __future__ import annotations

from fractions import Fraction

import pytest

from critpoint_app.algebra.field import (IMAG_UNIT, ONE, ZERO, FieldElem, as_field, as_point, format_rational,
                                         parse_rational, point_to_json)
from critpoint_app.errors import BadInput, NonRealInput


@pytest.mark.parametrize(
    "text, expected",
    [("3/6", Fraction(1, 2)), ("-4/2", Fraction(-2)), (" 7 ", Fraction(7)), ("0/5", Fraction(0))],
)
def test_parse_rational_normalizes(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("bad", ["abc", "1/0", "1.5e", True, 1.5, None])
def test_parse_rational_rejects_inexact_values(bad):
    with pytest.raises(BadInput):
        parse_rational(bad)


def test_format_rational_uses_lowest_terms():
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(-10, 5)) == "-2"


def test_gaussian_arithmetic():
    a = FieldElem(Fraction(1), Fraction(1))
    b = a.conjugate()
    assert a * b == 2
    assert (a * a) == FieldElem(Fraction(0), Fraction(2))
    assert IMAG_UNIT * IMAG_UNIT == -1
    assert a / a == ONE
    assert a.inverse() == FieldElem(Fraction(1, 2), Fraction(-1, 2))


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO.inverse()


def test_powers_including_negative_exponents():
    two = as_field(2)
    assert two ** 10 == 1024
    assert two ** -2 == as_field("1/4")
    assert IMAG_UNIT ** 4 == ONE


def test_real_value_rejects_imaginary_part():
    assert as_field("5/3").real_value() == Fraction(5, 3)
    with pytest.raises(NonRealInput):
        IMAG_UNIT.real_value()


def test_json_forms():
    assert as_field("2/4").to_json() == "1/2"
    assert FieldElem(Fraction(1), Fraction(-3)).to_json() == {"re": "1", "im": "-3"}
    assert FieldElem.from_json({"re": "1/2", "im": "2"}) == FieldElem(Fraction(1, 2), Fraction(2))
    assert FieldElem.from_json({"im": "1"}) == IMAG_UNIT
    with pytest.raises(BadInput):
        FieldElem.from_json({"real": "1"})


def test_equality_and_hash_agree_with_rationals():
    assert as_field(3) == 3
    assert as_field("1/2") == Fraction(1, 2)
    assert hash(as_field("1/2")) == hash(Fraction(1, 2))
    assert len({as_field(1), as_field("2/2"), ONE}) == 1


def test_denominators_beyond_float_precision_stay_exact():
    tiny = as_field("1/" + "1" + "0" * 40)
    total = tiny + tiny
    assert total.to_json() == "1/5" + "0" * 39
    assert (tiny * as_field(10) ** 40) == ONE
    assert parse_rational(total.to_json()) * 10 ** 40 == 2


def test_points():
    pt = as_point(["1/2", {"re": "0", "im": "1"}])
    assert point_to_json(pt) == ["1/2", {"re": "0", "im": "1"}]
    with pytest.raises(BadInput):
        as_point([1, 2, 3])
