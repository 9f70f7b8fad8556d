from __future__ import annotations

import pytest

from critpoint_app.algebra.affine import AffineMap
from critpoint_app.algebra.poly import X, Y, BivarPoly, affine_pullback
from critpoint_app.errors import ConstantInput, NotACriticalPoint
from critpoint_app.multiplicity import (critical_set_finite, hessian_determinant, intersection_multiplicity,
                                        is_critical_point, is_morse_point, local_algebra_dimension, milnor_number)
from critpoint_app.pencil import rotated_member
from critpoint_app.sampling import random_affine, random_poly

ORIGIN = (0, 0)


@pytest.mark.parametrize(
    "f, g, expected",
    [
        (X, Y, 1),
        (Y, Y - X ** 2, 2),
        (Y ** 2 - X ** 3, Y, 3),
        (Y ** 2 - X ** 3, X, 2),
        (X - 1, Y, 0),
        (Y ** 2 - X ** 3, Y ** 2 + X ** 3, 6),
    ],
)
def test_known_multiplicities(f, g, expected):
    assert intersection_multiplicity(f, g, ORIGIN).value == expected
    assert intersection_multiplicity(g, f, ORIGIN).value == expected


def test_shared_components():
    assert intersection_multiplicity(X * Y, X * (Y - 1), ORIGIN).is_infinite
    assert intersection_multiplicity(X * Y, X * (Y - 1), (-1, 0)).value == 0
    assert intersection_multiplicity(BivarPoly.zero(), X, ORIGIN).to_json() == "inf"
    assert intersection_multiplicity(BivarPoly.zero(), BivarPoly.zero(), (3, 3)).is_infinite


def through_origin(rng, degree=3):
    return random_poly(rng, degree, lo=-2, hi=2, constant_term=False)


def test_fulton_properties(lcg):
    for _ in range(15):
        f, g, h = through_origin(lcg), through_origin(lcg), through_origin(lcg)
        fg = intersection_multiplicity(f, g, ORIGIN)
        if fg.is_infinite:
            continue
        assert intersection_multiplicity(g, f, ORIGIN) == fg
        assert intersection_multiplicity(f, g + h * f, ORIGIN) == fg
        fh = intersection_multiplicity(f, h, ORIGIN)
        if not fh.is_infinite:
            assert intersection_multiplicity(f, g * h, ORIGIN).value == fg.value + fh.value


def test_affine_invariance(lcg):
    for _ in range(10):
        f, g = through_origin(lcg), through_origin(lcg)
        t = random_affine(lcg)
        moved = t.inverse().apply(ORIGIN)
        assert intersection_multiplicity(affine_pullback(f, t), affine_pullback(g, t), moved) == (
            intersection_multiplicity(f, g, ORIGIN)
        )


def test_local_algebra_oracle_agrees(lcg):
    for _ in range(50):
        f, g = through_origin(lcg, 2), through_origin(lcg, 2)
        assert local_algebra_dimension(f, g, ORIGIN, cap=8) == intersection_multiplicity(f, g, ORIGIN)


@pytest.mark.parametrize(
    "f, g, expected",
    [
        (Y - X, Y, 1),
        (Y - X ** 2, Y, 2),
        (Y - X ** 4, Y, 4),
        (Y - X ** 6, Y, 6),
        (Y ** 2 - X ** 3, Y - X ** 2, 3),
        (Y - X ** 2, Y - X ** 2 - Y ** 2, 4),
        (Y - X ** 3, Y - X ** 3 - X ** 5, 5),
        (Y ** 2 - X ** 3, Y ** 2 - X ** 5, 6),
    ],
)
def test_oracle_on_high_contact_pairs(f, g, expected):
    assert local_algebra_dimension(f, g, ORIGIN).value == expected
    assert intersection_multiplicity(f, g, ORIGIN).value == expected
    assert local_algebra_dimension(f, g, ORIGIN) == intersection_multiplicity(f, g, ORIGIN)


def test_bezout_count():
    f, g = X ** 2 - 1, Y ** 2 - 1
    total = sum(intersection_multiplicity(f, g, (a, b)).value for a in (1, -1) for b in (1, -1))
    assert total == 4


def test_critical_and_morse_points(vertex_cubic):
    assert is_critical_point(vertex_cubic, (1, 0))
    assert is_critical_point(vertex_cubic, (0, 1))
    assert milnor_number(vertex_cubic, ORIGIN).value == 2
    assert hessian_determinant(vertex_cubic, ORIGIN) == 0
    assert not is_morse_point(vertex_cubic, ORIGIN)
    assert is_morse_point(rotated_member(), ORIGIN)
    with pytest.raises(NotACriticalPoint):
        is_morse_point(X, ORIGIN)


def test_critical_set_finiteness():
    assert critical_set_finite(X * Y * (X + Y - 1))
    assert not critical_set_finite(2 * X ** 3 - 3 * X ** 2)
    with pytest.raises(ConstantInput):
        critical_set_finite(BivarPoly.constant(5))
