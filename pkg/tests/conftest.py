from __future__ import annotations

import os

import pytest

from critpoint_app.algebra.field import FieldElem
from critpoint_app.algebra.poly import X, Y, BivarPoly
from critpoint_app.point_config import PointConfig
from critpoint_app.sampling import Lcg64

os.environ.setdefault("QT_QPA_PLATFORM", "offscreen")

TRIANGLE = [(0, 0), (1, 0), (0, 1)]


def to_sympy_matrix(rows):
    import sympy as sp

    def convert(value: FieldElem):
        entry = sp.Rational(value.re.numerator, value.re.denominator)
        if value.im:
            entry += sp.I * sp.Rational(value.im.numerator, value.im.denominator)
        return entry

    return sp.Matrix([[convert(v) for v in row] for row in rows])


@pytest.fixture
def lcg() -> Lcg64:
    return Lcg64(20240601)


@pytest.fixture
def rhombus() -> PointConfig:
    return PointConfig.of(TRIANGLE + [(1, 1)])


@pytest.fixture
def center_config() -> PointConfig:
    return PointConfig.of(TRIANGLE + [("1/3", "1/3")])


@pytest.fixture
def collinear_four() -> PointConfig:
    return PointConfig.of([(0, 0), (1, 0), (2, 0), (3, 0)])


@pytest.fixture
def vertex_cubic() -> BivarPoly:
    third = BivarPoly.constant("1/3")
    half = BivarPoly.constant("1/2")
    return third * (X ** 3 + Y ** 3) - (X ** 2 * Y + X * Y ** 2) - half * (X ** 2 + Y ** 2) + X * Y


@pytest.fixture
def sympy_matrix():
    pytest.importorskip("sympy")
    return to_sympy_matrix
