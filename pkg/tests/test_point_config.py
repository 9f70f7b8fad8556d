from __future__ import annotations

import pytest

from critpoint_app.algebra.affine import AffineMap
from critpoint_app.algebra.field import IMAG_UNIT, as_point
from critpoint_app.errors import BadInput, DuplicatePoint
from critpoint_app.point_config import PointConfig, collinear, orientation


def test_order_does_not_matter():
    first = PointConfig.of([(1, 1), (0, 0), (1, 0)])
    second = PointConfig.of([(1, 0), (1, 1), (0, 0)])
    assert first == second
    assert first.points[0] == as_point([0, 0])


def test_duplicates_are_rejected():
    with pytest.raises(DuplicatePoint):
        PointConfig.of([(0, 0), (1, 0), ("2/2", 0)])


def test_membership_and_editing(rhombus):
    assert (1, 1) in rhombus
    assert len(rhombus.without((1, 1))) == 3
    assert len(rhombus.with_point((2, 2))) == 5
    with pytest.raises(DuplicatePoint):
        rhombus.with_point((0, 1))
    assert rhombus.union(PointConfig.of([(0, 0), (5, 5)])) == rhombus.with_point((5, 5))


def test_grid_and_scaling():
    grid = PointConfig.grid([0, 1, 2], [0, 3])
    assert len(grid) == 6
    assert (2, 3) in grid.scale(1)
    assert (6, 9) in grid.scale(3)


def test_transform_and_reality(rhombus):
    shifted = rhombus.transform(AffineMap.from_matrix(1, 0, 0, 1, 2, 0))
    assert (3, 1) in shifted
    assert rhombus.is_real
    assert not PointConfig.of([(IMAG_UNIT, 0)]).is_real


def test_dict_round_trip_and_bad_documents():
    config = PointConfig.of([(0, 0), ("1/2", 3)])
    assert config.to_dict() == {"points": [["0", "0"], ["1/2", "3"]]}
    assert PointConfig.from_dict([["1/2", "3"], [0, 0]]) == config
    with pytest.raises(BadInput):
        PointConfig.from_dict({"pts": []})
    with pytest.raises(BadInput):
        PointConfig.from_dict({"points": [1, 2]})


def test_orientation():
    a, b, c = as_point([0, 0]), as_point([1, 0]), as_point([0, 1])
    assert orientation(a, b, c) == 1
    assert orientation(a, c, b) == -1
    assert collinear(a, b, as_point([5, 0]))
