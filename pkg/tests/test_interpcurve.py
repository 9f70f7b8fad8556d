from __future__ import annotations

import pytest

from critpoint_app.algebra.field import as_field, as_point
from critpoint_app.algebra.poly import X, Y
from critpoint_app.errors import NonRealInput, OddAmbientDimension, WrongPointCount
from critpoint_app.interpcurve import (CONIC_SIX, GRID_SIX, InterpolationCurve, base_points_vanish,
                                       curve_divisibility_report, grid_lines, interpolation_curve,
                                       interpolation_curve_at, parallel_lines_base, rational_points_on_line,
                                       structural_factor)
from critpoint_app.linsys import solve_linear_system
from critpoint_app.point_config import PointConfig
from critpoint_app.sampling import Lcg64, random_config, random_distinct_values


@pytest.fixture(scope="module")
def parallel_curve():
    return interpolation_curve(4, parallel_lines_base(3, 5))


def test_shape_checks():
    with pytest.raises(OddAmbientDimension):
        interpolation_curve(3, PointConfig.of([(0, 0), (1, 0), (0, 1)]))
    with pytest.raises(WrongPointCount):
        interpolation_curve(4, PointConfig.of([(0, 0), (1, 0)]))


def test_parallel_base_carries_the_structural_factor(parallel_curve):
    assert parallel_curve.poly.is_zero or parallel_curve.degree <= parallel_curve.degree_bound
    (entry,) = curve_divisibility_report(parallel_curve, [structural_factor(3)])
    assert entry.divides
    assert base_points_vanish(parallel_curve)
    seventh = parallel_curve.base_config.with_point((0, 7))
    assert solve_linear_system(4, seventh).proj_dim >= 0


def test_curve_matches_direct_determinant(parallel_curve):
    for pt in ((7, -3), (2, 9), ("1/2", "5/3")):
        assert parallel_curve.poly(*as_point(pt)) == interpolation_curve_at(4, parallel_curve.base_config, pt)


def test_grid_and_conic_bases():
    grid_curve = interpolation_curve(4, PointConfig.of(GRID_SIX), workers=2)
    assert grid_curve.poly.is_zero
    (entry,) = curve_divisibility_report(grid_curve, [grid_lines()])
    assert entry.divides
    conic_curve = interpolation_curve(4, PointConfig.of(CONIC_SIX))
    (entry,) = curve_divisibility_report(conic_curve, [X ** 2 + Y ** 2 - 25])
    assert entry.divides


def test_worker_count_does_not_change_the_curve(parallel_curve):
    threaded = interpolation_curve(4, parallel_curve.base_config, workers=3)
    assert threaded.poly == parallel_curve.poly


def test_zero_candidate():
    curve = InterpolationCurve(poly=X * (X - 1), degree_bound=6, base_config=PointConfig())
    (entry,) = curve_divisibility_report(curve, [X * 0])
    assert not entry.divides
    assert curve.to_dict()["degree"] == 2


def test_rational_points_on_a_line():
    curve = InterpolationCurve(poly=(X - 1) * (X + 2) * (X ** 2 + 1), degree_bound=6, base_config=PointConfig())
    found = rational_points_on_line(curve, (0, 0), (1, 0))
    assert sorted(pt[0].re for pt in found) == [-2, 1]
    assert rational_points_on_line(curve, (1, 0), (0, 1)) is None
    flat = InterpolationCurve(poly=X, degree_bound=6, base_config=PointConfig())
    assert rational_points_on_line(flat, (1, 0), (0, 1)) == []
    with pytest.raises(NonRealInput):
        rational_points_on_line(flat, ({"re": 0, "im": 1}, 0), (1, 0))


def test_generic_bases_give_full_degree():
    rng = Lcg64(4)
    full = 0
    for _ in range(50):
        curve = interpolation_curve(4, random_config(rng, 6))
        if not curve.poly.is_zero and curve.degree == curve.degree_bound:
            full += 1
    assert full >= 48


def circle_points(rng, count):
    h, k, r = rng.randint(-3, 3), rng.randint(-3, 3), rng.randint(1, 4)
    points = []
    for m in random_distinct_values(rng, count, -6, 6):
        w = 1 + m * m
        points.append((h + r * (1 - m * m) / w, k + 2 * r * m / w))
    return points


def random_rational_point(rng):
    return as_point([rng.rational(-8, 8, 3), rng.rational(-8, 8, 3)])


@pytest.fixture(scope="module")
def circle_curve():
    points = circle_points(Lcg64(71), 9)
    curve = interpolation_curve(4, PointConfig.of(points[:6]))
    return curve, points[6:]


def test_points_found_on_the_curve_extend_the_kernel(circle_curve):
    curve, spare = circle_curve
    assert not curve.poly.is_zero
    rng = Lcg64(72)
    found = list(spare)
    for base in curve.base_config.points:
        direction = (as_field(rng.randint(1, 5)), as_field(rng.randint(-5, 5)))
        hits = rational_points_on_line(curve, base, direction)
        if hits:
            found.extend(hits)
    extra = [q for q in found if q not in curve.base_config]
    assert len(extra) >= len(spare)
    for q in found:
        assert curve.poly(*q).is_zero
    for q in extra:
        assert solve_linear_system(4, curve.base_config.with_point(q)).proj_dim >= 0


def test_curve_membership_matches_the_kernel():
    rng = Lcg64(73)
    p0 = random_config(rng, 6)
    curve = interpolation_curve(4, p0)
    checked = 0
    while checked < 20:
        q = random_rational_point(rng)
        if q in p0:
            continue
        on_curve = curve.poly(*q).is_zero
        assert on_curve == (solve_linear_system(4, p0.with_point(q)).proj_dim >= 0)
        checked += 1
    for q in p0.points:
        assert curve.poly(*q).is_zero


def test_curve_reconstruction_at_random_points(parallel_curve):
    rng = Lcg64(74)
    for _ in range(20):
        q = random_rational_point(rng)
        assert parallel_curve.poly(*q) == interpolation_curve_at(4, parallel_curve.base_config, q)
