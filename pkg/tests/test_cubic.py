from __future__ import annotations

from itertools import combinations

import pytest

from critpoint_app.algebra.affine import AffineMap
from critpoint_app.algebra.field import IMAG_UNIT, as_field, as_point
from critpoint_app.algebra.poly import X, Y
from critpoint_app.cubic import (CENTER_POINTS, LINES_A, LINES_B, TRIANGLE, arrangement_B_value, Convexity, Degeneracy, ArrangementLabel, Vertex, arrangement_A_value,
                                 canonical_cubic, classify_cubic, double_point_family_check, gauge_map_closed_form,
                                 gauge_map_synthetic, gauge_orbit_check, isotropy_order, lines_through,
                                 normalize_quadrilateral, quad_convexity, cubic_table_report, triangle_symmetries)
from critpoint_app.errors import DegenerateQuadrilateral, NonRealInput, OnArrangement, OnPoleLocus, WrongPointCount
from critpoint_app.linsys import same_span, solve_linear_system
from critpoint_app.multiplicity import is_critical_point
from critpoint_app.point_config import PointConfig, collinear
from critpoint_app.sampling import Lcg64, random_affine, random_config


def with_fourth(x, y):
    return PointConfig(TRIANGLE + (as_point([x, y]),))


def test_arrangement_lines():
    assert len(LINES_A) == 6
    assert arrangement_A_value((2, 3)) != 0
    assert arrangement_A_value(("1/2", "1/2")) == 0
    assert lines_through((1, 1)) == [4, 5]
    assert lines_through((0, 0)) == [0, 1, 3]


def test_canonical_cubic_is_critical_at_all_four_points():
    f = canonical_cubic(2, 3)
    for pt in TRIANGLE + (as_point([2, 3]),):
        assert is_critical_point(f, pt)
    assert same_span(solve_linear_system(3, with_fourth(2, 3)).basis, [f])
    with pytest.raises(OnArrangement):
        canonical_cubic(1, 5)


def test_triangle_symmetries_permute_vertices():
    maps = triangle_symmetries()
    assert len(maps) == 6
    for t in maps:
        assert {t.apply(v) for v in TRIANGLE} == set(TRIANGLE)


@pytest.mark.parametrize(
    "fourth, order",
    [(("1/3", "1/3"), 6), ((1, 1), 8), ((2, 2), 2), ((2, 3), 1)],
)
def test_isotropy_orders(fourth, order):
    assert isotropy_order(with_fourth(*fourth)) == order


def test_orbit_has_twenty_four_images():
    orbit = normalize_quadrilateral(with_fourth(2, 3))
    assert len(orbit.images) == 24
    assert orbit.canonical in orbit.distinct
    assert orbit.to_dict()["isotropy"] == 1


def test_quadrilateral_shape_errors(collinear_four):
    with pytest.raises(WrongPointCount):
        normalize_quadrilateral(PointConfig(TRIANGLE))
    with pytest.raises(DegenerateQuadrilateral):
        normalize_quadrilateral(collinear_four)


def test_convexity(rhombus, center_config):
    assert quad_convexity(rhombus) is Convexity.CONVEX
    assert quad_convexity(center_config) is Convexity.NONCONVEX


def test_arrangement_membership_agrees_with_rank():
    rng = Lcg64(99)
    checked = 0
    for _ in range(500):
        config = random_config(rng, 4)
        pts = config.points
        if any(collinear(a, b, c) for a, b, c in combinations(pts, 3)):
            continue
        result = classify_cubic(config)
        if result.proj_dim == 0 and result.critical_set_finite:
            assert result.arrangement_label is ArrangementLabel.ESSENTIALLY_DETERMINED
        else:
            assert result.arrangement_label is ArrangementLabel.NOT_ESSENTIALLY_DETERMINED
        checked += 1
    assert checked > 400


def test_degenerate_configurations(collinear_four):
    four = classify_cubic(collinear_four)
    assert four.degeneracy is Degeneracy.FOUR_COLLINEAR
    assert four.proj_dim == 2
    assert four.arrangement_label is ArrangementLabel.NOT_ESSENTIALLY_DETERMINED
    assert not four.critical_set_finite
    three = classify_cubic(with_fourth(2, 0))
    assert three.degeneracy is Degeneracy.THREE_COLLINEAR
    assert three.isotropy_order is None


def test_classification_payload(rhombus):
    payload = classify_cubic(rhombus).to_dict()
    assert payload["proj_dim"] == 1
    assert payload["theorem1"] == "NED"
    assert payload["isotropy"] == 8
    assert payload["convexity"] == "convex"
    assert payload["on_arrangement"] is True


def test_cubic_table_report():
    rows = cubic_table_report()
    assert [row["name"] for row in rows] == ["generic", "diagonal", "center", "rhombus", "line-x-1"]
    assert [row["proj_dim"] for row in rows] == [0, 0, 0, 1, 0]
    center = rows[2]
    assert center["cardinality"] == [4]
    assert rows[4]["cardinality"] == ["inf"]
    assert [row["isotropy"] for row in rows[:4]] == [1, 2, 6, 8]


def test_double_point_family_claims():
    report = double_point_family_check()
    assert [claim.passed for claim in report.claims] == [True, True, False, False, True, False, True]
    assert len(report.discrepancies) == 3


def test_gauge_maps_at_v2():
    assert gauge_map_synthetic(Vertex.V2, (2, 3)) == as_point(["1/2", "-3/2"])
    assert gauge_map_closed_form(Vertex.V2, (2, 3)) == as_point(["1/2", 3])
    check = gauge_orbit_check(Vertex.V2, (2, 3))
    assert check.synthetic_in_orbit
    assert check.to_dict()["synthetic_image"] == ["1/2", "-3/2"]


@pytest.mark.parametrize("vertex", list(Vertex))
def test_synthetic_gauge_stays_in_orbit(vertex):
    assert gauge_orbit_check(vertex, (2, 3)).synthetic_in_orbit


@pytest.mark.parametrize("pt", [(0, 5), (1, 5)])
def test_gauge_poles(pt):
    with pytest.raises(OnPoleLocus):
        gauge_map_closed_form(Vertex.V2, pt)
    with pytest.raises(OnPoleLocus):
        gauge_map_synthetic(Vertex.V2, pt)


def seeded_points(seed, count):
    rng = Lcg64(seed)
    return [(rng.rational(-10, 10, 5), rng.rational(-10, 10, 5)) for _ in range(count)]


GAUGE_SAMPLES = [(2, 3), ("1/2", "1/3"), (-1, 5), (3, -2), ("-4/3", "7/2")]


@pytest.mark.parametrize("vertex", list(Vertex))
def test_closed_form_gauge_fixes_its_vertex(vertex):
    corner = {Vertex.V1: TRIANGLE[0], Vertex.V2: TRIANGLE[1], Vertex.V3: TRIANGLE[2]}[vertex]
    assert gauge_map_closed_form(vertex, corner) == corner


@pytest.mark.parametrize("vertex", list(Vertex))
def test_closed_form_gauge_is_an_involution(vertex):
    checked = 0
    for pt in GAUGE_SAMPLES + seeded_points(31, 40):
        try:
            image = gauge_map_closed_form(vertex, pt)
        except OnPoleLocus:
            continue
        assert gauge_map_closed_form(vertex, image) == as_point(pt)
        checked += 1
    assert checked > 30


def test_closed_form_gauge_fixes_the_line_x_minus_one():
    for y in [0, 1, -3, "5/2"] + [y for _, y in seeded_points(32, 20)]:
        pt = as_point([-1, y])
        assert gauge_map_closed_form(Vertex.V2, pt) == pt


def test_orbit_is_closed_under_affine_changes():
    rng = Lcg64(41)
    checked = 0
    while checked < 20:
        config = random_config(rng, 4)
        if any(collinear(a, b, c) for a, b, c in combinations(config.points, 3)):
            continue
        moved = config.transform(random_affine(rng))
        before, after = normalize_quadrilateral(config), normalize_quadrilateral(moved)
        assert after.distinct == before.distinct
        assert after.canonical == before.canonical
        checked += 1


def test_canonical_cubic_is_sound_off_the_arrangement():
    checked = 0
    for x, y in seeded_points(53, 130):
        if arrangement_A_value((x, y)).is_zero:
            continue
        f = canonical_cubic(x, y)
        assert not f.is_zero
        for pt in TRIANGLE + (as_point([x, y]),):
            assert is_critical_point(f, pt)
        checked += 1
        if checked == 100:
            break
    assert checked == 100


def test_canonical_cubic_special_values():
    assert same_span([canonical_cubic("1/3", "1/3")], [X * Y * (X + Y - 1)])
    expected = 20 * (2 * X ** 3 - 3 * X ** 2) + 20 * (2 * Y ** 3 - 3 * Y ** 2) - 24 * (X ** 2 * Y + X * Y ** 2 - X * Y)
    assert canonical_cubic(2, 2) == expected


def test_orbit_of_the_diagonal_point():
    orbit = normalize_quadrilateral(with_fourth(2, 2))
    assert len(orbit.images) == 24
    assert len(orbit.distinct) == 12
    assert as_point(["2/3", "2/3"]) in orbit.distinct
    assert (AffineMap.identity(), as_point([2, 2])) in orbit.images


def test_rhombus_has_three_distinct_images(rhombus):
    orbit = normalize_quadrilateral(rhombus)
    assert set(orbit.distinct) == {as_point([1, 1]), as_point([-1, 1]), as_point([1, -1])}
    assert orbit.isotropy == 8


def test_convexity_of_the_diagonal_point():
    assert quad_convexity(with_fourth(2, 2)) is Convexity.CONVEX
    with pytest.raises(NonRealInput):
        quad_convexity(PointConfig(TRIANGLE + ((as_field(2) + IMAG_UNIT, as_field(2)),)))


@pytest.mark.parametrize(
    "pt",
    [(3, 3), (1, -1), (-1, 1), (-1, 7), (5, -1), (4, -2)],
)
def test_arrangement_B_vanishes_on_its_lines(pt):
    assert arrangement_B_value(pt).is_zero
    assert any(line(*pt).is_zero for line in LINES_B)


def test_arrangement_B_center_points():
    for pt in CENTER_POINTS.values():
        assert arrangement_B_value(pt).is_zero
    assert not arrangement_B_value((5, 7)).is_zero
    assert not arrangement_B_value((2, 3)).is_zero
