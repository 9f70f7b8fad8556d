from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from itertools import combinations, permutations
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .algebra.affine import AffineMap
from .algebra.field import ONE, ZERO, FieldElem, Point, as_field, as_point, point_key, point_to_json
from .algebra.poly import X, Y, BivarPoly, evaluate, gradient, product
from .errors import DegenerateQuadrilateral, InvariantViolation, NonRealInput, OnArrangement, OnPoleLocus, WrongPointCount
from .linsys import solve_linear_system
from .multiplicity import critical_set_finite, is_critical_point, milnor_number
from .point_config import PointConfig, collinear, orientation

log = logging.getLogger(__name__)

V1: Point = (ZERO, ZERO)
V2: Point = (ONE, ZERO)
V3: Point = (ZERO, ONE)
TRIANGLE: Tuple[Point, Point, Point] = (V1, V2, V3)

LINES_A: Tuple[BivarPoly, ...] = (X, Y, X + Y - 1, X + Y, X - 1, Y - 1)
LINES_B: Tuple[BivarPoly, ...] = (Y - X, 2 * X + Y - 1, X + 2 * Y - 1, X + 1, Y + 1, X + Y - 2)

RHOMBUS_POINTS: Dict[str, Point] = {
    "R1": (as_field(1), as_field(1)),
    "R2": (as_field(-1), as_field(1)),
    "R3": (as_field(1), as_field(-1)),
}
CENTER_POINTS: Dict[str, Point] = {
    "C1": (as_field("1/3"), as_field("1/3")),
    "C2": (as_field(-1), as_field(-1)),
    "C3": (as_field(3), as_field(-1)),
    "C4": (as_field(-1), as_field(3)),
}

ALLOWED_ISOTROPY = (1, 2, 6, 8)
INFINITE = "inf"


class Vertex(str, Enum):
    V1 = "V1"
    V2 = "V2"
    V3 = "V3"


class ArrangementLabel(str, Enum):
    ESSENTIALLY_DETERMINED = "ED"
    NOT_ESSENTIALLY_DETERMINED = "NED"


class Convexity(str, Enum):
    CONVEX = "convex"
    NONCONVEX = "nonconvex"


class Degeneracy(str, Enum):
    THREE_COLLINEAR = "three-collinear"
    FOUR_COLLINEAR = "four-collinear"


@dataclass(frozen=True)
class ArrangementA:
    factors: Tuple[BivarPoly, ...] = LINES_A
    product: BivarPoly = field(default_factory=lambda: product(LINES_A))


ARRANGEMENT_A = ArrangementA()
ARRANGEMENT_B_PRODUCT = product(LINES_B)


def arrangement_A_value(pt: Sequence[Any]) -> FieldElem:
    return evaluate(ARRANGEMENT_A.product, pt)


def arrangement_B_value(pt: Sequence[Any]) -> FieldElem:
    return evaluate(ARRANGEMENT_B_PRODUCT, pt)


def lines_through(pt: Sequence[Any]) -> List[int]:
    """Indices of the arrangement lines passing through pt."""
    return [k for k, line in enumerate(LINES_A) if evaluate(line, pt).is_zero]


def canonical_cubic(x4: Any, y4: Any) -> BivarPoly:
    """The essentially determined cubic critical at the triangle vertices and (x4, y4)."""
    x4, y4 = as_field(x4), as_field(y4)
    if arrangement_A_value((x4, y4)).is_zero:
        raise OnArrangement("fourth point lies on the arrangement", point=point_to_json((x4, y4)))
    a = y4 * y4 * (y4 - 1) * (2 * x4 + y4 - 1)
    b = x4 * x4 * (x4 - 1) * (x4 + 2 * y4 - 1)
    c = -6 * x4 * y4 * (x4 - 1) * (y4 - 1)
    pure_x = 2 * X ** 3 - 3 * X ** 2
    pure_y = 2 * Y ** 3 - 3 * Y ** 2
    mixed = X ** 2 * Y + X * Y ** 2 - X * Y
    return pure_x.scale(a) + pure_y.scale(b) + mixed.scale(c)


def triangle_symmetries() -> List[AffineMap]:
    """The six affine maps permuting the vertices of the standard triangle."""
    return [AffineMap.from_standard_triangle(*images) for images in permutations(TRIANGLE)]


def _require_quadrilateral(p: PointConfig) -> None:
    if len(p) != 4:
        raise WrongPointCount(f"expected 4 points, got {len(p)}", count=len(p))


def _has_collinear_triple(points: Sequence[Point]) -> bool:
    return any(collinear(a, b, c) for a, b, c in combinations(points, 3))


@dataclass
class QuadOrbit:
    images: List[Tuple[AffineMap, Point]]
    canonical: Point

    @property
    def distinct(self) -> List[Point]:
        return sorted({fourth for _, fourth in self.images}, key=point_key)

    @property
    def isotropy(self) -> int:
        return 24 // len(self.distinct)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "images": [{"map": t.to_dict(), "fourth": point_to_json(fourth)} for t, fourth in self.images],
            "canonical": point_to_json(self.canonical),
            "isotropy": self.isotropy,
        }


def _orbit_images(points: Sequence[Point]) -> List[Tuple[AffineMap, Point]]:
    images = []
    for a, b, c in permutations(range(4), 3):
        pa, pb, pc = points[a], points[b], points[c]
        if collinear(pa, pb, pc):
            continue
        (rest,) = (points[k] for k in range(4) if k not in (a, b, c))
        t = AffineMap.normalizing(pa, pb, pc)
        images.append((t, t.apply(rest)))
    return images


def normalize_quadrilateral(p: PointConfig) -> QuadOrbit:
    _require_quadrilateral(p)
    if _has_collinear_triple(p.points):
        raise DegenerateQuadrilateral("three of the four points are collinear", points=p.to_dict())
    images = _orbit_images(p.points)
    canonical = min((fourth for _, fourth in images), key=point_key)
    return QuadOrbit(images=images, canonical=canonical)


def isotropy_order(p: PointConfig) -> int:
    orbit = normalize_quadrilateral(p)
    order = orbit.isotropy
    if order * len(orbit.distinct) != 24 or order not in ALLOWED_ISOTROPY:
        raise InvariantViolation(f"isotropy order {order} from {len(orbit.distinct)} distinct images")
    return order


def quad_convexity(p: PointConfig) -> Convexity:
    _require_quadrilateral(p)
    if not p.is_real:
        raise NonRealInput("convexity needs real coordinates", points=p.to_dict())
    if _has_collinear_triple(p.points):
        raise DegenerateQuadrilateral("three of the four points are collinear", points=p.to_dict())
    for k, q in enumerate(p.points):
        a, b, c = (pt for j, pt in enumerate(p.points) if j != k)
        signs = {orientation(a, b, q).re > 0, orientation(b, c, q).re > 0, orientation(c, a, q).re > 0}
        if len(signs) == 1:
            return Convexity.NONCONVEX
    return Convexity.CONVEX


@dataclass
class QuadClass:
    normalized_fourth: Optional[Point]
    on_arrangement: bool
    which_lines: List[int]
    proj_dim: int
    critical_set_finite: bool
    arrangement_label: ArrangementLabel
    isotropy_order: Optional[int]
    convexity: Optional[Convexity] = None
    degeneracy: Optional[Degeneracy] = None
    basis: List[BivarPoly] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "normalized_fourth": point_to_json(self.normalized_fourth) if self.normalized_fourth else None,
            "on_arrangement": self.on_arrangement,
            "lines": self.which_lines,
            "proj_dim": self.proj_dim,
            "finite": self.critical_set_finite,
            "theorem1": self.arrangement_label.value,
            "isotropy": self.isotropy_order,
            "convexity": self.convexity.value if self.convexity else None,
            "degenerate": self.degeneracy.value if self.degeneracy else None,
            "basis": [f.to_triples() for f in self.basis],
        }


def classify_cubic(p: PointConfig) -> QuadClass:
    _require_quadrilateral(p)
    system = solve_linear_system(3, p)
    finite = bool(system.basis) and critical_set_finite(system.basis[0])
    if not _has_collinear_triple(p.points):
        orbit = normalize_quadrilateral(p)
        fourth = orbit.canonical
        off_everywhere = all(not arrangement_A_value(image).is_zero for _, image in orbit.images)
        on_arrangement = arrangement_A_value(fourth).is_zero
        label = (
            ArrangementLabel.ESSENTIALLY_DETERMINED if off_everywhere else ArrangementLabel.NOT_ESSENTIALLY_DETERMINED
        )
        return QuadClass(
            normalized_fourth=fourth,
            on_arrangement=on_arrangement,
            which_lines=lines_through(fourth),
            proj_dim=system.proj_dim,
            critical_set_finite=finite,
            arrangement_label=label,
            isotropy_order=isotropy_order(p),
            convexity=quad_convexity(p) if p.is_real else None,
            basis=system.basis,
        )
    images = _orbit_images(p.points)
    degenerate_fourth: Optional[Point] = None
    if images:
        degenerate_fourth = min((image for _, image in images), key=point_key)
        degeneracy = Degeneracy.THREE_COLLINEAR
    else:
        degeneracy = Degeneracy.FOUR_COLLINEAR
    log.debug("degenerate quadrilateral %s: proj_dim %d", degeneracy.value, system.proj_dim)
    return QuadClass(
        normalized_fourth=degenerate_fourth,
        on_arrangement=True,
        which_lines=lines_through(degenerate_fourth) if degenerate_fourth else [],
        proj_dim=system.proj_dim,
        critical_set_finite=finite,
        arrangement_label=ArrangementLabel.NOT_ESSENTIALLY_DETERMINED,
        isotropy_order=None,
        degeneracy=degeneracy,
        basis=system.basis,
    )


_SWAP_V1_V2 = AffineMap.from_matrix(-1, -1, 0, 1, 1, 0)
_SWAP_V2_V3 = AffineMap.from_matrix(0, 1, 1, 0)


def _conjugator(vertex: Vertex) -> Optional[AffineMap]:
    if vertex == Vertex.V1:
        return _SWAP_V1_V2
    if vertex == Vertex.V3:
        return _SWAP_V2_V3
    return None


def _check_v2_poles(pt: Point) -> None:
    x, y = pt
    if x.is_zero or (x == 1 and pt != V2):
        raise OnPoleLocus("point lies on the pole locus x(x-1) = 0", point=point_to_json(pt))


def _closed_form_v2(pt: Point) -> Point:
    _check_v2_poles(pt)
    if pt == V2:
        return V2
    x, y = pt
    return (x.inverse(), (-y + y * x) / (x - 1))


def _synthetic_v2(pt: Point) -> Point:
    """Inversion on the line through V2 and pt, parametrised 0 on {x=0} and 1 at V2."""
    _check_v2_poles(pt)
    if pt == V2:
        return V2
    x, y = pt
    return (x.inverse(), -y / x)


def _conjugated(vertex: Vertex, pt: Sequence[Any], v2_map) -> Point:
    point = as_point(pt)
    sigma = _conjugator(Vertex(vertex))
    if sigma is None:
        return v2_map(point)
    return sigma.apply(v2_map(sigma.apply(point)))


def gauge_map_closed_form(vertex: Vertex, pt: Sequence[Any]) -> Point:
    """The closed-form rational map for V2, carried to V1 and V3 by the triangle reflections."""
    return _conjugated(vertex, pt, _closed_form_v2)


def gauge_map_synthetic(vertex: Vertex, pt: Sequence[Any]) -> Point:
    return _conjugated(vertex, pt, _synthetic_v2)


@dataclass
class GaugeCheck:
    vertex: Vertex
    point: Point
    closed_form_image: Point
    closed_form_in_orbit: bool
    synthetic_image: Point
    synthetic_in_orbit: bool

    def to_dict(self) -> Dict[str, Any]:
        return {
            "vertex": self.vertex.value,
            "point": point_to_json(self.point),
            "closed_form_image": point_to_json(self.closed_form_image),
            "closed_form_in_orbit": self.closed_form_in_orbit,
            "synthetic_image": point_to_json(self.synthetic_image),
            "synthetic_in_orbit": self.synthetic_in_orbit,
        }


def gauge_orbit_check(vertex: Vertex, pt: Sequence[Any]) -> GaugeCheck:
    """Compare both gauge maps against the 24-image orbit of the triangle plus pt."""
    vertex = Vertex(vertex)
    point = as_point(pt)
    orbit = {image for _, image in normalize_quadrilateral(PointConfig(TRIANGLE + (point,))).images}
    closed_form_image = gauge_map_closed_form(vertex, point)
    synthetic_image = gauge_map_synthetic(vertex, point)
    check = GaugeCheck(
        vertex=vertex,
        point=point,
        closed_form_image=closed_form_image,
        closed_form_in_orbit=closed_form_image in orbit,
        synthetic_image=synthetic_image,
        synthetic_in_orbit=synthetic_image in orbit,
    )
    if not check.closed_form_in_orbit:
        log.warning(
            "closed-form gauge map for %s sends %s to %s outside the affine orbit",
            vertex.value,
            point_to_json(point),
            point_to_json(closed_form_image),
        )
    return check


def critical_set_cardinality(f: BivarPoly, points: Sequence[Point]) -> Union[int, str, None]:
    """"inf" for a curve of critical points; None when the listed points miss some critical point."""
    if not critical_set_finite(f):
        return INFINITE
    critical = [pt for pt in points if is_critical_point(f, pt)]
    total = 0
    for pt in critical:
        value = milnor_number(f, pt).value
        if value is None:
            return INFINITE
        total += value
    bezout = (f.degree - 1) ** 2
    if total == bezout:
        return len(critical)
    return None


CUBIC_TABLE_FOURTH_POINTS: Tuple[Tuple[str, Point], ...] = (
    ("generic", (as_field(2), as_field(3))),
    ("diagonal", (as_field(2), as_field(2))),
    ("center", CENTER_POINTS["C1"]),
    ("rhombus", RHOMBUS_POINTS["R1"]),
    ("line-x-1", (as_field(1), as_field(2))),
)


def cubic_table_report() -> List[Dict[str, Any]]:
    """Dimension, critical-set size and isotropy for representative fourth points."""
    rows = []
    for name, fourth in CUBIC_TABLE_FOURTH_POINTS:
        config = PointConfig(TRIANGLE + (fourth,))
        system = solve_linear_system(3, config)
        cardinalities = [critical_set_cardinality(f, config.points) for f in system.basis]
        rows.append(
            {
                "name": name,
                "fourth": point_to_json(fourth),
                "proj_dim": system.proj_dim,
                "basis": [f.to_triples() for f in system.basis],
                "cardinality": cardinalities,
                "isotropy": isotropy_order(config),
            }
        )
    return rows


@dataclass
class ClaimCheck:
    claim: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> Dict[str, Any]:
        return {"claim": self.claim, "passed": self.passed, "detail": self.detail}


@dataclass
class DoublePointReport:
    claims: List[ClaimCheck] = field(default_factory=list)

    @property
    def discrepancies(self) -> List[ClaimCheck]:
        return [c for c in self.claims if not c.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {"claims": [c.to_dict() for c in self.claims]}


DOUBLE_POINT_SAMPLES: Tuple[Tuple[int, int], ...] = ((1, 3), (1, 1), (2, 3), (-1, 2))


def _vertex_gradient_claim(label: str, f: BivarPoly) -> ClaimCheck:
    failing = [pt for pt in TRIANGLE if not is_critical_point(f, pt)]
    detail = ""
    if failing:
        fx, fy = gradient(f)
        detail = "; ".join(
            f"grad at {point_to_json(pt)} = ({evaluate(fx, pt)}, {evaluate(fy, pt)})" for pt in failing
        )
    return ClaimCheck(claim=f"{label} is critical at the triangle vertices", passed=not failing, detail=detail)


def _double_point_claim(label: str, gx: BivarPoly, gy: BivarPoly, denominator: int) -> ClaimCheck:
    mixed = X ** 2 * Y + X * Y ** 2 - X * Y
    values = []
    for a1, a2 in DOUBLE_POINT_SAMPLES:
        a4 = Fraction(a2 * a2, denominator * a1)
        f = gx.scale(a1) + mixed.scale(a2) + gy.scale(a4)
        values.append(milnor_number(f, V1))
    passed = all(v.is_infinite or v.value >= 2 for v in values)
    return ClaimCheck(
        claim=f"{label}: a4 = a2^2/({denominator}a1) gives a double critical point at the origin",
        passed=passed,
        detail="milnor numbers " + ", ".join(str(v) for v in values),
    )


def double_point_family_check() -> DoublePointReport:
    mixed = X ** 2 * Y + X * Y ** 2 - X * Y
    unscaled_x = X ** 3 - 3 * X ** 2
    unscaled_y = Y ** 3 - 3 * Y ** 2
    scaled_x = X ** 3 - BivarPoly.monomial(2, 0, Fraction(3, 2))
    scaled_y = Y ** 3 - BivarPoly.monomial(0, 2, Fraction(3, 2))
    report = DoublePointReport()
    report.claims.append(_vertex_gradient_claim("x^2*y + x*y^2 - x*y", mixed))
    report.claims.append(_vertex_gradient_claim("2*x^3 - 3*x^2", 2 * X ** 3 - 3 * X ** 2))
    report.claims.append(_vertex_gradient_claim("x^3 - 3*x^2 (unscaled)", unscaled_x))
    report.claims.append(_vertex_gradient_claim("y^3 - 3*y^2 (unscaled)", unscaled_y))
    report.claims.append(_double_point_claim("x^3 - 3/2*x^2, y^3 - 3/2*y^2", scaled_x, scaled_y, 9))
    report.claims.append(_double_point_claim("unscaled generators", unscaled_x, unscaled_y, 9))
    report.claims.append(_double_point_claim("unscaled generators", unscaled_x, unscaled_y, 36))
    for claim in report.discrepancies:
        log.info("double point family: claim failed: %s (%s)", claim.claim, claim.detail)
    return report
