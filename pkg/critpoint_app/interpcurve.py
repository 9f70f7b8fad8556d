from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from .algebra.field import ZERO, FieldElem, Point, as_field, as_point, point_to_json
from .algebra.matrix import QMatrix, determinant, solve_linear
from .algebra.poly import BivarPoly, exact_divide, from_sympy_poly, to_sympy_poly
from .errors import InvariantViolation, NonRealInput, OddAmbientDimension, WrongPointCount
from .linsys import ambient_dimension, delta, phi_rows
from .point_config import PointConfig

log = logging.getLogger(__name__)

SLOW_DEGREE = 5


@dataclass
class InterpolationCurve:
    poly: BivarPoly
    degree_bound: int
    base_config: PointConfig

    @property
    def degree(self) -> Any:
        return self.poly.degree

    def to_dict(self) -> Dict[str, Any]:
        return {
            "curve": self.poly.to_triples(),
            "degree": self.poly.degree if not self.poly.is_zero else None,
            "degree_bound": self.degree_bound,
            "base": self.base_config.to_dict()["points"],
        }


def _check_shape(d: int, p0: PointConfig) -> None:
    if ambient_dimension(d) % 2:
        raise OddAmbientDimension(
            f"interpolation curves need an even ambient dimension; d={d} gives {ambient_dimension(d)}",
            degree=d,
        )
    expected = delta(d) - 1
    if len(p0) != expected:
        raise WrongPointCount(f"expected {expected} base points for d={d}, got {len(p0)}", count=len(p0))


def _base_rows(d: int, p0: PointConfig) -> List[List[FieldElem]]:
    rows: List[List[FieldElem]] = []
    for pt in p0.points:
        rows.extend(phi_rows(d, pt))
    return rows


def _determinant_at(d: int, base: List[List[FieldElem]], pt: Point) -> FieldElem:
    # the free point's rows always come last so the sign is the same at every node
    return determinant(QMatrix.from_rows(base + phi_rows(d, pt)))


def interpolation_curve_at(d: int, p0: PointConfig, pt: Sequence[Any]) -> FieldElem:
    _check_shape(d, p0)
    return _determinant_at(d, _base_rows(d, p0), as_point(pt))


def _vandermonde(size: int) -> QMatrix:
    return QMatrix.from_rows([[as_field(node) ** power for power in range(size)] for node in range(size)])


def _interpolate_1d(vandermonde: QMatrix, values: Sequence[FieldElem]) -> List[FieldElem]:
    coefficients = solve_linear(vandermonde, values)
    if coefficients is None:
        raise InvariantViolation("Vandermonde system on distinct nodes is inconsistent")
    return coefficients


def interpolation_curve(d: int, p0: PointConfig, workers: int = 1) -> InterpolationCurve:
    _check_shape(d, p0)
    if d >= SLOW_DEGREE:
        log.warning("interpolation curve at d=%d is the slow path (%d determinants)", d, (2 * d - 1) ** 2)
    bound = 2 * d - 2
    size = bound + 1
    base = _base_rows(d, p0)
    nodes = [(as_field(a), as_field(b)) for a in range(size) for b in range(size)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            flat = list(pool.map(lambda node: _determinant_at(d, base, node), nodes))
    else:
        flat = [_determinant_at(d, base, node) for node in nodes]
    values = [flat[a * size:(a + 1) * size] for a in range(size)]

    vandermonde = _vandermonde(size)
    # y-coefficients of the curve restricted to each vertical node line x = a
    in_y = [_interpolate_1d(vandermonde, values[a]) for a in range(size)]
    terms: Dict[tuple, FieldElem] = {}
    for j in range(size):
        column = _interpolate_1d(vandermonde, [in_y[a][j] for a in range(size)])
        for i, coeff in enumerate(column):
            if not coeff.is_zero:
                terms[(i, j)] = coeff
    poly = BivarPoly(terms)
    if not poly.is_zero and poly.degree > bound:
        raise InvariantViolation(f"interpolation curve has degree {poly.degree} above {bound}")
    if poly.is_zero or poly.degree < bound:
        log.warning(
            "degenerate base configuration %s: curve degree %s below %d",
            p0.to_dict()["points"],
            "-inf" if poly.is_zero else poly.degree,
            bound,
        )
    return InterpolationCurve(poly=poly, degree_bound=bound, base_config=p0)


@dataclass
class DivisibilityEntry:
    candidate: BivarPoly
    divides: bool
    quotient: Optional[BivarPoly] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "candidate": self.candidate.to_triples(),
            "divides": self.divides,
            "quotient": self.quotient.to_triples() if self.quotient is not None else None,
        }


def curve_divisibility_report(curve: InterpolationCurve, candidates: Sequence[BivarPoly]) -> List[DivisibilityEntry]:
    report = []
    for candidate in candidates:
        if candidate.is_zero:
            report.append(DivisibilityEntry(candidate, divides=curve.poly.is_zero))
            continue
        quotient = exact_divide(curve.poly, candidate)
        report.append(DivisibilityEntry(candidate, divides=quotient is not None, quotient=quotient))
    return report


def _restrict_to_line(p: BivarPoly, origin: Point, direction: Point) -> BivarPoly:
    """p(origin + t * direction) as a polynomial in the x slot."""
    x_line = BivarPoly({(1, 0): direction[0], (0, 0): origin[0]})
    y_line = BivarPoly({(1, 0): direction[1], (0, 0): origin[1]})
    result = BivarPoly.zero()
    for (i, j), coeff in p.terms.items():
        result = result + (x_line ** i * y_line ** j).scale(coeff)
    return result


def rational_points_on_line(
    curve: InterpolationCurve, origin: Sequence[Any], direction: Sequence[Any]
) -> Optional[List[Point]]:
    """Rational intersections with the line origin + t*direction; None when the line lies on the curve."""
    import sympy as sp

    start, step = as_point(origin), as_point(direction)
    if not (curve.poly.is_real and all(c.is_real for c in start + step)):
        raise NonRealInput("rational line intersections need real data")
    restricted = _restrict_to_line(curve.poly, start, step)
    if restricted.is_zero:
        return None
    if restricted.is_constant:
        return []
    _, factors = to_sympy_poly(restricted, sp.QQ).factor_list()
    points: List[Point] = []
    for factor, _ in factors:
        linear = from_sympy_poly(factor)
        if linear.degree != 1:
            continue
        t = -linear.coefficient(0, 0) / linear.coefficient(1, 0)
        points.append((start[0] + t * step[0], start[1] + t * step[1]))
    log.debug("line through %s meets the curve at %d rational points", point_to_json(start), len(points))
    return points


def parallel_lines_base(x6: Any, y6: Any) -> PointConfig:
    """Three points on x = 0, two on x = 1 and a free sixth point."""
    return PointConfig.of([(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (x6, y6)])


def structural_factor(x6: Any) -> BivarPoly:
    """x (x - 1) (x - x6), the factor forced by the parallel-line base."""
    x = BivarPoly.x()
    return x * (x - 1) * (x - as_field(x6))


CONIC_SIX: Sequence[Sequence[int]] = ((3, 4), (4, 3), (-3, 4), (4, -3), (0, 5), (5, 0))
GRID_SIX: Sequence[Sequence[int]] = ((0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0))


def grid_lines(values: Sequence[Any] = (0, 1, 2)) -> BivarPoly:
    x, y = BivarPoly.x(), BivarPoly.y()
    result = BivarPoly.constant(1)
    for v in values:
        result = result * (x - as_field(v)) * (y - as_field(v))
    return result


def base_points_vanish(curve: InterpolationCurve) -> bool:
    return all(curve.poly(*pt) == ZERO for pt in curve.base_config.points)
