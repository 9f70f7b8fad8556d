from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .algebra.field import ONE, ZERO, FieldElem, Point, as_field, as_point, point_to_json
from .algebra.matrix import QMatrix, rank_and_nullspace
from .algebra.poly import BivarPoly, Variable, X, Y, evaluate, exact_divide, integrate, partial_derivative, product
from .errors import BadInput, ConstantInput, InvariantViolation, NotAZero, NotHamiltonian, ZeroParameters
from .multiplicity import is_morse_point, milnor_number
from .point_config import PointConfig

log = logging.getLogger(__name__)

Matrix2 = Tuple[Tuple[FieldElem, FieldElem], Tuple[FieldElem, FieldElem]]


@dataclass(frozen=True)
class VectorFieldPoly:
    """p_comp d/dx + q_comp d/dy."""

    p_comp: BivarPoly
    q_comp: BivarPoly

    @property
    def degree(self) -> Any:
        return max(self.p_comp.degree, self.q_comp.degree)

    def at(self, pt: Sequence[Any]) -> Point:
        return evaluate(self.p_comp, pt), evaluate(self.q_comp, pt)

    def vanishes_at(self, pt: Sequence[Any]) -> bool:
        p, q = self.at(pt)
        return p.is_zero and q.is_zero

    def to_dict(self) -> Dict[str, Any]:
        return {"p": self.p_comp.to_triples(), "q": self.q_comp.to_triples()}


def hamiltonian_field(f: BivarPoly) -> VectorFieldPoly:
    return VectorFieldPoly(-partial_derivative(f, Variable.Y), partial_derivative(f, Variable.X))


def divergence(x: VectorFieldPoly) -> BivarPoly:
    return partial_derivative(x.p_comp, Variable.X) + partial_derivative(x.q_comp, Variable.Y)


def is_hamiltonian(x: VectorFieldPoly) -> bool:
    return divergence(x).is_zero


def hamiltonian_potential(x: VectorFieldPoly) -> BivarPoly:
    """f with X_f = x and f(0, 0) = 0."""
    if not is_hamiltonian(x):
        raise NotHamiltonian("vector field has nonzero divergence", divergence=str(divergence(x)))
    f = integrate(x.q_comp, Variable.X)
    remainder = -x.p_comp - partial_derivative(f, Variable.Y)
    if not remainder.is_zero and remainder.degree_in(Variable.X) > 0:
        raise InvariantViolation("potential remainder still depends on x")
    f = f + integrate(remainder, Variable.Y)
    if hamiltonian_field(f) != x:
        raise InvariantViolation("potential does not reproduce the vector field")
    return f


def _as_matrix2(m: Sequence[Sequence[Any]]) -> Matrix2:
    if len(m) != 2 or any(len(row) != 2 for row in m):
        raise BadInput("pencil matrix must be 2x2")
    return ((as_field(m[0][0]), as_field(m[0][1])), (as_field(m[1][0]), as_field(m[1][1])))


IDENTITY2: Matrix2 = ((ONE, ZERO), (ZERO, ONE))


@dataclass(frozen=True)
class PencilSpec:
    f_curve: BivarPoly
    g_curve: BivarPoly
    m: Matrix2 = IDENTITY2

    def __post_init__(self) -> None:
        object.__setattr__(self, "m", _as_matrix2(self.m))

    @property
    def det_m(self) -> FieldElem:
        (a, b), (c, d) = self.m
        return a * d - b * c

    @property
    def is_bona_fide(self) -> bool:
        return not self.det_m.is_zero

    def with_matrix(self, m: Sequence[Sequence[Any]]) -> "PencilSpec":
        return PencilSpec(self.f_curve, self.g_curve, _as_matrix2(m))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "F": self.f_curve.to_triples(),
            "G": self.g_curve.to_triples(),
            "m": [[value.to_json() for value in row] for row in self.m],
        }


def pencil_vector_field(s: PencilSpec) -> VectorFieldPoly:
    """-(cF + dG) d/dx + (aF + bG) d/dy."""
    (a, b), (c, d) = s.m
    return VectorFieldPoly(
        -(s.f_curve.scale(c) + s.g_curve.scale(d)),
        s.f_curve.scale(a) + s.g_curve.scale(b),
    )


@dataclass
class PencilSlice:
    dimension: int
    basis: List[List[FieldElem]] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "slice_dim": self.dimension,
            "slice_basis": [[value.to_json() for value in v] for v in self.basis],
        }


def hamiltonian_slice(f_curve: BivarPoly, g_curve: BivarPoly) -> PencilSlice:
    """Parameters (a, b, c, d) whose pencil member is divergence free."""
    fx = partial_derivative(f_curve, Variable.X)
    fy = partial_derivative(f_curve, Variable.Y)
    gx = partial_derivative(g_curve, Variable.X)
    gy = partial_derivative(g_curve, Variable.Y)
    columns = (fy, gy, -fx, -gx)
    monomials = sorted({m for column in columns for m in column.terms})
    if not monomials:
        return PencilSlice(4, [[ONE if i == j else ZERO for i in range(4)] for j in range(4)])
    matrix = QMatrix.from_rows([[column.coefficient(*m) for column in columns] for m in monomials], cols=4)
    _, basis = rank_and_nullspace(matrix)
    return PencilSlice(len(basis), basis)


@dataclass(frozen=True)
class GridConfig:
    x_roots: Tuple[FieldElem, ...]
    y_roots: Tuple[FieldElem, ...]

    def __post_init__(self) -> None:
        xs = tuple(as_field(v) for v in self.x_roots)
        ys = tuple(as_field(v) for v in self.y_roots)
        if len(set(xs)) != len(xs) or len(set(ys)) != len(ys):
            raise BadInput("grid roots must be distinct")
        object.__setattr__(self, "x_roots", xs)
        object.__setattr__(self, "y_roots", ys)

    @property
    def x_poly(self) -> BivarPoly:
        return product(X - r for r in self.x_roots)

    @property
    def y_poly(self) -> BivarPoly:
        return product(Y - r for r in self.y_roots)

    def points(self) -> PointConfig:
        return PointConfig.grid(self.x_roots, self.y_roots)


def grid_polynomial_family(g: GridConfig, a: Any, d: Any) -> BivarPoly:
    a, d = as_field(a), as_field(d)
    if a.is_zero and d.is_zero:
        raise ZeroParameters("grid family needs (a, d) != (0, 0)")
    return integrate(g.x_poly, Variable.X).scale(a) + integrate(g.y_poly, Variable.Y).scale(d)


def grid_pencil(g: GridConfig, m: Sequence[Sequence[Any]] = IDENTITY2) -> PencilSpec:
    return PencilSpec(g.x_poly, g.y_poly, _as_matrix2(m))


def complete_intersection_pencil(
    g: GridConfig, mu: Any = 1, nu: Any = 1, m: Sequence[Sequence[Any]] = IDENTITY2
) -> PencilSpec:
    """F = y - mu * prod(x - x_i), G = x - nu * prod(y - y_j)."""
    return PencilSpec(Y - g.x_poly.scale(mu), X - g.y_poly.scale(nu), _as_matrix2(m))


def hyperelliptic_pencil(
    g: GridConfig, mu: Any = 1, nu: Any = 1, m: Sequence[Sequence[Any]] = IDENTITY2
) -> PencilSpec:
    """F = y^2 - mu * prod(x - x_i), G = x^2 - nu * prod(y - y_j)."""
    return PencilSpec(Y ** 2 - g.x_poly.scale(mu), X ** 2 - g.y_poly.scale(nu), _as_matrix2(m))


def pencil_zero_check(s: PencilSpec, points: Sequence[Sequence[Any]]) -> int:
    """Number of the given points where the pencil member vanishes."""
    field_ = pencil_vector_field(s)
    return sum(1 for pt in points if field_.vanishes_at(pt))


def bezout_zero_bound(s: PencilSpec) -> int:
    if s.f_curve.is_zero or s.g_curve.is_zero:
        raise ConstantInput("a zero curve has no isolated zeros to bound", F=s.f_curve, G=s.g_curve)
    return s.f_curve.degree * s.g_curve.degree


class SpectrumKind(str, Enum):
    CENTER = "center"
    SADDLE = "saddle"
    OTHER = "other"


@dataclass
class Spectrum:
    point: Point
    trace: FieldElem
    det: FieldElem

    @property
    def char_poly(self) -> Tuple[FieldElem, FieldElem, FieldElem]:
        """Coefficients of lambda^2 - trace * lambda + det."""
        return ONE, -self.trace, self.det

    @property
    def kind(self) -> Optional[SpectrumKind]:
        if not (self.trace.is_real and self.det.is_real):
            return None
        if self.trace.is_zero and self.det.re > 0:
            return SpectrumKind.CENTER
        if self.det.re < 0:
            return SpectrumKind.SADDLE
        return SpectrumKind.OTHER

    def to_dict(self) -> Dict[str, Any]:
        kind = self.kind
        return {
            "point": point_to_json(self.point),
            "trace": self.trace.to_json(),
            "det": self.det.to_json(),
            "kind": kind.value if kind else None,
        }


def linearization_spectrum(x: VectorFieldPoly, pt: Sequence[Any]) -> Spectrum:
    point = as_point(pt)
    if not x.vanishes_at(point):
        raise NotAZero("vector field does not vanish at the point", point=point_to_json(point))
    px = evaluate(partial_derivative(x.p_comp, Variable.X), point)
    py = evaluate(partial_derivative(x.p_comp, Variable.Y), point)
    qx = evaluate(partial_derivative(x.q_comp, Variable.X), point)
    qy = evaluate(partial_derivative(x.q_comp, Variable.Y), point)
    return Spectrum(point=point, trace=px + qy, det=px * qy - py * qx)


@dataclass
class GridMorseReport:
    points: int
    morse: int
    milnor_numbers: List[Any] = field(default_factory=list)

    @property
    def all_morse(self) -> bool:
        return self.points == self.morse

    def to_dict(self) -> Dict[str, Any]:
        return {
            "points": self.points,
            "morse": self.morse,
            "all_morse": self.all_morse,
            "milnor": self.milnor_numbers,
        }


def grid_morse_report(g: GridConfig, a: Any = 1, d: Any = 1) -> GridMorseReport:
    f = grid_polynomial_family(g, a, d)
    grid = g.points()
    morse = sum(1 for pt in grid if is_morse_point(f, pt))
    milnor = [milnor_number(f, pt).to_json() for pt in grid]
    log.info("grid family on %d points: %d Morse", len(grid), morse)
    return GridMorseReport(points=len(grid), morse=morse, milnor_numbers=milnor)


ROTATED_QUADRATIC = 2 * X ** 2 - 2 * X * Y + 2 * Y ** 2 - X - Y - 1
ROTATED_LINE = X + Y - 1


def rotated_member() -> BivarPoly:
    """(x^3/3 - x^2/2) + (y^3/3 - y^2/2), the a = d member of the unit grid family."""
    return grid_polynomial_family(GridConfig((0, 1), (0, 1)), 1, 1)


def rotated_family_report() -> Dict[str, Any]:
    f = rotated_member()
    identity = 6 * (f + Fraction(1, 6)) == ROTATED_LINE * ROTATED_QUADRATIC
    unshifted_divides = exact_divide(6 * f, ROTATED_LINE) is not None
    values = {
        "saddles": [evaluate(ROTATED_QUADRATIC, pt).to_json() for pt in ((1, 0), (0, 1))],
        "centers": [evaluate(ROTATED_QUADRATIC, pt).to_json() for pt in ((0, 0), (1, 1))],
    }
    return {"identity": identity, "unshifted_divisible": unshifted_divides, "quadratic_values": values}


def rotated_family_reducibility_check() -> bool:
    report = rotated_family_report()
    return bool(report["identity"]) and not report["unshifted_divisible"]


@dataclass
class PencilReport:
    spec: PencilSpec
    slice_: PencilSlice
    zeros_checked: int
    spectra: List[Spectrum] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        payload = self.slice_.to_dict()
        payload["zeros_checked"] = self.zeros_checked
        payload["spectra"] = [s.to_dict() for s in self.spectra]
        payload["m"] = [[value.to_json() for value in row] for row in self.spec.m]
        payload["bona_fide"] = self.spec.is_bona_fide
        return payload


def pencil_report(s: PencilSpec, points: Sequence[Sequence[Any]] = ()) -> PencilReport:
    """Slice of Hamiltonian members, zero check and spectra at the given points."""
    slice_ = hamiltonian_slice(s.f_curve, s.g_curve)
    field_ = pencil_vector_field(s)
    zeros = [as_point(pt) for pt in points if field_.vanishes_at(pt)]
    if len(zeros) > bezout_zero_bound(s):
        raise InvariantViolation(f"{len(zeros)} zeros exceed the Bezout bound {bezout_zero_bound(s)}")
    spectra = [linearization_spectrum(field_, pt) for pt in zeros]
    return PencilReport(spec=s, slice_=slice_, zeros_checked=len(zeros), spectra=spectra)
