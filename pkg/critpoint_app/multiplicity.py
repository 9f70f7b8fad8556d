from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Union

from .algebra.field import ZERO, FieldElem, as_point, point_to_json
from .algebra.matrix import QMatrix, rank
from .algebra.poly import (
    BivarPoly,
    Monomial,
    Variable,
    X,
    Y,
    bivariate_gcd,
    evaluate,
    exact_divide,
    gradient,
    partial_derivative,
    vanishing_order,
)
from .errors import ConstantInput, InvariantViolation, NotACriticalPoint

log = logging.getLogger(__name__)

INFINITY = "inf"
DEFAULT_ORACLE_CAP = 16


@dataclass(frozen=True)
class MultiplicityResult:
    """Local intersection number; ``value is None`` means infinity."""

    value: Optional[int]

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def to_json(self) -> Union[int, str]:
        return INFINITY if self.value is None else self.value

    def __str__(self) -> str:
        return str(self.to_json())


def _fulton(f: BivarPoly, g: BivarPoly) -> int:
    """I_0(f, g) for curves with no common component through the origin."""
    total = 0
    while True:
        if not f.constant_term.is_zero or not g.constant_term.is_zero:
            return total
        f0 = f.restrict(Variable.Y, 0)
        g0 = g.restrict(Variable.Y, 0)
        r = 0 if f0.is_zero else f0.degree
        s = 0 if g0.is_zero else g0.degree
        if r > s:
            f, g, f0, g0, r, s = g, f, g0, f0, s, r
        if r == 0:
            if g0.is_zero:
                raise InvariantViolation("both curves contain the line y = 0")
            h = exact_divide(f, Y)
            if h is None:
                raise InvariantViolation("f(x, 0) vanishes but y does not divide f")
            total += vanishing_order(g0, Variable.X)
            f = h
            continue
        f = f.scale(f0.coefficient(r, 0).inverse())
        g = g.scale(g0.coefficient(s, 0).inverse())
        g = g - X ** (s - r) * f


def intersection_multiplicity(f: BivarPoly, g: BivarPoly, pt: Sequence) -> MultiplicityResult:
    point = as_point(pt)
    if f.is_zero and g.is_zero:
        return MultiplicityResult(None)
    ft = f.translate(point)
    gt = g.translate(point)
    common = bivariate_gcd(ft, gt)
    if not common.is_constant:
        if common.constant_term.is_zero:
            log.debug("shared component through %s: %s", point_to_json(point), common)
            return MultiplicityResult(None)
        ft = exact_divide(ft, common)
        gt = exact_divide(gt, common)
        if ft is None or gt is None:
            raise InvariantViolation("gcd does not divide its arguments")
    return MultiplicityResult(_fulton(ft, gt))


def _truncated_quotient_dimension(f: BivarPoly, g: BivarPoly, order: int) -> int:
    """dim K[x,y] / (I + m^order) for I = (f, g), both centred at the origin."""
    monomials: List[Monomial] = [(i, total - i) for total in range(order) for i in range(total, -1, -1)]
    index = {m: k for k, m in enumerate(monomials)}
    rows = []
    for generator in (f, g):
        for a, b in monomials:
            row = [ZERO] * len(monomials)
            nonzero = False
            for (i, j), c in generator.terms.items():
                key = (i + a, j + b)
                if key in index:
                    row[index[key]] = c
                    nonzero = True
            if nonzero:
                rows.append(row)
    if not rows:
        return len(monomials)
    return len(monomials) - rank(QMatrix.from_rows(rows, cols=len(monomials)))


def local_algebra_dimension(
    f: BivarPoly, g: BivarPoly, pt: Sequence, cap: int = DEFAULT_ORACLE_CAP
) -> MultiplicityResult:
    """Truncated local-algebra oracle; stops once two consecutive orders agree."""
    point = as_point(pt)
    ft = f.translate(point)
    gt = g.translate(point)
    previous = _truncated_quotient_dimension(ft, gt, 1)
    for order in range(2, cap + 1):
        current = _truncated_quotient_dimension(ft, gt, order)
        if current == previous:
            return MultiplicityResult(current)
        previous = current
    log.debug("oracle did not stabilise below order %d at %s", cap, point_to_json(point))
    return MultiplicityResult(None)


def milnor_number(f: BivarPoly, pt: Sequence) -> MultiplicityResult:
    fx, fy = gradient(f)
    return intersection_multiplicity(fx, fy, pt)


def hessian_determinant(f: BivarPoly, pt: Sequence) -> FieldElem:
    fx, fy = gradient(f)
    fxx = partial_derivative(fx, Variable.X)
    fxy = partial_derivative(fx, Variable.Y)
    fyy = partial_derivative(fy, Variable.Y)
    return evaluate(fxx, pt) * evaluate(fyy, pt) - evaluate(fxy, pt) ** 2


def is_critical_point(f: BivarPoly, pt: Sequence) -> bool:
    fx, fy = gradient(f)
    return evaluate(fx, pt).is_zero and evaluate(fy, pt).is_zero


def is_morse_point(f: BivarPoly, pt: Sequence) -> bool:
    if not is_critical_point(f, pt):
        raise NotACriticalPoint("gradient does not vanish at the point", point=point_to_json(as_point(pt)))
    return not hessian_determinant(f, pt).is_zero


def critical_set_finite(f: BivarPoly) -> bool:
    if f.is_constant:
        raise ConstantInput("critical set of a constant polynomial is the whole plane")
    fx, fy = gradient(f)
    return bivariate_gcd(fx, fy).is_constant
