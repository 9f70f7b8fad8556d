from __future__ import annotations

from typing import List, Sequence, Tuple

from .algebra.field import FieldElem, Point, as_field
from .algebra.poly import BivarPoly
from .errors import NonRealPlotData

FloatWindow = Tuple[float, float, float, float]
FloatTerm = Tuple[int, int, float]


def clamp(value: float, min_value: float, max_value: float) -> float:
    return max(min_value, min(max_value, value))


def to_float(value: FieldElem | int | str) -> float:
    elem = as_field(value)
    if not elem.is_real:
        raise NonRealPlotData(f"cannot plot non-real value {elem}")
    return float(elem.re)


def point_to_floats(pt: Point) -> Tuple[float, float]:
    return to_float(pt[0]), to_float(pt[1])


def window_to_floats(window: Sequence[object]) -> FloatWindow:
    xmin, xmax, ymin, ymax = (to_float(v) for v in window)
    if xmin >= xmax or ymin >= ymax:
        raise NonRealPlotData("plot window must have xmin < xmax and ymin < ymax")
    return xmin, xmax, ymin, ymax


def poly_to_float_terms(p: BivarPoly) -> List[FloatTerm]:
    if not p.is_real:
        raise NonRealPlotData("cannot plot a polynomial with non-real coefficients")
    return [(i, j, float(c.re)) for (i, j), c in p.sorted_terms()]


def window_to_canvas(x: float, y: float, window: FloatWindow, width: int, height: int) -> Tuple[float, float]:
    xmin, xmax, ymin, ymax = window
    px = (x - xmin) / (xmax - xmin) * width
    py = (ymax - y) / (ymax - ymin) * height
    return px, py
