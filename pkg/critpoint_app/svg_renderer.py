from __future__ import annotations

import logging
import os
from dataclasses import dataclass, field
from typing import Any, List, Optional, Sequence, Tuple

import numpy as np

from .algebra.poly import BivarPoly
from .cubic import LINES_A, LINES_B
from .errors import BadInput
from .job_settings import PlotSettings
from .point_config import PointConfig
from .utils import (FloatTerm, FloatWindow, clamp, point_to_floats, poly_to_float_terms,
                    to_float, window_to_canvas, window_to_floats)

log = logging.getLogger(__name__)

CANVAS_SIZE = 600
SHADE_CELLS = 96
POINT_RADIUS = 4.0

LINE_A_COLOR = (30, 30, 30, 255)
LINE_B_COLOR = (120, 120, 200, 255)
CURVE_COLOR = (200, 40, 40, 255)
POINT_COLOR = (20, 90, 200, 255)
CONVEX_COLOR = (120, 200, 120, 70)

# cell corners are numbered counter-clockwise from (i, j); each edge runs from its lower corner
CELL_EDGES = ((0, 1), (1, 2), (3, 2), (0, 3))

Segments = np.ndarray

_gui_app: Any = None


def _evaluate_terms(terms: Sequence[FloatTerm], x: Any, y: Any) -> Any:
    total = np.zeros_like(x, dtype=float) if isinstance(x, np.ndarray) else 0.0
    for i, j, c in terms:
        total = total + c * x ** i * y ** j
    return total


def _lerp(p0: Tuple[float, float], p1: Tuple[float, float], v0: float, v1: float) -> Tuple[float, float]:
    t = clamp(v0 / (v0 - v1), 0.0, 1.0)
    return p0[0] + t * (p1[0] - p0[0]), p0[1] + t * (p1[1] - p0[1])


def _as_segments(items: List[Tuple[Tuple[float, float], Tuple[float, float]]]) -> Segments:
    return np.array(items, dtype=float).reshape(-1, 2, 2)


def arrangement_segments(lines: Sequence[BivarPoly], window: FloatWindow) -> Segments:
    """Clip each line a*x + b*y + c = 0 to the window; lines missing the window are dropped."""
    xmin, xmax, ymin, ymax = window
    eps = 1e-12 * max(xmax - xmin, ymax - ymin)
    segments = []
    for line in lines:
        if line.is_zero or line.degree != 1:
            raise BadInput(f"arrangement entries must be lines, got {line}")
        a, b, c = (to_float(line.coefficient(*m)) for m in ((1, 0), (0, 1), (0, 0)))
        hits = []
        if b != 0.0:
            for x in (xmin, xmax):
                y = -(a * x + c) / b
                if ymin - eps <= y <= ymax + eps:
                    hits.append((x, clamp(y, ymin, ymax)))
        if a != 0.0:
            for y in (ymin, ymax):
                x = -(b * y + c) / a
                if xmin - eps <= x <= xmax + eps:
                    hits.append((clamp(x, xmin, xmax), y))
        if len(hits) < 2:
            continue
        hits.sort()
        start, end = hits[0], hits[-1]
        if start == end:
            continue
        segments.append((start, end))
    return _as_segments(segments)


def sample_grid(p: BivarPoly, window: FloatWindow, resolution: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    if resolution < 2:
        raise BadInput("resolution must be at least 2")
    xmin, xmax, ymin, ymax = window
    xs = np.linspace(xmin, xmax, resolution)
    ys = np.linspace(ymin, ymax, resolution)
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    return xs, ys, _evaluate_terms(poly_to_float_terms(p), gx, gy)


def trace_level_segments(p: BivarPoly, level: Any, window: FloatWindow, resolution: int) -> Segments:
    """Marching squares for {p = level}; saddle cells are split by the sign at the cell centre."""
    terms = poly_to_float_terms(p)
    offset = to_float(level)
    xs, ys, values = sample_grid(p, window, resolution)
    values = values - offset
    above = values > 0
    index = (
        above[:-1, :-1].astype(int) * 8
        + above[1:, :-1].astype(int) * 4
        + above[1:, 1:].astype(int) * 2
        + above[:-1, 1:].astype(int)
    )
    segments = []
    for i, j in np.argwhere((index != 0) & (index != 15)):
        corners = ((xs[i], ys[j]), (xs[i + 1], ys[j]), (xs[i + 1], ys[j + 1]), (xs[i], ys[j + 1]))
        corner_values = (values[i, j], values[i + 1, j], values[i + 1, j + 1], values[i, j + 1])
        crossings = {}
        for edge, (a, b) in enumerate(CELL_EDGES):
            if (corner_values[a] > 0) != (corner_values[b] > 0):
                crossings[edge] = _lerp(corners[a], corners[b], corner_values[a], corner_values[b])
        if len(crossings) == 2:
            first, second = crossings.values()
            segments.append((first, second))
            continue
        centre = _evaluate_terms(terms, (xs[i] + xs[i + 1]) / 2, (ys[j] + ys[j + 1]) / 2) - offset
        if (centre > 0) == (corner_values[0] > 0):
            pairs = ((0, 1), (2, 3))
        else:
            pairs = ((3, 0), (1, 2))
        for e0, e1 in pairs:
            segments.append((crossings[e0], crossings[e1]))
    log.debug("level %s traced with %d segments at resolution %d", level, len(segments), resolution)
    return _as_segments(segments)


def convexity_cells(window: FloatWindow, resolution: int) -> np.ndarray:
    """True where a fourth point at the cell centre makes a convex quadrilateral with the triangle."""
    xmin, xmax, ymin, ymax = window
    xs = xmin + (np.arange(resolution) + 0.5) * (xmax - xmin) / resolution
    ys = ymin + (np.arange(resolution) + 0.5) * (ymax - ymin) / resolution
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    conditions = (gx > 0).astype(int) + (gy > 0).astype(int) + (gx + gy < 1).astype(int)
    return conditions == 2


@dataclass
class PlotPayload:
    window: FloatWindow
    arrangement: Segments
    arrangement_b: Optional[Segments] = None
    curves: List[Segments] = field(default_factory=list)
    points: List[Tuple[float, float]] = field(default_factory=list)
    convex: Optional[np.ndarray] = None

    @property
    def curve_segment_count(self) -> int:
        return sum(len(c) for c in self.curves)

    def summary(self) -> dict:
        return {
            "lines": len(self.arrangement),
            "b_lines": 0 if self.arrangement_b is None else len(self.arrangement_b),
            "curve_segments": self.curve_segment_count,
            "points": len(self.points),
            "shaded": self.convex is not None,
        }


def build_plot_payload(
    settings: PlotSettings,
    points: Optional[PointConfig] = None,
    curves: Sequence[Tuple[BivarPoly, Any]] = (),
) -> PlotPayload:
    window = window_to_floats(settings.window)
    return PlotPayload(
        window=window,
        arrangement=arrangement_segments(LINES_A, window),
        arrangement_b=arrangement_segments(LINES_B, window) if settings.show_b else None,
        curves=[trace_level_segments(p, level, window, settings.resolution) for p, level in curves],
        points=[point_to_floats(pt) for pt in points.points] if points is not None else [],
        convex=convexity_cells(window, min(settings.resolution, SHADE_CELLS)) if settings.shade else None,
    )


def _ensure_gui_app() -> None:
    global _gui_app
    os.environ.setdefault("QT_QPA_PLATFORM", "offscreen")
    from PySide6.QtGui import QGuiApplication

    if QGuiApplication.instance() is None:
        _gui_app = QGuiApplication([])


@dataclass
class SvgRenderResult:
    document: str
    payload: PlotPayload


class SvgRenderer:
    def __init__(self, size: int = CANVAS_SIZE) -> None:
        self.size = size

    def render(self, payload: PlotPayload, title: str = "critpoint") -> SvgRenderResult:
        _ensure_gui_app()
        from PySide6.QtCore import QBuffer, QIODevice, QPointF, QRect, QRectF, QSize, Qt
        from PySide6.QtGui import QColor, QPainter, QPainterPath, QPen
        from PySide6.QtSvg import QSvgGenerator

        buffer = QBuffer()
        buffer.open(QIODevice.WriteOnly)
        generator = QSvgGenerator()
        generator.setOutputDevice(buffer)
        generator.setSize(QSize(self.size, self.size))
        generator.setViewBox(QRect(0, 0, self.size, self.size))
        generator.setTitle(title)

        def canvas(x: float, y: float) -> QPointF:
            px, py = window_to_canvas(x, y, payload.window, self.size, self.size)
            return QPointF(px, py)

        painter = QPainter(generator)
        painter.setRenderHint(QPainter.Antialiasing, True)

        if payload.convex is not None:
            self._shade(painter, payload, QColor(*CONVEX_COLOR), QRectF, canvas)

        frame_pen = QPen(QColor(0, 0, 0))
        frame_pen.setWidthF(1.0)
        painter.setPen(frame_pen)
        painter.setBrush(Qt.NoBrush)
        painter.drawRect(QRectF(0, 0, self.size, self.size))

        line_pen = QPen(QColor(*LINE_A_COLOR))
        line_pen.setWidthF(1.5)
        painter.setPen(line_pen)
        for (x0, y0), (x1, y1) in payload.arrangement:
            painter.drawLine(canvas(x0, y0), canvas(x1, y1))

        if payload.arrangement_b is not None:
            b_pen = QPen(QColor(*LINE_B_COLOR))
            b_pen.setWidthF(1.0)
            b_pen.setStyle(Qt.DashLine)
            painter.setPen(b_pen)
            for (x0, y0), (x1, y1) in payload.arrangement_b:
                painter.drawLine(canvas(x0, y0), canvas(x1, y1))

        curve_pen = QPen(QColor(*CURVE_COLOR))
        curve_pen.setWidthF(1.2)
        curve_pen.setJoinStyle(Qt.RoundJoin)
        for segments in payload.curves:
            if not len(segments):
                continue
            path = QPainterPath()
            for (x0, y0), (x1, y1) in segments:
                path.moveTo(canvas(x0, y0))
                path.lineTo(canvas(x1, y1))
            painter.strokePath(path, curve_pen)

        painter.setPen(Qt.NoPen)
        painter.setBrush(QColor(*POINT_COLOR))
        for x, y in payload.points:
            painter.drawEllipse(canvas(x, y), POINT_RADIUS, POINT_RADIUS)
        painter.end()
        document = bytes(buffer.data())
        buffer.close()
        return SvgRenderResult(document=document.decode("utf-8"), payload=payload)

    def _shade(self, painter: Any, payload: PlotPayload, color: Any, rect_type: Any, canvas: Any) -> None:
        xmin, xmax, ymin, ymax = payload.window
        cells = payload.convex.shape[0]
        dx = (xmax - xmin) / cells
        dy = (ymax - ymin) / cells
        painter.setPen(color)
        painter.setBrush(color)
        # one rectangle per run of convex cells along a column
        for i in range(cells):
            column = payload.convex[i]
            j = 0
            while j < cells:
                if not column[j]:
                    j += 1
                    continue
                start = j
                while j < cells and column[j]:
                    j += 1
                top_left = canvas(xmin + i * dx, ymin + j * dy)
                bottom_right = canvas(xmin + (i + 1) * dx, ymin + start * dy)
                painter.drawRect(rect_type(top_left, bottom_right))


def render_svg(payload: PlotPayload, size: int = CANVAS_SIZE) -> str:
    return SvgRenderer(size).render(payload).document
