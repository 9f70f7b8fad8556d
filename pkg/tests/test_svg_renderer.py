from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest

from critpoint_app.algebra.field import IMAG_UNIT
from critpoint_app.algebra.poly import X, Y
from critpoint_app.cubic import LINES_A
from critpoint_app.errors import BadInput, NonRealPlotData
from critpoint_app.job_settings import PlotSettings
from critpoint_app.pencil import rotated_member
from critpoint_app.point_config import PointConfig
from critpoint_app.svg_renderer import (SvgRenderer, arrangement_segments, build_plot_payload, convexity_cells,
                                        render_svg, sample_grid, trace_level_segments)
from critpoint_app.utils import window_to_canvas, window_to_floats

WINDOW = (-2.0, 3.0, -2.0, 3.0)


def test_arrangement_has_six_segments():
    segments = arrangement_segments(LINES_A, WINDOW)
    assert segments.shape == (6, 2, 2)
    assert np.all(segments >= -2.0) and np.all(segments <= 3.0)


def test_lines_outside_the_window_are_dropped():
    assert arrangement_segments([X - 10], WINDOW).shape == (0, 2, 2)
    with pytest.raises(BadInput):
        arrangement_segments([X ** 2], WINDOW)


def test_level_curve_of_a_line():
    segments = trace_level_segments(X + Y - 1, 0, WINDOW, 16)
    assert len(segments) > 0
    sums = segments[..., 0] + segments[..., 1]
    assert np.allclose(sums, 1.0, atol=1e-9)


def test_level_set_is_symmetric_under_the_diagonal_reflection():
    segments = trace_level_segments(rotated_member(), 0, WINDOW, 64)
    swapped = segments[..., ::-1]
    assert len(segments) > 0
    same = np.abs(swapped[:, None] - segments[None, :]).max(axis=(2, 3)) < 1e-9
    flipped = np.abs(swapped[:, None] - segments[None, :, ::-1]).max(axis=(2, 3)) < 1e-9
    assert np.all((same | flipped).any(axis=1))


def test_sample_grid_resolution():
    xs, ys, values = sample_grid(X * Y, WINDOW, 5)
    assert values.shape == (5, 5)
    assert values[0, 0] == pytest.approx(4.0)
    with pytest.raises(BadInput):
        sample_grid(X, WINDOW, 1)


def test_convexity_cells():
    cells = convexity_cells(WINDOW, 5)
    # cell centres are -1.5, -0.5, 0.5, 1.5, 2.5 on both axes
    assert cells[3, 3]
    assert cells[2, 1]
    assert not cells[0, 0]
    assert not cells[4, 1]


def test_payload_summary(rhombus):
    settings = PlotSettings(resolution=32, show_b=True, shade=True)
    payload = build_plot_payload(settings, points=rhombus, curves=[(rotated_member(), Fraction(0))])
    summary = payload.summary()
    assert summary["lines"] == 6
    assert summary["b_lines"] == 6
    assert summary["points"] == 4
    assert summary["shaded"] is True
    assert summary["curve_segments"] > 0
    assert payload.convex.shape == (32, 32)


def test_non_real_plot_data_is_rejected():
    settings = PlotSettings(resolution=8)
    with pytest.raises(NonRealPlotData):
        build_plot_payload(settings, points=PointConfig.of([(IMAG_UNIT, 0)]))
    with pytest.raises(NonRealPlotData):
        build_plot_payload(settings, curves=[(X + IMAG_UNIT, 0)])
    with pytest.raises(NonRealPlotData):
        window_to_floats((1, 0, 0, 1))


def test_canvas_mapping_flips_y():
    assert window_to_canvas(-2.0, 3.0, WINDOW, 100, 100) == (0.0, 0.0)
    assert window_to_canvas(3.0, -2.0, WINDOW, 100, 100) == (100.0, 100.0)


def test_svg_document(rhombus):
    pytest.importorskip("PySide6.QtSvg")
    payload = build_plot_payload(PlotSettings(resolution=16, shade=True), points=rhombus)
    result = SvgRenderer(200).render(payload, title="rhombus")
    assert result.document.lstrip().startswith("<?xml") or "<svg" in result.document
    assert "</svg>" in result.document
    assert "rhombus" in result.document
    assert "</svg>" in render_svg(payload, size=100)
