from __future__ import annotations

import argparse
import json
import logging
import re
import sys
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence, TextIO

from .algebra.field import parse_rational, point_to_json
from .config_io import JobInput, load_input
from .cubic import Vertex, classify_cubic, gauge_orbit_check, normalize_quadrilateral
from .errors import BadInput, CritPointError, OnPoleLocus, UsageError
from .interpcurve import base_points_vanish, curve_divisibility_report, interpolation_curve
from .job_settings import JobCommand, JobDefaults, JobSpec, PlotSettings
from .linsys import ambient_dimension, classify_configuration, delta, dichotomy_experiment, parity
from .multiplicity import intersection_multiplicity, milnor_number
from .pencil import GridConfig, PencilSpec, grid_pencil, pencil_report
from .point_config import PointConfig
from .preset_library import PresetLibrary
from .settings_store import SettingsStore
from .svg_renderer import SvgRenderer, build_plot_payload

EXIT_OK = 0
EXIT_DOMAIN_ERROR = 1
EXIT_USAGE_ERROR = 2

MAX_SEED = (1 << 64) - 1

log = logging.getLogger(__name__)

_FLAG_IN_MESSAGE = re.compile(r"argument (\S+?)(?:/\S+)?:")


class JobArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        match = _FLAG_IN_MESSAGE.search(message)
        raise UsageError(message, flag=match.group(1) if match else None)


def build_parser() -> JobArgumentParser:
    parser = JobArgumentParser(
        prog="critpoint",
        allow_abbrev=False,
        description="Polynomials with prescribed critical points.",
    )
    parser.add_argument("command", choices=[c.value for c in JobCommand])
    parser.add_argument("--degree", type=int)
    parser.add_argument("--points", "--input", dest="source", help="@file.json or inline JSON")
    parser.add_argument("--preset")
    parser.add_argument("--output")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--trials", type=int)
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--window", help="xmin,xmax,ymin,ymax")
    parser.add_argument("--resolution", type=int)
    parser.add_argument("--level")
    parser.add_argument("--show-b", action="store_true")
    parser.add_argument("--shade", action="store_true")
    parser.add_argument("--defaults", help="JSON file with stored defaults")
    parser.add_argument("--verbose", "-v", action="store_true")
    return parser


def _parse_window(text: str) -> tuple:
    parts = text.split(",")
    if len(parts) != 4:
        raise UsageError("--window needs four values xmin,xmax,ymin,ymax", flag="--window")
    try:
        xmin, xmax, ymin, ymax = (parse_rational(p) for p in parts)
    except BadInput as exc:
        raise UsageError(f"--window: {exc.detail}", flag="--window") from exc
    if xmin >= xmax or ymin >= ymax:
        raise UsageError("--window must satisfy xmin < xmax and ymin < ymax", flag="--window")
    return xmin, xmax, ymin, ymax


_NEEDS_DEGREE = {JobCommand.DELTA, JobCommand.SAMPLE}
_NEEDS_INPUT = {
    JobCommand.SOLVE,
    JobCommand.CLASSIFY3,
    JobCommand.ORBIT,
    JobCommand.INTERP_CURVE,
    JobCommand.PENCIL,
    JobCommand.MULTIPLICITY,
}


def parse_job(args: Sequence[str]) -> JobSpec:
    ns, extras = build_parser().parse_known_args(list(args))
    if extras:
        raise UsageError(f"unrecognized flag {extras[0]}", flag=extras[0])
    defaults = SettingsStore(Path(ns.defaults)).load() if ns.defaults else JobDefaults()
    command = JobCommand(ns.command)

    if ns.degree is not None and ns.degree < 1:
        raise UsageError(f"--degree must be a positive integer, got {ns.degree}", flag="--degree")
    if command in _NEEDS_DEGREE and ns.degree is None:
        raise UsageError(f"{command.value} requires --degree", flag="--degree")
    if ns.source is not None and ns.preset is not None:
        raise UsageError("--points and --preset are mutually exclusive", flag="--preset")
    if command in _NEEDS_INPUT and ns.source is None and ns.preset is None:
        raise UsageError(f"{command.value} requires --points or --preset", flag="--points")
    if command is JobCommand.PLOT and not ns.output:
        raise UsageError("plot requires --output", flag="--output")

    seed = defaults.seed if ns.seed is None else ns.seed
    if not 0 <= seed <= MAX_SEED:
        raise UsageError("--seed must be an unsigned 64-bit integer", flag="--seed")
    trials = defaults.trials if ns.trials is None else ns.trials
    if trials < 1:
        raise UsageError("--trials must be at least 1", flag="--trials")
    if ns.workers < 1:
        raise UsageError("--workers must be at least 1", flag="--workers")
    resolution = defaults.resolution if ns.resolution is None else ns.resolution
    if resolution < 2:
        raise UsageError("--resolution must be at least 2", flag="--resolution")
    level = parse_rational(0)
    if ns.level is not None:
        try:
            level = parse_rational(ns.level)
        except BadInput as exc:
            raise UsageError(f"--level: {exc.detail}", flag="--level") from exc

    input_path = input_text = None
    if ns.source is not None:
        if ns.source.startswith("@"):
            input_path = ns.source[1:]
        else:
            input_text = ns.source

    return JobSpec(
        command=command,
        degree=ns.degree,
        input_path=input_path,
        input_text=input_text,
        preset=ns.preset,
        output_path=ns.output,
        seed=seed,
        trials=trials,
        workers=ns.workers,
        verbose=ns.verbose,
        plot=PlotSettings(
            window=_parse_window(ns.window) if ns.window else defaults.window,
            resolution=resolution,
            show_b=ns.show_b,
            shade=ns.shade,
            level=level,
        ),
    )


def _job_input(job: JobSpec) -> Optional[JobInput]:
    if job.preset is not None:
        preset = PresetLibrary().load_preset(job.preset)
        return JobInput(preset.to_dict(), origin=f"preset {job.preset}")
    if job.input_path is None and job.input_text is None:
        return None
    return load_input(job.input_path, job.input_text)


def _require_input(job: JobSpec) -> JobInput:
    data = _job_input(job)
    if data is None:
        raise UsageError(f"{job.command.value} requires --points or --preset", flag="--points")
    return data


def _degree(job: JobSpec, data: JobInput) -> int:
    d = job.degree if job.degree is not None else data.degree()
    if d is None:
        raise UsageError(f"{job.command.value} needs --degree or a 'degree' entry in the input", flag="--degree")
    return d


def _write_svg(job: JobSpec, points: Optional[PointConfig], curves: List[tuple]) -> Dict[str, Any]:
    payload = build_plot_payload(job.plot, points=points, curves=curves)
    document = SvgRenderer().render(payload, title=job.command.value).document
    try:
        Path(job.output_path).write_text(document, encoding="utf-8")
    except OSError as exc:
        raise BadInput(f"cannot write {job.output_path}: {exc.strerror}") from exc
    summary = payload.summary()
    summary["output"] = job.output_path
    return summary


def _run_delta(job: JobSpec) -> Dict[str, Any]:
    return {"delta": delta(job.degree), "ambient_dim": ambient_dimension(job.degree), "parity": parity(job.degree)}


def _run_solve(job: JobSpec) -> Dict[str, Any]:
    data = _require_input(job)
    d = _degree(job, data)
    payload: Dict[str, Any] = {"degree": d}
    payload.update(classify_configuration(d, data.points()).to_dict())
    return payload


def _run_classify3(job: JobSpec) -> Dict[str, Any]:
    return classify_cubic(_require_input(job).points()).to_dict()


def _run_orbit(job: JobSpec) -> Dict[str, Any]:
    orbit = normalize_quadrilateral(_require_input(job).points())
    payload = orbit.to_dict()
    gauge = []
    for vertex in Vertex:
        try:
            gauge.append(gauge_orbit_check(vertex, orbit.canonical).to_dict())
        except OnPoleLocus:
            gauge.append({"vertex": vertex.value, "point": point_to_json(orbit.canonical), "pole": True})
    payload["gauge"] = gauge
    return payload


def _run_interp_curve(job: JobSpec) -> Dict[str, Any]:
    data = _require_input(job)
    d = _degree(job, data)
    base = data.points()
    curve = interpolation_curve(d, base, workers=job.workers)
    payload = curve.to_dict()
    payload["base_vanishes"] = base_points_vanish(curve)
    payload["factors"] = [entry.to_dict() for entry in curve_divisibility_report(curve, data.polys("candidates"))]
    if job.output_path:
        curves = [] if curve.poly.is_zero else [(curve.poly, 0)]
        payload["plot"] = _write_svg(job, base, curves)
    return payload


def _grid_from_points(points: PointConfig) -> GridConfig:
    xs = sorted({x for x, _ in points.points}, key=lambda v: (v.re, v.im))
    ys = sorted({y for _, y in points.points}, key=lambda v: (v.re, v.im))
    if len(xs) * len(ys) != len(points):
        raise BadInput("pencil input without F and G must be a full grid of points")
    return GridConfig(tuple(xs), tuple(ys))


def _pencil_spec(data: JobInput) -> tuple:
    m = data.matrix("m")
    if data.has("F") or data.has("G"):
        spec = PencilSpec(data.poly("F"), data.poly("G"))
        points = data.optional_points()
    else:
        grid = _grid_from_points(data.points())
        spec = grid_pencil(grid)
        points = grid.points()
    if m is not None:
        spec = spec.with_matrix(m)
    return spec, points


def _run_pencil(job: JobSpec) -> Dict[str, Any]:
    spec, points = _pencil_spec(_require_input(job))
    report = pencil_report(spec, points.points if points is not None else ())
    return report.to_dict()


def _run_multiplicity(job: JobSpec) -> Dict[str, Any]:
    data = _require_input(job)
    f = data.poly("f")
    pt = data.point("point")
    g = data.optional_poly("g")
    result = milnor_number(f, pt) if g is None else intersection_multiplicity(f, g, pt)
    return {"point": point_to_json(pt), "multiplicity": result.to_json()}


def _run_sample(job: JobSpec) -> Dict[str, Any]:
    return dichotomy_experiment(job.degree, job.trials, job.seed, workers=job.workers).to_dict()


def _run_plot(job: JobSpec) -> Dict[str, Any]:
    data = _job_input(job)
    points = data.optional_points() if data is not None else None
    curves: List[tuple] = []
    if data is not None:
        if data.has("poly"):
            curves.append((data.poly("poly"), job.plot.level))
        for entry in data.polys("polys"):
            curves.append((entry, job.plot.level))
    return _write_svg(job, points, curves)


_HANDLERS: Dict[JobCommand, Callable[[JobSpec], Dict[str, Any]]] = {
    JobCommand.DELTA: _run_delta,
    JobCommand.SOLVE: _run_solve,
    JobCommand.CLASSIFY3: _run_classify3,
    JobCommand.ORBIT: _run_orbit,
    JobCommand.INTERP_CURVE: _run_interp_curve,
    JobCommand.PENCIL: _run_pencil,
    JobCommand.MULTIPLICITY: _run_multiplicity,
    JobCommand.SAMPLE: _run_sample,
    JobCommand.PLOT: _run_plot,
}


def _emit(stream: TextIO, payload: Dict[str, Any]) -> None:
    stream.write(json.dumps(payload, indent=2))
    stream.write("\n")


def run_job(job: JobSpec, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    out = sys.stdout if stdout is None else stdout
    err = sys.stderr if stderr is None else stderr
    try:
        payload = _HANDLERS[job.command](job)
    except UsageError as exc:
        err.write(f"critpoint: {exc}\n")
        return EXIT_USAGE_ERROR
    except CritPointError as exc:
        log.debug("%s failed: %s", job.command.value, exc.detail)
        _emit(out, exc.to_dict())
        return EXIT_DOMAIN_ERROR
    _emit(out, payload)
    return EXIT_OK


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def run(argv: Optional[Sequence[str]] = None) -> int:
    args = sys.argv[1:] if argv is None else argv
    try:
        job = parse_job(args)
    except UsageError as exc:
        sys.stderr.write(f"critpoint: {exc}\n")
        return EXIT_USAGE_ERROR
    except CritPointError as exc:
        _emit(sys.stdout, exc.to_dict())
        return EXIT_DOMAIN_ERROR
    configure_logging(job.verbose)
    return run_job(job)
