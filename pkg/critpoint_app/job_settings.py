from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from .algebra.field import format_rational, parse_rational

Window = Tuple[Fraction, Fraction, Fraction, Fraction]

DEFAULT_SEED = 0
DEFAULT_TRIALS = 100
DEFAULT_WINDOW: Window = (Fraction(-2), Fraction(3), Fraction(-2), Fraction(3))
DEFAULT_RESOLUTION = 512


class JobCommand(str, Enum):
    DELTA = "delta"
    SOLVE = "solve"
    CLASSIFY3 = "classify3"
    ORBIT = "orbit"
    INTERP_CURVE = "interp-curve"
    PENCIL = "pencil"
    MULTIPLICITY = "multiplicity"
    SAMPLE = "sample"
    PLOT = "plot"


def window_to_list(window: Window) -> list:
    return [format_rational(value) for value in window]


def window_from_list(values: Any) -> Window:
    if not isinstance(values, (list, tuple)) or len(values) != 4:
        return DEFAULT_WINDOW
    xmin, xmax, ymin, ymax = (parse_rational(v) for v in values)
    return xmin, xmax, ymin, ymax


@dataclass
class PlotSettings:
    window: Window = DEFAULT_WINDOW
    resolution: int = DEFAULT_RESOLUTION
    show_b: bool = False
    shade: bool = False
    level: Fraction = Fraction(0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "window": window_to_list(self.window),
            "resolution": self.resolution,
            "show_b": self.show_b,
            "shade": self.shade,
            "level": format_rational(self.level),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "PlotSettings":
        return cls(
            window=window_from_list(data.get("window", window_to_list(DEFAULT_WINDOW))),
            resolution=int(data.get("resolution", DEFAULT_RESOLUTION)),
            show_b=bool(data.get("show_b", False)),
            shade=bool(data.get("shade", False)),
            level=parse_rational(data.get("level", "0")),
        )


@dataclass
class JobDefaults:
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    window: Window = DEFAULT_WINDOW
    resolution: int = DEFAULT_RESOLUTION

    def to_dict(self) -> Dict[str, Any]:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "window": window_to_list(self.window),
            "resolution": self.resolution,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "JobDefaults":
        return cls(
            seed=int(data.get("seed", DEFAULT_SEED)),
            trials=int(data.get("trials", DEFAULT_TRIALS)),
            window=window_from_list(data.get("window")),
            resolution=int(data.get("resolution", DEFAULT_RESOLUTION)),
        )


@dataclass
class JobSpec:
    command: JobCommand
    degree: Optional[int] = None
    input_path: Optional[str] = None
    input_text: Optional[str] = None
    preset: Optional[str] = None
    output_path: Optional[str] = None
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    workers: int = 1
    verbose: bool = False
    plot: PlotSettings = field(default_factory=PlotSettings)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "command": self.command.value,
            "degree": self.degree,
            "input_path": self.input_path,
            "input_text": self.input_text,
            "preset": self.preset,
            "output_path": self.output_path,
            "seed": self.seed,
            "trials": self.trials,
            "workers": self.workers,
            "verbose": self.verbose,
            "plot": self.plot.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "JobSpec":
        return cls(
            command=JobCommand(data["command"]),
            degree=data.get("degree"),
            input_path=data.get("input_path"),
            input_text=data.get("input_text"),
            preset=data.get("preset"),
            output_path=data.get("output_path"),
            seed=int(data.get("seed", DEFAULT_SEED)),
            trials=int(data.get("trials", DEFAULT_TRIALS)),
            workers=int(data.get("workers", 1)),
            verbose=bool(data.get("verbose", False)),
            plot=PlotSettings.from_dict(data.get("plot", {})),
        )
