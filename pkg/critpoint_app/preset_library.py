from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional

from .algebra.poly import BivarPoly
from .errors import BadInput
from .interpcurve import CONIC_SIX, GRID_SIX, grid_lines, parallel_lines_base, structural_factor
from .point_config import PointConfig

DEFAULT_PRESET_DIRNAME = "presets"
PRESET_SUFFIX = ".json"
INVALID_CHARS_RE = re.compile(r"[^A-Za-z0-9_-]+")

_TRIANGLE = [(0, 0), (1, 0), (0, 1)]


@dataclass
class Preset:
    name: str
    points: PointConfig
    degree: Optional[int] = None
    candidates: List[BivarPoly] = field(default_factory=list)

    def to_dict(self) -> Dict[str, Any]:
        payload: Dict[str, Any] = {"name": self.name}
        payload.update(self.points.to_dict())
        if self.degree is not None:
            payload["degree"] = self.degree
        if self.candidates:
            payload["candidates"] = [c.to_triples() for c in self.candidates]
        return payload

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Preset":
        return cls(
            name=str(data.get("name", "")),
            points=PointConfig.from_dict(data),
            degree=data.get("degree"),
            candidates=[BivarPoly.from_json(c) for c in data.get("candidates", [])],
        )


def _builtin(name: str, points: List[Any], degree: int, candidates: Optional[List[BivarPoly]] = None) -> Preset:
    return Preset(name=name, points=PointConfig.of(points), degree=degree, candidates=candidates or [])


BUILTIN_PRESETS: Dict[str, Preset] = {
    preset.name: preset
    for preset in (
        _builtin("triangle-center", _TRIANGLE + [("1/3", "1/3")], 3),
        _builtin("rhombus", _TRIANGLE + [(1, 1)], 3),
        _builtin("diagonal-2", _TRIANGLE + [(2, 2)], 3),
        _builtin("collinear-4", [(0, 0), (1, 0), (2, 0), (3, 0)], 3),
        _builtin("trapezoid-1", _TRIANGLE + [(1, 2)], 3),
        _builtin("grid-2x2", [(x, y) for x in (0, 1) for y in (0, 1)], 3),
        _builtin("grid-3x3", [(x, y) for x in (0, 1, 2) for y in (0, 1, 2)], 4),
        _builtin("grid-six", list(GRID_SIX), 4, [grid_lines()]),
        _builtin("conic-six", list(CONIC_SIX), 4, [BivarPoly({(2, 0): 1, (0, 2): 1, (0, 0): -25})]),
        Preset(
            name="parallel-3-2",
            points=parallel_lines_base(3, 5),
            degree=4,
            candidates=[structural_factor(3)],
        ),
        _builtin("generic-7", _TRIANGLE + [(1, 1), (2, 0), (0, 2), (2, 2)], 4),
    )
}


class PresetLibrary:
    def __init__(self, presets_dir: Optional[Path] = None) -> None:
        if presets_dir is None:
            presets_dir = Path.home() / ".critpoint" / DEFAULT_PRESET_DIRNAME
        self.presets_dir = presets_dir

    def _sanitize_name(self, name: str) -> str:
        cleaned = name.strip()
        if not cleaned:
            raise BadInput("Preset name cannot be empty")
        cleaned = INVALID_CHARS_RE.sub("_", cleaned)
        return cleaned

    def _preset_path(self, name: str) -> Path:
        sanitized = self._sanitize_name(name)
        return self.presets_dir / f"{sanitized}{PRESET_SUFFIX}"

    def save_preset(self, name: str, points: PointConfig, degree: Optional[int] = None) -> Path:
        self.presets_dir.mkdir(parents=True, exist_ok=True)
        path = self._preset_path(name)
        preset = Preset(name=name, points=points, degree=degree)
        path.write_text(json.dumps(preset.to_dict(), indent=2), encoding="utf-8")
        return path

    def load_preset(self, name: str) -> Preset:
        path = self._preset_path(name)
        if path.exists():
            try:
                raw = json.loads(path.read_text(encoding="utf-8"))
            except json.JSONDecodeError as exc:
                raise BadInput(f"Preset '{name}' is not valid JSON") from exc
            return Preset.from_dict(raw)
        if name in BUILTIN_PRESETS:
            return BUILTIN_PRESETS[name]
        raise BadInput(f"Preset '{name}' does not exist", available=", ".join(self.list_presets()))

    def delete_preset(self, name: str) -> None:
        path = self._preset_path(name)
        if path.exists():
            path.unlink()

    def list_presets(self) -> List[str]:
        names = set(BUILTIN_PRESETS)
        if self.presets_dir.exists():
            for file in sorted(self.presets_dir.glob(f"*{PRESET_SUFFIX}")):
                names.add(file.stem)
        return sorted(names)
