from __future__ import annotations

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence

from .algebra.field import FieldElem, Point, as_field, as_point
from .algebra.poly import BivarPoly
from .errors import BadInput
from .point_config import PointConfig

INPUT_SUFFIX = ".json"

log = logging.getLogger(__name__)


def read_json_file(path: str | Path) -> Any:
    file_path = Path(path)
    if not file_path.exists() or not file_path.is_file():
        raise BadInput(f"input file not found: {file_path}")
    try:
        return json.loads(file_path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise BadInput(f"{file_path} is not valid JSON: {exc.msg} at line {exc.lineno}") from exc


def read_json_text(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadInput(f"inline input is not valid JSON: {exc.msg}") from exc


@dataclass
class JobInput:
    """A decoded input document: {"degree": d, "points": [...], ...} or a bare point list."""

    data: Any
    origin: str = "<inline>"

    @property
    def _fields(self) -> Dict[str, Any]:
        return self.data if isinstance(self.data, dict) else {"points": self.data}

    def has(self, key: str) -> bool:
        return key in self._fields

    def degree(self) -> Optional[int]:
        raw = self._fields.get("degree")
        if raw is None:
            return None
        if isinstance(raw, bool) or not isinstance(raw, int):
            raise BadInput(f"degree in {self.origin} must be an integer, got {raw!r}")
        return raw

    def points(self) -> PointConfig:
        if "points" not in self._fields:
            raise BadInput(f"{self.origin} has no 'points' entry")
        return PointConfig.from_dict(self._fields)

    def optional_points(self) -> Optional[PointConfig]:
        return self.points() if "points" in self._fields else None

    def point(self, key: str = "point") -> Point:
        raw = self._fields.get(key)
        if not isinstance(raw, (list, tuple)):
            raise BadInput(f"{self.origin} needs '{key}' as an [x, y] pair")
        return as_point(raw)

    def poly(self, key: str) -> BivarPoly:
        if key not in self._fields:
            raise BadInput(f"{self.origin} has no polynomial '{key}'")
        return BivarPoly.from_json(self._fields[key])

    def optional_poly(self, key: str) -> Optional[BivarPoly]:
        return self.poly(key) if key in self._fields else None

    def polys(self, key: str) -> List[BivarPoly]:
        raw = self._fields.get(key, [])
        if not isinstance(raw, list):
            raise BadInput(f"'{key}' in {self.origin} must be a list of polynomials")
        return [BivarPoly.from_json(entry) for entry in raw]

    def scalar(self, key: str, default: Any = None) -> Optional[FieldElem]:
        raw = self._fields.get(key, default)
        return None if raw is None else as_field(raw)

    def matrix(self, key: str = "m") -> Optional[Sequence[Sequence[FieldElem]]]:
        raw = self._fields.get(key)
        if raw is None:
            return None
        if not isinstance(raw, list) or len(raw) != 2 or any(not isinstance(r, list) or len(r) != 2 for r in raw):
            raise BadInput(f"'{key}' in {self.origin} must be a 2x2 matrix")
        return [[as_field(v) for v in row] for row in raw]


def load_input(input_path: Optional[str] = None, input_text: Optional[str] = None) -> JobInput:
    if input_path is not None:
        log.debug("reading input from %s", input_path)
        return JobInput(read_json_file(input_path), origin=input_path)
    if input_text is not None:
        return JobInput(read_json_text(input_text))
    raise BadInput("no input given; use --points @file.json, inline JSON or --preset")


def save_input(path: str | Path, points: PointConfig, degree: Optional[int] = None) -> Path:
    file_path = Path(path)
    if file_path.suffix.lower() != INPUT_SUFFIX:
        file_path = file_path.with_suffix(INPUT_SUFFIX)
    payload: Dict[str, Any] = {}
    if degree is not None:
        payload["degree"] = degree
    payload.update(points.to_dict())
    file_path.parent.mkdir(parents=True, exist_ok=True)
    file_path.write_text(json.dumps(payload, indent=2), encoding="utf-8")
    return file_path
