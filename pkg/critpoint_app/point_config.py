from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Iterable, Iterator, Sequence, Tuple

from .algebra.affine import AffineMap
from .algebra.field import Point, as_field, as_point, point_is_real, point_key, point_to_json
from .errors import BadInput, DuplicatePoint


@dataclass(frozen=True)
class PointConfig:
    """Unordered set of distinct points, stored in canonical sorted order."""

    points: Tuple[Point, ...] = ()

    def __post_init__(self) -> None:
        ordered = tuple(sorted((as_point(p) for p in self.points), key=point_key))
        for first, second in zip(ordered, ordered[1:]):
            if first == second:
                raise DuplicatePoint(
                    "configuration points must be pairwise distinct",
                    point=point_to_json(first),
                )
        object.__setattr__(self, "points", ordered)

    @classmethod
    def of(cls, points: Iterable[Sequence[Any]]) -> "PointConfig":
        return cls(tuple(as_point(p) for p in points))

    @classmethod
    def grid(cls, x_values: Iterable[Any], y_values: Iterable[Any]) -> "PointConfig":
        ys = [as_field(y) for y in y_values]
        return cls(tuple((as_field(x), y) for x in x_values for y in ys))

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __contains__(self, pt: Any) -> bool:
        return as_point(pt) in self.points

    @property
    def is_real(self) -> bool:
        return all(point_is_real(p) for p in self.points)

    def with_point(self, pt: Sequence[Any]) -> "PointConfig":
        return PointConfig(self.points + (as_point(pt),))

    def union(self, other: "PointConfig") -> "PointConfig":
        return PointConfig(self.points + tuple(p for p in other.points if p not in self.points))

    def without(self, pt: Sequence[Any]) -> "PointConfig":
        target = as_point(pt)
        return PointConfig(tuple(p for p in self.points if p != target))

    def transform(self, t: AffineMap) -> "PointConfig":
        return PointConfig(tuple(t.apply(p) for p in self.points))

    def scale(self, factor: Any) -> "PointConfig":
        s = as_field(factor)
        return PointConfig(tuple((s * x, s * y) for x, y in self.points))

    def to_dict(self) -> Dict[str, Any]:
        return {"points": [point_to_json(p) for p in self.points]}

    @classmethod
    def from_dict(cls, data: Any) -> "PointConfig":
        if isinstance(data, dict):
            raw = data.get("points")
        else:
            raw = data
        if not isinstance(raw, list):
            raise BadInput("configuration needs a 'points' list of [x, y] pairs")
        for entry in raw:
            if not isinstance(entry, (list, tuple)):
                raise BadInput(f"point must be an [x, y] pair, got {entry!r}")
        return cls(tuple(as_point(entry) for entry in raw))


def orientation(a: Point, b: Point, c: Point) -> Any:
    """Twice the signed area of the triangle abc."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def collinear(a: Point, b: Point, c: Point) -> bool:
    return orientation(a, b, c).is_zero
