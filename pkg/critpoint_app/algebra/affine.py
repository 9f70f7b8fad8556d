from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, Sequence, Tuple

from ..errors import DegenerateQuadrilateral, SingularAffineMap
from .field import ONE, ZERO, FieldElem, Point, as_field, as_point

Linear = Tuple[Tuple[FieldElem, FieldElem], Tuple[FieldElem, FieldElem]]


@dataclass(frozen=True)
class AffineMap:
    """(x, y) -> linear * (x, y) + translation, with an invertible linear part."""

    linear: Linear
    translation: Point = (ZERO, ZERO)

    def __post_init__(self) -> None:
        (a, b), (c, d) = self.linear
        linear = ((as_field(a), as_field(b)), (as_field(c), as_field(d)))
        object.__setattr__(self, "linear", linear)
        object.__setattr__(self, "translation", as_point(self.translation))
        if self.determinant.is_zero:
            raise SingularAffineMap("affine map has a singular linear part", linear=linear)

    @classmethod
    def identity(cls) -> "AffineMap":
        return cls(((ONE, ZERO), (ZERO, ONE)))

    @classmethod
    def from_matrix(cls, a: Any, b: Any, c: Any, d: Any, e: Any = 0, f: Any = 0) -> "AffineMap":
        return cls(((as_field(a), as_field(b)), (as_field(c), as_field(d))), (as_field(e), as_field(f)))

    @classmethod
    def from_standard_triangle(cls, pa: Point, pb: Point, pc: Point) -> "AffineMap":
        """The map sending (0,0), (1,0), (0,1) to pa, pb, pc."""
        ux, uy = pb[0] - pa[0], pb[1] - pa[1]
        vx, vy = pc[0] - pa[0], pc[1] - pa[1]
        if (ux * vy - uy * vx).is_zero:
            raise DegenerateQuadrilateral("triangle vertices are collinear", vertices=(pa, pb, pc))
        return cls(((ux, vx), (uy, vy)), pa)

    @classmethod
    def normalizing(cls, pa: Point, pb: Point, pc: Point) -> "AffineMap":
        """The map sending pa, pb, pc to (0,0), (1,0), (0,1)."""
        return cls.from_standard_triangle(pa, pb, pc).inverse()

    @property
    def determinant(self) -> FieldElem:
        (a, b), (c, d) = self.linear
        return a * d - b * c

    def apply(self, pt: Sequence[Any]) -> Point:
        x, y = as_point(pt)
        (a, b), (c, d) = self.linear
        e, f = self.translation
        return (a * x + b * y + e, c * x + d * y + f)

    __call__ = apply

    def compose(self, other: "AffineMap") -> "AffineMap":
        """self after other."""
        (a, b), (c, d) = self.linear
        (p, q), (r, s) = other.linear
        e, f = self.translation
        g, h = other.translation
        linear = ((a * p + b * r, a * q + b * s), (c * p + d * r, c * q + d * s))
        return AffineMap(linear, (a * g + b * h + e, c * g + d * h + f))

    def inverse(self) -> "AffineMap":
        (a, b), (c, d) = self.linear
        e, f = self.translation
        det = self.determinant
        ia, ib, ic, id_ = d / det, -b / det, -c / det, a / det
        return AffineMap(((ia, ib), (ic, id_)), (-(ia * e + ib * f), -(ic * e + id_ * f)))

    def to_dict(self) -> Dict[str, Any]:
        return {
            "linear": [[entry.to_json() for entry in row] for row in self.linear],
            "translation": [coord.to_json() for coord in self.translation],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "AffineMap":
        rows = data["linear"]
        return cls(
            ((as_field(rows[0][0]), as_field(rows[0][1])), (as_field(rows[1][0]), as_field(rows[1][1]))),
            as_point(data.get("translation", (0, 0))),
        )
