from __future__ import annotations

from fractions import Fraction
from typing import Dict, List, Sequence, TypeVar

from .algebra.affine import AffineMap
from .algebra.field import FieldElem, Point, as_field
from .algebra.poly import BivarPoly, Monomial
from .errors import BadInput, SingularAffineMap
from .point_config import PointConfig

T = TypeVar("T")

LCG_MULTIPLIER = 6364136223846793005
LCG_INCREMENT = 1442695040888963407
LCG_MASK = (1 << 64) - 1

COORD_MIN = -10
COORD_MAX = 10


class Lcg64:
    """64-bit linear congruential generator; outputs the high 32 bits of the state."""

    def __init__(self, seed: int) -> None:
        self.state = seed & LCG_MASK

    def next_u32(self) -> int:
        self.state = (self.state * LCG_MULTIPLIER + LCG_INCREMENT) & LCG_MASK
        return self.state >> 32

    def randint(self, lo: int, hi: int) -> int:
        if hi < lo:
            raise BadInput(f"empty range [{lo}, {hi}]")
        return lo + self.next_u32() % (hi - lo + 1)

    def choice(self, items: Sequence[T]) -> T:
        if not items:
            raise BadInput("choice from an empty sequence")
        return items[self.randint(0, len(items) - 1)]

    def rational(self, lo: int, hi: int, max_denominator: int = 1) -> Fraction:
        den = self.randint(1, max_denominator)
        return Fraction(self.randint(lo * den, hi * den), den)


def trial_rng(seed: int, index: int) -> Lcg64:
    return Lcg64(seed ^ index)


def random_point(rng: Lcg64, lo: int = COORD_MIN, hi: int = COORD_MAX) -> Point:
    return (as_field(rng.randint(lo, hi)), as_field(rng.randint(lo, hi)))


def random_config(rng: Lcg64, n: int, lo: int = COORD_MIN, hi: int = COORD_MAX) -> PointConfig:
    """n distinct integer points, rejecting repeats."""
    if n > (hi - lo + 1) ** 2:
        raise BadInput(f"cannot draw {n} distinct points from a {hi - lo + 1}-wide grid")
    chosen: List[Point] = []
    while len(chosen) < n:
        pt = random_point(rng, lo, hi)
        if pt not in chosen:
            chosen.append(pt)
    return PointConfig(tuple(chosen))


def random_distinct_values(rng: Lcg64, n: int, lo: int = COORD_MIN, hi: int = COORD_MAX) -> List[FieldElem]:
    if n > hi - lo + 1:
        raise BadInput(f"cannot draw {n} distinct values from [{lo}, {hi}]")
    values: List[FieldElem] = []
    while len(values) < n:
        v = as_field(rng.randint(lo, hi))
        if v not in values:
            values.append(v)
    return values


def random_poly(
    rng: Lcg64,
    degree: int,
    lo: int = -5,
    hi: int = 5,
    constant_term: bool = True,
    max_denominator: int = 1,
) -> BivarPoly:
    terms: Dict[Monomial, Fraction] = {}
    for total in range(0 if constant_term else 1, degree + 1):
        for i in range(total, -1, -1):
            terms[(i, total - i)] = rng.rational(lo, hi, max_denominator)
    return BivarPoly(terms)


def random_affine(rng: Lcg64, lo: int = -5, hi: int = 5) -> AffineMap:
    while True:
        a, b, c, d, e, f = (rng.randint(lo, hi) for _ in range(6))
        try:
            return AffineMap.from_matrix(a, b, c, d, e, f)
        except SingularAffineMap:
            continue
