from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Iterable, List, Sequence

from .algebra.field import ZERO, FieldElem, Point
from .algebra.matrix import QMatrix, rank, rank_and_nullspace
from .algebra.poly import BivarPoly, Monomial, column_monomials, evaluate, gradient, poly_from_vector
from .errors import BadDegree, BadInput, InvariantViolation
from .point_config import PointConfig
from .sampling import random_config, trial_rng

log = logging.getLogger(__name__)


class ConfigTag(str, Enum):
    FORBIDDEN = "Forbidden"
    ESSENTIALLY_DETERMINED = "EssentiallyDetermined"
    NON_ESSENTIAL = "NonEssential"


def ambient_dimension(d: int) -> int:
    if d < 1:
        raise BadDegree(f"degree must be at least 1, got {d}", degree=d)
    return (d * d + 3 * d) // 2


def delta(d: int) -> int:
    if d < 3:
        raise BadDegree(f"degree must be at least 3, got {d}", degree=d)
    if ambient_dimension(d) % 2:
        return (d * d + 3 * d - 2) // 4
    return (d * d + 3 * d) // 4


def parity(d: int) -> str:
    return "odd" if ambient_dimension(d) % 2 else "even"


def expected_proj_dim(d: int, n: int) -> int:
    """Projective dimension when n points impose independent conditions."""
    return max(ambient_dimension(d) - 1 - 2 * n, -1)


def delta_table(degrees: Iterable[int]) -> List[Dict[str, Any]]:
    rows = []
    for d in degrees:
        points = delta(d)
        rows.append(
            {
                "degree": d,
                "delta": points,
                "columns": ambient_dimension(d),
                "rows": 2 * points,
                "parity": parity(d),
            }
        )
    return rows


def phi_rows(d: int, pt: Point) -> List[List[FieldElem]]:
    """The f_x row and the f_y row imposed by a single point."""
    x, y = pt
    fx_row: List[FieldElem] = []
    fy_row: List[FieldElem] = []
    for i, j in column_monomials(d):
        fx_row.append(x ** (i - 1) * y ** j * i if i else ZERO)
        fy_row.append(x ** i * y ** (j - 1) * j if j else ZERO)
    return [fx_row, fy_row]


def build_phi(d: int, p: PointConfig) -> QMatrix:
    if d < 3:
        raise BadDegree(f"degree must be at least 3, got {d}", degree=d)
    rows: List[List[FieldElem]] = []
    for pt in p.points:
        rows.extend(phi_rows(d, pt))
    return QMatrix.from_rows(rows, cols=ambient_dimension(d))


@dataclass
class LinSysResult:
    degree: int
    proj_dim: int
    phi_rank: int
    basis: List[BivarPoly] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.proj_dim != len(self.basis) - 1:
            raise InvariantViolation("projective dimension does not match the basis size")

    def to_dict(self) -> Dict[str, Any]:
        return {
            "proj_dim": self.proj_dim,
            "rank": self.phi_rank,
            "basis": [f.to_triples() for f in self.basis],
        }


@dataclass
class ConfigClass:
    tag: ConfigTag
    detail: LinSysResult

    def to_dict(self) -> Dict[str, Any]:
        payload = {"class": self.tag.value}
        payload.update(self.detail.to_dict())
        return payload


def solve_linear_system(d: int, p: PointConfig) -> LinSysResult:
    phi = build_phi(d, p)
    phi_rank, nullspace = rank_and_nullspace(phi)
    basis = [poly_from_vector(v, d) for v in nullspace]
    log.debug("L_%d of %d points: rank %d, nullity %d", d, len(p), phi_rank, len(basis))
    return LinSysResult(degree=d, proj_dim=len(basis) - 1, phi_rank=phi_rank, basis=basis)


def tag_for(proj_dim: int) -> ConfigTag:
    if proj_dim < 0:
        return ConfigTag.FORBIDDEN
    if proj_dim == 0:
        return ConfigTag.ESSENTIALLY_DETERMINED
    return ConfigTag.NON_ESSENTIAL


def classify_configuration(d: int, p: PointConfig) -> ConfigClass:
    result = solve_linear_system(d, p)
    return ConfigClass(tag=tag_for(result.proj_dim), detail=result)


def verify_containment(f: BivarPoly, p: PointConfig) -> bool:
    fx, fy = gradient(f)
    return all(evaluate(fx, pt).is_zero and evaluate(fy, pt).is_zero for pt in p.points)


def _coefficient_matrix(polys: Sequence[BivarPoly], monomials: Sequence[Monomial]) -> QMatrix:
    return QMatrix.from_rows([[f.coefficient(i, j) for i, j in monomials] for f in polys], cols=len(monomials))


def span_rank(polys: Sequence[BivarPoly]) -> int:
    monomials = sorted({m for f in polys for m in f.terms})
    if not polys or not monomials:
        return 0
    return rank(_coefficient_matrix(polys, monomials))


def same_span(a: Sequence[BivarPoly], b: Sequence[BivarPoly]) -> bool:
    """Span equality by rank: rank(a) == rank(b) == rank(a + b)."""
    ra = span_rank(a)
    return ra == span_rank(b) == span_rank(list(a) + list(b))


@dataclass
class DichotomySummary:
    degree: int
    trials: int
    seed: int
    points_per_trial: int
    forbidden: int = 0
    essentially_determined: int = 0
    non_essential: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "degree": self.degree,
            "trials": self.trials,
            "seed": self.seed,
            "points": self.points_per_trial,
            "parity": parity(self.degree),
            "forbidden": self.forbidden,
            "ed": self.essentially_determined,
            "ned": self.non_essential,
        }


def _trial_tag(d: int, seed: int, index: int, n: int) -> ConfigTag:
    config = random_config(trial_rng(seed, index), n)
    return classify_configuration(d, config).tag


def dichotomy_experiment(d: int, trials: int, seed: int, workers: int = 1) -> DichotomySummary:
    n = delta(d)
    if trials < 1:
        raise BadInput(f"trials must be at least 1, got {trials}")
    indices = range(trials)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            tags = list(pool.map(lambda index: _trial_tag(d, seed, index, n), indices))
    else:
        tags = [_trial_tag(d, seed, index, n) for index in indices]
    summary = DichotomySummary(degree=d, trials=trials, seed=seed, points_per_trial=n)
    for tag in tags:
        if tag is ConfigTag.FORBIDDEN:
            summary.forbidden += 1
        elif tag is ConfigTag.ESSENTIALLY_DETERMINED:
            summary.essentially_determined += 1
        else:
            summary.non_essential += 1
    if parity(d) == "odd" and summary.forbidden:
        raise InvariantViolation(f"odd ambient dimension but {summary.forbidden} forbidden samples at d={d}")
    log.info(
        "dichotomy d=%d trials=%d seed=%d: forbidden=%d ed=%d ned=%d",
        d,
        trials,
        seed,
        summary.forbidden,
        summary.essentially_determined,
        summary.non_essential,
    )
    return summary
