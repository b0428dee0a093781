"""The homogeneous spectrum as a (possibly nonseparated) toric model.

Separation is reported three-valued. The cone-interior test on degree cones
can only certify separatedness of a pair of charts; the fan check can only
refute it. When neither fires the honest answer is ``UNKNOWN``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

from .charts import Chart, build_chart, chart_cone, degree_cone
from .cones import DEFAULT_HILBERT_CEILING, Cone, intersect, is_face
from .errors import InternalInconsistencyError
from .grading import RingSpec, kernel_lattice_of
from .relevance import DEFAULT_MAX_VARS, RelevantFamily, Support, minimal_relevant_supports

PROPERNESS_NOTE = (
    "Proj(S) -> Spec(S_0) is universally closed and of finite type for noetherian S "
    "(static statement, not computed)"
)


class PairVerdict(enum.Enum):
    CERTIFIED = "Certified"
    INCONCLUSIVE = "Inconclusive"


class FanKind(enum.Enum):
    IS_FAN = "IsFan"
    DUPLICATE_CONE = "DuplicateCone"
    BAD_INTERSECTION = "BadIntersection"


class Verdict(enum.Enum):
    SEPARATED = "Separated"
    NOT_SEPARATED = "NotSeparated"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class FanVerdict:
    kind: FanKind
    pair: tuple[Support, Support] | None = None


@dataclass(frozen=True)
class ProjModel:
    spec: RingSpec
    minimal_supports: RelevantFamily
    charts: tuple[Chart, ...]
    torus_dim: int

    @property
    def fan_cones(self) -> tuple[Cone, ...]:
        return tuple(c.fan_cone for c in self.charts)


@dataclass(frozen=True)
class SeparationReport:
    supports: tuple[Support, ...]
    pairwise: tuple[tuple[PairVerdict, ...], ...]
    fan_verdict: FanVerdict
    overall: Verdict


def build_model(
    spec: RingSpec,
    max_vars: int = DEFAULT_MAX_VARS,
    ceiling: int = DEFAULT_HILBERT_CEILING,
) -> ProjModel:
    fam = minimal_relevant_supports(spec, max_vars)
    M = kernel_lattice_of(spec)
    charts = tuple(build_chart(spec, J, M, ceiling) for J in fam.minimal_supports)
    return ProjModel(spec, fam, charts, M.rank)


def pairwise_separation(spec: RingSpec, J1: Support, J2: Support) -> PairVerdict:
    """Certify a pair of charts when their degree cones meet in a full-dimensional cone."""
    both = intersect(degree_cone(spec, J1), degree_cone(spec, J2))
    return PairVerdict.CERTIFIED if both.dim == spec.s else PairVerdict.INCONCLUSIVE


def fan_check(model: ProjModel) -> FanVerdict:
    """Check that the chart cones glue like the cones of a fan.

    Two charts are glued along the chart of the union of their supports, so
    the gluing is separated only if the two cones meet exactly in the cone
    of that union (which is a common face of both). Equal cones for distinct
    supports are reported first, as ``DUPLICATE_CONE``.
    """
    spec = model.spec
    charts = model.charts
    for a, b in itertools.combinations(charts, 2):
        if a.fan_cone == b.fan_cone:
            return FanVerdict(FanKind.DUPLICATE_CONE, (a.support, b.support))
    M = kernel_lattice_of(spec)
    for a, b in itertools.combinations(charts, 2):
        meet = intersect(a.fan_cone, b.fan_cone)
        glue = chart_cone(spec, tuple(sorted(set(a.support) | set(b.support))), M)
        if meet != glue or not (is_face(meet, a.fan_cone) and is_face(meet, b.fan_cone)):
            return FanVerdict(FanKind.BAD_INTERSECTION, (a.support, b.support))
    return FanVerdict(FanKind.IS_FAN)


def separation_verdict(model: ProjModel) -> SeparationReport:
    supports = tuple(c.support for c in model.charts)
    pairwise = tuple(
        tuple(pairwise_separation(model.spec, J1, J2) for J2 in supports) for J1 in supports
    )
    fan = fan_check(model)
    certified = all(v is PairVerdict.CERTIFIED for row in pairwise for v in row)
    refuted = fan.kind is not FanKind.IS_FAN
    if certified and refuted:
        raise InternalInconsistencyError(
            f"all chart pairs certified separated but fan check reports {fan.kind.value}"
            f" for {fan.pair}"
        )
    if certified:
        overall = Verdict.SEPARATED
    elif refuted:
        overall = Verdict.NOT_SEPARATED
    else:
        overall = Verdict.UNKNOWN
    return SeparationReport(supports, pairwise, fan, overall)
