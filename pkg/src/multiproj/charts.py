"""Affine charts ``D+(T^J)`` of the homogeneous spectrum, keyed by support.

For a relevant support ``J`` the coordinate ring of the chart is the monoid
algebra of ``M_J = {m in M : m_i >= 0 for i not in J}``; it only depends on
the support, not on the exponents of the chosen monomial.

Coordinates: ``M`` is identified with ``Z^r`` through its Hermite basis (the
columns of ``B``), and ``N = Hom(M, Z)`` with ``Z^r`` through the dual
basis. The projection ``pr_i`` restricted to ``M`` is then row ``i`` of
``B``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cones import DEFAULT_HILBERT_CEILING, Cone, HilbertBasis, cone_from_generators, hilbert_basis
from .errors import IrrelevantSupportError
from .grading import RingSpec, kernel_lattice_of, render_monomial
from .intlin import LatticeBasis, Vector, matvec
from .relevance import Support, is_relevant_support, make_support, support_names, support_rank


def projections(M: LatticeBasis) -> tuple[Vector, ...]:
    """``pr_i`` restricted to ``M``, in dual-basis coordinates (one per variable)."""
    return M.matrix


@dataclass(frozen=True)
class Chart:
    support: Support
    monoid_inequalities: tuple[Vector, ...]
    generators: HilbertBasis  # in M-coordinates
    exponents: tuple[Vector, ...]  # the same generators as vectors in Z^k
    fan_cone: Cone
    degree_cone: Cone

    def laurent_monomials(self, spec: RingSpec) -> list[str]:
        return [render_monomial(spec, e) for e in self.exponents]


def chart_cone(spec: RingSpec, J: Sequence[int], M: LatticeBasis | None = None) -> Cone:
    """Cone in ``N_R`` spanned by ``pr_i|M`` for ``i`` outside ``J``."""
    M = M or kernel_lattice_of(spec)
    J = set(J)
    pr = projections(M)
    return cone_from_generators(M.rank, [pr[i] for i in range(spec.k) if i not in J])


def degree_cone(spec: RingSpec, J: Sequence[int]) -> Cone:
    """Cone in ``R^s`` spanned by the free parts of the degrees in ``J``."""
    if not J and spec.s > 0:
        raise ValueError("degree cone of the empty support needs s == 0")
    return cone_from_generators(spec.s, [spec.degrees[i].free for i in J])


def build_chart(
    spec: RingSpec,
    J: Sequence[int],
    M: LatticeBasis | None = None,
    ceiling: int = DEFAULT_HILBERT_CEILING,
) -> Chart:
    """Compute the chart of a relevant support.

    Raises:
      IrrelevantSupportError: ``J`` is not relevant; the message states the
        rank deficit.
    """
    J = make_support(J)
    if not is_relevant_support(spec, J):
        names = ",".join(support_names(spec, J)) or "{}"
        raise IrrelevantSupportError(
            f"support not relevant: degree rank {support_rank(spec, J)} < {spec.s}"
            f" for support {names}"
        )
    M = M or kernel_lattice_of(spec)
    pr = projections(M)
    ineqs = tuple(pr[i] for i in range(spec.k) if i not in J)
    hb = hilbert_basis(M.rank, ineqs, ceiling=ceiling)
    B = M.matrix
    exps = tuple(matvec(B, x) if M.rank else (0,) * spec.k for x in hb.elements)
    return Chart(
        support=J,
        monoid_inequalities=ineqs,
        generators=hb,
        exponents=exps,
        fan_cone=chart_cone(spec, J, M),
        degree_cone=degree_cone(spec, J),
    )
