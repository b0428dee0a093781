"""Degree-zero subrings, Veronese generators and small binomial relations.

All three are statements about affine monoids of exponent vectors, so they
are computed without touching coefficients. Relations are found by brute
force over a bounded L1 ball, which is only sensible at desk scale.
"""

from __future__ import annotations

from math import comb
from typing import Sequence

from .cones import DEFAULT_HILBERT_CEILING, HilbertBasis, hilbert_basis
from .errors import ResourceLimitError, TorsionUnsupportedError
from .grading import RingSpec, kernel_lattice_of
from .intlin import content, dot, identity

#: Maximal number of candidate vectors examined by :func:`binomial_relations`.
DEFAULT_RELATION_CEILING = 5_000_000


def zero_subring_generators(
    spec: RingSpec, ceiling: int = DEFAULT_HILBERT_CEILING
) -> HilbertBasis:
    """Hilbert basis of ``{v in N^k : deg(v) = 0}`` (torsion included).

    This is the monomial generating set of ``S_0``. Identifying ``S_0`` with
    global sections of a vector bundle needs the usual geometric hypotheses
    (normal base, positive dimension); the computation does not.
    """
    M = kernel_lattice_of(spec)
    return hilbert_basis(spec.k, identity(spec.k), lattice=M, ceiling=ceiling)


def veronese_generators(
    spec: RingSpec,
    forms: Sequence[Sequence[int]],
    ceiling: int = DEFAULT_HILBERT_CEILING,
) -> HilbertBasis:
    """Generators of the Veronese subring for ``{d : psi(d) >= 0 for psi in forms}``.

    Args:
      spec: a torsion-free grading.
      forms: integer linear forms on ``Z^s``.

    Raises:
      TorsionUnsupportedError: the grading has torsion; linear forms cannot
        see it, so the answer would silently be wrong.
    """
    if spec.grading.torsion_orders:
        raise TorsionUnsupportedError("Veronese generators need a torsion-free grading")
    for f in forms:
        if len(f) != spec.s:
            raise ValueError(f"form {tuple(f)} does not have length {spec.s}")
    A = spec.free_matrix
    ineqs = [tuple(r) for r in identity(spec.k)]
    for f in forms:
        ineqs.append(tuple(sum(f[j] * A[j][i] for j in range(spec.s)) for i in range(spec.k)))
    return hilbert_basis(spec.k, ineqs, ceiling=ceiling)


def _l1_ball_size(n: int, bound: int) -> int:
    return sum(comb(n, j) * comb(bound, j) * 2**j for j in range(min(n, bound) + 1))


def binomial_relations(
    basis: HilbertBasis,
    degree_bound: int,
    ceiling: int = DEFAULT_RELATION_CEILING,
) -> list[tuple[int, ...]]:
    """Primitive integer relations among the basis elements with small L1 norm.

    Each returned ``u`` satisfies ``sum u_i g_i = 0`` and encodes the
    binomial ``prod g_i^(u_i+) = prod g_i^(u_i-)``. Only one of ``u, -u`` is
    reported (first nonzero entry positive); output is sorted descending.
    """
    if degree_bound < 1:
        raise ValueError("degree_bound must be at least 1")
    gens = basis.elements
    g = len(gens)
    if g == 0:
        return []
    if _l1_ball_size(g, degree_bound) > ceiling:
        raise ResourceLimitError(
            f"relation search over {g} generators with bound {degree_bound} exceeds ceiling"
        )
    cols = [tuple(v) for v in gens]
    n = basis.ambient_dim
    found: list[tuple[int, ...]] = []
    u = [0] * g
    acc = [0] * n

    def rec(i: int, budget: int, started: bool):
        if i == g or budget == 0:
            if started and not any(acc) and content(u) == 1:
                found.append(tuple(u))
            return
        rec(i + 1, budget, started)
        col = cols[i]
        for c in range(1, budget + 1):
            for sgn in ((1,) if not started else (1, -1)):
                val = sgn * c
                u[i] = val
                for j in range(n):
                    acc[j] += val * col[j]
                rec(i + 1, budget - c, True)
                for j in range(n):
                    acc[j] -= val * col[j]
        u[i] = 0

    rec(0, degree_bound, False)
    found.sort(reverse=True)
    return found


def relation_holds(basis: HilbertBasis, u: Sequence[int]) -> bool:
    """Check a relation combinatorially: both sides expand to the same exponents."""
    n = basis.ambient_dim
    lhs = [0] * n
    rhs = [0] * n
    for ui, gvec in zip(u, basis.elements):
        side = lhs if ui > 0 else rhs
        for j in range(n):
            side[j] += abs(ui) * gvec[j]
    return lhs == rhs and dot(u, u) > 0
