"""Relevant monomials, minimal relevant supports and the irrelevant ideal.

A monomial is relevant exactly when the free parts of the degrees of the
variables in its support span ``Q^s``; torsion never matters because a
subgroup of ``D`` has finite index iff its image spans ``D (x) Q``. Only
monomials are decided here: a general polynomial would need factorization.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import ResourceLimitError
from .grading import Monomial, RingSpec
from .intlin import finite_index, rank

#: Default upper bound on the number of variables for support enumeration.
DEFAULT_MAX_VARS = 24

Support = tuple[int, ...]


def make_support(indices: Iterable[int]) -> Support:
    return tuple(sorted(set(indices)))


def support_names(spec: RingSpec, J: Sequence[int]) -> tuple[str, ...]:
    return tuple(spec.variables[i] for i in J)


def parse_support(spec: RingSpec, text: str) -> Support:
    """Turn ``"X1,Z"`` into a support using the spec's variable names."""
    names = [t.strip() for t in text.split(",") if t.strip()]
    return make_support(spec.index_of(n) for n in names)


def support_rank(spec: RingSpec, J: Sequence[int]) -> int:
    return rank([spec.degrees[i].free for i in J])


def is_relevant_support(spec: RingSpec, J: Sequence[int]) -> bool:
    for i in J:
        if not 0 <= i < spec.k:
            raise IndexError(f"variable index {i} out of range")
    return finite_index([spec.degrees[i].free for i in J], spec.s)


def is_relevant_monomial(spec: RingSpec, m: Monomial) -> bool:
    if len(m.exponents) != spec.k:
        raise ValueError(f"monomial has {len(m.exponents)} exponents, expected {spec.k}")
    return is_relevant_support(spec, m.support)


@dataclass(frozen=True)
class RelevantFamily:
    minimal_supports: tuple[Support, ...]
    max_vars: int


def minimal_relevant_supports(spec: RingSpec, max_vars: int = DEFAULT_MAX_VARS) -> RelevantFamily:
    """All inclusion-minimal relevant supports, sorted lexicographically.

    Subsets are grown level by level (by cardinality). A branch is dropped as
    soon as it contains a dependent degree, since any such set contains a
    smaller relevant one or is not relevant at all, and as soon as the
    remaining variables cannot lift its rank to ``s``. Every minimal relevant
    support therefore has exactly ``s`` elements with independent degrees.
    """
    k, s = spec.k, spec.s
    if k > max_vars:
        raise ResourceLimitError(
            f"{k} variables exceed the enumeration cap of {max_vars}"
        )
    if s == 0:
        return RelevantFamily(((),), max_vars)
    vecs = [d.free for d in spec.degrees]
    if rank(vecs) < s:
        return RelevantFamily((), max_vars)

    # Rank achievable from variables i.. onward; prunes hopeless prefixes.
    tail_rank = [rank(vecs[i:]) for i in range(k)] + [0]
    level: list[Support] = [()]
    for size in range(s):
        nxt = []
        for J in level:
            start = J[-1] + 1 if J else 0
            for i in range(start, k):
                if size + 1 + min(tail_rank[i + 1], s - size - 1) < s:
                    break
                cand = J + (i,)
                if rank([vecs[j] for j in cand]) == len(cand):
                    nxt.append(cand)
        level = nxt
    return RelevantFamily(tuple(sorted(level)), max_vars)


def irrelevant_radical_generators(
    spec: RingSpec, max_vars: int = DEFAULT_MAX_VARS
) -> list[Monomial]:
    """Squarefree monomials, one per minimal relevant support.

    They generate the radical of the ideal spanned by all relevant
    monomials. Whether that equals the radical of the full irrelevant ideal
    (which also counts non-monomial relevant elements) is not decided here.
    """
    fam = minimal_relevant_supports(spec, max_vars)
    return [
        Monomial(tuple(int(i in J) for i in range(spec.k))) for J in fam.minimal_supports
    ]
