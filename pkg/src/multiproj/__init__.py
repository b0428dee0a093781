"""Homogeneous spectra of polynomial rings graded by finitely generated abelian groups."""

from .charts import Chart, build_chart, chart_cone, degree_cone
from .cones import (
    Cone,
    HilbertBasis,
    cone_from_generators,
    cone_from_inequalities,
    dualize,
    hilbert_basis,
    intersect,
    is_face,
    is_simplicial,
    is_strongly_convex,
)
from .grading import (
    GradingGroup,
    Monomial,
    Multidegree,
    RingSpec,
    degree_of_monomial,
    kernel_lattice_of,
    parse_ring_spec,
)
from .intlin import LatticeBasis, SmithDecomposition, finite_index, kernel_lattice, rank, smith_normal_form
from .projmodel import (
    FanKind,
    PairVerdict,
    ProjModel,
    SeparationReport,
    Verdict,
    build_model,
    fan_check,
    pairwise_separation,
    separation_verdict,
)
from .relevance import (
    RelevantFamily,
    irrelevant_radical_generators,
    is_relevant_monomial,
    is_relevant_support,
    minimal_relevant_supports,
)
from .sections import binomial_relations, veronese_generators, zero_subring_generators

__version__ = "0.1.0"

__all__ = [
    "binomial_relations",
    "build_chart",
    "build_model",
    "Chart",
    "chart_cone",
    "Cone",
    "cone_from_generators",
    "cone_from_inequalities",
    "degree_cone",
    "degree_of_monomial",
    "dualize",
    "fan_check",
    "FanKind",
    "finite_index",
    "GradingGroup",
    "hilbert_basis",
    "HilbertBasis",
    "intersect",
    "irrelevant_radical_generators",
    "is_face",
    "is_relevant_monomial",
    "is_relevant_support",
    "is_simplicial",
    "is_strongly_convex",
    "kernel_lattice",
    "kernel_lattice_of",
    "LatticeBasis",
    "minimal_relevant_supports",
    "Monomial",
    "Multidegree",
    "PairVerdict",
    "pairwise_separation",
    "parse_ring_spec",
    "ProjModel",
    "rank",
    "RelevantFamily",
    "RingSpec",
    "separation_verdict",
    "SeparationReport",
    "smith_normal_form",
    "SmithDecomposition",
    "Verdict",
    "veronese_generators",
    "zero_subring_generators",
]
