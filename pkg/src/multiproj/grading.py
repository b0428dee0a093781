"""Polynomial rings graded by a finitely generated abelian group.

The grading group is ``D = Z^s + Z/m_1 + ... + Z/m_t``. A ring spec assigns
one degree in ``D`` to every variable, which determines the degree map
``Z^k -> D`` and its kernel lattice ``M``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Sequence

from .errors import (
    DimensionMismatchError,
    DuplicateVariableError,
    MalformedSpecError,
    TorsionOrderError,
)
from .intlin import LatticeBasis, Matrix, Vector, kernel_lattice, transpose


@dataclass(frozen=True)
class GradingGroup:
    free_rank: int
    torsion_orders: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0:
            raise DimensionMismatchError("free_rank must be nonnegative")
        for m in self.torsion_orders:
            if m < 2:
                raise TorsionOrderError(f"torsion order {m} < 2")

    def __str__(self) -> str:
        parts = [f"Z^{self.free_rank}"] if self.free_rank else []
        parts += [f"Z/{m}" for m in self.torsion_orders]
        return " + ".join(parts) or "0"


@dataclass(frozen=True)
class Multidegree:
    free: Vector
    torsion: Vector = ()

    def __str__(self) -> str:
        text = "(" + ",".join(map(str, self.free)) + ")"
        if self.torsion:
            text += "[" + ",".join(map(str, self.torsion)) + "]"
        return text


@dataclass(frozen=True)
class Monomial:
    exponents: Vector

    def __post_init__(self):
        if any(e < 0 for e in self.exponents):
            raise ValueError("monomial exponents must be nonnegative")

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e > 0)

    def __mul__(self, other: "Monomial") -> "Monomial":
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))


@dataclass(frozen=True)
class RingSpec:
    """A polynomial ring ``R[T_1..T_k]`` with one degree per variable.

    The coefficient label is for display only; nothing computed here depends
    on it.
    """

    variables: tuple[str, ...]
    degrees: tuple[Multidegree, ...]
    grading: GradingGroup
    coefficient_label: str = field(default="Q")

    def __post_init__(self):
        if not self.variables:
            raise DimensionMismatchError("at least one variable is required")
        if len(self.degrees) != len(self.variables):
            raise DimensionMismatchError(
                f"{len(self.variables)} variables but {len(self.degrees)} degrees"
            )
        seen = set()
        for name in self.variables:
            if not isinstance(name, str) or not name:
                raise MalformedSpecError("variable names must be nonempty strings")
            if name in seen:
                raise DuplicateVariableError(f"duplicate variable name {name!r}")
            seen.add(name)
        s, tor = self.grading.free_rank, self.grading.torsion_orders
        for name, d in zip(self.variables, self.degrees):
            if len(d.free) != s:
                raise DimensionMismatchError(
                    f"degree of {name} has {len(d.free)} free entries, expected {s}"
                )
            if len(d.torsion) != len(tor):
                raise DimensionMismatchError(
                    f"degree of {name} has {len(d.torsion)} torsion entries, expected {len(tor)}"
                )
            if any(not 0 <= r < m for r, m in zip(d.torsion, tor)):
                raise ValueError("torsion residues must be reduced")

    @classmethod
    def from_degrees(
        cls,
        variables: Sequence[str],
        free_degrees: Sequence[Sequence[int]],
        torsion_orders: Sequence[int] = (),
        torsion_degrees: Sequence[Sequence[int]] | None = None,
        coefficient_label: str = "Q",
        free_rank: int | None = None,
    ) -> "RingSpec":
        """Build a spec, reducing torsion residues.

        ``free_rank`` only needs to be given when it cannot be read off the
        degrees (i.e. there are none).
        """
        if free_rank is None:
            free_rank = len(free_degrees[0]) if free_degrees else 0
        group = GradingGroup(free_rank, tuple(torsion_orders))
        if torsion_degrees is None:
            torsion_degrees = [()] * len(free_degrees) if not torsion_orders else None
        if torsion_degrees is None:
            raise DimensionMismatchError("torsion degrees are required")
        if len(torsion_degrees) != len(free_degrees):
            raise DimensionMismatchError("free and torsion degree lists differ in length")
        degs = []
        for fr, tr in zip(free_degrees, torsion_degrees):
            if len(tr) != len(group.torsion_orders):
                raise DimensionMismatchError(
                    f"torsion part {tuple(tr)} does not match {len(group.torsion_orders)} orders"
                )
            degs.append(
                Multidegree(
                    tuple(int(x) for x in fr),
                    tuple(int(r) % m for r, m in zip(tr, group.torsion_orders)),
                )
            )
        return cls(tuple(variables), tuple(degs), group, coefficient_label)

    @property
    def k(self) -> int:
        return len(self.variables)

    @property
    def s(self) -> int:
        return self.grading.free_rank

    @property
    def free_matrix(self) -> Matrix:
        """The ``s x k`` matrix whose columns are the free parts of the degrees."""
        return transpose([d.free for d in self.degrees], self.s)

    @property
    def torsion_matrix(self) -> Matrix:
        return transpose([d.torsion for d in self.degrees], len(self.grading.torsion_orders))

    def index_of(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def to_document(self) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "variables": list(self.variables),
            "grading": {
                "free_rank": self.s,
                "torsion": list(self.grading.torsion_orders),
            },
            "degrees": [],
            "coefficients": self.coefficient_label,
        }
        for d in self.degrees:
            entry: dict[str, Any] = {"free": list(d.free)}
            if self.grading.torsion_orders:
                entry["torsion"] = list(d.torsion)
            doc["degrees"].append(entry)
        return doc


_TOP_KEYS = {"variables", "grading", "degrees", "coefficients"}
_GRADING_KEYS = {"free_rank", "torsion"}
_DEGREE_KEYS = {"free", "torsion"}


def _int_list(value: Any, what: str) -> list[int]:
    if not isinstance(value, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in value
    ):
        raise MalformedSpecError(f"{what} must be a list of integers")
    return value


def parse_ring_spec(text: str) -> RingSpec:
    """Parse a JSON ring-spec document.

    Example document::

        {"variables": ["X", "Y"],
         "grading": {"free_rank": 1, "torsion": []},
         "degrees": [{"free": [1]}, {"free": [-1]}],
         "coefficients": "Q"}

    Raises:
      MalformedSpecError: not JSON, wrong types, or unknown keys.
      DimensionMismatchError: list lengths disagree.
      DuplicateVariableError: a variable name occurs twice.
      TorsionOrderError: a torsion order below 2.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedSpecError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise MalformedSpecError("spec document must be a JSON object")
    unknown = set(doc) - _TOP_KEYS
    if unknown:
        raise MalformedSpecError(f"unknown keys: {sorted(unknown)}")
    for key in ("variables", "grading", "degrees"):
        if key not in doc:
            raise MalformedSpecError(f"missing key {key!r}")

    variables = doc["variables"]
    if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
        raise MalformedSpecError("variables must be a list of strings")

    grading = doc["grading"]
    if not isinstance(grading, dict):
        raise MalformedSpecError("grading must be an object")
    unknown = set(grading) - _GRADING_KEYS
    if unknown:
        raise MalformedSpecError(f"unknown grading keys: {sorted(unknown)}")
    free_rank = grading.get("free_rank")
    if not isinstance(free_rank, int) or isinstance(free_rank, bool) or free_rank < 0:
        raise MalformedSpecError("grading.free_rank must be a nonnegative integer")
    orders = _int_list(grading.get("torsion", []), "grading.torsion")
    for m in orders:
        if m < 2:
            raise TorsionOrderError(f"torsion order {m} < 2")

    degrees = doc["degrees"]
    if not isinstance(degrees, list):
        raise MalformedSpecError("degrees must be a list")
    if len(degrees) != len(variables):
        raise DimensionMismatchError(
            f"{len(variables)} variables but {len(degrees)} degrees"
        )
    free, tors = [], []
    for name, entry in zip(variables, degrees):
        if not isinstance(entry, dict):
            raise MalformedSpecError(f"degree of {name} must be an object")
        unknown = set(entry) - _DEGREE_KEYS
        if unknown:
            raise MalformedSpecError(f"unknown degree keys for {name}: {sorted(unknown)}")
        fr = _int_list(entry.get("free", []), f"free degree of {name}")
        if len(fr) != free_rank:
            raise DimensionMismatchError(
                f"degree of {name} has {len(fr)} free entries, expected {free_rank}"
            )
        tr = _int_list(entry.get("torsion", []), f"torsion degree of {name}")
        if len(tr) != len(orders):
            raise DimensionMismatchError(
                f"degree of {name} has {len(tr)} torsion entries, expected {len(orders)}"
            )
        free.append(fr)
        tors.append(tr)

    label = doc.get("coefficients", "Q")
    if not isinstance(label, str):
        raise MalformedSpecError("coefficients must be a string")
    return RingSpec.from_degrees(
        variables, free, orders, tors, coefficient_label=label, free_rank=free_rank
    )


def degree_of_vector(spec: RingSpec, v: Sequence[int]) -> Multidegree:
    """Degree of an arbitrary exponent vector in Z^k (negative entries allowed)."""
    if len(v) != spec.k:
        raise ValueError(f"exponent vector has length {len(v)}, expected {spec.k}")
    free = tuple(
        sum(e * d.free[j] for e, d in zip(v, spec.degrees)) for j in range(spec.s)
    )
    torsion = tuple(
        sum(e * d.torsion[j] for e, d in zip(v, spec.degrees)) % m
        for j, m in enumerate(spec.grading.torsion_orders)
    )
    return Multidegree(free, torsion)


def degree_of_monomial(spec: RingSpec, m: Monomial) -> Multidegree:
    return degree_of_vector(spec, m.exponents)


def kernel_lattice_of(spec: RingSpec) -> LatticeBasis:
    """The lattice ``M`` of exponent vectors of degree zero."""
    return kernel_lattice(
        spec.free_matrix, spec.torsion_matrix, spec.grading.torsion_orders, ncols=spec.k
    )


def render_monomial(spec: RingSpec, exponents: Sequence[int]) -> str:
    """Render a Laurent monomial as ``X*Y^2*Z^-1``; the empty product is ``1``."""
    parts = []
    for name, e in zip(spec.variables, exponents):
        if e == 1:
            parts.append(name)
        elif e != 0:
            parts.append(f"{name}^{e}")
    return "*".join(parts) or "1"
