"""Rational polyhedral cones with exact arithmetic.

A :class:`Cone` always carries both descriptions. Conversion between them is
incremental double description over the integers; no floating point is used
anywhere, so every verdict (dimension, faces, strong convexity) is exact.

Canonical form, which makes equal cones compare equal:

* generators: primitive extreme rays projected orthogonally away from the
  lineality space, plus plus/minus the Hermite basis of the lineality
  lattice; sorted and deduplicated.
* halfspaces: primitive facet normals projected into the linear span of the
  cone, plus plus/minus the Hermite basis of the orthogonal complement of
  that span (equations written as two opposite inequalities).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm, prod
from typing import Iterable, Sequence

from .errors import ResourceLimitError
from .intlin import (
    LatticeBasis,
    Vector,
    dot,
    identity,
    kernel_lattice,
    matvec,
    primitive,
    rank,
    smith_normal_form,
    transpose,
    unimodular_inverse,
)

#: Maximal number of lattice points enumerated in fundamental parallelotopes.
DEFAULT_HILBERT_CEILING = 1_000_000


def _neg(v: Sequence[int]) -> Vector:
    return tuple(-x for x in v)


def _double_description(dim: int, inequalities: Iterable[Sequence[int]]):
    """Generators of ``{x : <a, x> >= 0 for all a}``.

    Returns ``(lineality, rays)``: a basis of the lineality space and the
    extreme rays modulo it.
    """
    lin: list[Vector] = [tuple(row) for row in identity(dim)]
    rays: list[Vector] = []
    done: list[Vector] = []
    for a in inequalities:
        a = tuple(a)
        if not any(a):
            continue
        vals = [dot(a, l) for l in lin]
        j = next((i for i, v in enumerate(vals) if v), None)
        if j is not None:
            l0, v0 = lin[j], vals[j]
            if v0 < 0:
                l0, v0 = _neg(l0), -v0
            new_lin = []
            for i, l in enumerate(lin):
                if i != j:
                    new_lin.append(primitive([v0 * x - vals[i] * y for x, y in zip(l, l0)]))
            new_rays = []
            for r in rays:
                ar = dot(a, r)
                new_rays.append(primitive([v0 * x - ar * y for x, y in zip(r, l0)]))
            new_rays.append(primitive(l0))
            lin = [l for l in new_lin if any(l)]
            rays = list(dict.fromkeys(r for r in new_rays if any(r)))
        else:
            vals = [dot(a, r) for r in rays]
            pos = [r for r, v in zip(rays, vals) if v > 0]
            neg = [r for r, v in zip(rays, vals) if v < 0]
            zero = [r for r, v in zip(rays, vals) if v == 0]
            out = pos + zero
            if pos and neg:
                target = dim - len(lin) - 2
                tight = {r: frozenset(i for i, b in enumerate(done) if dot(b, r) == 0) for r in pos + neg}
                for p in pos:
                    ap = dot(a, p)
                    for n in neg:
                        common = tight[p] & tight[n]
                        if len(common) < target:
                            continue
                        if rank([done[i] for i in common]) != target:
                            continue
                        an = dot(a, n)
                        out.append(primitive([ap * x - an * y for x, y in zip(n, p)]))
            rays = list(dict.fromkeys(out))
        done.append(a)
    return lin, rays


def _project_away(v: Sequence[int], basis: Sequence[Sequence[int]]) -> Vector:
    """Orthogonal projection of ``v`` onto the complement of ``span(basis)``,
    scaled to a primitive integer vector."""
    if not basis:
        return primitive(v)
    G = [[Fraction(dot(b, c)) for c in basis] for b in basis]
    rhs = [Fraction(dot(b, v)) for b in basis]
    n = len(basis)
    # Gauss-Jordan on the (invertible) Gram matrix.
    M = [row + [r] for row, r in zip(G, rhs)]
    for c in range(n):
        piv = next(i for i in range(c, n) if M[i][c] != 0)
        M[c], M[piv] = M[piv], M[c]
        p = M[c][c]
        M[c] = [x / p for x in M[c]]
        for i in range(n):
            if i != c and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[c])]
    coef = [M[i][n] for i in range(n)]
    w = [Fraction(x) - sum(c * b[i] for c, b in zip(coef, basis)) for i, x in enumerate(v)]
    den = lcm(*(x.denominator for x in w)) if w else 1
    return primitive([int(x * den) for x in w])


def _independent_basis(vectors: Sequence[Sequence[int]]) -> list[Vector]:
    out: list[Vector] = []
    for v in vectors:
        if rank(out + [tuple(v)]) > len(out):
            out.append(tuple(v))
    return out


@dataclass(frozen=True)
class Cone:
    """A rational polyhedral cone in canonical form.

    Build instances with :func:`cone_from_generators` or
    :func:`cone_from_inequalities`; the constructor does no normalisation.
    """

    ambient_dim: int
    generators: tuple[Vector, ...]
    halfspaces: tuple[Vector, ...]
    lineality_dim: int
    rays: tuple[Vector, ...] = field(compare=False, repr=False)
    lineality_basis: tuple[Vector, ...] = field(compare=False, repr=False)
    facets: tuple[Vector, ...] = field(compare=False, repr=False)
    equations: tuple[Vector, ...] = field(compare=False, repr=False)

    @property
    def dim(self) -> int:
        return self.lineality_dim + rank(self.rays) if self.rays else self.lineality_dim

    def contains(self, v: Sequence[int]) -> bool:
        return all(dot(u, v) >= 0 for u in self.halfspaces)

    def __str__(self) -> str:
        if not self.generators:
            return "{0}"
        return "cone(" + ", ".join("(" + ",".join(map(str, g)) + ")" for g in self.generators) + ")"


def _canonical(dim: int, lin: Sequence[Sequence[int]], rays: Sequence[Sequence[int]]) -> Cone:
    lin = _independent_basis(lin)
    # Lineality lattice and its orthogonal complement, both Hermite-canonical.
    if lin:
        lin_perp = kernel_lattice(lin, ncols=dim).vectors
        lin_lat = kernel_lattice(lin_perp, ncols=dim).vectors if lin_perp else identity(dim)
    else:
        lin_lat = ()
    c_rays = tuple(sorted(set(_project_away(r, lin_lat) for r in rays if any(r))))
    c_rays = tuple(r for r in c_rays if any(r))
    gens = tuple(sorted(set(c_rays) | set(lin_lat) | {_neg(b) for b in lin_lat}))

    span = list(lin_lat) + list(c_rays)
    eq = kernel_lattice(span, ncols=dim).vectors if span else identity(dim)
    # Facets: extreme rays of the dual cone modulo its lineality (= equations).
    ineqs = list(c_rays) + list(lin_lat) + [_neg(b) for b in lin_lat]
    _, dual_rays = _double_description(dim, ineqs)
    facets = tuple(sorted(set(_project_away(u, eq) for u in dual_rays)))
    facets = tuple(u for u in facets if any(u))
    halfspaces = tuple(sorted(set(facets) | set(eq) | {_neg(e) for e in eq}))
    return Cone(
        ambient_dim=dim,
        generators=gens,
        halfspaces=halfspaces,
        lineality_dim=len(lin_lat),
        rays=c_rays,
        lineality_basis=tuple(lin_lat),
        facets=facets,
        equations=tuple(eq),
    )


def _check_dims(dim: int, vectors: Iterable[Sequence[int]]) -> tuple[Vector, ...]:
    out = []
    for v in vectors:
        if len(v) != dim:
            raise ValueError(f"vector {tuple(v)} does not have length {dim}")
        out.append(tuple(int(x) for x in v))
    return tuple(out)


@lru_cache(maxsize=4096)
def _from_generators(dim: int, gens: tuple[Vector, ...]) -> Cone:
    dlin, drays = _double_description(dim, gens)
    lin, rays = _double_description(dim, list(drays) + list(dlin) + [_neg(v) for v in dlin])
    return _canonical(dim, lin, rays)


@lru_cache(maxsize=4096)
def _from_inequalities(dim: int, ineqs: tuple[Vector, ...]) -> Cone:
    lin, rays = _double_description(dim, ineqs)
    return _canonical(dim, lin, rays)


def cone_from_generators(dim: int, gens: Iterable[Sequence[int]]) -> Cone:
    """The cone spanned by ``gens`` in R^dim (``{0}`` when empty)."""
    return _from_generators(dim, tuple(sorted(set(_check_dims(dim, gens)))))


def cone_from_inequalities(dim: int, ineqs: Iterable[Sequence[int]]) -> Cone:
    """The cone ``{x : <u, x> >= 0 for all u in ineqs}``."""
    return _from_inequalities(dim, tuple(sorted(set(_check_dims(dim, ineqs)))))


def dualize(c: Cone) -> Cone:
    return cone_from_generators(c.ambient_dim, c.halfspaces)


def intersect(c1: Cone, c2: Cone) -> Cone:
    if c1.ambient_dim != c2.ambient_dim:
        raise ValueError("cones live in different ambient spaces")
    return cone_from_inequalities(c1.ambient_dim, c1.halfspaces + c2.halfspaces)


def dim(c: Cone) -> int:
    return c.dim


def is_strongly_convex(c: Cone) -> bool:
    return c.lineality_dim == 0


def is_simplicial(c: Cone) -> bool:
    """Pointed with as many extreme rays as its dimension."""
    return c.lineality_dim == 0 and len(c.rays) == c.dim


def is_face(f: Cone, c: Cone) -> bool:
    """Whether ``f`` is a face of ``c`` (``c`` itself counts)."""
    if f.ambient_dim != c.ambient_dim:
        raise ValueError("cones live in different ambient spaces")
    if f == c:
        return True
    if not all(c.contains(g) for g in f.generators):
        return False
    tight = [u for u in c.facets if all(dot(u, g) == 0 for g in f.generators)]
    smallest = cone_from_inequalities(c.ambient_dim, c.halfspaces + tuple(_neg(u) for u in tight))
    return smallest == f


# ---------------------------------------------------------------------------
# Hilbert bases


@dataclass(frozen=True)
class HilbertBasis:
    ambient_dim: int
    elements: tuple[Vector, ...]

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def triangulate(c: Cone) -> list[tuple[Vector, ...]]:
    """Pulling triangulation of a pointed cone into simplicial cones.

    Each simplex is a tuple of ``dim(c)`` linearly independent extreme rays.
    """
    if c.lineality_dim:
        raise ValueError("only pointed cones can be triangulated")
    d = c.dim
    if d == 0:
        return [()]
    if len(c.rays) == d:
        return [c.rays]
    v0 = c.rays[0]
    out = []
    for u in c.facets:
        if dot(u, v0) > 0:
            face = cone_from_generators(c.ambient_dim, [r for r in c.rays if dot(u, r) == 0])
            out.extend((v0,) + s for s in triangulate(face))
    return out


def parallelotope_points(simplex: Sequence[Sequence[int]]) -> list[Vector]:
    """Lattice points of ``{sum l_i r_i : 0 <= l_i < 1}`` for independent rays.

    Uses the Smith form ``U R V = D`` of the ray matrix: points correspond to
    the coset representatives ``V (a_i / d_i)``, reduced modulo 1. All
    coefficients are kept as integers scaled by the largest invariant factor.
    """
    d = len(simplex)
    if d == 0:
        return [()]
    R = transpose(simplex)  # n x d, columns are rays
    snf = smith_normal_form(R)
    diag = snf.invariant_factors
    big = diag[-1]
    # Only nontrivial factors contribute cosets; column j of V scaled to big.
    steps = [
        (di, [snf.V[i][j] * (big // di) for i in range(d)])
        for j, di in enumerate(diag)
        if di > 1
    ]
    pts = []
    for a in itertools.product(*(range(di) for di, _ in steps)):
        lam = [0] * d
        for aj, (_, col) in zip(a, steps):
            if aj:
                for i in range(d):
                    lam[i] += aj * col[i]
        lam = [x % big for x in lam]
        p = []
        for row in R:
            q, rem = divmod(sum(r * l for r, l in zip(row, lam)), big)
            if rem:
                raise ArithmeticError("parallelotope point is not integral")
            p.append(q)
        pts.append(tuple(p))
    return pts


def _pointed_hilbert_basis(n: int, ineqs: Sequence[Sequence[int]], ceiling: int) -> list[Vector]:
    c = cone_from_inequalities(n, ineqs)
    assert c.lineality_dim == 0
    if c.dim == 0:
        return []
    simplices = triangulate(c)
    total = 0
    for s in simplices:
        R = transpose(s)
        total += prod(smith_normal_form(R).invariant_factors)
        if total > ceiling:
            raise ResourceLimitError(
                f"Hilbert basis enumeration exceeds ceiling of {ceiling} lattice points"
            )
    cand = set(c.rays)
    for s in simplices:
        cand.update(p for p in parallelotope_points(s) if any(p))
    # Candidates lie in the span of c, so x - y is in c iff every facet
    # value of x dominates that of y. The sum of the facet values is a
    # positive grading, and only elements of smaller grade can split x off.
    values = {x: tuple(dot(u, x) for u in c.facets) for x in cand}
    graded = sorted(cand, key=lambda v: (sum(values[v]), v))
    basis: list[tuple[int, tuple[int, ...], Vector]] = []
    for x in graded:
        fx = values[x]
        gx = sum(fx)
        reducible = False
        for gy, fy, _ in basis:
            if gy >= gx:
                break
            if all(a >= b for a, b in zip(fx, fy)):
                reducible = True
                break
        if not reducible:
            basis.append((gx, fx, x))
    return [x for _, _, x in basis]


def hilbert_basis(
    dim: int,
    halfspaces: Iterable[Sequence[int]],
    lattice: LatticeBasis | None = None,
    ceiling: int = DEFAULT_HILBERT_CEILING,
) -> HilbertBasis:
    """Minimal generators of ``{v in lattice : <u, v> >= 0 for u in halfspaces}``.

    The cone is triangulated, lattice points of every fundamental
    parallelotope are collected together with the extreme rays, and
    reducible candidates are discarded. If the monoid has units, plus/minus
    a basis of the unit lattice is included.

    Args:
      dim: ambient dimension.
      halfspaces: inner normals of the cone.
      lattice: the lattice to intersect with; ``Z^dim`` when omitted.
      ceiling: cap on the number of enumerated parallelotope points.

    Raises:
      ResourceLimitError: the enumeration would exceed ``ceiling``.
    """
    H = _check_dims(dim, halfspaces)
    if lattice is None:
        B = identity(dim)
        r = dim
    else:
        if lattice.ambient_dim != dim:
            raise ValueError("lattice and cone have different ambient dimensions")
        B = lattice.matrix
        r = lattice.rank
    # Work in lattice coordinates x, with v = B x.
    Hx = tuple(tuple(dot(u, col) for col in transpose(B, r)) for u in H) if r else ()
    elems = _lattice_hilbert_basis(r, Hx, ceiling)
    out = sorted(set(matvec(B, x) if r else tuple([0] * dim) for x in elems))
    return HilbertBasis(dim, tuple(out))


def _lattice_hilbert_basis(r: int, H: Sequence[Sequence[int]], ceiling: int) -> list[Vector]:
    if r == 0:
        return []
    H = [h for h in H if any(h)]
    units = kernel_lattice(H, ncols=r).vectors if H else identity(r)
    l = len(units)
    if l == 0:
        return _pointed_hilbert_basis(r, H, ceiling)
    # Complete the unit lattice to a basis W of Z^r; y = W^-1 x splits off units.
    snf = smith_normal_form(transpose(units))
    W = unimodular_inverse(snf.U)
    # The first l columns of W span the unit lattice; swap them for the
    # canonical basis so the output is stable.
    Wt = list(transpose(W))
    Wt[:l] = [tuple(u) for u in units]
    W = transpose(Wt)
    HW = [tuple(dot(h, col) for col in Wt) for h in H]
    Hq = [h[l:] for h in HW]
    out = [tuple(u) for u in units] + [_neg(u) for u in units]
    for y in _pointed_hilbert_basis(r - l, Hq, ceiling):
        out.append(matvec(W, (0,) * l + tuple(y)))
    return out
