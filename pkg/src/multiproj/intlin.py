"""Exact integer linear algebra.

Matrices are plain row-major sequences of integer rows. Everything here works
on Python integers, so nothing can wrap around; the magnitude guard
``OVERFLOW_BITS`` turns runaway coefficient growth into an explicit
:class:`ArithmeticOverflowError` instead of an unbounded slowdown.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

from .errors import ArithmeticOverflowError

Vector = tuple[int, ...]
Matrix = tuple[Vector, ...]

#: Largest bit length any intermediate entry may reach.
OVERFLOW_BITS = 4096


def _guard(x: int) -> int:
    if x.bit_length() > OVERFLOW_BITS:
        raise ArithmeticOverflowError(
            f"integer entry exceeds {OVERFLOW_BITS} bits during exact computation"
        )
    return x


def as_matrix(rows: Sequence[Sequence[int]]) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(A: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    if not A:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*A))


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> Matrix:
    Bt = transpose(B)
    return tuple(tuple(_guard(sum(a * b for a, b in zip(row, col))) for col in Bt) for row in A)


def matvec(A: Sequence[Sequence[int]], v: Sequence[int]) -> Vector:
    return tuple(_guard(sum(a * b for a, b in zip(row, v))) for row in A)


def dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def content(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v: Sequence[int]) -> Vector:
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = content(v)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def determinant(A: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss elimination)."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(row) for row in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = _guard((M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev)
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def rank(A: Sequence[Sequence[int]]) -> int:
    """Rational rank of an integer matrix."""
    M = [list(row) for row in A if any(row)]
    if not M:
        return 0
    ncols = len(M[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        for i in range(r + 1, len(M)):
            f = M[i][c]
            if f:
                M[i] = primitive([_guard(p * a - f * b) for a, b in zip(M[i], M[r])])
        r += 1
        if r == len(M):
            break
    return r


def finite_index(vectors: Sequence[Sequence[int]], s: int) -> bool:
    """Whether vectors in Z^s generate a subgroup of finite index.

    That happens exactly when they span Q^s; the trivial group (``s == 0``)
    has index 1 in itself.
    """
    for v in vectors:
        if len(v) != s:
            raise ValueError(f"vector {tuple(v)} does not have length {s}")
    if s == 0:
        return True
    return rank(vectors) == s


@dataclass(frozen=True)
class SmithDecomposition:
    """``U @ A @ V == D`` with ``U`` and ``V`` unimodular."""

    U: Matrix
    D: Matrix
    V: Matrix
    invariant_factors: tuple[int, ...]


def smith_normal_form(A: Sequence[Sequence[int]]) -> SmithDecomposition:
    """Smith normal form with transformation matrices.

    Args:
      A: a nonempty integer matrix given as a sequence of rows.

    Returns:
      A :class:`SmithDecomposition`. ``invariant_factors`` lists the positive
      diagonal entries of ``D``; each divides the next.
    """
    m = len(A)
    if m == 0:
        raise ValueError("smith_normal_form needs a nonempty matrix")
    n = len(A[0])
    D = [list(map(int, row)) for row in A]
    if any(len(row) != n for row in D):
        raise ValueError("ragged matrix")
    U = [list(row) for row in identity(m)]
    V = [list(row) for row in identity(n)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):
        # row_dst += q * row_src
        D[dst] = [_guard(a + q * b) for a, b in zip(D[dst], D[src])]
        U[dst] = [_guard(a + q * b) for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in D:
            row[dst] = _guard(row[dst] + q * row[src])
        for row in V:
            row[dst] = _guard(row[dst] + q * row[src])

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if D[i][j] and (best is None or abs(D[i][j]) < abs(D[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            p = D[t][t]
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
            # Remainders are smaller than the pivot; bring the smallest up.
            cand = None
            for i in range(t + 1, m):
                if D[i][t] and (cand is None or abs(D[i][t]) < cand[0]):
                    cand = (abs(D[i][t]), "r", i)
            for j in range(t + 1, n):
                if D[t][j] and (cand is None or abs(D[t][j]) < cand[0]):
                    cand = (abs(D[t][j]), "c", j)
            if cand is not None:
                if cand[1] == "r":
                    swap_rows(t, cand[2])
                else:
                    swap_cols(t, cand[2])
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    factors = tuple(D[i][i] for i in range(min(m, n)) if D[i][i] != 0)
    return SmithDecomposition(as_matrix(U), as_matrix(D), as_matrix(V), factors)


def hermite_rows(vectors: Sequence[Sequence[int]]) -> Matrix:
    """Row-style Hermite normal form of the lattice spanned by ``vectors``.

    The result is echelon with positive pivots and entries above each pivot
    reduced into ``[0, pivot)``. Zero rows are dropped, so the rows form a
    canonical basis of the generated lattice.
    """
    M = [list(map(int, v)) for v in vectors if any(v)]
    if not M:
        return ()
    ncols = len(M[0])
    r = 0
    pivots = []
    for c in range(ncols):
        rows = [i for i in range(r, len(M)) if M[i][c] != 0]
        if not rows:
            continue
        while True:
            rows = [i for i in range(r, len(M)) if M[i][c] != 0]
            piv = min(rows, key=lambda i: abs(M[i][c]))
            M[r], M[piv] = M[piv], M[r]
            done = True
            for i in range(r + 1, len(M)):
                if M[i][c]:
                    q = M[i][c] // M[r][c]
                    M[i] = [_guard(a - q * b) for a, b in zip(M[i], M[r])]
                    if M[i][c]:
                        done = False
            if done:
                break
        if M[r][c] < 0:
            M[r] = [-x for x in M[r]]
        for i in range(r):
            q = M[i][c] // M[r][c]
            if q:
                M[i] = [_guard(a - q * b) for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return as_matrix(M[:r])


@dataclass(frozen=True)
class LatticeBasis:
    """A sublattice of Z^ambient_dim given by a canonical (Hermite) basis.

    ``vectors`` holds the basis vectors; :attr:`matrix` arranges them as the
    columns of an ``ambient_dim x rank`` matrix.
    """

    ambient_dim: int
    vectors: Matrix

    @property
    def rank(self) -> int:
        return len(self.vectors)

    @property
    def matrix(self) -> Matrix:
        return transpose(self.vectors, self.ambient_dim) if self.vectors else tuple(
            () for _ in range(self.ambient_dim)
        )

    def contains(self, v: Sequence[int]) -> bool:
        """Membership test via the echelon structure of the Hermite basis."""
        rest = list(v)
        for row in self.vectors:
            c = next(i for i, x in enumerate(row) if x)
            if rest[c] % row[c]:
                return False
            q = rest[c] // row[c]
            rest = [a - q * b for a, b in zip(rest, row)]
        return not any(rest)


def lattice_from_generators(ambient_dim: int, vectors: Sequence[Sequence[int]]) -> LatticeBasis:
    return LatticeBasis(ambient_dim, hermite_rows(vectors))


def kernel_lattice(
    a_free: Sequence[Sequence[int]],
    a_tor: Sequence[Sequence[int]] = (),
    moduli: Sequence[int] = (),
    ncols: int | None = None,
) -> LatticeBasis:
    """Basis of ``{v : a_free v = 0 and a_tor v = 0 mod moduli (rowwise)}``.

    The congruences are turned into equations by appending one auxiliary
    unknown per torsion row, scaled by its modulus; the kernel of the stacked
    system is then projected back onto the original coordinates.
    ``ncols`` is required when both matrices have no rows.
    """
    if len(a_tor) != len(moduli):
        raise ValueError("one modulus per torsion row is required")
    rows = list(a_free) + list(a_tor)
    if ncols is None:
        if not rows:
            raise ValueError("ncols is required for an empty system")
        ncols = len(rows[0])
    for row in rows:
        if len(row) != ncols:
            raise ValueError(f"row {tuple(row)} does not have {ncols} columns")
    if any(m < 2 for m in moduli):
        raise ValueError("moduli must be at least 2")
    if not rows:
        return LatticeBasis(ncols, identity(ncols))
    t = len(moduli)
    stacked = [list(r) + [0] * t for r in a_free]
    for i, (r, m) in enumerate(zip(a_tor, moduli)):
        stacked.append(list(r) + [m if j == i else 0 for j in range(t)])
    snf = smith_normal_form(stacked)
    r = len(snf.invariant_factors)
    Vt = transpose(snf.V)
    kernel = [col[:ncols] for col in Vt[r:]]
    return LatticeBasis(ncols, hermite_rows(kernel))


def rational_solve(A: Sequence[Sequence[int]], b: Sequence[int]) -> tuple[Fraction, ...] | None:
    """One rational solution of ``A x = b`` or ``None`` if inconsistent."""
    m = len(A)
    n = len(A[0]) if m else 0
    M = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(A, b)]
    pivcols = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        p = M[r][c]
        M[r] = [x / p for x in M[r]]
        for i in range(m):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * bb for a, bb in zip(M[i], M[r])]
        pivcols.append(c)
        r += 1
    if any(M[i][n] != 0 for i in range(r, m)):
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(pivcols):
        x[c] = M[i][n]
    return tuple(x)


def unimodular_inverse(U: Sequence[Sequence[int]]) -> Matrix:
    """Inverse of a unimodular integer matrix."""
    n = len(U)
    cols = []
    for j in range(n):
        e = [int(i == j) for i in range(n)]
        x = rational_solve(U, e)
        if x is None or any(v.denominator != 1 for v in x):
            raise ValueError("matrix is not unimodular")
        cols.append([int(v) for v in x])
    return transpose(cols)
