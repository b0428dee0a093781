import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multiproj.errors import ArithmeticOverflowError
from multiproj.intlin import (
    determinant,
    finite_index,
    hermite_rows,
    kernel_lattice,
    lattice_from_generators,
    matmul,
    matvec,
    primitive,
    rank,
    rational_solve,
    smith_normal_form,
    unimodular_inverse,
)

small_ints = st.integers(min_value=-9, max_value=9)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    return [draw(st.lists(small_ints, min_size=c, max_size=c)) for _ in range(r)]


def test_snf_example():
    snf = smith_normal_form([[2, 4], [6, 8]])
    assert snf.invariant_factors == (2, 4)
    assert snf.D == ((2, 0), (0, 4))


def test_snf_zero_matrix():
    snf = smith_normal_form([[0, 0], [0, 0]])
    assert snf.invariant_factors == ()


def test_snf_rectangular():
    snf = smith_normal_form([[2, 0, 0], [0, 3, 0]])
    assert snf.invariant_factors == (1, 6)
    assert len(snf.D) == 2 and len(snf.D[0]) == 3


@settings(max_examples=200, deadline=None)
@given(matrices())
def test_snf_properties(A):
    snf = smith_normal_form(A)
    assert matmul(matmul(snf.U, A), snf.V) == snf.D
    assert abs(determinant(snf.U)) == 1
    assert abs(determinant(snf.V)) == 1
    f = snf.invariant_factors
    assert all(x > 0 for x in f)
    assert all(f[i + 1] % f[i] == 0 for i in range(len(f) - 1))
    assert len(f) == rank(A)


@settings(max_examples=100, deadline=None)
@given(matrices(4, 4))
def test_snf_det_of_square_matrix(A):
    # Product of invariant factors equals |det| on square matrices.
    if len(A) != len(A[0]):
        return
    d = determinant(A)
    f = smith_normal_form(A).invariant_factors
    prod = 1
    for x in f:
        prod *= x
    assert abs(d) == (prod if len(f) == len(A) else 0)


def test_determinant():
    assert determinant([[1, 2], [3, 4]]) == -2
    assert determinant([[2, 0, 0], [0, 3, 0], [0, 0, 4]]) == 24
    assert determinant([[1, 2], [2, 4]]) == 0


def test_rank_examples():
    assert rank([[1, 0], [0, 1]]) == 2
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[0, 0]]) == 0
    assert rank([]) == 0


def test_finite_index():
    assert finite_index([(1, 0), (1, 1)], 2)
    assert not finite_index([(1, 1), (2, 2)], 2)
    assert finite_index([], 0)
    assert not finite_index([], 1)
    with pytest.raises(ValueError):
        finite_index([(1,)], 2)


def test_primitive():
    assert primitive((4, -6, 0)) == (2, -3, 0)
    assert primitive((0, 0)) == (0, 0)


def test_hermite_rows_is_canonical():
    a = hermite_rows([(2, 4), (6, 8)])
    b = hermite_rows([(2, 4), (8, 12)])  # same lattice: (8,12) = (6,8) + (2,4)
    assert a == b


def test_kernel_examples():
    assert kernel_lattice([[1, -1]]).vectors == ((1, 1),)
    assert kernel_lattice([[1, 1, 1]]).vectors == ((1, 0, -1), (0, 1, -1))


def test_kernel_with_torsion():
    # x + y = 0 and x = 0 mod 2, i.e. multiples of (2, -2)
    L = kernel_lattice([[1, 1]], [[1, 0]], [2])
    assert L.rank == 1
    assert L.contains((2, -2))
    assert not L.contains((1, -1))


def test_kernel_pure_torsion():
    L = kernel_lattice([], [[1]], [2], ncols=1)
    assert L.vectors == ((2,),)


@pytest.mark.parametrize(
    "A,tor,mods",
    [
        ([[1, 2, -1]], [], []),
        ([[1, 0, 1], [0, 1, 1]], [], []),
        ([[2, -3, 1]], [[1, 1, 0]], [3]),
        ([[0, 0, 0]], [[1, 2, 3]], [4]),
    ],
)
def test_kernel_membership_brute_force(A, tor, mods):
    k = len(A[0])
    L = kernel_lattice(A, tor, mods, ncols=k)
    for v in itertools.product(range(-5, 6), repeat=k):
        in_kernel = all(x == 0 for x in matvec(A, v)) and all(
            x % m == 0 for x, m in zip(matvec(tor, v) if tor else (), mods)
        )
        assert L.contains(v) == in_kernel, v


def test_lattice_contains_and_rank():
    L = lattice_from_generators(2, [(2, 0), (0, 2), (2, 2)])
    assert L.rank == 2
    assert L.contains((4, -2))
    assert not L.contains((1, 0))


def test_rational_solve():
    sol = rational_solve([[2, 0], [0, 4]], [1, 2])
    assert sol == (0.5, 0.5)
    assert rational_solve([[1, 1], [1, 1]], [1, 2]) is None


@settings(max_examples=50, deadline=None)
@given(matrices(4, 4))
def test_unimodular_inverse(A):
    U = smith_normal_form(A).U
    n = len(U)
    assert matmul(U, unimodular_inverse(U)) == tuple(
        tuple(int(i == j) for j in range(n)) for i in range(n)
    )


def test_overflow_guard():
    big = 1 << 5000
    with pytest.raises(ArithmeticOverflowError):
        matmul([[big]], [[big]])
