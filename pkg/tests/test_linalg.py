import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfimage.linalg import (
    DimensionError,
    Matrix,
    block_diag,
    full_space,
    image,
    kernel,
    left_inverse,
    preimage,
    rref_basis,
    subspace_intersect,
    subspace_sum,
    tensor_sum,
    zero_space,
)
from hopfimage.scalars import QQ, cyclotomic_field

small = st.integers(min_value=-3, max_value=3)


def matrices(rows, cols):
    return st.lists(st.lists(small, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(
        lambda v: Matrix.from_values(QQ, v)
    )


def spaces(n, k):
    return st.lists(st.lists(small, min_size=n, max_size=n), max_size=k).map(
        lambda vs: rref_basis(QQ, [tuple(QQ(x) for x in v) for v in vs], n)
    )


@settings(max_examples=60, deadline=None)
@given(matrices(4, 5))
def test_rank_nullity(M):
    assert M.rank() + kernel(M).dim == M.ncols
    assert image(M).dim == M.rank()
    assert all(M.apply(v) == (QQ.zero,) * 4 for v in kernel(M).basis)


@settings(max_examples=60, deadline=None)
@given(spaces(5, 3), spaces(5, 3))
def test_sum_intersection_dimensions(U, W):
    S = subspace_sum(U, W)
    I = subspace_intersect(U, W)
    assert S.dim + I.dim == U.dim + W.dim
    assert I <= U and I <= W and U <= S and W <= S


@settings(max_examples=40, deadline=None)
@given(spaces(4, 3))
def test_annihilator_is_perp(U):
    A = U.annihilator()
    assert A.dim + U.dim == 4
    assert all(sum((a * u for a, u in zip(x, y)), QQ.zero) == QQ.zero for x in A.basis for y in U.basis)


@settings(max_examples=40, deadline=None)
@given(matrices(3, 4), spaces(3, 2))
def test_preimage(M, W):
    P = preimage(M, W)
    assert all(W.contains(M.apply(v)) for v in P.basis)
    assert kernel(M) <= P


def test_rref_is_canonical():
    a = rref_basis(QQ, [(QQ(1), QQ(2)), (QQ(2), QQ(4))], 2)
    b = rref_basis(QQ, [(QQ(-3), QQ(-6))], 2)
    assert a == b and a.dim == 1


def test_inverse_and_pow():
    M = Matrix.from_values(QQ, [[2, 1], [1, 1]])
    assert (M @ M.inverse()).is_identity()
    assert M.pow(3) == M @ M @ M
    with pytest.raises(ZeroDivisionError):
        Matrix.from_values(QQ, [[1, 1], [1, 1]]).inverse()
    with pytest.raises(DimensionError):
        Matrix.from_values(QQ, [[1, 1]]).inverse()


def test_tensor_sum_dimension():
    J = rref_basis(QQ, [(QQ(1), QQ(0), QQ(0))], 3)
    T = tensor_sum(J)
    # J(x)V + V(x)J has dimension 2*1*3 - 1
    assert T.dim == 5 and T.ambient_dim == 9


def test_quotient_projection_kills_subspace():
    J = rref_basis(QQ, [(QQ(1), QQ(-1), QQ(0))], 3)
    P = J.quotient_projection()
    assert P.shape == (2, 3)
    assert all(P.apply(v) == (QQ.zero, QQ.zero) for v in J.basis)
    assert P.rank() == 2


def test_conjugate_transpose_over_extension():
    K, w = cyclotomic_field(3)
    M = Matrix(K, [[w, K.one], [K.zero, w * w]], 2)
    assert M.H.rows[0][0] == w * w and M.H.rows[1][0] == K.one


def test_kron_and_block_diag():
    A = Matrix.from_values(QQ, [[1, 2], [3, 4]])
    I = Matrix.identity(QQ, 2)
    assert A.kron(I).shape == (4, 4)
    assert A.kron(I).rows[2][0] == QQ(3)
    B = block_diag(QQ, [A, I])
    assert B.shape == (4, 4) and B.rows[3][3] == QQ.one and B.rows[0][3] == QQ.zero


def test_left_inverse():
    M = Matrix.from_values(QQ, [[1, 0], [2, 1], [0, 3]])
    assert (left_inverse(M) @ M).is_identity()


def test_trivial_spaces():
    assert zero_space(QQ, 3).is_zero()
    assert full_space(QQ, 3).is_full()
    assert full_space(QQ, 3).annihilator().is_zero()
