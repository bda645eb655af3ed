import pytest

from hopfimage import groups
from hopfimage.corpus import corpus, star_group_algebra, sweedler_rep2
from hopfimage.hopf import group_algebra, is_hopf_ideal
from hopfimage.image import (
    coideal_preimage,
    hopf_image_fixpoint,
    hopf_image_quotient,
    hopf_image_words,
    inner_faithful,
    iter_words,
)
from hopfimage.linalg import Matrix, rref_basis, tensor_sum, preimage
from hopfimage.reps import character, regular_rep, rep_kernel, representation, trivial_rep
from hopfimage.scalars import QQ


@pytest.fixture(scope="module")
def s3_sign():
    H = group_algebra(groups.symmetric3_table())
    return character(H, [1, 1, 1, -1, -1, -1])


def test_word_order():
    assert list(iter_words(2, 2)) == [(), (0,), (1,), (0, 0), (0, 1), (1, 0), (1, 1)]


def test_coideal_preimage_matches_literal_tensor_sum():
    # the annihilator shortcut agrees with the literal J(x)H + H(x)J construction
    for c in corpus()[::7]:
        H = c.algebra
        J = rep_kernel(c.rep)
        literal = preimage(H.comult_matrix, tensor_sum(J))
        assert coideal_preimage(H, J) == literal, c.name


def test_trivial_and_regular():
    H = star_group_algebra("S3")
    r = hopf_image_fixpoint(trivial_rep(H))
    assert r.ideal == H.counit_kernel and not r.inner_faithful
    assert hopf_image_fixpoint(regular_rep(H)).inner_faithful
    w = hopf_image_words(trivial_rep(H))
    assert w.stabilized and w.ideal == H.counit_kernel and w.words_processed == 2


def test_sweedler_inner_faithful_with_kernel():
    pi = sweedler_rep2()
    assert not rep_kernel(pi).is_zero()
    res = hopf_image_fixpoint(pi)
    assert res.inner_faithful and res.ideal.is_zero()
    assert hopf_image_words(pi).ideal.is_zero()


def test_s3_sign(s3_sign):
    t = groups.symmetric3_table()
    res = hopf_image_fixpoint(s3_sign)
    expected = rref_basis(QQ, [tuple(QQ((k == g) - (k == t[g][n])) for k in range(6)) for g in range(6) for n in (0, 1, 2)], 6)
    assert res.ideal == expected and res.ideal.dim == 4
    w = hopf_image_words(s3_sign)
    assert w.stabilized and w.ideal == expected
    Q, pibar = hopf_image_quotient(s3_sign)
    assert Q.dim == 2 and inner_faithful(pibar)


def test_z4_order_two_image():
    H = group_algebra(groups.cyclic_table(4))
    g = Matrix.from_values(QQ, [[1, 0], [0, -1]])
    pi = representation(H, [g.pow(k) for k in range(4)])
    res = hopf_image_fixpoint(pi)
    assert not res.inner_faithful
    sub = rref_basis(QQ, [tuple(QQ((k == a) - (k == (a + 2) % 4)) for k in range(4)) for a in range(4)], 4)
    assert res.ideal == sub


def test_result_is_hopf_ideal_in_kernel():
    for c in corpus():
        res = hopf_image_fixpoint(c.rep)
        assert is_hopf_ideal(c.algebra, res.ideal).ok
        assert res.ideal <= rep_kernel(c.rep)
        assert res.inner_faithful == res.ideal.is_zero()


def test_regular_quotient_is_everything():
    H = star_group_algebra("Z4")
    Q, _ = hopf_image_quotient(regular_rep(H))
    assert Q.dim == 4
    Q1, _ = hopf_image_quotient(trivial_rep(H))
    assert Q1.dim == 1


def test_words_requires_length():
    with pytest.raises(ValueError):
        hopf_image_words(sweedler_rep2(), max_len=0)
