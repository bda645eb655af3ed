import warnings

import pytest

from hopfimage import groups
from hopfimage.corpus import group_case, group_cases, linear_characters, star_group_algebra
from hopfimage.extensions import (
    ExtensionError,
    NonCommutativeWarning,
    adjoint_stability,
    check_exact_sequence,
    coinvariants,
    cotensor_injectivity,
    extension_rep,
    glue_hypothesis,
    glueing_rep,
    identity_embedding,
    induced_module,
    plus_ideal,
    quotient_by_subalgebra,
    subgroup_embedding,
    unit_embedding,
)
from hopfimage.hopf import is_hopf_ideal, quotient_hopf, trivial_hopf
from hopfimage.image import hopf_image_fixpoint
from hopfimage.linalg import Matrix, image, preimage, subspace_intersect, zero_space
from hopfimage.reps import character, rep_kernel, trivial_rep, verify_rep
from hopfimage.scalars import cyclotomic_field


@pytest.fixture(scope="module")
def s3a3():
    H = star_group_algebra("S3")
    return H, subgroup_embedding(H, groups.symmetric3_table(), [0, 1, 2])


def test_normality(s3a3):
    H, emb = s3a3
    assert adjoint_stability(emb)
    assert not adjoint_stability(subgroup_embedding(H, groups.symmetric3_table(), [0, 3]))
    assert adjoint_stability(identity_embedding(H))


def test_plus_ideal(s3a3):
    H, emb = s3a3
    I = plus_ideal(emb)
    assert I.dim == 4 and is_hopf_ideal(H, I).ok
    assert plus_ideal(unit_embedding(H)).is_zero()
    assert plus_ideal(identity_embedding(H)) == H.counit_kernel
    with pytest.raises(ExtensionError):
        plus_ideal(subgroup_embedding(H, groups.symmetric3_table(), [0, 3]))


def test_quotients_by_subalgebras(s3a3):
    H, emb = s3a3
    assert quotient_by_subalgebra(emb)[0].dim == 2
    assert quotient_by_subalgebra(unit_embedding(H))[0].dim == H.dim
    assert quotient_by_subalgebra(identity_embedding(H))[0].dim == 1


def test_coinvariants(s3a3):
    H, emb = s3a3
    eps = Matrix(H.field, [list(H.counit)], H.dim)
    assert coinvariants(H, trivial_hopf(H.field), eps).is_full()
    ident = Matrix.identity(H.field, H.dim)
    assert coinvariants(H, H, ident) == image(Matrix.from_columns(H.field, [H.unit], H.dim))
    Q, p = quotient_by_subalgebra(emb)
    assert coinvariants(H, Q, p) == emb.basis


def test_exact_sequences(s3a3):
    H, emb = s3a3
    Q, p = quotient_by_subalgebra(emb)
    assert check_exact_sequence(emb, Q, p).ok
    eps = Matrix(H.field, [list(H.counit)], H.dim)
    report = check_exact_sequence(emb, trivial_hopf(H.field), eps)
    assert not report.kernel_is_plus_ideal


def test_exact_sequence_sweep():
    # every normal subgroup with commutative group algebra gives an exact sequence
    count = 0
    for case in group_cases():
        H = star_group_algebra(case.name)
        for N in groups.normal_subgroups(case.table):
            emb = subgroup_embedding(H, case.table, N)
            if not emb.small.is_commutative():
                continue
            Q, p = quotient_by_subalgebra(emb)
            assert check_exact_sequence(emb, Q, p).ok, (case.name, N)
            count += 1
    assert count > 15


def test_induced_module_dimensions(s3a3):
    H, emb = s3a3
    _, w = cyclotomic_field(3)
    rho = character(emb.small, [1, w, w * w])
    assert induced_module(emb, rho).dim == 2
    u = unit_embedding(H)
    assert induced_module(u, trivial_rep(u.small)).dim == H.dim
    ident = identity_embedding(H)
    two = star_group_algebra("S3")
    m = induced_module(ident, trivial_rep(two))
    assert m.dim == 1 and verify_rep(m.rep).ok


def test_extension_rep(s3a3):
    H, emb = s3a3
    _, w = cyclotomic_field(3)
    theta = extension_rep(emb, character(emb.small, [1, w, w * w]))
    assert theta.n == 4 and hopf_image_fixpoint(theta).inner_faithful
    u = unit_embedding(H)
    theta0 = extension_rep(u, trivial_rep(u.small))
    assert theta0.n == H.dim + H.dim and hopf_image_fixpoint(theta0).inner_faithful


def test_extension_warns_for_noncommutative(s3a3):
    H, _ = s3a3
    ident = identity_embedding(H)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        extension_rep(ident, trivial_rep(H))
    assert any(issubclass(w.category, NonCommutativeWarning) for w in caught)


def test_extension_on_z4():
    H = star_group_algebra("Z4")
    emb = subgroup_embedding(H, groups.cyclic_table(4), [0, 2])
    theta = extension_rep(emb, character(emb.small, [1, -1]))
    assert hopf_image_fixpoint(theta).inner_faithful


def _z6():
    H = star_group_algebra("Z6")
    t = groups.cyclic_table(6)
    return H, plus_ideal(subgroup_embedding(H, t, [0, 2, 4])), plus_ideal(subgroup_embedding(H, t, [0, 3]))


def test_glue_degenerate_cases():
    H, I1, I2 = _z6()
    K = H.counit_kernel
    assert not glue_hypothesis(H, K, K)
    Q, _ = quotient_hopf(H, K)
    glued = glueing_rep(H, K, K, trivial_rep(Q), trivial_rep(Q))
    assert not hopf_image_fixpoint(glued).inner_faithful
    Z = zero_space(H.field, H.dim)
    Q0, _ = quotient_hopf(H, Z)
    rho2 = character(Q0, linear_characters(group_case("Z6"))[1])
    Q1, _ = quotient_hopf(H, I1)
    glued = glueing_rep(H, I1, Z, trivial_rep(Q1), rho2)
    assert hopf_image_fixpoint(glued).inner_faithful


def test_glue_kernel_identity():
    H, I1, I2 = _z6()
    _, w = cyclotomic_field(3)
    Q1, P1 = quotient_hopf(H, I1)
    Q2, P2 = quotient_hopf(H, I2)
    rho1 = character(Q1, [(-1) ** c for c in I1.complement_indices()])
    rho2 = character(Q2, [w**c for c in I2.complement_indices()])
    glued = glueing_rep(H, I1, I2, rho1, rho2)
    expected = subspace_intersect(preimage(P1, rep_kernel(rho1)), preimage(P2, rep_kernel(rho2)))
    assert rep_kernel(glued) == expected


def test_cotensor_cases():
    H, I1, I2 = _z6()
    Z = zero_space(H.field, H.dim)
    assert cotensor_injectivity(H, I1, I2)
    assert cotensor_injectivity(H, Z, Z)
    assert not cotensor_injectivity(H, H.counit_kernel, H.counit_kernel)


def test_cotensor_implies_glue_hypothesis():
    # over all pairs of plus ideals of normal subgroups of the cyclic and small groups
    for name in ("Z4", "Z6", "S3", "D4"):
        case = group_case(name)
        H = star_group_algebra(name)
        ideals = [plus_ideal(subgroup_embedding(H, case.table, N)) for N in groups.normal_subgroups(case.table)]
        for I1 in ideals:
            for I2 in ideals:
                if cotensor_injectivity(H, I1, I2):
                    assert glue_hypothesis(H, I1, I2)
