"""Products, quotients by normal Hopf subalgebras, exact sequences and induction.

A Hopf subalgebra A of H is carried by a :class:`SubalgebraEmbedding`: the
structure constants of A itself plus the d x d_A inclusion matrix.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass

from . import groups
from .hopf import (
    HopfAlgebra,
    HopfError,
    NotHopfIdealError,
    group_algebra,
    is_hopf_ideal,
    is_hopf_map,
    quotient_hopf,
    trivial_hopf,
)
from .image import largest_hopf_ideal
from .linalg import Matrix, Subspace, image, kernel, rref_basis, subspace_intersect, unit_vector
from .reps import Representation, product_rep, pullback, regular_rep, verify_rep


class ExtensionError(HopfError):
    pass


class NonCommutativeWarning(UserWarning):
    """The inner-faithfulness guarantee for extensions needs A commutative."""


@dataclass(frozen=True, eq=False)
class SubalgebraEmbedding:
    big: HopfAlgebra
    small: HopfAlgebra
    inclusion: Matrix

    @property
    def basis(self) -> Subspace:
        return image(self.inclusion)

    def image_vectors(self):
        return [self.inclusion.column(a) for a in range(self.small.dim)]

    def to_json(self):
        return {"inclusion": self.inclusion.to_json()}


@dataclass
class EmbeddingReport:
    injective: bool
    unit: bool
    multiplicative: bool
    comultiplicative: bool
    counit: bool
    antipode: bool

    @property
    def ok(self):
        return all(vars(self).values())


def check_embedding(emb: SubalgebraEmbedding) -> EmbeddingReport:
    H, A, i = emb.big, emb.small, emb.inclusion
    if i.shape != (H.dim, A.dim):
        raise ExtensionError(f"inclusion has shape {i.shape}, expected {(H.dim, A.dim)}")
    cols = emb.image_vectors()
    dA = A.dim
    inj = i.rank() == dA
    unit = i.apply(A.unit) == H.unit
    mult = all(
        i.apply(A.multiply(A.basis_vector(a), A.basis_vector(b))) == H.multiply(cols[a], cols[b])
        for a in range(dA)
        for b in range(dA)
    )
    iti = i.kron(i)
    comult = all(H.coproduct(cols[a]) == iti.apply(A.coproduct(A.basis_vector(a))) for a in range(dA))
    counit = all(H.counit_of(cols[a]) == A.counit[a] for a in range(dA))
    anti = all(H.apply_antipode(cols[a]) == i.apply(A.antipode.column(a)) for a in range(dA))
    return EmbeddingReport(inj, unit, mult, comult, counit, anti)


def embedding(big: HopfAlgebra, small: HopfAlgebra, inclusion) -> SubalgebraEmbedding:
    if not isinstance(inclusion, Matrix):
        inclusion = Matrix.from_values(big.field, inclusion)
    emb = SubalgebraEmbedding(big, small, inclusion)
    report = check_embedding(emb)
    if not report.ok:
        raise ExtensionError(f"not a Hopf subalgebra embedding: {vars(report)}")
    return emb


def subgroup_embedding(H: HopfAlgebra, table, elems) -> SubalgebraEmbedding:
    """k[N] inside k[G] = H for the subgroup listed by ``elems`` (identity first)."""
    sub = groups.subgroup_table(table, elems)
    A = group_algebra(sub, H.field, name=f"k[N{len(elems)}]")
    F = H.field
    cols = [unit_vector(F, H.dim, g) for g in elems]
    return embedding(H, A, Matrix.from_columns(F, cols, H.dim))


def unit_embedding(H: HopfAlgebra) -> SubalgebraEmbedding:
    """k.1 inside H."""
    return embedding(H, trivial_hopf(H.field), Matrix.from_columns(H.field, [H.unit], H.dim))


def identity_embedding(H: HopfAlgebra) -> SubalgebraEmbedding:
    return embedding(H, H, Matrix.identity(H.field, H.dim))


# -- normality --------------------------------------------------------------------


def adjoint_stability(emb: SubalgebraEmbedding) -> bool:
    """A is stable under ad_l(x)(y) = x_(1) y S(x_(2)) and ad_r(x)(y) = S(x_(1)) y x_(2)."""
    H = emb.big
    B = emb.basis
    S = H.antipode
    for i in range(H.dim):
        for a in emb.image_vectors():
            left = H.zero
            right = H.zero
            for j, k, c in H.comult_terms[i]:
                ej, ek = H.basis_vector(j), H.basis_vector(k)
                left = _axpy(left, c, H.multiply(H.multiply(ej, a), S.column(k)))
                right = _axpy(right, c, H.multiply(H.multiply(S.column(j), a), ek))
            if not (B.contains(left) and B.contains(right)):
                return False
    return True


def _axpy(y, a, x):
    return tuple(yi + a * xi if xi else yi for yi, xi in zip(y, x))


def augmentation_of_subalgebra(emb: SubalgebraEmbedding) -> Subspace:
    """A^+ = A cap Ker(eps), as a subspace of H."""
    return subspace_intersect(emb.basis, emb.big.counit_kernel)


def plus_span(emb: SubalgebraEmbedding, side: str = "left") -> Subspace:
    """A^+ H (side='left') or H A^+ (side='right')."""
    H = emb.big
    Aplus = augmentation_of_subalgebra(emb)
    vecs = []
    for a in Aplus.basis:
        for i in range(H.dim):
            e = H.basis_vector(i)
            vecs.append(H.multiply(a, e) if side == "left" else H.multiply(e, a))
    return rref_basis(H.field, vecs, H.dim)


def plus_ideal(emb: SubalgebraEmbedding) -> Subspace:
    """The Hopf ideal A^+ H = H A^+ of a normal Hopf subalgebra."""
    if not adjoint_stability(emb):
        raise ExtensionError("subalgebra is not normal")
    left = plus_span(emb, "left")
    right = plus_span(emb, "right")
    if left != right:
        raise ExtensionError("A^+H differs from HA^+")
    report = is_hopf_ideal(emb.big, left)
    if not report.ok:
        raise NotHopfIdealError(f"A^+H is not a Hopf ideal: {report.to_json()}")
    return left


def quotient_by_subalgebra(emb: SubalgebraEmbedding) -> tuple[HopfAlgebra, Matrix]:
    """H//A = H / A^+H and the canonical projection."""
    return quotient_hopf(emb.big, plus_ideal(emb), check=False)


def coinvariants(H: HopfAlgebra, Hbar: HopfAlgebra, p: Matrix) -> Subspace:
    """H^{co p} = {h : (id (x) p) Delta(h) = h (x) 1}."""
    if not is_hopf_map(H, Hbar, p):
        raise ExtensionError("p is not a Hopf algebra map")
    d, q = H.dim, Hbar.dim
    F = H.field
    cols = []
    pcols = [p.column(k) for k in range(d)]
    for i in range(d):
        v = [F.zero] * (d * q)
        for j, k, c in H.comult_terms[i]:
            for t, x in enumerate(pcols[k]):
                if x:
                    v[j * q + t] = v[j * q + t] + c * x
        for t, u in enumerate(Hbar.unit):
            if u:
                v[i * q + t] = v[i * q + t] - u
        cols.append(tuple(v))
    return kernel(Matrix.from_columns(F, cols, d * q))


@dataclass
class ExactSequenceReport:
    injective_surjective: bool
    composite_trivial: bool
    kernel_is_plus_ideal: bool
    coinvariants_match: bool

    @property
    def ok(self):
        return self.injective_surjective and self.composite_trivial and self.kernel_is_plus_ideal and self.coinvariants_match

    def to_json(self):
        return {
            "ok": self.ok,
            "1_injective_surjective": self.injective_surjective,
            "2_composite_trivial": self.composite_trivial,
            "3_kernel_is_plus_ideal": self.kernel_is_plus_ideal,
            "4_coinvariants_match": self.coinvariants_match,
        }


def check_exact_sequence(emb: SubalgebraEmbedding, Hbar: HopfAlgebra, p: Matrix) -> ExactSequenceReport:
    """Conditions (1)-(4) for k -> A -> H -> Hbar -> k, each by exact linear algebra."""
    H, A, i = emb.big, emb.small, emb.inclusion
    c1 = i.rank() == A.dim and p.rank() == Hbar.dim
    pi = p @ i
    c2 = all(pi.column(a) == tuple(A.counit[a] * u for u in Hbar.unit) for a in range(A.dim))
    c3 = kernel(p) == plus_span(emb, "right")
    c4 = coinvariants(H, Hbar, p) == emb.basis
    return ExactSequenceReport(c1, c2, c3, c4)


# -- induced modules ------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class InducedModule:
    dim: int
    relations: Subspace
    projection: Matrix
    rep: Representation


def induced_module(emb: SubalgebraEmbedding, rho: Representation) -> InducedModule:
    """H (x)_A V = (H (x) V) / span{x a (x) v - x (x) rho(a) v}, with x.[y (x) v] = [xy (x) v]."""
    H, A = emb.big, emb.small
    if rho.algebra is not A and not rho.algebra.same_structure(A):
        raise ExtensionError("rho is not a representation of the subalgebra")
    if not verify_rep(rho).ok:
        raise ExtensionError("rho is not a valid representation")
    d, n = H.dim, rho.n
    F = H.field
    avecs = emb.image_vectors()
    rels = []
    for i in range(d):
        e = H.basis_vector(i)
        for a, av in enumerate(avecs):
            xa = H.multiply(e, av)
            M = rho.mats[a]
            for v in range(n):
                w = [F.zero] * (d * n)
                for k, c in enumerate(xa):
                    if c:
                        w[k * n + v] = w[k * n + v] + c
                for u in range(n):
                    m = M.rows[u][v]
                    if m:
                        w[i * n + u] = w[i * n + u] - m
                rels.append(tuple(w))
    R = rref_basis(F, rels, d * n)
    return _module_quotient(H, n, R)


def _module_quotient(H: HopfAlgebra, n: int, R: Subspace) -> InducedModule:
    """Quotient of H (x) V by a left-H-stable subspace, with the left regular action."""
    P = R.quotient_projection()
    comp = R.complement_indices()
    F = H.field
    q = len(comp)
    mats = []
    for x in range(H.dim):
        cols = []
        for c in comp:
            y, v = divmod(c, n)
            xy = H.multiply(H.basis_vector(x), H.basis_vector(y))
            w = [F.zero] * (H.dim * n)
            for k, coeff in enumerate(xy):
                if coeff:
                    w[k * n + v] = coeff
            cols.append(P.apply(w))
        mats.append(Matrix.from_columns(F, cols, q) if q else Matrix(F, [], 0))
    rep = Representation(H, q, tuple(mats))
    return InducedModule(q, R, P, rep)


def quotient_regular_block(emb: SubalgebraEmbedding, quotient: tuple[HopfAlgebra, Matrix] | None = None) -> Representation:
    """The regular representation of H//A pulled back along p."""
    Hbar, p = quotient if quotient is not None else quotient_by_subalgebra(emb)
    return pullback(regular_rep(Hbar), emb.big, p)


def extension_rep(emb: SubalgebraEmbedding, rho: Representation) -> Representation:
    """theta : x -> (p(x), rho~(x)), realized as a block-diagonal matrix representation."""
    if not emb.small.is_commutative():
        warnings.warn("subalgebra is not commutative; inner faithfulness is not guaranteed", NonCommutativeWarning, stacklevel=2)
    if not adjoint_stability(emb):
        raise ExtensionError("subalgebra is not normal")
    block = quotient_regular_block(emb)
    induced = induced_module(emb, rho)
    return product_rep(block, induced.rep)


# -- glueing along two quotients -----------------------------------------------------


def glue_hypothesis(H: HopfAlgebra, I1: Subspace, I2: Subspace) -> bool:
    """True when I1 cap I2 contains no nonzero Hopf ideal."""
    J, _, _ = largest_hopf_ideal(H, subspace_intersect(I1, I2))
    return J.is_zero()


def glueing_rep(H: HopfAlgebra, I1: Subspace, I2: Subspace, rho1: Representation, rho2: Representation) -> Representation:
    """x -> (rho1(pi1(x)), rho2(pi2(x))) for representations of H/I1 and H/I2."""
    out = []
    for I, rho in ((I1, rho1), (I2, rho2)):
        Q, P = quotient_hopf(H, I)
        if not Q.same_structure(rho.algebra):
            raise ExtensionError("representation is not on the canonical quotient H/I")
        out.append(pullback(rho, H, P))
    return product_rep(*out)


def cotensor_map(H: HopfAlgebra, I1: Subspace, I2: Subspace) -> Matrix:
    """Matrix of x -> pi1(x_(1)) (x) pi2(x_(2)) into H/I1 (x) H/I2."""
    for I in (I1, I2):
        report = is_hopf_ideal(H, I)
        if not report.ok:
            raise NotHopfIdealError(f"not a Hopf ideal: {report.to_json()}")
    P1, P2 = I1.quotient_projection(), I2.quotient_projection()
    d1, d2 = P1.nrows, P2.nrows
    F = H.field
    cols = []
    for i in range(H.dim):
        v = [F.zero] * (d1 * d2)
        for j, k, c in H.comult_terms[i]:
            a, b = P1.column(j), P2.column(k)
            for s in range(d1):
                if a[s]:
                    for t in range(d2):
                        if b[t]:
                            v[s * d2 + t] = v[s * d2 + t] + c * a[s] * b[t]
        cols.append(tuple(v))
    return Matrix.from_columns(F, cols, d1 * d2)


def cotensor_injectivity(H: HopfAlgebra, I1: Subspace, I2: Subspace) -> bool:
    return cotensor_map(H, I1, I2).rank() == H.dim
