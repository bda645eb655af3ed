"""Hopf *-algebras: star structures, Hopf *-ideals, regular antipodes and
unitary induction along a normal commutative Hopf *-subalgebra.

A star structure is a matrix ``M`` with ``x* = M conj(x)`` where ``conj`` is
the field involution applied coordinatewise.  Sesquilinear forms are Gram
matrices ``G`` with ``<u, w> = w^H G u`` (linear in the first slot).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .extensions import (
    ExtensionError,
    SubalgebraEmbedding,
    _module_quotient,
    check_exact_sequence,
    quotient_by_subalgebra,
    quotient_regular_block,
)
from .hopf import (
    Functional,
    HopfAlgebra,
    HopfError,
    convolve,
    grouplike_check,
    haar_functional,
    is_character,
)
from .image import largest_hopf_ideal
from .linalg import (
    Matrix,
    Subspace,
    image,
    kernel,
    left_inverse,
    rref_basis,
    subspace_sum,
    vec_conj,
)
from .reps import Representation, character, product_rep, rep_kernel, verify_rep


class StarError(HopfError):
    pass


def star_apply(H: HopfAlgebra, v, star: Matrix | None = None):
    M = star if star is not None else H.star
    if M is None:
        raise StarError("no star structure")
    return M.apply(vec_conj(v))


@dataclass
class StarReport:
    involutive: bool
    antimultiplicative: bool
    comultiplicative: bool
    counit: bool
    antipode: bool

    @property
    def ok(self):
        return all(vars(self).values())

    def to_json(self):
        return {"ok": self.ok, **vars(self)}


def verify_star(H: HopfAlgebra, star: Matrix | None = None) -> StarReport:
    M = star if star is not None else H.star
    if M is None:
        raise StarError("no star structure")
    d = H.dim
    e = H.basis_vector
    st = [M.column(i) for i in range(d)]  # e_i* (basis vectors are sigma-fixed)
    involutive = (M @ M.conj()).is_identity()
    anti = all(
        M.apply(vec_conj(H.multiply(e(i), e(j)))) == H.multiply(st[j], st[i]) for i in range(d) for j in range(d)
    )
    MM = M.kron(M)
    comult = all(H.coproduct(st[i]) == MM.apply(vec_conj(H.coproduct(e(i)))) for i in range(d))
    counit = all(H.counit_of(st[i]) == H.counit[i].conjugate() for i in range(d))

    def s_star_twice(i):
        y = H.apply_antipode(st[i])
        return H.apply_antipode(M.apply(vec_conj(y))) == e(i)

    antipode = all(s_star_twice(i) for i in range(d))
    return StarReport(involutive, anti, comult, counit, antipode)


def group_star(H: HopfAlgebra) -> Matrix:
    """gamma* = gamma^{-1} on a group algebra (the antipode matrix)."""
    return H.antipode


def star_ideal_closure(H: HopfAlgebra, J: Subspace, star: Matrix | None = None) -> Subspace:
    """J + J*."""
    Jstar = rref_basis(H.field, [star_apply(H, b, star) for b in J.basis], H.dim)
    return subspace_sum(J, Jstar)


def is_star_rep(pi: Representation, gram: Matrix | None = None) -> bool:
    """pi(x*) = G^{-1} pi(x)^H G on the basis (G = identity by default)."""
    H = pi.algebra
    if H.star is None:
        raise StarError("algebra has no star structure")
    if gram is None:
        return all(pi.of(H.star.column(i)) == pi.mats[i].H for i in range(H.dim))
    Ginv = gram.inverse()
    return all(pi.of(H.star.column(i)) == Ginv @ pi.mats[i].H @ gram for i in range(H.dim))


def largest_hopf_star_ideal(H: HopfAlgebra, K: Subspace) -> Subspace:
    J, _, _ = largest_hopf_ideal(H, K, star=True)
    return J


def inner_unitary(pi: Representation, gram: Matrix | None = None) -> bool:
    """Ker(pi) contains no nonzero Hopf *-ideal; pi must be a *-representation."""
    if not verify_rep(pi).ok:
        raise StarError("invalid representation")
    if not is_star_rep(pi, gram):
        raise StarError("not a *-representation")
    return largest_hopf_star_ideal(pi.algebra, rep_kernel(pi)).is_zero()


# -- regular antipode ---------------------------------------------------------------


@dataclass(frozen=True)
class RegularAntipodeWitness:
    a: tuple
    phi: Functional
    m: int


def _character_inverse(H: HopfAlgebra, phi: Functional) -> Functional:
    return Functional(tuple(phi(H.antipode.column(i)) for i in range(H.dim)))


def check_regular_antipode(H: HopfAlgebra, w: RegularAntipodeWitness) -> bool:
    """S^{2m}(x) = a (Phi * id * Phi^{-1})(x) a^{-1} on every basis element."""
    a = tuple(H.field(x) for x in w.a)
    if not grouplike_check(H, a):
        raise StarError("a is not group-like")
    if not is_character(H, w.phi):
        raise StarError("phi is not a character")
    if w.m < 1:
        raise StarError("m must be positive")
    phi_inv = _character_inverse(H, w.phi)
    eps = Functional(H.counit)
    if convolve(H, w.phi, phi_inv) != eps or convolve(H, phi_inv, w.phi) != eps:
        raise StarError("Phi o S is not the convolution inverse of Phi")
    a_inv = H.apply_antipode(a)
    S2m = H.antipode.pow(2 * w.m)
    for i in range(H.dim):
        mid = H.zero
        for j, k, c in H.comult_terms[i]:
            right = phi_inv.coeffs[k]
            if not right:
                continue
            for p, q, c2 in H.comult_terms[j]:
                left = w.phi.coeffs[p]
                if left:
                    coeff = c * c2 * left * right
                    mid = tuple(x + coeff if t == q else x for t, x in enumerate(mid))
        rhs = H.multiply(H.multiply(a, mid), a_inv)
        if rhs != S2m.column(i):
            return False
    return True


def augment_regular(pi: Representation, w: RegularAntipodeWitness) -> Representation:
    """pi' : x -> (pi(x), Phi(x), Phi^{-1}(x)) as a block representation of dimension n + 2."""
    H = pi.algebra
    if not check_regular_antipode(H, w):
        raise StarError("witness does not satisfy the regular antipode identity")
    phi_inv = _character_inverse(H, w.phi)
    return product_rep(pi, character(H, w.phi.coeffs), character(H, phi_inv.coeffs))


# -- conditional expectation and unitary induction ----------------------------------


def conditional_expectation(emb: SubalgebraEmbedding, quotient: tuple[HopfAlgebra, Matrix] | None = None) -> Matrix:
    """E = (id (x) phi)(id (x) p) Delta, phi the Haar functional of H//A."""
    H = emb.big
    Hbar, p = quotient if quotient is not None else quotient_by_subalgebra(emb)
    report = check_exact_sequence(emb, Hbar, p)
    if not report.ok:
        raise ExtensionError(f"sequence is not exact: {report.to_json()}")
    phi = haar_functional(Hbar)
    weights = [phi(p.column(k)) for k in range(H.dim)]
    cols = []
    for i in range(H.dim):
        v = list(H.zero)
        for j, k, c in H.comult_terms[i]:
            if weights[k]:
                v[j] = v[j] + c * weights[k]
        cols.append(tuple(v))
    E = Matrix.from_columns(H.field, cols, H.dim)
    A = emb.basis
    if E @ E != E:
        raise ExtensionError("E is not idempotent")
    if any(E.apply(a) != a for a in emb.image_vectors()):
        raise ExtensionError("E does not restrict to the identity on A")
    if image(E) != A:
        raise ExtensionError("image of E is not A")
    return E


@dataclass(frozen=True)
class SesquilinearForm:
    gram: Matrix

    def is_hermitian(self) -> bool:
        return self.gram.H == self.gram

    def __call__(self, u, w):
        Gu = self.gram.apply(u)
        acc = self.gram.field.zero
        for x, y in zip(vec_conj(w), Gu):
            acc = acc + x * y
        return acc


def positivity_decidable(field) -> bool:
    """Signs are decidable when the involution is a complex conjugation with fixed field Q."""
    if field.degree == 1:
        return True
    if field.degree != 2 or not field.has_involution or not field.fixed_field_is_rational():
        return False
    c0, c1, _ = field.min_poly
    return c1 * c1 - 4 * c0 < 0


def form_positivity(G: Matrix) -> str:
    """One of 'positive_definite', 'positive_semidefinite', 'indefinite', 'undecidable'."""
    F = G.field
    if not positivity_decidable(F):
        return "undecidable"
    n = G.nrows
    work = [list(r) for r in G.rows]
    active = list(range(n))
    rank = 0
    while active:
        piv = next((i for i in active if work[i][i]), None)
        if piv is None:
            if any(work[i][j] for i in active for j in active):
                return "indefinite"
            break
        dval = work[piv][piv]
        if not dval.is_rational():
            return "undecidable"
        if dval.to_rational() < Fraction(0):
            return "indefinite"
        active.remove(piv)
        for j in active:
            f = work[j][piv]
            if not f:
                continue
            for k in active:
                g = work[piv][k]
                if g:
                    work[j][k] = work[j][k] - f * g / dval
        rank += 1
    return "positive_definite" if rank == n else "positive_semidefinite"


def restricted_star(emb: SubalgebraEmbedding) -> Matrix:
    """The star of H restricted to A, in A's coordinates."""
    H = emb.big
    L = left_inverse(emb.inclusion)
    cols = []
    for av in emb.image_vectors():
        s = star_apply(H, av)
        if not emb.basis.contains(s):
            raise StarError("subalgebra is not *-stable")
        cols.append(L.apply(s))
    return Matrix.from_columns(H.field, cols, emb.small.dim)


@dataclass
class UnitaryInduction:
    rep: Representation
    form: SesquilinearForm
    gram: Matrix
    projection: Matrix
    hermitian: bool
    positivity: str
    isometric: bool
    induced_star_rep: bool
    rho_inner_unitary: bool
    theta: Representation
    theta_inner_unitary: bool

    @property
    def gram_rank(self) -> int:
        return self.gram.rank()

    def to_json(self):
        return {
            "induced_dim": self.rep.n,
            "gram_rank": self.gram_rank,
            "hermitian": self.hermitian,
            "positivity": self.positivity,
            "isometric": self.isometric,
            "induced_star_rep": self.induced_star_rep,
            "rho_inner_unitary": self.rho_inner_unitary,
            "theta_inner_unitary": self.theta_inner_unitary,
        }


def unitary_induction(
    emb: SubalgebraEmbedding,
    rho: Representation,
    V_form: Matrix | None = None,
    quotient: tuple[HopfAlgebra, Matrix] | None = None,
) -> UnitaryInduction:
    """Induce a *-representation of A to H through the pre-inner product
    <x (x) v, y (x) w> = <rho(E(y* x)) v, w>, then divide out the null vectors.
    """
    H, A = emb.big, emb.small
    F = H.field
    if H.star is None:
        raise StarError("algebra has no star structure")
    n = rho.n
    G = V_form if V_form is not None else Matrix.identity(F, n)
    if G.H != G:
        raise StarError("V_form is not Hermitian")
    if form_positivity(G) != "positive_definite" and positivity_decidable(F):
        raise StarError("V_form is not positive definite")
    A_star = A.with_star(restricted_star(emb))
    rho_s = Representation(A_star, rho.n, rho.mats)
    if not is_star_rep(rho_s, G):
        raise StarError("rho is not a *-representation for V_form")

    quotient = quotient if quotient is not None else quotient_by_subalgebra(emb)
    E = conditional_expectation(emb, quotient)
    L = left_inverse(emb.inclusion)
    d = H.dim
    # Grho[j][i] = G rho(E(e_j* e_i)) as an n x n block
    blocks = {}
    for j in range(d):
        js = star_apply(H, H.basis_vector(j))
        for i in range(d):
            c = L.apply(E.apply(H.multiply(js, H.basis_vector(i))))
            blocks[(j, i)] = G @ rho.of(c)
    rows = []
    for j in range(d):
        for b in range(n):
            rows.append(tuple(blocks[(j, i)].rows[b][a] for i in range(d) for a in range(n)))
    gram = Matrix(F, rows, d * n)
    hermitian = gram.H == gram
    positivity = form_positivity(gram)

    null = kernel(gram)
    module = _module_quotient(H, n, null)
    stable = all(null.contains(M.apply(v)) for M in _left_actions(H, n) for v in null.basis)
    if not stable:
        raise ExtensionError("null space of the induced form is not H-stable")
    comp = null.complement_indices()
    qform = Matrix(F, [[gram.rows[s][t] for t in comp] for s in comp], len(comp)) if comp else Matrix(F, [], 0)

    form = SesquilinearForm(gram)
    unit_vecs = []
    for a in range(n):
        v = [F.zero] * (d * n)
        for i, u in enumerate(H.unit):
            if u:
                v[i * n + a] = u
        unit_vecs.append(tuple(v))
    isometric = all(form(unit_vecs[a], unit_vecs[b]) == G.rows[b][a] for a in range(n) for b in range(n))

    induced_star = module.dim > 0 and is_star_rep(module.rep, qform)
    rho_iu = largest_hopf_star_ideal(A_star, rep_kernel(rho_s)).is_zero()
    theta = product_rep(quotient_regular_block(emb, quotient), module.rep)
    theta_iu = largest_hopf_star_ideal(H, rep_kernel(theta)).is_zero()
    return UnitaryInduction(
        rep=module.rep,
        form=SesquilinearForm(qform),
        gram=gram,
        projection=module.projection,
        hermitian=hermitian,
        positivity=positivity,
        isometric=isometric,
        induced_star_rep=induced_star,
        rho_inner_unitary=rho_iu,
        theta=theta,
        theta_inner_unitary=theta_iu,
    )


def _left_actions(H: HopfAlgebra, n: int):
    """Left multiplication by each basis element on H (x) V."""
    I = Matrix.identity(H.field, n)
    return [H.left_mult_matrix(H.basis_vector(x)).kron(I) for x in range(H.dim)]
