"""Representations H -> End(V) and the word modules V^g.

A representation stores one n x n matrix per basis element of H.  Words are
tuples of non-negative ints; the letter ``k`` stands for the k-fold dual of V
and the empty tuple for the trivial module k.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .hopf import HopfAlgebra, HopfError, antipode_order, grouplike_check, skew_primitives
from .linalg import Matrix, Subspace, block_diag, kernel, subspace_intersect


class RepresentationError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Representation:
    algebra: HopfAlgebra
    n: int
    mats: tuple

    def __post_init__(self):
        if len(self.mats) != self.algebra.dim:
            raise RepresentationError(f"expected {self.algebra.dim} matrices, got {len(self.mats)}")
        for M in self.mats:
            if M.shape != (self.n, self.n):
                raise RepresentationError(f"matrix of shape {M.shape}, expected {(self.n, self.n)}")

    def __eq__(self, other):
        if not isinstance(other, Representation):
            return NotImplemented
        return self.n == other.n and self.mats == other.mats

    def __hash__(self):
        return hash(self.mats)

    def __repr__(self):
        return f"<Representation dim={self.n} of {self.algebra!r}>"

    @property
    def field(self):
        return self.algebra.field

    def of(self, v: Sequence) -> Matrix:
        """pi applied to the element with coordinates v."""
        acc = Matrix.zeros(self.field, self.n, self.n)
        for c, M in zip(v, self.mats):
            if c:
                acc = acc + M.scale(c)
        return acc

    def coefficient_matrix(self) -> Matrix:
        """The n^2 x d matrix whose column i is pi(e_i) flattened."""
        return Matrix.from_columns(self.field, [M.flatten() for M in self.mats], self.n * self.n)

    def to_json(self):
        return {"dim": self.n, "matrices": [M.to_json() for M in self.mats]}


def representation(H: HopfAlgebra, mats: Sequence) -> Representation:
    """Build from matrices or nested value lists."""
    ms = tuple(M if isinstance(M, Matrix) else Matrix.from_values(H.field, M) for M in mats)
    if not ms:
        raise RepresentationError("no matrices")
    return Representation(H, ms[0].nrows, ms)


def character(H: HopfAlgebra, values: Sequence) -> Representation:
    """One-dimensional representation e_i -> values[i]."""
    return Representation(H, 1, tuple(Matrix(H.field, [[H.field(v)]], 1) for v in values))


@dataclass
class RepReport:
    multiplicative: bool
    unit: bool
    first_failure: tuple | None = None

    @property
    def ok(self) -> bool:
        return self.multiplicative and self.unit

    def to_json(self):
        return {
            "ok": self.ok,
            "multiplicative": self.multiplicative,
            "unit": self.unit,
            "first_failure": list(self.first_failure) if self.first_failure else None,
        }


def verify_rep(pi: Representation) -> RepReport:
    H = pi.algebra
    d = H.dim
    first = None
    for i in range(d):
        for j in range(d):
            lhs = pi.mats[i] @ pi.mats[j]
            rhs = Matrix.zeros(H.field, pi.n, pi.n)
            for k, c in H.mult_terms[i][j]:
                rhs = rhs + pi.mats[k].scale(c)
            if lhs != rhs:
                first = (i, j)
                break
        if first:
            break
    unit_ok = pi.of(H.unit).is_identity()
    return RepReport(first is None, unit_ok, first)


def _require_valid(pi: Representation):
    report = verify_rep(pi)
    if not report.ok:
        raise RepresentationError(f"invalid representation: {report.to_json()}")


def rep_kernel(pi: Representation) -> Subspace:
    """{sum c_i e_i : sum c_i pi(e_i) = 0}."""
    return kernel(pi.coefficient_matrix())


def trivial_rep(H: HopfAlgebra) -> Representation:
    """The module k with H acting through the counit."""
    return character(H, H.counit)


def regular_rep(H: HopfAlgebra) -> Representation:
    """Left multiplication of H on itself."""
    return Representation(H, H.dim, tuple(H.left_mult_matrix(H.basis_vector(i)) for i in range(H.dim)))


def dual_rep(pi: Representation) -> Representation:
    """pi*(e_i) = pi(S(e_i))^T."""
    H = pi.algebra
    return Representation(H, pi.n, tuple(pi.of(H.antipode.column(i)).T for i in range(H.dim)))


def tensor_rep(pi: Representation, rho: Representation) -> Representation:
    """Action on V (x) W through the coproduct; (a, b) is index a * dim W + b."""
    if pi.algebra is not rho.algebra and not pi.algebra.same_structure(rho.algebra):
        raise RepresentationError("representations of different algebras")
    H = pi.algebra
    n = pi.n * rho.n
    kron_cache: dict = {}
    mats = []
    for i in range(H.dim):
        acc = None
        for j, k, c in H.comult_terms[i]:
            key = (j, k)
            if key not in kron_cache:
                kron_cache[key] = pi.mats[j].kron(rho.mats[k])
            term = kron_cache[key] if c == 1 else kron_cache[key].scale(c)
            acc = term if acc is None else acc + term
        mats.append(acc if acc is not None else Matrix.zeros(H.field, n, n))
    return Representation(H, n, tuple(mats))


def product_rep(*reps: Representation) -> Representation:
    """Block-diagonal representation into the product of the targets."""
    H = reps[0].algebra
    for r in reps[1:]:
        if r.algebra is not H and not r.algebra.same_structure(H):
            raise RepresentationError("representations of different algebras")
    n = sum(r.n for r in reps)
    mats = tuple(block_diag(H.field, [r.mats[i] for r in reps]) for i in range(H.dim))
    return Representation(H, n, mats)


def pullback(rho: Representation, H: HopfAlgebra, p: Matrix) -> Representation:
    """rho o p for a linear map p : H -> rho.algebra given as a matrix."""
    if p.shape != (rho.algebra.dim, H.dim):
        raise RepresentationError("projection shape does not match")
    return Representation(H, rho.n, tuple(rho.of(p.column(i)) for i in range(H.dim)))


def dual_period(H: HopfAlgebra, cap: int | None = None) -> int:
    """Period of iterated duals as matrices: lcm(antipode order, 2)."""
    t = antipode_order(H, cap)
    return t if t % 2 == 0 else 2 * t


class WordRepBuilder:
    """Caches iterated duals and word prefixes for one representation."""

    def __init__(self, pi: Representation, cap: int | None = None):
        self.pi = pi
        self.period = dual_period(pi.algebra, cap)
        self._letters = {0: pi}
        self._words: dict = {(): trivial_rep(pi.algebra)}

    def letter(self, k: int) -> Representation:
        k %= self.period
        if k not in self._letters:
            self._letters[k] = dual_rep(self.letter(k - 1))
        return self._letters[k]

    def word(self, word: Sequence[int]) -> Representation:
        word = tuple(k % self.period for k in word)
        if word in self._words:
            return self._words[word]
        if len(word) == 1:
            rep = self.letter(word[0])
        else:
            rep = tensor_rep(self.word(word[:-1]), self.letter(word[-1]))
        self._words[word] = rep
        return rep


def word_rep(pi: Representation, word: Sequence[int]) -> Representation:
    """pi^g on V^g: empty word -> trivial, letter k -> k-fold dual, concatenation -> tensor."""
    _require_valid(pi)
    return WordRepBuilder(pi).word(word)


def pointed_criterion(pi: Representation, grouplikes: Sequence[Sequence]) -> bool:
    """True iff pi restricted to P_{g,1}(H) is injective for every listed group-like g.

    The caller asserts the list is all of Gr(H).
    """
    H = pi.algebra
    K = rep_kernel(pi)
    for g in grouplikes:
        if not grouplike_check(H, g):
            raise HopfError(f"not a group-like element: {g}")
        P = skew_primitives(H, g)
        if not subspace_intersect(K, P).is_zero():
            return False
    return True
