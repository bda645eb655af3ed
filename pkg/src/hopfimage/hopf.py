"""Finite-dimensional Hopf algebras given by structure constants.

Conventions for a basis ``e_0 .. e_{d-1}``:

* ``mult[i][j][k]`` is the coefficient of ``e_k`` in ``e_i e_j``;
* ``comult[i][j][k]`` is the coefficient of ``e_j (x) e_k`` in ``Delta(e_i)``;
* ``antipode`` is a matrix acting on coordinate columns, so column ``j``
  holds the coordinates of ``S(e_j)``;
* ``star``, when present, is a matrix ``M`` with ``x* = M conj(x)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Sequence

from . import groups
from .linalg import (
    Matrix,
    Subspace,
    kernel,
    tensor_sum,
    unit_vector,
    vec_sub,
    zero_vector,
)
from .scalars import QQ, FieldSpec


class HopfError(ValueError):
    pass


class NotHopfIdealError(HopfError):
    pass


class AntipodeOrderError(HopfError):
    pass


class HaarError(HopfError):
    pass


@dataclass(frozen=True, eq=False)
class HopfAlgebra:
    field: FieldSpec
    dim: int
    mult: tuple
    unit: tuple
    comult: tuple
    counit: tuple
    antipode: Matrix
    star: Matrix | None = None
    name: str = dc_field(default="", compare=False)

    @classmethod
    def from_tables(cls, field, mult, unit, comult, counit, antipode, star=None, name="") -> "HopfAlgebra":
        """Build from nested lists of anything the field can coerce."""
        d = len(unit)
        F = field
        mult_t = tuple(tuple(tuple(F(c) for c in mult[i][j]) for j in range(d)) for i in range(d))
        comult_t = tuple(tuple(tuple(F(c) for c in comult[i][j]) for j in range(d)) for i in range(d))
        for i in range(d):
            if len(mult[i]) != d or any(len(mult[i][j]) != d for j in range(d)):
                raise HopfError(f"mult[{i}] has the wrong shape")
            if len(comult[i]) != d or any(len(comult[i][j]) != d for j in range(d)):
                raise HopfError(f"comult[{i}] has the wrong shape")
        S = antipode if isinstance(antipode, Matrix) else Matrix.from_values(F, antipode)
        if S.shape != (d, d):
            raise HopfError("antipode must be a d x d matrix")
        if star is not None and not isinstance(star, Matrix):
            star = Matrix.from_values(F, star)
        if star is not None and star.shape != (d, d):
            raise HopfError("star must be a d x d matrix")
        if len(counit) != d:
            raise HopfError("counit has the wrong length")
        return cls(
            field=F,
            dim=d,
            mult=mult_t,
            unit=tuple(F(c) for c in unit),
            comult=comult_t,
            counit=tuple(F(c) for c in counit),
            antipode=S,
            star=star,
            name=name,
        )

    def with_star(self, star: Matrix | None) -> "HopfAlgebra":
        return HopfAlgebra(self.field, self.dim, self.mult, self.unit, self.comult, self.counit, self.antipode, star, self.name)

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<HopfAlgebra{label} dim={self.dim} over {self.field!r}>"

    def same_structure(self, other: "HopfAlgebra") -> bool:
        return (
            self.dim == other.dim
            and self.mult == other.mult
            and self.unit == other.unit
            and self.comult == other.comult
            and self.counit == other.counit
            and self.antipode == other.antipode
        )

    # -- sparse views ------------------------------------------------------------------

    @cached_property
    def mult_terms(self):
        """mult_terms[i][j] lists (k, c) with c != 0."""
        return tuple(
            tuple(tuple((k, c) for k, c in enumerate(self.mult[i][j]) if c) for j in range(self.dim))
            for i in range(self.dim)
        )

    @cached_property
    def comult_terms(self):
        """comult_terms[i] lists (j, k, c) with c != 0."""
        d = self.dim
        return tuple(
            tuple((j, k, self.comult[i][j][k]) for j in range(d) for k in range(d) if self.comult[i][j][k])
            for i in range(d)
        )

    # -- elementwise operations --------------------------------------------------------

    def basis_vector(self, i: int):
        return unit_vector(self.field, self.dim, i)

    @cached_property
    def zero(self):
        return zero_vector(self.field, self.dim)

    def multiply(self, u, v):
        out = list(self.zero)
        for i, a in enumerate(u):
            if not a:
                continue
            terms_i = self.mult_terms[i]
            for j, b in enumerate(v):
                if not b:
                    continue
                ab = a * b
                for k, c in terms_i[j]:
                    out[k] = out[k] + ab * c
        return tuple(out)

    def coproduct(self, v):
        d = self.dim
        out = list(zero_vector(self.field, d * d))
        for i, a in enumerate(v):
            if not a:
                continue
            for j, k, c in self.comult_terms[i]:
                out[j * d + k] = out[j * d + k] + a * c
        return tuple(out)

    def counit_of(self, v):
        acc = self.field.zero
        for a, e in zip(v, self.counit):
            if a and e:
                acc = acc + a * e
        return acc

    def apply_antipode(self, v):
        return self.antipode.apply(v)

    def tensor_multiply(self, X, Y):
        """Product in H (x) H of two vectors of length d^2."""
        d = self.dim
        out = list(zero_vector(self.field, d * d))
        nx = [(a, b, x) for a in range(d) for b in range(d) if (x := X[a * d + b])]
        ny = [(c, e, y) for c in range(d) for e in range(d) if (y := Y[c * d + e])]
        for a, b, x in nx:
            for c, e, y in ny:
                xy = x * y
                for k1, c1 in self.mult_terms[a][c]:
                    for k2, c2 in self.mult_terms[b][e]:
                        out[k1 * d + k2] = out[k1 * d + k2] + xy * c1 * c2
        return tuple(out)

    # -- matrices ----------------------------------------------------------------------

    def left_mult_matrix(self, v) -> Matrix:
        cols = [self.multiply(v, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    def right_mult_matrix(self, v) -> Matrix:
        cols = [self.multiply(self.basis_vector(j), v) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim)

    @cached_property
    def comult_matrix(self) -> Matrix:
        """The d^2 x d matrix of Delta."""
        cols = [self.coproduct(self.basis_vector(i)) for i in range(self.dim)]
        return Matrix.from_columns(self.field, cols, self.dim * self.dim)

    @cached_property
    def counit_kernel(self) -> Subspace:
        return kernel(Matrix(self.field, [self.counit], self.dim))

    @cached_property
    def antipode_inverse(self) -> Matrix:
        return self.antipode.inverse()

    def is_commutative(self) -> bool:
        d = self.dim
        return all(self.mult[i][j] == self.mult[j][i] for i in range(d) for j in range(d))

    def is_cocommutative(self) -> bool:
        d = self.dim
        return all(self.comult[i][j][k] == self.comult[i][k][j] for i in range(d) for j in range(d) for k in range(d))

    # -- serialization -----------------------------------------------------------------

    def to_json(self) -> dict:
        out = {
            "field": self.field.to_json(),
            "dim": self.dim,
            "mult": [[[c.to_json() for c in v] for v in row] for row in self.mult],
            "unit": [c.to_json() for c in self.unit],
            "comult": [[[c.to_json() for c in v] for v in row] for row in self.comult],
            "counit": [c.to_json() for c in self.counit],
            "antipode": self.antipode.to_json(),
        }
        if self.star is not None:
            out["star"] = self.star.to_json()
        if self.name:
            out["name"] = self.name
        return out


# -- axiom verification ----------------------------------------------------------------


@dataclass
class AxiomReport:
    """Per-axiom results; ``failures[name]`` is the first failing index tuple."""

    results: dict = dc_field(default_factory=dict)
    failures: dict = dc_field(default_factory=dict)

    def record(self, name, passed, where=None):
        self.results[name] = passed
        if not passed:
            self.failures[name] = where

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    def failed(self) -> list[str]:
        return [k for k, v in self.results.items() if not v]

    def to_json(self):
        return {
            "ok": self.ok,
            "axioms": {k: {"pass": v, "first_failure": list(self.failures[k]) if k in self.failures else None} for k, v in self.results.items()},
        }


def _first(pred, indices):
    for idx in indices:
        if not pred(*idx):
            return idx
    return None


def verify_hopf(H: HopfAlgebra) -> AxiomReport:
    """Check every Hopf algebra axiom by finite contraction; never stops early."""
    d = H.dim
    F = H.field
    e = H.basis_vector
    rep = AxiomReport()
    rng1 = [(i,) for i in range(d)]
    rng2 = [(i, j) for i in range(d) for j in range(d)]
    rng3 = [(i, j, k) for i in range(d) for j in range(d) for k in range(d)]

    prods = [[H.multiply(e(i), e(j)) for j in range(d)] for i in range(d)]
    where = _first(lambda i, j, k: H.multiply(prods[i][j], e(k)) == H.multiply(e(i), prods[j][k]), rng3)
    rep.record("associativity", where is None, where)

    where = _first(lambda i: H.multiply(H.unit, e(i)) == e(i) and H.multiply(e(i), H.unit) == e(i), rng1)
    rep.record("unit", where is None, where)

    coprods = [H.coproduct(e(i)) for i in range(d)]

    def coassoc(i):
        X = coprods[i]
        left = [F.zero] * d ** 3
        right = [F.zero] * d ** 3
        for a in range(d):
            for b in range(d):
                x = X[a * d + b]
                if not x:
                    continue
                for j, k, c in H.comult_terms[a]:
                    idx = (j * d + k) * d + b
                    left[idx] = left[idx] + x * c
                for j, k, c in H.comult_terms[b]:
                    idx = (a * d + j) * d + k
                    right[idx] = right[idx] + x * c
        return left == right

    where = _first(coassoc, rng1)
    rep.record("coassociativity", where is None, where)

    def counit_law(i):
        X = coprods[i]
        left = [F.zero] * d  # (id (x) eps)
        right = [F.zero] * d  # (eps (x) id)
        for a in range(d):
            for b in range(d):
                x = X[a * d + b]
                if x:
                    left[a] = left[a] + x * H.counit[b]
                    right[b] = right[b] + x * H.counit[a]
        return tuple(left) == e(i) and tuple(right) == e(i)

    where = _first(counit_law, rng1)
    rep.record("counit", where is None, where)

    unit_tensor = tuple(a * b for a in H.unit for b in H.unit)
    ok_unit = H.coproduct(H.unit) == unit_tensor
    where = None if ok_unit else ("unit",)
    if ok_unit:
        where = _first(lambda i, j: H.coproduct(prods[i][j]) == H.tensor_multiply(coprods[i], coprods[j]), rng2)
    rep.record("comult_multiplicative", where is None, where)

    ok_unit = H.counit_of(H.unit) == 1
    where = None if ok_unit else ("unit",)
    if ok_unit:
        where = _first(lambda i, j: H.counit_of(prods[i][j]) == H.counit[i] * H.counit[j], rng2)
    rep.record("counit_multiplicative", where is None, where)

    Scols = [H.antipode.column(j) for j in range(d)]

    def antipode_law(i):
        X = coprods[i]
        left = H.zero
        right = H.zero
        for a in range(d):
            for b in range(d):
                x = X[a * d + b]
                if x:
                    left = _axpy(left, x, H.multiply(Scols[a], e(b)))
                    right = _axpy(right, x, H.multiply(e(a), Scols[b]))
        target = tuple(H.counit[i] * u for u in H.unit)
        return left == target and right == target

    where = _first(antipode_law, rng1)
    rep.record("antipode", where is None, where)

    rep.record("antipode_invertible", H.antipode.rank() == d, None if H.antipode.rank() == d else ())
    return rep


def _axpy(y, a, x):
    return tuple(yi + a * xi if xi else yi for yi, xi in zip(y, x))


# -- builders ------------------------------------------------------------------------


def group_algebra(table, field: FieldSpec = QQ, name: str = "") -> HopfAlgebra:
    """k[G]: basis the group elements, Delta(g) = g (x) g, eps(g) = 1, S(g) = g^{-1}."""
    table = groups.validate_table(table)
    n = len(table)
    one, z = field.one, field.zero
    mult = [[[one if k == table[i][j] else z for k in range(n)] for j in range(n)] for i in range(n)]
    comult = [[[one if (j == i and k == i) else z for k in range(n)] for j in range(n)] for i in range(n)]
    inv = groups.inverses(table)
    S = Matrix(field, [[one if i == inv[j] else z for j in range(n)] for i in range(n)], n)
    return HopfAlgebra.from_tables(field, mult, unit_vector(field, n, 0), comult, [one] * n, S, name=name or f"k[G{n}]")


def dual_group_algebra(table, field: FieldSpec = QQ, name: str = "") -> HopfAlgebra:
    """k^G: basis the delta functions, structure tensors transposed from k[G]."""
    table = groups.validate_table(table)
    n = len(table)
    one, z = field.one, field.zero
    mult = [[[one if (i == j == k) else z for k in range(n)] for j in range(n)] for i in range(n)]
    comult = [[[one if table[j][k] == i else z for k in range(n)] for j in range(n)] for i in range(n)]
    inv = groups.inverses(table)
    S = Matrix(field, [[one if i == inv[j] else z for j in range(n)] for i in range(n)], n)
    counit = [one if i == 0 else z for i in range(n)]
    return HopfAlgebra.from_tables(field, mult, [one] * n, comult, counit, S, name=name or f"k^G{n}")


def sweedler(field: FieldSpec = QQ) -> HopfAlgebra:
    """Sweedler's 4-dimensional algebra on the basis (1, g, x, gx).

    g^2 = 1, x^2 = 0, xg = -gx, Delta(x) = x (x) 1 + g (x) x.
    """
    d = 4
    F = field
    z = [0] * d

    def v(**kw):
        out = list(z)
        for key, c in kw.items():
            out[{"one": 0, "g": 1, "x": 2, "gx": 3}[key]] = c
        return out

    names = ["one", "g", "x", "gx"]
    table = {
        ("g", "g"): v(one=1), ("g", "x"): v(gx=1), ("g", "gx"): v(x=1),
        ("x", "g"): v(gx=-1), ("x", "x"): v(), ("x", "gx"): v(),
        ("gx", "g"): v(x=-1), ("gx", "x"): v(), ("gx", "gx"): v(),
    }
    mult = []
    for a in names:
        row = []
        for b in names:
            if a == "one":
                row.append(v(**{b: 1}))
            elif b == "one":
                row.append(v(**{a: 1}))
            else:
                row.append(table[(a, b)])
        mult.append(row)

    def tens(*terms):
        m = [[0] * d for _ in range(d)]
        for c, a, b in terms:
            m[names.index(a)][names.index(b)] += c
        return m

    comult = [
        tens((1, "one", "one")),
        tens((1, "g", "g")),
        tens((1, "x", "one"), (1, "g", "x")),
        tens((1, "gx", "g"), (1, "one", "gx")),
    ]
    counit = [1, 1, 0, 0]
    # columns: S(1) = 1, S(g) = g, S(x) = -gx, S(gx) = x
    S = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]
    return HopfAlgebra.from_tables(F, mult, v(one=1), comult, counit, S, name="sweedler")


def trivial_hopf(field: FieldSpec = QQ) -> HopfAlgebra:
    """The one-dimensional Hopf algebra k."""
    return group_algebra(((0,),), field, name="k")


# -- antipode, ideals, quotients ---------------------------------------------------


def antipode_order(H: HopfAlgebra, cap: int | None = None) -> int:
    """Smallest t >= 1 with S^t = id."""
    cap = 4 * H.dim * H.dim if cap is None else cap
    P = H.antipode
    for t in range(1, cap + 1):
        if P.is_identity():
            return t
        P = P @ H.antipode
    raise AntipodeOrderError(f"antipode order exceeds cap {cap}")


@dataclass
class HopfIdealReport:
    left_ideal: bool
    right_ideal: bool
    counit: bool
    antipode: bool
    coideal: bool

    @property
    def ok(self) -> bool:
        return self.left_ideal and self.right_ideal and self.counit and self.antipode and self.coideal

    def to_json(self):
        return {
            "ok": self.ok,
            "left_ideal": self.left_ideal,
            "right_ideal": self.right_ideal,
            "counit": self.counit,
            "antipode": self.antipode,
            "coideal": self.coideal,
        }


def is_hopf_ideal(H: HopfAlgebra, J: Subspace) -> HopfIdealReport:
    """Check J is a two-sided ideal with eps(J) = 0, S(J) in J and Delta(J) in J(x)H + H(x)J."""
    if J.ambient_dim != H.dim:
        raise HopfError(f"subspace of ambient {J.ambient_dim} in algebra of dim {H.dim}")
    e = H.basis_vector
    d = H.dim
    left = all(J.contains(H.multiply(e(i), b)) for i in range(d) for b in J.basis)
    right = all(J.contains(H.multiply(b, e(i))) for i in range(d) for b in J.basis)
    counit = all(not H.counit_of(b) for b in J.basis)
    anti = all(J.contains(H.apply_antipode(b)) for b in J.basis)
    if J.is_zero():
        co = True
    else:
        T = tensor_sum(J)
        co = all(T.contains(H.coproduct(b)) for b in J.basis)
    return HopfIdealReport(left, right, counit, anti, co)


def quotient_hopf(H: HopfAlgebra, J: Subspace, check: bool = True) -> tuple[HopfAlgebra, Matrix]:
    """H/J on the basis of the non-pivot coordinates of J, with the projection matrix."""
    if check:
        report = is_hopf_ideal(H, J)
        if not report.ok:
            raise NotHopfIdealError(f"not a Hopf ideal: {report.to_json()}")
    P = J.quotient_projection()
    comp = J.complement_indices()
    q = len(comp)
    F = H.field
    e = H.basis_vector
    mult = [[P.apply(H.multiply(e(a), e(b))) for b in comp] for a in comp]
    comult = []
    for a in comp:
        m = [[F.zero] * q for _ in range(q)]
        for j, k, c in H.comult_terms[a]:
            pj, pk = P.column(j), P.column(k)
            for s in range(q):
                if pj[s]:
                    for t in range(q):
                        if pk[t]:
                            m[s][t] = m[s][t] + c * pj[s] * pk[t]
        comult.append(m)
    counit = [H.counit[a] for a in comp]
    S = Matrix.from_columns(F, [P.apply(H.antipode.column(a)) for a in comp], q)
    star = None
    if H.star is not None and all(J.contains(H.star.apply(_conj(b))) for b in J.basis):
        star = Matrix.from_columns(F, [P.apply(H.star.column(a)) for a in comp], q)
    Q = HopfAlgebra.from_tables(F, mult, P.apply(H.unit), comult, counit, S, star=star, name=f"{H.name}/J" if H.name else "")
    return Q, P


def _conj(v):
    return tuple(x.conjugate() for x in v)


def is_hopf_map(H: HopfAlgebra, K: HopfAlgebra, p: Matrix) -> bool:
    """True when the K.dim x H.dim matrix p is an algebra and coalgebra map."""
    if p.shape != (K.dim, H.dim):
        return False
    e = H.basis_vector
    d = H.dim
    if p.apply(H.unit) != K.unit:
        return False
    cols = [p.column(i) for i in range(d)]
    for i in range(d):
        for j in range(d):
            if p.apply(H.multiply(e(i), e(j))) != K.multiply(cols[i], cols[j]):
                return False
    for i in range(d):
        if K.counit_of(cols[i]) != H.counit[i]:
            return False
        lhs = K.coproduct(cols[i])
        rhs = list(zero_vector(H.field, K.dim * K.dim))
        for j, k, c in H.comult_terms[i]:
            for s, x in enumerate(cols[j]):
                if x:
                    for t, y in enumerate(cols[k]):
                        if y:
                            rhs[s * K.dim + t] = rhs[s * K.dim + t] + c * x * y
        if tuple(rhs) != lhs:
            return False
    return True


# -- functionals ---------------------------------------------------------------------


@dataclass(frozen=True)
class Functional:
    coeffs: tuple

    def __call__(self, v):
        acc = None
        for a, b in zip(self.coeffs, v):
            if a and b:
                acc = a * b if acc is None else acc + a * b
        return acc if acc is not None else self.coeffs[0] * 0

    def to_json(self):
        return [c.to_json() for c in self.coeffs]


def haar_functional(H: HopfAlgebra) -> Functional:
    """The unique phi with (id (x) phi) Delta(x) = phi(x) 1 and phi(1) = 1."""
    d = H.dim
    F = H.field
    rows = []
    # equation for each (i, j): sum_k comult[i][j][k] phi_k - unit_j phi_i = 0
    for i in range(d):
        for j in range(d):
            row = [F.zero] * d
            for k in range(d):
                c = H.comult[i][j][k]
                if c:
                    row[k] = row[k] + c
            if H.unit[j]:
                row[i] = row[i] - H.unit[j]
            rows.append(tuple(row))
    sols = kernel(Matrix(F, rows, d))
    if sols.is_zero():
        raise HaarError("no invariant functional")
    if sols.dim > 1:
        raise HaarError(f"invariant functionals form a {sols.dim}-dimensional space")
    phi = sols.basis[0]
    at_unit = Functional(phi)(H.unit)
    if not at_unit:
        raise HaarError("invariant functional vanishes on the unit; no normalized Haar functional")
    return Functional(tuple(c / at_unit for c in phi))


def is_left_invariant(H: HopfAlgebra, phi: Functional) -> bool:
    """(id (x) phi) Delta(x) = phi(x) 1 on the basis."""
    for i in range(H.dim):
        out = list(H.zero)
        for j, k, c in H.comult_terms[i]:
            if phi.coeffs[k]:
                out[j] = out[j] + c * phi.coeffs[k]
        if tuple(out) != tuple(phi.coeffs[i] * u for u in H.unit):
            return False
    return True


def is_right_invariant(H: HopfAlgebra, phi: Functional) -> bool:
    """(phi (x) id) Delta(x) = phi(x) 1 on the basis."""
    for i in range(H.dim):
        out = list(H.zero)
        for j, k, c in H.comult_terms[i]:
            if phi.coeffs[j]:
                out[k] = out[k] + c * phi.coeffs[j]
        if tuple(out) != tuple(phi.coeffs[i] * u for u in H.unit):
            return False
    return True


def is_character(H: HopfAlgebra, phi: Functional) -> bool:
    e = H.basis_vector
    if phi(H.unit) != 1:
        return False
    return all(
        phi(H.multiply(e(i), e(j))) == phi.coeffs[i] * phi.coeffs[j] for i in range(H.dim) for j in range(H.dim)
    )


def convolve(H: HopfAlgebra, f: Functional, g: Functional) -> Functional:
    """(f * g)(x) = f(x_(1)) g(x_(2))."""
    out = []
    for i in range(H.dim):
        acc = H.field.zero
        for j, k, c in H.comult_terms[i]:
            if f.coeffs[j] and g.coeffs[k]:
                acc = acc + c * f.coeffs[j] * g.coeffs[k]
        out.append(acc)
    return Functional(tuple(out))


def counit_functional(H: HopfAlgebra) -> Functional:
    return Functional(H.counit)


# -- group-likes and skew-primitives -----------------------------------------------


def grouplike_check(H: HopfAlgebra, v: Sequence) -> bool:
    v = tuple(H.field(x) for x in v)
    if len(v) != H.dim:
        return False
    return H.counit_of(v) == 1 and H.coproduct(v) == tuple(a * b for a in v for b in v)


def skew_primitives(H: HopfAlgebra, g: Sequence) -> Subspace:
    """P_{g,1}(H) = {x : Delta(x) = x (x) 1 + g (x) x}."""
    g = tuple(H.field(x) for x in g)
    if not grouplike_check(H, g):
        raise HopfError("not a group-like element")
    d = H.dim
    cols = []
    for i in range(d):
        x = H.basis_vector(i)
        term = vec_sub(H.coproduct(x), tuple(a * b for a in x for b in H.unit))
        term = vec_sub(term, tuple(a * b for a in g for b in x))
        cols.append(term)
    return kernel(Matrix.from_columns(H.field, cols, d * d))


def inverse_grouplike(H: HopfAlgebra, a: Sequence):
    return H.apply_antipode(tuple(H.field(x) for x in a))

