"""Dense exact matrices and subspaces over a :class:`FieldSpec`.

Vectors are plain tuples of :class:`Scalar`.  A :class:`Subspace` always
stores its basis in reduced row-echelon form, so two subspaces are equal
exactly when their basis tuples are equal.

Tensor index convention, fixed everywhere: the coordinate of ``e_i (x) e_j``
in a tensor product of spaces of dimensions ``m`` and ``n`` is ``i*n + j``.

Set ``HOPFIMAGE_CHECK=1`` in the environment to verify every intersection,
sum and preimage by membership checks.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .scalars import FieldSpec

DEBUG_CHECKS = os.environ.get("HOPFIMAGE_CHECK", "") not in ("", "0")

Vector = tuple


class DimensionError(ValueError):
    pass


# -- vectors ----------------------------------------------------------------------


def zero_vector(field: FieldSpec, n: int) -> Vector:
    z = field.zero
    return (z,) * n


def unit_vector(field: FieldSpec, n: int, i: int) -> Vector:
    z = field.zero
    return tuple(field.one if k == i else z for k in range(n))


def vec_add(u, v) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c, v) -> Vector:
    return tuple(c * a for a in v)


def vec_is_zero(v) -> bool:
    return not any(v)


def vec_conj(v) -> Vector:
    return tuple(a.conjugate() for a in v)


def dot(u, v):
    it = iter(zip(u, v))
    a, b = next(it)
    acc = a * b
    for a, b in it:
        if a and b:
            acc = acc + a * b
    return acc


def linear_combination(field: FieldSpec, coeffs, vectors, n: int) -> Vector:
    out = list(zero_vector(field, n))
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for k, x in enumerate(v):
            if x:
                out[k] = out[k] + c * x
    return tuple(out)


def tensor_vectors(u, v) -> Vector:
    return tuple(a * b for a in u for b in v)


# -- matrices ---------------------------------------------------------------------


class Matrix:
    """Immutable dense matrix stored as a tuple of row tuples."""

    __slots__ = ("field", "nrows", "ncols", "rows")

    def __init__(self, field: FieldSpec, rows: Iterable[Sequence], ncols: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        if ncols is None:
            if not rows:
                raise DimensionError("cannot infer column count of an empty matrix")
            ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise DimensionError("ragged matrix rows")
        self.field = field
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def zeros(cls, field, nrows, ncols) -> "Matrix":
        z = field.zero
        return cls(field, [(z,) * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, field, n) -> "Matrix":
        return cls(field, [unit_vector(field, n, i) for i in range(n)], n)

    @classmethod
    def from_columns(cls, field, columns: Sequence[Sequence], nrows: int) -> "Matrix":
        ncols = len(columns)
        return cls(field, [tuple(columns[j][i] for j in range(ncols)) for i in range(nrows)], ncols)

    @classmethod
    def from_values(cls, field, values) -> "Matrix":
        return cls(field, [[field(x) for x in row] for row in values])

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, idx):
        i, j = idx
        return self.rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash((self.shape, self.rows))

    def __repr__(self):
        body = "; ".join(" ".join(repr(x) for x in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"

    def column(self, j) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    @property
    def T(self) -> "Matrix":
        if not self.nrows:
            return Matrix(self.field, [()] * self.ncols, 0)
        return Matrix(self.field, list(zip(*self.rows)), self.nrows)

    def conj(self) -> "Matrix":
        return Matrix(self.field, [vec_conj(r) for r in self.rows], self.ncols)

    @property
    def H(self) -> "Matrix":
        """sigma-conjugate transpose."""
        return self.conj().T

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} + {other.shape}")
        return Matrix(self.field, [vec_add(a, b) for a, b in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} - {other.shape}")
        return Matrix(self.field, [vec_sub(a, b) for a, b in zip(self.rows, other.rows)], self.ncols)

    def scale(self, c) -> "Matrix":
        return Matrix(self.field, [vec_scale(c, r) for r in self.rows], self.ncols)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionError(f"shape mismatch {self.shape} @ {other.shape}")
        z = self.field.zero
        n = other.ncols
        out = []
        orows = other.rows
        for row in self.rows:
            acc = [z] * n
            for k, a in enumerate(row):
                if not a:
                    continue
                brow = orows[k]
                for j in range(n):
                    b = brow[j]
                    if b:
                        acc[j] = acc[j] + a * b
            out.append(tuple(acc))
        return Matrix(self.field, out, n)

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise DimensionError(f"vector of length {len(v)} for matrix {self.shape}")
        z = self.field.zero
        nz = [(k, x) for k, x in enumerate(v) if x]
        out = []
        for row in self.rows:
            acc = z
            for k, x in nz:
                a = row[k]
                if a:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def kron(self, other: "Matrix") -> "Matrix":
        out = []
        z = self.field.zero
        for ra in self.rows:
            for rb in other.rows:
                out.append(tuple((a * b if a and b else z) for a in ra for b in rb))
        return Matrix(self.field, out, self.ncols * other.ncols)

    def flatten(self) -> Vector:
        return tuple(x for r in self.rows for x in r)

    def is_zero(self) -> bool:
        return not any(any(r) for r in self.rows)

    def is_identity(self) -> bool:
        return self.nrows == self.ncols and all(
            (x == 1) if i == j else (not x) for i, r in enumerate(self.rows) for j, x in enumerate(r)
        )

    def rank(self) -> int:
        return len(_rref(self.rows, self.ncols)[0])

    def inverse(self) -> "Matrix":
        n = self.nrows
        if n != self.ncols:
            raise DimensionError("inverse of a non-square matrix")
        aug = [tuple(r) + unit_vector(self.field, n, i) for i, r in enumerate(self.rows)]
        red, pivots = _rref(aug, 2 * n)
        if len(red) < n or pivots[n - 1] >= n:
            raise ZeroDivisionError("singular matrix")
        return Matrix(self.field, [r[n:] for r in red], n)

    def pow(self, k: int) -> "Matrix":
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def to_json(self):
        return [[x.to_json() for x in r] for r in self.rows]


def block_diag(field: FieldSpec, blocks: Sequence[Matrix]) -> Matrix:
    n = sum(b.nrows for b in blocks)
    m = sum(b.ncols for b in blocks)
    z = field.zero
    rows = []
    col = 0
    for b in blocks:
        for r in b.rows:
            rows.append((z,) * col + tuple(r) + (z,) * (m - col - b.ncols))
        col += b.ncols
    return Matrix(field, rows, m) if n else Matrix(field, [], m)


# -- elimination ------------------------------------------------------------------


def _rref(rows, ncols):
    """Gauss-Jordan elimination with first-nonzero pivoting.

    Returns the nonzero rows of the reduced row-echelon form and their pivot columns.
    """
    work = [list(r) for r in rows if any(r)]
    pivots = []
    rank = 0
    for c in range(ncols):
        piv = None
        for r in range(rank, len(work)):
            if work[r][c]:
                piv = r
                break
        if piv is None:
            continue
        work[rank], work[piv] = work[piv], work[rank]
        prow = work[rank]
        inv = prow[c].inverse()
        if prow[c] != 1:
            prow = [x * inv if x else x for x in prow]
            work[rank] = prow
        nz = [(j, prow[j]) for j in range(c, ncols) if prow[j]]
        for r in range(len(work)):
            if r == rank:
                continue
            f = work[r][c]
            if f:
                row = work[r]
                for j, x in nz:
                    row[j] = row[j] - f * x
        pivots.append(c)
        rank += 1
        if rank == len(work):
            break
    return [tuple(r) for r in work[:rank]], pivots


# -- subspaces --------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of ``field^ambient_dim`` with a canonical (RREF) basis."""

    field: FieldSpec
    ambient_dim: int
    basis: tuple

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    @property
    def pivots(self) -> tuple:
        return tuple(next(j for j, x in enumerate(r) if x) for r in self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return len(self.basis) == self.ambient_dim

    def reduce(self, v) -> Vector:
        """Canonical representative of v modulo this subspace (zero at pivot columns)."""
        v = list(v)
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                for j, x in enumerate(row):
                    if x:
                        v[j] = v[j] - c * x
        return tuple(v)

    def contains(self, v) -> bool:
        if len(v) != self.ambient_dim:
            raise DimensionError("vector length does not match ambient dimension")
        return vec_is_zero(self.reduce(v))

    def __contains__(self, v):
        return self.contains(v)

    def issubset(self, other: "Subspace") -> bool:
        _same_ambient(self, other)
        return all(other.contains(b) for b in self.basis)

    __le__ = issubset

    def complement_indices(self) -> tuple:
        piv = set(self.pivots)
        return tuple(j for j in range(self.ambient_dim) if j not in piv)

    def quotient_projection(self) -> Matrix:
        """Matrix of V -> V/self in the coordinates of the non-pivot columns."""
        comp = self.complement_indices()
        pos = {c: i for i, c in enumerate(comp)}
        z, one = self.field.zero, self.field.one
        cols = []
        piv_row = dict(zip(self.pivots, self.basis))
        for j in range(self.ambient_dim):
            if j in pos:
                cols.append(tuple(one if i == pos[j] else z for i in range(len(comp))))
            else:
                row = piv_row[j]
                cols.append(tuple(-row[c] for c in comp))
        return Matrix.from_columns(self.field, cols, len(comp)) if comp else Matrix(self.field, [], self.ambient_dim)

    def annihilator(self) -> "Subspace":
        """{y : <b, y> = 0 for every basis vector b} under the bilinear dot product."""
        if not self.basis:
            return full_space(self.field, self.ambient_dim)
        return _kernel_rows(self.field, self.basis, self.ambient_dim)

    def basis_matrix(self) -> Matrix:
        """Matrix whose columns are the basis vectors."""
        return Matrix.from_columns(self.field, self.basis, self.ambient_dim)

    def to_json(self):
        return {"ambient_dim": self.ambient_dim, "basis": [[x.to_json() for x in v] for v in self.basis]}

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def _same_ambient(u: Subspace, w: Subspace):
    if u.ambient_dim != w.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {u.ambient_dim} vs {w.ambient_dim}")


def rref_basis(field: FieldSpec, vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    vectors = [tuple(v) for v in vectors]
    for v in vectors:
        if len(v) != ambient_dim:
            raise DimensionError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
    red, _ = _rref(vectors, ambient_dim)
    return Subspace(field, ambient_dim, tuple(red))


def zero_space(field: FieldSpec, n: int) -> Subspace:
    return Subspace(field, n, ())


def full_space(field: FieldSpec, n: int) -> Subspace:
    return Subspace(field, n, tuple(unit_vector(field, n, i) for i in range(n)))


def _kernel_rows(field, rows, ncols) -> Subspace:
    red, pivots = _rref(rows, ncols)
    pivset = set(pivots)
    z, one = field.zero, field.one
    vecs = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [z] * ncols
        v[f] = one
        for row, p in zip(red, pivots):
            if row[f]:
                v[p] = -row[f]
        vecs.append(tuple(v))
    # the vectors above are already independent; rref gives the canonical form
    return rref_basis(field, vecs, ncols)


def kernel(M: Matrix) -> Subspace:
    """Null space {v : M v = 0}."""
    if M.nrows == 0:
        return full_space(M.field, M.ncols)
    return _kernel_rows(M.field, M.rows, M.ncols)


def image(M: Matrix, U: Subspace | None = None) -> Subspace:
    """Column space of M, or M(U) when U is given."""
    if U is None:
        return rref_basis(M.field, M.columns(), M.nrows)
    if U.ambient_dim != M.ncols:
        raise DimensionError("subspace does not live in the source of the matrix")
    return rref_basis(M.field, [M.apply(b) for b in U.basis], M.nrows)


def subspace_sum(U: Subspace, W: Subspace) -> Subspace:
    _same_ambient(U, W)
    if not W.basis:
        return U
    if not U.basis:
        return W
    out = rref_basis(U.field, U.basis + W.basis, U.ambient_dim)
    if DEBUG_CHECKS:
        assert all(out.contains(b) for b in U.basis + W.basis)
    return out


def subspace_intersect(U: Subspace, W: Subspace) -> Subspace:
    _same_ambient(U, W)
    if U.is_zero() or W.is_full():
        return U
    if W.is_zero() or U.is_full():
        return W
    if U == W:
        return U
    rows = U.annihilator().basis + W.annihilator().basis
    out = _kernel_rows(U.field, rows, U.ambient_dim)
    if DEBUG_CHECKS:
        assert all(U.contains(b) and W.contains(b) for b in out.basis)
    return out


def intersect_all(spaces: Iterable[Subspace]) -> Subspace:
    it = iter(spaces)
    acc = next(it)
    for s in it:
        acc = subspace_intersect(acc, s)
        if acc.is_zero():
            break
    return acc


def preimage(M: Matrix, W: Subspace) -> Subspace:
    """{v : M v in W}."""
    if M.nrows != W.ambient_dim:
        raise DimensionError(f"matrix with {M.nrows} rows against subspace of ambient {W.ambient_dim}")
    if W.is_full():
        return full_space(M.field, M.ncols)
    if W.is_zero():
        out = kernel(M)
    else:
        ann = Matrix(M.field, W.annihilator().basis, M.nrows)
        out = kernel(ann @ M)
    if DEBUG_CHECKS:
        assert all(W.contains(M.apply(b)) for b in out.basis)
    return out


def tensor_sum(J: Subspace) -> Subspace:
    """J (x) V + V (x) J inside V (x) V, where V is the ambient space of J."""
    d = J.ambient_dim
    F = J.field
    units = [unit_vector(F, d, k) for k in range(d)]
    vecs = [tensor_vectors(j, u) for j in J.basis for u in units]
    vecs += [tensor_vectors(u, j) for u in units for j in J.basis]
    return rref_basis(F, vecs, d * d)


def left_inverse(M: Matrix) -> Matrix:
    """L with L @ M = I for M of full column rank."""
    red, pivots = _rref(M.T.rows, M.nrows)
    if len(pivots) != M.ncols:
        raise DimensionError("matrix does not have full column rank")
    B = Matrix(M.field, [M.rows[p] for p in pivots], M.ncols)
    Binv = B.inverse()
    z = M.field.zero
    cols = []
    pos = {p: t for t, p in enumerate(pivots)}
    for r in range(M.nrows):
        cols.append(Binv.column(pos[r]) if r in pos else (z,) * M.ncols)
    return Matrix.from_columns(M.field, cols, M.ncols)
