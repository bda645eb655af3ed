"""Exact arithmetic in Q and in simple extensions Q[x]/(p(x)).

A field is described by a monic irreducible polynomial p with rational
coefficients, listed in ascending order (constant term first), and an
optional involution sigma given by the image of the generator.  Elements
are coefficient vectors of length deg(p) over :class:`fractions.Fraction`.

Text encoding of a rational is ``"a/b"`` or ``"a"``; a scalar is encoded as a
list of such strings, one per coefficient.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from numbers import Rational
from typing import Iterable, Sequence

import sympy


class FieldError(ValueError):
    """Invalid field description or field mismatch."""


def parse_rational(text) -> Fraction:
    if isinstance(text, bool):
        raise FieldError(f"not a rational: {text!r}")
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    if isinstance(text, str):
        try:
            return Fraction(text.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"not a rational: {text!r}") from exc
    raise FieldError(f"not a rational: {text!r}")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _poly_mulmod(a, b, reductions, m):
    prod = [Fraction(0)] * (2 * m - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    prod[i + j] += ai * bj
    out = prod[:m]
    for k in range(m, 2 * m - 1):
        c = prod[k]
        if c:
            red = reductions[k - m]
            for t in range(m):
                if red[t]:
                    out[t] += c * red[t]
    return tuple(out)


class FieldSpec:
    """The number field Q[x]/(min_poly) with an optional involution.

    ``min_poly`` holds the rational coefficients of a monic polynomial in
    ascending order, so ``[0, 1]`` is ``x`` (the field Q) and ``[1, 1, 1]`` is
    ``x^2 + x + 1``.  ``conj_image`` gives the coefficients of sigma(x).
    """

    def __init__(self, min_poly: Sequence, conj_image: Sequence | None = None):
        coeffs = tuple(parse_rational(c) for c in min_poly)
        if len(coeffs) < 2:
            raise FieldError("min_poly must have degree >= 1")
        if coeffs[-1] != 1:
            raise FieldError("min_poly must be monic")
        self.min_poly = coeffs
        self.degree = m = len(coeffs) - 1
        if m > 1 and not _is_irreducible(coeffs):
            raise FieldError(f"min_poly {_poly_str(coeffs)} is reducible over Q")
        # x^k mod p for k = m .. 2m-2
        reductions = []
        cur = tuple(-c for c in coeffs[:-1])
        for _ in range(max(m - 1, 0)):
            reductions.append(cur)
            # multiply cur by x and reduce
            shifted = (Fraction(0),) + cur[:-1]
            top = cur[-1]
            cur = tuple(shifted[t] - top * coeffs[t] for t in range(m))
        self._reductions = tuple(reductions)

        self.conj_image = None
        if conj_image is not None:
            img = tuple(parse_rational(c) for c in conj_image)
            if len(img) != m:
                raise FieldError(f"conj_image must have {m} coefficients")
            self.conj_image = img
        self._conj_matrix = self._build_conj_matrix()
        if self.conj_image is not None:
            self._check_involution()

    # -- construction helpers -------------------------------------------------

    def _build_conj_matrix(self):
        m = self.degree
        if self.conj_image is None:
            return None
        powers = [tuple(Fraction(int(t == 0)) for t in range(m))]
        for _ in range(1, m):
            powers.append(_poly_mulmod(powers[-1], self.conj_image, self._reductions, m))
        return tuple(powers)

    def _check_involution(self):
        c = self(self.conj_image)
        # p(c) == 0
        acc = self.zero
        for coeff in reversed(self.min_poly):
            acc = acc * c + coeff
        if acc:
            raise FieldError("conj_image is not a root of min_poly")
        if c.conjugate() != self.gen:
            raise FieldError("conjugation is not an involution")

    # -- identity -------------------------------------------------------------

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self.min_poly == other.min_poly and self._conj_key() == other._conj_key()

    def _conj_key(self):
        return self.conj_image if self.conj_image is not None else self._identity_image()

    def _identity_image(self):
        m = self.degree
        if m == 1:
            return (self.min_poly[0] * -1,)
        return tuple(Fraction(int(t == 1)) for t in range(m))

    def __hash__(self):
        return hash((self.min_poly, self._conj_key()))

    def __repr__(self):
        s = f"FieldSpec({_poly_str(self.min_poly)}"
        if self.conj_image is not None:
            s += f", conj={self(self.conj_image)}"
        return s + ")"

    # -- elements -------------------------------------------------------------

    def __call__(self, value) -> "Scalar":
        """Coerce an int, rational, string or coefficient list into the field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldError("field mismatch")
            return value
        if isinstance(value, (list, tuple)):
            if len(value) != self.degree:
                raise FieldError(f"expected {self.degree} coefficients, got {len(value)}")
            return Scalar(self, tuple(parse_rational(c) for c in value))
        q = parse_rational(value)
        return Scalar(self, (q,) + (Fraction(0),) * (self.degree - 1))

    @cached_property
    def zero(self) -> "Scalar":
        return Scalar(self, (Fraction(0),) * self.degree)

    @cached_property
    def one(self) -> "Scalar":
        return self(1)

    @cached_property
    def gen(self) -> "Scalar":
        """The class of x (for degree 1 this is the rational root of p)."""
        if self.degree == 1:
            return self(-self.min_poly[0])
        return Scalar(self, tuple(Fraction(int(t == 1)) for t in range(self.degree)))

    @property
    def has_involution(self) -> bool:
        return self.conj_image is not None

    def fixed_field_is_rational(self) -> bool:
        """True when the sigma-fixed subfield is Q, so signs of fixed elements are decidable."""
        if self.degree == 1:
            return True
        if self.conj_image is None:
            return False
        # fixed space = kernel of (sigma - id) on coefficient vectors
        m = self.degree
        rows = [[self._conj_matrix[j][i] - (1 if i == j else 0) for j in range(m)] for i in range(m)]
        rank = _rank_fractions(rows)
        return m - rank == 1

    def to_json(self) -> dict:
        out = {"min_poly": [format_rational(c) for c in self.min_poly]}
        if self.conj_image is not None:
            out["conj_image"] = [format_rational(c) for c in self.conj_image]
        return out

    @classmethod
    def from_json(cls, data) -> "FieldSpec":
        if not isinstance(data, dict) or "min_poly" not in data:
            raise FieldError("field: expected an object with 'min_poly'")
        return cls(data["min_poly"], data.get("conj_image"))


class Scalar:
    """An element of a :class:`FieldSpec`; immutable and hashable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldError("field mismatch")
            return other.coeffs
        if isinstance(other, (int, Rational)):
            return (Fraction(other),) + (Fraction(0),) * (self.field.degree - 1)
        return None

    def __add__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return Scalar(self.field, tuple(x + y for x, y in zip(self.coeffs, b)))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return Scalar(self.field, tuple(x - y for x, y in zip(self.coeffs, b)))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return Scalar(self.field, tuple(y - x for x, y in zip(self.coeffs, b)))

    def __neg__(self):
        return Scalar(self.field, tuple(-x for x in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldError("field mismatch")
            m = self.field.degree
            if m == 1:
                return Scalar(self.field, (self.coeffs[0] * other.coeffs[0],))
            return Scalar(self.field, _poly_mulmod(self.coeffs, other.coeffs, self.field._reductions, m))
        if isinstance(other, (int, Rational)):
            q = Fraction(other)
            return Scalar(self.field, tuple(x * q for x in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("division by zero in field")
        m = self.field.degree
        if m == 1:
            return Scalar(self.field, (1 / self.coeffs[0],))
        inv = _poly_inverse(self.coeffs, self.field.min_poly)
        return Scalar(self.field, inv)

    def __truediv__(self, other):
        if isinstance(other, Scalar):
            return self * other.inverse()
        if isinstance(other, (int, Rational)):
            if other == 0:
                raise ZeroDivisionError("division by zero in field")
            q = Fraction(other)
            return Scalar(self.field, tuple(x / q for x in self.coeffs))
        return NotImplemented

    def __rtruediv__(self, other):
        return self.field(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "Scalar":
        cm = self.field._conj_matrix
        if cm is None:
            return self
        m = self.field.degree
        out = [Fraction(0)] * m
        for k, a in enumerate(self.coeffs):
            if a:
                row = cm[k]
                for t in range(m):
                    if row[t]:
                        out[t] += a * row[t]
        return Scalar(self.field, tuple(out))

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.coeffs == other.coeffs and (other.field is self.field or other.field == self.field)
        b = self._coerce(other)
        if b is None:
            return NotImplemented
        return self.coeffs == b

    def __hash__(self):
        if all(c == 0 for c in self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_rational(self) -> Fraction:
        if not self.is_rational():
            raise FieldError(f"{self} is not rational")
        return self.coeffs[0]

    def to_json(self) -> list[str]:
        return [format_rational(c) for c in self.coeffs]

    def __repr__(self):
        if self.field.degree == 1:
            return format_rational(self.coeffs[0])
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if k == 0:
                terms.append(format_rational(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{format_rational(c)}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") if terms else "0"


# -- polynomial helpers over Q ---------------------------------------------------


def _trim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_divmod(a, b):
    a, b = _trim(a), _trim(b)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for i, bi in enumerate(b):
            a[i + shift] -= c * bi
        a = _trim(a)
    return q, a


def _poly_inverse(a, p):
    """Inverse of a modulo p via the extended Euclidean algorithm."""
    m = len(p) - 1
    r0, r1 = list(p), _trim(a)
    s0, s1 = [Fraction(0)], [Fraction(1)]
    while r1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s_next = _poly_sub(s0, _poly_mul(q, s1))
        s0, s1 = s1, s_next
    # r0 is a nonzero constant when gcd(a, p) = 1
    if len(r0) != 1:
        raise ZeroDivisionError("element not invertible (min_poly not irreducible?)")
    inv = [c / r0[0] for c in s0]
    _, inv = _poly_divmod(inv, list(p))
    inv = inv + [Fraction(0)] * (m - len(inv))
    return tuple(inv)


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _poly_str(coeffs) -> str:
    x = sympy.Symbol("x")
    return str(sympy.Poly(list(reversed(coeffs)), x, domain=sympy.QQ).as_expr())


def _is_irreducible(coeffs) -> bool:
    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)], x, domain=sympy.QQ)
    return bool(poly.is_irreducible)


def _rank_fractions(rows) -> int:
    rows = [list(r) for r in rows]
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(len(rows)):
            if r != rank and rows[r][c] != 0:
                f = rows[r][c] / rows[rank][c]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


# -- standard fields ------------------------------------------------------------

QQ = FieldSpec([0, 1])


def quadratic_field(d: int) -> FieldSpec:
    """Q(sqrt(d)) with sigma the Galois conjugation sqrt(d) -> -sqrt(d)."""
    return FieldSpec([-d, 0, 1], [0, -1])


def cyclotomic_field(n: int) -> tuple[FieldSpec, Scalar]:
    """Return ``(K, zeta)`` with zeta a primitive n-th root of unity.

    sigma is complex conjugation zeta -> zeta^{-1}.  For ``n`` twice an odd
    number the smaller field Q(zeta_{n/2}) is used (so n = 6 gives Q(omega)).
    """
    if n < 1:
        raise FieldError("n must be positive")
    if n == 1:
        return QQ, QQ.one
    if n == 2:
        return QQ, -QQ.one
    if n % 4 == 2:
        K, z = cyclotomic_field(n // 2)
        return K, -(z ** ((n // 2 + 1) // 2))
    x = sympy.Symbol("x")
    phi = sympy.Poly(sympy.cyclotomic_poly(n, x), x)
    coeffs = [int(c) for c in reversed(phi.all_coeffs())]
    m = len(coeffs) - 1
    # conj(zeta) = zeta^(n-1), reduced modulo phi
    plain = FieldSpec(coeffs)
    conj = plain.gen ** (n - 1)
    K = FieldSpec(coeffs, list(conj.coeffs))
    return K, K.gen if m > 0 else K.one


def scalars(field: FieldSpec, values: Iterable) -> tuple[Scalar, ...]:
    return tuple(field(v) for v in values)
