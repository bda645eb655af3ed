"""Built-in test corpus: small group algebras, their duals, Sweedler's algebra
and a list of representations with the data needed by the group oracle.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import groups
from .hopf import HopfAlgebra, dual_group_algebra, group_algebra, sweedler
from .linalg import Matrix
from .reps import Representation, character, product_rep, representation, verify_rep
from .scalars import QQ, FieldSpec, cyclotomic_field


@dataclass(frozen=True)
class GroupCase:
    name: str
    table: tuple
    field: FieldSpec

    @property
    def order(self) -> int:
        return len(self.table)


@dataclass(frozen=True, eq=False)
class CorpusRep:
    name: str
    rep: Representation
    kind: str  # "group", "dual" or "sweedler"
    group: GroupCase | None = None
    group_mats: tuple | None = None  # pi(g) per group element, for kind == "group"
    unitary: bool = False

    @property
    def algebra(self) -> HopfAlgebra:
        return self.rep.algebra


def _cyclic_field(n):
    return cyclotomic_field(n) if n > 2 else (QQ, -QQ.one)


@lru_cache(maxsize=None)
def group_cases() -> tuple[GroupCase, ...]:
    cases = []
    for n in range(2, 7):
        F, _ = _cyclic_field(n)
        cases.append(GroupCase(f"Z{n}", groups.cyclic_table(n), F))
    K3, _ = cyclotomic_field(3)
    K4, _ = cyclotomic_field(4)
    cases.append(GroupCase("S3", groups.symmetric3_table(), K3))
    cases.append(GroupCase("D4", groups.dihedral4_table(), QQ))
    cases.append(GroupCase("Q8", groups.quaternion_table(), K4))
    return tuple(cases)


def group_case(name: str) -> GroupCase:
    for c in group_cases():
        if c.name == name:
            return c
    raise KeyError(name)


@lru_cache(maxsize=None)
def star_group_algebra(name: str) -> HopfAlgebra:
    """k[G] with gamma* = gamma^{-1}."""
    c = group_case(name)
    H = group_algebra(c.table, c.field, name=f"k[{name}]")
    return H.with_star(H.antipode)


@lru_cache(maxsize=None)
def dual_algebra(name: str) -> HopfAlgebra:
    """k^G with delta_g* = delta_g."""
    c = group_case(name)
    H = dual_group_algebra(c.table, c.field, name=f"k^{name}")
    return H.with_star(Matrix.identity(c.field, H.dim))


def builder_algebras() -> list[HopfAlgebra]:
    out = []
    for c in group_cases():
        out.append(star_group_algebra(c.name))
        out.append(dual_algebra(c.name))
    out.append(sweedler())
    return out


def extend_on_group(table, gens: dict, field: FieldSpec) -> list[Matrix]:
    """Extend generator images {element: matrix} to all elements by closure."""
    n = next(iter(gens.values())).nrows
    mats = {0: Matrix.identity(field, n)}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            for g, M in gens.items():
                y = table[x][g]
                if y not in mats:
                    mats[y] = mats[x] @ M
                    nxt.append(y)
        frontier = nxt
    if len(mats) != len(table):
        raise ValueError("generators do not generate the group")
    return [mats[g] for g in range(len(table))]


def linear_characters(case: GroupCase) -> list[tuple]:
    """All one-dimensional characters with values in the case's field.

    Cyclic groups use powers of a primitive root; the others have
    abelianization of exponent 2 and are searched over sign vectors.
    """
    table = case.table
    n = case.order
    F = case.field
    if case.name.startswith("Z"):
        _, z = _cyclic_field(n)
        return [tuple(z ** (k * g) for g in range(n)) for k in range(n)]
    out = []
    for signs in product((1, -1), repeat=n):
        if signs[0] != 1:
            continue
        if all(signs[table[a][b]] == signs[a] * signs[b] for a in range(n) for b in range(n)):
            out.append(tuple(F(s) for s in signs))
    return out


def _two_dim_irreps(case: GroupCase) -> dict:
    F = case.field
    M = lambda rows: Matrix.from_values(F, rows)  # noqa: E731
    if case.name == "S3":
        w = F.gen
        return {1: M([[w, 0], [0, w * w]]), 3: M([[0, 1], [1, 0]])}
    if case.name == "D4":
        return {1: M([[0, -1], [1, 0]]), 4: M([[1, 0], [0, -1]])}
    if case.name == "Q8":
        i = F.gen
        return {2: M([[i, 0], [0, -i]]), 4: M([[0, -1], [1, 0]])}
    return {}


def _group_rep(case: GroupCase, name: str, mats) -> CorpusRep:
    H = star_group_algebra(case.name)
    rep = representation(H, mats)
    return CorpusRep(name, rep, "group", case, tuple(rep.mats), unitary=True)


@lru_cache(maxsize=None)
def corpus() -> tuple[CorpusRep, ...]:
    """Every representation used by the equivalence and oracle checks."""
    out: list[CorpusRep] = []
    for case in group_cases():
        H = star_group_algebra(case.name)
        chars = linear_characters(case)
        for k, chi in enumerate(chars):
            rep = character(H, chi)
            out.append(CorpusRep(f"{case.name}/chi{k}", rep, "group", case, tuple(rep.mats), unitary=True))
        gens = _two_dim_irreps(case)
        if gens:
            out.append(_group_rep(case, f"{case.name}/irr2", extend_on_group(case.table, gens, case.field)))
        # two-dimensional sums of characters
        for a, b in ((0, 1), (1, len(chars) - 1)) if len(chars) > 2 else ((0, 1),):
            rep = product_rep(character(H, chars[a]), character(H, chars[b]))
            out.append(CorpusRep(f"{case.name}/chi{a}+chi{b}", rep, "group", case, tuple(rep.mats), unitary=True))
    z6 = group_case("Z6")
    chars = linear_characters(z6)
    rep = product_rep(character(star_group_algebra("Z6"), chars[2]), character(star_group_algebra("Z6"), chars[3]))
    out.append(CorpusRep("Z6/chi2+chi3", rep, "group", z6, tuple(rep.mats), unitary=True))
    z4 = group_case("Z4")
    g = Matrix.from_values(z4.field, [[1, 0], [0, -1]])
    out.append(_group_rep(z4, "Z4/diag(1,-1)", extend_on_group(z4.table, {1: g}, z4.field)))
    for name, elems in (("Z3", [1]), ("S3", [1]), ("S3", [3]), ("S3", [1, 3]), ("D4", [4, 5])):
        case = group_case(name)
        D = dual_algebra(name)
        reps = [character(D, [1 if h == g else 0 for h in range(case.order)]) for g in elems]
        rep = reps[0] if len(reps) == 1 else product_rep(*reps)
        label = "+".join(f"ev{g}" for g in elems)
        out.append(CorpusRep(f"dual-{name}/{label}", rep, "dual", unitary=True))
    out.extend(sweedler_reps())
    for c in out:
        if not verify_rep(c.rep).ok:
            raise AssertionError(f"corpus representation {c.name} is invalid")
    return tuple(out)


def sweedler_reps() -> list[CorpusRep]:
    S = sweedler()
    two = representation(S, [[[1, 0], [0, 1]], [[1, 0], [0, -1]], [[0, 1], [0, 0]], [[0, 1], [0, 0]]])
    lower = representation(S, [[[1, 0], [0, 1]], [[-1, 0], [0, 1]], [[0, 0], [1, 0]], [[0, 0], [1, 0]]])
    sign = character(S, [1, -1, 0, 0])
    triv = character(S, [1, 1, 0, 0])
    return [
        CorpusRep("sweedler/rep2", two, "sweedler"),
        CorpusRep("sweedler/rep2-lower", lower, "sweedler"),
        CorpusRep("sweedler/sign", sign, "sweedler"),
        CorpusRep("sweedler/trivial", triv, "sweedler"),
    ]


def sweedler_rep2() -> Representation:
    return sweedler_reps()[0].rep


def group_kernel(entry: CorpusRep) -> list[int]:
    """Brute-force kernel {g : pi(g) = 1} of the underlying group representation."""
    return [g for g, M in enumerate(entry.group_mats) if M.is_identity()]
