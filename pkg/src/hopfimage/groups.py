"""Finite groups as 0-indexed multiplication tables (row 0 is the identity).

Validation is brute force, which is all the tiny corpus groups need.
"""
from __future__ import annotations

from itertools import permutations, product


class GroupTableError(ValueError):
    pass


def validate_table(table) -> tuple[tuple[int, ...], ...]:
    table = tuple(tuple(int(x) for x in row) for row in table)
    n = len(table)
    if n == 0:
        raise GroupTableError("empty group table")
    for i, row in enumerate(table):
        if len(row) != n:
            raise GroupTableError(f"row {i} has length {len(row)}, expected {n}")
        if any(not 0 <= x < n for x in row):
            raise GroupTableError(f"row {i} has entries outside 0..{n - 1}")
    for i in range(n):
        if table[0][i] != i or table[i][0] != i:
            raise GroupTableError("element 0 is not the identity")
    for a, b, c in product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise GroupTableError(f"table is not associative at ({a}, {b}, {c})")
    for a in range(n):
        if 0 not in table[a]:
            raise GroupTableError(f"element {a} has no inverse")
    return table


def inverses(table) -> list[int]:
    return [row.index(0) for row in table]


def element_order(table, g: int) -> int:
    k, x = 1, g
    while x != 0:
        x = table[x][g]
        k += 1
    return k


def generated_subgroup(table, gens) -> list[int]:
    elems = {0}
    frontier = [0]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = table[x][g]
                if y not in elems:
                    elems.add(y)
                    new.append(y)
        frontier = new
    return sorted(elems)


def is_subgroup(table, elems) -> bool:
    s = set(elems)
    return 0 in s and all(table[a][b] in s for a in s for b in s)


def is_normal(table, elems) -> bool:
    s = set(elems)
    inv = inverses(table)
    return is_subgroup(table, elems) and all(table[table[g][n]][inv[g]] in s for g in range(len(table)) for n in s)


def subgroups(table) -> list[list[int]]:
    """All subgroups, found by closing every subset of generators of size <= 2."""
    n = len(table)
    found = {tuple(generated_subgroup(table, [a, b])) for a in range(n) for b in range(n)}
    # the corpus groups are all 2-generated; closing pairs of subgroups covers the rest
    changed = True
    while changed:
        changed = False
        for h, k in list(product(found, repeat=2)):
            s = tuple(generated_subgroup(table, list(h) + list(k)))
            if s not in found:
                found.add(s)
                changed = True
    return sorted((list(s) for s in found), key=lambda s: (len(s), s))


def normal_subgroups(table) -> list[list[int]]:
    return [s for s in subgroups(table) if is_normal(table, s)]


def subgroup_table(table, elems) -> tuple[tuple[int, ...], ...]:
    """Multiplication table of a subgroup, reindexed in the order given (identity first)."""
    elems = list(elems)
    if elems[0] != 0:
        raise GroupTableError("subgroup element list must start with the identity")
    pos = {g: i for i, g in enumerate(elems)}
    try:
        return tuple(tuple(pos[table[a][b]] for b in elems) for a in elems)
    except KeyError as exc:
        raise GroupTableError("elements do not form a subgroup") from exc


def quotient_table(table, normal) -> tuple[list[list[int]], tuple[tuple[int, ...], ...]]:
    """Cosets of a normal subgroup (coset of the identity first) and the quotient table."""
    n = len(table)
    cosets: list[list[int]] = []
    seen = set()
    for g in range(n):
        if g in seen:
            continue
        c = sorted(table[g][h] for h in normal)
        cosets.append(c)
        seen.update(c)
    which = {g: i for i, c in enumerate(cosets) for g in c}
    qt = tuple(tuple(which[table[c[0]][e[0]]] for e in cosets) for c in cosets)
    return cosets, qt


# -- standard tables ----------------------------------------------------------------


def cyclic_table(n: int):
    return tuple(tuple((i + j) % n for j in range(n)) for i in range(n))


def _perm_table(perms):
    index = {p: i for i, p in enumerate(perms)}
    # (a * b)(x) = a(b(x))
    return tuple(tuple(index[tuple(a[b[x]] for x in range(len(a)))] for b in perms) for a in perms)


def symmetric3_table():
    """S3 in the order e, r, r^2, s, rs, r^2 s with r = (0 1 2), s = (1 2)."""
    r = (1, 2, 0)
    s = (0, 2, 1)
    e = (0, 1, 2)

    def mul(a, b):
        return tuple(a[b[x]] for x in range(3))

    r2 = mul(r, r)
    perms = [e, r, r2, s, mul(r, s), mul(r2, s)]
    assert sorted(perms) == sorted(permutations(range(3)))
    return _perm_table(perms)


def dihedral4_table():
    """D4 (order 8) in the order r^k for k < 4, then r^k s for k < 4."""
    r = (1, 2, 3, 0)
    s = (0, 3, 2, 1)
    e = (0, 1, 2, 3)

    def mul(a, b):
        return tuple(a[b[x]] for x in range(4))

    rots = [e]
    for _ in range(3):
        rots.append(mul(r, rots[-1]))
    perms = rots + [mul(x, s) for x in rots]
    return _perm_table(perms)


_QUAT = {
    # unit products: (a, b) -> (sign, c) for a, b in {1, i, j, k}
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}

QUATERNION_ELEMENTS = [(1, "1"), (-1, "1"), (1, "i"), (-1, "i"), (1, "j"), (-1, "j"), (1, "k"), (-1, "k")]


def quaternion_table():
    """Q8 in the order 1, -1, i, -i, j, -j, k, -k."""
    elems = QUATERNION_ELEMENTS
    index = {e: n for n, e in enumerate(elems)}
    rows = []
    for sa, a in elems:
        row = []
        for sb, b in elems:
            s, c = _QUAT[(a, b)]
            row.append(index[(sa * sb * s, c)])
        rows.append(tuple(row))
    return tuple(rows)
