"""JSON files for algebras, group tables, representations, subspaces,
embeddings and forms.  Every scalar uses the coefficient-list encoding of
:mod:`hopfimage.scalars`; a bare rational string is accepted as shorthand.
"""
from __future__ import annotations

import json
from pathlib import Path

from .extensions import SubalgebraEmbedding, embedding
from .groups import GroupTableError, validate_table
from .hopf import HopfAlgebra
from .linalg import Matrix, Subspace, rref_basis
from .reps import Representation
from .scalars import FieldError, FieldSpec


class SchemaError(ValueError):
    """A file does not match its schema; ``field`` names the offending key."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def read_json(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(str(path), f"invalid JSON ({exc})") from exc
    except OSError as exc:
        raise SchemaError(str(path), f"cannot read file ({exc.strerror})") from exc


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"


def write_json(path, obj):
    Path(path).write_text(dumps(obj), encoding="utf-8")


def _require(data, key, where):
    if not isinstance(data, dict):
        raise SchemaError(where or "<root>", "expected an object")
    if key not in data:
        raise SchemaError(f"{where}.{key}" if where else key, "missing")
    return data[key]


def _scalar(F: FieldSpec, raw, where):
    try:
        return F(raw)
    except (FieldError, ValueError, TypeError, ZeroDivisionError) as exc:
        raise SchemaError(where, f"bad scalar {raw!r} ({exc})") from exc


def _vector(F, raw, n, where):
    if not isinstance(raw, list) or len(raw) != n:
        raise SchemaError(where, f"expected a list of {n} scalars")
    return tuple(_scalar(F, x, f"{where}[{i}]") for i, x in enumerate(raw))


def _matrix(F, raw, nrows, ncols, where) -> Matrix:
    if not isinstance(raw, list) or len(raw) != nrows:
        raise SchemaError(where, f"expected {nrows} rows")
    return Matrix(F, [_vector(F, r, ncols, f"{where}[{i}]") for i, r in enumerate(raw)], ncols)


def _rows(raw, d, where):
    if not isinstance(raw, list) or len(raw) != d:
        raise SchemaError(where, f"expected {d} entries")
    return raw


def _tensor3(F, raw, d, where):
    out = []
    for i, block in enumerate(_rows(raw, d, where)):
        rows = _rows(block, d, f"{where}[{i}]")
        out.append([list(_vector(F, v, d, f"{where}[{i}][{j}]")) for j, v in enumerate(rows)])
    return out


def _dim(raw, where) -> int:
    if not isinstance(raw, int) or isinstance(raw, bool) or raw < 0:
        raise SchemaError(where, "expected a non-negative integer")
    return raw


def field_from_json(data) -> FieldSpec:
    if not isinstance(data, dict):
        raise SchemaError("field", "expected an object")
    raw = _require(data, "min_poly", "field")
    try:
        return FieldSpec(raw, data.get("conj_image"))
    except (FieldError, ValueError, TypeError) as exc:
        raise SchemaError("field", str(exc)) from exc


def algebra_from_json(data) -> HopfAlgebra:
    F = field_from_json(_require(data, "field", ""))
    d = _dim(_require(data, "dim", ""), "dim")
    if d < 1:
        raise SchemaError("dim", "must be at least 1")
    mult = _tensor3(F, _require(data, "mult", ""), d, "mult")
    unit = _vector(F, _require(data, "unit", ""), d, "unit")
    comult = _tensor3(F, _require(data, "comult", ""), d, "comult")
    counit = _vector(F, _require(data, "counit", ""), d, "counit")
    S = _matrix(F, _require(data, "antipode", ""), d, d, "antipode")
    star = _matrix(F, data["star"], d, d, "star") if data.get("star") is not None else None
    return HopfAlgebra.from_tables(F, mult, unit, comult, counit, S, star, name=str(data.get("name", "")))


def load_algebra(path) -> HopfAlgebra:
    return algebra_from_json(read_json(path))


def table_from_json(data):
    n = _dim(_require(data, "order", ""), "order")
    table = _require(data, "table", "")
    try:
        table = validate_table(table)
    except GroupTableError as exc:
        raise SchemaError("table", str(exc)) from exc
    if len(table) != n:
        raise SchemaError("order", f"table has {len(table)} rows, order says {n}")
    return table


def table_to_json(table) -> dict:
    return {"order": len(table), "table": [list(r) for r in table]}


def load_table(path):
    return table_from_json(read_json(path))


def rep_from_json(H: HopfAlgebra, data) -> Representation:
    n = _dim(_require(data, "dim", ""), "dim")
    mats = _require(data, "matrices", "")
    if not isinstance(mats, list) or len(mats) != H.dim:
        raise SchemaError("matrices", f"expected {H.dim} matrices")
    return Representation(H, n, tuple(_matrix(H.field, m, n, n, f"matrices[{i}]") for i, m in enumerate(mats)))


def load_rep(H: HopfAlgebra, path) -> Representation:
    return rep_from_json(H, read_json(path))


def subspace_from_json(F: FieldSpec, data, ambient: int | None = None) -> Subspace:
    n = _dim(_require(data, "ambient_dim", ""), "ambient_dim")
    if ambient is not None and n != ambient:
        raise SchemaError("ambient_dim", f"expected {ambient}, got {n}")
    basis = _require(data, "basis", "")
    if not isinstance(basis, list):
        raise SchemaError("basis", "expected a list of vectors")
    return rref_basis(F, [_vector(F, v, n, f"basis[{i}]") for i, v in enumerate(basis)], n)


def load_subspace(F: FieldSpec, path, ambient: int | None = None) -> Subspace:
    return subspace_from_json(F, read_json(path), ambient)


def embedding_from_json(data, base: Path, big: HopfAlgebra | None = None) -> SubalgebraEmbedding:
    """{"inclusion": d x a matrix, "small": path, "big": path?}; paths are relative to the file."""
    small_ref = _require(data, "small", "")
    small = algebra_from_json(small_ref) if isinstance(small_ref, dict) else load_algebra(base / small_ref)
    if big is None:
        big_ref = _require(data, "big", "")
        big = algebra_from_json(big_ref) if isinstance(big_ref, dict) else load_algebra(base / big_ref)
    inc = _matrix(big.field, _require(data, "inclusion", ""), big.dim, small.dim, "inclusion")
    return embedding(big, small, inc)


def load_embedding(path, big: HopfAlgebra | None = None) -> SubalgebraEmbedding:
    path = Path(path)
    return embedding_from_json(read_json(path), path.parent, big)


def form_from_json(F: FieldSpec, data, n: int) -> Matrix:
    """A form file is either a bare n x n array or {"gram": [...]}."""
    raw = data["gram"] if isinstance(data, dict) and "gram" in data else data
    return _matrix(F, raw, n, n, "gram")


def vector_from_json(F: FieldSpec, data, n: int, where: str = "vector"):
    return _vector(F, data, n, where)
