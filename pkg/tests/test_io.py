import json

import pytest

from hopfimage import groups
from hopfimage import io as hio
from hopfimage.corpus import builder_algebras, corpus, star_group_algebra
from hopfimage.extensions import subgroup_embedding


def test_algebra_roundtrip(tmp_path):
    for H in builder_algebras():
        path = tmp_path / "a.json"
        hio.write_json(path, H.to_json())
        back = hio.load_algebra(path)
        assert back.same_structure(H) and back.star == H.star


def test_rep_roundtrip(tmp_path):
    for c in corpus()[::5]:
        path = tmp_path / "r.json"
        hio.write_json(path, c.rep.to_json())
        assert hio.load_rep(c.algebra, path) == c.rep


def test_table_roundtrip(tmp_path):
    t = groups.quaternion_table()
    hio.write_json(tmp_path / "t.json", hio.table_to_json(t))
    assert hio.load_table(tmp_path / "t.json") == t
    hio.write_json(tmp_path / "bad.json", {"order": 4, "table": [list(r) for r in t]})
    with pytest.raises(hio.SchemaError) as exc:
        hio.load_table(tmp_path / "bad.json")
    assert exc.value.field == "order"


def test_embedding_file(tmp_path):
    H = star_group_algebra("S3")
    emb = subgroup_embedding(H, groups.symmetric3_table(), [0, 1, 2])
    hio.write_json(tmp_path / "big.json", H.to_json())
    hio.write_json(tmp_path / "small.json", emb.small.to_json())
    hio.write_json(tmp_path / "emb.json", {"inclusion": emb.inclusion.to_json(), "small": "small.json", "big": "big.json"})
    back = hio.load_embedding(tmp_path / "emb.json")
    assert back.basis == emb.basis


def test_schema_field_names(tmp_path):
    H = star_group_algebra("Z2")
    data = H.to_json()
    data["comult"][1] = data["comult"][1][:1]
    with pytest.raises(hio.SchemaError) as exc:
        hio.algebra_from_json(data)
    assert exc.value.field == "comult[1]"
    with pytest.raises(hio.SchemaError) as exc:
        hio.algebra_from_json({"field": {"min_poly": ["0", "1"]}, "dim": 2})
    assert exc.value.field == "mult"
    with pytest.raises(hio.SchemaError) as exc:
        hio.algebra_from_json({"field": {"min_poly": ["0", "-1", "1"]}})
    assert exc.value.field == "field"


def test_canonical_dump():
    assert hio.dumps({"b": 1, "a": [1, 2]}) == json.dumps({"a": [1, 2], "b": 1}, indent=2, sort_keys=True) + "\n"
