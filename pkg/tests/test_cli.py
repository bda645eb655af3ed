import io as stdio
import json

import pytest

from hopfimage import groups
from hopfimage import io as hio
from hopfimage.cli import run
from hopfimage.corpus import star_group_algebra, sweedler_rep2
from hopfimage.extensions import plus_ideal, subgroup_embedding
from hopfimage.hopf import quotient_hopf, sweedler
from hopfimage.reps import character
from hopfimage.scalars import cyclotomic_field


def call(*argv):
    buf = stdio.StringIO()
    code = run([str(a) for a in argv], stdout=buf)
    text = buf.getvalue()
    return code, json.loads(text), text


@pytest.fixture
def files(tmp_path):
    S3 = star_group_algebra("S3")
    hio.write_json(tmp_path / "s3.json", S3.to_json())
    hio.write_json(tmp_path / "sign.json", character(S3, [1, 1, 1, -1, -1, -1]).to_json())
    hio.write_json(tmp_path / "sweedler.json", sweedler().to_json())
    hio.write_json(tmp_path / "rep2d.json", sweedler_rep2().to_json())
    emb = subgroup_embedding(S3, groups.symmetric3_table(), [0, 1, 2])
    hio.write_json(tmp_path / "a3.json", emb.small.to_json())
    hio.write_json(tmp_path / "emb.json", {"inclusion": emb.inclusion.to_json(), "small": "a3.json"})
    _, w = cyclotomic_field(3)
    hio.write_json(tmp_path / "omega.json", character(emb.small, [1, w, w * w]).to_json())
    return tmp_path


def test_image_s3_sign(files):
    code, rep, _ = call("image", files / "s3.json", files / "sign.json", "--alg", "fixpoint")
    assert code == 0 and rep["result"]["ideal_dim"] == 4 and rep["result"]["inner_faithful"] is False
    code, words, _ = call("image", files / "s3.json", files / "sign.json", "--alg", "words")
    assert words["result"]["ideal"] == rep["result"]["ideal"] and words["result"]["stabilized"]


def test_inner_faithful_sweedler(files):
    code, rep, _ = call("inner-faithful", files / "sweedler.json", files / "rep2d.json")
    assert code == 0 and rep["result"]["inner_faithful"] is True
    code, _, _ = call("inner-faithful", files / "s3.json", files / "sign.json")
    assert code == 1


def test_check_broken(files):
    data = json.loads((files / "sweedler.json").read_text())
    data["mult"][2][1][3] = ["1"]
    hio.write_json(files / "broken.json", data)
    code, rep, _ = call("check", files / "broken.json")
    assert code == 1 and rep["result"]["failed"]
    code, rep, _ = call("check", files / "sweedler.json")
    assert code == 0


def test_schema_errors_exit_2(files):
    data = json.loads((files / "sweedler.json").read_text())
    del data["counit"]
    hio.write_json(files / "bad.json", data)
    code, rep, _ = call("check", files / "bad.json")
    assert code == 2 and "counit" in rep["result"]["message"]
    data = json.loads((files / "sweedler.json").read_text())
    data["antipode"][0][0] = ["x"]
    hio.write_json(files / "bad2.json", data)
    code, rep, _ = call("check", files / "bad2.json")
    assert code == 2 and "antipode[0][0]" in rep["result"]["message"]
    code, rep, _ = call("check", files / "missing.json")
    assert code == 2
    # argparse usage errors print usage on stderr only
    assert run(["no-such-command"], stdout=stdio.StringIO()) == 2


def test_deterministic_reports(files):
    a = call("image", files / "s3.json", files / "sign.json")[2]
    b = call("image", files / "s3.json", files / "sign.json")[2]
    assert a == b
    rep = json.loads(a)
    assert rep["tool_version"] and len(rep["input_sha256"]) == 64


def test_gen(files):
    hio.write_json(files / "z3.json", hio.table_to_json(groups.cyclic_table(3)))
    code, rep, _ = call("gen", "group-algebra", "--table", files / "z3.json", "--cyclotomic", "3", "--star")
    assert code == 0 and rep["result"]["dim"] == 3 and "star" in rep["result"]
    code, rep, _ = call("gen", "dual-group-algebra", "--table", files / "z3.json", "--out", files / "dz3.json")
    assert code == 0 and call("check", files / "dz3.json")[0] == 0
    code, rep, _ = call("gen", "sweedler")
    assert code == 0 and rep["result"]["dim"] == 4
    hio.write_json(files / "nonassoc.json", {"order": 3, "table": [[0, 1, 2], [1, 0, 0], [2, 2, 0]]})
    assert call("gen", "group-algebra", "--table", files / "nonassoc.json")[0] == 2


def test_corpus_files_words_agree(tmp_path):
    code, rep, _ = call("gen", "corpus", "--out", tmp_path)
    assert code == 0 and rep["result"]["representations"] >= 25
    index = json.loads((tmp_path / "index.json").read_text())
    for rep_file, alg_file in index.items():
        _, a, _ = call("image", tmp_path / alg_file, tmp_path / rep_file, "--alg", "fixpoint")
        _, b, _ = call("image", tmp_path / alg_file, tmp_path / rep_file, "--alg", "words")
        assert a["result"]["ideal"] == b["result"]["ideal"], rep_file


def test_rep_check(files):
    assert call("rep-check", files / "sweedler.json", files / "rep2d.json")[0] == 0
    bad = json.loads((files / "rep2d.json").read_text())
    bad["matrices"][2] = [["0", "0"], ["1", "0"]]
    hio.write_json(files / "bad_rep.json", bad)
    assert call("rep-check", files / "sweedler.json", files / "bad_rep.json")[0] == 1


def test_quotient(files):
    S3 = star_group_algebra("S3")
    I = plus_ideal(subgroup_embedding(S3, groups.symmetric3_table(), [0, 1, 2]))
    hio.write_json(files / "ideal.json", I.to_json())
    code, rep, _ = call("quotient", files / "s3.json", "--ideal", files / "ideal.json")
    assert code == 0 and rep["result"]["quotient"]["dim"] == 2
    hio.write_json(files / "notideal.json", {"ambient_dim": 6, "basis": [["0", "1", "0", "0", "0", "0"]]})
    assert call("quotient", files / "s3.json", "--ideal", files / "notideal.json")[0] == 1


def test_extension_commands(files):
    code, rep, _ = call("extend", files / "s3.json", "--subalgebra", files / "emb.json", "--rep", files / "omega.json")
    assert code == 0 and rep["result"]["inner_faithful"] and rep["result"]["theta"]["dim"] == 4
    code, rep, _ = call("exact-check", files / "s3.json", "--subalgebra", files / "emb.json")
    assert code == 0 and rep["result"]["ok"]
    code, rep, _ = call("cond-exp", files / "s3.json", "--subalgebra", files / "emb.json")
    assert code == 0 and len(rep["result"]["expectation"]) == 6
    code, rep, _ = call("unitary-induce", files / "s3.json", "--subalgebra", files / "emb.json", "--rep", files / "omega.json")
    assert code == 0 and rep["result"]["gram_rank"] == 2 and rep["result"]["induced_dim"] == 2


def test_glue_and_cotensor(tmp_path):
    H = star_group_algebra("Z6")
    t = groups.cyclic_table(6)
    I1 = plus_ideal(subgroup_embedding(H, t, [0, 2, 4]))
    I2 = plus_ideal(subgroup_embedding(H, t, [0, 3]))
    Q1, _ = quotient_hopf(H, I1)
    Q2, _ = quotient_hopf(H, I2)
    _, w = cyclotomic_field(3)
    hio.write_json(tmp_path / "z6.json", H.to_json())
    hio.write_json(tmp_path / "i1.json", I1.to_json())
    hio.write_json(tmp_path / "i2.json", I2.to_json())
    hio.write_json(tmp_path / "r1.json", character(Q1, [(-1) ** c for c in I1.complement_indices()]).to_json())
    hio.write_json(tmp_path / "r2.json", character(Q2, [w**c for c in I2.complement_indices()]).to_json())
    hio.write_json(tmp_path / "triv2.json", character(Q2, Q2.counit).to_json())
    args = ["glue", tmp_path / "z6.json", "--ideal1", tmp_path / "i1.json", "--ideal2", tmp_path / "i2.json", "--rep1", tmp_path / "r1.json"]
    code, rep, _ = call(*args, "--rep2", tmp_path / "r2.json")
    assert code == 0 and rep["result"]["hypothesis"]
    assert call(*args, "--rep2", tmp_path / "triv2.json")[0] == 1
    code, rep, _ = call("cotensor", tmp_path / "z6.json", "--ideal1", tmp_path / "i1.json", "--ideal2", tmp_path / "i2.json")
    assert code == 0 and rep["result"]["injective"]


def test_star_commands(files):
    assert call("star-check", files / "s3.json")[0] == 0
    assert call("star-check", files / "sweedler.json")[0] == 2
    code, rep, _ = call("inner-unitary", files / "s3.json", files / "sign.json")
    assert code == 1 and rep["result"]["ideal_dim"] == 4
    code, rep, _ = call("haar", files / "s3.json")
    assert code == 0
    assert call("haar", files / "sweedler.json")[0] == 1


def test_augment(files):
    eps = json.dumps(["1", "1", "0", "0"])
    code, rep, _ = call("augment", files / "sweedler.json", files / "rep2d.json", "--grouplike", json.dumps(["0", "1", "0", "0"]), "--character", eps, "--m", "1")
    assert code == 0 and rep["result"]["dim"] == 4 and rep["result"]["inner_faithful"]
    code, rep, _ = call("augment", files / "sweedler.json", files / "rep2d.json", "--grouplike", json.dumps(["1", "0", "0", "0"]), "--character", eps)
    assert code == 1 and rep["result"]["regular_antipode"] is False
