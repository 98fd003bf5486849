import json

import pytest

from fincohom.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cohomology_shorthand(capsys):
    code, out, _ = run(capsys, "cohomology", "--group", "cyclic:2", "--module", "trivial:Z/2", "--degree", "2")
    assert code == 0
    assert json.loads(out)["cohomology"][0]["factors"] == [2]


def test_cohomology_table(capsys):
    code, out, _ = run(capsys, "cohomology", "--group", "cyclic:2", "--module", "negation:Z/4", "--format", "table")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4 and all("Z/2" in line for line in lines[1:])


def test_emit_input_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "cohomology", "--group", "symmetric:3", "--module", "trivial:Z/2", "--emit-input")
    assert code == 0
    bundle = tmp_path / "input.json"
    bundle.write_text(out)
    _, direct, _ = run(capsys, "cohomology", "--group", "symmetric:3", "--module", "trivial:Z/2")
    _, from_file, _ = run(capsys, "cohomology", "--group", str(bundle), "--module", str(bundle))
    assert direct == from_file


def test_classify_cochain(capsys, tmp_path):
    p = tmp_path / "f.json"
    p.write_text(json.dumps({"degree": 1, "values": {"(0)": [0], "(1)": [1]}}))
    code, out, _ = run(capsys, "cohomology", "--group", "cyclic:2", "--module", "negation:Z/4", "--degree", "1", "--cocycle", str(p))
    assert code == 0
    assert json.loads(out)["classification"] == {"is_cocycle": True, "is_coboundary": False, "class": [1]}


def test_non_cocycle_witness(capsys, tmp_path):
    p = tmp_path / "f.json"
    p.write_text(json.dumps({"degree": 2, "values": {"(0,0)": [0], "(0,1)": [1], "(1,0)": [0], "(1,1)": [0]}}))
    code, out, _ = run(capsys, "cohomology", "--group", "cyclic:2", "--module", "trivial:Z/2", "--degree", "2", "--cocycle", str(p))
    assert code == 0
    verdict = json.loads(out)["classification"]
    assert verdict["is_cocycle"] is False and len(verdict["witness"]) == 3


def test_extensions_classify(capsys):
    code, out, _ = run(capsys, "extensions", "--group", "abelian:2,2", "--module", "trivial:Z/2", "--classify")
    assert code == 0
    d = json.loads(out)
    assert d["count"] == 8
    assert sorted(r["label"] for r in d["extensions"]).count("Q8") == 1


def test_extension_from_bundle(capsys, tmp_path):
    code, out, _ = run(capsys, "extensions", "--group", "cyclic:2", "--module", "trivial:Z/2", "--classify")
    cocycle = next(r["cocycle"] for r in json.loads(out)["extensions"] if r["label"] == "Z/4")
    p = tmp_path / "c.json"
    p.write_text(json.dumps(cocycle))
    code, out, _ = run(capsys, "extensions", "--group", "cyclic:2", "--module", "trivial:Z/2", "--cocycle", str(p), "--emit-input")
    assert code == 0
    bundle = tmp_path / "bundle.json"
    bundle.write_text(out)
    code, out, _ = run(capsys, "extensions", "--cocycle", str(bundle))
    assert code == 0
    assert len(json.loads(out)["E"]["elements"]) == 4


def test_les(capsys):
    code, out, _ = run(capsys, "les", "--group", "cyclic:2", "--ses", "mult:2,2")
    assert code == 0
    rep = json.loads(out)["report"]
    assert rep["exact"] and len(rep["nodes"]) == 9
    assert rep["maps"]["delta1"] == [[1]]


def test_haar_seed_determinism(capsys):
    a = run(capsys, "haar", "--group", "symmetric:3", "--seed", "7")
    b = run(capsys, "haar", "--group", "symmetric:3", "--seed", "7")
    c = run(capsys, "haar", "--group", "symmetric:3", "--seed", "8")
    assert a[0] == 0 and a[1] == b[1] != c[1]


def test_haar_shorthands(capsys):
    code, out, _ = run(capsys, "haar", "--group", "cyclic:6", "--f", "indicator:0,1", "--phi", "indicator:0,1,5", "--f2", "indicator:2")
    assert code == 0
    d = json.loads(out)
    assert d["approx_integral"]["value"] == "1"
    # raw covering gap 1, normalised by (1; phi) = 2
    assert d["near_additivity_gap"] == "1/2"
    assert d["approx_integral"]["certified"]


def test_lie(capsys):
    code, out, _ = run(capsys, "lie", "--algebra", "heisenberg")
    assert code == 0
    assert [h["dim"] for h in json.loads(out)["cohomology"]] == [1, 2, 2, 1]


def test_out_file(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, _ = run(capsys, "lie", "--algebra", "sl2", "--out", str(target))
    assert code == 0 and out == ""
    assert [h["dim"] for h in json.loads(target.read_text())["cohomology"]] == [1, 0, 0, 1]


def test_size_limit_exit_code(capsys, tmp_path):
    target = tmp_path / "out.json"
    code, out, err = run(capsys, "cohomology", "--group", "cyclic:200", "--module", "trivial:Z/2", "--degree", "2", "--out", str(target))
    assert code == 2
    assert json.loads(err)["error"]["kind"] == "SizeLimit"
    assert not target.exists() and out == ""


def test_validation_exit_code(capsys):
    code, out, err = run(capsys, "cohomology", "--group", "symmetric:3", "--module", "negation:Z/3")
    assert code == 1 and out == ""
    assert json.loads(err)["error"]["kind"] == "Validation"


def test_missing_file(capsys):
    code, _, err = run(capsys, "cohomology", "--group", "/nonexistent/g.json", "--module", "trivial:Z/2")
    assert code == 1
    assert json.loads(err)["error"]["kind"] == "MissingFile"


def test_bad_json_reports_location(capsys, tmp_path):
    p = tmp_path / "g.json"
    p.write_text('{"elements": [0, 1],\n "table": [[0, 1] [1, 0]]}')
    code, _, err = run(capsys, "cohomology", "--group", str(p), "--module", "trivial:Z/2")
    assert code == 1
    assert "line 2" in json.loads(err)["error"]["message"]


def test_bad_group_table(capsys, tmp_path):
    p = tmp_path / "g.json"
    p.write_text(json.dumps({"elements": ["a", "b", "c"], "table": [[0, 1, 2], [1, 1, 0], [2, 0, 1]]}))
    code, _, err = run(capsys, "cohomology", "--group", str(p), "--module", "trivial:Z/2")
    assert code == 1
    assert json.loads(err)["error"]["witness"]


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--format", "table")
    assert code == 0
    assert out.count("PASS") == 9


def test_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["cohomology"])
    assert exc.value.code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["cohomology", "--group", "dihedral:4", "--module", "trivial:Z/2"],
        ["extensions", "--group", "cyclic:3", "--module", "trivial:Z/3", "--classify"],
        ["les", "--group", "cyclic:2", "--ses", "mult:2,2"],
        ["haar", "--group", "quaternion", "--seed", "3", "--f2", "const:1"],
        ["lie", "--algebra", "abelian:3", "--rep", "adjoint"],
        ["verify"],
    ],
)
def test_reports_reemit_byte_identical(capsys, argv):
    from fincohom.serialize import dumps

    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert dumps(json.loads(out)) == out
