from __future__ import annotations

import json
import shutil
import subprocess

import pytest

from hopfcat import cli
from hopfcat.catalog import BUNDLED_DIR
from hopfcat.errors import InvariantViolation
from hopfcat.groups import symmetric
from hopfcat.io import hopf_to_json, morphism_to_json

from helpers import function_algebra

B = BUNDLED_DIR


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_verify_s3(capsys):
    code, rep = run(capsys, "verify", B / "s3.json")
    assert code == 0 and rep["status"] == "pass" and rep["result"]["dim"] == 6
    assert rep["result"]["commutative"] is False
    assert rep["inputs"][0]["path"].endswith("s3.json") and len(rep["inputs"][0]["sha256"]) == 64


def test_kernel_of_sign(capsys):
    code, rep = run(capsys, "kernel", B / "sign.json")
    assert code == 0 and rep["result"]["dim"] == 3
    assert rep["result"]["normal"] and rep["result"]["mirrored_form_agrees"]
    assert [p["path"].rsplit("/", 1)[-1] for p in rep["inputs"]] == ["sign.json", "s3.json", "c2.json"]


@pytest.mark.parametrize("argv,dim", [
    (("cokernel", "a3_inclusion.json"), 2),
    (("equalizer", "sign.json", "sign.json"), 6),
    (("coequalizer", "sign.json", "sign.json"), 2),
    (("product", "c2.json", "c3.json"), 6),
    (("pullback", "sign.json", "sign.json"), 18),
    (("smash", "inversion_action.json"), 6),
    (("kernel", "c4_to_c2.json"), 2),
])
def test_constructions(capsys, tmp_path, argv, dim):
    code, rep = run(capsys, argv[0], *(B / a for a in argv[1:]))
    assert code == 0 and rep["result"]["dim"] == dim
    # the emitted object loads again and verifies
    obj = tmp_path / "obj.json"
    obj.write_text(json.dumps(rep["result"]["object"]["json"]))
    code, again = run(capsys, "verify", obj)
    assert code == 0 and again["result"]["dim"] == dim


def test_smash_is_noncommutative(capsys):
    _, rep = run(capsys, "smash", B / "inversion_action.json")
    assert rep["result"]["commutative"] is False


def test_newman(capsys):
    code, rep = run(capsys, "newman", B / "s3.json", B / "a3_subspace.json")
    r = rep["result"]
    assert code == 0 and r["sigma_tau_roundtrip"] and r["tau_sigma_roundtrip"]
    assert r["normal"] and r["normal_kernel_lemma"]
    assert len(r["tau"]["vectors"]) == 4


def test_abelian(capsys):
    code, rep = run(capsys, "abelian", B / "s3.json")
    assert code == 0 and rep["result"] == {
        "abelian_object": False, "commutative": False, "agree": True,
        "witness": rep["result"]["witness"]}
    assert rep["result"]["witness"] is not None
    code, rep = run(capsys, "abelian", B / "c3.json")
    assert code == 0 and rep["result"]["abelian_object"] is True


# -- exit codes ---------------------------------------------------------------

def test_exit_1_on_failed_axiom(capsys, tmp_path):
    data = json.loads((B / "s3.json").read_text())
    data["antipode"] = [["1" if r == c else "0" for c in range(6)] for r in range(6)]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    code, rep = run(capsys, "verify", bad)
    assert code == 1 and rep["status"] == "fail"
    assert rep["result"]["failures"] == ["antipode_left", "antipode_right"]


def test_exit_2_names_the_field(capsys, tmp_path):
    data = json.loads((B / "c2.json").read_text())
    data["comul"][0][3] = "x"
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    code, rep = run(capsys, "verify", bad)
    assert code == 2 and rep["error"]["kind"] == "schema"
    assert rep["error"]["field"] == "bad.json:comul[0][3]"


def test_exit_2_on_missing_file(capsys, tmp_path):
    code, rep = run(capsys, "verify", tmp_path / "nope.json")
    assert code == 2 and rep["error"]["field"].endswith("nope.json")


def test_exit_2_on_wrong_arity(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["equalizer", str(B / "sign.json")])
    assert exc.value.code == 2


def test_exit_3_on_non_morphism(capsys, tmp_path):
    data = json.loads((B / "sign.json").read_text())
    data["matrix"] = [["0"] * 6, ["1"] * 6]
    for name in ("s3.json", "c2.json"):
        shutil.copy(B / name, tmp_path / name)
    bad = tmp_path / "f.json"
    bad.write_text(json.dumps(data))
    code, rep = run(capsys, "kernel", bad)
    assert code == 3 and rep["error"]["kind"] == "precondition"


def test_exit_3_on_non_cocommutative_input(capsys, tmp_path):
    f = tmp_path / "fun_s3.json"
    f.write_text(json.dumps(hopf_to_json(function_algebra(symmetric(3)))))
    code, rep = run(capsys, "verify", f)
    assert code == 1 and rep["result"]["failures"] == ["cocommutative"]
    code, rep = run(capsys, "abelian", f)
    assert code == 3 and "cocommutative" in rep["error"]["message"]


def test_newman_on_non_normal_subgroup(capsys, tmp_path, transposition_section):
    sub = tmp_path / "t.json"
    sub.write_text(json.dumps([[str(c.get(i, 0)) for i in range(6)] for c in transposition_section.cols]))
    code, rep = run(capsys, "newman", B / "s3.json", sub)
    assert code == 0 and rep["result"]["normal"] is False
    assert "normal_kernel_lemma" not in rep["result"]


def test_exit_3_on_non_sub_hopf_newman_input(capsys, tmp_path):
    sub = tmp_path / "t.json"
    sub.write_text(json.dumps([[0, 1, 0, 0, 0, 0]]))
    code, rep = run(capsys, "newman", B / "s3.json", sub)
    assert code == 3


def test_exit_4_dumps_counterexample(capsys, monkeypatch):
    def boom(h):
        raise InvariantViolation("synthetic", {"y": "g1", "a_index": 0})

    monkeypatch.setattr(cli, "abelian_object_test", boom)
    code, rep = run(capsys, "abelian", B / "s3.json")
    assert code == 4 and rep["error"] == {
        "kind": "invariant", "message": "synthetic", "counterexample": {"y": "g1", "a_index": 0}}


# -- output handling ----------------------------------------------------------

def test_out_and_pretty(capsys, tmp_path):
    out = tmp_path / "r.json"
    assert cli.main(["verify", str(B / "c2.json"), "--out", str(out), "--pretty"]) == 0
    captured = capsys.readouterr()
    assert captured.out == "" and "hopfcat verify: pass (exit 0)" in captured.err
    text = out.read_text()
    assert text.startswith("{\n  ") and json.loads(text)["status"] == "pass"


def test_reports_are_byte_identical(capsys):
    cli.main(["pullback", str(B / "sign.json"), str(B / "sign.json")])
    first = capsys.readouterr().out
    cli.main(["pullback", str(B / "sign.json"), str(B / "sign.json")])
    assert capsys.readouterr().out == first
    assert "elapsed" not in first


def test_inline_objects_are_accepted(capsys, tmp_path, sign):
    f = tmp_path / "inline.json"
    f.write_text(json.dumps(morphism_to_json(sign)))
    code, rep = run(capsys, "kernel", f)
    assert code == 0 and rep["result"]["dim"] == 3


def test_axioms_on_small_catalog_via_env(capsys, tmp_path, monkeypatch):
    small = tmp_path / "cat" / "groups"
    small.mkdir(parents=True)
    for name in ("C1", "C2", "C3", "S3"):
        shutil.copy(B / "groups" / f"{name}.json", small / f"{name}.json")
    monkeypatch.setenv("HOPFCAT_CATALOG", str(tmp_path / "cat"))
    code, rep = run(capsys, "axioms")
    assert code == 0 and rep["result"]["total_failures"] == 0
    assert rep["result"]["catalog"]["groups"] == ["C1", "C2", "C3", "S3"]
    assert len(rep["inputs"]) == 4


def test_export_matches_bundled(capsys, tmp_path):
    code, rep = run(capsys, "export", tmp_path)
    assert code == 0
    for rel in rep["result"]["written"]:
        assert (tmp_path / rel).read_bytes() == (B / rel).read_bytes(), rel


def test_console_script():
    exe = shutil.which("hopfcat")
    assert exe is not None
    proc = subprocess.run([exe, "kernel", str(B / "sign.json")], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["result"]["dim"] == 3
