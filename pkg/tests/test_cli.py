import json
import subprocess
import sys

import pytest

from bisetplus.cli import main


def run(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_marks_s3_tsv(capsys):
    rc, out, _ = run(capsys, "marks", "S3", "--format", "tsv")
    assert rc == 0
    assert out.splitlines() == ["6\t0\t0\t0", "3\t1\t0\t0", "2\t0\t2\t0", "1\t1\t1\t1"]


def test_marks_json(capsys):
    rc, out, _ = run(capsys, "marks", "S4", "--format", "json")
    doc = json.loads(out)
    assert rc == 0 and doc["schema"] == "bisetplus/1"
    assert [r["values"][0] for r in doc["rows"]] == [24, 12, 12, 8, 6, 6, 6, 4, 3, 2, 1]


def test_compose_check(capsys):
    rc, out, _ = run(capsys, "compose", "--left", "res:S3>C2", "--right", "ind:C3>S3", "--check")
    lines = out.splitlines()
    assert rc == 0
    assert lines[0] == "[|D|=1 p1=1 k1=1 p2=1 k2=1]"
    assert lines[1] == "oracle_agrees: true"


def test_compose_json_roundtrip(capsys, tmp_path):
    rc, out, _ = run(capsys, "compose", "--left", "ind:C2>S3", "--right", "res:S3>C2",
                     "--format", "json")
    path = tmp_path / "b.json"
    path.write_text(out)
    rc2, out2, _ = run(capsys, "compose", "--left", "id:S3", "--right", f"@{path}", "--format",
                       "json")
    assert rc == rc2 == 0
    assert json.loads(out2)["terms"] == json.loads(out)["terms"]


def test_decompose(capsys):
    rc, out, _ = run(capsys, "decompose", "class:S3,S3,3")
    assert rc == 0
    assert out.splitlines()[-1] == "recomposes: true"


def test_group_listing(capsys):
    rc, out, _ = run(capsys, "group", "S3")
    assert rc == 0
    assert out.splitlines()[0] == "group S3 order 6: 6 subgroups, 4 classes"


def test_plus_verbs(capsys):
    assert run(capsys, "plus", "unit", "--group", "S3")[1].strip() == "[S3:1]"
    assert run(capsys, "plus", "show", "0", "--group", "S3")[1].strip() == "0"
    rc, out, _ = run(capsys, "plus", "mult", "[1:1]", "[1:1]", "--group", "S3")
    assert rc == 0 and out.strip() == "[0:1] + [1:1]"
    rc, out, _ = run(capsys, "plus", "act", "[G:1]", "--biset", "ind:C2>S3")
    assert rc == 0 and out.strip() == "[1:1]"
    rc, out, _ = run(capsys, "plus", "basis", "--group", "C2", "--functor", "fibered:2")
    assert len(out.splitlines()) == 3


def test_plus_json_roundtrip(capsys, tmp_path):
    rc, out, _ = run(capsys, "plus", "mult", "[1:1]*2", "[S3:1] + [2:1]", "--group", "S3",
                     "--format", "json")
    path = tmp_path / "x.json"
    path.write_text(out)
    rc2, out2, _ = run(capsys, "plus", "show", f"@{path}", "--group", "S3", "--format", "json")
    assert rc == rc2 == 0 and json.loads(out2) == json.loads(out)


def test_ghost_verbs(capsys, tmp_path):
    assert run(capsys, "ghost", "act", "1,1", "--biset", "ind:C3>S3")[1].split() == \
        ["2", "0", "2", "0"]
    rc, out, _ = run(capsys, "ghost", "mark", "[1:1]", "--group", "S3", "--format", "json")
    path = tmp_path / "g.json"
    path.write_text(out)
    rc2, out2, _ = run(capsys, "ghost", "mult", f"@{path}", "1,1,1,1", "--group", "S3",
                       "--format", "json")
    assert rc == rc2 == 0 and json.loads(out2) == json.loads(out)


def test_unmark(capsys):
    assert run(capsys, "unmark", "C2", "1,1")[1].strip() == "[C2:1]*2"
    assert run(capsys, "unmark", "C2", "2,0")[1].strip() == "[0:1]*2"


def test_species(capsys):
    rc, out, _ = run(capsys, "species", "C2", "--functor", "fibered:2")
    assert rc == 0
    assert out.splitlines()[0] == "conductor 2; 3 species; rank 3"


def test_verify_exit_codes(capsys):
    rc, out, _ = run(capsys, "verify", "--suite", "mobius", "--groups", "preset:upto8")
    assert rc == 0 and out.startswith("mobius: PASS")
    rc, out, _ = run(capsys, "verify", "--suite", "mark", "--groups", "C2,C4", "--format", "json")
    doc = json.loads(out)
    assert rc == 0 and doc["pass"] and len(doc["expected_failures"]) == 1
    rc, _, _ = run(capsys, "verify", "--suite", "axioms", "--groups", "1,C2",
                   "--conditions", "p1")
    assert rc == 0


@pytest.mark.parametrize("argv,code", [
    (["plus", "show", "nonsense", "--group", "S3"], 2),
    (["group", "Z9"], 2),
    (["marks", "S3", "--functor", "character"], 2),
    (["unmark", "C2", "1,2,3"], 2),
    (["compose", "--left", "id:C2", "--right", "id:C3"], 1),
    (["ghost", "act", "1,1,1", "--biset", "def:C4/C2"], 1),
    (["frobnicate"], 2),
])
def test_error_codes(capsys, argv, code):
    rc, out, err = run(capsys, *argv)
    assert rc == code
    if argv[0] != "frobnicate":
        doc = json.loads(err)
        assert doc["schema"] == "bisetplus/1"
        assert doc["error"]["type"] == ("parse" if code == 2 else "domain")


def test_output_is_deterministic():
    cmd = [sys.executable, "-m", "bisetplus", "verify", "--suite", "species", "--groups",
           "C2,S3", "--functor", "fibered:2", "--format", "json"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["pass"]
