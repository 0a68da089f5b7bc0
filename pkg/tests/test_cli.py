import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vgit import report
from vgit.cli import run

ROOT = Path(__file__).resolve().parents[1]
PROBLEMS = ROOT / "problems"
GOLDEN = Path(__file__).parent / "golden"


def invoke(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_betti(capsys):
    code, out, _ = invoke(capsys, "betti", "5")
    assert code == 0
    assert json.loads(out)["results"]["betti"]["coefficients"] == [1, 0, 5, 0, 1]
    code, out, _ = invoke(capsys, "betti", "5", "--symmetric")
    assert json.loads(out)["results"]["betti"]["coefficients"] == [1, 0, 1, 0, 1]


def test_points_walls(capsys):
    code, out, _ = invoke(capsys, "points", "5", "walls")
    assert code == 0 and json.loads(out)["results"]["walls"] == [5, 3, 1]


def test_points_wall_and_check(capsys):
    code, out, _ = invoke(capsys, "points", "5", "wall", "--m", "1")
    wall = json.loads(out)["results"]["wall"]
    assert (wall["t0"], wall["component_count"], wall["fibers"]) == (3, 5, [0, 2])
    code, out, _ = invoke(capsys, "points", "5", "check", "--t", "3", "--clusters", "0,1")
    assert json.loads(out)["results"]["check"]["stability"] == "strictly_semistable"
    code, out, _ = invoke(capsys, "points", "5", "check", "--t", "5/2", "--clusters", "0,1")
    assert json.loads(out)["results"]["check"]["t"] == "5/2"


def test_quotient_matches_golden(capsys):
    code, out, _ = invoke(capsys, "quotient", str(PROBLEMS / "weighted_blowup.json"), "--lin", "plus", "--d", "1")
    assert code == 0
    assert out == (GOLDEN / "quotient_weighted_blowup_plus_d1.json").read_text()
    names = [g["name"] for g in json.loads(out)["results"]["quotient"]["gens"]]
    assert names == ["w*x", "w^2*y", "z*x", "z^2*y"]


def test_output_is_deterministic(capsys):
    outs = {invoke(capsys, "blowup", str(PROBLEMS / "weighted_blowup.json"), "--side", "zero")[1] for _ in range(3)}
    assert len(outs) == 1


def test_quotient_runs_find_d(capsys):
    code, out, _ = invoke(capsys, "quotient", str(PROBLEMS / "weighted_blowup.json"), "--lin", "minus")
    res = json.loads(out)["results"]
    assert code == 0 and res["find_d"]["d"] == 2 and res["quotient"]["d"] == 2


def test_blowup_zero_side(capsys):
    code, out, _ = invoke(capsys, "blowup", str(PROBLEMS / "weighted_blowup.json"), "--side", "zero")
    res = json.loads(out)["results"]["blowup"]
    assert code == 0 and res["d"] == 2 and len(res["gens"]) == 4


def test_cross_and_hilbert(capsys):
    code, out, _ = invoke(capsys, "cross", str(PROBLEMS / "atiyah.json"))
    crossing = json.loads(out)["results"]["crossing"]
    assert code == 0 and crossing["flip"] and crossing["quasi_free"] == 1
    code, out, _ = invoke(capsys, "hilbert", str(PROBLEMS / "weighted_blowup.json"))
    assert json.loads(out)["results"]["hilbert_basis"]["elements"] == [[1, 1, 0], [2, 0, 1]]
    code, out, _ = invoke(capsys, "cross", str(PROBLEMS / "quadric.json"))
    assert code == 0 and "not-a-linear-model" in json.loads(out)["flags"]


def test_empty_quotient_flag(capsys):
    code, out, _ = invoke(capsys, "quotient", str(PROBLEMS / "positive_cube.json"), "--lin", "minus", "--d", "1")
    assert code == 0 and "quotient-empty-to-bound" in json.loads(out)["flags"]


def test_schema_error(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"problem": "affine_torus", "weights": [1], "colour": "red"}))
    code, out, err = invoke(capsys, "hilbert", str(bad))
    assert code == 2 and out == ""
    assert json.loads(err)["error"]["kind"] == "schema"
    bad.write_text("{not json")
    assert invoke(capsys, "hilbert", str(bad))[0] == 2
    bad.write_text(json.dumps({"problem": "affine_torus", "ambient_rank": 2, "generators": [[1, 0], [0, 1], [1, 1]], "weights": [1, 1, 3]}))
    code, _, err = invoke(capsys, "hilbert", str(bad))
    assert code == 2 and "(1, 1)" in json.loads(err)["error"]["message"]


def test_engine_error(capsys):
    code, _, err = invoke(capsys, "betti", "6")
    assert code == 1 and json.loads(err)["error"]["kind"] == "engine"


def test_truncation_exit_code(capsys, tmp_path, monkeypatch):
    prob = tmp_path / "p.json"
    prob.write_text(json.dumps({"problem": "affine_torus", "weights": [1, -7]}))
    code, out, _ = invoke(capsys, "hilbert", str(prob), "--bound", "4")
    assert code == 3 and "truncated" in json.loads(out)["flags"]
    assert invoke(capsys, "hilbert", str(prob), "--bound", "4", "--allow-truncated")[0] == 0
    monkeypatch.setenv("VGIT_BOUND", "4")
    assert invoke(capsys, "hilbert", str(prob))[0] == 3
    monkeypatch.setenv("VGIT_BOUND", "20")
    assert invoke(capsys, "hilbert", str(prob))[0] == 0
    assert invoke(capsys, "hilbert", str(prob), "--bound", "4")[0] == 3


def test_out_file_and_text(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, out, _ = invoke(capsys, "betti", "7", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["results"]["betti"]["polynomial"] == "1 + 7t^2 + 22t^4 + 7t^6 + t^8"
    code, out, _ = invoke(capsys, "betti", "5", "--format", "text")
    assert "1 + 5t^2 + t^4" in out


def test_stdin_problem():
    proc = subprocess.run(
        [sys.executable, "-m", "vgit.cli", "hilbert", "-"],
        input=json.dumps({"problem": "affine_torus", "weights": [1, -1]}),
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["hilbert_basis"]["elements"] == [[1, 1]]


def test_corpus_command(capsys):
    code, out, _ = invoke(capsys, "corpus")
    cases = json.loads(out)["results"]["cases"]
    assert code == 0 and len(cases) == 9 and all(c["passed"] for c in cases)


def test_corpus_mismatch_exit(capsys, monkeypatch):
    from vgit import corpus

    monkeypatch.setitem(corpus.CASES, "broken", lambda: (False, "forced"))
    code, out, _ = invoke(capsys, "corpus")
    assert code == 4 and "mismatch" in json.loads(out)["flags"]


@pytest.mark.parametrize("path", sorted(PROBLEMS.glob("*.json")), ids=lambda p: p.stem)
def test_shipped_problems_validate(path):
    report.parse_problem(path.read_text())


scalars = st.one_of(
    st.integers(-50, 50),
    st.fractions(max_denominator=20),
    st.text(max_size=5),
    st.booleans(),
    st.none(),
)
values = st.recursive(
    scalars, lambda inner: st.lists(inner, max_size=3) | st.dictionaries(st.text(max_size=4), inner, max_size=3), max_leaves=10
)


@settings(max_examples=60)
@given(st.dictionaries(st.text(max_size=6), values, max_size=4), st.lists(st.sampled_from(["certified", "truncated"])))
def test_report_round_trip(results, flags):
    rep = report.make_report({"problem": "points_p1", "n": 5}, results, flags)
    text = report.dumps(rep)
    assert report.loads(text) == rep
    assert report.dumps(report.loads(text)) == text


def test_floats_rejected():
    with pytest.raises(TypeError):
        report.jsonable({"x": 0.5})
