import json
import subprocess
import sys

import pytest

from idemmeasure.cli import main


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


MEASURE = {"kind": "max-min", "space": {"points": ["a", "b"]},
           "atoms": [{"point": "a", "weight": "inf"}, {"point": "b", "weight": "2"}]}


def test_eval(tmp_path, capsys):
    m = write(tmp_path, "m.json", MEASURE)
    f = write(tmp_path, "f.json", {"space": {"points": ["a", "b"]}, "values": {"a": "1", "b": "5"}})
    assert run(capsys, "eval", "--measure", m, "--function", f) == (0, {"value": "2"}, "")


def test_push_and_tensor(tmp_path, capsys):
    m = write(tmp_path, "m.json", {"kind": "max-min", "atoms": [
        {"point": "a", "weight": "inf"}, {"point": "b", "weight": "3"}, {"point": "c", "weight": "0"}]})
    f = write(tmp_path, "f.json", {"source": {"points": ["a", "b", "c"]}, "target": {"points": ["u", "v"]},
                                   "assignment": {"a": "u", "b": "u", "c": "v"}})
    code, out, _ = run(capsys, "push", "--map", f, "--measure", m)
    assert code == 0
    assert out["atoms"] == [{"point": "u", "weight": "inf"}, {"point": "v", "weight": "0"}]
    code, out, _ = run(capsys, "tensor", "--left", m, "--right", m)
    assert code == 0 and len(out["atoms"]) == 9


def test_convert_both_ways(tmp_path, capsys):
    mp = write(tmp_path, "mp.json", {"kind": "max-plus", "atoms": [
        {"point": "a", "weight": "0"}, {"point": "b", "weight": "-1"}]})
    code, out, _ = run(capsys, "convert", "--measure", mp)
    assert code == 0 and out["kind"] == "max-min"
    assert out["atoms"][0]["weight"] == "inf"
    assert abs(out["atoms"][1]["weight"] - (-0.541324854613)) < 1e-12
    mm = write(tmp_path, "mm.json", MEASURE)
    code, out, _ = run(capsys, "convert", "--measure", mm, "--xi", "tan")
    assert code == 0 and out["kind"] == "max-plus"


def test_dist(tmp_path, capsys):
    left = write(tmp_path, "l.json", {"kind": "max-min", "space": {"points": ["a", "b"]},
                                      "atoms": [{"point": "a", "weight": "inf"}]})
    right = write(tmp_path, "r.json", {"kind": "max-min", "space": {"points": ["a", "b"]},
                                       "atoms": [{"point": "a", "weight": "inf"}, {"point": "b", "weight": "0"}]})
    metric = write(tmp_path, "d.json", {"d": [["a", "b", "1"]]})
    code, out, _ = run(capsys, "dist", "--left", left, "--right", right, "--metric", metric,
                       "--cross-check", "--oracle-step", "1/100")
    assert code == 0 and out["exact"] == "1/2" and out["agree"] is True


def test_mul_nested(tmp_path, capsys):
    mu = {"kind": "max-min", "space": {"points": ["a", "b"]}, "atoms": [{"point": "a", "weight": "inf"}]}
    nu = {"kind": "max-min", "space": {"points": ["a", "b"]}, "atoms": [{"point": "b", "weight": "inf"}]}
    M = write(tmp_path, "M.json", {"kind": "max-min", "atoms": [
        {"point": mu, "weight": "inf"}, {"point": nu, "weight": "0"}]})
    code, out, _ = run(capsys, "mul", "--measure", M)
    assert code == 0
    assert out["atoms"] == [{"point": "a", "weight": "inf"}, {"point": "b", "weight": "0"}]


def test_lift(tmp_path, capsys):
    sec = write(tmp_path, "s.json", {
        "map": {"source": {"points": ["z1", "z2", "z3"]}, "target": {"points": ["x", "y"]},
                "assignment": {"z1": "x", "z2": "x", "z3": "y"}},
        "sections": [
            {"point": "x", "measure": {"kind": "max-min", "atoms": [
                {"point": "z1", "weight": "inf"}, {"point": "z2", "weight": "1"}]}},
            {"point": "y", "measure": {"kind": "max-min", "atoms": [{"point": "z3", "weight": "inf"}]}}]})
    m = write(tmp_path, "m.json", {"kind": "max-min", "space": {"points": ["x", "y"]},
                                   "atoms": [{"point": "x", "weight": "inf"}, {"point": "y", "weight": "0"}]})
    code, out, _ = run(capsys, "lift", "--measure", m, "--section", sec)
    assert code == 0
    assert [a["weight"] for a in out["atoms"]] == ["inf", "1", "0"]


def test_barycenter_and_hull(tmp_path, capsys):
    m = write(tmp_path, "m.json", {"kind": "max-min", "atoms": [
        {"point": ["0", "1"], "weight": "inf"}, {"point": ["2", "0"], "weight": "1/2"}]})
    assert run(capsys, "barycenter", "--measure", m) == (0, {"coords": ["1/2", "1"]}, "")
    g = write(tmp_path, "g.json", {"points": [{"coords": ["0", "0"]}, {"coords": ["3", "1"]}]})
    p = write(tmp_path, "p.json", {"coords": ["2", "1"]})
    code, out, _ = run(capsys, "hull", "--generators", g, "--point", p)
    assert code == 0 and out["member"] is True
    q = write(tmp_path, "q.json", {"coords": ["4", "1"]})
    assert run(capsys, "hull", "--generators", g, "--point", q)[1] == {"member": False, "witness": None}


def test_laws_exit_zero(capsys):
    code, out, _ = run(capsys, "laws", "--kind", "max-min", "--cases", "500", "--seed", "7")
    assert code == 0 and out["ok"] is True
    code, out, _ = run(capsys, "laws", "--kind", "algebra", "--cases", "20")
    assert code == 0 and out["ok"] is True
    code, out, _ = run(capsys, "laws", "--kind", "max-plus", "--cases", "5", "--points", "2", "--exhaustive")
    assert code == 0 and out["exhaustive"]["ok"] is True


def test_counterexample(capsys):
    code, out, _ = run(capsys, "counterexample")
    assert code == 0
    assert out["equal"] is False and out["differing"] == ["a"]
    assert out["lhs"]["c"] == out["rhs"]["c"] == "inf"
    assert abs(out["lhs"]["a"] + 2.9490) < 1e-3 and abs(out["rhs"]["a"] + 1.8546) < 1e-3
    code, out, _ = run(capsys, "counterexample", "--alpha", "tan-exp")
    assert code == 0 and out["equal"] is False


@pytest.mark.parametrize("argv", [
    ["nonsense"],
    ["laws", "--kind", "max-min", "--bogus"],
    ["laws", "--kind", "max-min", "--cases", "0"],
    ["eval", "--measure", "x.json", "--function", "y.json", "--xi", "cosh"],
    ["dist", "--left", "a", "--right", "b", "--oracle-step", "inf"],
])
def test_usage_errors_exit_one(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1 and out is None and err


def test_domain_errors_exit_one(tmp_path, capsys):
    bad = write(tmp_path, "bad.json", {"kind": "max-min", "atoms": [{"point": "a", "weight": "inf "}]})
    f = write(tmp_path, "f.json", {"space": {"points": ["a"]}, "values": {"a": "0"}})
    code, out, err = run(capsys, "eval", "--measure", bad, "--function", f)
    assert code == 1 and "SchemaError" in err and "$.atoms[0].weight" in err
    code, _, err = run(capsys, "eval", "--measure", str(tmp_path / "missing.json"), "--function", f)
    assert code == 1 and "ParseError" in err


def test_canonicalization_notice_on_stderr(tmp_path, capsys):
    m = write(tmp_path, "m.json", {"kind": "max-min", "atoms": [
        {"point": "a", "weight": "inf"}, {"point": "a", "weight": "2/6"}]})
    f = write(tmp_path, "f.json", {"space": {"points": ["a"]}, "values": {"a": "0"}})
    code, out, err = run(capsys, "eval", "--measure", m, "--function", f)
    assert code == 0 and out == {"value": "0"} and "canonicalized" in err


def test_deterministic_output_across_processes():
    cmd = [sys.executable, "-m", "idemmeasure", "laws", "--kind", "max-plus", "--cases", "50", "--seed", "99"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first
