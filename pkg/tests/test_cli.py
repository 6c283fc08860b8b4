import json
import subprocess
import sys

import pytest

from slab.cli import main
from slab.deciders import Verdict, recheck
from slab.harness import Report, recheck_report
from slab.mutations import corrupted
from slab.ring import Ring, mult_set


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_ring_info(capsys):
    code, out, _ = run(capsys, "ring", "info", "--n", "12", "--mults", "2")
    assert code == 0 and "{1, 2, 4, 8}" in out and "Z/3" in out and "witness: 4" in out
    code, out, _ = run(capsys, "ring", "info", "--n", "12", "--mults", "2", "--format", "json")
    d = json.loads(out)
    assert d["schema"] == 1 and d["localization"] == 3 and d["s_elements"] == [1, 2, 4, 8]


def test_module_decompose(capsys, tmp_path):
    f = tmp_path / "rel.txt"
    f.write_text("# a presentation\n4 0\n0 6\n")
    code, out, _ = run(capsys, "module", "decompose", "--n", "12", "--relations", str(f))
    assert code == 0 and "[2, 12]" in out
    g = tmp_path / "free.txt"
    g.write_text("# generators: 2\n")
    code, out, _ = run(capsys, "module", "decompose", "--n", "6", "--relations", str(g), "--format", "json")
    assert json.loads(out)["factors"] == [6, 6]


@pytest.mark.parametrize("content", ["", "1 2\n3\n", "a b\n", "# generators: 3\n1 2\n"])
def test_bad_relation_files(capsys, tmp_path, content):
    f = tmp_path / "bad.txt"
    f.write_text(content)
    code, _, err = run(capsys, "module", "decompose", "--n", "12", "--relations", str(f))
    assert code == 2 and err.count("\n") == 1 and err.startswith("slab: error:")


def test_decide_flat_example(capsys):
    code, out, _ = run(capsys, "decide", "flat", "--n", "12", "--module", "inv:2")
    assert code == 0 and "false" in out and "failing ideal: (2)" in out


def test_decide_rel_spec(capsys, tmp_path):
    f = tmp_path / "m.txt"
    f.write_text("2 4\n6 8\n")
    code, out, _ = run(capsys, "decide", "injective", "--n", "12", "--module", f"rel:{f}", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["module"]["factors"] == [2, 4]


@pytest.mark.parametrize("prop, mults, route", [
    ("injective", "", None), ("s-injective", "2", None), ("s-injective", "3", "ext_vanishing"),
    ("s-injective", "3", "colocalization"), ("flat", "", None), ("s-flat", "3", None),
])
@pytest.mark.parametrize("spec", ["inv:2", "inv:6", "inv:2,12", "inv:"])
def test_decide_json_round_trips_and_rechecks(capsys, prop, mults, route, spec):
    argv = ["decide", prop, "--n", "12", "--mults", mults, "--module", spec, "--format", "json"]
    if route:
        argv += ["--route", route]
    code, out, _ = run(capsys, *argv)
    assert code == 0
    d = json.loads(out)
    assert d["schema"] == 1 and d["kind"] == "verdict"
    v = Verdict(d["value"], d["route"], d["certificate"])
    ring = Ring(d["ring"])
    assert recheck(v, ring, mult_set(ring, d["mult_set"]))


def test_hunt(capsys):
    code, out, _ = run(capsys, "hunt", "--want", "s-injective,!injective", "--n", "12", "--mults", "2")
    assert code == 0 and "witness: Z/2" in out
    code, out, _ = run(capsys, "hunt", "--want", "s-flat,!flat", "--n", "12", "--mults", "2", "--expect-none")
    assert code == 1
    code, out, _ = run(capsys, "hunt", "--want", "s-injective,!injective", "--n", "12", "--expect-none")
    assert code == 0 and "exhausted" in out


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--prop", "LAMBEK", "--n", "12", "--mults", "2")
    assert code == 0 and "pass" in out
    code, out, _ = run(capsys, "verify", "--prop", "LAMBEK", "--n", "12", "--mults", "2", "--max-instances", "2")
    assert code == 4 and "budget_exhausted" in out
    with corrupted("character"):
        code, out, _ = run(capsys, "verify", "--prop", "LAMBEK", "--n", "12", "--mults", "3", "--format", "json")
        assert code == 1
        r = Report.from_dict(json.loads(out))
        assert r.verdict == "counterexample" and recheck_report(r)


def test_verify_json_is_byte_identical(capsys):
    argv = ["verify", "--prop", "EXACT_HOM_SEQ", "--n", "12", "--mults", "3", "--max-factors", "2",
            "--budget", "25", "--seed", "9", "--format", "json"]
    outs = {run(capsys, *argv)[1] for _ in range(2)}
    assert len(outs) == 1
    d = json.loads(outs.pop())
    assert "elapsed" not in d and Report.from_dict(d).to_dict() == d
    _, out, _ = run(capsys, *argv, "--timing")
    assert "elapsed" in json.loads(out)


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify", "--prop", "ALL", "--n", "8", "--mults", "3", "--max-factors", "1",
                       "--budget", "10", "--format", "json")
    d = json.loads(out)
    assert code == 0 and len(d["reports"]) == 13


@pytest.mark.parametrize("argv", [
    ["verify", "--prop", "BOGUS", "--n", "12"],
    ["ring", "info", "--n", "1"],
    ["ring", "info", "--n", "4", "--mults", "2"],
    ["ring", "info", "--n", "12", "--mults", "x"],
    ["decide", "flat", "--n", "12", "--module", "inv:5"],
    ["decide", "flat", "--n", "12", "--module", "zzz"],
    ["decide", "flat", "--n", "12", "--module", "inv:2", "--route", "s_baer"],
    ["hunt", "--want", "projective", "--n", "12"],
    ["decide", "flat", "--n", "12"],
    [],
])
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.strip()


def test_route_disagreement_exit_3(capsys, monkeypatch):
    import slab.deciders as dec
    monkeypatch.setitem(dec._ROUTE_FNS, "ext_vanishing", lambda e, s: dec.Verdict(False, "ext_vanishing", {}))
    code, _, err = run(capsys, "decide", "s-injective", "--n", "12", "--mults", "2", "--module", "inv:2")
    assert code == 3 and "inconsistency" in err


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "slab", "decide", "flat", "--n", "12", "--module", "inv:4"],
                       capture_output=True, text=True)
    assert p.returncode == 0 and "true" in p.stdout
