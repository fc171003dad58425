import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from approxring import is_approx_prime_ideal, load_fixture
from approxring.cli import run
from approxring.reports import CheckReport
from approxring.theorems import TheoremReport

Z4 = str(Path(__file__).resolve().parent.parent / "fixtures" / "z4_parity.json")


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("mode", ["text", "structured"])
def test_documented_examples(mode):
    code, out, _ = call("check", "prime-ideal", "I_prime", "--in", "R1", "--fixture", "builtin:image16", "--output", mode)
    assert code == 0
    code, out, _ = call("check", "prime-ideal", "I_notprime", "--in", "R2", "--output", mode)
    assert code == 1
    assert ("(x00, x11, x00)" in out) if mode == "text" else (["x00", "x11", "x00"] in json.loads(out)["axioms"][0]["witnesses"])
    code, out, _ = call("approx", "I_prime", "--output", mode)
    assert code == 0
    if mode == "text":
        assert out.strip() == "Φ*(I_prime) = {x00, x01}"
    else:
        assert json.loads(out)["upper"] == ["x00", "x01"]


def test_structured_check_round_trips(image16):
    code, out, _ = call("check", "prime-ideal", "I_notprime", "--in", "R2", "--output", "structured")
    parsed = CheckReport.from_dict(json.loads(out))
    direct = is_approx_prime_ideal(image16.subset("I_notprime"), image16.context("R2"))
    assert parsed == direct
    assert parsed.verdict is False


def test_structured_verify_round_trips():
    code, out, _ = call("verify", "T12", "--fixture", "builtin:f2", "--output", "structured")
    assert code == 0
    (doc,) = json.loads(out)["reports"]
    rep = TheoremReport.from_dict(doc)
    assert rep.classification == "confirmed"
    assert ("(1,0)", "(0,1)") in rep.witnesses


@pytest.mark.parametrize("argv,code", [
    (["check", "ring", "R1"], 0),
    (["check", "ring", "R1", "--output", "structured"], 0),
    (["check", "integral-domain", "R1"], 1),
    (["check", "field", "F2", "--fixture", "builtin:f2"], 0),
    (["check", "prime-ring", "R1"], 1),
    (["check", "group", "R1", "--op", "add"], 0),
    (["check", "semigroup", "I_prime", "--in", "R1", "--op", "mul"], 0),
    (["check", "mult-closed", "I_prime", "--in", "R1"], 0),
    (["check", "irreducible", "x11", "--in", "R2"], 1),
    (["check", "principal-prime", "x01", "--in", "R2"], 0),
    (["check", "subring", "I_prime", "--in", "R2"], 0),
    (["check", "subring", "Odd", "--in", "Z4", "--fixture", Z4], 1),
    (["check", "ring", "Even", "--in", "Z4", "--fixture", Z4], 0),
    (["verify", "T1", "T2", "T3", "T9", "T11"], 0),
    (["verify", "T5"], 1),
    (["verify", "all", "--fixture", "builtin:f2"], 0),
    (["verify", "T7", "--fixture", Z4, "--bundle", "ctx=Z4", "--bundle", "A=Even", "--bundle", "B=Even"], 0),
    (["verify", "T12", "--fixture", Z4, "--bundle", "left=Z4", "--bundle", "right=Z4"], 0),
    (["search", "T9", "--max-carrier", "2", "--seed", "0", "--families", "all"], 1),
    (["search", "T2", "--max-carrier", "2", "--families", "classical"], 0),
    (["report"], 0),
])
def test_exit_codes(argv, code):
    assert call(*argv)[0] == code


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["check", "ideal-ish", "I_prime"],
    ["check", "ideal", "I_prime"],  # needs --in
    ["check", "ideal", "nope", "--in", "R1"],
    ["check", "ring", "R1", "--fixture", "missing.json"],
    ["check", "ring", "R1", "--seed", "3"],  # budget flags belong to search
    ["approx", "I_prime", "--max-carrier", "2"],
    ["verify", "T99"],
    ["verify", "T1", "--bundle", "Q=R1"],
    ["verify", "T1", "--fixture", Z4],  # no default bundles
    ["search", "T99"],
    ["search", "T1", "--families", "bogus"],
    ["check", "prime-ideal", "x11", "--in", "R2"],
])
def test_usage_and_data_errors(argv):
    assert call(*argv)[0] == 2


def test_precondition_failure_prints_report():
    doc = json.dumps({
        "version": "1",
        "elements": [{"label": "a", "features": [0]}, {"label": "b", "features": [1]}],
        "operations": [{"name": "add", "rule": "table", "table": [["a", "b"], ["b", "a"]]},
                       {"name": "mul", "rule": "table", "table": [["a", "a"], ["a", "b"]]}],
        "subsets": {"R": ["a", "b"], "B": ["b"]},
        "contexts": {"R": {"subset": "R", "add": "add", "mul": "mul"}},
    })
    code, out, err = call("check", "prime-ideal", "B", "--in", "R", "--fixture", doc)
    assert code == 2
    assert "precondition failed" in err and "ideal: FAIL" in err


def test_text_elides_long_witness_lists():
    # every product of a..d escapes to e: 16 AG1 violations
    labels = ["a", "b", "c", "d", "e"]
    doc = json.dumps({
        "version": "1",
        "elements": [{"label": l, "features": [k]} for k, l in enumerate(labels)],
        "operations": [{"name": "t", "rule": "table", "table": [["e"] * 5] * 5}],
        "subsets": {"S": labels[:4]},
        "contexts": {},
    })
    code, out, _ = call("check", "groupoid", "S", "--op", "t", "--fixture", doc)
    assert code == 1
    assert sum(1 for l in out.splitlines() if l.strip().startswith("witness")) == 10
    assert "... 6 more" in out
    code, sout, _ = call("check", "groupoid", "S", "--op", "t", "--fixture", doc, "--output", "structured")
    assert code == 1
    row = json.loads(sout)["axioms"][0]
    assert row["count"] == 16 and len(row["witnesses"]) == 16


def test_search_streams_json_lines():
    code, out, _ = call("search", "T9", "--max-carrier", "2", "--families", "all", "--output", "structured")
    lines = [json.loads(l) for l in out.splitlines()]
    assert "summary" in lines[-1]
    assert lines[-1]["summary"]["findings"] == len(lines) - 1
    assert all("finding" in l for l in lines[:-1])


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "approxring", "approx", "I_prime"], capture_output=True, text=True)
    assert p.returncode == 0
    assert "{x00, x01}" in p.stdout
