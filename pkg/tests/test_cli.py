import io
import json
import subprocess
import sys

import pytest

from pdrba.cli import poly_from_json, run
from pdrba.parse import parse

GOLDEN = "P(D(x)P(y)) + P(P(D(x))y) + P(P(x)D(y)) + P(xP(D(y)))\n"


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue()


def test_normalize_golden():
    assert call("normalize", "--type", "I", "D(P(x)P(y))") == (0, GOLDEN)


def test_normalize_subprocess_is_byte_identical():
    cmd = [sys.executable, "-m", "pdrba.cli", "normalize", "--type", "I", "D(P(x)P(y))"]
    runs = [subprocess.run(cmd, capture_output=True, check=True).stdout for _ in range(2)]
    assert runs[0] == runs[1] == GOLDEN.encode()


@pytest.mark.parametrize("strategy", ["leftmost-outermost", "random"])
def test_normalize_strategy_flag(strategy):
    assert call("normalize", "--type", "I", "--strategy", strategy, "D(P(x)P(y))") == (0, GOLDEN)


def test_compare():
    assert call("compare", "P(x)", "D(x)") == (0, "LT\n")
    assert call("compare", "D(xy)", "D(x)D(y)") == (0, "GT\n")
    assert call("compare", "x", "x") == (0, "EQ\n")


def test_diamond_derive_rb():
    assert call("diamond", "--type", "II", "--lambda", "1", "P(x)", "P(y)") == (
        0, "P(P(x)y) + P(xP(y)) + P(xy)\n")
    assert call("derive", "--type", "III", "--b", "-2", "P(x)") == (0, "P(D(x)) - 2 P(x)\n")
    assert call("rb", "xD(y)") == (0, "P(xD(y))\n")


def test_diamond_rejects_non_drbw(capsys):
    code, _ = call("diamond", "--type", "I", "D(xy)", "x")
    assert code == 1
    assert "D(xy)" in capsys.readouterr().err


@pytest.mark.parametrize("argv", [
    ["normalize", "--type", "II", "--lambda", "0", "x"],
    ["normalize", "--type", "I", "--b", "1", "x"],
    ["normalize", "--type", "I", "P(x"],
    ["normalize", "--type", "I", "Q(x)"],
    ["normalize", "--type", "IV", "x"],
    ["normalize", "--type", "I", "--lambda", "abc", "x"],
    ["audit", "--type", "I", "--max-depth", "0"],
    ["hurwitz-check", "--fixture", "upper2", "--trunc", "0"],
])
def test_input_errors_exit_1(argv):
    with pytest.raises(SystemExit) as e:
        code, _ = call(*argv)
        raise SystemExit(code)
    assert e.value.code == 1


def test_config_checked_before_parsing(capsys):
    code, _ = call("normalize", "--type", "III", "--b", "0", "P(")
    assert code == 1
    assert "type III" in capsys.readouterr().err


def test_json_roundtrip():
    code, out = call("normalize", "--type", "II", "--lambda", "-1/2", "--json", "D(xP(y))")
    assert code == 0
    data = json.loads(out)
    f = poly_from_json(data)
    assert f == parse(data["text"])
    assert f == parse(call("normalize", "--type", "II", "--lambda", "-1/2", "D(xP(y))")[1])


def test_audit_small_text_and_json():
    code, out = call("audit", "--type", "III", "--b", "1", "--max-letters", "2")
    assert code == 0 and out.strip().endswith("all ambiguities trivial")
    code, out = call("audit", "--type", "II", "--lambda", "2", "--max-letters", "2", "--json")
    assert code == 0 and json.loads(out)["failed"] == 0


def test_hurwitz_check():
    code, out = call("hurwitz-check", "--fixture", "upper2", "--trunc", "4")
    assert code == 0 and "FAIL" not in out and out.count("PASS") >= 5
    code, out = call("hurwitz-check", "--fixture", "poly-int", "--trunc", "3", "--json")
    assert code == 0 and all(c["passed"] for c in json.loads(out))


def test_property_violation_exit_2(monkeypatch):
    from pdrba import hurwitz
    monkeypatch.setattr(hurwitz, "invariant_suite",
                        lambda *a, **k: [hurwitz.Check("forced", False)])
    assert call("hurwitz-check", "--fixture", "upper2")[0] == 2
