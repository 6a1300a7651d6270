import json
import subprocess
import sys

import pytest

from crystalpoly.cli import main


def run(args, capsys):
    code = main(args)
    return code, capsys.readouterr()


def test_explore_dot(capsys):
    code, out = run(["explore", "--type", "a1affine", "--lambda", "2,-1", "--depth", "1"], capsys)
    assert code == 0
    assert out.out.startswith("digraph crystal {")
    assert out.out.count("->") == 2


def test_explore_json_to_file(tmp_path, capsys):
    path = tmp_path / "g.json"
    args = ["explore", "--type", "a", "--rank", "2", "--lambda", "1,-1", "--depth", "2", "--format", "json", "--out", str(path)]
    assert main(args) == 0
    first = path.read_bytes()
    assert main(args) == 0
    assert path.read_bytes() == first
    assert json.loads(first)["lambda"] == [1, -1]


def test_hwv(capsys):
    code, out = run(["hwv", "--type", "a1affine", "--lambda", "3,-2", "--depth", "3"], capsys)
    rep = json.loads(out.out)
    assert code == 0
    assert rep["hwv"]["entries"] == {"-1": -2, "-2": -1}
    assert rep["weight"] == [1, 0] and rep["is_highest_weight"]


def test_forms(capsys):
    code, out = run(["forms", "--type", "a", "--lambda", "1,-1", "--window", "2", "--gen-depth", "0", "--family", "xiprime"], capsys)
    assert code == 0
    obj = json.loads(out.out)
    assert {"c": 1, "coeffs": {"-1": 1}} in obj["forms"]


def test_oracle_exit_codes(capsys):
    code, out = run(["oracle", "--type", "a", "--lambda", "1,0", "--depth", "3", "--window", "6", "--gen-depth", "4"], capsys)
    assert code == 0 and json.loads(out.out)["verdict"] == "equal"
    code, out = run(["oracle", "--type", "a", "--lambda", "1,0", "--depth", "3", "--window", "6", "--gen-depth", "4",
                     "--prime-indices", "negative"], capsys)
    assert code == 1 and json.loads(out.out)["verdict"] == "unequal"


@pytest.mark.parametrize("suite", ["lemma52", "lemma55", "lemma63", "csum", "pn"])
def test_verify(suite, capsys):
    code, out = run(["verify", "--suite", suite, "--grid", "default"], capsys)
    assert code == 0
    assert out.out.strip().endswith("0 violation(s)")


def test_bad_input(capsys):
    code, out = run(["hwv", "--type", "a", "--lambda", "-1,1"], capsys)
    assert code == 2 and "error" in out.err
    code, out = run(["hwv", "--type", "a", "--rank", "3", "--lambda", "1,-1"], capsys)
    assert code == 2
    with pytest.raises(SystemExit):
        main(["hwv", "--type", "a", "--lambda", "x,y"])


def test_console_script_module():
    r = subprocess.run([sys.executable, "-m", "crystalpoly.cli", "verify", "--suite", "lemma63"], capture_output=True, text=True)
    assert r.returncode == 0 and "0 violation" in r.stdout
