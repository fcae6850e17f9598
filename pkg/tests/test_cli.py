import json
import subprocess
import sys

import pytest

from qsc.cli import main
from qsc.lweights import QChar
from qsc.cartan import EpsilonSeq


def qsc(*args, cwd=None):
    return subprocess.run([sys.executable, "-m", "qsc", *args], capture_output=True, text=True, cwd=cwd)


def test_qchar_success(capsys):
    assert main(["qchar", "--eps-std", "3,2", "--hw", "Y[1,q^0]"]) == 0
    out = capsys.readouterr().out
    assert "status: Success" in out
    assert "terms: 5" in out


def test_qchar_failure(capsys):
    assert main(["qchar", "--eps-std", "2,1", "--hw", "Y[1,q^0] Yt[2,-q^1]"]) == 2
    assert "failed at: Y[1,q^2]^-1 Y[2,q^1] D^-1  direction: 1" in capsys.readouterr().out


def test_qchar_limit(capsys):
    assert main(["qchar", "--eps-std", "3,2", "--hw", "Y[1,1] Y[2,1]", "--max-monomials", "2"]) == 3


@pytest.mark.parametrize("argv", [
    ["qchar", "--eps-std", "2,2", "--hw", "Y[1,1]"],
    ["qchar", "--eps-std", "3,2", "--hw", "Y[1,q]"],
    ["qchar", "--eps-std", "3,2", "--hw", "Y[1,1]^-1"],
    ["restrict", "--eps-std", "3,2", "--J", "0..2", "--m", "Y[1,1]"],
    ["restrict", "--eps-std", "3,2", "--J", "1"],
    ["rank1", "--eps-std", "3,2", "--node", "1", "--m", "Y[1,1]^-1"],
    ["rank1", "--eps-std", "3,2", "--node", "9", "--m", "Y[1,1]"],
    ["cartan"],
    ["cartan", "--eps", "012"],
    ["cartan", "--eps", "0101", "--invert"],
    ["verify", "no-such-fixture"],
])
def test_usage_errors(argv, capsys):
    assert main(argv) == 64


def test_argparse_errors_exit_64():
    assert qsc("bogus").returncode == 64
    assert qsc("qchar", "--eps-std", "3,2").returncode == 64


def test_cartan_json(capsys):
    assert main(["cartan", "--eps-std", "2,3", "--invert", "--json"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["det"] == "1"
    assert out["inverse_verified"] is True
    assert out["d_D_inverse"][3][3] == "0"


def test_cartan_text(capsys):
    assert main(["cartan", "--eps", "101"]) == 0
    assert "qt" in capsys.readouterr().out


def test_json_roundtrip_through_restrict(tmp_path, capsys):
    path = tmp_path / "y11.json"
    assert main(["qchar", "--eps-std", "3,2", "--hw", "Y[1,1]", "--json", str(path), "--dot", str(tmp_path / "g.dot")]) == 0
    capsys.readouterr()
    obj = json.loads(path.read_text())
    chi = QChar.from_json_obj(obj, EpsilonSeq.standard(3, 2))
    assert len(chi) == 5 and len(obj["edges"]) == 4
    assert main(["restrict", "--eps-std", "3,2", "--J", "1", "--qchar", str(path)]) == 0
    groups = json.loads(capsys.readouterr().out)["groups"]
    assert sorted(len(g["terms"]) for g in groups) == [1, 1, 1, 2]
    assert main(["restrict", "--eps-std", "3,2", "--J", "1..2", "--mode", "beta", "--qchar", str(path)]) == 0
    beta = json.loads(capsys.readouterr().out)
    assert sum(t["mult"] for t in beta["terms"]) == 5
    assert (tmp_path / "g.dot").read_text().startswith("digraph")


def test_restrict_monomial(capsys):
    assert main(["restrict", "--eps-std", "2,1", "--J", "1", "--m", "Y[2,q^3]"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["inner"] == "1"
    assert out["z"] == [{"j": 2, "b": "q^2", "exp": 1}, {"j": 2, "b": "q^4", "exp": 1}]


def test_rank1_odd_node(capsys):
    assert main(["rank1", "--eps-std", "2,1", "--node", "2", "--m", "Y[2,1] Y[2,q^2] D^-1"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["normal_form"]["s"] == 1
    assert out["lattice"] == "u01"
    assert [t["lifts"] for t in out["terms"]] == [[], ["q^3"]]


def test_verify_exit_code():
    p = qsc("verify")
    assert p.returncode == 0
    assert p.stdout.strip().endswith("fixtures passed")


def test_deterministic_stdout():
    a = qsc("qchar", "--eps-std", "3,1", "--hw", "Y[3,1]", "--style", "tilde")
    b = qsc("qchar", "--eps-std", "3,1", "--hw", "Y[3,1]", "--style", "tilde")
    assert a.stdout == b.stdout and a.returncode == 0
