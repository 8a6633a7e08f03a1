import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from hutchinson.cli import main
from hutchinson.poly import Polynomial, from_quotients
from hutchinson.special import alternating_quotients


def write_poly(path, p):
    path.write_text(json.dumps(p.to_json()))
    return str(path)


def test_gen_outputs(capsys):
    assert main(["gen", "--q", "4,4"]) == 0
    assert json.loads(capsys.readouterr().out) == {"coeffs": ["1", "1", "1/4", "1/64"]}
    assert main(["gen", "--q", "4,4,4"]) == 0
    assert json.loads(capsys.readouterr().out)["coeffs"] == ["1", "1", "1/4", "1/64", "1/4096"]
    assert main(["gen", "--q", "4", "--a0", "2", "--a1", "3"]) == 0
    assert json.loads(capsys.readouterr().out)["coeffs"] == ["2", "3", "9/8"]


def test_certify_report(tmp_path, capsys):
    src = write_poly(tmp_path / "p.json", from_quotients(alternating_quotients(F(7, 2), F(32, 7), 6)))
    assert main(["certify", src, "--report", str(tmp_path / "r.json")]) == 0
    doc = json.loads((tmp_path / "r.json").read_text())
    assert doc["tool"] == "hutchinson" and doc["criteria"]["interval_alpha"] == "7/2"


def test_certify_inconclusive_and_oracle(tmp_path, capsys):
    bad = write_poly(tmp_path / "bad.json", from_quotients([F(16, 5)] * 5))
    assert main(["certify", bad]) == 10
    assert main(["certify", bad, "--oracle"]) == 11
    # (1 + x)^4 has quotients 8/3, 9/4, 8/3: no criterion applies, yet it is real-rooted
    odd = write_poly(tmp_path / "odd.json", Polynomial([1, 4, 6, 4, 1]))
    assert main(["certify", odd]) == 10
    assert main(["certify", odd, "--oracle"]) == 0


def test_invalid_inputs(tmp_path, capsys):
    (tmp_path / "junk.json").write_text("{not json")
    assert main(["certify", str(tmp_path / "junk.json")]) == 2
    (tmp_path / "neg.json").write_text(json.dumps({"coeffs": ["1", "-1", "1"]}))
    assert main(["certify", str(tmp_path / "neg.json")]) == 2
    assert main(["certify", str(tmp_path / "missing.json")]) == 2
    assert main(["gen", "--q", "0.5x"]) == 2
    assert main(["nosuch"]) == 2
    cubic = write_poly(tmp_path / "c.json", from_quotients([4, 4]))
    assert main(["witness", cubic]) == 2
    quartic = write_poly(tmp_path / "q.json", from_quotients([4, 4, 4]))
    assert main(["witness", quartic, "--alpha", "4"]) == 2


def test_witness_roundtrip(tmp_path, capsys):
    src = write_poly(tmp_path / "p.json", from_quotients(alternating_quotients(F(7, 2), F(32, 7), 7)))
    cert = tmp_path / "cert.json"
    assert main(["witness", src, "--out", str(cert)]) == 0
    assert main(["witness", src, "--verify", str(cert)]) == 0
    doc = json.loads(cert.read_text())
    doc["points"][0], doc["points"][1] = doc["points"][1], doc["points"][0]
    cert.write_text(json.dumps(doc))
    assert main(["witness", src, "--verify", str(cert)]) == 10


def test_witness_budget_exhausted(tmp_path, capsys):
    src = write_poly(tmp_path / "p.json", from_quotients(alternating_quotients(F(7, 2), F(32, 7), 4)))
    assert main(["witness", src, "--budget", "40"]) == 3


def test_oracle_command(tmp_path, capsys):
    good = write_poly(tmp_path / "g.json", from_quotients([4] * 6))
    assert main(["oracle", good]) == 0
    assert json.loads(capsys.readouterr().out)["real_roots_distinct"] == 7
    bad = write_poly(tmp_path / "b.json", Polynomial([1, 1, 1]))
    assert main(["oracle", bad]) == 11


def test_lemma_and_theta(capsys):
    assert main(["lemma", "--alpha", "7/2", "--beta", "32/7", "--resolution", "3"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["discriminant"] == "0" and doc["condition_b"] and doc["statement_a"]
    assert main(["theta", "--degree", "4", "8", "--tol", "1/100"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert set(doc["thresholds"]) == {"4", "8"}


def test_sweep_command(tmp_path, capsys):
    out = tmp_path / "s.csv"
    args = ["sweep", "--alpha-grid", "7/2", "--beta-grid", "4", "--degrees", "5,6", "--samples", "3",
            "--out", str(out)]
    assert main(args) == 0
    first = out.read_text()
    assert first.splitlines()[0] == "alpha,beta,degree,sampler,n_samples,n_hyperbolic,inside_t1,inside_tc"
    assert json.loads((tmp_path / "s.csv.meta.json").read_text())["config"]["seed"] == 0
    assert main(args) == 0
    assert out.read_text() == first


def test_module_entry_point(tmp_path):
    res = subprocess.run([sys.executable, "-m", "hutchinson", "gen", "--q", "4,4"], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["coeffs"][-1] == "1/64"
    res = subprocess.run([sys.executable, "-m", "hutchinson", "oracle", "-"], input="[]",
                         capture_output=True, text=True)
    assert res.returncode == 2
