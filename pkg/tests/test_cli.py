import csv
import io
import json
import subprocess
import sys

import pytest

from hopfcyclic.cli import run
from hopfcyclic.report import SCHEMA_VERSION


def call(*argv):
    buf = io.StringIO()
    code = run(list(argv), stdout=buf)
    text = buf.getvalue()
    return code, (json.loads(text) if text else None), text


def test_cyclic_z3():
    code, rep, _ = call("cyclic", "--instance", "group:Z3", "--field", "Q",
                        "--n-max", "4")
    assert code == 0
    assert rep["results"]["dims"] == [1, 0, 1, 0, 1]
    assert rep["bounds"] == {"W": None, "n_max": 4}
    assert rep["schema_version"] == SCHEMA_VERSION


def test_resolution_homotopy():
    code, rep, _ = call("resolution", "--name", "uqsl2", "--verify-homotopy",
                        "--lmax", "2", "--dmax", "2")
    assert code == 0 and rep["passed"]
    assert rep["bounds"]["L"] == 2 and rep["bounds"]["Dg"] == 2


def test_verify_axioms_witness():
    code, rep, _ = call("verify-axioms", "--instance", "aslq2", "--pair",
                        "epsilon,1", "--unchecked")
    assert code == 1
    fails = rep["checks"][-1]["failures"]
    assert any(w["identity"].startswith("tau^(n+1)") and w["witness"] == "u"
               for w in fails)


def test_checked_bad_pair_fails_at_involution():
    code, rep, _ = call("verify-axioms", "--instance", "aslq2", "--pair",
                        "epsilon,1")
    assert code == 1
    assert rep["checks"][0]["name"] == "modular_involution"


@pytest.mark.parametrize("argv", [
    ["cyclic", "--instance", "nothing"],
    ["cyclic", "--instance", "group:Z3", "--pair", "epsilon,x"],
    ["cyclic", "--instance", "group:Z3", "--field", "R"],
    ["cyclic", "--instance", "group:Z3", "--n-max", "-1"],
    ["cyclic", "--instance", "group:Z3", "--bogus"],
    ["maps", "--instance", "uqsl2", "--map", "pi"],
    ["resolution", "--name", "uqsl2", "--base-change", "epsilon"],
    ["resolution", "--name", "aslq2", "--verify-homotopy"],
    [],
])
def test_config_errors_exit_two(argv):
    code, _, _ = call(*argv)
    assert code == 2


def test_reports_are_deterministic():
    argv = ["hochschild", "--instance", "group:S3", "--n-max", "2"]
    assert call(*argv)[2] == call(*argv)[2]


def test_field_from_environment(monkeypatch):
    monkeypatch.setenv("HOPFCYCLIC_FIELD", "F2")
    code, rep, _ = call("cyclic", "--instance", "group:Z2", "--n-max", "4")
    assert code == 0 and rep["results"]["dims"] == [1, 1, 2, 2, 3]
    code, rep, _ = call("cyclic", "--instance", "group:Z2", "--n-max", "4",
                        "--field", "Q")
    assert rep["results"]["dims"] == [1, 0, 1, 0, 1]


def test_output_and_csv(tmp_path):
    out, tab = tmp_path / "r.json", tmp_path / "r.csv"
    code, _, text = call("resolution", "--name", "aslq2", "--base-change",
                         "epsilon,delta", "-o", str(out), "--csv", str(tab))
    assert code == 0 and text == ""
    rep = json.loads(out.read_text())
    assert rep["results"]["base_change"]["dims"] == [0, 2, 2, 0, 0, 0]
    rows = list(csv.reader(tab.open()))
    assert rows[0] == ["n", "dim"] and rows[2] == ["1", "2"]


def test_report_layout():
    _, rep, _ = call("karoubi", "--instance", "group:Z3", "--n-max", "3")
    assert set(rep) == {"schema_version", "command", "config", "bounds",
                        "passed", "checks", "results"}
    for c in rep["checks"]:
        assert set(c) == {"name", "passed", "checked", "failed", "failures",
                          "details"}


@pytest.mark.parametrize("m", ["theta", "gamma", "pi", "psi", "maclane"])
def test_maps(m):
    inst = "fungrp:Z3" if m == "psi" else "group:Z4"
    code, rep, _ = call("maps", "--instance", inst, "--pair",
                        "epsilon,g^2" if m != "psi" else "epsilon,1",
                        "--map", m, "--n-max", "2", "-D", "0")
    assert code == 0, rep


def test_other_subcommands():
    assert call("verify-hopf", "--instance", "uqsl2")[0] == 0
    assert call("hp-commutative", "--instance", "fungrp:Z2")[0] == 0
    code, rep, _ = call("resolution", "--name", "uqsl2", "--lift", "3",
                        "--base-change", "epsilon,epsilon")
    assert code == 0
    assert rep["results"]["base_change"]["dims"] == [1, 0, 0, 1, 0, 0]
    code, _, _ = call("resolution", "--name", "aslq2", "--printed")
    assert code == 1


def test_module_entry_point():
    p = subprocess.run([sys.executable, "-m", "hopfcyclic.cli", "cyclic",
                        "--instance", "group:Z2", "--n-max", "2"],
                       capture_output=True, text=True)
    assert p.returncode == 0
    assert json.loads(p.stdout)["results"]["dims"] == [1, 0, 1]
