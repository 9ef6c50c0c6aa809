import json
import os
import pathlib
import subprocess

import jsonschema
import pytest

import faithrep

ROOT = pathlib.Path(__file__).resolve().parents[2]
SCHEMA = json.loads((pathlib.Path(os.environ.get("FAITHREP_SCHEMA_DIR", ROOT / "schema")) / "minfaith_output.schema.json").read_text())


def cli(*args):
    exe = os.environ.get("FAITHREP_CLI")
    if exe:
        proc = subprocess.run([exe, *args], capture_output=True, text=True, timeout=120)
        return proc.returncode, proc.stdout, proc.stderr
    return faithrep.run_cli(list(args))


def test_formulas():
    assert faithrep.heisenberg_formula(2, 1, None, 2, 1) == 6
    assert faithrep.heisenberg_formula(2, 2, 1, 2, 1) == 32
    assert faithrep.heisenberg_formula(5) == 5
    assert faithrep.unitriangular_formula(3, size=4) == 9
    assert faithrep.affine_formula(3, 1, 1, 2) == 6
    assert faithrep.affine_formula(2, 2, 1, 1) == 3
    assert faithrep.two_step_formula("dihedral:n=4")["value"] == 2


def test_errors_carry_codes():
    with pytest.raises(faithrep.FaithrepError, match="commutator_not_cyclic"):
        faithrep.two_step_formula("heis:p=2,e=inf,n=2")
    with pytest.raises(faithrep.FaithrepError, match="char2_unsupported"):
        faithrep.unitriangular_formula(2, size=4)


def test_ring_and_catalog():
    ring = faithrep.describe_ring(2, 2, 1, 2)
    assert ring["size"] == 16 and ring["units"] == 12
    summary = faithrep.catalog_summary(2, 1, None, 2, 1)
    assert sum(s["irreps"] * s["dim"] ** 2 for s in summary) == 64


def test_solver_and_constructions():
    sol = faithrep.solve_heisenberg(2, 1, None, 2, 1)
    assert sol["total_dim"] == 6
    assert sorted(s["dim"] for s in sol["summands"]) == [2, 4]
    built = faithrep.construct_heisenberg(2, 1, 1, 2, 1)
    assert built["faithful"] and built["total_dim"] == 4
    aff = faithrep.construct_affine(3, 1, 1, 2)
    assert aff["faithful"] and aff["total_dim"] == 6
    assert faithrep.construct_two_step("sdp:N=8,h=2,mult=5")["total_dim"] == 2


def test_oracle():
    assert faithrep.oracle_minfaith("gl2:p=3") == 2
    table = faithrep.character_table("dihedral:n=4")
    assert sorted(table["dims"]) == [1, 1, 1, 1, 2]


def test_verify_small_suite():
    suite = [{"name": "Hei3(Z/4)", "group": "heis:p=2,n=2", "expect": 4}]
    report = faithrep.verify(json.dumps(suite))
    assert report["all_match"]


@pytest.mark.parametrize(
    "args",
    [
        ["minfaith", "heisenberg", "--p", "2", "--e", "inf", "--n", "2", "--mode", "all"],
        ["minfaith", "heisenberg", "--p", "2", "--f", "2", "--n", "2", "--mode", "construct"],
        ["minfaith", "affine", "--p", "3", "--n", "2", "--mode", "all"],
        ["minfaith", "unitriangular", "--p", "3", "--k", "2", "--mode", "all"],
        ["minfaith", "two-step", "--group", "dicyclic:n=2", "--mode", "all"],
    ],
)
def test_cli_json_matches_schema(args):
    code, out, err = cli(*args, "--format", "json")
    assert code == 0, err
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    assert doc["agree"]
    assert len(set(doc["values"].values())) == 1


def test_cli_plain_output():
    assert cli("minfaith", "heisenberg", "--p", "2", "--f", "1", "--e", "inf", "--n", "2", "--k", "1")[:2] == (0, "6\n")
    assert cli("minfaith", "affine", "--p", "3", "--f", "1", "--e", "1", "--n", "2")[:2] == (0, "6\n")
    assert cli("minfaith", "heisenberg", "--p", "6")[0] == 2
