import json
import os
import pathlib
import subprocess

import jsonschema


def run_cli(*args):
    cli = os.environ["KOTTWITZ_CLI"]
    return subprocess.run([cli, *args], capture_output=True, text=True)


def load_schema(name):
    src = pathlib.Path(os.environ["KOTTWITZ_SRC"])
    return json.loads((src / "schemas" / f"{name}.schema.json").read_text())


def test_describe_unitary():
    r = run_cli("describe", "--group", "2A2")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, load_schema("kottwitz.describe.v1"))
    assert doc["coinvariants"] == "Z + Z/2"


def test_bgmu_gl2_tsv():
    r = run_cli("bgmu", "--group", "GL2", "--mu", "1,0")
    assert r.returncode == 0
    assert "polygon\tintegral" in r.stdout
    assert "1,0\tyes" in r.stdout
    assert "1/2,1/2\tno" in r.stdout


def test_bgmu_json_schema():
    r = run_cli("bgmu", "--group", "GL3", "--mu", "1,0,0", "--format", "json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, load_schema("kottwitz.bgmu.v1"))
    assert len(doc["unramified"]) == 1
    assert len(doc["polygons"]) == 3


def test_byte_identical_reruns():
    a = run_cli("bgmu", "--group", "2A2", "--mu", "1,0,-1", "--format", "json")
    b = run_cli("bgmu", "--group", "2A2", "--mu", "1,0,-1", "--format", "json")
    assert a.returncode == 0 and b.returncode == 0
    assert a.stdout == b.stdout


def test_weights_schema_and_tsv():
    r = run_cli("weights", "--group", "2A2", "--mu", "1,0,-1", "--coinvariant")
    assert r.returncode == 0
    assert r.stdout.startswith("class\tdim\n")
    j = run_cli("weights", "--group", "A2", "--mu", "1,1", "--format", "json")
    assert j.returncode == 0
    jsonschema.validate(json.loads(j.stdout), load_schema("kottwitz.weights.v1"))


def test_tilting_table_golden_flag():
    src = pathlib.Path(os.environ["KOTTWITZ_SRC"])
    golden = src / "tests" / "golden" / "tilting_G2.tsv"
    r = run_cli("tilting-table", "--type", "G2", "--golden", str(golden))
    assert r.returncode == 0
    assert r.stdout == golden.read_text()


def test_tilting_json_schema():
    r = run_cli("tilting", "--group", "B2", "--mu", "w2", "--ell", "2")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, load_schema("kottwitz.tilting.v1"))
    assert doc["tilting"] is False


def test_check_character_exit_codes():
    ok = run_cli("check-character", "--group", "GL2", "--chi", "q^2,1", "--level", "generic")
    assert ok.returncode == 0
    jsonschema.validate(json.loads(ok.stdout), load_schema("kottwitz.ladder.v1"))
    bad = run_cli("check-character", "--group", "GL2", "--chi", "q^1,1", "--level", "generic")
    assert bad.returncode == 1


def test_averaging_schema_and_verdict():
    r = run_cli("averaging", "--group", "GL2", "--mu", "2,0", "--phi", "2*q^1,3*q^2",
                "--format", "json")
    assert r.returncode == 0
    doc = json.loads(r.stdout)
    jsonschema.validate(doc, load_schema("kottwitz.averaging.v1"))
    assert doc["verdict"] == "PASS"


def test_usage_errors_exit_2():
    assert run_cli("bgmu", "--group", "GL2", "--mu", "1,0,0").returncode == 2
    assert run_cli("nonsense").returncode == 2
    assert run_cli("describe", "--group", "Q7").returncode == 2
