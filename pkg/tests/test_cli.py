import io
import json
import subprocess
import sys

import pytest

from centralpoly.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_normalize_text():
    code, out = run("normalize", "x2*x1")
    assert code == 0
    assert out.splitlines()[0] == "x1*x2 - [x1,x2]"
    assert "[R]" in out and "[S]" in out


def test_normalize_modulo_identities():
    assert run("normalize", "--p", "3", "--mod-identities", "x1^3")[1].strip() == "0"


def test_commutator_expansion():
    out = run("normalize", "[x1,x2*x3]")[1]
    assert out.splitlines()[0] == "x3*[x1,x2] + x2*[x1,x3]"


def test_verdicts():
    assert run("is-central", "[x1,x2]")[1].startswith("central-non-identity")
    assert run("is-identity", "--p", "3", "x1^3")[1].startswith("identity")
    assert run("is-central", "--p", "3", "--unitary", "x1^3")[1].startswith("central-non-identity")
    out = run("is-central", "x1*x2")[1]
    assert out.startswith("neither") and "assignment: x1 -> e1" in out


def test_literal_route():
    assert run("is-central", "--literal", "--n", "4", "[x1,x2]")[1].strip() == "central-non-identity"


def test_member():
    assert run("member", "[x1,x2]*[x3,x4]", "--set", "CPG0", "--type", "1,1,1,1")[1].startswith("yes")
    assert run("member", "--p", "3", "x2*x1^3", "--set", "CPG0", "--type", "3,1")[1].startswith("yes")
    assert run("member", "x1*x2", "--set", "S", "--type", "1,1")[1].startswith("no-at-this-cap")


def test_json_is_versioned():
    code, out = run("is-central", "--format", "json", "[x1,x2]", "x1*x2")
    doc = json.loads(out)
    assert doc["version"] == 1 and doc["command"] == "is-central"
    assert [r["verdict"] for r in doc["results"]] == ["central-non-identity", "neither"]
    doc = json.loads(run("span", "--set", "T3", "--type", "1,1,1", "--format", "json")[1])
    assert set(doc["results"][0]) >= {"type", "rows", "provenance"}


def test_witness_and_evaluate():
    out = run("witness", "--p", "3", "x1*[x2,x3]")[1]
    assert "M_{1,3}: 3 generators" in out
    out = run("evaluate", "x1*x2", "--at", "x1=e1", "--at", "x2=e2*e3")[1]
    assert out.strip() == "e1*e2*e3"


def test_errors_exit_nonzero(capsys):
    assert run("normalize", "x1 + ")[0] == 2
    assert "position" in capsys.readouterr().err
    assert run("normalize", "--p", "2", "x1")[0] == 2
    assert run("normalize", "1 + x1")[0] == 2


def test_deterministic_output():
    a = run("verify", "lemmas", "--p", "3", "--seed", "4")[1]
    b = run("verify", "lemmas", "--p", "3", "--seed", "4")[1]
    assert a == b and "FAIL" not in a


def test_stdin_and_module_entry():
    res = subprocess.run([sys.executable, "-m", "centralpoly", "normalize"], input="x2*x1\n# skip\n[x1,x2]\n",
                         capture_output=True, text=True, check=True)
    assert res.stdout.splitlines()[0] == "x1*x2 - [x1,x2]"
    assert "[x1,x2]" in res.stdout.splitlines()[3]
