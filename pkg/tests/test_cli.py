import json
import os
import subprocess
import sys

import pytest

from hopfkit.cli import COMMANDS, run

BAD_COACTION = {"schema": "comodule_algebra.v1", "algebra": {"preset": "e0"},
                "bialgebra": {"preset": "kc2"}, "coaction": {"x": "x (x) 1 + 1 (x) g"}}


def _write(tmp_path, doc, name="doc.json"):
    p = tmp_path / name
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(p)


def test_eleven_commands():
    assert len(COMMANDS) == 11


@pytest.mark.parametrize("argv", [
    ["check-hopf", "--preset", "kc2"],
    ["check-hopf", "--preset", "o_slq2", "--degree", "4"],
    ["check-comodule-algebra", "--preset", "e0_kc2"],
    ["check-module-algebra", "--preset", "e0_sign"],
    ["check-hopf-module", "--preset", "regular:e0_kc2"],
    ["distlaw", "--preset", "e0_h4"],
    ["distlaw", "--kind", "module", "--preset", "h4_adjoint"],
    ["distlaw", "--kind", "localized", "--preset", "h4", "--units", "g"],
    ["distlaw", "--kind", "localized", "--preset", "quantum_plane", "--ore", "x",
     "--degree", "6"],
    ["distlaw", "--random", "3", "--seed", "5"],
    ["coborel", "--preset", "e0_kc2", "--levels", "2"],
    ["simplicial", "--preset", "regular:e0_kc2", "--levels", "2"],
    ["localize", "--preset", "quantum_plane", "--ore", "x", "--degree", "4"],
    ["galois", "--preset", "h4"],
    ["galois", "--smash", "--preset", "e0_sign"],
    ["torsor", "--preset", "o_slq2_commutative", "--degree", "4"],
])
def test_passing_commands(argv):
    code, text = run(argv)
    assert code == 0, text
    assert "PASS" in text


def test_bad_coaction_fails_with_counterexample(tmp_path):
    code, text = run(["check-comodule-algebra", _write(tmp_path, BAD_COACTION)])
    assert code == 1
    assert "rho(x*x) = 0 but rho(x)rho(x) = 1 (x) 1 + 2*x (x) g" in text


def test_galois_not_injective_exits_one():
    code, text = run(["galois", "--preset", "e0_kc2"])
    assert code == 1
    assert "NOT_INJECTIVE" in text


def test_invalid_json_cites_position(tmp_path):
    path = _write(tmp_path, '{"schema":\n  oops}')
    code, text = run(["check-hopf", path])
    assert code == 2
    assert f"{path}:2:" in text


def test_dsl_error_cites_position(tmp_path):
    doc = dict(BAD_COACTION, coaction={"x": "x (x) (x) g"})
    code, text = run(["check-comodule-algebra", _write(tmp_path, doc)])
    assert code == 2
    assert "position" in text


@pytest.mark.parametrize("argv", [
    ["check-hopf", "--preset", "nonesuch"],
    ["check-hopf"],
    ["check-hopf", "--preset", "kc2", "--degree", "0"],
    ["distlaw", "--kind", "localized", "--preset", "quantum_plane"],
    ["coborel", "--preset", "e0_kc2", "--levels", "0"],
    ["frobnicate"],
])
def test_input_errors(argv):
    assert run(argv)[0] == 2


def test_missing_file():
    assert run(["check-hopf", "/nonexistent/x.json"])[0] == 2


def test_degree_too_small_is_inconclusive():
    code, text = run(["coinvariants", "--preset", "o_slq2", "--ore", "a", "--degree", "2"])
    assert code == 3
    assert "INCONCLUSIVE" in text


def test_coinvariants_after_localization():
    code, text = run(["coinvariants", "--preset", "o_slq2", "--ore", "a", "--degree", "3"])
    assert code == 0
    assert "a^-1*(c)" in text


def test_json_is_deterministic():
    argv = ["distlaw", "--random", "2", "--seed", "11", "--format", "json"]
    a, b = run(argv), run(argv)
    assert a == b
    doc = json.loads(a[1])
    assert doc["config"] == {"degree": 8, "seed": 11, "input": None, "preset": None}
    assert doc["status"] == "PASS"


def test_seed_changes_instances():
    a = run(["distlaw", "--random", "2", "--seed", "1", "--format", "json"])[1]
    b = run(["distlaw", "--random", "2", "--seed", "2", "--format", "json"])[1]
    assert a != b


def _cli(*argv, env=None):
    full = dict(os.environ, **(env or {}))
    return subprocess.run([sys.executable, "-m", "hopfkit.cli", *argv], capture_output=True,
                          text=True, env=full)


def test_env_degree_bound():
    out = _cli("check-hopf", "--preset", "kc2", "--format", "json",
               env={"HOPFKIT_DEGREE_BOUND": "5"})
    assert out.returncode == 0
    assert json.loads(out.stdout)["config"]["degree"] == 5
    out = _cli("check-hopf", "--preset", "kc2", "--format", "json", "--degree", "7",
               env={"HOPFKIT_DEGREE_BOUND": "5"})
    assert json.loads(out.stdout)["config"]["degree"] == 7


def test_bad_env_value():
    out = _cli("check-hopf", "--preset", "kc2", env={"HOPFKIT_DEGREE_BOUND": "many"})
    assert out.returncode == 2
    assert out.stderr


def test_byte_identical_across_processes():
    argv = ("torsor", "--preset", "o_slq2_commutative", "--degree", "4", "--format", "json")
    first, second = _cli(*argv), _cli(*argv)
    assert first.returncode == 0
    assert first.stdout == second.stdout
