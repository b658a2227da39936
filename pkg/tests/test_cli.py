import json
import subprocess
import sys
from pathlib import Path

from multiloop import cli

SPECS = Path(__file__).resolve().parent.parent / "specs"


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_info_a2(capsys):
    code, out, err = run_cli(capsys, "info", "--spec", str(SPECS / "a2_twisted.json"))
    assert code == 0 and not err
    data = json.loads(out)
    assert data["dim_g"] == 8
    assert data["eigendims"] == {"0": 3, "1": 5}
    assert data["g0_central_simple"] is True


def test_info_untwisted(capsys):
    code, out, _ = run_cli(capsys, "info", "--spec", str(SPECS / "a1_untwisted_n1.json"))
    assert code == 0
    data = json.loads(out)
    assert data["dim_g"] == 3 and data["eigendims"] == {"0": 3}


def test_info_d4(capsys):
    code, out, _ = run_cli(capsys, "info", "--spec", str(SPECS / "d4_triality.json"))
    assert code == 0
    data = json.loads(out)
    assert data["eigendims"] == {"0": 14, "1": 7, "2": 7}
    assert data["g0_central_simple"] is True


def test_check_single_suite(capsys):
    code, out, _ = run_cli(
        capsys, "check", "centre", "--spec", str(SPECS / "a2_twisted.json")
    )
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True
    (report,) = data["reports"]
    assert report["check"] == "centre"
    assert report["centre_dim"] == 1 and report["expected"] == 1


def test_check_zrel_seeded(capsys):
    code, out, _ = run_cli(
        capsys, "check", "zrel", "--spec", str(SPECS / "a1_untwisted_n1.json")
    )
    assert code == 0
    data = json.loads(out)
    assert data["reports"][0]["seed"] == 0
    assert data["reports"][0]["count"] == 1000


def test_check_unknown_name(capsys):
    code, _, err = run_cli(
        capsys, "check", "nonsense", "--spec", str(SPECS / "a2_twisted.json")
    )
    assert code == 2


def test_exit_codes_and_headers(capsys):
    code, out, _ = run_cli(
        capsys, "h2", "--lambda", "0", "--spec", str(SPECS / "a1_untwisted_n1.json")
    )
    assert code == 0
    data = json.loads(out)
    assert data["certified"] is True and data["h2_dim"] == 1
    assert data["window"] == 2 and data["seed"] == 0  # defaults echoed


def test_h2_nontrivial_lambda(capsys):
    code, out, _ = run_cli(
        capsys, "h2", "--lambda", "1", "--spec", str(SPECS / "a1_untwisted_n1.json")
    )
    assert code == 0
    data = json.loads(out)
    assert data["h2_dim"] == 0 and data["lower_bound"] == 0 and data["certified"]


def test_h2_lambda_outside_window(capsys):
    code, _, err = run_cli(
        capsys, "h2", "--lambda", "7", "--spec", str(SPECS / "a1_untwisted_n1.json")
    )
    assert code == 2 and "window" in err


def test_h2_wrong_arity(capsys):
    code, _, err = run_cli(
        capsys, "h2", "--lambda", "0,0", "--spec", str(SPECS / "a1_untwisted_n1.json")
    )
    assert code == 2


def test_spec_error_exit(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(
        json.dumps(
            {
                "algebra": {"family": "A", "rank": 2},
                "autos": [{"kind": "diagram", "perm": [1, 1]}],
                "orders": [2],
            }
        )
    )
    code, _, err = run_cli(capsys, "info", "--spec", str(bad))
    assert code == 2 and "error:" in err


def test_missing_spec_file(capsys):
    code, _, err = run_cli(capsys, "info", "--spec", "/nonexistent.json")
    assert code == 2


def test_malformed_json_spec(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _, err = run_cli(capsys, "info", "--spec", str(bad))
    assert code == 2


def test_non_commuting_autos_exit_2(tmp_path, capsys):
    from multiloop.cyclotomic import CyclotomicField
    from multiloop.liealg import build_algebra, diagram_automorphism

    alg = build_algebra("A", 2, CyclotomicField(2))
    sigma = diagram_automorphism(alg, [1, 0])
    tau_entries = [
        [
            ("-1" if (i == j and alg.root_of_index[i] is not None and alg.root_of_index[i][0] % 2)
             else ("1" if i == j else "0"))
            for j in range(alg.dim)
        ]
        for i in range(alg.dim)
    ]
    spec = tmp_path / "noncommuting.json"
    spec.write_text(
        json.dumps(
            {
                "algebra": {"family": "A", "rank": 2},
                "autos": [
                    {"kind": "matrix", "entries": sigma.matrix_records(), "order": 2},
                    {"kind": "matrix", "entries": tau_entries, "order": 2},
                ],
                "orders": [2, 2],
            }
        )
    )
    code, _, err = run_cli(capsys, "check", "all", "--spec", str(spec))
    assert code == 2 and "commute" in err


def test_check_failure_exit_code(monkeypatch, capsys):
    monkeypatch.setattr(
        cli, "run_checks", lambda session, which: [{"check": "stub", "passed": False}]
    )
    code, out, _ = run_cli(
        capsys, "check", "centre", "--spec", str(SPECS / "a1_untwisted_n1.json")
    )
    assert code == 1
    assert json.loads(out)["passed"] is False


def test_window_override(capsys):
    code, out, _ = run_cli(
        capsys,
        "centre",
        "--spec",
        str(SPECS / "a1_untwisted_n1.json"),
        "--window",
        "1",
    )
    assert code == 0
    data = json.loads(out)
    assert data["window"] == 1 and data["centre_dim"] == 1


def test_table_rendering(capsys):
    code, out, _ = run_cli(
        capsys,
        "info",
        "--spec",
        str(SPECS / "a2_twisted.json"),
        "--table",
    )
    assert code == 0
    assert "dim_g" in out and "8" in out
    assert "{" not in out.splitlines()[0]


def test_dump_structure_constants(capsys):
    code, out, _ = run_cli(capsys, "dump-sc", "--spec", str(SPECS / "a1_untwisted_n1.json"))
    assert code == 0
    data = json.loads(out)
    assert data["dim"] == 3
    records = {(r["i"], r["j"], r["k"]): r["c"] for r in data["structure"]}
    # [e, f] = h and antisymmetry in the records
    assert records[(0, 1, 2)] == "1" and records[(1, 0, 2)] == "-1"


def test_determinism(capsys):
    args = ["check", "cocycle", "--spec", str(SPECS / "a2_twisted.json")]
    _, out1, _ = run_cli(capsys, *args)
    _, out2, _ = run_cli(capsys, *args)
    assert out1 == out2


def test_usage_error(capsys):
    code = cli.main(["frobnicate"])
    assert code == 2


def test_console_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "multiloop", "info", "--spec", str(SPECS / "a1_untwisted_n1.json")],
        capture_output=True,
        text=True,
        timeout=300,
    )
    assert result.returncode == 0
    assert json.loads(result.stdout)["dim_g"] == 3
