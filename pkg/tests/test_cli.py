import json
import math

import pytest

from projconst.cli import CSV_HEADER, OutputRecord, main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_compute_text(capsys):
    code, out, _ = run_cli(
        capsys, "compute", "--family", "harmonic", "--n", "3", "--d", "2"
    )
    assert code == 0
    assert "harmonic n=3 d=2 dim=5" in out
    assert f"{10 * math.sqrt(3) / 9:.10g}"[:10] in out


def test_compute_json_roundtrip(capsys):
    code, out, _ = run_cli(
        capsys,
        "compute", "--family", "polyleq", "--n", "4", "--d", "3", "--format", "json",
    )
    assert code == 0
    record = OutputRecord.from_json(out.strip())
    assert record.family == "polyleq"
    assert record.dim == 30
    data = json.loads(out)
    assert data["value"] == record.value  # exact float round-trip


def test_compute_csv_roundtrip(capsys):
    code, out, _ = run_cli(
        capsys,
        "compute", "--family", "homogeneous", "--n", "3", "--d", "5", "--format", "csv",
    )
    assert code == 0
    record = OutputRecord.from_csv(out.strip())
    assert (record.family, record.n, record.d) == ("homogeneous", 3, 5)
    assert record.to_csv() == out.strip()


def test_compute_hilbert_families(capsys):
    code, out, _ = run_cli(
        capsys,
        "compute", "--family", "hilbert-real", "--n", "2", "--d", "0", "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["value"] == pytest.approx(4 / math.pi, rel=1e-12)


def test_compute_usage_error_exit_2(capsys):
    code, _, err = run_cli(
        capsys, "compute", "--family", "harmonic", "--n", "1", "--d", "2"
    )
    assert code == 2
    assert "error" in err


def test_compute_unknown_family_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--family", "bogus", "--n", "3", "--d", "2"])
    assert exc.value.code == 2


def test_compute_tolerance_exit_3(capsys):
    code, _, err = run_cli(
        capsys,
        "compute", "--family", "harmonic", "--n", "3", "--d", "40", "--tol", "1e-18",
    )
    assert code == 3
    assert "tolerance" in err


def test_env_tolerance_override(capsys, monkeypatch):
    monkeypatch.setenv("PROJCONST_TOL", "1e-18")
    code, _, _ = run_cli(
        capsys, "compute", "--family", "harmonic", "--n", "3", "--d", "40"
    )
    assert code == 3
    # explicit --tol wins over the environment
    code, _, _ = run_cli(
        capsys,
        "compute", "--family", "harmonic", "--n", "3", "--d", "40", "--tol", "1e-9",
    )
    assert code == 0


def test_table_csv(capsys):
    code, out, _ = run_cli(
        capsys,
        "table", "--family", "harmonic", "--n", "3", "--d-max", "4", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == CSV_HEADER
    records = [OutputRecord.from_csv(line) for line in lines[1:]]
    assert [r.d for r in records] == [1, 2, 3, 4]
    assert records[1].value == pytest.approx(10 * math.sqrt(3) / 9, rel=1e-10)


def test_table_matches_compute(capsys):
    code, table_out, _ = run_cli(
        capsys,
        "table", "--family", "polyleq", "--n", "3",
        "--d-min", "2", "--d-max", "3", "--format", "json",
    )
    assert code == 0
    rows = [json.loads(line) for line in table_out.strip().splitlines()]
    for row in rows:
        code, out, _ = run_cli(
            capsys,
            "compute", "--family", "polyleq", "--n", "3",
            "--d", str(row["d"]), "--format", "json",
        )
        assert code == 0
        assert json.loads(out)["value"] == row["value"]


def test_table_tolerance_markers_exit_3(capsys):
    code, out, _ = run_cli(
        capsys,
        "table", "--family", "harmonic", "--n", "3",
        "--d-min", "39", "--d-max", "40", "--tol", "1e-18", "--format", "csv",
    )
    assert code == 3
    assert "ToleranceFailure" in out


def test_limits_defaults(capsys):
    code, out, _ = run_cli(capsys, "limits", "--family", "homogeneous", "--n", "4")
    assert code == 0
    assert "d_power" in out
    value = float(out.strip().rsplit(" ", 1)[-1])
    assert value == pytest.approx(2 / math.pi, rel=1e-13)

    code, out, _ = run_cli(capsys, "limits", "--family", "polyleq", "--n", "2")
    assert code == 0
    assert "log_d" in out


def test_limits_invalid_combination_exit_2(capsys):
    code, _, err = run_cli(
        capsys, "limits", "--family", "homogeneous", "--n", "3",
        "--normalization", "dim_sqrt",
    )
    assert code == 2
    assert "error" in err


def test_converge(capsys):
    code, out, _ = run_cli(
        capsys,
        "converge", "--family", "harmonic", "--n", "3", "--d-values", "20,80",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "d,finite_ratio,limit,deviation"
    assert len(lines) == 3


def test_converge_bad_d_values_exit_2(capsys):
    code, _, err = run_cli(
        capsys,
        "converge", "--family", "harmonic", "--n", "3", "--d-values", "20,20",
    )
    assert code == 2


def test_verify_quick(capsys):
    code, out, _ = run_cli(capsys, "verify", "--quick", "--seed", "42")
    assert code == 0
    assert "0 failures (seed=42)" in out


def test_verify_quick_deterministic(capsys):
    _, out_a, _ = run_cli(capsys, "verify", "--quick", "--seed", "42")
    _, out_b, _ = run_cli(capsys, "verify", "--quick", "--seed", "42")
    assert out_a == out_b


def test_verify_fault_injection_detected(capsys):
    code, out, _ = run_cli(capsys, "verify", "--quick", "--seed", "42", "--inject-fault")
    assert code == 1
    lines = out.strip().splitlines()
    failures = [json.loads(line) for line in lines[:-1]]
    assert failures, "injected fault must surface as explicit failures"
    for failure in failures:
        assert {"check", "expected", "got", "tolerance"} <= set(failure)
    assert "0 failures" not in lines[-1]
    # the fault scale must be restored afterwards
    code, out, _ = run_cli(capsys, "verify", "--quick", "--seed", "42")
    assert code == 0


def test_kernel_csv(capsys):
    code, out, _ = run_cli(
        capsys,
        "kernel", "--family", "harmonic", "--n", "3", "--d", "2", "--samples", "5",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "t,k_sum,k_closed"
    assert len(lines) == 6
    t, k_sum, k_closed = (float(v) for v in lines[-1].split(","))
    assert t == 1.0
    assert k_sum == pytest.approx(5.0, rel=1e-12)
    assert k_closed == pytest.approx(5.0, rel=1e-12)


def test_kernel_bad_samples_exit_2(capsys):
    code, _, _ = run_cli(
        capsys,
        "kernel", "--family", "harmonic", "--n", "3", "--d", "2", "--samples", "1",
    )
    assert code == 2


def test_no_subcommand_exit_2():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2
