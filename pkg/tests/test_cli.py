import io
import json
import math
from pathlib import Path

import pytest

jsonschema = pytest.importorskip("jsonschema")

from qwdirac.cli import main

SCHEMA = json.loads(
    (Path(__file__).resolve().parent.parent / "docs" / "spectrum_schema.json")
    .read_text())


def run_cli(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def test_trig_fixed_point_row():
    code, text = run_cli(["trig", "--kind", "cos", "--q", "0.5",
                          "--omega", "1", "--mu", "1", "--t", "2"])
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "t,value,terms_used,cancellation,est_abs_error,status"
    assert lines[1].split(",")[1] == "1"
    assert lines[1].endswith("ok")


def test_trig_sin_mu_zero():
    code, text = run_cli(["trig", "--kind", "sin", "--q", "0.5",
                          "--omega", "1", "--mu", "0", "--t", "5"])
    assert code == 0
    assert text.strip().splitlines()[1].split(",")[1] == "0"


def test_trig_range_row_count():
    code, text = run_cli(["trig", "--kind", "cos", "--q", "0.5",
                          "--omega", "1", "--mu", "1",
                          "--t-range", "2:10:0.5"])
    assert code == 0
    rows = text.strip().splitlines()[1:]
    assert len(rows) == 17
    # cancellation grows overall with t (it also spikes wherever the value
    # crosses zero, so pairwise monotonicity does not hold)
    cancels = [float(r.split(",")[3]) for r in rows]
    assert cancels[-1] > cancels[1] > cancels[0]


def test_trig_precision_loss_row_marks_and_continues():
    code, text = run_cli(["trig", "--kind", "sin", "--q", "0.5",
                          "--omega", "1", "--mu", "1", "--tol-series", "0.1",
                          "--t-range", "2:32770:32768"])
    assert code == 3
    rows = text.strip().splitlines()[1:]
    assert len(rows) == 2
    assert rows[0].endswith("ok")
    assert rows[1].endswith("precision_loss")
    assert rows[1].split(",")[1] == "nan"


def test_trig_json_format():
    code, text = run_cli(["trig", "--kind", "cos", "--q", "0.5",
                          "--omega", "1", "--mu", "1", "--t", "4",
                          "--format", "json"])
    assert code == 0
    doc = json.loads(text)
    assert doc[0]["status"] == "ok"
    assert isinstance(doc[0]["value"], float)


def test_bad_q_exits_2_naming_constraint(capsys):
    code, _ = run_cli(["solve", "--q", "1.5", "--omega", "0.5", "--a",
                       "3.1416", "--lambda", "1", "--c1", "1", "--c2", "0",
                       "--p", "0", "--r", "0"])
    assert code == 2
    assert "(0, 1)" in capsys.readouterr().err


def test_zeros_rows_and_ratio():
    code, text = run_cli(["zeros", "--kind", "sin", "--q", "0.5",
                          "--omega", "1", "--n", "3"])
    assert code == 0
    rows = [r.split(",") for r in text.strip().splitlines()[1:]]
    assert len(rows) == 3
    offsets = [float(r[1]) - 2.0 for r in rows]  # omega0 = 2
    assert offsets[2] / offsets[1] == pytest.approx(2.0, abs=0.01)
    assert all(r[-1] == "q^{-n}" for r in rows)


def test_zeros_budget_exit_4():
    code, _ = run_cli(["zeros", "--kind", "sin", "--q", "0.5",
                       "--omega", "1", "--n", "9"])
    assert code == 4


def test_solve_limit_row():
    code, text = run_cli(["solve", "--q", "0.5", "--omega", "0.5", "--a",
                          "3.1416", "--lambda", "1", "--c1", "1", "--c2",
                          "0", "--p", "0", "--r", "0"])
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "k,t,y1,y2,res1,res2"
    last = lines[-1].split(",")
    assert last[0] == "limit"
    assert float(last[1]) == 1.0  # omega0
    assert float(last[2]) == 1.0 and float(last[3]) == 0.0
    # residual columns stay small on the lattice
    for row in lines[1:-1]:
        parts = row.split(",")
        assert abs(float(parts[4])) < 1e-9
        assert abs(float(parts[5])) < 1e-9


def test_solve_accepts_pi_and_polynomials():
    code, text = run_cli(["solve", "--q", "0.5", "--omega", "0.5", "--a",
                          "pi", "--lambda", "0.7", "--c1", "0", "--c2", "1",
                          "--p", "0.1,0.05", "--r", "0.2"])
    assert code == 0
    first = text.strip().splitlines()[1].split(",")
    assert float(first[1]) == pytest.approx(math.pi, rel=1e-15)


def test_spectrum_example_deterministic_and_schema():
    argv = ["spectrum", "--example", "3.2", "--q", "0.5", "--omega", "0.5",
            "--n-max", "4"]
    code1, text1 = run_cli(argv)
    code2, text2 = run_cli(argv)
    assert code1 == code2 == 0
    assert text1 == text2  # byte-identical
    doc = json.loads(text1)
    jsonschema.validate(doc, SCHEMA)
    assert len(doc["eigenvalues"]) == 4
    devs = [abs(e["rel_dev_from_asym"]) for e in doc["eigenvalues"]]
    assert all(b <= a for a, b in zip(devs, devs[1:]))  # shrinking with n
    assert doc["symmetry"] == "even"


def test_spectrum_example_33_ratios():
    code, text = run_cli(["spectrum", "--example", "3.3", "--q", "0.5",
                          "--omega", "0.5", "--n-max", "4"])
    assert code == 0
    doc = json.loads(text)
    jsonschema.validate(doc, SCHEMA)
    lams = [e["lambda"] for e in doc["eigenvalues"]]
    assert lams[3] / lams[2] == pytest.approx(2.0, abs=1e-3)
    assert doc["trivial_root"] is True


def test_spectrum_custom_rows_schema():
    code, text = run_cli(["spectrum", "--q", "0.5", "--omega", "0.5",
                          "--a", "pi", "--k11", "1", "--k12", "0",
                          "--k21", "1", "--k22", "0", "--p", "0.05",
                          "--r", "0.1,0.02", "--n-max", "2"])
    assert code == 0
    doc = json.loads(text)
    jsonschema.validate(doc, SCHEMA)
    assert doc["params"]["potentials"]["r"] == {"poly": [0.1, 0.02]}


def test_spectrum_budget_exit_4():
    code, text = run_cli(["spectrum", "--example", "3.2", "--q", "0.5",
                          "--omega", "0.5", "--n-max", "7"])
    assert code == 4
    assert json.loads(text)["error"] == "precision_budget_exceeded"


def test_spectrum_missed_root_exit_5_partial_json():
    code, text = run_cli(["spectrum", "--q", "0.5", "--omega", "0.5",
                          "--a", "pi", "--k11", "1", "--k12", "0",
                          "--k21", "0", "--k22", "1", "--p", "100",
                          "--r", "100", "--n-max", "1"])
    assert code == 5
    doc = json.loads(text)
    jsonschema.validate(doc, SCHEMA)
    assert doc["eigenvalues"] == []


def test_spectrum_requires_rows_or_example(capsys):
    code, _ = run_cli(["spectrum", "--q", "0.5", "--omega", "0.5",
                       "--n-max", "2"])
    assert code == 2
    assert "k11" in capsys.readouterr().err


def test_verify_calculus_exit_0():
    code, text = run_cli(["verify", "calculus"])
    assert code == 0
    assert text.strip().splitlines()[-1].startswith("OK")
    assert "calculus.product_rule" in text


def test_verify_seed_flag():
    code, text = run_cli(["verify", "trig", "--seed", "7"])
    assert code == 0
    assert "seed=7" in text


def test_zeros_json_format():
    code, text = run_cli(["zeros", "--kind", "cos", "--q", "0.5",
                          "--omega", "1", "--n", "2", "--format", "json"])
    assert code == 0
    doc = json.loads(text)
    assert len(doc) == 2
    assert doc[0]["matched_seed"] == "q^{-n+1/2}"


def test_solve_json_format():
    code, text = run_cli(["solve", "--q", "0.5", "--omega", "0.5", "--a",
                          "2.0", "--lambda", "0.3", "--c1", "1", "--c2", "0",
                          "--p", "0", "--r", "0", "--format", "json"])
    assert code == 0
    doc = json.loads(text)
    assert doc[-1]["k"] == "limit"
    assert doc[0]["t"] == 2.0


def test_spectrum_example_rejects_conflicting_flags(capsys):
    code, _ = run_cli(["spectrum", "--example", "3.2", "--q", "0.5",
                       "--omega", "0.5", "--a", "4.0", "--n-max", "2"])
    assert code == 2
    assert "fixes a = pi" in capsys.readouterr().err


def test_spectrum_warnings_surface_in_output():
    # at the budget edge the norm-identity derivative step destabilizes for
    # the odd family's last eigenvalue; the condition must appear in the
    # emitted document instead of being swallowed
    code, text = run_cli(["spectrum", "--example", "3.3", "--q", "0.5",
                          "--omega", "0.5", "--n-max", "6"])
    assert code == 0
    doc = json.loads(text)
    assert any("norm identity skipped" in w for w in doc["warnings"])
    assert doc["eigenvalues"][5]["norm_identity"] is None


def test_float_rendering_round_trips():
    import random

    from qwdirac.cli import _fmt

    rng = random.Random(3)
    for _ in range(2000):
        x = rng.uniform(-1, 1) * 10.0 ** rng.randint(-300, 300)
        assert float(_fmt(x)) == x


def test_verify_reports_failure_exit_1(monkeypatch):
    from qwdirac import verify as verify_mod
    from qwdirac.verify import PropertyResult

    def failing_suite(seed=0):
        return [PropertyResult("demo.always_fails", False, 1.0, 0.0)]

    monkeypatch.setitem(verify_mod.SUITES, "calculus", failing_suite)
    code, text = run_cli(["verify", "calculus"])
    assert code == 1
    assert "FAIL  demo.always_fails" in text
    assert text.strip().splitlines()[-1].startswith("FAILURE")
