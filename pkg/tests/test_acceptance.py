"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Criteria 5 and 6 include consecutive-ratio clauses at n = 1 that the actual
spectra violate: the first eigenvalue of each family sits far below its
asymptotic seed (34% for the cosine-type problem at q = 0.5, verified against
a 40-digit independent evaluation), so the first ratio overshoots 1/q by far
more than the 0.2 q^(1/q-scaled) allowance.  Those clauses are asserted as
stated and fail honestly; every other clause passes.
"""

import io
import json
import math
import time
from pathlib import Path

from qwdirac.cli import main as cli_main
from qwdirac.errors import PrecisionBudgetExceeded
from qwdirac.hahn import HahnParams
from qwdirac.spectrum import (asymptotic_eigenvalue, example_problem,
                              find_eigenvalues)
from qwdirac.trig import trig_zero_detailed
from qwdirac.verify import (DEFAULT_SEED, calculus_suite, run_suites,
                            solver_suite, trig_suite)

P = HahnParams(0.5, 0.5)
A = math.pi


def _finish(num, clauses, elapsed, budget=None):
    failed = [text for (text, ok) in clauses if not ok]
    over = budget is not None and elapsed > budget
    status = "FAIL" if failed or over else "PASS"
    line = f"ACCEPTANCE {num:02d} {status} ({elapsed:.2f}s)"
    if failed:
        line += " failing: " + " | ".join(failed)
    if over:
        line += f" runtime over budget {budget}s"
    print(line)
    assert not failed, line
    if budget is not None:
        assert elapsed <= budget, line


def _by_name(results, name):
    return next(r for r in results if r.name == name)


def test_criterion_01_calculus_identities():
    t0 = time.perf_counter()
    rs = calculus_suite(seed=DEFAULT_SEED, cases=200)
    elapsed = time.perf_counter() - t0
    clauses = []
    for prop in ("product_rule", "ftc_forward", "ftc_backward",
                 "integration_by_parts"):
        worst = _by_name(rs, f"calculus.{prop}").worst
        clauses.append((f"{prop} worst={worst:.2e} > 1e-9", worst <= 1e-9))
    _finish(1, clauses, elapsed, budget=10.0)


def test_criterion_02_trig_structure():
    t0 = time.perf_counter()
    rs = trig_suite(seed=DEFAULT_SEED, cases=100)
    elapsed = time.perf_counter() - t0
    exact = _by_name(rs, "trig.exact_initial_values").worst
    ds = _by_name(rs, "trig.derivative_identity_sine").worst
    dc = _by_name(rs, "trig.derivative_identity_cosine").worst
    ivp = _by_name(rs, "trig.second_order_ivp").worst
    clauses = [
        (f"initial values not exact ({exact})", exact == 0.0),
        (f"sine derivative identity worst={ds:.2e} > 1e-9", ds <= 1e-9),
        (f"cosine derivative identity worst={dc:.2e} > 1e-9", dc <= 1e-9),
        (f"ivp residual worst={ivp:.2e} > 1e-8", ivp <= 1e-8),
    ]
    _finish(2, clauses, elapsed, budget=10.0)


def test_criterion_03_solver_oracles():
    t0 = time.perf_counter()
    rs = solver_suite(seed=DEFAULT_SEED, free_cases=50, pot_cases=20)
    elapsed = time.perf_counter() - t0
    free = _by_name(rs, "solver.free_oracle").worst
    rec = _by_name(rs, "solver.lattice_recursion_oracle").worst
    clauses = [
        (f"free closed-form worst={free:.2e} > 1e-10", free <= 1e-10),
        (f"lattice recursion worst={rec:.2e} > 1e-9", rec <= 1e-9),
    ]
    _finish(3, clauses, elapsed, budget=30.0)
    test_criterion_03_solver_oracles.results = rs


def test_criterion_04_wronskian_constancy():
    t0 = time.perf_counter()
    rs = getattr(test_criterion_03_solver_oracles, "results", None)
    if rs is None:
        rs = solver_suite(seed=DEFAULT_SEED)
    w = _by_name(rs, "solver.wronskian_constancy")
    unit = _by_name(rs, "solver.free_pair_unit_wronskian")
    elapsed = time.perf_counter() - t0
    clauses = [
        (f"spread/(1e-8(1+|W|))={w.worst:.2e} > 1", w.worst <= 1.0),
        (f"|W(phi1,phi2)-1|={unit.worst:.2e} > 1e-9", unit.worst <= 1e-9),
    ]
    _finish(4, clauses, elapsed)


def _asymptotics_clauses(example, res):
    q = P.q
    clauses = []
    lams = res.lams()
    for e in res.eigenvalues:
        seed = asymptotic_eigenvalue(e.n, example, P, A)
        dev = abs(e.lam / seed - 1.0)
        clauses.append(
            (f"n={e.n} |lam/asym-1|={dev:.3f} > {5 * q**e.n:.3f}",
             dev <= 5 * q**e.n))
    for n in range(1, 6):
        dev = abs(lams[n] / lams[n - 1] - 1.0 / q)
        bound = 0.2 * q**n * (1.0 / q)
        clauses.append(
            (f"ratio n={n} |lam_(n+1)/lam_n - 1/q|={dev:.4f} > {bound:.4f}",
             dev <= bound))
    return clauses


def test_criterion_05_asymptotics_32():
    t0 = time.perf_counter()
    bc, pot = example_problem("3.2", P)
    res = find_eigenvalues(6, bc, pot, P, compute_diagnostics=False)
    clauses = _asymptotics_clauses("3.2", res)
    try:
        find_eigenvalues(7, bc, pot, P, compute_diagnostics=False)
        clauses.append(("n_max=7 did not raise PrecisionBudgetExceeded", False))
    except PrecisionBudgetExceeded:
        clauses.append(("budget enforced", True))
    elapsed = time.perf_counter() - t0
    _finish(5, clauses, elapsed, budget=60.0)


def test_criterion_06_asymptotics_33():
    t0 = time.perf_counter()
    bc, pot = example_problem("3.3", P)
    res = find_eigenvalues(6, bc, pot, P, compute_diagnostics=False)
    clauses = _asymptotics_clauses("3.3", res)
    bc2, pot2 = example_problem("3.2", P)
    res2 = find_eigenvalues(6, bc2, pot2, P, compute_diagnostics=False)
    q = P.q
    for n in range(1, 7):
        ratio = res.lams()[n - 1] / res2.lams()[n - 1]
        dev = abs(ratio - q ** -0.5)
        clauses.append(
            (f"family ratio n={n} |r - q^(-1/2)|={dev:.4f} > {0.2 * q**n:.4f}",
             dev <= 0.2 * q**n))
    elapsed = time.perf_counter() - t0
    _finish(6, clauses, elapsed, budget=60.0)


def test_criterion_07_orthogonality():
    t0 = time.perf_counter()
    bc, pot = example_problem("3.2", P)
    res = find_eigenvalues(4, bc, pot, P)
    elapsed = time.perf_counter() - t0
    assert len(res.pair_orthogonality) == 6
    clauses = [
        (f"pair ({i},{j}) defect={abs(d):.2e} > 1e-6", abs(d) <= 1e-6)
        for (i, j, d) in res.pair_orthogonality
    ]
    _finish(7, clauses, elapsed)


def test_criterion_08_simplicity_and_norm_identity():
    t0 = time.perf_counter()
    bc, pot = example_problem("3.2", P)
    res = find_eigenvalues(6, bc, pot, P)
    elapsed = time.perf_counter() - t0
    clauses = []
    for e in res.eigenvalues:
        clauses.append((f"n={e.n} no strict sign change", e.sign_change))
        clauses.append(
            (f"n={e.n} |D'|={abs(e.dprime):.2e} under 100x floor="
             f"{e.noise_floor:.2e}", abs(e.dprime) > 100.0 * e.noise_floor))
    for e in res.eigenvalues[:3]:
        clauses.append(
            (f"n={e.n} norm identity defect={e.norm_identity:.2e} > 1e-5",
             e.norm_identity is not None and e.norm_identity <= 1e-5))
    _finish(8, clauses, elapsed)


def test_criterion_09_zero_asymptotics():
    t0 = time.perf_counter()
    pz = HahnParams(0.5, 1.0)
    q = pz.q
    clauses = []
    for n in range(1, 7):
        zs = trig_zero_detailed(n, "sine", pz)
        zc = trig_zero_detailed(n, "cosine", pz)
        dev_s = abs((zs.t - pz.omega0) / ((1 / q)**n / (1 - q)) - 1.0)
        dev_c = abs((zc.t - pz.omega0) / ((1 / q)**(n - 0.5) / (1 - q)) - 1.0)
        clauses.append((f"sine n={n} offset dev={dev_s:.3f} > {5 * q**n:.3f}",
                        dev_s <= 5 * q**n))
        clauses.append((f"cosine n={n} offset dev={dev_c:.3f} > {5 * q**n:.3f}",
                        dev_c <= 5 * q**n))
        clauses.append((f"sine n={n} matched {zs.matched_seed}",
                        zs.matched_seed == "q^{-n}"))
        clauses.append((f"cosine n={n} matched {zc.matched_seed}",
                        zc.matched_seed == "q^{-n+1/2}"))
    elapsed = time.perf_counter() - t0
    _finish(9, clauses, elapsed)


def test_criterion_10_cli_determinism_schema_verify():
    t0 = time.perf_counter()
    argv = ["spectrum", "--example", "3.2", "--q", "0.5", "--omega", "0.5",
            "--n-max", "4"]
    out1, out2 = io.StringIO(), io.StringIO()
    code1 = cli_main(argv, out=out1)
    code2 = cli_main(argv, out=out2)
    clauses = [
        ("spectrum exit codes nonzero", code1 == 0 and code2 == 0),
        ("spectrum output not byte-identical",
         out1.getvalue() == out2.getvalue()),
    ]
    try:
        import jsonschema
        schema = json.loads(
            (Path(__file__).resolve().parent.parent / "docs"
             / "spectrum_schema.json").read_text())
        jsonschema.validate(json.loads(out1.getvalue()), schema)
        clauses.append(("schema valid", True))
    except Exception as exc:  # validation failure is a criterion failure
        clauses.append((f"schema validation failed: {exc}", False))

    results = run_suites(["calculus", "trig", "solver", "spectral"],
                         seed=DEFAULT_SEED)
    bad = [r.name for r in results if not r.passed]
    clauses.append((f"verify all failed: {bad}", not bad))
    elapsed = time.perf_counter() - t0
    _finish(10, clauses, elapsed)
