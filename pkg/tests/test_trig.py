import math

import pytest

from qwdirac.errors import PrecisionLoss
from qwdirac.hahn import HahnParams, hahn_derivative
from qwdirac.trig import (combined_argument, cos_qw, eval_cos_z, eval_sin_z,
                          sin_qw, trig_zero, trig_zero_detailed)

# independent high-precision enumeration of the positive zeros in the
# combined argument (40-digit series evaluation, bisected to ~1e-30)
COS_ZEROS_Q05 = (
    0.92703521218567767,
    2.7944894466084042,
    5.6566864948482558,
    11.313708455403148,
    22.627416997968846,
    45.254833995939042,
)
SIN_ZEROS_Q05 = (
    1.833365835781881,
    3.9965190982836478,
    7.9999961343963379,
    15.999999999756841,
    31.999999999999999,
    64.0,
)


def test_exact_values_at_fixed_point():
    p = HahnParams(0.5, 1.0)
    ev = cos_qw(p.omega0, 7.3, p)
    assert ev.value == 1.0 and ev.est_abs_error == 0.0
    ev = sin_qw(p.omega0, 123.0, p)
    assert ev.value == 0.0
    # mu = 0 collapses the argument everywhere
    assert cos_qw(5.5, 0.0, p).value == 1.0
    assert sin_qw(5.5, 0.0, p).value == 0.0


def test_combined_argument():
    p = HahnParams(0.5, 1.0)
    assert combined_argument(p.omega0, 3.0, p) == 0.0
    assert combined_argument(4.0, 2.0, p) == pytest.approx(2.0, rel=1e-15)


def test_small_argument_sine_leading_term():
    # S(z) = z/(1-q) (1 + O(z^2)); reference S(1e-6) at 40 digits
    got = eval_sin_z(1e-6, 0.5)
    assert got.value == pytest.approx(1.9999999999992381e-06, rel=1e-9)


def test_parity_is_exact():
    for z in (0.37, 2.1, 9.4):
        a = eval_cos_z(z, 0.5)
        b = eval_cos_z(-z, 0.5)
        assert a.value == b.value
        sa = eval_sin_z(z, 0.5)
        sb = eval_sin_z(-z, 0.5)
        assert sa.value == -sb.value


def test_trig_eval_diagnostics():
    ev = eval_cos_z(6.0, 0.5)
    assert ev.cancellation >= 1.0
    assert ev.est_abs_error >= 0.0
    assert ev.terms_used > 3


def test_derivative_identities():
    for q, omega in [(0.3, 1.0), (0.5, 0.5), (0.7, 0.1)]:
        p = HahnParams(q, omega)
        rq = math.sqrt(q)
        for (t_off, mu) in [(1.7, 1.0), (0.9, -2.1), (2.5, 0.4)]:
            t = p.omega0 + t_off
            S = lambda s: sin_qw(s, mu, p).value
            C = lambda s: cos_qw(s, mu, p).value
            assert hahn_derivative(S, t, p) == pytest.approx(
                mu * cos_qw(t, rq * mu, p).value, rel=1e-9, abs=1e-12)
            assert hahn_derivative(C, t, p) == pytest.approx(
                -rq * mu * sin_qw(t, rq * mu, p).value, rel=1e-9, abs=1e-12)


def test_derivative_at_fixed_point_via_lattice_limit():
    # D S(., mu) at omega0 is mu; exercises the quotient-limit estimator
    p = HahnParams(0.5, 1.0)
    mu = 1.6
    got = hahn_derivative(lambda s: sin_qw(s, mu, p).value, p.omega0, p)
    assert got == pytest.approx(mu, rel=1e-7)


def test_zero_values_against_high_precision():
    p = HahnParams(0.5, 1.0)
    for n in range(1, 7):
        zr = trig_zero_detailed(n, "sine", p)
        assert zr.z == pytest.approx(SIN_ZEROS_Q05[n - 1], rel=5e-10)
        zc = trig_zero_detailed(n, "cosine", p)
        assert zc.z == pytest.approx(COS_ZEROS_Q05[n - 1], rel=5e-10)
        # map back to t for mu = 1
        assert zr.t == pytest.approx(p.omega0 + zr.z / (1 - p.q), rel=1e-14)
        assert zr.bracket_z[0] <= zr.z <= zr.bracket_z[1]


def test_zero_seed_family_report():
    p = HahnParams(0.5, 1.0)
    for n in range(1, 7):
        assert trig_zero_detailed(n, "sine", p).matched_seed == "q^{-n}"
        assert trig_zero_detailed(n, "cosine", p).matched_seed == "q^{-n+1/2}"


def test_zero_asymptotic_offsets():
    p = HahnParams(0.5, 1.0)
    q = p.q
    for n in range(1, 7):
        t_sin = trig_zero(n, "sine", p)
        asym = p.omega0 + (1 / q) ** n / (1 - q)
        assert abs((t_sin - p.omega0) / (asym - p.omega0) - 1) <= 5 * q**n
        t_cos = trig_zero(n, "cosine", p)
        asym = p.omega0 + (1 / q) ** (n - 0.5) / (1 - q)
        assert abs((t_cos - p.omega0) / (asym - p.omega0) - 1) <= 5 * q**n


def test_zero_spacing_ratio():
    p = HahnParams(0.5, 1.0)
    zs = [trig_zero_detailed(n, "sine", p).z for n in range(1, 7)]
    for n in range(1, 6):
        assert abs(zs[n] / zs[n - 1] * p.q - 1) <= 5 * p.q**n


def test_zero_budget_enforced():
    p = HahnParams(0.5, 1.0)
    with pytest.raises(PrecisionLoss):
        trig_zero_detailed(7, "sine", p)
    with pytest.raises(PrecisionLoss):
        trig_zero_detailed(7, "cosine", p)


def test_eval_precision_loss_guard():
    # z sitting essentially on a high sine zero: the value is roundoff noise
    # (measured cancellation about 7e16) and the evaluation refuses to
    # return it at a tolerance whose guard threshold is below that
    with pytest.raises(PrecisionLoss):
        eval_sin_z(16384.0, 0.5, 0.1)
    # the cosine at the same point is healthy and far from its zeros
    assert eval_cos_z(16384.0, 0.5, 1e-3).cancellation < 100.0


def test_tail_bound_honesty():
    for z in (0.7, 3.3, 11.0):
        for tol in (1e-6, 1e-9, 1e-12):
            a = eval_cos_z(z, 0.5, tol)
            b = eval_cos_z(z, 0.5, tol / 2)
            assert abs(a.value - b.value) <= a.est_abs_error * (1 + 1e-12)
            a = eval_sin_z(z, 0.5, tol)
            b = eval_sin_z(z, 0.5, tol / 2)
            assert abs(a.value - b.value) <= a.est_abs_error * (1 + 1e-12)


def test_invalid_inputs():
    p = HahnParams(0.5, 1.0)
    with pytest.raises(ValueError):
        trig_zero_detailed(0, "sine", p)
    with pytest.raises(ValueError):
        trig_zero_detailed(1, "tangent", p)
    with pytest.raises(ValueError):
        cos_qw(3.0, 1.0, p, tol=-1e-9)
