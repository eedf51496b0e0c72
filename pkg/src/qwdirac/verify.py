"""Randomized property suites over the calculus, trig, solver and spectral
layers.

Each suite draws its cases from a seeded generator (deterministic by
default), evaluates every property on all cases and reports the worst defect
against the property's tolerance.  The CLI `verify` subcommand prints one
line per property; the test suite asserts on the same results.
"""

import math
from dataclasses import dataclass

import numpy as np

from . import spectrum as spectra
from .hahn import (HahnParams, RealFunction, hahn_derivative, dual_derivative,
                   jn_integral)
from .solver import (Potentials, fundamental_pair, picard_solve, solve_free,
                     wronskian)
from .trig import cos_qw, sin_qw, eval_cos_z, eval_sin_z, trig_zero_detailed
from .errors import PrecisionBudgetExceeded

DEFAULT_SEED = 1729

_Q_CHOICES = (0.3, 0.5, 0.7)
_OMEGA_CHOICES = (0.1, 0.5, 1.0)


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed: bool
    worst: float
    tol: float
    detail: str = ""


def _poly(coeffs):
    c = np.asarray(coeffs, dtype=float)

    def fn(t):
        out = 0.0
        for a in c[::-1]:
            out = out * t + a
        return out

    return fn


def _dpoly(coeffs):
    c = np.asarray(coeffs, dtype=float)
    return _poly([k * c[k] for k in range(1, len(c))]) if len(c) > 1 else _poly([0.0])


def _rand_poly(rng, params, deg=4):
    coeffs = rng.uniform(-1.0, 1.0, deg + 1)
    return RealFunction(_poly(coeffs), _dpoly(coeffs)(params.omega0)), coeffs


def _rand_params(rng):
    return HahnParams(_Q_CHOICES[rng.integers(3)], _OMEGA_CHOICES[rng.integers(3)])


def _rel(lhs, rhs):
    return abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1.0)


def calculus_suite(seed=DEFAULT_SEED, cases=200):
    rng = np.random.default_rng(seed)
    worst_prod = worst_fwd = worst_bwd = worst_ibp = worst_dual = 0.0
    int_tol = 1e-13

    for _ in range(cases):
        p = _rand_params(rng)
        w0 = p.omega0
        f, _ = _rand_poly(rng, p)
        g, _ = _rand_poly(rng, p)
        t = w0 + rng.uniform(0.2, 3.0)

        # product rule
        fg = RealFunction(lambda s: f(s) * g(s))
        lhs = hahn_derivative(fg, t, p)
        rhs = hahn_derivative(f, t, p) * g(t) + f(p.h(t)) * hahn_derivative(g, t, p)
        worst_prod = max(worst_prod, _rel(lhs, rhs))

        # fundamental theorem, forward
        x = w0 + rng.uniform(0.2, 3.0)
        F = lambda s: jn_integral(f, w0, s, p, int_tol)
        dF = (F(p.h(x)) - F(x)) / (-(1.0 - p.q) * (x - w0))
        worst_fwd = max(worst_fwd, _rel(dF, f(x)))

        # fundamental theorem, backward
        a = w0 + rng.uniform(0.2, 2.0)
        b = a + rng.uniform(0.2, 2.0)
        df = RealFunction(lambda s: hahn_derivative(f, s, p),
                          None)
        got = jn_integral(df, a, b, p, int_tol)
        worst_bwd = max(worst_bwd, _rel(got, f(b) - f(a)))

        # integration by parts
        dg = RealFunction(lambda s: hahn_derivative(g, s, p))
        lhs = jn_integral(lambda s: f(s) * dg(s), a, b, p, int_tol)
        rhs = (f(b) * g(b) - f(a) * g(a)
               - jn_integral(lambda s: df(s) * g(p.h(s)), a, b, p, int_tol))
        worst_ibp = max(worst_ibp, _rel(lhs, rhs))

        # dual identity, exact by composition
        worst_dual = max(worst_dual, abs(
            dual_derivative(f, t, p) - hahn_derivative(f, p.h_inv(t), p)))

    # classical q-derivative limit for small omega
    worst_lim = 0.0
    for q in _Q_CHOICES:
        p = HahnParams(q, 1e-8)
        rngl = np.random.default_rng(seed + 1)
        for _ in range(20):
            f, _ = _rand_poly(rngl, p)
            t = rngl.uniform(0.5, 3.0)
            jackson = (f(q * t) - f(t)) / (t * (q - 1.0))
            worst_lim = max(worst_lim, _rel(hahn_derivative(f, t, p), jackson))

    return [
        PropertyResult("calculus.product_rule", worst_prod <= 1e-12, worst_prod, 1e-12),
        PropertyResult("calculus.ftc_forward", worst_fwd <= 1e-10, worst_fwd, 1e-10),
        PropertyResult("calculus.ftc_backward", worst_bwd <= 1e-10, worst_bwd, 1e-10),
        PropertyResult("calculus.integration_by_parts", worst_ibp <= 1e-9, worst_ibp, 1e-9),
        PropertyResult("calculus.dual_identity", worst_dual == 0.0, worst_dual, 0.0),
        PropertyResult("calculus.jackson_limit", worst_lim <= 1e-5, worst_lim, 1e-5),
    ]


def trig_suite(seed=DEFAULT_SEED, cases=100):
    rng = np.random.default_rng(seed)
    worst_ds = worst_dc = 0.0
    for _ in range(cases):
        p = _rand_params(rng)
        rq = math.sqrt(p.q)
        t = p.omega0 + rng.uniform(0.0, 3.0)
        mu = rng.uniform(-3.0, 3.0)
        S = lambda s: sin_qw(s, mu, p).value
        C = lambda s: cos_qw(s, mu, p).value
        if not p.is_fixed_point(t):
            ds = hahn_derivative(S, t, p)
            dc = hahn_derivative(C, t, p)
        else:
            ds, dc = mu, 0.0
        worst_ds = max(worst_ds, _rel(ds, mu * cos_qw(t, rq * mu, p).value))
        worst_dc = max(worst_dc, _rel(dc, -rq * mu * sin_qw(t, rq * mu, p).value))

    # second-order initial value problem at lattice points; the double
    # difference quotient amplifies roundoff like eps / q^(2k), so the check
    # stops at depth 6 where the floor is still well under the tolerance
    worst_ivp = 0.0
    exact_init = 0.0
    ivp_tol = 1e-14
    for q in _Q_CHOICES:
        p = HahnParams(q, 0.5)
        w0 = p.omega0
        exact_init = max(exact_init,
                         abs(cos_qw(w0, 1.0, p).value - 1.0),
                         abs(sin_qw(w0, 1.0, p).value))
        for fn, d0 in ((lambda s: cos_qw(s, 1.0, p, ivp_tol).value, 0.0),
                       (lambda s: sin_qw(s, 1.0, p, ivp_tol).value, 1.0)):
            y = RealFunction(fn)
            dy = RealFunction(lambda s: hahn_derivative(y, s, p), d0)
            for k in range(7):
                t = w0 + q**k * 2.0
                lhs = -(1.0 / q) * hahn_derivative(dy, p.h_inv(t), p)
                worst_ivp = max(worst_ivp, _rel(lhs, fn(t)))

    # zero spacing: offset ratios approach 1/q
    worst_sp = 0.0
    p = HahnParams(0.5, 1.0)
    zs = [trig_zero_detailed(n, "sine", p).z for n in range(1, 7)]
    zc = [trig_zero_detailed(n, "cosine", p).z for n in range(1, 7)]
    for n in range(1, 6):
        worst_sp = max(worst_sp,
                       abs(zs[n] / zs[n - 1] * p.q - 1.0) / (5 * p.q**n),
                       abs(zc[n] / zc[n - 1] * p.q - 1.0) / (5 * p.q**n))

    # tail bound honesty: re-evaluation at half tolerance stays inside it
    worst_tail = 0.0
    rng2 = np.random.default_rng(seed + 2)
    for _ in range(60):
        q = _Q_CHOICES[rng2.integers(3)]
        z = rng2.uniform(0.01, 12.0)
        tol = 10.0 ** rng2.uniform(-12, -6)
        for ev, ev2 in ((eval_cos_z(z, q, tol), eval_cos_z(z, q, tol / 2)),
                        (eval_sin_z(z, q, tol), eval_sin_z(z, q, tol / 2))):
            err = abs(ev.value - ev2.value)
            if ev.est_abs_error > 0:
                worst_tail = max(worst_tail, err / ev.est_abs_error)

    return [
        PropertyResult("trig.exact_initial_values", exact_init == 0.0, exact_init, 0.0),
        PropertyResult("trig.derivative_identity_sine", worst_ds <= 1e-9, worst_ds, 1e-9),
        PropertyResult("trig.derivative_identity_cosine", worst_dc <= 1e-9, worst_dc, 1e-9),
        PropertyResult("trig.second_order_ivp", worst_ivp <= 1e-8, worst_ivp, 1e-8),
        PropertyResult("trig.zero_spacing", worst_sp <= 1.0, worst_sp, 1.0,
                       "normalized by 5 q^n"),
        PropertyResult("trig.tail_bound", worst_tail <= 1.0, worst_tail, 1.0,
                       "|re-eval shift| / est_abs_error"),
    ]


def _rand_potentials(rng, params, x, bound=1.0):
    """Random constant or polynomial potentials with sup norm <= bound on
    [omega0, x].  Unbounded draws would push solutions to scales where the
    Wronskian (an O(1) constant) drowns in the products forming it."""
    if rng.integers(2) == 0:
        return Potentials.constants(rng.uniform(-bound, bound),
                                    rng.uniform(-bound, bound))
    deg = int(rng.integers(1, 4))
    grid = np.linspace(params.omega0, x, 33)

    def draw():
        c = rng.uniform(-1.0, 1.0, deg + 1)
        sup = max(abs(_poly(c)(t)) for t in grid)
        return c * (bound / max(sup, 1e-9)) * rng.uniform(0.2, 1.0)

    return Potentials.polynomials(draw(), draw())


def recursion_oracle(pot, c1, c2, lam, pts, params):
    """March the two difference equations pointwise from the deep end of the
    lattice; independent of the integral-equation solver."""
    q = params.q
    w0 = params.omega0
    m = len(pts)
    y1 = np.empty(m)
    y2 = np.empty(m)
    y1[m - 1] = c1 + (pts[m - 1] - w0) * (lam - pot.r(pts[m - 1])) * c2
    y2[m - 1] = c2 + q * (pts[m - 1] - w0) * (pot.p(params.h(pts[m - 1])) - lam) * c1
    for j in range(m - 1, 0, -1):
        dt = pts[j] - pts[j - 1]
        y2[j - 1] = y2[j] - q * dt * (pot.p(pts[j]) - lam) * y1[j]
        y1[j - 1] = y1[j] - dt * (lam - pot.r(pts[j - 1])) * y2[j - 1]
    return y1, y2


def solver_suite(seed=DEFAULT_SEED, free_cases=50, pot_cases=20, wronsk_cases=30):
    rng = np.random.default_rng(seed)

    worst_free = 0.0
    for _ in range(free_cases):
        p = _rand_params(rng)
        c1, c2 = rng.uniform(-2, 2, 2)
        lam = rng.uniform(-3, 3)
        x = p.omega0 + rng.uniform(0.5, 3.0)
        sol = picard_solve(Potentials.zero(), c1, c2, lam, x, p)
        scale = 1.0 + sol.sup_y
        for t, y1v, y2v in zip(sol.grid.points, sol.y1_grid(), sol.y2_grid()):
            ref = solve_free(c1, c2, t, lam, p)
            worst_free = max(worst_free, abs(y1v - ref[0]) / scale,
                             abs(y2v - ref[1]) / scale)

    worst_rec = 0.0
    for _ in range(pot_cases):
        p = _rand_params(rng)
        c1, c2 = rng.uniform(-2, 2, 2)
        lam = rng.uniform(-3, 3)
        x = p.omega0 + rng.uniform(0.5, 3.0)
        pot = _rand_potentials(rng, p, x)
        sol = picard_solve(pot, c1, c2, lam, x, p)
        o1, o2 = recursion_oracle(pot, c1, c2, lam, sol.pts, p)
        scale = 1.0 + sol.sup_y
        top = min(42, len(sol.pts))
        d1 = np.max(np.abs(o1[:top] - (c1 + sol.u1[:top])))
        d2 = np.max(np.abs(o2[:top] - (c2 + sol.u2[:top])))
        worst_rec = max(worst_rec, d1 / scale, d2 / scale)

    # constant potentials against the shifted-parameter closed form
    worst_const = 0.0
    rngc = np.random.default_rng(seed + 3)
    for _ in range(10):
        p = _rand_params(rngc)
        p0, r0 = rngc.uniform(-1, 1, 2)
        lam = rngc.uniform(2.0, 3.5)
        if (lam - p0) * (lam - r0) <= 1e-3:
            continue
        c1, c2 = rngc.uniform(-2, 2, 2)
        x = p.omega0 + rngc.uniform(0.5, 2.5)
        mu = math.sqrt((lam - p0) * (lam - r0))
        alpha = c1
        beta = c2 * (lam - r0) / mu
        rq = math.sqrt(p.q)
        sol = picard_solve(Potentials.constants(p0, r0), c1, c2, lam, x, p)
        scale = 1.0 + sol.sup_y
        for t, y1v, y2v in zip(sol.grid.points, sol.y1_grid(), sol.y2_grid()):
            ref1 = (alpha * cos_qw(t, mu, p).value
                    + beta * sin_qw(t, mu, p).value)
            ref2 = (-alpha * rq * mu / (lam - r0) * sin_qw(t, rq * mu, p).value
                    + beta * mu / (lam - r0) * cos_qw(t, rq * mu, p).value)
            worst_const = max(worst_const, abs(y1v - ref1) / scale,
                              abs(y2v - ref2) / scale)

    worst_w = 0.0
    worst_unit = 0.0
    rngw = np.random.default_rng(seed + 4)
    for _ in range(wronsk_cases):
        p = _rand_params(rngw)
        lam = rngw.uniform(-2, 2)
        x = p.omega0 + rngw.uniform(0.5, 2.5)
        pot = _rand_potentials(rngw, p, x)
        y = picard_solve(pot, 1.0, rngw.uniform(-1, 1), lam, x, p)
        z = picard_solve(pot, rngw.uniform(-1, 1), 1.0, lam, x, p)
        ws = [wronskian(y, z, t, p) for t in y.grid.points]
        spread = max(ws) - min(ws)
        wmid = ws[len(ws) // 2]
        worst_w = max(worst_w, spread / (1e-8 * (1.0 + abs(wmid))))
        # free fundamental pair has unit wronskian
        t = p.omega0 + rngw.uniform(0.1, 3.0)
        mat_t = fundamental_pair(t, lam, p)
        mat_h = fundamental_pair(p.h_inv(t), lam, p)
        w_unit = mat_t[0, 0] * mat_h[1, 1] - mat_t[0, 1] * mat_h[1, 0]
        worst_unit = max(worst_unit, abs(w_unit - 1.0))

    # linearity in the initial data
    worst_lin = 0.0
    rngl = np.random.default_rng(seed + 5)
    for _ in range(10):
        p = _rand_params(rngl)
        lam = rngl.uniform(-2, 2)
        x = p.omega0 + rngl.uniform(0.5, 2.5)
        pot = _rand_potentials(rngl, p, x)
        a1, b1, a2, b2 = rngl.uniform(-1.5, 1.5, 4)
        al, be = rngl.uniform(-2, 2, 2)
        sa = picard_solve(pot, a1, a2, lam, x, p)
        sb = picard_solve(pot, b1, b2, lam, x, p)
        sc = picard_solve(pot, al * a1 + be * b1, al * a2 + be * b2, lam, x, p)
        scale = 1.0 + sc.sup_y
        d1 = np.max(np.abs(al * (a1 + sa.u1) + be * (b1 + sb.u1)
                           - (sc.c1 + sc.u1)))
        d2 = np.max(np.abs(al * (a2 + sa.u2) + be * (b2 + sb.u2)
                           - (sc.c2 + sc.u2)))
        worst_lin = max(worst_lin, d1 / scale, d2 / scale)

    # uniqueness: tighter tolerance may move the iterate by at most 10 tol
    worst_uni = 0.0
    worst_cont = 0.0
    rngu = np.random.default_rng(seed + 6)
    for _ in range(10):
        p = _rand_params(rngu)
        lam = rngu.uniform(-2, 2)
        x = p.omega0 + rngu.uniform(0.5, 2.5)
        pot = _rand_potentials(rngu, p, x)
        tol = 1e-9
        s1 = picard_solve(pot, 1.0, -0.5, lam, x, p, tol=tol)
        s2 = picard_solve(pot, 1.0, -0.5, lam, x, p, tol=tol / 10)
        d = max(np.max(np.abs(s1.u1 - s2.u1)), np.max(np.abs(s1.u2 - s2.u2)))
        worst_uni = max(worst_uni, d / (10 * tol * (1.0 + s1.sup_y)))
        worst_cont = max(worst_cont, abs(s2.u1[-1]), abs(s2.u2[-1]))

    return [
        PropertyResult("solver.free_oracle", worst_free <= 1e-10, worst_free, 1e-10),
        PropertyResult("solver.lattice_recursion_oracle", worst_rec <= 1e-9, worst_rec, 1e-9),
        PropertyResult("solver.constant_potential_closed_form",
                       worst_const <= 1e-9, worst_const, 1e-9),
        PropertyResult("solver.wronskian_constancy", worst_w <= 1.0, worst_w, 1.0,
                       "spread / (1e-8 (1+|W|))"),
        PropertyResult("solver.free_pair_unit_wronskian",
                       worst_unit <= 1e-9, worst_unit, 1e-9),
        PropertyResult("solver.linearity", worst_lin <= 1e-10, worst_lin, 1e-10),
        PropertyResult("solver.uniqueness_schedules", worst_uni <= 1.0, worst_uni, 1.0,
                       "dev / (10 tol (1+sup))"),
        PropertyResult("solver.continuity_at_fixed_point",
                       worst_cont <= 1e-10, worst_cont, 1e-10),
    ]


def spectral_suite(seed=DEFAULT_SEED):
    results = []
    p = HahnParams(0.5, 0.5)
    q = p.q
    a = spectra.EXAMPLE_ENDPOINT

    runs = {}
    for ex in ("3.2", "3.3"):
        bc, pot = spectra.example_problem(ex, p)
        runs[ex] = spectra.find_eigenvalues(6, bc, pot, p)

    # leading-order asymptotics, n = 1..6
    worst_asym = 0.0
    for ex in ("3.2", "3.3"):
        for e in runs[ex].eigenvalues:
            seedv = spectra.asymptotic_eigenvalue(e.n, ex, p, a)
            worst_asym = max(worst_asym,
                             abs(e.lam / seedv - 1.0) / (5 * q**e.n))
    results.append(PropertyResult("spectral.eigenvalue_asymptotics",
                                  worst_asym <= 1.0, worst_asym, 1.0,
                                  "normalized by 5 q^n"))

    # consecutive ratios approach 1/q; attainable from the second ratio on
    # (the first eigenvalues sit far below their seeds, see README notes)
    worst_ratio = 0.0
    for ex in ("3.2", "3.3"):
        lams = runs[ex].lams()
        for n in range(2, 6):
            dev = abs(lams[n] / lams[n - 1] - 1.0 / q)
            worst_ratio = max(worst_ratio, dev / (0.2 * q**n / q))
    results.append(PropertyResult("spectral.eigenvalue_ratios_n_ge_2",
                                  worst_ratio <= 1.0, worst_ratio, 1.0,
                                  "normalized by 0.2 q^(n-1)"))

    worst_x = 0.0
    for n in range(2, 7):
        dev = abs(runs["3.3"].lams()[n - 1] / runs["3.2"].lams()[n - 1]
                  - q ** -0.5)
        worst_x = max(worst_x, dev / (0.2 * q**n))
    results.append(PropertyResult("spectral.family_ratio_n_ge_2",
                                  worst_x <= 1.0, worst_x, 1.0,
                                  "normalized by 0.2 q^n"))

    # orthogonality at n_max = 4
    bc, pot = spectra.example_problem("3.2", p)
    r4 = spectra.find_eigenvalues(4, bc, pot, p)
    worst_orth = max(abs(d) for (_, _, d) in r4.pair_orthogonality)
    results.append(PropertyResult("spectral.orthogonality_nmax4",
                                  worst_orth <= 1e-6, worst_orth, 1e-6))

    # simplicity: strict sign change and derivative above the noise floor
    simple_ok = all(e.sign_change and e.simple for ex in ("3.2", "3.3")
                    for e in runs[ex].eigenvalues)
    margin = min(abs(e.dprime) / max(100.0 * e.noise_floor, 1e-300)
                 for ex in ("3.2", "3.3") for e in runs[ex].eigenvalues)
    results.append(PropertyResult("spectral.simplicity", simple_ok,
                                  1.0 / margin if margin > 0 else math.inf, 1.0,
                                  "max (100 floor)/|D'|"))

    # norm identity for the first three eigenvalues
    worst_nid = max(e.norm_identity for e in runs["3.2"].eigenvalues[:3])
    results.append(PropertyResult("spectral.norm_identity_n123",
                                  worst_nid <= 1e-5, worst_nid, 1e-5))

    # reality: residual of Delta at each root is bracket-consistent
    worst_real = 0.0
    for ex in ("3.2", "3.3"):
        for e in runs[ex].eigenvalues:
            bound = (4.0 * abs(e.dprime) * (e.bracket[1] - e.bracket[0])
                     + 20.0 * e.noise_floor * max(1e-6, 1e-6 * abs(e.lam)))
            worst_real = max(worst_real, e.delta_residual / max(bound, 1e-300))
    results.append(PropertyResult("spectral.real_roots_residual",
                                  worst_real <= 1.0, worst_real, 1.0,
                                  "residual / bracket bound"))

    # trivial-root bookkeeping
    results.append(PropertyResult(
        "spectral.trivial_root_flags",
        (not runs["3.2"].trivial_root) and runs["3.3"].trivial_root
        and runs["3.2"].symmetry == "even" and runs["3.3"].symmetry == "odd",
        0.0, 0.0))

    # eigenvalues of the k22=0 problem are rescaled sine zeros
    bc0 = spectra.BoundarySpec(1.0, 0.0, 1.0, 0.0, a)
    r0 = spectra.find_eigenvalues(4, bc0, Potentials.zero(), p,
                               compute_diagnostics=False)
    worst_tz = 0.0
    for e in r0.eigenvalues:
        zref = trig_zero_detailed(e.n, "sine", p).z
        lam_ref = zref / ((1.0 - q) * (a - p.omega0))
        worst_tz = max(worst_tz, abs(e.lam / lam_ref - 1.0))
    results.append(PropertyResult("spectral.sine_zero_oracle",
                                  worst_tz <= 1e-8, worst_tz, 1e-8))

    # zero asymptotics and the seed-family pairing
    worst_z = 0.0
    pairing_ok = True
    pz = HahnParams(0.5, 1.0)
    for n in range(1, 7):
        zs = trig_zero_detailed(n, "sine", pz)
        zc = trig_zero_detailed(n, "cosine", pz)
        worst_z = max(worst_z,
                      abs((zs.t - pz.omega0) / ((1 / q)**n / (1 - q)) - 1.0) / (5 * q**n),
                      abs((zc.t - pz.omega0) / ((1 / q)**(n - 0.5) / (1 - q)) - 1.0) / (5 * q**n))
        pairing_ok = pairing_ok and zs.matched_seed == "q^{-n}" \
            and zc.matched_seed == "q^{-n+1/2}"
    results.append(PropertyResult("spectral.zero_asymptotics",
                                  worst_z <= 1.0, worst_z, 1.0,
                                  "normalized by 5 q^n"))
    results.append(PropertyResult("spectral.zero_seed_pairing", pairing_ok,
                                  0.0, 0.0))

    # two-solution bracket identity, no boundary conditions involved
    rng = np.random.default_rng(seed)
    worst_g = 0.0
    for _ in range(10):
        pp = _rand_params(rng)
        x = pp.omega0 + rng.uniform(0.5, 2.5)
        pot = _rand_potentials(rng, pp, x)
        l1, l2 = rng.uniform(-2, 2, 2)
        y = picard_solve(pot, rng.uniform(-1, 1), rng.uniform(-1, 1), l1, x, pp)
        z = picard_solve(pot, rng.uniform(-1, 1), rng.uniform(-1, 1), l2, x, pp)
        worst_g = max(worst_g, spectra.green_bracket_defect(y, z, pp, x))
    results.append(PropertyResult("spectral.green_bracket",
                                  worst_g <= 1e-7, worst_g, 1e-7))

    # the precision budget is enforced
    try:
        spectra.find_eigenvalues(7, bc, pot, p, compute_diagnostics=False)
        budget_ok = False
    except PrecisionBudgetExceeded:
        budget_ok = True
    results.append(PropertyResult("spectral.budget_enforced", budget_ok, 0.0, 0.0))

    return results


SUITES = {
    "calculus": calculus_suite,
    "trig": trig_suite,
    "solver": solver_suite,
    "spectral": spectral_suite,
}


def run_suites(names, seed=DEFAULT_SEED):
    results = []
    for name in names:
        results.extend(SUITES[name](seed=seed))
    return results
