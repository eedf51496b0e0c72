"""Solver for the first-order 2x2 q,omega-Dirac system.

The system couples y = (y1, y2) through the forward difference operator, its
dual, and potentials p, r:

    -(1/q) D_dual y2 + (p - lam) y1 = 0
             D y1    + (r - lam) y2 = 0

Integrating both rows turns the initial value problem at omega0 into a pair
of Volterra equations on the geometric lattice of the evaluation point, and
Picard iteration on that pair (started from the closed-form free solution)
converges superexponentially: every pass through the second equation picks up
an extra q-power from the h-shifted sampling, so the successive differences
decay like q^(m^2/8) regardless of how large lam or the potentials are.
"""

import math
from dataclasses import dataclass

import numpy as np

from .backend import kernels
from .errors import NoConvergence
from .hahn import (DEFAULT_SERIES_TOL, LatticeGrid, RealFunction,
                   as_real_function, q_pochhammer)
from .trig import EPS, cos_qw, sin_qw

DEFAULT_PICARD_TOL = 1e-10
DEFAULT_MAX_ITER = 200


def _const_fn(value):
    v = float(value)
    return RealFunction(lambda t: v, 0.0)


def _poly_fn(coeffs):
    c = np.asarray(coeffs, dtype=float)

    def fn(t):
        out = 0.0
        for a in c[::-1]:
            out = out * t + a
        return out

    return fn


@dataclass(frozen=True)
class Potentials:
    """The pair of real-valued potentials, continuous at omega0.

    p_spec / r_spec carry a serializable description when the potential was
    built by one of the factories: ("const", v) or ("poly", coeffs).
    """

    p: RealFunction
    r: RealFunction
    p_spec: tuple = ("custom",)
    r_spec: tuple = ("custom",)

    @classmethod
    def zero(cls):
        return cls(_const_fn(0.0), _const_fn(0.0), ("const", 0.0), ("const", 0.0))

    @classmethod
    def constants(cls, p0, r0):
        return cls(_const_fn(p0), _const_fn(r0), ("const", float(p0)),
                   ("const", float(r0)))

    @classmethod
    def from_callables(cls, p, r):
        return cls(as_real_function(p), as_real_function(r))

    @classmethod
    def polynomials(cls, p_coeffs, r_coeffs):
        return cls(
            RealFunction(_poly_fn(p_coeffs)),
            RealFunction(_poly_fn(r_coeffs)),
            ("poly", tuple(float(c) for c in p_coeffs)),
            ("poly", tuple(float(c) for c in r_coeffs)),
        )

    def is_zero(self):
        return (self.p_spec == ("const", 0.0) and self.r_spec == ("const", 0.0))


def fundamental_pair(t, lam, params, tol=DEFAULT_SERIES_TOL):
    """The two free solutions as a 2x2 matrix [[phi11, phi21], [phi12, phi22]].

    Columns are the two solutions; the matrix is the identity at t = omega0
    and for lam = 0, and its lattice Wronskian is 1 everywhere.
    """
    rq = math.sqrt(params.q)
    phi11 = cos_qw(t, lam, params, tol).value
    phi21 = sin_qw(t, lam, params, tol).value
    phi12 = -rq * sin_qw(t, lam * rq, params, tol).value
    phi22 = cos_qw(t, lam * rq, params, tol).value
    return np.array([[phi11, phi21], [phi12, phi22]])


def solve_free(c1, c2, t, lam, params, tol=DEFAULT_SERIES_TOL):
    """Closed-form solution for p = r = 0 with y(omega0) = (c1, c2)."""
    m = fundamental_pair(t, lam, params, tol)
    return (c1 * m[0, 0] + c2 * m[0, 1], c1 * m[1, 0] + c2 * m[1, 1])


class VectorSolution:
    """A converged two-component solution, evaluable on its lattice.

    The solution is stored as offsets from the initial values, y_i = c_i +
    u_i, on an extended lattice [h^{-1}(x), x, h(x), ...]: difference
    quotients taken on the offsets never re-cancel the constant part, which
    keeps residual checks meaningful at deep lattice points.  Off-lattice
    evaluation re-runs the same integral equations anchored at the requested
    point (solutions are defined by those equations; nothing is interpolated).
    """

    def __init__(self, lam, c1, c2, params, potentials, pts, pm, u1, u2,
                 iterations, final_delta, tol, max_iter, series_tol,
                 noise_scale, sup_y, delta_history=()):
        self.lam = lam
        self.c1 = c1
        self.c2 = c2
        self.params = params
        self.potentials = potentials
        self.pts = pts            # extended: pts[0] = h^{-1}(x), pts[1] = x
        self.pm = pm              # exact geometric offsets pts - omega0
        self.u1 = u1
        self.u2 = u2
        self.iterations = iterations
        self.final_delta = final_delta
        self.tol = tol
        self.noise_scale = noise_scale
        self.sup_y = sup_y
        self.delta_history = tuple(delta_history)
        self._max_iter = max_iter
        self._series_tol = series_tol
        self._cache = {}
        for a in (pts, pm, u1, u2):
            a.setflags(write=False)

    @property
    def anchor(self):
        return self.pts[1]

    @property
    def depth(self):
        return len(self.pts) - 3

    @property
    def grid(self):
        k = self.depth
        return LatticeGrid(self.anchor, k, self.pts[1:k + 2])

    def y1_grid(self):
        """y1 at the public lattice points h^k(x), k = 0..depth."""
        return self.c1 + self.u1[1:self.depth + 2]

    def y2_grid(self):
        return self.c2 + self.u2[1:self.depth + 2]

    def grid_index(self, t):
        """Index of t on the extended lattice, or None if off-lattice.

        The log-scale position only nominates candidate indices; acceptance
        is by closeness to the stored point, either a few ulps or a small
        fraction of the local lattice gap (at depths where the points sit a
        few dozen ulps above omega0 the log position itself is perturbed by
        the rounding of omega0 + tiny).
        """
        w0 = self.params.omega0
        top = self.pts[0] - w0
        dt = t - w0
        if dt <= 0.0 or top <= 0.0:
            return None
        k = math.log(dt / top) / math.log(self.params.q)
        one_minus_q = 1.0 - self.params.q
        for j in (int(math.floor(k)), int(math.ceil(k))):
            if not 0 <= j < len(self.pts):
                continue
            gap = one_minus_q * (self.pts[j] - w0)
            tol = max(4e-16 * max(1.0, abs(t)), 0.1 * gap)
            if abs(t - self.pts[j]) <= tol:
                return j
        return None

    def at(self, t):
        """(y1, y2) at t: lattice lookup, the fixed point, or a re-solve."""
        if self.params.is_fixed_point(t):
            return (self.c1, self.c2)
        j = self.grid_index(t)
        if j is not None:
            return (self.c1 + self.u1[j], self.c2 + self.u2[j])
        if t not in self._cache:
            sol = picard_solve(self.potentials, self.c1, self.c2, self.lam,
                               t, self.params, tol=self.tol,
                               max_iter=self._max_iter,
                               series_tol=self._series_tol)
            self._cache[t] = (self.c1 + sol.u1[1], self.c2 + sol.u2[1])
        return self._cache[t]

    def y1(self, t):
        return self.at(t)[0]

    def y2(self, t):
        return self.at(t)[1]


def _solve_lattice(pot, c1, c2, lam, x, params, tol, max_iter, series_tol):
    """Picard iteration on the extended lattice anchored at h^{-1}(x)."""
    q = params.q
    w0 = params.omega0
    K = params.grid_depth()
    m = K + 3
    top = params.h_inv(x)

    qpow = np.empty(m + 1)
    qpow[0] = 1.0
    for j in range(1, m + 1):
        qpow[j] = qpow[j - 1] * q
    pm_ext = qpow * (top - w0)
    pts_ext = w0 + pm_ext
    pts = pts_ext[:m]
    pm = pm_ext[:m]

    p_fn = pot.p
    r_fn = pot.r
    r_vals = np.array([r_fn(pts_ext[j]) for j in range(m)])
    p_shift = np.array([p_fn(pts_ext[j + 1]) for j in range(m)])
    if not (np.all(np.isfinite(r_vals)) and np.all(np.isfinite(p_shift))):
        raise ValueError("potentials must be finite at all lattice points")

    K_ = kernels()
    rq = math.sqrt(q)
    zs = lam * (1.0 - q) * pm
    c_lam, s_lam, sumabs_a = K_.trig_grid(zs, q, series_tol)
    c_rq, s_rq, sumabs_b = K_.trig_grid(rq * zs, q, series_tol)
    Y1 = c1 * c_lam + c2 * s_lam
    Y2 = c1 * (-rq) * s_rq + c2 * c_rq
    noise_scale = EPS * (abs(c1) + abs(c2)) * max(sumabs_a, sumabs_b)

    u1 = u2 = None
    delta = math.inf
    sup_y = max(abs(c1), abs(c2))
    it = 0
    history = []
    for it in range(1, max_iter + 1):
        u1, u2, delta, sup_y = K_.picard_sweep(
            Y1, Y2, c1, c2, lam, r_vals, p_shift, pm, q)
        history.append(delta)
        if delta < tol * (1.0 + sup_y):
            break
    converged = delta < tol * (1.0 + sup_y)

    res1, res2 = K_.residual_grid(u1, u2, c1, c2, lam, r_vals, p_shift, pm, q)
    res_sup = max(np.max(np.abs(res1)), np.max(np.abs(res2)))
    res_ok = res_sup <= 10.0 * tol * (1.0 + abs(lam)) * (1.0 + sup_y)

    return (pts, pm, u1, u2, it, delta, noise_scale, sup_y, converged,
            res_ok, res_sup, history)


def picard_solve(pot, c1, c2, lam, x, params, tol=DEFAULT_PICARD_TOL,
                 max_iter=DEFAULT_MAX_ITER, series_tol=DEFAULT_SERIES_TOL,
                 scheme="volterra"):
    """Solve the system for y(omega0) = (c1, c2) on the lattice of x.

    Iterates the compact Volterra form of the system (one integral per
    component and sweep) starting from the free solution; the four-kernel
    successive-approximation form is available as scheme="kernel22" for
    cross-validation.  Success requires both the sup-norm change to fall
    under tol*(1 + sup|y|) and the pointwise system residual to pass at
    every interior lattice point.
    """
    if x <= params.omega0:
        raise ValueError("evaluation point x must exceed omega0")
    if tol <= 0.0 or max_iter < 1:
        raise ValueError("tol must be positive and max_iter >= 1")
    if scheme == "kernel22":
        return _picard_solve_kernel22(pot, c1, c2, lam, x, params, tol,
                                      max_iter, series_tol)
    if scheme != "volterra":
        raise ValueError(f"unknown scheme {scheme!r}")

    (pts, pm, u1, u2, it, delta, noise_scale, sup_y, converged, res_ok,
     res_sup, history) = _solve_lattice(pot, c1, c2, lam, x, params, tol,
                                        max_iter, series_tol)
    if not (converged and res_ok):
        report = convergence_bound(pot, lam, x, params, c1=c1, c2=c2)
        raise NoConvergence(
            f"picard iteration: delta={delta:.3e}, residual sup={res_sup:.3e} "
            f"after {it} sweeps (tol={tol:.1e}, radius_ok={report.radius_ok})",
            report=report,
        )
    return VectorSolution(lam, c1, c2, params, pot, pts, pm, u1, u2, it,
                          delta, tol, max_iter, series_tol, noise_scale,
                          sup_y, history)


def _picard_solve_kernel22(pot, c1, c2, lam, x, params, tol, max_iter,
                           series_tol):
    """Successive approximations in the four-kernel form (cross-check path).

    Each component update is psi_1i(t) plus combinations
    phi_2i(t)*I - phi_1i(t)*J of four running integrals of the current
    iterate against the free solutions; slower (four integrals per sweep)
    but the same fixed point.
    """
    q = params.q
    w0 = params.omega0
    K = params.grid_depth()
    m = K + 3
    top = params.h_inv(x)

    qpow = np.empty(m + 1)
    qpow[0] = 1.0
    for j in range(1, m + 1):
        qpow[j] = qpow[j - 1] * q
    pm_ext = qpow * (top - w0)
    pts_ext = w0 + pm_ext
    pts = pts_ext[:m]
    pm = pm_ext[:m]

    r_vals = np.array([pot.r(pts_ext[j]) for j in range(m)])
    p_shift = np.array([pot.p(pts_ext[j + 1]) for j in range(m)])

    K_ = kernels()
    rq = math.sqrt(q)
    zs = lam * (1.0 - q) * pm_ext
    c_lam, s_lam, _ = K_.trig_grid(zs, q, series_tol)
    c_rq, s_rq, _ = K_.trig_grid(rq * zs, q, series_tol)
    phi11 = c_lam[:m]
    phi21 = s_lam[:m]
    phi12 = -rq * s_rq[:m]
    phi22 = c_rq[:m]
    phi11_h = c_lam[1:m + 1]
    phi21_h = s_lam[1:m + 1]

    psi1 = c1 * phi11 + c2 * phi21
    psi2 = c1 * phi12 + c2 * phi22
    Y1 = psi1.copy()
    Y2 = psi2.copy()

    it = 0
    delta = math.inf
    history = []
    for it in range(1, max_iter + 1):
        y1_h = np.empty(m)
        y1_h[:-1] = Y1[1:]
        y1_h[-1] = Y1[-1]
        gp = p_shift * y1_h
        gr = r_vals * Y2
        Ip1 = K_.lattice_cumint(phi11_h * gp, pm, q)
        Ip2 = K_.lattice_cumint(phi21_h * gp, pm, q)
        Ir1 = K_.lattice_cumint(phi12 * gr, pm, q)
        Ir2 = K_.lattice_cumint(phi22 * gr, pm, q)
        new1 = psi1 + q * (phi21 * Ip1 - phi11 * Ip2) + (phi21 * Ir1 - phi11 * Ir2)
        new2 = psi2 + q * (phi22 * Ip1 - phi12 * Ip2) + (phi22 * Ir1 - phi12 * Ir2)
        delta = max(np.max(np.abs(new1 - Y1)), np.max(np.abs(new2 - Y2)))
        history.append(delta)
        Y1, Y2 = new1, new2
        sup_y = max(np.max(np.abs(Y1)), np.max(np.abs(Y2)))
        if delta < tol * (1.0 + sup_y):
            break
    sup_y = max(np.max(np.abs(Y1)), np.max(np.abs(Y2)))
    if not delta < tol * (1.0 + sup_y):
        report = convergence_bound(pot, lam, x, params, c1=c1, c2=c2)
        raise NoConvergence(
            f"kernel22 iteration: delta={delta:.3e} after {it} sweeps",
            report=report,
        )
    u1 = Y1 - c1
    u2 = Y2 - c2
    noise_scale = EPS * (abs(c1) + abs(c2))
    return VectorSolution(lam, c1, c2, params, pot, pts, pm, u1, u2, it,
                          delta, tol, max_iter, series_tol, noise_scale,
                          sup_y, history)


def wronskian(y, z, t, params):
    """Lattice Wronskian y1(t) z2(h^{-1}(t)) - z1(t) y2(h^{-1}(t)).

    Constant in t (and lambda) along any two solutions of the same system.
    """
    t_in = params.h_inv(t)
    return y.y1(t) * z.y2(t_in) - z.y1(t) * y.y2(t_in)


def residual(y, pot, t, params):
    """Pointwise defect of the system at t, as two components.

    Uses offset-based difference quotients when t sits on the solution's
    lattice (the accurate path); off-lattice falls back to direct quotients
    of evaluated values.
    """
    lam = y.lam
    q = params.q
    j = y.grid_index(t)
    if j is not None and 1 <= j < len(y.pts) - 1:
        pm_j = y.pm[j]
        pm_jm = y.pm[j - 1]
        d_y1 = (y.u1[j + 1] - y.u1[j]) / (-(1.0 - q) * pm_j)
        d_dual_y2 = (y.u2[j] - y.u2[j - 1]) / (-(1.0 - q) * pm_jm)
        y1t = y.c1 + y.u1[j]
        y2t = y.c2 + y.u2[j]
    else:
        ht = params.h(t)
        hit = params.h_inv(t)
        y1t, y2t = y.at(t)
        d_y1 = (y.y1(ht) - y1t) / (-(1.0 - q) * (t - params.omega0))
        d_dual_y2 = (y2t - y.y2(hit)) / (-(1.0 - q) * (hit - params.omega0))
    comp1 = -(d_dual_y2 / q) + (pot.p(t) - lam) * y1t
    comp2 = d_y1 + (pot.r(t) - lam) * y2t
    return comp1, comp2


@dataclass(frozen=True)
class ConvergenceReport:
    """Majorant diagnostics for the successive-approximation bounds.

    bound_terms[m-1] majorizes the m-th successive difference; radius_ok is
    the sufficient (not necessary) contraction condition
    |x - omega0| < 1 / (A B (1-q)).  The refined alternating bounds converge
    for every lambda, so radius_ok = False does not preclude convergence.
    """

    radius_ok: bool
    bound_terms: tuple
    sup_p: float
    sup_r: float
    sup_phi: float
    A: float
    B_lambda: float
    K_lambda: float


def convergence_bound(pot, lam, x, params, c1=1.0, c2=1.0, n_terms=30,
                      series_tol=DEFAULT_SERIES_TOL):
    """Evaluate the sup norms and the majorant sequence for the iteration.

    A bounds both potentials on the lattice of x, sqrt(B/2) bounds the four
    free-solution components, K scales with the initial data, and the m-th
    bound term is K/2 * prod_{j<=m}(1+q^j)*2 * (A B w)^m / (q;q)_m with
    w = x(1-q) - omega.
    """
    q = params.q
    w0 = params.omega0
    grid = params.lattice(x)
    pts = grid.points

    sup_p = max(abs(pot.p(t)) for t in pts)
    sup_r = max(abs(pot.r(t)) for t in pts)
    A = max(sup_p, sup_r)

    sup_phi = 0.0
    for t in pts:
        mat = fundamental_pair(t, lam, params, series_tol)
        sup_phi = max(sup_phi, np.max(np.abs(mat)))
    B = 2.0 * sup_phi * sup_phi
    K = (abs(c1) + abs(c2)) * math.sqrt(B / 2.0)

    w = (1.0 - q) * (x - w0)
    abw = A * B * w
    terms = []
    minus_one_poch = 1.0 + 1.0  # (-1;q)_1 = 2
    qj = 1.0
    for mth in range(1, n_terms + 1):
        qj *= q
        minus_one_poch *= 1.0 + qj  # (-1;q)_{m+1}
        terms.append(K * 0.5 * minus_one_poch * abw**mth / q_pochhammer(q, mth))
    radius_ok = (A == 0.0) or (abs(x - w0) < 1.0 / (A * B * (1.0 - q)))
    return ConvergenceReport(radius_ok, tuple(terms), sup_p, sup_r, sup_phi,
                             A, B, K)
