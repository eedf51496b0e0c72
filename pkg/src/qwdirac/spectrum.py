"""Boundary-value machinery: characteristic function, eigenvalue search and
the spectral diagnostics (orthogonality, simplicity, norm identity).

The left boundary row is satisfied identically by starting the solution at
(c1, c2) = (k12, -k11); inserting that solution into the right row gives the
scalar characteristic function

    Delta(lam) = k21 * phi1(a, lam) + k22 * phi2(h^{-1}(a), lam)

whose real zeros are exactly the eigenvalues.  Eigenvalues are real and
simple, so the scanner walks a geometric grid of positive lam, brackets sign
changes and bisects; the negative half mirrors the positive one whenever the
potentials vanish (Delta is then even or odd in lam).
"""

import math
from dataclasses import dataclass
from typing import Optional

from .backend import kernels
from .errors import (DerivativeStepUnstable, MissedRootSuspected,
                     PrecisionBudgetExceeded)
from .hahn import DEFAULT_SERIES_TOL
from .solver import (DEFAULT_MAX_ITER, DEFAULT_PICARD_TOL, Potentials,
                     VectorSolution, picard_solve)
from .trig import CANCELLATION_BUDGET, EPS

DEFAULT_ROOT_TOL = 1e-10
_SCAN_RATIO_STEPS = 4      # grid ratio q^(-1/4)
_DEDUP_TOL = 1e-8
EXAMPLE_ENDPOINT = math.pi


@dataclass(frozen=True)
class BoundarySpec:
    """Coefficients of the two boundary rows and the right endpoint a.

    Row one acts at omega0 on (y1, y2); row two pairs y1(a) with
    y2(h^{-1}(a)).  Neither row may vanish identically.
    """

    k11: float
    k12: float
    k21: float
    k22: float
    a: float

    def validate(self, params):
        if self.k11 == 0.0 and self.k12 == 0.0:
            raise ValueError("boundary row (k11, k12) must not be (0, 0)")
        if self.k21 == 0.0 and self.k22 == 0.0:
            raise ValueError("boundary row (k21, k22) must not be (0, 0)")
        if not (self.a > params.omega0):
            raise ValueError(
                f"endpoint a={self.a!r} must exceed omega0={params.omega0!r}")
        if not (params.h_inv(self.a) > params.omega0):
            raise ValueError("h^{-1}(a) must exceed omega0")


def example_problem(example, params, a=EXAMPLE_ENDPOINT):
    """Built-in boundary rows: '3.2' pins y1(omega0)=0, '3.3' pins
    y2(omega0)=0; both impose y2(h^{-1}(a))=0 with zero potentials."""
    if example == "3.2":
        bc = BoundarySpec(1.0, 0.0, 0.0, 1.0, a)
    elif example == "3.3":
        bc = BoundarySpec(0.0, 1.0, 0.0, 1.0, a)
    else:
        raise ValueError(f"unknown example {example!r}: expected '3.2' or '3.3'")
    bc.validate(params)
    return bc, Potentials.zero()


def asymptotic_eigenvalue(n, example, params, a):
    """Leading term of the eigenvalue asymptotics for the built-in examples:
    q^{-n+1} ('3.2') or q^{-n+1/2} ('3.3') over (1-q)(a - omega0)."""
    if n < 1:
        raise ValueError("eigenvalue index n must be >= 1")
    if a <= params.omega0:
        raise ValueError("endpoint a must exceed omega0")
    q = params.q
    scale = (1.0 - q) * (a - params.omega0)
    if example == "3.2":
        return q ** (-n + 1) / scale
    if example == "3.3":
        return q ** (-n + 0.5) / scale
    raise ValueError(f"unknown example {example!r}: expected '3.2' or '3.3'")


def phi_solution(lam, bc, pot, params, tol=DEFAULT_PICARD_TOL,
                 series_tol=DEFAULT_SERIES_TOL, max_iter=DEFAULT_MAX_ITER):
    """The solution with initial data (k12, -k11), anchored at a.

    The first boundary row vanishes on it identically, by construction.
    """
    bc.validate(params)
    return picard_solve(pot, bc.k12, -bc.k11, lam, bc.a, params, tol=tol,
                        max_iter=max_iter, series_tol=series_tol)


def characteristic(lam, bc, pot, params, tol=DEFAULT_PICARD_TOL,
                   series_tol=DEFAULT_SERIES_TOL):
    """Delta(lam); its real zeros are the eigenvalues."""
    value, _, _ = _characteristic_detail(lam, bc, pot, params, tol, series_tol)
    return value


def _characteristic_detail(lam, bc, pot, params, tol, series_tol):
    """(Delta, noise_estimate, solution).  phi1 is read at a (lattice index
    1) and phi2 at h^{-1}(a) (index 0) of the extended arrays."""
    sol = phi_solution(lam, bc, pot, params, tol, series_tol)
    phi1_a = sol.c1 + sol.u1[1]
    phi2_ha = sol.c2 + sol.u2[0]
    value = bc.k21 * phi1_a + bc.k22 * phi2_ha
    noise = (abs(bc.k21) + abs(bc.k22)) * max(sol.noise_scale,
                                              EPS * (1.0 + sol.sup_y))
    return value, noise, sol


def _solution_integral(y, z):
    """Integral over [omega0, a] of y1 z1 + y2 z2 from stored lattice arrays
    (both solutions must be anchored at the same a)."""
    if abs(y.anchor - z.anchor) > 1e-12 * max(1.0, abs(y.anchor)):
        raise ValueError("solutions are anchored at different endpoints")
    g = ((y.c1 + y.u1) * (z.c1 + z.u1) + (y.c2 + y.u2) * (z.c2 + z.u2))[1:]
    F = kernels().lattice_cumint(g, y.pm[1:], y.params.q)
    return F[0]


def orthogonality_defect(y, z, params, a, tol=DEFAULT_SERIES_TOL):
    """Normalized pairing of two solutions over [omega0, a]: exactly 1 for
    y = z (up to scale), near 0 for eigenfunctions of distinct eigenvalues."""
    del tol  # lattice arrays are already at series accuracy
    if not (isinstance(y, VectorSolution) and isinstance(z, VectorSolution)):
        raise TypeError("orthogonality_defect expects VectorSolution inputs")
    if abs(y.anchor - a) > 1e-12 * max(1.0, abs(a)):
        raise ValueError("solutions must be anchored at the integration endpoint")
    num = _solution_integral(y, z)
    ny = _solution_integral(y, y)
    nz = _solution_integral(z, z)
    return num / math.sqrt(ny * nz)


def green_bracket_defect(y, z, params, a):
    """Relative defect of the two-solution bracket identity: the eigenvalue
    difference times the pairing integral equals the boundary bracket
    evaluated between omega0 and a."""
    lhs = (y.lam - z.lam) * _solution_integral(y, z)
    w0 = params.omega0
    upper = y.y1(a) * z.y2(params.h_inv(a)) - y.y2(params.h_inv(a)) * z.y1(a)
    lower = y.y1(w0) * z.y2(w0) - y.y2(w0) * z.y1(w0)
    rhs = upper - lower
    scale = max(abs(lhs), abs(rhs), 1.0)
    return abs(lhs - rhs) / scale


def norm_identity_defect(lambda_n, bc, pot, params, tol=DEFAULT_PICARD_TOL,
                         delta_step=None, series_tol=DEFAULT_SERIES_TOL):
    """Relative disagreement between the boundary bracket of the
    lambda-derivative of phi and the squared norm of phi.

    The lambda-derivative is a central difference at lambda_n +- delta; a
    half-step estimate must agree or DerivativeStepUnstable is raised.  The
    bracket has no omega0 term because the initial data do not depend on
    lambda.
    """
    bc.validate(params)
    if delta_step is None:
        delta_step = max(1e-6, 1e-6 * abs(lambda_n))

    def solve(lam):
        return phi_solution(lam, bc, pot, params, tol, series_tol)

    a = bc.a
    hinv_a_idx = 0  # phi2 at h^{-1}(a) lives at extended index 0
    a_idx = 1

    def bracket(step):
        sp = solve(lambda_n + step)
        sm = solve(lambda_n - step)
        dphi1_a = ((sp.c1 + sp.u1[a_idx]) - (sm.c1 + sm.u1[a_idx])) / (2 * step)
        dphi2_h = ((sp.c2 + sp.u2[hinv_a_idx]) - (sm.c2 + sm.u2[hinv_a_idx])) / (2 * step)
        return dphi1_a, dphi2_h

    center = solve(lambda_n)
    y1_a = center.c1 + center.u1[a_idx]
    y2_h = center.c2 + center.u2[hinv_a_idx]

    d1, d2 = bracket(delta_step)
    lhs = y2_h * d1 - y1_a * d2
    d1h, d2h = bracket(0.5 * delta_step)
    lhs_half = y2_h * d1h - y1_a * d2h

    rhs = _solution_integral(center, center)
    scale = max(abs(lhs), abs(rhs), 1e-300)
    if abs(lhs - lhs_half) > 1e-3 * scale:
        raise DerivativeStepUnstable(
            f"lambda-derivative at step {delta_step:.1e} moved by "
            f"{abs(lhs - lhs_half):.3e} when halved (scale {scale:.3e})")
    return abs(lhs - rhs) / scale


@dataclass(frozen=True)
class EigenvalueInfo:
    n: int
    lam: float
    bracket: tuple
    delta_residual: float
    sign_change: bool
    dprime: float
    noise_floor: float
    simple: bool
    asym_family: str
    asym_seed: float
    rel_dev_from_asym: float
    norm_identity: Optional[float] = None


@dataclass(frozen=True)
class SpectrumResult:
    """Ordered eigenvalues with their searches' and checks' diagnostics."""

    eigenvalues: tuple
    pair_orthogonality: tuple
    warnings: tuple
    trivial_root: bool
    symmetry: str
    n_max: int

    def lams(self):
        return [e.lam for e in self.eigenvalues]


def max_trustworthy_index(params, budget=CANCELLATION_BUDGET):
    """Largest eigenvalue index whose predicted cancellation stays inside the
    64-bit budget: the n-th eigenvalue drives the series at combined argument
    about q^{-n}, costing roughly (1/q)^(n^2) in cancelled digits."""
    return int(math.floor(math.sqrt(math.log(budget) / math.log(1.0 / params.q))))


def find_eigenvalues(n_max, bc, pot, params, tol=DEFAULT_ROOT_TOL,
                     picard_tol=DEFAULT_PICARD_TOL,
                     series_tol=DEFAULT_SERIES_TOL,
                     compute_diagnostics=True, scan_negative=False):
    """Locate the first n_max positive eigenvalues.

    The scan walks lam upward on a geometric grid with ratio q^{-1/4} from
    one q-step under the first free-spectrum seed, brackets sign changes of
    Delta and stops once n_max have been found; missing roots trigger two
    levels of grid refinement (and a one-step window extension) before
    MissedRootSuspected is raised carrying the partial result.  Free-problem
    seeds are used even for nonzero potentials, which bounded potentials only
    shift by a bounded amount.
    """
    bc.validate(params)
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    n_ok = max_trustworthy_index(params)
    if n_max > n_ok:
        raise PrecisionBudgetExceeded(
            f"eigenvalue index {n_max} exceeds the trustworthy range n <= "
            f"{n_ok} for q={params.q} (cancellation budget "
            f"{CANCELLATION_BUDGET:.0e})")

    q = params.q
    a = bc.a
    warnings = []

    def delta_eval(lam):
        return _characteristic_detail(lam, bc, pot, params, picard_tol,
                                      series_tol)

    seed_lo = asymptotic_eigenvalue(1, "3.2", params, a)
    seed_hi = asymptotic_eigenvalue(n_max, "3.3", params, a)
    lo = q * seed_lo * q ** (1.0 / _SCAN_RATIO_STEPS)
    hi = seed_hi / q / q ** (1.0 / _SCAN_RATIO_STEPS)

    brackets, dips = _scan_brackets(delta_eval, lo, hi, n_max,
                                    (1.0 / q) ** (1.0 / _SCAN_RATIO_STEPS))
    level = 0
    while len(brackets) < n_max and level < 2:
        level += 1
        lo *= q
        hi /= q
        step = (1.0 / q) ** (1.0 / (_SCAN_RATIO_STEPS * 4 ** level))
        brackets, dips = _scan_brackets(delta_eval, lo, hi, n_max, step)

    roots = []
    for (blo, bhi, flo, fhi) in brackets[:n_max]:
        lam, rlo, rhi, fres = _bisect(
            lambda x: delta_eval(x)[0], blo, bhi, flo, fhi, tol)
        roots.append((float(lam), (float(rlo), float(rhi)), float(fres),
                      bool((flo > 0) != (fhi > 0))))

    roots, merged = _dedupe(roots)
    if merged:
        warnings.append(
            "roots closer than the dedup tolerance were merged; eigenvalues "
            "are expected to be simple, so this is an anomaly")

    infos = []
    for idx, (lam, bracket, fres, signchg) in enumerate(roots, start=1):
        dprime, floor = _delta_prime(delta_eval, lam)
        dprime, floor = float(dprime), float(floor)
        simple = bool(signchg and abs(dprime) > 100.0 * floor)
        family, seed = _nearest_seed(idx, lam, params, a)
        norm_def = None
        if compute_diagnostics:
            try:
                norm_def = norm_identity_defect(lam, bc, pot, params,
                                                picard_tol,
                                                series_tol=series_tol)
            except DerivativeStepUnstable as exc:
                warnings.append(
                    f"norm identity skipped at lambda={lam:.12g}: {exc}")
        infos.append(EigenvalueInfo(
            n=idx, lam=lam, bracket=bracket, delta_residual=abs(fres),
            sign_change=signchg, dprime=dprime, noise_floor=floor,
            simple=simple, asym_family=family, asym_seed=seed,
            rel_dev_from_asym=lam / seed - 1.0, norm_identity=norm_def))

    pair_orth = ()
    if compute_diagnostics and len(infos) >= 2:
        sols = [phi_solution(e.lam, bc, pot, params, picard_tol,
                             series_tol=series_tol) for e in infos]
        pairs = []
        for i in range(len(sols)):
            for j in range(i + 1, len(sols)):
                d = orthogonality_defect(sols[i], sols[j], params, a)
                pairs.append((infos[i].n, infos[j].n, d))
        pair_orth = tuple(pairs)

    trivial = _trivial_root(delta_eval)
    symmetry = _symmetry_probe(delta_eval, lo, hi) if pot.is_zero() else "none"
    if scan_negative and not pot.is_zero():
        neg = _scan_negative_roots(delta_eval, lo, hi, n_max, q, tol)
        if neg:
            warnings.append(
                "negative eigenvalues located: " +
                ", ".join(f"{v:.12g}" for v in neg))

    if dips:
        warnings.append(
            "characteristic function dipped to the noise floor without a "
            "sign change near lambda = " +
            ", ".join(f"{v:.6g}" for v in dips))

    result = SpectrumResult(tuple(infos), pair_orth, tuple(warnings),
                            trivial, symmetry, n_max)
    if len(infos) < n_max:
        raise MissedRootSuspected(
            f"found {len(infos)} of {n_max} requested eigenvalues in the "
            f"scanned window", partial=result)
    return result


def _scan_brackets(delta_eval, lo, hi, n_max, step):
    """Walk upward, returning up to n_max sign-change brackets plus the
    locations of noise-floor dips without sign change.

    A dip is flagged only when |Delta| falls under 10x its noise estimate at
    some grid point while the sign is the same on both neighbors; points
    adjacent to a genuine sign change are never dips.
    """
    brackets = []
    dips = []
    lam_prev = lo
    f_prev, noise_prev, _ = delta_eval(lam_prev)
    dip_candidate = None
    while lam_prev < hi and len(brackets) < n_max:
        lam = lam_prev * step
        f, noise, _ = delta_eval(lam)
        if f_prev == 0.0:
            brackets.append((lam_prev, lam_prev, f_prev, f_prev))
            dip_candidate = None
        elif f_prev * f < 0.0:
            brackets.append((lam_prev, lam, f_prev, f))
            dip_candidate = None
        else:
            if dip_candidate is not None:
                dips.append(dip_candidate)
                dip_candidate = None
            if abs(f) < 10.0 * noise and abs(f_prev) >= 10.0 * noise_prev:
                dip_candidate = lam
        lam_prev, f_prev, noise_prev = lam, f, noise
    return brackets, dips


def _bisect(fn, lo, hi, flo, fhi, rel_tol, max_iter=200):
    if lo == hi:
        return lo, lo, hi, flo
    for _ in range(max_iter):
        if hi - lo <= rel_tol * max(abs(lo), abs(hi)):
            break
        mid = 0.5 * (lo + hi)
        fmid = fn(mid)
        if fmid == 0.0:
            return mid, mid, mid, 0.0
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    root = 0.5 * (lo + hi)
    return root, lo, hi, fn(root)


def _dedupe(roots):
    if not roots:
        return roots, False
    out = [roots[0]]
    merged = False
    for r in roots[1:]:
        if abs(r[0] - out[-1][0]) < _DEDUP_TOL * (1.0 + abs(r[0])):
            merged = True
            continue
        out.append(r)
    return out, merged


def _delta_prime(delta_eval, lam):
    """Central-difference derivative of Delta with its noise floor."""
    step = max(1e-6, 1e-6 * abs(lam))
    fp, np_, _ = delta_eval(lam + step)
    fm, nm, _ = delta_eval(lam - step)
    dprime = (fp - fm) / (2.0 * step)
    floor = (np_ + nm) / (2.0 * step)
    return dprime, floor


def _nearest_seed(n, lam, params, a):
    """Of the two free families at the same index, the seed nearer to lam on
    the log_(1/q) scale."""
    s32 = asymptotic_eigenvalue(n, "3.2", params, a)
    s33 = asymptotic_eigenvalue(n, "3.3", params, a)
    d32 = abs(math.log(lam / s32))
    d33 = abs(math.log(lam / s33))
    return ("3.2", s32) if d32 <= d33 else ("3.3", s33)


def _trivial_root(delta_eval):
    f0, noise0, _ = delta_eval(0.0)
    return bool(abs(f0) <= 50.0 * max(noise0, 1e-300))


def _symmetry_probe(delta_eval, lo, hi):
    probe = math.sqrt(lo * hi)
    fp, noise, _ = delta_eval(probe)
    fm, _, _ = delta_eval(-probe)
    scale = max(abs(fp), abs(fm), 10.0 * noise)
    if abs(fp - fm) <= 1e-8 * scale:
        return "even"
    if abs(fp + fm) <= 1e-8 * scale:
        return "odd"
    return "none"


def _scan_negative_roots(delta_eval, lo, hi, n_max, q, rel_tol):
    step = (1.0 / q) ** (1.0 / _SCAN_RATIO_STEPS)
    brackets, _ = _scan_brackets(lambda x: delta_eval(-x), lo, hi, n_max, step)
    roots = []
    for (blo, bhi, flo, fhi) in brackets:
        lam, _, _, _ = _bisect(lambda x: delta_eval(-x)[0], blo, bhi, flo,
                               fhi, rel_tol)
        roots.append(-lam)
    return roots
