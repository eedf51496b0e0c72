"""q,omega-cosine and sine: entire-function evaluation and zero localization.

Both series depend on (t, mu) only through the combined argument
z = mu * (t(1-q) - omega) = mu * (1-q) * (t - omega0), so zeros are located in
z and mapped back to whichever variable the caller fixed.

Precision bookkeeping: the series alternate and their terms peak near
q^(-(log_{1/q} z)^2) before the q^(n^2) decay wins, so the cancellation ratio
(sum of |terms| over |value|) grows roughly like (1/q)^(L^2) with
L = log_{1/q} z.  In 64-bit arithmetic values stay trustworthy only while
that ratio is below about 1e12; for q = 0.5 this caps usable zero / eigenvalue
indices at n <= 6-7.  Rather than returning noise past the budget, zero
finding raises PrecisionLoss.
"""

import math
from dataclasses import dataclass

from .backend import kernels
from .errors import PrecisionLoss, ZeroNotBracketed
from .hahn import DEFAULT_SERIES_TOL

EPS = 2.220446049250313e-16
CANCELLATION_BUDGET = 1e12
DEFAULT_ROOT_TOL = 1e-10

_SCAN_STEPS = 64
SEED_INTEGER = "q^{-n}"
SEED_HALF = "q^{-n+1/2}"


@dataclass(frozen=True)
class TrigEval:
    """One series evaluation with its precision diagnostics.

    cancellation is the guard ratio sum|terms| / |value| (>= 1 unless the
    value is exactly zero); est_abs_error bounds the truncated tail plus the
    roundoff committed by the accumulation.
    """

    value: float
    terms_used: int
    cancellation: float
    est_abs_error: float


def combined_argument(t, mu, params):
    """z = mu * (t(1-q) - omega), computed in fixed-point-centered form."""
    return mu * (1.0 - params.q) * (t - params.omega0)


def _precision_guard(cancellation, tol, what):
    if cancellation > 1.0 / (16.0 * EPS * tol):
        raise PrecisionLoss(
            f"{what}: cancellation ratio {cancellation:.3e} leaves no "
            f"trustworthy digits at tolerance {tol:.1e}",
            cancellation=cancellation,
        )


def eval_cos_z(z, q, tol=DEFAULT_SERIES_TOL):
    """Cosine series as a function of the combined argument."""
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if z == 0.0:
        return TrigEval(1.0, 1, 1.0, 0.0)
    value, n, sum_abs, tail, status = kernels().cos_series(z, q, tol)
    if status != 0:
        raise RuntimeError("cosine series failed to terminate (q too close to 1?)")
    cancel = sum_abs / abs(value) if value != 0.0 else math.inf
    est = tail + 2.0 * EPS * sum_abs
    if value != 0.0:
        _precision_guard(cancel, tol, "cos_qw")
    return TrigEval(value, n, max(1.0, cancel) if value != 0.0 else cancel, est)


def eval_sin_z(z, q, tol=DEFAULT_SERIES_TOL):
    """Sine series as a function of the combined argument."""
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    if z == 0.0:
        return TrigEval(0.0, 1, 1.0, 0.0)
    value, n, sum_abs, tail, status = kernels().sin_series(z, q, tol)
    if status != 0:
        raise RuntimeError("sine series failed to terminate (q too close to 1?)")
    cancel = sum_abs / abs(value) if value != 0.0 else math.inf
    est = tail + 2.0 * EPS * sum_abs
    if value != 0.0:
        _precision_guard(cancel, tol, "sin_qw")
    return TrigEval(value, n, max(1.0, cancel) if value != 0.0 else cancel, est)


def cos_qw(t, mu, params, tol=DEFAULT_SERIES_TOL):
    """The q,omega-cosine at (t, mu)."""
    return eval_cos_z(combined_argument(t, mu, params), params.q, tol)


def sin_qw(t, mu, params, tol=DEFAULT_SERIES_TOL):
    """The q,omega-sine at (t, mu)."""
    return eval_sin_z(combined_argument(t, mu, params), params.q, tol)


def predicted_cancellation(z, q):
    """Rough peak-term estimate (1/q)^(L^2), L = log_{1/q}|z|, used to refuse
    work that 64-bit floats cannot support."""
    az = abs(z)
    if az <= 1.0:
        return 1.0
    L = math.log(az) / math.log(1.0 / q)
    return (1.0 / q) ** (L * L)


@dataclass(frozen=True)
class ZeroResult:
    """A localized zero: position in z and in t (for mu = 1), the final
    bracket, the residual of the series there, and which asymptotic seed
    family (q^{-n} or q^{-n+1/2}) the zero landed nearest to."""

    n: int
    kind: str
    z: float
    t: float
    bracket_z: tuple
    residual: float
    matched_seed: str
    bracket_cancellation: float


def _series_fn(kind, q, tol):
    if kind == "cosine":
        return lambda z: eval_cos_z(z, q, tol)
    return lambda z: eval_sin_z(z, q, tol)


def _normalize_kind(kind):
    if kind in ("sin", "sine"):
        return "sine"
    if kind in ("cos", "cosine"):
        return "cosine"
    raise ValueError(f"kind must be sine or cosine, got {kind!r}")


def _scan_floor(q):
    """A z safely below the first zero of either series.

    The leading cancellation in the cosine happens when q z^2 / (q;q)_2
    reaches 1, so at z with q z^2 / (q;q)_2 = 1/4 the series is still
    dominated by its first term; the sine's first zero sits higher.
    """
    return 0.5 * math.sqrt((1.0 - q) * (1.0 - q * q) / q)


def trig_zero_detailed(n, kind, params, tol=DEFAULT_ROOT_TOL,
                       series_tol=DEFAULT_SERIES_TOL):
    """Locate the n-th positive zero (in the combined argument) of the
    requested series.

    Zeros are enumerated in increasing z on a geometric grid with ratio
    (1/q)^(1/8) starting below the first zero; the n-th sign change is
    refined by bisection to relative tol.  Seed windows centered on the
    asymptotic candidates are not trusted for indexing because the low-order
    corrections push the first zeros well below their seeds (for q = 0.5 the
    first cosine zero sits 34% under q^{-1/2}); instead the result reports
    which of the two candidate families, q^{-n} or q^{-n+1/2}, the located
    zero is nearest to on the log_{1/q} scale.
    """
    if n < 1:
        raise ValueError("zero index n must be >= 1")
    kind = _normalize_kind(kind)
    q = params.q

    exponent = float(n) if kind == "sine" else n - 0.5
    predicted = predicted_cancellation((1.0 / q) ** exponent, q)
    if predicted > CANCELLATION_BUDGET:
        raise PrecisionLoss(
            f"zero n={n} of the {kind} series needs cancellation about "
            f"{predicted:.2e}, beyond the 64-bit budget {CANCELLATION_BUDGET:.0e}",
            cancellation=predicted,
        )

    fn = _series_fn(kind, q, series_tol)
    z_hi = (1.0 / q) ** exponent / math.sqrt(q)
    for step_frac in (8, 32):
        step = (1.0 / q) ** (1.0 / step_frac)
        bracket = _nth_sign_change(fn, n, _scan_floor(q), z_hi, step)
        if bracket is not None:
            break
    if bracket is None:
        raise ZeroNotBracketed(
            f"fewer than {n} sign changes of the {kind} series below "
            f"z={z_hi:.6g}"
        )
    zlo, zhi, elo, ehi = bracket

    # the sign change must stand above the roundoff floor of the series
    noise = EPS * max(elo.cancellation * abs(elo.value),
                      ehi.cancellation * abs(ehi.value))
    signal = max(abs(elo.value), abs(ehi.value))
    if signal <= 30.0 * noise:
        raise PrecisionLoss(
            f"zero n={n} of the {kind} series: bracket values are at the "
            f"roundoff floor (signal {signal:.2e}, noise {noise:.2e})",
            cancellation=max(elo.cancellation, ehi.cancellation),
        )

    root, blo, bhi, res = _bisect_z(fn, zlo, zhi, elo.value, ehi.value, tol)
    t = params.omega0 + root / (1.0 - q)

    log_off = math.log(root) / math.log(1.0 / q)
    matched = SEED_INTEGER if abs(log_off - n) <= abs(log_off - (n - 0.5)) \
        else SEED_HALF
    return ZeroResult(n, kind, root, t, (blo, bhi), res, matched,
                      max(elo.cancellation, ehi.cancellation))


def _nth_sign_change(fn, n, z_lo, z_hi, step):
    """March a geometric grid and return the n-th sign-change bracket as
    (zlo, zhi, eval_lo, eval_hi), or None if there are fewer than n."""
    z = z_lo
    prev = fn(z)
    count = 0
    while z < z_hi:
        z_next = z * step
        cur = fn(z_next)
        if prev.value == 0.0:
            count += 1
            if count == n:
                return z, z, prev, prev
        elif prev.value * cur.value < 0.0:
            count += 1
            if count == n:
                return z, z_next, prev, cur
        z, prev = z_next, cur
    return None


def _bisect_z(fn, lo, hi, flo, fhi, rel_tol, max_iter=200):
    if lo == hi:
        return lo, lo, hi, abs(flo)
    for _ in range(max_iter):
        if hi - lo <= rel_tol * max(abs(lo), abs(hi)):
            break
        mid = 0.5 * (lo + hi)
        fmid = fn(mid).value
        if fmid == 0.0:
            return mid, mid, mid, 0.0
        if (fmid > 0.0) == (flo > 0.0):
            lo, flo = mid, fmid
        else:
            hi, fhi = mid, fmid
    root = 0.5 * (lo + hi)
    return root, lo, hi, abs(fn(root).value)


def trig_zero(n, kind, params, tol=DEFAULT_ROOT_TOL):
    """The n-th positive zero of the requested function in t, for mu = 1."""
    return trig_zero_detailed(n, kind, params, tol).t
