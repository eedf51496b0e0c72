"""Hahn-calculus core: parameters, lattices, the two-parameter difference
operator and Jackson-Norlund integration.

The operator acts as D f(t) = (f(qt + omega) - f(t)) / ((qt + omega) - t) away
from the fixed point omega0 = omega / (1 - q), and as the classical derivative
f'(omega0) at the fixed point.  All arithmetic near omega0 uses the centered
form h(t) = omega0 + q*(t - omega0), which is algebraically identical to
qt + omega but keeps h(omega0) == omega0 exact and avoids cancellation in the
difference-quotient denominators.
"""

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import FixedPointDerivativeUnavailable, SeriesDivergence

DEFAULT_SERIES_TOL = 1e-12
DEFAULT_PROPERTY_TOL = 1e-10
GRID_RATIO = 1e-14
GRID_DEPTH_CAP = 400
JN_MAX_TERMS = 100_000
_TINY = 1e-300


@dataclass(frozen=True)
class HahnParams:
    """The (q, omega) pair, 0 < q < 1 and omega > 0, with the derived fixed
    point omega0 = omega / (1 - q) of the map h(t) = qt + omega."""

    q: float
    omega: float
    omega0: float = field(init=False)

    def __post_init__(self):
        q = float(self.q)
        omega = float(self.omega)
        if not (0.0 < q < 1.0):
            raise ValueError(f"q must lie in the open interval (0, 1), got {q!r}")
        if not (omega > 0.0):
            raise ValueError(f"omega must be positive, got {omega!r}")
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "omega", omega)
        object.__setattr__(self, "omega0", omega / (1.0 - q))

    def h(self, t):
        """One step toward the fixed point: h(t) = qt + omega."""
        return self.omega0 + self.q * (t - self.omega0)

    def h_inv(self, t):
        """One step away from the fixed point: (t - omega) / q."""
        return self.omega0 + (t - self.omega0) / self.q

    @property
    def fp_tol(self):
        """Absolute tolerance for detecting t == omega0 (avoids 0/0)."""
        return 1e-13 * max(1.0, abs(self.omega0))

    def is_fixed_point(self, t):
        return abs(t - self.omega0) <= self.fp_tol

    def grid_depth(self, ratio=GRID_RATIO):
        """Depth K with q^K below ratio, capped at GRID_DEPTH_CAP."""
        return min(GRID_DEPTH_CAP, int(math.ceil(math.log(ratio) / math.log(self.q))))

    def lattice(self, anchor, depth=None):
        if depth is None:
            depth = self.grid_depth()
        return LatticeGrid.build(self, anchor, depth)


@dataclass(frozen=True)
class LatticeGrid:
    """Finite orbit {h^k(anchor)}, k = 0..depth, descending to omega0."""

    anchor: float
    depth: int
    points: np.ndarray

    @classmethod
    def build(cls, params, anchor, depth):
        if depth < 1:
            raise ValueError("lattice depth must be at least 1")
        qpow = np.empty(depth + 1)
        qpow[0] = 1.0
        for k in range(1, depth + 1):
            qpow[k] = qpow[k - 1] * params.q
        points = params.omega0 + qpow * (anchor - params.omega0)
        points.setflags(write=False)
        return cls(float(anchor), int(depth), points)


@dataclass(frozen=True)
class RealFunction:
    """Evaluable map on [omega0, a], optionally carrying the classical
    derivative at the fixed point (needed by the operator's omega0 branch)."""

    fn: Callable[[float], float]
    derivative_at_fixed_point: Optional[float] = None

    def __call__(self, t):
        return self.fn(t)


def as_real_function(f):
    return f if isinstance(f, RealFunction) else RealFunction(f)


def q_bracket(k, q):
    """The q-integer (1 - q^k) / (1 - q)."""
    if k < 0:
        raise ValueError("q_bracket expects k >= 0")
    if not (0.0 < q < 1.0):
        raise ValueError(f"q must lie in the open interval (0, 1), got {q!r}")
    return (1.0 - q**k) / (1.0 - q)


def q_pochhammer(q, k):
    """The q-shifted factorial (q;q)_k, an empty product for k = 0."""
    if k < 0:
        raise ValueError("q_pochhammer expects k >= 0")
    if not (0.0 < q < 1.0):
        raise ValueError(f"q must lie in the open interval (0, 1), got {q!r}")
    out = 1.0
    qj = 1.0
    for _ in range(k):
        qj *= q
        out *= 1.0 - qj
    return out


def h_apply(params, t, k):
    """k-fold composition of h (k >= 0) or of its inverse (k < 0)."""
    if k == 0:
        return t
    return params.omega0 + params.q**k * (t - params.omega0)


def hahn_derivative(f, t, params):
    """Apply the difference operator to f at t.

    Away from the fixed point this is the exact divided difference; at the
    fixed point the declared classical derivative is used if present,
    otherwise the limit of divided differences along a lattice is estimated
    (and FixedPointDerivativeUnavailable raised if it never stabilizes).
    """
    f = as_real_function(f)
    if params.is_fixed_point(t):
        if f.derivative_at_fixed_point is not None:
            return f.derivative_at_fixed_point
        return _lattice_limit_derivative(f, params)
    denom = -(1.0 - params.q) * (t - params.omega0)
    return (f(params.h(t)) - f(t)) / denom


def dual_derivative(f, t, params):
    """The (1/q, -omega/q) operator, identical to the forward operator
    evaluated at h^{-1}(t)."""
    return hahn_derivative(f, params.h_inv(t), params)


def _lattice_limit_derivative(f, params, rel_tol=1e-8, max_k=200):
    """Estimate f'(omega0) as the limit of divided differences along a
    reference lattice.

    The raw quotient at depth k carries an O(q^k) error term, so consecutive
    quotients are combined into the extrapolant (d_k - q*d_{k-1})/(1 - q)
    which cancels it; acceptance is three consecutive extrapolants within
    rel_tol of each other.  Raw quotients for generic smooth f stall near a
    1e-7 roundoff floor, above the acceptance threshold, which is why the
    extrapolated sequence is the one tested.
    """
    w0 = params.omega0
    q = params.q
    span = max(1.0, abs(w0))
    d_prev = None
    e_hist = []
    dk = span
    for _ in range(max_k):
        t = w0 + dk
        if t == w0 or params.h(t) == t:
            break  # lattice step fell below float resolution
        d = (f(params.h(t)) - f(t)) / (-(1.0 - q) * dk)
        if d_prev is not None:
            e = (d - q * d_prev) / (1.0 - q)
            e_hist.append(e)
            if len(e_hist) >= 3:
                e3 = e_hist[-3:]
                scale = max(abs(e3[0]), abs(e3[1]), abs(e3[2]), _TINY)
                if (
                    abs(e3[2] - e3[1]) <= rel_tol * scale
                    and abs(e3[1] - e3[0]) <= rel_tol * scale
                ):
                    return e
        d_prev = d
        dk *= q
    raise FixedPointDerivativeUnavailable(
        "divided differences along the lattice did not stabilize; declare the "
        "derivative at the fixed point on the RealFunction"
    )


def _jn_primitive(f, x, params, tol):
    """Jackson-Norlund antiderivative from omega0 to x.

    Returns (value, terms_used, condition) where condition is the ratio of
    summed absolute terms to |sum| (1 when nothing cancelled).  Truncation
    stops after three consecutive terms fall below tol relative to the
    accumulated integral; the streak guards against accidental zeros of f.
    """
    w0 = params.omega0
    q = params.q
    dx = x - w0
    if abs(dx) <= params.fp_tol:
        return 0.0, 0, 1.0
    w = (1.0 - q) * dx
    acc = 0.0
    carry = 0.0
    sum_abs = 0.0
    streak = 0
    qk = 1.0
    for k in range(JN_MAX_TERMS):
        term = qk * f(w0 + qk * dx)
        y = term - carry
        t = acc + y
        carry = (t - acc) - y
        acc = t
        sum_abs += abs(term)
        qk *= q
        if abs(term) * abs(w) < tol * (abs(acc * w) + _TINY):
            streak += 1
            if streak >= 3:
                cond = sum_abs / max(abs(acc), _TINY) if sum_abs > 0.0 else 1.0
                return w * acc, k + 1, cond
        else:
            streak = 0
    raise SeriesDivergence(
        f"Jackson-Norlund series for the antiderivative at x={x!r} failed to "
        f"stabilize within {JN_MAX_TERMS} terms (is f continuous at omega0?)"
    )


@dataclass(frozen=True)
class JnReport:
    """Per-endpoint diagnostics of a Jackson-Norlund integral."""

    terms_lower: int
    terms_upper: int
    condition_lower: float
    condition_upper: float


def jn_integral(f, a, b, params, tol=DEFAULT_SERIES_TOL):
    """Integral of f from a to b against the (q, omega) measure.

    Both endpoints must lie at or above omega0; f is assumed continuous at
    omega0 (the caller's responsibility), which makes the series tails decay
    geometrically.
    """
    value, _ = jn_integral_report(f, a, b, params, tol)
    return value


def jn_integral_report(f, a, b, params, tol=DEFAULT_SERIES_TOL):
    """Same as jn_integral but also returns truncation diagnostics."""
    if tol <= 0.0:
        raise ValueError("tol must be positive")
    lo = params.omega0 - params.fp_tol
    if a < lo or b < lo:
        raise ValueError("integration endpoints must satisfy a, b >= omega0")
    f = as_real_function(f)
    if a == b:
        return 0.0, JnReport(0, 0, 1.0, 1.0)
    fb, nb, cb = _jn_primitive(f, b, params, tol)
    fa, na, ca = _jn_primitive(f, a, params, tol)
    return fb - fa, JnReport(na, nb, ca, cb)


def inner_product(f, g, params, a, tol=DEFAULT_SERIES_TOL):
    """L2-type pairing over [omega0, a].

    Scalar form: integral of f*g.  Vector form (f, g given as 2-tuples of
    functions): component-wise products summed before integrating.
    """
    if a <= params.omega0:
        raise ValueError("inner_product needs a > omega0")
    if isinstance(f, (tuple, list)) or isinstance(g, (tuple, list)):
        f1, f2 = (as_real_function(c) for c in f)
        g1, g2 = (as_real_function(c) for c in g)
        integrand = lambda t: f1(t) * g1(t) + f2(t) * g2(t)
    else:
        fr = as_real_function(f)
        gr = as_real_function(g)
        integrand = lambda t: fr(t) * gr(t)
    return jn_integral(integrand, params.omega0, a, params, tol)
