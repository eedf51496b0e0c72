"""Hot numeric kernels: q-trigonometric series and lattice sweeps.

Plain-Python reference implementations.  The backend module optionally wraps
every function here with numba.njit, so the code must stay nopython-friendly:
scalars, numpy arrays, no Python objects, and no calls between kernels (each
function is compiled independently, which is why the series loops are inlined
where a grid of evaluations is needed).

All series accumulation is compensated (Kahan); alternating q-series cancel
severely and the callers rely on the reported sum of absolute terms to judge
how many digits survived.
"""

import numpy as np

_EPS = 2.220446049250313e-16
MAX_TERMS = 200000

STATUS_OK = 0
STATUS_CAP = 1


def cos_series(z, q, tol):
    """Evaluate sum_n (-1)^n q^(n^2) z^(2n) / (q;q)_2n.

    Returns (value, terms_used, sum_abs, tail_bound, status).  Truncates once
    the term ratio has entered its terminal decrease (|ratio| < 1, after which
    it shrinks by at least q^2 per step) and the next term is below
    tol*|partial| or below the roundoff floor of the accumulated sum.
    """
    if z == 0.0:
        return 1.0, 1, 1.0, 0.0, STATUS_OK
    z2 = z * z
    term = 1.0
    s = 1.0
    carry = 0.0
    sum_abs = 1.0
    qodd = q  # q^(2n+1)
    n = 0
    while n < MAX_TERMS:
        term *= -(qodd * z2) / ((1.0 - qodd) * (1.0 - qodd * q))
        y = term - carry
        t = s + y
        carry = (t - s) - y
        s = t
        sum_abs += abs(term)
        qodd *= q * q
        n += 1
        next_ratio = (qodd * z2) / ((1.0 - qodd) * (1.0 - qodd * q))
        if next_ratio < 1.0:
            next_mag = abs(term) * next_ratio
            limit = tol * abs(s)
            floor = 0.5 * _EPS * sum_abs
            if limit < floor:
                limit = floor
            if next_mag <= limit:
                return s, n + 1, sum_abs, next_mag, STATUS_OK
    return s, n + 1, sum_abs, abs(term), STATUS_CAP


def sin_series(z, q, tol):
    """Evaluate sum_n (-1)^n q^(n(n+1)) z^(2n+1) / (q;q)_(2n+1).

    Same contract as cos_series.  The n = 0 term is z / (1 - q).
    """
    if z == 0.0:
        return 0.0, 1, 0.0, 0.0, STATUS_OK
    z2 = z * z
    term = z / (1.0 - q)
    s = term
    carry = 0.0
    sum_abs = abs(term)
    qeven = q * q  # q^(2n+2)
    n = 0
    while n < MAX_TERMS:
        term *= -(qeven * z2) / ((1.0 - qeven) * (1.0 - qeven * q))
        y = term - carry
        t = s + y
        carry = (t - s) - y
        s = t
        sum_abs += abs(term)
        qeven *= q * q
        n += 1
        next_ratio = (qeven * z2) / ((1.0 - qeven) * (1.0 - qeven * q))
        if next_ratio < 1.0:
            next_mag = abs(term) * next_ratio
            limit = tol * abs(s)
            floor = 0.5 * _EPS * sum_abs
            if limit < floor:
                limit = floor
            if next_mag <= limit:
                return s, n + 1, sum_abs, next_mag, STATUS_OK
    return s, n + 1, sum_abs, abs(term), STATUS_CAP


def trig_grid(zs, q, tol):
    """Cosine and sine series at every z in zs.

    Returns (cos_vals, sin_vals, max_sum_abs) where max_sum_abs is the largest
    sum of absolute terms seen across all evaluations, used by callers as a
    roundoff-noise scale.  The series loops are inlined copies of cos_series
    and sin_series (kernels cannot call each other under independent jitting).
    """
    m = zs.shape[0]
    cv = np.empty(m)
    sv = np.empty(m)
    max_sum_abs = 0.0
    for i in range(m):
        z = zs[i]
        if z == 0.0:
            cv[i] = 1.0
            sv[i] = 0.0
            if 1.0 > max_sum_abs:
                max_sum_abs = 1.0
            continue
        z2 = z * z
        # cosine
        term = 1.0
        s = 1.0
        carry = 0.0
        sum_abs = 1.0
        qodd = q
        n = 0
        while n < MAX_TERMS:
            term *= -(qodd * z2) / ((1.0 - qodd) * (1.0 - qodd * q))
            y = term - carry
            t = s + y
            carry = (t - s) - y
            s = t
            sum_abs += abs(term)
            qodd *= q * q
            n += 1
            next_ratio = (qodd * z2) / ((1.0 - qodd) * (1.0 - qodd * q))
            if next_ratio < 1.0:
                next_mag = abs(term) * next_ratio
                limit = tol * abs(s)
                floor = 0.5 * _EPS * sum_abs
                if limit < floor:
                    limit = floor
                if next_mag <= limit:
                    break
        cv[i] = s
        if sum_abs > max_sum_abs:
            max_sum_abs = sum_abs
        # sine
        term = z / (1.0 - q)
        s = term
        carry = 0.0
        sum_abs = abs(term)
        qeven = q * q
        n = 0
        while n < MAX_TERMS:
            term *= -(qeven * z2) / ((1.0 - qeven) * (1.0 - qeven * q))
            y = term - carry
            t = s + y
            carry = (t - s) - y
            s = t
            sum_abs += abs(term)
            qeven *= q * q
            n += 1
            next_ratio = (qeven * z2) / ((1.0 - qeven) * (1.0 - qeven * q))
            if next_ratio < 1.0:
                next_mag = abs(term) * next_ratio
                limit = tol * abs(s)
                floor = 0.5 * _EPS * sum_abs
                if limit < floor:
                    limit = floor
                if next_mag <= limit:
                    break
        sv[i] = s
        if sum_abs > max_sum_abs:
            max_sum_abs = sum_abs
    return cv, sv, max_sum_abs


def lattice_cumint(fvals, pm, q):
    """Antiderivative values F[j] = integral from the fixed point to pts[j].

    pm[j] is pts[j] minus the fixed point (positive, geometrically decreasing
    as j grows).  The deepest point closes the tail assuming the integrand is
    locally constant there, F[last] = pm[last]*f[last]; every shallower value
    adds the exact lattice step (1-q)*pm[j]*f[j], so the lattice fundamental
    theorem holds to roundoff at all interior indices.
    """
    m = fvals.shape[0]
    F = np.empty(m)
    acc = pm[m - 1] * fvals[m - 1]
    carry = 0.0
    F[m - 1] = acc
    one_minus_q = 1.0 - q
    for j in range(m - 2, -1, -1):
        term = one_minus_q * pm[j] * fvals[j]
        y = term - carry
        t = acc + y
        carry = (t - acc) - y
        acc = t
        F[j] = acc
    return F


def picard_sweep(Y1, Y2, c1, c2, lam, r_vals, p_shift, pm, q):
    """One fixed-point sweep of the coupled Volterra system on the lattice.

    New iterate:
        Y1'[j] = c1 + integral_{w0}^{pts[j]} (lam - r(s)) Y2(s) ds
        Y2'[j] = c2 + q * integral_{w0}^{pts[j]} (p(h(s)) - lam) Y1(h(s)) ds
    where the h-shift is an index shift (p_shift[j] = p at pts[j+1]).

    Updates Y1, Y2 in place and returns (U1, U2, delta, sup_y): the offset
    arrays (Y - c), the sup-norm change, and the sup-norm of the new iterate.
    Keeping the offsets is what lets residual checks difference them without
    re-cancelling c to machine noise at deep lattice points.
    """
    m = Y1.shape[0]
    one_minus_q = 1.0 - q
    U1 = np.empty(m)
    U2 = np.empty(m)

    acc = pm[m - 1] * ((lam - r_vals[m - 1]) * Y2[m - 1])
    carry = 0.0
    U1[m - 1] = acc
    for j in range(m - 2, -1, -1):
        term = one_minus_q * pm[j] * ((lam - r_vals[j]) * Y2[j])
        y = term - carry
        t = acc + y
        carry = (t - acc) - y
        acc = t
        U1[j] = acc

    acc = pm[m - 1] * ((p_shift[m - 1] - lam) * Y1[m - 1])
    carry = 0.0
    U2[m - 1] = q * acc
    for j in range(m - 2, -1, -1):
        term = one_minus_q * pm[j] * ((p_shift[j] - lam) * Y1[j + 1])
        y = term - carry
        t = acc + y
        carry = (t - acc) - y
        acc = t
        U2[j] = q * acc

    delta = 0.0
    sup_y = 0.0
    for j in range(m):
        ny1 = c1 + U1[j]
        ny2 = c2 + U2[j]
        d = abs(ny1 - Y1[j])
        if d > delta:
            delta = d
        d = abs(ny2 - Y2[j])
        if d > delta:
            delta = d
        a = abs(ny1)
        if a > sup_y:
            sup_y = a
        a = abs(ny2)
        if a > sup_y:
            sup_y = a
        Y1[j] = ny1
        Y2[j] = ny2
    return U1, U2, delta, sup_y


def residual_grid(U1, U2, c1, c2, lam, r_vals, p_shift, pm, q):
    """Pointwise system residual at interior lattice indices 1..m-2.

    Difference quotients are built from the offset arrays so that the
    constant part of the solution never enters a cancelling subtraction.
    Returns (res1, res2) with zeros at the two boundary indices.
    """
    m = U1.shape[0]
    one_minus_q = 1.0 - q
    res1 = np.zeros(m)
    res2 = np.zeros(m)
    for j in range(1, m - 1):
        y1 = c1 + U1[j]
        y2 = c2 + U2[j]
        d_y1 = (U1[j + 1] - U1[j]) / (-one_minus_q * pm[j])
        d_dual_y2 = (U2[j] - U2[j - 1]) / (-one_minus_q * pm[j - 1])
        res1[j] = -(d_dual_y2 / q) + (p_shift[j - 1] - lam) * y1
        res2[j] = d_y1 + (r_vals[j] - lam) * y2
    return res1, res2
