from functools import lru_cache
from numbers import Rational
import logging
import math

import numpy as np
from mpmath import mp, mpf, mpc
from scipy import stats

from _errors import DomainError
from branch_report import BranchReport, RadiusFit
from linear_form import MetricRow
import arith_functions as arith
import modform_functions as modform
import family_functions as family
import linform_functions as linform
import _param as param

logger = logging.getLogger(__name__)


def _checkDigits(digits):
    if digits < param._MIN_DIGITS:
        raise DomainError("precision must be >= {:} digits, got {:}"
                          .format(param._MIN_DIGITS, digits))


def _round(x, digits):
    with mp.workdps(digits):
        return +x


def toMpf(r):
    """
    Fraction -> mpf at the current working precision
    """
    return mpf(r.numerator) / r.denominator


@lru_cache(maxsize=None)
def zeta3(digits):
    """
    zeta(3) = 5/2 sum_{n>=1} (-1)^(n+1) / (n^3 binom(2n, n))
    The terms shrink by about 4 per step and alternate, so the tail
    after the last kept term is bounded by the first omitted one.
    """
    _checkDigits(digits)
    with mp.workdps(digits + param._GUARD_DIGITS):
        eps = mpf(10) ** (-(digits + param._GUARD_DIGITS))
        total = mpf(0)
        binom = 2
        n = 1
        while True:
            term = mpf(1) / (n ** 3 * binom)
            if term < eps:
                break
            total += term if n % 2 else -term
            binom = binom * (2 * n + 1) * (2 * n + 2) // ((n + 1) ** 2)
            n += 1
        value = total * 5 / 2
    logger.debug("zeta(3) to %d digits after %d terms", digits, n - 1)
    return _round(value, digits)


def evalEta(tau, digits):
    """
    eta(tau) = q^(1/24) sum_k (-1)^k q^(k(3k-1)/2), q = exp(2 pi i tau)
    The pentagonal sum is cut once |q|^p falls below 10^-(digits+guard);
    the omitted terms are bounded by a geometric tail of that size.
    """
    _checkDigits(digits)
    with mp.workdps(digits + param._GUARD_DIGITS):
        tau = mpc(tau)
        if tau.imag <= 0:
            raise DomainError("eta needs Im(tau) > 0, got {:}".format(tau))
        q = mp.exp(2j * mp.pi * tau)
        aq = abs(q)
        eps = mpf(10) ** (-(digits + param._GUARD_DIGITS))
        total = mpc(1)
        for k in range(1, param._ETA_MAX_TERMS):
            p1 = k * (3 * k - 1) // 2
            if aq ** p1 < eps:
                break
            sign = -1 if k % 2 else 1
            total += sign * (q ** p1 + q ** (p1 + k))
        value = mp.exp(2j * mp.pi * tau / 24) * total
    return _round(value, digits)


def evalEtaQuotient(eq, tau, digits):
    with mp.workdps(digits + param._GUARD_DIGITS):
        value = mpc(1)
        for d, r in eq.factors:
            value *= evalEta(d * mpc(tau), digits + param._GUARD_DIGITS) ** r
    return _round(value, digits)


def evalHauptmodul(N, tau, digits):
    """
    t_N(tau) from its eta quotient
    """
    return evalEtaQuotient(modform.hauptmodul(N).eta_quotient, tau, digits)


def frickeValue(N, digits):
    """
    t_N at the Fricke fixed point i / sqrt(N), a real number
    """
    with mp.workdps(digits + param._GUARD_DIGITS):
        tau = mpc(0, 1) / mp.sqrt(N)
        value = evalHauptmodul(N, tau, digits + param._GUARD_DIGITS).real
    return _round(value, digits)


def _log10Abs(x):
    if isinstance(x, Rational):
        if x == 0:
            return None
        return float(mp.log10(abs(x.numerator)) - mp.log10(x.denominator))
    if x == 0:
        return None
    return float(mp.log10(abs(x)))


def radiusEstimate(coeffs, min_coeffs=param._RADIUS_MIN_COEFFS):
    """
    Radius of convergence from the growth of coefficients
    Ratios r_n = |c_(n-1) / c_n| over the last half of the trailing
    nonzero run are fitted linearly in 1/n and extrapolated to 1/n = 0.
    When that fit is poor, log|c_n| = a - n log R + g log n is fitted
    by least squares instead.
    Args:
        coeffs: Fractions or mpf values
        min_coeffs: required length of the trailing nonzero run
    Return:
        RadiusFit
    """
    logs = [_log10Abs(c) for c in coeffs]
    start = len(logs)
    while start > 0 and logs[start - 1] is not None:
        start -= 1
    count = len(logs) - start
    if count < min_coeffs:
        raise DomainError(
            "radius estimate needs {:} trailing nonzero coefficients, got {:}"
            .format(min_coeffs, count))
    n = np.arange(start, len(logs), dtype=float)
    y = np.array(logs[start:], dtype=float)
    half = (count + 1) // 2
    n_fit = n[1:][-half:]
    ratio = 10.0 ** (y[:-1] - y[1:])[-half:]
    fit = stats.linregress(1.0 / n_fit, ratio)
    radius = fit.intercept
    resid = ratio - (fit.intercept + fit.slope / n_fit)
    rel = float(np.sqrt(np.mean(resid ** 2)) / abs(radius)) if radius else \
        float('inf')
    if radius > 0 and rel <= param._RADIUS_FIT_RESIDUAL_MAX:
        return RadiusFit(mpf(radius), rel, 'domb-sykes', half)

    logger.info("ratio fit residual %.3g too large, using root test", rel)
    n_tail = n[-half:]
    lnc = y[-half:] * math.log(10.0)
    design = np.column_stack([np.ones_like(n_tail), -n_tail,
                              np.log(n_tail)])
    sol, _, _, _ = np.linalg.lstsq(design, lnc, rcond=None)
    resid = lnc - design.dot(sol)
    rel = float(np.sqrt(np.mean(resid ** 2)) / max(abs(lnc).max(), 1.0))
    return RadiusFit(mp.exp(sol[1]), rel, 'root-test', half)


def linearFormValues(rows, digits=None):
    """
    Numeric coefficients a_n - zeta(3) b_n of the linear form
    Args:
        rows: ApproxRow list
        digits: working precision; by default enough to resolve the
                cancellation between a_n and zeta(3) b_n
    Return:
        (values, digits used)
    """
    if digits is None:
        top = max((_log10Abs(r.b) or 0.0) for r in rows)
        digits = int(2 * max(top, 0.0)) + 30
    digits = max(digits, param._MIN_DIGITS)
    z = zeta3(digits)
    with mp.workdps(digits):
        values = [toMpf(r.a) - z * toMpf(r.b) for r in rows]
    return values, digits


def productRadius(rows, digits=None):
    values, _ = linearFormValues(rows, digits)
    return radiusEstimate(values)


def _radiusTolerance(N):
    return param._RADIUS_TOL_LEVEL6 if N == 6 else param._RADIUS_TOL_OTHER


def resolvedRadius(N, estimate=None):
    """
    Branch radius level N is classified by: the estimate when it lies
    within tolerance of the catalog value, the catalog value otherwise
    """
    entry = modform.hauptmodul(N)
    expected = mpf(entry.branch_expected) if entry.branch_expected else None
    if estimate is None:
        return expected
    estimate = mpf(estimate)
    if expected is None:
        return estimate
    if abs(estimate - expected) / expected > _radiusTolerance(N):
        return expected
    return estimate


def branchReport(N, order=param._BRANCH_ORDER, digits=param._DEFAULT_DIGITS):
    """
    Fricke value and branch radius estimates of level N
    """
    entry = modform.hauptmodul(N)
    rows = linform.approximants(N, 0, order)
    b_fit = radiusEstimate([r.b for r in rows])
    c_fit = productRadius(rows)
    fricke = frickeValue(N, digits)
    tol = _radiusTolerance(N)
    expected = mpf(entry.branch_expected) if entry.branch_expected else None
    fexp = mpf(entry.fricke_expected) if entry.fricke_expected else None
    report = BranchReport(N, fricke, c_fit, b_fit, fexp, expected, tol,
                          digits)
    if report.flagged:
        logger.warning("level %d: branch estimate %s deviates %s from %s",
                       N, mp.nstr(c_fit.estimate, 8),
                       mp.nstr(report.deviation, 3), entry.branch_expected)
    return report


def obstructionReport(estimates, n=param._OBSTRUCTION_N):
    """
    Compare each branch radius R_N with e^3, the growth rate of
    lcm(1..n)^3
    Args:
        estimates: (level, R_N) pairs; below_one is read from the
                   resolved radius
    """
    e3 = mp.e ** 3
    density = 3 * mp.log10(arith.lcmUpto(n))
    rows = []
    for level, R in estimates:
        R = mpf(R)
        radius = resolvedRadius(level, R)
        rows.append({
            "level": level,
            "branch_estimate": mp.nstr(R, 8),
            "radius": mp.nstr(radius, 8),
            "passes": bool(R > e3),
            "below_one": bool(radius < 1),
        })
    return {
        "e3": mp.nstr(e3, 8),
        "n": n,
        "lcm_cube_log10": mp.nstr(density, 8),
        "lcm_cube_log10_per_index": mp.nstr(density / n, 8),
        "e3_log10": mp.nstr(mp.log10(e3), 8),
        "rows": rows,
    }


def errorMetrics(rows, digits=param._DEFAULT_DIGITS):
    """
    E_n = -log10|a_n/b_n - zeta(3)|, D_n = log10 den(a_n/b_n), Q = E/D
    The precision is raised until it exceeds every E_n by the slack.
    Rows with b_n = 0 are skipped.
    """
    _checkDigits(digits)
    rows = [r for r in rows if r.ratio_reduced is not None]
    slack = param._METRIC_SLACK_DIGITS
    # the error of a_n/b_n is roughly 1/b_n^2
    top = max([_log10Abs(r.b) for r in rows] or [0.0])
    work = max(digits, int(2 * top) + slack)
    while True:
        z = zeta3(work)
        with mp.workdps(work):
            errors = [abs(toMpf(r.ratio_reduced) - z) for r in rows]
            worst = mpf(0)
            for e in errors:
                worst = max(worst, -mp.log10(e) if e else mpf(work))
        if worst + slack <= work:
            break
        if worst < work - param._GUARD_DIGITS:
            # resolved, just short of the slack
            new = int(worst) + slack + param._GUARD_DIGITS
        else:
            new = 2 * work
        logger.info("raising metric precision from %d to %d digits",
                    work, new)
        work = new

    out = []
    with mp.workdps(work):
        for r, err in zip(rows, errors):
            den = r.ratio_reduced.denominator
            E = -mp.log10(err)
            D = mp.log10(den)
            Q = E / D if den > 1 else None
            out.append(MetricRow(r.n, err, int(mp.floor(mp.log10(err))),
                                 E, D, len(str(den)), Q, work))
    return out


def heckeSamples(N):
    with mp.workdps(param._DEFAULT_DIGITS):
        root = mp.sqrt(N)
        return [mpc(mpf(re), mpf(scale) / root)
                for re, scale in param._HECKE_SAMPLES]


def heckeResiduals(N, tau_samples=None, digits=param._DEFAULT_DIGITS,
                   order=param._HECKE_ORDER):
    """
    |h(tau) - (-i sqrt(N) tau)^2 h(-1/(N tau))| with h = f - zeta(3)
    for every sample
    """
    _checkDigits(digits)
    if tau_samples is None:
        tau_samples = heckeSamples(N)
    F = family.comboToSeries(family.solveF(N, 4), order)
    f = linform.eichler(F, 4, order)
    z = zeta3(digits + param._GUARD_DIGITS)
    bound = mpf(10) ** (-param._HECKE_MIN_DECAY_DIGITS)

    out = []
    with mp.workdps(digits + param._GUARD_DIGITS):
        coeffs = [toMpf(c) for c in f.coeffs]

        def h(tau, sample):
            if tau.imag <= 0:
                raise DomainError("sample {:} is not in the upper half plane"
                                  .format(sample))
            q = mp.exp(2j * mp.pi * tau)
            if abs(q) ** order > bound:
                raise DomainError(
                    "sample {:}: q-series of order {:} does not converge "
                    "(|q| = {:})".format(sample, order, mp.nstr(abs(q), 5)))
            return mp.polyval(coeffs[::-1], q) - z

        for tau in tau_samples:
            tau = mpc(tau)
            image = -1 / (N * tau)
            lhs = h(tau, tau)
            rhs = (-1j * mp.sqrt(N) * tau) ** 2 * h(image, tau)
            out.append(abs(lhs - rhs))
    return [_round(r, digits) for r in out]


def heckeCheck(N, tau_samples=None, digits=param._DEFAULT_DIGITS,
               order=param._HECKE_ORDER):
    """
    Largest functional equation residual over the samples
    """
    return max(heckeResiduals(N, tau_samples, digits, order))


def linearFormTrend(N, alpha, n_max=param._TREND_N, radius=None):
    """
    Slope of log10|a_n - zeta(3) b_n| over the second half of 0..n_max
    A slope steeper than _TREND_FLAT_SLOPE labels the level by its sign.
    A flatter one cannot be told apart from a radius near one at this
    range, and the label follows the resolved branch radius instead:
    decaying above one, non-decaying otherwise.
    Args:
        radius: branch radius estimate, resolved against the catalog;
                the catalog value when None
    Return:
        dict with 'slope', 'label' ('decaying' or 'non-decaying') and
        'source' ('slope' or 'radius')
    """
    rows = linform.approximants(N, alpha, n_max + 1)
    values, digits = linearFormValues(rows)
    lo = n_max // 2
    x = np.arange(lo, n_max + 1, dtype=float)
    y = np.array([_log10Abs(v) for v in values[lo:]], dtype=float)
    fit = stats.linregress(x, y)
    slope = float(fit.slope)
    resolved = resolvedRadius(N, radius)
    if abs(slope) >= param._TREND_FLAT_SLOPE or resolved is None:
        source = 'slope'
        decaying = slope < 0
    else:
        source = 'radius'
        decaying = resolved > 1
    label = 'decaying' if decaying else 'non-decaying'
    logger.debug("level %d alpha %s: log-slope %.4f (%s from %s)", N, alpha,
                 slope, label, source)
    return {"level": N, "alpha": str(alpha), "slope": slope,
            "label": label, "source": source,
            "radius": None if resolved is None else mp.nstr(resolved, 8),
            "digits": digits}
