from fractions import Fraction
from functools import lru_cache
import logging

import numpy as np

from _errors import DomainError
from qseries import QSeries, convolve, invertIntegers
from eta_quotient import EtaQuotient, HauptmodulCatalogEntry
import arith_functions as arith
import hauptmoduln

logger = logging.getLogger(__name__)


@lru_cache(maxsize=None)
def eisenstein(k, d, M):
    """
    E_k(d tau) = 1 - (2k / B_k) sum_{n>=1} sigma_{k-1}(n) q^(d n)
    Args:
        k: even weight >= 2
        d: rescaling of tau
        M: truncation order
    """
    if k < 2 or k % 2:
        raise DomainError("Eisenstein weight must be even and >= 2, got {:}"
                          .format(k))
    factor = -Fraction(2 * k) / arith.bernoulli(k)
    l_c = [Fraction(0)] * M
    if M > 0:
        l_c[0] = Fraction(1)
    for n in range(1, (M - 1) // d + 1):
        l_c[n * d] = factor * arith.sigma(n, k - 1)
    return QSeries(l_c, M, 'q')


@lru_cache(maxsize=None)
def _eulerIntegers(M):
    """
    prod_{n>=1} (1 - q^n) by the pentagonal number theorem
    """
    c = np.zeros(M, dtype=object)
    k = 0
    while True:
        sign = -1 if k % 2 else 1
        p1 = k * (3 * k - 1) // 2
        p2 = k * (3 * k + 1) // 2
        if p1 >= M:
            break
        c[p1] += sign
        if k and p2 < M:
            c[p2] += sign
        k += 1
    return c


def _rescaled(ints, d, M):
    out = np.zeros(M, dtype=object)
    for n in range(0, (M - 1) // d + 1):
        out[n * d] = ints[n]
    return out


def _power(ints, r, M):
    """
    Integer series to a signed integer power (constant term 1)
    """
    if r < 0:
        ints, _ = invertIntegers(ints, M)
        r = -r
    result = np.zeros(M, dtype=object)
    result[0] = 1
    base = ints
    while r:
        if r & 1:
            result = convolve(result, base, M)
        r >>= 1
        if r:
            base = convolve(base, base, M)
    return result


def etaQuotientSeries(eq, M):
    """
    q-expansion of an eta quotient, exact to order M
    Args:
        eq: EtaQuotient with a non-negative integral q prefactor
        M: truncation order
    Return:
        QSeries in q
    """
    shift = eq.prefactorExponent()
    if shift.denominator != 1 or shift < 0:
        raise DomainError(
            "eta quotient {:} has prefactor exponent {:}, needs a "
            "non-negative integer".format(eq, shift))
    shift = int(shift)
    m = max(M - shift, 0)
    product = np.zeros(m, dtype=object)
    if m:
        product[0] = 1
        euler = _eulerIntegers(m)
        for d, r in eq.factors:
            product = convolve(product, _power(_rescaled(euler, d, m), r, m),
                               m)
    return QSeries([0] * shift + [Fraction(int(c)) for c in product], M, 'q')


def hauptmodul(N):
    """
    Catalog entry of the Hauptmodul t_N
    """
    if N in hauptmoduln.UNSPECIFIED_LEVELS:
        raise DomainError(
            "level {:} has no stated Hauptmodul: {:}".format(
                N, hauptmoduln.UNSPECIFIED_NOTE))
    if N not in hauptmoduln.LEVELS:
        raise DomainError("unsupported level {:}; supported levels: {:}"
                          .format(N, sorted(hauptmoduln.LEVELS)))
    rec = hauptmoduln.LEVELS[N]
    return HauptmodulCatalogEntry(
        N, EtaQuotient(rec['factors'], N), rec['golden'], rec['gauge'],
        rec['fricke'], rec['branch'])


def supportedLevels():
    return sorted(hauptmoduln.LEVELS)


@lru_cache(maxsize=None)
def hauptmodulSeries(N, M):
    t = etaQuotientSeries(hauptmodul(N).eta_quotient, M)
    logger.debug("t_%d expanded to order %d", N, M)
    return t


def goldenCheck(N):
    """
    Compare the leading Fourier coefficients of t_N with the catalog
    Return:
        (passed, computed coefficients of q^1 .. q^6)
    """
    entry = hauptmodul(N)
    k = len(entry.expected_leading)
    t = hauptmodulSeries(N, k + 1)
    got = tuple(int(c) for c in t.coeffs[1:k + 1])
    return (t.valuation() == 1 and got == entry.expected_leading), got


def beukersForm(M):
    """
    E_b = (eta(3t) eta(2t))^7 / (eta(6t) eta(t))^5, constant term 1
    """
    return etaQuotientSeries(EtaQuotient(hauptmoduln.BEUKERS_FACTORS, 6), M)
