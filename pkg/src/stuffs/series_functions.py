from fractions import Fraction
import logging

import numpy as np

from _errors import DomainError
from qseries import QSeries, scaleToIntegers, convolve

logger = logging.getLogger(__name__)


class PowerTable(object):
    """
    Integer powers u^0 .. u^(M-1) of a series u with u(0) = 0
    Args:
        series: the base u, constant term zero
        order: truncation order M (defaults to series.order)
    The powers are stored as integer rows over the common scale
    den^j, which keeps the composition and expansion loops free of
    rational normalisation.
    """
    def __init__(self, series, order=None):
        if order is None:
            order = series.order
        order = min(order, series.order)
        if series.order > 0 and series[0] != 0:
            raise DomainError(
                "inner series must have zero constant term, got {:}"
                .format(series[0]))
        self._order = order
        self._var = series.var
        base, self._den = scaleToIntegers(list(series.coeffs[:order]))
        self._l_table = np.zeros((order, order), dtype=object)
        if order == 0:
            return
        row = np.zeros(order, dtype=object)
        row[0] = 1
        self._l_table[0] = row
        for j in range(1, order):
            row = convolve(row, base, order)
            self._l_table[j] = row
        self._lead = base[1] if order > 1 else 0
        logger.debug("power table built: order %d, scale %d digits",
                     order, len(str(self._den)))

    @property
    def order(self):
        return self._order

    def power(self, j):
        return QSeries.fromIntegers(self._l_table[j], self._den ** j,
                                    self._var)

    def compose(self, outer):
        """
        Evaluate outer(u) = sum_j outer_j u^j
        Args:
            outer: QSeries in the dummy variable
        Return:
            QSeries in the variable of u, order min(outer.order, M)
        """
        m = min(outer.order, self._order)
        if m == 0:
            return QSeries([], 0, self._var)
        o, do = scaleToIntegers(list(outer.coeffs[:m]))
        acc = np.zeros(m, dtype=object)
        for j in range(m):
            if o[j] == 0:
                continue
            acc += (o[j] * self._den ** (m - 1 - j)) * self._l_table[j, :m]
        return QSeries.fromIntegers(acc, do * self._den ** (m - 1), self._var)

    def expand(self, series, var='t'):
        """
        Coefficients s_j with series = sum_j s_j u^j (triangular solve)
        Args:
            series: QSeries in the variable of u
            var: tag of the returned series
        Return:
            QSeries of the s_j, order min(series.order, M)
        """
        if self._order > 1 and self._lead == 0:
            raise DomainError("expansion needs a series of valuation 1")
        m = min(series.order, self._order)
        s, ds = scaleToIntegers(list(series.coeffs[:m]))
        unit = self._lead in (1, -1)
        u = np.zeros(m, dtype=object)
        for n in range(m):
            rest = s[n] - np.dot(u[:n], self._l_table[:n, n]) if n else s[n]
            diag = self._l_table[n, n]
            if unit:
                u[n] = rest * diag
            else:
                u[n] = Fraction(rest, diag)
        return QSeries([Fraction(u[j]) * Fraction(self._den ** j, ds)
                        for j in range(m)], m, var)


def compose(outer, inner):
    """
    outer(inner(x)), exact to order min(outer.order, inner.order)
    """
    v = inner.valuation()
    if v is not None and v < 1:
        raise DomainError(
            "compose needs an inner series with zero constant term, got {:}"
            .format(inner[0]))
    return PowerTable(inner).compose(outer)


def revert(series, var=None):
    """
    Compositional inverse of a series of valuation exactly 1
    Args:
        series: u(x) = c x + ..., c != 0
        var: tag of the result (defaults to the other of 'q' and 't')
    Return:
        r with u(r(y)) = y and r(u(x)) = x to the same order
    """
    if series.valuation() != 1:
        raise DomainError("revert needs valuation 1, got {:}"
                          .format(series.valuation()))
    if var is None:
        var = 't' if series.var == 'q' else 'q'
    identity = QSeries.monomial(1, series.order, series.var)
    return PowerTable(series).expand(identity, var)
