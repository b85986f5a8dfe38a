from fractions import Fraction
import math

import numpy as np

from _errors import DomainError


def _firstNonzero(values):
    for i, v in enumerate(values):
        if v != 0:
            return i
    return None


def scaleToIntegers(coeffs):
    """
    Write a list of rationals as integers over one common denominator
    Args:
        coeffs: list of Fraction
    Return:
        ints: numpy object array of python int
        den: common denominator (positive int)
    """
    den = math.lcm(*[c.denominator for c in coeffs]) if coeffs else 1
    ints = np.array([c.numerator * (den // c.denominator) for c in coeffs],
                    dtype=object)
    return ints, den


def convolve(a, b, order):
    """
    Truncated product of two integer coefficient vectors
    Args:
        a, b: numpy object arrays (python int entries)
        order: number of output coefficients
    Return:
        numpy object array c with c[n] = sum_k a[k] b[n-k], n < order
    """
    out = np.zeros(order, dtype=object)
    va, vb = _firstNonzero(a), _firstNonzero(b)
    if va is None or vb is None:
        return out
    for n in range(va + vb, order):
        hi = min(n - vb, len(a) - 1)
        lo = max(va, n - len(b) + 1)
        if lo > hi:
            continue
        out[n] = np.dot(a[lo:hi + 1], b[n - hi:n - lo + 1][::-1])
    return out


def invertIntegers(a, order):
    """
    Integer numerators of the reciprocal series
    The reciprocal of sum a_k x^k has coefficient n equal to
    C_n / a_0^(n+1) with C_0 = 1 and
    C_n = -sum_{k=1..n} a_k a_0^(k-1) C_{n-k}
    """
    a0 = a[0]
    powers = np.empty(order, dtype=object)
    powers[0] = 1
    for k in range(1, order):
        powers[k] = powers[k - 1] * a0
    weighted = np.zeros(order, dtype=object)
    m = min(order, len(a))
    weighted[1:m] = a[1:m] * powers[0:m - 1]
    c = np.zeros(order, dtype=object)
    c[0] = 1
    for n in range(1, order):
        c[n] = -np.dot(weighted[1:n + 1], c[n - 1::-1][:n])
    return c, powers


class QSeries(object):
    """
    Truncated power series with exact rational coefficients
    Args:
        coeffs: coefficients of x^0 .. x^(order-1), padded or cut to order
        order: exclusive truncation order (defaults to len(coeffs))
        var: advisory variable tag, 'q' or 't'
    """
    def __init__(self, coeffs, order=None, var='q'):
        if order is None:
            order = len(coeffs)
        if order < 0:
            raise DomainError("negative truncation order {:}".format(order))
        l_c = [Fraction(c) for c in list(coeffs)[:order]]
        l_c.extend([Fraction(0)] * (order - len(l_c)))
        self._coeffs = tuple(l_c)
        self._var = var

    @classmethod
    def monomial(cls, n, order, var='q', coeff=1):
        l_c = [0] * order
        if n < order:
            l_c[n] = coeff
        return cls(l_c, order, var)

    @classmethod
    def fromIntegers(cls, ints, den=1, var='q'):
        return cls([Fraction(int(c), den) for c in ints], len(ints), var)

    """ Accessors """
    @property
    def coeffs(self):
        return self._coeffs

    @property
    def order(self):
        return len(self._coeffs)

    @property
    def var(self):
        return self._var

    def valuation(self):
        return _firstNonzero(self._coeffs)

    def isZero(self):
        return self.valuation() is None

    def __getitem__(self, n):
        return self._coeffs[n]

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self._var == other._var and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self._var, self._coeffs))

    def __repr__(self):
        terms = []
        for n, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if n == 0:
                terms.append(str(c))
            else:
                terms.append("{:}*{:}^{:}".format(c, self._var, n))
        body = " + ".join(terms) if terms else "0"
        return "{:} + O({:}^{:})".format(body, self._var, self.order)

    """ Ring operations """
    def _checkVar(self, other):
        if self._var != other._var:
            raise DomainError("variable mismatch: '{:}' vs '{:}'".format(
                self._var, other._var))

    def __add__(self, other):
        if not isinstance(other, QSeries):
            return self + QSeries([other], self.order, self._var)
        self._checkVar(other)
        m = min(self.order, other.order)
        return QSeries([self._coeffs[n] + other._coeffs[n] for n in range(m)],
                       m, self._var)

    __radd__ = __add__

    def __neg__(self):
        return QSeries([-c for c in self._coeffs], self.order, self._var)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QSeries):
            s = Fraction(other)
            return QSeries([s * c for c in self._coeffs], self.order,
                           self._var)
        self._checkVar(other)
        m = min(self.order, other.order)
        a, da = scaleToIntegers(list(self._coeffs[:m]))
        b, db = scaleToIntegers(list(other._coeffs[:m]))
        return QSeries.fromIntegers(convolve(a, b, m), da * db, self._var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, QSeries):
            return self * other.invert()
        return self * (1 / Fraction(other))

    def __pow__(self, e):
        if not isinstance(e, int):
            raise DomainError("series power must be an integer, got {:}"
                              .format(e))
        if e < 0:
            return self.invert() ** (-e)
        result = QSeries.monomial(0, self.order, self._var)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def invert(self):
        """
        Multiplicative inverse, exact to the same order
        """
        if self.order == 0:
            return self
        if self._coeffs[0] == 0:
            raise DomainError("cannot invert a series with zero constant term")
        a, den = scaleToIntegers(list(self._coeffs))
        c, powers = invertIntegers(a, self.order)
        a0 = a[0]
        return QSeries([Fraction(int(c[n]) * den, int(powers[n]) * a0)
                        for n in range(self.order)], self.order, self._var)

    """ Structural operations """
    def truncate(self, order):
        return QSeries(self._coeffs, min(order, self.order), self._var)

    def rescale(self, d):
        """
        Substitute x -> x^d; the truncation order is kept
        """
        if d < 1:
            raise DomainError("rescale factor must be positive, got {:}"
                              .format(d))
        l_c = [Fraction(0)] * self.order
        for n in range(0, (self.order + d - 1) // d):
            l_c[n * d] = self._coeffs[n]
        return QSeries(l_c, self.order, self._var)

    def shift(self, s):
        """
        Multiply by x^s (s >= 0), keeping the order
        """
        return QSeries([0] * s + list(self._coeffs), self.order, self._var)

    def theta(self):
        """
        Apply x d/dx, i.e. multiply coefficient n by n
        """
        return QSeries([n * c for n, c in enumerate(self._coeffs)],
                       self.order, self._var)

    def retag(self, var):
        return QSeries(self._coeffs, self.order, var)

    """ Serialization """
    def toDict(self):
        return {
            "var": self._var,
            "order": self.order,
            "coeffs": ["{:}/{:}".format(c.numerator, c.denominator)
                       for c in self._coeffs],
        }

    @classmethod
    def fromDict(cls, d):
        return cls([Fraction(c) for c in d["coeffs"]], d["order"], d["var"])
