from fractions import Fraction

from mpmath import nstr

from _errors import DomainError


class LinearFormSeries(object):
    """
    Exact pair (A, B) standing for the series A - zeta(3) B
    Args:
        A: rational part
        B: coefficient series of -zeta(3)
        coordinate: 'q' or 't'
        level: N
        alpha: family parameter
    """
    def __init__(self, A, B, coordinate, level, alpha):
        if A.var != coordinate or B.var != coordinate:
            raise DomainError(
                "linear form series tagged '{:}' but A/B are in '{:}'/'{:}'"
                .format(coordinate, A.var, B.var))
        self.A = A
        self.B = B
        self.coordinate = coordinate
        self.level = level
        self.alpha = Fraction(alpha)

    @property
    def order(self):
        return min(self.A.order, self.B.order)

    def toDict(self):
        return {
            "level": self.level,
            "alpha": "{:}/{:}".format(self.alpha.numerator,
                                      self.alpha.denominator),
            "coordinate": self.coordinate,
            "A": self.A.toDict(),
            "B": self.B.toDict(),
        }


class ApproxRow(object):
    """
    One approximant a_n / b_n of zeta(3)
    ratio is None when b_n = 0.
    """
    def __init__(self, n, a, b, lcm_cube):
        self.n = n
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.scaled_a = lcm_cube * self.a
        if self.b != 0:
            self.ratio_reduced = self.a / self.b
            self.den_digits = len(str(self.ratio_reduced.denominator))
        else:
            self.ratio_reduced = None
            self.den_digits = None

    def toDict(self):
        def fmt(r):
            if r is None:
                return None
            return "{:}/{:}".format(r.numerator, r.denominator)
        return {
            "n": self.n,
            "a": fmt(self.a),
            "b": fmt(self.b),
            "ratio": fmt(self.ratio_reduced),
            "scaled_a": fmt(self.scaled_a),
            "den_digits": self.den_digits,
        }


class MetricRow(object):
    """
    Error and denominator size of one approximant
    Args:
        n: index
        error: |a_n/b_n - zeta(3)| (mpf)
        err_exponent: floor(log10 error)
        E: -log10 error
        den_log10: log10 of the reduced denominator
        den_digits: decimal digits of the reduced denominator
        Q: E / den_log10 (None when the denominator is 1)
        digits: working precision actually used
    """
    def __init__(self, n, error, err_exponent, E, den_log10, den_digits, Q,
                 digits):
        self.n = n
        self.error = error
        self.err_exponent = err_exponent
        self.E = E
        self.den_log10 = den_log10
        self.den_digits = den_digits
        self.Q = Q
        self.digits = digits

    def toDict(self):
        return {
            "n": self.n,
            "error": nstr(self.error, 3),
            "err_exponent": self.err_exponent,
            "E": "{:.1f}".format(float(self.E)),
            "den_log10": "{:.1f}".format(float(self.den_log10)),
            "den_digits": self.den_digits,
            "Q": None if self.Q is None else "{:.3f}".format(float(self.Q)),
            "digits": self.digits,
        }
