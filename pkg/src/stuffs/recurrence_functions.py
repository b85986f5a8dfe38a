from fractions import Fraction
import logging

import sympy

from _errors import DomainError
from qseries import QSeries
from operator_coeffs import OperatorCoeffs
import arith_functions as arith

logger = logging.getLogger(__name__)

n_sym = sympy.Symbol('n')
t_sym = sympy.Symbol('t')


def aperyV(n):
    return 34 * n ** 3 + 51 * n ** 2 + 27 * n + 5


def aperyResidual(seq, n):
    """
    (n+1)^3 u_(n+1) - (34n^3 + 51n^2 + 27n + 5) u_n + n^3 u_(n-1)
    """
    if n < 0 or n + 1 >= len(seq):
        raise DomainError("recurrence index {:} out of range for {:} terms"
                          .format(n, len(seq)))
    prev = seq[n - 1] if n else 0
    return Fraction((n + 1) ** 3 * Fraction(seq[n + 1])
                    - aperyV(n) * Fraction(seq[n]) + n ** 3 * Fraction(prev))


def aperySequences(n_max):
    """
    Classical Apery numbers from the recurrence, index 0 .. n_max
    Return:
        (a, b) lists of Fraction, a_0 = 0, a_1 = 6, b_0 = 1, b_1 = 5
    """
    a = [Fraction(0), Fraction(6)]
    b = [Fraction(1), Fraction(5)]
    for n in range(1, n_max):
        for u in (a, b):
            u.append((aperyV(n) * u[n] - n ** 3 * u[n - 1]) / (n + 1) ** 3)
    return a[:n_max + 1], b[:n_max + 1]


def _checkAlpha(alpha):
    alpha = Fraction(alpha)
    if alpha == 0:
        raise DomainError("the shifted recurrence needs alpha != 0")
    return alpha


def _U(alpha, n):
    return alpha ** 2 * (n + 1) ** 3 + alpha * aperyV(n) + n ** 3


def shiftedCoeffs(alpha, n):
    """
    P, Q, R of P c_(n+2) + Q c_(n+1) + R c_n = 0 for c_n = b_n + alpha b_(n-1)
    """
    alpha = _checkAlpha(alpha)
    U0, U1 = _U(alpha, n), _U(alpha, n + 1)
    P = alpha * (n + 2) ** 3 * U0
    Q = (n + 1) ** 3 * (U0 + alpha ** 2 * U1) - U0 * U1
    R = alpha * n ** 3 * U1
    return Fraction(P), Fraction(Q), Fraction(R)


def shiftedCoeffPolys(alpha):
    """
    P, Q, R as sympy polynomials in n
    """
    alpha = _checkAlpha(alpha)
    a = sympy.Rational(alpha.numerator, alpha.denominator)
    n = n_sym
    U0 = _U(a, n)
    U1 = _U(a, n + 1)
    P = a * (n + 2) ** 3 * U0
    Q = (n + 1) ** 3 * (U0 + a ** 2 * U1) - U0 * U1
    R = a * n ** 3 * U1
    return tuple(sympy.Poly(sympy.expand(e), n, domain='QQ')
                 for e in (P, Q, R))


def shiftedResidual(seq, alpha, n):
    if n < 0 or n + 2 >= len(seq):
        raise DomainError("recurrence index {:} out of range for {:} terms"
                          .format(n, len(seq)))
    P, Q, R = shiftedCoeffs(alpha, n)
    return P * seq[n + 2] + Q * seq[n + 1] + R * seq[n]


def shiftedSequence(b, alpha):
    """
    c_n = b_n + alpha b_(n-1), with b_(-1) = 0
    """
    alpha = Fraction(alpha)
    return [b[0]] + [b[n] + alpha * b[n - 1] for n in range(1, len(b))]


def picardFuchs():
    """
    Operator annihilating sum b_n t^n for the Apery numbers b_n
    """
    t = t_sym
    return OperatorCoeffs([-5 * t + t ** 2,
                           -27 * t + 3 * t ** 2,
                           -51 * t + 3 * t ** 2,
                           1 - 34 * t + t ** 2], t)


def transformOperator(alpha):
    """
    Operator annihilating (1 + alpha t) y when the Picard-Fuchs operator
    annihilates y; w = 1 + alpha t
    """
    alpha = Fraction(alpha)
    a = sympy.Rational(alpha.numerator, alpha.denominator)
    t = t_sym
    B0, B1, B2, B3 = [picardFuchs()[i].as_expr() for i in range(4)]
    w = 1 + a * t
    A3 = w ** 3 * B3
    A2 = w ** 2 * (-3 * a * t * B3 + w * B2)
    A1 = w * (-3 * a * t * (1 - a * t) * B3 - 2 * a * t * w * B2
              + w ** 2 * B1)
    A0 = (-a * t * (1 - 4 * a * t + a ** 2 * t ** 2) * B3
          - a * t * w * (1 - a * t) * B2
          - a * t * w ** 2 * B1
          + w ** 3 * B0)
    return OperatorCoeffs([A0, A1, A2, A3], t)


def applyOperator(op, s):
    """
    sum_i A_i(t) D^i s, kept only on the window order(s) - deg(op)
    """
    if s.var != 't':
        raise DomainError("operators act on t-series, got '{:}'".format(s.var))
    window = max(s.order - op.degree(), 0)
    out = QSeries([], window, 't')
    ds = s.truncate(window)
    for i in range(4):
        coeffs = op.coefficientList(i)
        if coeffs:
            out = out + QSeries(coeffs, window, 't') * ds
        ds = ds.theta()
    logger.debug("operator applied on window %d", window)
    return out
