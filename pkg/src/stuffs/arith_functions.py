from fractions import Fraction
from functools import lru_cache
import math

import sympy

from _errors import DomainError
from level_data import LevelData
import _param as param


def toFraction(r):
    """
    sympy Rational (or int) -> Fraction
    """
    r = sympy.Rational(r)
    return Fraction(int(r.p), int(r.q))


@lru_cache(maxsize=None)
def bernoulli(k, bound=param._BERNOULLI_BOUND):
    """
    Exact Bernoulli number B_k for even 0 <= k <= bound
    """
    if k < 0 or k % 2 or k > bound:
        raise DomainError(
            "bernoulli index must be even in [0, {:}], got {:}"
            .format(bound, k))
    return toFraction(sympy.bernoulli(k))


def sigma(n, m):
    """
    Divisor power sum sum_{d | n} d^m
    """
    if n < 1:
        raise DomainError("sigma needs n >= 1, got {:}".format(n))
    return int(sympy.divisor_sigma(n, m))


@lru_cache(maxsize=None)
def lcmUpto(n):
    """
    lcm(1, 2, ..., n), with lcmUpto(0) = lcmUpto(1) = 1
    """
    return math.lcm(*range(1, n + 1))


@lru_cache(maxsize=None)
def levelData(N):
    if N < 1:
        raise DomainError("level must be positive, got {:}".format(N))
    factors = sympy.factorint(N)
    return LevelData(N, sorted(sympy.divisors(N)),
                     all(e == 1 for e in factors.values()))


def parseRational(text):
    """
    Parse 'p/q', an integer or a decimal string into a Fraction
    """
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        raise DomainError("not a rational number: '{:}'".format(text))


def formatRational(r):
    return "{:}/{:}".format(r.numerator, r.denominator)
