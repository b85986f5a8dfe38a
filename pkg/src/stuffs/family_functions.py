from fractions import Fraction
from functools import lru_cache
import logging

import sympy

from _errors import DomainError, SolverError
from qseries import QSeries
from eisenstein_combo import EisensteinCombo, EFamilyBasis
import arith_functions as arith
import modform_functions as modform

logger = logging.getLogger(__name__)


def _checkFourDivisorLevel(N, k):
    ld = arith.levelData(N)
    if not ld.squarefree or ld.divisor_count != k:
        raise DomainError(
            "level {:} must be squarefree with exactly {:} divisors "
            "(divisors {:})".format(N, k, list(ld.divisors)))
    return ld


def _solve(rows, rhs, what):
    A = sympy.Matrix(rows)
    b = sympy.Matrix(rhs)
    if A.det() == 0:
        raise SolverError("{:}: linear system is singular".format(what))
    return [arith.toFraction(x) for x in A.LUsolve(b)]


@lru_cache(maxsize=None)
def solveF(N, k=4):
    """
    Weight k Eisenstein combination F = sum alpha_d E_k(d tau) with
    F(i oo) = 0, L(F, k-1) = zeta(k-1) and Fricke sign -1
    Args:
        N: squarefree level with exactly k divisors
        k: weight, k = 0 mod 4
    Return:
        EisensteinCombo of weight k
    """
    if k < 4 or k % 4:
        raise DomainError("weight must be a positive multiple of 4, got {:}"
                          .format(k))
    ld = _checkFourDivisorLevel(N, k)
    divs = list(ld.divisors)
    idx = {d: i for i, d in enumerate(divs)}
    R = sympy.Rational
    rows, rhs = [], []

    # constant term
    rows.append([R(1)] * k)
    rhs.append(R(0))
    # L(F, k-1) = zeta(k-1)
    rows.append([R(1, d ** (k - 1)) for d in divs])
    rhs.append(R(arith.bernoulli(k).numerator,
                 arith.bernoulli(k).denominator) / k)
    # Fricke pairs
    for d, e in ld.pairs():
        row = [R(0)] * k
        row[idx[e]] = R(1)
        row[idx[d]] = R(N ** (k // 2), d ** k)
        rows.append(row)
        rhs.append(R(0))
    # vanishing L-values inside the critical strip
    for ell in range((k + 2) // 2, k - 1):
        rows.append([R(1, d ** ell) for d in divs])
        rhs.append(R(0))

    alpha = _solve(rows, rhs, "F system for level {:}".format(N))
    logger.debug("F_%d solved: %s", N, alpha)
    return EisensteinCombo(k, N, dict(zip(divs, alpha)), divs)


def _weightTwoCombo(N, beta1, total):
    ld = _checkFourDivisorLevel(N, 4)
    divs = list(ld.divisors)
    idx = {d: i for i, d in enumerate(divs)}
    R = sympy.Rational
    rows, rhs = [], []
    for d, e in ld.pairs():
        row = [R(0)] * 4
        row[idx[e]] = R(1)
        row[idx[d]] = R(N, d * d)
        rows.append(row)
        rhs.append(R(0))
    rows.append([R(1)] * 4)
    rhs.append(R(total))
    pin = [R(0)] * 4
    pin[0] = R(1)
    rows.append(pin)
    rhs.append(R(beta1))
    beta = _solve(rows, rhs, "E system for level {:}".format(N))
    return EisensteinCombo(2, N, dict(zip(divs, beta)), divs)


@lru_cache(maxsize=None)
def solveEBasis(N):
    """
    Basis (E0, E1) of the weight two affine family on level N
    """
    basis = EFamilyBasis(E0=_weightTwoCombo(N, 1, 0),
                         E1=_weightTwoCombo(N, 0, 1))
    logger.debug("E basis of level %d: E0 %s, E1 %s", N,
                 basis.E0.vector(), basis.E1.vector())
    return basis


def closedFormEBasis(N):
    """
    Closed form of the basis for divisors 1 < d < N/d < N:
    E1: beta_d = d^2 / (d^2 - N);  E0: beta_d = (N - 1) d^2 / (d^2 - N),
    beta_N = -N; in both beta_{N/d} = -(N / d^2) beta_d
    """
    ld = _checkFourDivisorLevel(N, 4)
    d = ld.divisors[1]
    e = N // d
    b1 = Fraction(d * d, d * d - N)
    b0 = Fraction((N - 1) * d * d, d * d - N)
    E1 = {1: 0, d: b1, e: -Fraction(N, d * d) * b1, N: 0}
    E0 = {1: 1, d: b0, e: -Fraction(N, d * d) * b0, N: -N}
    return EFamilyBasis(EisensteinCombo(2, N, E0, ld.divisors),
                        EisensteinCombo(2, N, E1, ld.divisors))


def checkWeight2Modularity(combo):
    """
    A weight two combination sum beta_d E_2(d tau) is modular on
    Gamma_0(N) iff sum beta_d / d = 0
    Return:
        dict with 'modular', 'defect' (sum beta_d / d) and 'pairing'
        (beta_{N/d} + (N / d^2) beta_d for each pair d^2 < N)
    """
    if combo.weight != 2:
        raise DomainError("modularity check needs weight 2, got {:}"
                          .format(combo.weight))
    N = combo.level
    defect = sum((c / d for d, c in combo.coeffs.items()), Fraction(0))
    pairing = {}
    for d, e in arith.levelData(N).pairs():
        pairing[d] = combo.coeffs[e] + Fraction(N, d * d) * combo.coeffs[d]
    return {"modular": defect == 0, "defect": defect, "pairing": pairing}


def comboToSeries(combo, M):
    """
    sum_d c_d E_k(d tau) truncated at M
    """
    out = QSeries([], M, 'q')
    for d, c in combo.coeffs.items():
        if c:
            out = out + c * modform.eisenstein(combo.weight, d, M)
    return out


def familyMember(N, c):
    """
    E1 + c E0 at level N
    """
    return solveEBasis(N).member(Fraction(c))
