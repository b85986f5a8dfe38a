from fractions import Fraction
from functools import lru_cache
import logging

from _errors import DomainError
from qseries import QSeries
from linear_form import LinearFormSeries, ApproxRow
from series_functions import PowerTable
import arith_functions as arith
import modform_functions as modform
import family_functions as family
import _param as param

logger = logging.getLogger(__name__)


def eichler(F_series, k, M):
    """
    Eichler integral f = sum (a_n / n^(k-1)) q^n of F = sum a_n q^n
    Args:
        F_series: QSeries with zero constant term
        k: weight of F
        M: truncation order
    """
    if F_series.order and F_series[0] != 0:
        raise DomainError("Eichler integral needs F(i oo) = 0, got {:}"
                          .format(F_series[0]))
    m = min(M, F_series.order)
    return QSeries([0] + [F_series[n] / n ** (k - 1) for n in range(1, m)],
                   m, F_series.var)


def linearFormQ(E_series, f_series, level=None, alpha=0):
    """
    E (f - zeta(3)) = A - zeta(3) B with A = E f and B = E
    """
    if E_series.order and E_series[0] != 1:
        raise DomainError("E must be normalised by E(i oo) = 1, got {:}"
                          .format(E_series[0]))
    if f_series.order and f_series[0] != 0:
        raise DomainError("f must vanish at i oo, got {:}"
                          .format(f_series[0]))
    return LinearFormSeries(E_series * f_series, E_series, 'q', level, alpha)


@lru_cache(maxsize=8)
def hauptmodulTable(N, order):
    """
    Powers of t_N in q, shared by every pipeline of the level
    """
    logger.info("building t_%d power table to order %d", N, order)
    return PowerTable(modform.hauptmodulSeries(N, order))


def toHauptmodul(lfs, t_series, table=None):
    """
    Rewrite a q-coordinate linear form in powers of t = t_series(q)
    Equivalent to composing A and B with the reversion of t_series;
    the triangular expansion against the powers of t avoids building
    q(t) with its fast growing coefficients.
    Args:
        lfs: LinearFormSeries in q
        t_series: valuation one, leading coefficient one
        table: optional PowerTable of t_series
    Return:
        LinearFormSeries in t
    """
    if lfs.coordinate != 'q':
        raise DomainError("expected a q-coordinate linear form, got '{:}'"
                          .format(lfs.coordinate))
    if t_series.valuation() != 1 or t_series[1] != 1:
        raise DomainError("Hauptmodul series must be q + O(q^2)")
    if table is None:
        table = PowerTable(t_series)
    A = table.expand(lfs.A, 't')
    B = table.expand(lfs.B, 't')
    return LinearFormSeries(A, B, 't', lfs.level, lfs.alpha)


def familyCoefficient(N, alpha):
    return modform.hauptmodul(N).familyCoefficient(Fraction(alpha))


@lru_cache(maxsize=32)
def linearFormT(N, alpha, M, c=None):
    """
    Full pipeline for level N and family parameter alpha, order M in t
    Args:
        c: coefficient of E0 in the member E1 + c E0; by default the
           catalog gauge applied to alpha
    """
    alpha = Fraction(alpha)
    if c is None:
        c = familyCoefficient(N, alpha)
    if M < param._MIN_ORDER:
        raise DomainError("order must be >= {:}, got {:}"
                          .format(param._MIN_ORDER, M))
    Mq = M + param._GUARD_ORDER
    F = family.comboToSeries(family.solveF(N, 4), Mq)
    f = eichler(F, 4, Mq)
    E = family.comboToSeries(
        family.familyMember(N, Fraction(c)), Mq)
    lfq = linearFormQ(E, f, N, alpha)
    logger.debug("level %d alpha %s: q-side built to order %d", N, alpha, Mq)
    lft = toHauptmodul(lfq, modform.hauptmodulSeries(N, Mq),
                       hauptmodulTable(N, Mq))
    return LinearFormSeries(lft.A.truncate(M), lft.B.truncate(M), 't',
                            N, alpha)


def rowsFromSequences(a, b):
    return [ApproxRow(n, a[n], b[n], arith.lcmUpto(n) ** 3)
            for n in range(min(len(a), len(b)))]


def approximants(N, alpha, M, c=None):
    """
    Rows n = 0 .. M-1 of the approximants a_n / b_n of zeta(3)
    """
    if c is not None:
        c = Fraction(c)
    lft = linearFormT(N, Fraction(alpha), M, c)
    return rowsFromSequences(lft.A.coeffs, lft.B.coeffs)


def alphaShiftResiduals(rows0, rows, alpha):
    """
    a_n^alpha - (a_n + alpha a_(n-1)) and the same for b, n >= 1
    Args:
        rows0: rows of the alpha = 0 member
        rows: rows of the alpha member
    """
    alpha = Fraction(alpha)
    out = []
    for n in range(1, min(len(rows0), len(rows))):
        da = rows[n].a - (rows0[n].a + alpha * rows0[n - 1].a)
        db = rows[n].b - (rows0[n].b + alpha * rows0[n - 1].b)
        out.append((n, da, db))
    return out


def integralityReport(rows, alpha):
    """
    For alpha = r/s: s b_n^alpha in Z and lcm(1..n)^3 s a_n^alpha in Z
    Return:
        dict with 'passed', 's', 'first_violation' (n or None) and the
        scaled sequences 'A' (s a_n) and 'B' (s b_n)
    """
    alpha = Fraction(alpha)
    s = alpha.denominator
    l_A, l_B = [], []
    first = None
    for row in rows:
        A, B = s * row.a, s * row.b
        l_A.append(A)
        l_B.append(B)
        ok = B.denominator == 1 and (s * row.scaled_a).denominator == 1
        if not ok and first is None:
            first = row.n
    return {"passed": first is None, "s": s, "first_violation": first,
            "A": l_A, "B": l_B}


def gaugeIdentityResiduals(M):
    """
    Level six identities between the Beukers form, t_6 and the basis:
      E_b t_6 + E0 / 24,  E_b (1 - 5 t_6) - E1,
      -E0 / (24 E1) - t_6 / (1 - 5 t_6)
    all of which vanish identically
    """
    Eb = modform.beukersForm(M)
    t6 = modform.hauptmodulSeries(6, M)
    basis = family.solveEBasis(6)
    E0 = family.comboToSeries(basis.E0, M)
    E1 = family.comboToSeries(basis.E1, M)
    one = QSeries.monomial(0, M)
    return {
        "Eb*t6 + E0/24": Eb * t6 + E0 * Fraction(1, 24),
        "Eb*(1-5t6) - E1": Eb * (one - 5 * t6) - E1,
        "-E0/(24 E1) - t6/(1-5t6)":
            (-E0 * Fraction(1, 24)) / E1 - t6 / (one - 5 * t6),
    }
