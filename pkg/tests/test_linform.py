from fractions import Fraction

import pytest

from _errors import DomainError
from qseries import QSeries
from linear_form import LinearFormSeries
import family_functions as family
import linform_functions as linform
import recurrence_functions as rec
import reference_tables


def test_eichler():
    F = family.comboToSeries(family.solveF(6, 4), 6)
    f = linform.eichler(F, 4, 6)
    assert f[0] == 0
    assert f[1] == 6
    assert f[2] == F[2] / 8
    assert linform.eichler(QSeries([0, 0, 0]), 4, 3).isZero()
    with pytest.raises(DomainError):
        linform.eichler(QSeries([1, 1]), 4, 2)


def test_linear_form_q():
    lfs = linform.linearFormQ(QSeries([1, 0, 0]), QSeries([0, 1, 0]))
    assert lfs.A == QSeries([0, 1, 0])
    assert lfs.B == QSeries([1, 0, 0])
    assert lfs.coordinate == 'q'
    with pytest.raises(DomainError):
        linform.linearFormQ(QSeries([2, 0]), QSeries([0, 1]))
    with pytest.raises(DomainError):
        linform.linearFormQ(QSeries([1, 0]), QSeries([1, 1]))


def test_to_hauptmodul_identity():
    lfs = linform.linearFormQ(QSeries([1, 2, 3, 4]), QSeries([0, 1, 1, 1]))
    out = linform.toHauptmodul(lfs, QSeries.monomial(1, 4))
    assert out.coordinate == 't'
    assert out.A == lfs.A.retag('t')
    assert out.B == lfs.B.retag('t')
    with pytest.raises(DomainError):
        linform.toHauptmodul(out, QSeries.monomial(1, 4))
    with pytest.raises(DomainError):
        LinearFormSeries(lfs.A, lfs.B, 't', 6, 0)


def test_apery_recovery(apery_rows):
    b = [r.b for r in apery_rows]
    a = [r.a for r in apery_rows]
    assert b[:5] == [1, 5, 73, 1445, 33001]
    assert a[0] == 0
    assert a[1] == 6
    assert a[2] == Fraction(351, 4)
    assert apery_rows[2].ratio_reduced == Fraction(351, 292)
    assert apery_rows[5].ratio_reduced == \
        Fraction(35441662103, 29484180000)
    for n in range(1, 101):
        assert rec.aperyResidual(b, n) == 0
        assert rec.aperyResidual(a, n) == 0


def test_apery_matches_classical(apery_rows):
    a, b = rec.aperySequences(len(apery_rows) - 1)
    assert [r.a for r in apery_rows] == a
    assert [r.b for r in apery_rows] == b


@pytest.mark.parametrize("alpha", sorted(reference_tables.APPROXIMANTS))
def test_published_approximants(alpha):
    rows = linform.approximants(6, Fraction(alpha), 6)
    got = tuple(rows[n].ratio_reduced for n in (2, 3, 4, 5))
    assert got == tuple(Fraction(r)
                        for r in reference_tables.APPROXIMANTS[alpha])


def test_alpha_shift_identity(apery_rows):
    for alpha in ("-100", "-5", "-2", "1", "2", "5", "100", "1/2"):
        rows = linform.approximants(6, Fraction(alpha), 101)
        res = linform.alphaShiftResiduals(apery_rows, rows, Fraction(alpha))
        assert len(res) == 100
        assert all(da == 0 and db == 0 for _, da, db in res), alpha


def test_vanishing_b1():
    rows = linform.approximants(6, -5, 4)
    assert rows[1].b == 0
    assert rows[1].ratio_reduced is None
    assert rows[3].ratio_reduced == Fraction(2921, 2430)


def test_integrality(apery_rows):
    report = linform.integralityReport(apery_rows[:61], 0)
    assert report["passed"]
    assert report["s"] == 1
    assert all(B.denominator == 1 for B in report["B"])

    half = linform.approximants(6, Fraction(1, 2), 21)
    report = linform.integralityReport(half, Fraction(1, 2))
    assert report["passed"]
    assert report["s"] == 2
    assert report["B"][1] == 2 * 5 + 1
    # without the factor s the half-integral entries show up
    assert any(r.b.denominator != 1 for r in half)


def test_integrality_zero_row(apery_rows):
    report = linform.integralityReport(apery_rows[:1], 0)
    assert report["passed"]
    assert report["first_violation"] is None


def test_gauge_identities():
    for name, series in linform.gaugeIdentityResiduals(50).items():
        assert series.isZero(), name


@pytest.mark.parametrize("N", (10, 14, 15, 21, 26, 35, 39))
def test_other_levels_finite(N):
    for alpha in (0, 1):
        rows = linform.approximants(N, alpha, 6)
        assert rows[0].a == 0
        assert rows[0].b == 1
        assert rows[5].ratio_reduced is not None


def test_low_order_decimals():
    # a_5 / b_5 for levels 10 and 14 as published with the n = 199 table
    for N, value in ((10, 1.2020522755), (14, 1.2020634126)):
        ratio = linform.approximants(N, 0, 6)[5].ratio_reduced
        assert float(ratio) == pytest.approx(value, abs=1e-9)


def test_order_checked():
    with pytest.raises(DomainError):
        linform.approximants(6, 0, 1)
    with pytest.raises(DomainError):
        linform.approximants(7, 0, 10)


@pytest.mark.parametrize("N", (10, 14, 15, 21, 35, 39))
def test_n199_members_low_order(N):
    # a_5 / b_5 of the alpha = 1 rows published with the n = 199 table
    published = {(r[0], r[1]): r[2] for r in reference_tables.N199}
    c = Fraction(reference_tables.N199_MEMBERS[(N, "1")])
    assert c == Fraction(1, N * N)
    ratio = linform.approximants(N, 1, 6, c)[5].ratio_reduced
    assert float(ratio) == pytest.approx(float(published[(N, "1")]),
                                         abs=1e-9)


def test_n199_member_level6():
    # E1_6 itself is the alpha = -5 member of E_b (1 + alpha t_6)
    c = Fraction(reference_tables.N199_MEMBERS[(6, "0")])
    plain = linform.approximants(6, 0, 12, c)
    gauge = linform.approximants(6, -5, 12)
    assert [r.b for r in plain] == [r.b for r in gauge]
    assert [r.a for r in plain] == [r.a for r in gauge]
    assert Fraction(reference_tables.N199_MEMBERS[(6, "1")]) == \
        linform.familyCoefficient(6, 1)
