from fractions import Fraction

import pytest

from _errors import DomainError
from qseries import QSeries
from series_functions import PowerTable, compose, revert
import modform_functions as modform


def q(*coeffs, order=None, var='q'):
    return QSeries(list(coeffs), order, var)


def test_ring_products():
    assert q(1, 1, order=3) * q(1, -1, order=3) == q(1, 0, -1)
    assert q(1, 2, order=3) ** 2 == q(1, 4, 4)
    E2 = modform.eisenstein(2, 1, 3)
    assert E2 * E2 == q(1, -48, 432)


def test_ring_axioms():
    a = q(Fraction(1, 2), 3, -1, 7)
    b = q(2, 0, Fraction(5, 3), 1)
    c = q(-1, 4, 0, Fraction(1, 7))
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == q(0, 0, 0, 0)
    assert 1 + a == a + 1


def test_order_is_minimum():
    assert (q(1, 1, 1) + q(1, 1)).order == 2
    assert (q(1, 1, 1) * q(1, 1)).order == 2


def test_invert():
    assert q(1, -1, order=5).invert() == q(1, 1, 1, 1, 1)
    assert q(1, -5, order=3).invert() == q(1, 5, 25)
    a = q(3, 1, 4, 1, 5, 9)
    assert a * a.invert() == QSeries.monomial(0, 6)
    with pytest.raises(DomainError):
        q(0, 1).invert()


def test_variable_mismatch():
    with pytest.raises(DomainError):
        q(1, 1) + q(1, 1, var='t')


def test_compose():
    outer = q(1, 1, 0, order=3)
    assert compose(outer, q(0, 0, 1)) == q(1, 0, 1)
    with pytest.raises(DomainError):
        compose(outer, q(1, 1, 0))


def test_revert():
    assert revert(q(0, 1, 0, 0)) == q(0, 1, 0, 0, var='t')
    # Catalan numbers
    assert revert(q(0, 1, -1, 0, 0)) == q(0, 1, 1, 2, 5, var='t')
    with pytest.raises(DomainError):
        revert(q(0, 0, 1))


@pytest.mark.parametrize("N, M", [(6, 50), (10, 30)])
def test_revert_round_trip(N, M):
    t = modform.hauptmodulSeries(N, M)
    r = revert(t)
    assert compose(r, t) == QSeries.monomial(1, M)
    assert compose(t.retag('t'), r.retag('q')) == QSeries.monomial(1, M)


def test_power_table_expand():
    t = modform.hauptmodulSeries(6, 20)
    table = PowerTable(t)
    s = q(*range(1, 21))
    coeffs = table.expand(s)
    assert coeffs.var == 't'
    assert table.compose(coeffs.retag('q')) == s
    assert table.power(2) == t * t


def test_rescale_and_shift():
    assert q(1, 1, order=3).rescale(2) == q(1, 0, 1)
    assert modform.eisenstein(4, 1, 5).rescale(2) == q(1, 0, 240, 0, 2160)
    a = q(1, 2, 3)
    assert a.rescale(1) == a
    assert a.shift(1) == q(0, 1, 2)
    assert a.theta() == q(0, 2, 6)


def test_serialisation():
    a = q(Fraction(-1, 3), 0, 5, var='t')
    d = a.toDict()
    assert d == {"var": "t", "order": 3, "coeffs": ["-1/3", "0/1", "5/1"]}
    assert QSeries.fromDict(d) == a
