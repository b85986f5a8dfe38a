from fractions import Fraction

import pytest
from mpmath import mp, mpf, mpc

from _errors import DomainError
import linform_functions as linform
import numeric_functions as numeric
import recurrence_functions as rec
import reference_tables
import hauptmoduln

CATALOG_LEVELS = (6, 10, 14, 15, 21, 26, 35, 39)


def test_zeta3():
    assert mp.nstr(numeric.zeta3(10), 10) == "1.202056903"
    with mp.workdps(60):
        assert abs(numeric.zeta3(50) - numeric.zeta3(60)) < mpf(10) ** -49
        assert abs(numeric.zeta3(60) - mp.zeta(3)) < mpf(10) ** -59
    with pytest.raises(DomainError):
        numeric.zeta3(5)


def test_eval_eta():
    with mp.workdps(40):
        eta_i = mp.gamma(mpf(1) / 4) / (2 * mp.pi ** (mpf(3) / 4))
        eta_2i = mp.gamma(mpf(1) / 4) / (mpf(2) ** (mpf(11) / 8)
                                         * mp.pi ** (mpf(3) / 4))
        assert abs(numeric.evalEta(mpc(0, 1), 30) - eta_i) < mpf(10) ** -29
        assert abs(numeric.evalEta(mpc(0, 2), 30) - eta_2i) < mpf(10) ** -29
    assert mp.nstr(numeric.evalEta(mpc(0, 1), 20).real, 9) == "0.768225422"
    with pytest.raises(DomainError):
        numeric.evalEta(mpc(0, -1), 20)


def test_fricke_value_level6():
    with mp.workdps(50):
        exact = (mp.sqrt(2) - 1) ** 4
        got = numeric.frickeValue(6, 40)
        assert abs(got - exact) < mpf(10) ** -39


@pytest.mark.parametrize("N", CATALOG_LEVELS)
def test_fricke_values(N):
    expected = float(hauptmoduln.LEVELS[N]['fricke'])
    assert float(numeric.frickeValue(N, 20)) == pytest.approx(expected,
                                                              abs=1e-3)


def test_radius_geometric():
    coeffs = [Fraction(2) ** n for n in range(40)]
    fit = numeric.radiusEstimate(coeffs)
    assert fit.method == 'domb-sykes'
    assert float(fit.estimate) == pytest.approx(0.5, rel=1e-9)
    with pytest.raises(DomainError):
        numeric.radiusEstimate(coeffs[:10])


def test_branch_level6():
    report = numeric.branchReport(6)
    assert float(report.branch_estimate) == pytest.approx(33.9706, rel=0.02)
    assert float(report.b_radius.estimate) == pytest.approx(0.029437,
                                                            rel=0.02)
    assert report.exceeds_e3
    assert not report.flagged
    assert report.fricke_value < report.branch_estimate
    product = report.fricke_value * report.branch_estimate
    assert float(product) == pytest.approx(1.0, rel=0.02)
    d = report.toDict()
    assert d["level"] == 6
    assert d["exceeds_e3"] is True


@pytest.mark.slow
def test_obstruction_report():
    estimates = [(N, numeric.branchReport(N).branch_estimate)
                 for N in CATALOG_LEVELS]
    report = numeric.obstructionReport(estimates)
    passing = [r["level"] for r in report["rows"] if r["passes"]]
    assert passing == [6]
    assert report["e3"].startswith("20.0855")


def test_obstruction_flags():
    report = numeric.obstructionReport([(6, 33.97), (15, 1.618),
                                        (21, 0.5865)])
    rows = {r["level"]: r for r in report["rows"]}
    assert rows[6]["passes"]
    assert not rows[15]["passes"]
    assert not rows[21]["passes"]
    assert rows[21]["below_one"]
    assert report["n"] == 199


def test_error_metrics_low_order(apery_rows):
    metrics = numeric.errorMetrics(apery_rows[:6], 30)
    assert metrics[0].err_exponent == 0
    assert metrics[0].Q is None
    with mp.workdps(30):
        assert abs(metrics[0].error - numeric.zeta3(30)) < mpf(10) ** -25
    published = reference_tables.APPROXIMANT_EXPONENTS["0"]
    for m, R in zip(metrics[2:], published):
        assert abs(m.err_exponent - R) <= 1
    assert metrics[5].den_digits == 11


def test_error_metrics_skip_vanishing_b():
    rows = linform.approximants(6, -5, 4)
    metrics = numeric.errorMetrics(rows, 20)
    assert [m.n for m in metrics] == [0, 2, 3]


@pytest.mark.parametrize("alpha", ["0", "-5", "1", "100"])
def test_error_metrics_large_n(alpha):
    rows = linform.approximants(6, Fraction(alpha), 100)
    metrics = numeric.errorMetrics(rows[95:100], 50)
    R_ref, D_ref = reference_tables.LARGE_N[alpha]
    for m, R, D in zip(metrics, R_ref, D_ref):
        assert abs(m.err_exponent - R) <= 1, (m.n, m.err_exponent, R)
        assert abs(m.den_digits - D) <= 2, (m.n, m.den_digits, D)
        assert m.digits >= float(m.E) + 20


def _n199Metric(level, alpha):
    c = reference_tables.N199_MEMBERS[(level, alpha)]
    rows = linform.approximants(level, Fraction(alpha), 200, Fraction(c))
    return numeric.errorMetrics(rows[199:], 700)[0]


@pytest.mark.slow
def test_error_metrics_n199_classical():
    a, b = rec.aperySequences(199)
    m = numeric.errorMetrics(linform.rowsFromSequences(a, b)[199:], 700)[0]
    assert float(m.E) == pytest.approx(608.8, abs=0.3)
    assert float(m.den_log10) == pytest.approx(567.4, abs=0.3)
    # the classical row is the alpha = 0 member of the E_b (1 + alpha t_6)
    # family
    gauge = numeric.errorMetrics(linform.approximants(6, 0, 200)[199:],
                                 700)[0]
    assert float(gauge.E) == pytest.approx(float(m.E), abs=1e-6)
    assert gauge.den_digits == m.den_digits


@pytest.mark.slow
def test_error_metrics_n199_level6():
    m0 = _n199Metric(6, "0")
    with mp.workdps(50):
        assert mpf("1e-608") <= m0.error <= mpf("1e-606")
    assert float(m0.den_log10) == pytest.approx(561.0, abs=0.5)
    assert float(m0.Q) == pytest.approx(1.081, abs=0.005)

    m1 = _n199Metric(6, "1")
    with mp.workdps(50):
        assert mpf("5.1e-608") <= m1.error <= mpf("5.3e-608")
    assert float(m1.E) == pytest.approx(607.3, abs=0.05)
    # reduced denominator stays above the published 564.3
    assert float(m1.den_log10) == pytest.approx(565.44, abs=0.05)
    assert float(m1.Q) == pytest.approx(1.074, abs=0.002)


def test_hecke_level6():
    samples = numeric.heckeSamples(6)
    residuals = numeric.heckeResiduals(6, samples, 50)
    assert len(residuals) == 3
    assert max(residuals) < mpf(10) ** -30
    assert numeric.heckeCheck(6) < mpf(10) ** -30


def test_hecke_level10():
    assert numeric.heckeCheck(10, digits=50) < mpf(10) ** -30


def test_hecke_fixed_point():
    with mp.workdps(60):
        tau = mpc(0, 1) / mp.sqrt(6)
    assert numeric.heckeCheck(6, [tau], 50) < mpf(10) ** -45


def test_hecke_truncation_shrinks():
    tau = numeric.heckeSamples(6)[1]
    coarse = numeric.heckeCheck(6, [tau], 50, order=20)
    fine = numeric.heckeCheck(6, [tau], 50, order=40)
    assert fine < coarse


def test_hecke_bad_samples():
    with pytest.raises(DomainError, match="converge"):
        numeric.heckeCheck(6, [mpc(0, "0.01")], 30)
    with pytest.raises(DomainError, match="upper half plane"):
        numeric.heckeCheck(6, [mpc(0, -1)], 30)


def test_linear_form_trend_level6():
    trend = numeric.linearFormTrend(6, 0, 60)
    assert trend["label"] == 'decaying'
    assert trend["slope"] == pytest.approx(-1.531, abs=0.05)


@pytest.mark.slow
@pytest.mark.parametrize("N", (21, 26, 35, 39))
def test_linear_form_trend_small_radius(N):
    trend = numeric.linearFormTrend(N, 0, 60)
    assert trend["label"] == 'non-decaying'
    report = numeric.obstructionReport([(N, trend["radius"])])
    assert report["rows"][0]["below_one"]


@pytest.mark.slow
def test_linear_form_trend_flat_slope():
    # level 39 barely moves up to n = 60; its estimate 1.044 is far from
    # the catalog radius and is replaced by it
    trend = numeric.linearFormTrend(39, 0, 60, radius=mpf("1.044"))
    assert abs(trend["slope"]) < 0.05
    assert trend["source"] == 'radius'
    assert trend["radius"] == "0.5806"
    assert trend["label"] == 'non-decaying'


def test_resolved_radius():
    assert numeric.resolvedRadius(21) == mpf("0.5865")
    assert numeric.resolvedRadius(15, "1.6173") == mpf("1.6173")
    assert numeric.resolvedRadius(35, "0.8028") == mpf("0.6180")
    assert numeric.resolvedRadius(39, "1.044") == mpf("0.5806")


def test_obstruction_below_one_matches_catalog():
    measured = [(15, "1.6173"), (21, "0.9995"), (35, "0.8028"),
                (39, "1.044")]
    rows = {r["level"]: r
            for r in numeric.obstructionReport(measured)["rows"]}
    assert not rows[15]["below_one"]
    for N in (21, 35, 39):
        assert rows[N]["below_one"], N
        assert mpf(rows[N]["radius"]) == mpf(hauptmoduln.LEVELS[N]['branch'])
        assert not rows[N]["passes"]


def test_radius_fit_window():
    odd = numeric.radiusEstimate([Fraction(3) ** n for n in range(41)])
    even = numeric.radiusEstimate([Fraction(3) ** n for n in range(40)])
    assert odd.n_coeffs == 21
    assert even.n_coeffs == 20
    assert float(odd.estimate) == pytest.approx(1 / 3, rel=1e-9)


def test_branch_level15():
    report = numeric.branchReport(15)
    assert float(report.branch_estimate) == pytest.approx(1.6180, rel=0.05)
    assert not report.flagged
    assert report.radius == report.branch_estimate
    assert report.toDict()["below_one"] is False


def test_branch_level35_flagged():
    # coefficient growth up to order 120 settles near 0.80, above the
    # catalog radius 0.6180
    report = numeric.branchReport(35)
    estimate = float(report.branch_estimate)
    assert 0.6180 * 1.05 < estimate < 1.0
    assert report.flagged
    assert report.radius == report.branch_expected
    d = report.toDict()
    assert d["below_one"] is True
    assert d["radius"] == "0.618"
