from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
import hashlib
import json
import logging
import multiprocessing
import os

import mpmath
import numpy
import scipy
import sympy
from mpmath import mp, mpf

from qseries import QSeries
import arith_functions as arith
import cache_functions as cache
import family_functions as family
import linform_functions as linform
import modform_functions as modform
import numeric_functions as numeric
import recurrence_functions as rec
import table_functions as table
import hauptmoduln
import reference_tables
import _param as param

logger = logging.getLogger(__name__)

EXPORT_ARTIFACTS = ('f_form', 'e_family', 'hauptmodul', 'linear_form',
                    'approx', 'branch')


""" Payload builders, module level so worker processes can run them """


def _fmt(r):
    return arith.formatRational(Fraction(r))


def fFormPayload(N, M):
    combo = family.solveF(N, 4)
    series = family.comboToSeries(combo, M)
    return {"level": N, "order": M, "combo": combo.toDict(),
            "series": series.toDict(),
            "vanishes_at_infinity": series[0] == 0}


def eFamilyPayload(N, alphas, M):
    basis = family.solveEBasis(N)
    closed = family.closedFormEBasis(N)
    modularity = {}
    for name, combo in (("E0", basis.E0), ("E1", basis.E1)):
        chk = family.checkWeight2Modularity(combo)
        modularity[name] = {
            "modular": chk["modular"], "defect": _fmt(chk["defect"]),
            "pairing": {str(d): _fmt(v) for d, v in chk["pairing"].items()}}
    members = []
    for alpha in alphas:
        c = linform.familyCoefficient(N, alpha)
        member = family.familyMember(N, c)
        members.append({"alpha": table.alphaKey(alpha), "c": _fmt(c),
                         "combo": member.toDict(),
                         "series": family.comboToSeries(member, M).toDict()})
    return {"level": N, "order": M, "basis": basis.toDict(),
            "closed_form_agrees": (closed.E0 == basis.E0
                                   and closed.E1 == basis.E1),
            "modularity": modularity, "members": members}


def hauptmodulPayload(N, M):
    entry = modform.hauptmodul(N)
    passed, got = modform.goldenCheck(N)
    return {"level": N, "order": M,
            "eta_quotient": entry.eta_quotient.toDict(),
            "series": modform.hauptmodulSeries(N, M).toDict(),
            "golden": {"passed": passed, "got": list(got),
                       "expected": list(entry.expected_leading)},
            "fricke_expected": entry.fricke_expected,
            "branch_expected": entry.branch_expected}


def linearFormPayload(N, alpha, M):
    return linform.linearFormT(N, Fraction(alpha), M).toDict()


def approxPayload(N, alpha, M):
    rows = linform.approximants(N, Fraction(alpha), M)
    return {"level": N, "alpha": table.alphaKey(alpha), "order": M,
            "rows": [r.toDict() for r in rows]}


def _ratioDecimal(row):
    if row.ratio_reduced is None:
        return None
    with mp.workdps(30):
        return mp.nstr(numeric.toMpf(row.ratio_reduced), 11)


def _metricsFromRows(rows, ns, digits):
    picked = [rows[n] for n in ns]
    metrics = numeric.errorMetrics(picked, digits)
    return {"digits": digits, "ns": list(ns),
            "rows": [m.toDict() for m in metrics],
            "ratio5": _ratioDecimal(rows[5]) if len(rows) > 5 else None}


def metricsPayload(N, alpha, ns, digits, c=None):
    M = max(max(ns) + 1, param._MIN_ORDER)
    rows = linform.approximants(N, Fraction(alpha), M, c)
    out = _metricsFromRows(rows, ns, digits)
    out.update({"level": N, "alpha": table.alphaKey(alpha)})
    if c is not None:
        out["c"] = _fmt(c)
    return out


def classicalPayload(ns, digits):
    a, b = rec.aperySequences(max(ns))
    out = _metricsFromRows(linform.rowsFromSequences(a, b), ns, digits)
    out.update({"level": None, "alpha": None})
    return out


def branchPayload(N, digits):
    return numeric.branchReport(N, param._BRANCH_ORDER, digits).toDict()


def heckePayload(N, digits):
    samples = numeric.heckeSamples(N)
    residuals = numeric.heckeResiduals(N, samples, digits)
    worst = max(residuals)
    tol = mpf(10) ** (-(digits - param._HECKE_TOL_SLACK))
    return {"level": N, "digits": digits,
            "samples": [mp.nstr(t, 12) for t in samples],
            "residuals": [mp.nstr(r, 5) for r in residuals],
            "max_residual": mp.nstr(worst, 5),
            "tolerance": mp.nstr(tol, 3),
            "passed": bool(worst < tol)}


_BUILDERS = {
    'f_form': fFormPayload,
    'e_family': eFamilyPayload,
    'hauptmodul': hauptmodulPayload,
    'linear_form': linearFormPayload,
    'approx': approxPayload,
    'metrics': metricsPayload,
    'classical': classicalPayload,
    'branch': branchPayload,
    'hecke': heckePayload,
}


def runTask(task):
    """
    task = (kind, key, args, cache_dir, verify)
    """
    kind, key, args, cache_dir, verify = task
    return cache.cached(cache_dir, key, lambda: _BUILDERS[kind](*args),
                        verify)


def _executor(jobs):
    try:
        ctx = multiprocessing.get_context("fork")
    except ValueError:
        ctx = None
    return ProcessPoolExecutor(max_workers=jobs, mp_context=ctx)


def _rowsFromPayload(payload):
    a = [Fraction(r["a"]) for r in payload["rows"]]
    b = [Fraction(r["b"]) for r in payload["rows"]]
    return linform.rowsFromSequences(a, b)


class Core(object):
    """
        Interface between the command line and the algorithms
        Args:
            config: RunConfig
    """

    def __init__(self, config):
        self._config = config
        self._l_check = []

    """ Run functions """
    def run(self):
        """
        Return:
            (ok, result dict); ok is False when a check failed
        """
        cmd = self._config.command.replace('-', '_')
        logger.debug("running %s", cmd)
        return getattr(self, '_cmd_' + cmd)()

    def render(self, result):
        return table.renderResult(result, self._config.fmt)

    """ Task plumbing """
    def _task(self, kind, key, *args):
        return (kind, key, args, self._config.cache_dir,
                self._config.verify_cache)

    def _map(self, tasks):
        if self._config.jobs > 1 and len(tasks) > 1:
            logger.info("running %d tasks on %d workers", len(tasks),
                        self._config.jobs)
            with _executor(self._config.jobs) as pool:
                return list(pool.map(runTask, tasks))
        return [runTask(t) for t in tasks]

    def _approxTask(self, N, alpha, M):
        return self._task('approx', cache.cacheKey(
            'approx', N, table.alphaKey(alpha), M), N, table.alphaKey(alpha),
            M)

    def _metricsTask(self, N, alpha, ns, digits, c=None):
        extra = {"n": ",".join(map(str, ns)), "digits": digits}
        if c is not None:
            extra["c"] = c
        key = cache.cacheKey('metrics', N, table.alphaKey(alpha),
                             max(max(ns) + 1, param._MIN_ORDER), **extra)
        return self._task('metrics', key, N, table.alphaKey(alpha),
                          tuple(ns), digits, c)

    def _classicalTask(self, ns, digits):
        key = cache.cacheKey('classical', 6, n=",".join(map(str, ns)),
                             digits=digits)
        return self._task('classical', key, tuple(ns), digits)

    def _branchTask(self, N, digits):
        return self._task('branch', cache.cacheKey(
            'branch', N, order=param._BRANCH_ORDER, digits=digits), N, digits)

    def _heckeTask(self, N, digits):
        return self._task('hecke', cache.cacheKey('hecke', N, digits=digits),
                          N, digits)

    def _fFormTask(self, N, M):
        return self._task('f_form', cache.cacheKey('f_form', N, order=M),
                          N, M)

    def _eFamilyTask(self, N, alphas, M):
        keys = ",".join(table.alphaKey(a) for a in alphas)
        return self._task('e_family', cache.cacheKey(
            'e_family', N, keys, M), N, tuple(table.alphaKey(a)
                                              for a in alphas), M)

    def _hauptTask(self, N, M):
        return self._task('hauptmodul',
                          cache.cacheKey('hauptmodul', N, order=M), N, M)

    def _linearFormTask(self, N, alpha, M):
        return self._task('linear_form', cache.cacheKey(
            'linear_form', N, table.alphaKey(alpha), M), N,
            table.alphaKey(alpha), M)

    def _level(self):
        N = self._config.level
        modform.hauptmodul(N)
        return N

    """ Commands """
    def _cmd_f_form(self):
        N = self._level()
        out = runTask(self._fFormTask(N, self._config.order))
        out["command"] = "f-form"
        return True, out

    def _cmd_e_family(self):
        N = self._level()
        out = runTask(self._eFamilyTask(N, self._config.alphas,
                                        self._config.order))
        out["command"] = "e-family"
        return True, out

    def _cmd_haupt(self):
        N = self._level()
        out = runTask(self._hauptTask(N, self._config.order))
        out["command"] = "haupt"
        return out["golden"]["passed"], out

    def _cmd_approx(self):
        N = self._level()
        members = self._map([self._approxTask(N, a, self._config.order)
                             for a in self._config.alphas])
        return True, {"command": "approx", "level": N,
                      "order": self._config.order, "members": members}

    def _cmd_metrics(self):
        N = self._level()
        n = self._config.n
        if n is None:
            n = self._config.order - 1
        members = self._map([self._metricsTask(N, a, (n,),
                                               self._config.digits)
                             for a in self._config.alphas])
        return True, {"command": "metrics", "level": N, "n": n,
                      "digits": self._config.digits, "members": members}

    def _cmd_branch(self):
        levels = self._config.levels
        for N in levels:
            modform.hauptmodul(N)
        reports = self._map([self._branchTask(N, self._config.digits)
                             for N in levels])
        estimates = [(r["level"], mpf(r["branch_estimate"]["estimate"]))
                     for r in reports]
        trends = [numeric.linearFormTrend(N, 0, param._TREND_N, R)
                  for N, R in estimates]
        return True, {"command": "branch", "digits": self._config.digits,
                      "reports": reports, "trends": trends,
                      "obstruction": numeric.obstructionReport(estimates)}

    def _cmd_hecke_check(self):
        N = self._level()
        out = runTask(self._heckeTask(N, self._config.digits))
        out["command"] = "hecke-check"
        return out["passed"], out

    def _cmd_table(self):
        which = self._config.table
        digits = self._config.digits
        alphas = param._TABLE_ALPHAS
        if which == 1:
            ns = param._TABLE1_N
            approx = self._map([self._approxTask(6, a, max(ns) + 1)
                                for a in alphas])
            metrics = self._map([self._metricsTask(6, a, ns, digits)
                                 for a in alphas])
            out = table.approximantTable(
                {p["alpha"]: p["rows"] for p in approx},
                {p["alpha"]: {m["n"]: m for m in p["rows"]}
                 for p in metrics}, alphas, ns)
        elif which == 2:
            ns = param._TABLE2_N
            metrics = self._map([self._metricsTask(6, a, ns, digits)
                                 for a in alphas])
            out = table.largeNTable(
                {p["alpha"]: {m["n"]: m for m in p["rows"]}
                 for p in metrics}, alphas, ns)
        else:
            computed = self._n199Entries(digits)
            if which == 3:
                out = table.errorTable(computed)
            else:
                out = table.qualityTable(computed)
        return True, out

    def _n199Entries(self, digits):
        n = param._TABLE34_N
        ns = (5, n)
        tasks, labels = [self._classicalTask(ns, digits)], [(None, None)]
        for ref in reference_tables.N199:
            level, alpha = ref[0], ref[1]
            if level is None or level in hauptmoduln.UNSPECIFIED_LEVELS:
                continue
            c = reference_tables.N199_MEMBERS[(level, alpha)]
            tasks.append(self._metricsTask(level, alpha, ns, digits, c))
            labels.append((level, alpha))
        computed = {}
        for label, payload in zip(labels, self._map(tasks)):
            by_n = {m["n"]: m for m in payload["rows"]}
            computed[label] = {"metric": by_n[n],
                               "ratio5": payload["ratio5"]}
        return computed

    def _cmd_export(self):
        N = self._level()
        M = self._config.order
        alpha = self._config.alphas[0]
        out_dir = self._config.out
        payloads = dict(zip(EXPORT_ARTIFACTS, self._map([
            self._fFormTask(N, M),
            self._eFamilyTask(N, self._config.alphas, M),
            self._hauptTask(N, M),
            self._linearFormTask(N, alpha, M),
            self._approxTask(N, alpha, M),
            self._branchTask(N, self._config.digits)])))
        os.makedirs(out_dir, exist_ok=True)
        artifacts = []
        for name in EXPORT_ARTIFACTS:
            path = os.path.join(out_dir, name + ".json")
            data = (json.dumps(payloads[name], indent=2, sort_keys=True)
                    + "\n").encode("utf-8")
            with open(path, "wb") as fh:
                fh.write(data)
            artifacts.append({"name": name, "file": name + ".json",
                              "sha256": hashlib.sha256(data).hexdigest()})
        manifest = {
            "tool": param._TOOL,
            "version": param._VERSION,
            "inputs": self._config.inputs(),
            "precision": {"digits": self._config.digits,
                          "guard_digits": param._GUARD_DIGITS,
                          "guard_order": param._GUARD_ORDER},
            "libraries": {"numpy": numpy.__version__,
                          "scipy": scipy.__version__,
                          "sympy": sympy.__version__,
                          "mpmath": mpmath.__version__},
            "artifacts": artifacts,
        }
        with open(os.path.join(out_dir, "manifest.json"), "w",
                  encoding="utf-8") as fh:
            fh.write(json.dumps(manifest, indent=2, sort_keys=True) + "\n")
        logger.info("exported %d artifacts to %s", len(artifacts), out_dir)
        return True, {"command": "export", "out": out_dir,
                      "manifest": manifest}

    """ Verification """
    def _check(self, name, passed, detail=None):
        passed = bool(passed)
        self._l_check.append({"name": name, "passed": passed,
                              "detail": detail})
        if not passed:
            logger.error("check failed: %s (%s)", name, detail)
        else:
            logger.debug("check passed: %s", name)

    def _cmd_verify(self):
        N = self._level()
        self._l_check = []
        self._verifyLevel(N)
        if N == 6:
            self._verifyLevelSix()
        failed = [c["name"] for c in self._l_check if not c["passed"]]
        return not failed, {
            "command": "verify", "level": N, "passed": not failed,
            "first_failure": failed[0] if failed else None,
            "checks": self._l_check}

    def _verifyLevel(self, N):
        digits = self._config.digits
        haupt = runTask(self._hauptTask(N, self._config.order))
        self._check("hauptmodul golden", haupt["golden"]["passed"],
                    haupt["golden"]["got"])
        fform = runTask(self._fFormTask(N, self._config.order))
        self._check("F vanishes at infinity", fform["vanishes_at_infinity"])
        efam = runTask(self._eFamilyTask(N, self._config.alphas,
                                         self._config.order))
        self._check("E basis closed form", efam["closed_form_agrees"])
        for name, chk in sorted(efam["modularity"].items()):
            self._check("{:} modularity".format(name), chk["modular"],
                        chk["defect"])
        hecke = runTask(self._heckeTask(N, digits))
        self._check("Hecke functional equation", hecke["passed"],
                    hecke["max_residual"])

    def _verifyLevelSix(self):
        M = self._config.order
        upto = self._config.upto
        golden = tuple(Fraction(c, 40) for c in (1, -28, 63, -36))
        self._check("F_6 coefficients", family.solveF(6, 4).vector() == golden)

        residuals = linform.gaugeIdentityResiduals(M)
        for name, series in sorted(residuals.items()):
            self._check("identity " + name, series.isZero())

        rows0 = _rowsFromPayload(runTask(self._approxTask(6, 0, upto + 2)))
        a = [r.a for r in rows0]
        b = [r.b for r in rows0]
        bad = [n for n in range(1, upto + 1)
               if rec.aperyResidual(b, n) or rec.aperyResidual(a, n)]
        self._check("Apery recurrence", not bad, bad[:1] or None)
        ca, cb = rec.aperySequences(upto + 1)
        self._check("classical Apery sequences",
                    ca == a[:upto + 2] and cb == b[:upto + 2])

        shift_alphas = [x for x in param._TABLE_ALPHAS if Fraction(x) != 0]
        payloads = self._map([self._approxTask(6, x, upto + 1)
                              for x in shift_alphas])
        for x, payload in zip(shift_alphas, payloads):
            res = linform.alphaShiftResiduals(rows0, _rowsFromPayload(payload),
                                              Fraction(x))
            bad = [n for n, da, db in res if da or db]
            self._check("alpha shift {:}".format(x), not bad, bad[:1] or None)

        top = min(param._SHIFT_CHECK_N, len(b) - 3)
        for x in param._VERIFY_SHIFT_ALPHAS:
            alpha = Fraction(x)
            c = rec.shiftedSequence(b, alpha)
            bad = [n for n in range(1, top + 1)
                   if rec.shiftedResidual(c, alpha, n)]
            self._check("shifted recurrence {:}".format(x), not bad,
                        bad[:1] or None)
            lead = alpha * (alpha ** 2 + 34 * alpha + 1)
            P, Q, R = rec.shiftedCoeffPolys(alpha)
            got = tuple(arith.toFraction(p.LC()) for p in (P, Q, R))
            self._check("shifted leading coefficients {:}".format(x),
                        got == (lead, -34 * lead, lead))

        Mb = min(M, len(b))
        B = QSeries(b[:Mb], Mb, 't')
        self._check("Picard-Fuchs annihilates B",
                    rec.applyOperator(rec.picardFuchs(), B).isZero())
        for x in param._VERIFY_OPERATOR_ALPHAS:
            alpha = Fraction(x)
            wB = B + alpha * B.shift(1)
            self._check("transformed operator {:}".format(x),
                        rec.applyOperator(rec.transformOperator(alpha),
                                          wB).isZero())

        n_int = min(param._INTEGRALITY_N, upto)
        rep = linform.integralityReport(rows0[:n_int + 1], 0)
        self._check("integrality", rep["passed"], rep["first_violation"])
        half = _rowsFromPayload(runTask(self._approxTask(6, "1/2",
                                                         n_int + 1)))
        rep = linform.integralityReport(half, Fraction(1, 2))
        self._check("scaled integrality 1/2",
                    rep["passed"] and rep["s"] == 2, rep["first_violation"])
