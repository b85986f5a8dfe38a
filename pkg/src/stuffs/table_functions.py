from fractions import Fraction
import json
import logging

from _errors import UsageError
import hauptmoduln
import reference_tables
import _param as param

logger = logging.getLogger(__name__)

FORMATS = ('json', 'md', 'tsv')
TABLE_IDS = (1, 2, 3, 4)


def alphaKey(alpha):
    """
    Canonical spelling of a family parameter: '-5', '1/2'
    """
    return str(Fraction(alpha))


def _table(title, columns, rows, notes=(), digits=None):
    return {"title": title, "columns": list(columns), "rows": rows,
            "notes": list(notes), "digits": digits}


def _match(ratio, reference):
    if ratio is None or reference is None:
        return None
    return "yes" if Fraction(ratio) == Fraction(reference) else "no"


def approximantTable(approx, metrics, alphas, ns=param._TABLE1_N):
    """
    Level six approximants a_n / b_n next to the published fractions
    Args:
        approx: alpha key -> list of ApproxRow payloads indexed by n
        metrics: alpha key -> {n: MetricRow payload}
        alphas: column order
        ns: indices shown
    """
    rows = []
    digits = 0
    for alpha in alphas:
        key = alphaKey(alpha)
        refs = reference_tables.APPROXIMANTS.get(key)
        exps = reference_tables.APPROXIMANT_EXPONENTS.get(key)
        for i, n in enumerate(ns):
            ratio = approx[key][n]["ratio"]
            ref = refs[i] if refs else None
            metric = metrics[key].get(n)
            if metric is not None:
                digits = max(digits, metric["digits"])
            rows.append([key, n, ratio, ref, _match(ratio, ref),
                         metric["err_exponent"] if metric else None,
                         exps[i] if exps else None])
    return _table("Approximants of zeta(3), level 6",
                  ["alpha", "n", "a_n/b_n", "reference", "match",
                   "R", "R reference"], rows, digits=digits or None)


def largeNTable(metrics, alphas, ns=param._TABLE2_N):
    """
    Error exponent R and denominator digits D of the level six family
    """
    rows = []
    digits = 0
    for alpha in alphas:
        key = alphaKey(alpha)
        R_ref, D_ref = reference_tables.LARGE_N.get(key, (None, None))
        for i, n in enumerate(ns):
            m = metrics[key][n]
            digits = max(digits, m["digits"])
            rows.append([key, n, m["err_exponent"],
                         R_ref[i] if R_ref else None, m["den_digits"],
                         D_ref[i] if D_ref else None])
    return _table("Error exponents and denominator digits, level 6",
                  ["alpha", "n", "R", "R reference", "D", "D reference"],
                  rows, digits=digits or None)


def _n199Rows(computed, pick):
    """
    One row per published n = 199 entry
    Args:
        computed: (level, alpha key) -> {"metric", "ratio5"}; the classical
                  sequence sits under (None, None); rows of level N
                  come from the member E1_N + c E0_N listed in
                  N199_MEMBERS
        pick: (metric, reference tuple) -> list of value cells
    """
    rows, notes = [], []
    digits = 0
    for ref in reference_tables.N199:
        level, alpha = ref[0], ref[1]
        label = "Apery" if level is None else level
        shown_alpha = "-" if alpha is None else alpha
        shown_c = reference_tables.N199_MEMBERS.get((level, alpha))
        if level in hauptmoduln.UNSPECIFIED_LEVELS:
            rows.append([label, shown_alpha, shown_c]
                        + pick(None, ref) + [hauptmoduln.UNSPECIFIED_NOTE])
            continue
        entry = computed.get((level, alpha))
        if entry is None:
            rows.append([label, shown_alpha, shown_c] + pick(None, ref)
                        + ["not computed"])
            continue
        metric = entry["metric"]
        digits = max(digits, metric["digits"])
        note = reference_tables.N199_NOTES.get((level, alpha))
        if note:
            notes.append("level {:}, alpha {:}: {:}".format(level, alpha,
                                                           note))
        rows.append([label, shown_alpha, shown_c] + pick(entry, ref)
                    + [note])
    return rows, notes, digits or None


def errorTable(computed, n=param._TABLE34_N):
    """
    Error and reduced denominator of a_n / b_n at n = 199
    """
    def pick(entry, ref):
        if entry is None:
            return [None, ref[2], None, None, ref[3], ref[4]]
        m = entry["metric"]
        return [entry["ratio5"], ref[2], m["den_log10"], m["error"], ref[3],
                ref[4]]

    rows, notes, digits = _n199Rows(computed, pick)
    return _table("Error and denominator at n = {:}".format(n),
                  ["level", "alpha", "c", "a_5/b_5", "a_5/b_5 reference",
                   "log10 den", "error",
                   "log10 den reference", "error reference", "note"],
                  rows, notes, digits)


def qualityTable(computed, n=param._TABLE34_N):
    """
    E = -log10 error and Q = E / log10 den at n = 199
    """
    def pick(entry, ref):
        if entry is None:
            return [None, None, ref[5], ref[6]]
        m = entry["metric"]
        return [m["E"], m["Q"], ref[5], ref[6]]

    rows, notes, digits = _n199Rows(computed, pick)
    return _table("Approximation quality at n = {:}".format(n),
                  ["level", "alpha", "c", "E", "Q", "E reference",
                   "Q reference", "note"], rows, notes, digits)


""" Rendering """


def _cell(x):
    return "-" if x is None else str(x)


def renderTable(table, fmt):
    """
    Render a table dict as json, markdown or tab separated text
    """
    if fmt == 'json':
        return json.dumps(table, indent=2, sort_keys=True)
    if fmt == 'tsv':
        lines = ["\t".join(table["columns"])]
        lines += ["\t".join(_cell(c) for c in row) for row in table["rows"]]
        return "\n".join(lines)
    if fmt == 'md':
        cols = table["columns"]
        lines = ["### " + table["title"], "",
                 "| " + " | ".join(cols) + " |",
                 "|" + "|".join("---" for _ in cols) + "|"]
        lines += ["| " + " | ".join(_cell(c) for c in row) + " |"
                  for row in table["rows"]]
        if table["digits"]:
            lines += ["", "working precision: {:} digits"
                      .format(table["digits"])]
        for note in table["notes"]:
            lines += ["", "- " + note]
        return "\n".join(lines)
    raise UsageError("unknown format '{:}', expected one of {:}"
                     .format(fmt, ", ".join(FORMATS)))


def renderResult(result, fmt):
    """
    Render any command result; tables use renderTable, everything else
    becomes a two column key/value listing in md and tsv
    """
    if "columns" in result and "rows" in result:
        return renderTable(result, fmt)
    if fmt == 'json':
        return json.dumps(result, indent=2, sort_keys=True)
    cols = ["key", "value"]
    rows = [[k, json.dumps(result[k], sort_keys=True)]
            for k in sorted(result)]
    return renderTable(_table(result.get("command", "result"), cols, rows),
                       fmt)
