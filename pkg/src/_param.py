# ------------------------------
# Tool
# ------------------------------
_TOOL = "zeta3-modular"
_VERSION = "1.0.0"
_CACHE_ENV = "ZETA3_CACHE_DIR"

# ------------------------------
# Exact arithmetic
# ------------------------------
_BERNOULLI_BOUND = 32
_GUARD_ORDER = 8  # extra q-order carried through recomposition
_MIN_ORDER = 2

# ------------------------------
# Numerics
# ------------------------------
_GUARD_DIGITS = 10
_MIN_DIGITS = 10
_DEFAULT_DIGITS = 50
_METRIC_SLACK_DIGITS = 20  # digits kept beyond the error exponent
_ETA_MAX_TERMS = 100000

# --- Hecke functional equation ---
_HECKE_ORDER = 80
_HECKE_MIN_DECAY_DIGITS = 10  # |q|^order must fall below 10^-this
_HECKE_TOL_SLACK = 20  # pass when the residual is below 10^-(digits - this)
# tau = re + i * scale / sqrt(N)
_HECKE_SAMPLES = (("0", "1.1"), ("0", "0.9"), ("0.05", "1"))

# --- Branch radius ---
_BRANCH_ORDER = 120
_RADIUS_MIN_COEFFS = 32
_RADIUS_TOL_LEVEL6 = 0.02
_RADIUS_TOL_OTHER = 0.05
_RADIUS_FIT_RESIDUAL_MAX = 0.01
_OBSTRUCTION_N = 199

# ------------------------------
# Pipeline defaults
# ------------------------------
_DEFAULT_ORDER = 50
_DEFAULT_LEVEL = 6
_DEFAULT_ALPHA = "0"
_VERIFY_UPTO = 100
_VERIFY_SHIFT_ALPHAS = ["1", "-2", "5", "100", "1/2"]
_VERIFY_OPERATOR_ALPHAS = ["1", "-2", "5"]
_TREND_N = 60
_TREND_FLAT_SLOPE = 0.05

# ------------------------------
# Tables
# ------------------------------
_TABLE1_N = (2, 3, 4, 5)
_TABLE2_N = (95, 96, 97, 98, 99)
_TABLE34_N = 199
_TABLE_ALPHAS = ["0", "-100", "-5", "-2", "1", "2", "5", "100"]
_EXPORT_ORDER = 50
_INTEGRALITY_N = 60
_SHIFT_CHECK_N = 50
