import math

# Numbers
PI = math.pi
PI_SQUARED = math.pi**2
SQRT2 = math.sqrt(2.0)

# Constant ledger
SHARP_DIAMETER_CONSTANT = 2.0 * (SQRT2 - 1.0)
ANDREWS_NI_DIAMETER_CONSTANT = math.sqrt(2.0 / 3.0)
FUTAKI_SANO_DIAMETER_CONSTANT = 10.0 / 13.0
FUTAKI_SANO_K_FACTOR = 0.31
SOLITON_OPTIMAL_S = 2.0 - SQRT2
SOLITON_G_MAX = 12.0 - 8.0 * SQRT2

# Bounds
DEFAULT_ORACLE_GRID = 1_000_000
MIN_ORACLE_GRID = 3

# Sturm-Liouville
DEFAULT_CELLS = 2000
MIN_CELLS = 8
EXPONENT_GUARD = 700.0
STURM_RESIDUAL_RTOL = 1e-10
NULL_EIGENVALUE_TOL = 1e-10
DENSE_ORACLE_LIMIT = 3000

# Spectral
DENSE_FALLBACK_LIMIT = 3000
DIAMETER_ALL_SOURCES_LIMIT = 2000
DIAMETER_SAMPLED_SOURCES = 200
LANCZOS_BLOCK_SIZE = 4
LANCZOS_MAX_BLOCKS = 80
LANCZOS_TOL = 1e-10
LANCZOS_SHIFT = 1.0
LANCZOS_SEED = 20120101
CLUSTER_RTOL = 2e-2
MAX_SUBDIVISIONS = 7
SPECTRAL_CERTIFY_RTOL = 1e-2

# Shrinkers
MIN_CURVE_POINTS = 16
DEFAULT_CURVE_POINTS = 4096
DEFAULT_SHOOTING_STEP_FACTOR = 1e-3
MAX_SPAN = 8.0 * math.pi
CLOSURE_TOL = 1e-6
MAX_BISECTIONS = 60
SHOOTING_BRACKET_LOW = 0.25
SHOOTING_SCAN_POINTS = 16
CIRCLE_BRACKET_PULL = 1e-4
FD_STEP = 1e-4
TRIVIAL_PHI_TOL = 1e-10
DIAMETER_MARGIN_TOL = 1e-9

# Reports
SCHEMA_VERSION = 1
OUTPUT_ENV_VAR = "WITTEN_GAP_OUT"
DEFAULT_OUTPUT_DIR = "reports"
SUMMARY_FILENAME = "summary.json"
