"""Configuration constants for rack and quandle (co)homology computations."""

# ========== Degree and Size Limits ==========
# Highest degree any table computation accepts
MAX_DEGREE = 6

# Degree used by the CLI when --max-degree is not given
DEFAULT_MAX_DEGREE = 3

# Largest number of basis elements (matrix columns) a single degree may have
# before computations refuse to run
MAX_BASIS_SIZE = 2000

# ========== Randomized Checks ==========
RANDOM_STATE = 42

# Random instances drawn per randomized check (alternative generators)
RANDOM_COCHAINS_PER_CHECK = 3

# Cochain values are drawn from [-RANDOM_VALUE_BOUND, RANDOM_VALUE_BOUND]
RANDOM_VALUE_BOUND = 5

# ========== Verification Suites ==========
SUITES = [
    "complex",
    "dgb",
    "homotopy",
    "dendriform",
    "zinbiel",
    "action",
    "splitting",
]

# Default cap for exhaustive identity checks on the bialgebra side
DEFAULT_VERIFY_DEGREE = 4

# Total degree up to which cup associativity and the Leibniz rule are checked
CUP_CHECK_DEGREE = 5

# ========== Output ==========
OUTPUT_FORMATS = ["json", "text"]
LOG_FORMAT = "%(asctime)s %(name)s %(levelname)s %(message)s"
