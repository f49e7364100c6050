"""
app_config.py
-------------
Central configuration for the jacobi-spectra command-line tool.
Contains app metadata, exit codes, CSV formatting and run defaults.
"""

# ---------------------------------------------------------------------------
# App metadata
# ---------------------------------------------------------------------------
APP_TITLE = "jacobi-spectra"
APP_SUBTITLE = "Spectral distributions of almost-periodic tridiagonal operators"
APP_VERSION = "1.0.0"

# ---------------------------------------------------------------------------
# Environment & exit codes
# ---------------------------------------------------------------------------
THREADS_ENV_VAR = "JACOBI_SPECTRA_THREADS"

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_CONFIG = 2
EXIT_CERTIFICATION = 3

COMMANDS = ("eigs", "cdf", "spectrum", "gaps", "moments", "crosscheck", "butterfly")

# ---------------------------------------------------------------------------
# Output format
# ---------------------------------------------------------------------------
CSV_FLOAT_FORMAT = "%.17g"
CSV_ENCODING = "utf-8"
# Run keys left out of the provenance header: they never change results
PROVENANCE_EXCLUDED_KEYS = ("threads", "output_path")

# ---------------------------------------------------------------------------
# Run defaults
# ---------------------------------------------------------------------------
DEFAULT_SCHEDULE = (256, 512, 1024, 2048)
DEFAULT_TOL = 1e-10
DEFAULT_H = 0.05
DEFAULT_GRID_POINTS = 401
# Default grid covers [-(B + 2), B + 2] widened by this factor
GRID_PADDING = 1.05
DEFAULT_K = 6
DEFAULT_WINDOW_RADIUS = 100_000
DEFAULT_SWEEP_POINTS = 101
DEFAULT_OUTPUT_PATH = "jacobi_spectra_output.csv"
# Largest |k| tried when matching a gap's integrated density to k*theta/(2*pi) mod 1
GAP_LABEL_MAX_K = 20

# ---------------------------------------------------------------------------
# Console text
# ---------------------------------------------------------------------------
NONPERIODIC_CAVEAT = (
    "Caveat: irrationality of theta/pi cannot be certified from a floating-point "
    "angle; 'claimed_nonperiodic' only means no period was found up to the bound."
)
