"""
Configuration constants for tridiagonal compressions and their eigenvalues.
"""
import numpy as np

MACHINE_EPS = float(np.finfo(np.float64).eps)

# Constant off-diagonal of every compression (unit hopping)
OFFDIAG_VALUE = 1.0

# Zero-pivot floor: PIVOT_FLOOR_FACTOR * eps * Gershgorin width
PIVOT_FLOOR_FACTOR = 1.0

# Bisection stops when width <= tol or width <= BISECTION_REL_FACTOR * eps * max(|a|, |b|)
BISECTION_REL_FACTOR = 4.0
# Smallest tol accepted: TOL_FLOOR_FACTOR * eps * Gershgorin width
TOL_FLOOR_FACTOR = 16.0
# Hard stop on bisection sweeps (never reached for sane tolerances)
MAX_BISECTION_STEPS = 256
# Eigenvalue indices handled per worker task
BISECTION_CHUNK = 512

# Numerical rank cutoff: RANK_TOL_FACTOR * N * eps * ||A||_inf
RANK_TOL_FACTOR = 10.0

# CSV decimal format (17 significant digits round-trips a double)
FLOAT_FORMAT = "%.17g"
