"""
Configuration constants for potential generation and averaging.
"""

# Highest polynomial degree accepted for v in CosineComposed potentials
MAX_POLY_DEGREE = 64

# Two-word splits of pi and 2*pi (hi + mid + lo equals the constant to ~1e-48)
PI_HI = 3.141592653589793
PI_MID = 1.2246467991473532e-16
TWO_PI_HI = 6.283185307179586
TWO_PI_MID = 2.4492935982947064e-16
TWO_PI_LO = -5.989539619436679e-33

# Dekker splitter for double precision (2**27 + 1)
SPLITTER = 134217729.0

# Periodicity heuristic behind `claimed_nonperiodic`
NONPERIODIC_MAX_PERIOD = 10_000
NONPERIODIC_TOL = 1e-9
# Number of consecutive indices compared for each candidate period
PERIODICITY_MIN_WINDOW = 64

# Offset multipliers k*n probed by the uniformity defect of a window of radius n
UNIFORMITY_OFFSET_FACTORS = (0, 1, -1, 2, -2, 5, -5, 10, -10)

# Relative noise floor used when judging whether the uniformity defect grew
MEAN_NOISE_FLOOR = 1e-12
