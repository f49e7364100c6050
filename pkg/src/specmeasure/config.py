"""
Configuration constants for spectral-distribution estimation.
"""

# Gap/growth thresholds (surfaced in every report)
DENSITY_FLOOR = 1e-3
GAP_CAP = 8

# Shifts s of the unilateral window d_{1+s} .. d_{n+s} probed for robustness
ROBUSTNESS_SHIFTS = (0, 17, 1000)

# Eigenvalue tolerance used when a full eigenvalue list is needed
EIGEN_TOL = 1e-10

# moment_match default flag threshold: factor * max(1, |m_k|) / sqrt(n)
MOMENT_FLAG_FACTOR = 10.0

# Ratio between the last two schedule entries for which the Richardson
# extrapolation 2 F_J - F_{J-1} is reported
RICHARDSON_RATIO = 2
