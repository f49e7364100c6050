"""
Estimate the spectral distribution mu_T from the CDFs of unilateral
compressions T_n along a schedule of dimensions.

CDFs are evaluated by Sturm counts at the grid points (O(n) per point);
no eigenvalue list is formed.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import pandas as pd

from src.parallel import parallel_map
from src.potentials.spec import PotentialSpec
from src.specmeasure.config import RICHARDSON_RATIO
from src.tridiag.matrix import TridiagonalMatrix, build_unilateral
from src.tridiag.sturm import sturm_counts

logger = logging.getLogger(__name__)


def compression_cdf(A: TridiagonalMatrix, grid: np.ndarray) -> np.ndarray:
    """N_n((-inf, x]) / n on every grid point."""
    return sturm_counts(A, grid) / A.n


def sup_distance(F: np.ndarray, G: np.ndarray) -> float:
    """Kolmogorov distance between two CDFs sampled on the same grid."""
    return float(np.max(np.abs(np.asarray(F) - np.asarray(G))))


def validate_schedule(schedule: Sequence[int], name: str = "schedule") -> np.ndarray:
    schedule = np.asarray(schedule, dtype=np.int64)
    if schedule.ndim != 1 or schedule.size == 0:
        raise ValueError(f"{name} must be a nonempty list of dimensions")
    if np.any(schedule < 1) or np.any(np.diff(schedule) <= 0):
        raise ValueError(f"{name} must be strictly increasing positive integers")
    return schedule


def validate_grid(grid) -> np.ndarray:
    grid = np.asarray(grid, dtype=np.float64)
    if grid.ndim != 1 or grid.size < 2 or np.any(np.diff(grid) <= 0):
        raise ValueError("grid must be a strictly increasing array of at least 2 points")
    if not np.all(np.isfinite(grid)):
        raise ValueError("grid must be finite")
    return grid


@dataclass(frozen=True, eq=False)
class SpectralDistributionEstimate:
    """
    Per-n CDFs on a shared grid plus the Cauchy diagnostics of the schedule.

    `limit_cdf` is the CDF of the largest compression; `richardson_cdf`
    (2 F_J - F_{J-1}, repaired to a CDF) is only a diagnostic and is None
    unless the last two dimensions are in ratio 2.
    """

    schedule: tuple
    grid: np.ndarray
    cdfs: np.ndarray
    tol: float
    offset: int = 0

    @property
    def limit_cdf(self) -> np.ndarray:
        return self.cdfs[-1]

    @property
    def convergence_profile(self) -> np.ndarray:
        if len(self.schedule) < 2:
            return np.zeros_like(self.grid)
        return np.abs(self.cdfs[-1] - self.cdfs[-2])

    @property
    def cauchy_sups(self) -> np.ndarray:
        """sup |F_{n_{j+1}} - F_{n_j}| for consecutive schedule entries."""
        return np.max(np.abs(np.diff(self.cdfs, axis=0)), axis=1) if len(self.schedule) > 1 \
            else np.zeros(0)

    @property
    def richardson_cdf(self) -> Optional[np.ndarray]:
        if len(self.schedule) < 2 or self.schedule[-1] != RICHARDSON_RATIO * self.schedule[-2]:
            return None
        extrapolated = np.clip(2.0 * self.cdfs[-1] - self.cdfs[-2], 0.0, 1.0)
        return np.maximum.accumulate(extrapolated)

    def to_frame(self) -> pd.DataFrame:
        """Columns x, n=<n_1>, ..., n=<n_J>."""
        frame = pd.DataFrame({"x": self.grid})
        for n, row in zip(self.schedule, self.cdfs):
            frame[f"n={n}"] = row
        return frame


def estimate_distribution(spec: PotentialSpec, schedule: Sequence[int], grid,
                          tol: float, offset: int = 0,
                          n_jobs: int = 1) -> SpectralDistributionEstimate:
    """
    CDFs of T_n (diagonal d_{1+offset} .. d_{n+offset}) for every n in `schedule`.

    Args:
        spec: Potential description.
        schedule: Strictly increasing dimensions (geometric schedules make
            the Cauchy differences meaningful).
        grid: Strictly increasing thresholds; should cover the Gershgorin
            interval, a warning is logged otherwise.
        tol: Recorded accuracy of the run (> 0).
        offset: Window shift.
        n_jobs: Worker count (results do not depend on it).
    """
    schedule = validate_schedule(schedule)
    grid = validate_grid(grid)
    if not tol > 0:
        raise ValueError(f"tol must be > 0, got {tol}")

    def _one(n: int) -> np.ndarray:
        A = build_unilateral(spec, int(n), offset=offset)
        lo, hi = A.gershgorin_interval()
        if grid[0] > lo or grid[-1] < hi:
            logger.warning("Grid [%g, %g] does not cover the Gershgorin interval [%g, %g] at n=%d",
                           grid[0], grid[-1], lo, hi, n)
        logger.info("CDF for n=%d on %d grid points", n, grid.size)
        return compression_cdf(A, grid)

    cdfs = np.vstack(parallel_map(_one, schedule.tolist(), n_jobs))
    estimate = SpectralDistributionEstimate(schedule=tuple(schedule.tolist()), grid=grid,
                                            cdfs=cdfs, tol=tol, offset=offset)
    sups = estimate.cauchy_sups
    if sups.size > 1 and np.any(np.diff(sups) > 0):
        logger.warning("Cauchy differences are not decreasing: %s", np.array2string(sups))
    return estimate
