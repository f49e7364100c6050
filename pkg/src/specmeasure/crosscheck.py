"""
Independent cross-checks of the unilateral estimate: bilateral windows of
the same dimension, and shifted unilateral windows.
"""
import logging
from dataclasses import dataclass
from typing import Dict, Optional, Sequence

import numpy as np
import pandas as pd

from src.parallel import parallel_map
from src.potentials.spec import PotentialSpec
from src.specmeasure.config import ROBUSTNESS_SHIFTS
from src.specmeasure.distribution import compression_cdf, sup_distance, validate_grid
from src.tridiag.matrix import build_bilateral, build_unilateral

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CrosscheckReport:
    m_schedule: tuple
    distances: np.ndarray

    @property
    def dimensions(self) -> np.ndarray:
        return 2 * np.asarray(self.m_schedule) + 1

    @property
    def decreasing(self) -> bool:
        return bool(np.all(np.diff(self.distances) <= 0))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            "m": self.m_schedule,
            "dimension": self.dimensions,
            "sup_distance": self.distances,
        })


def bilateral_crosscheck(spec: PotentialSpec, m_schedule: Sequence[int], grid,
                         n_jobs: int = 1) -> CrosscheckReport:
    """
    sup_x |F_bilateral(m)(x) - F_unilateral(2m+1)(x)| for every m.

    Both compressions converge to the same distribution, so the distances
    should trend to 0; a warning is logged when they do not decrease.
    """
    m_schedule = [int(m) for m in m_schedule]
    if not m_schedule:
        raise ValueError("m_schedule must be nonempty")
    grid = validate_grid(grid)

    def _one(m: int) -> float:
        bilateral = compression_cdf(build_bilateral(spec, m), grid)
        unilateral = compression_cdf(build_unilateral(spec, 2 * m + 1), grid)
        return sup_distance(bilateral, unilateral)

    report = CrosscheckReport(m_schedule=tuple(m_schedule),
                              distances=np.array(parallel_map(_one, m_schedule, n_jobs)))
    if not report.decreasing:
        logger.warning("Bilateral/unilateral distances do not decrease: %s",
                       np.array2string(report.distances))
    return report


def offset_robustness(spec: PotentialSpec, n: int, grid,
                      shifts: Sequence[int] = ROBUSTNESS_SHIFTS,
                      tolerance: Optional[float] = None) -> Dict[int, float]:
    """
    sup distance between the CDF of d_{1+s} .. d_{n+s} and that of s = 0.

    Distances above `tolerance` (typically the Cauchy difference of the
    schedule) are logged, not raised.
    """
    grid = validate_grid(grid)
    reference = compression_cdf(build_unilateral(spec, n), grid)
    distances = {}
    for s in shifts:
        cdf = reference if s == 0 else compression_cdf(build_unilateral(spec, n, offset=s), grid)
        distances[int(s)] = sup_distance(cdf, reference)
        if tolerance is not None and distances[int(s)] > tolerance:
            logger.warning("Offset %d moves the n=%d CDF by %.3e (> %.3e)",
                           s, n, distances[int(s)], tolerance)
    return distances
