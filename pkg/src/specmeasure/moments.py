"""
Trace moments tau(T^k) by Birkhoff averaging of path sums, and their
comparison with the Cesaro moments of a unilateral compression.
"""
import logging
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
import pandas as pd

from src.potentials.sequence import sample_sequence
from src.potentials.spec import PotentialSpec, potential_bound
from src.specmeasure.config import EIGEN_TOL, MOMENT_FLAG_FACTOR
from src.specmeasure.distribution import validate_schedule
from src.specmeasure.empirical import EmpiricalMeasure, PiecewisePolynomial, cesaro_functional
from src.tridiag.bisection import eigenvalues
from src.tridiag.matrix import TridiagonalMatrix, build_unilateral

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class TraceMoments:
    """m_k ~ tau(T^k) for k = 0..K."""

    moments: np.ndarray
    window_radius: int
    margin: int
    bound: float

    @property
    def K(self) -> int:
        return int(self.moments.size - 1)


def trace_moments(spec: PotentialSpec, K: int, window_radius: int) -> TraceMoments:
    """
    m_k = (2R+1)^-1 sum_{|j| <= R} <T^k e_j, e_j>.

    <T^k e_j, e_j> is the sum over closed k-step paths from j (steps -1, 0,
    +1; a stay at site i weighs d_i, a move weighs 1). Paths of length k
    never leave [j-k, j+k], so powers of the compression to
    [-R-K, R+K] give the bilateral values exactly.

    Args:
        spec: Potential description.
        K: Highest moment, >= 0.
        window_radius: R > K.
    """
    if K < 0:
        raise ValueError(f"K must be >= 0, got {K}")
    R = int(window_radius)
    if R <= K:
        raise ValueError(f"window_radius must exceed K, got {window_radius} <= {K}")

    window = TridiagonalMatrix(sample_sequence(spec, -R - K, R + K), origin=-R - K)
    T = window.to_sparse()
    centre = slice(K, K + 2 * R + 1)

    moments = np.empty(K + 1)
    moments[0] = 1.0
    power = T
    for k in range(1, K + 1):
        if k > 1:
            power = power @ T
        moments[k] = float(np.mean(power.diagonal()[centre]))

    bound = potential_bound(spec) + 2.0
    for k in range(K + 1):
        if abs(moments[k]) > bound ** k * (1.0 + 1e-12):
            logger.warning("Moment m_%d=%.6g exceeds the norm bound %.6g", k, moments[k], bound ** k)
    return TraceMoments(moments=moments, window_radius=R, margin=K, bound=bound)


@dataclass(frozen=True, eq=False)
class MomentMatchReport:
    """Cesaro moments of T_n against trace moments, k = 0..K."""

    n: int
    cesaro: np.ndarray
    trace: np.ndarray
    thresholds: np.ndarray

    @property
    def abs_diff(self) -> np.ndarray:
        return np.abs(self.cesaro - self.trace)

    @property
    def flagged(self) -> np.ndarray:
        """Indices k whose discrepancy exceeds the threshold."""
        return np.flatnonzero(self.abs_diff > self.thresholds)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            "k": np.arange(self.cesaro.size),
            "cesaro": self.cesaro,
            "trace": self.trace,
            "abs_diff": self.abs_diff,
        })


def moment_match(spec: PotentialSpec, schedule: Sequence[int], K: int, window_radius: int,
                 tol: Optional[float] = None, eig_tol: float = EIGEN_TOL,
                 n_jobs: int = 1) -> MomentMatchReport:
    """
    Compare (1/n) sum lambda_i^k at n = schedule[-1] with m_k.

    Args:
        tol: Flag threshold; by default 10 * max(1, |m_k|) / sqrt(n).
        eig_tol: Bisection tolerance of the eigenvalue list.
    """
    n = int(validate_schedule(schedule)[-1])
    trace = trace_moments(spec, K, window_radius)
    eigs = eigenvalues(build_unilateral(spec, n), eig_tol, n_jobs=n_jobs)
    measure = EmpiricalMeasure(eigs)
    cesaro = np.array([cesaro_functional(measure, PiecewisePolynomial.monomial(k))
                       for k in range(K + 1)])

    if tol is None:
        thresholds = MOMENT_FLAG_FACTOR * np.maximum(1.0, np.abs(trace.moments)) / np.sqrt(n)
    else:
        thresholds = np.full(K + 1, float(tol))
    report = MomentMatchReport(n=n, cesaro=cesaro, trace=trace.moments, thresholds=thresholds)
    for k in report.flagged:
        logger.warning("Moment k=%d: |cesaro - trace| = %.3e exceeds %.3e",
                       k, report.abs_diff[k], thresholds[k])
    return report
