"""
Certified eigenvalue lists by bisection on Sturm counts.

Every eigenvalue index is bisected independently inside the Gershgorin
interval, so splitting the indices across workers never changes a value.
"""
import logging
from dataclasses import dataclass

import numpy as np

from src.errors import TolTooSmall
from src.parallel import parallel_map
from src.tridiag.config import (
    BISECTION_CHUNK,
    BISECTION_REL_FACTOR,
    MACHINE_EPS,
    MAX_BISECTION_STEPS,
    TOL_FLOOR_FACTOR,
)
from src.tridiag.matrix import TridiagonalMatrix
from src.tridiag.sturm import sturm_counts

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class EigenvalueList:
    """
    Increasing eigenvalues lambda_1 < ... < lambda_n of a compression.

    Each true eigenvalue lies within `certified_radius` of the reported one.
    `resolved` is False when two reported values are closer than twice the
    radius, i.e. the tolerance did not separate them.
    """

    values: np.ndarray
    certified_radius: float
    tol: float
    resolved: bool = True

    def __post_init__(self):
        values = np.array(self.values, dtype=np.float64)
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @property
    def n(self) -> int:
        return int(self.values.size)

    def count_le(self, x) -> np.ndarray:
        """#{i : values[i] <= x}, vectorized over x."""
        return np.searchsorted(self.values, x, side="right")

    def distance_to_nearest(self, x: float) -> float:
        return float(np.min(np.abs(self.values - x)))

    def is_resolved_point(self, x: float) -> bool:
        """True when x is farther than the certified radius from every value."""
        return self.distance_to_nearest(x) > self.certified_radius

    def min_gap(self) -> float:
        return float(np.min(np.diff(self.values))) if self.n > 1 else np.inf


def _bisect_indices(A: TridiagonalMatrix, targets: np.ndarray,
                    lo0: float, hi0: float, tol: float):
    """Bisect eigenvalue indices `targets` (1-based); count(lo) < i <= count(hi)."""
    lo = np.full(targets.size, lo0)
    hi = np.full(targets.size, hi0)
    active = np.ones(targets.size, dtype=bool)
    for _ in range(MAX_BISECTION_STEPS):
        width = hi - lo
        done = (width <= tol) | (
            width <= BISECTION_REL_FACTOR * MACHINE_EPS * np.maximum(np.abs(lo), np.abs(hi))
        )
        active &= ~done
        if not active.any():
            break
        idx = np.flatnonzero(active)
        mid = 0.5 * (lo[idx] + hi[idx])
        upper = sturm_counts(A, mid) >= targets[idx]
        hi[idx[upper]] = mid[upper]
        lo[idx[~upper]] = mid[~upper]
    else:
        logger.warning("Bisection hit %d sweeps with %d indices unfinished",
                       MAX_BISECTION_STEPS, int(active.sum()))
    return lo, hi


def eigenvalues(A: TridiagonalMatrix, tol: float, n_jobs: int = 1) -> EigenvalueList:
    """
    All n eigenvalues of A to within `tol`.

    Args:
        A: Unit off-diagonal tridiagonal matrix.
        tol: Target interval width, > 0.
        n_jobs: Worker count for index chunks (results are independent of it).

    Returns:
        EigenvalueList with certified_radius = largest final half-width.

    Raises:
        ValueError: If tol <= 0.
        TolTooSmall: If tol < 16 * eps * (Gershgorin width).
    """
    if not tol > 0:
        raise ValueError(f"tol must be > 0, got {tol}")
    gl, gu = A.gershgorin_interval()
    floor = TOL_FLOOR_FACTOR * MACHINE_EPS * (gu - gl)
    if tol < floor:
        raise TolTooSmall(tol, floor)

    lo0, hi0 = gl - tol, gu + tol
    targets = np.arange(1, A.n + 1)
    chunks = [targets[i:i + BISECTION_CHUNK] for i in range(0, A.n, BISECTION_CHUNK)]
    parts = parallel_map(lambda t: _bisect_indices(A, t, lo0, hi0, tol), chunks, n_jobs)
    lo = np.concatenate([p[0] for p in parts])
    hi = np.concatenate([p[1] for p in parts])

    values = 0.5 * (lo + hi)
    radius = float(np.max(0.5 * (hi - lo)))
    resolved = bool(A.n == 1 or np.all(np.diff(values) > 2.0 * radius))
    if not resolved:
        logger.warning("n=%d: some eigenvalues are not separated at tol=%.3e", A.n, tol)
    logger.debug("n=%d eigenvalues certified to radius %.3e", A.n, radius)
    return EigenvalueList(values=values, certified_radius=radius, tol=tol, resolved=resolved)


def interlacing_violations(outer: EigenvalueList, inner: EigenvalueList) -> int:
    """
    Count certified violations of lambda_i <= mu_i <= lambda_{i+1}.

    `inner` must come from the leading (n-1) x (n-1) submatrix of the
    matrix behind `outer`. A pair only counts as a violation when it breaks
    the ordering by more than the two certified radii together.
    """
    if inner.n != outer.n - 1:
        raise ValueError(f"inner list has {inner.n} values, expected {outer.n - 1}")
    slack = outer.certified_radius + inner.certified_radius
    below = inner.values < outer.values[:-1] - slack
    above = inner.values > outer.values[1:] + slack
    return int(np.count_nonzero(below) + np.count_nonzero(above))
