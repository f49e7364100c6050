"""
von Neumann means, uniformity diagnostics and the finite periodicity test.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np

from src.potentials.config import (
    MEAN_NOISE_FLOOR,
    NONPERIODIC_MAX_PERIOD,
    NONPERIODIC_TOL,
    PERIODICITY_MIN_WINDOW,
    UNIFORMITY_OFFSET_FACTORS,
)
from src.potentials.sequence import sample_sequence
from src.potentials.spec import PotentialKind, PotentialSpec, potential_bound

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MeanEstimate:
    """Symmetric Cesaro mean of d over [-n, n] and its translation defect."""

    value: float
    window_radius: int
    uniformity_defect: float
    offsets: tuple = ()


@dataclass(frozen=True)
class PeriodicityResult:
    """`period` is the least period found, None means no period up to max_period."""

    period: Optional[int]
    max_period: int
    tol: float

    @property
    def periodic(self) -> bool:
        return self.period is not None

    def __str__(self) -> str:
        if self.periodic:
            return f"periodic({self.period})"
        return f"no_period_up_to({self.max_period})"


def default_offsets(window_radius: int) -> List[int]:
    """Offsets {0, +-n, +-2n, +-5n, +-10n} for a window of radius n."""
    return [f * int(window_radius) for f in UNIFORMITY_OFFSET_FACTORS]


def von_neumann_mean(spec: PotentialSpec, window_radius: int,
                     offsets: Optional[Sequence[int]] = None) -> MeanEstimate:
    """
    Estimate M(d) = lim (2n+1)^-1 (d_-n + ... + d_n).

    The uniformity defect is the largest deviation of the windowed mean
    centred at any tested offset k from the mean centred at 0.

    Args:
        spec: Potential description.
        window_radius: n >= 1.
        offsets: Window centres to probe; defaults to `default_offsets(n)`.

    Returns:
        MeanEstimate.
    """
    n = int(window_radius)
    if n < 1:
        raise ValueError(f"window_radius must be >= 1, got {window_radius}")
    offsets = default_offsets(n) if offsets is None else [int(k) for k in offsets]
    if not offsets:
        raise ValueError("offsets must be nonempty")

    centre = sample_sequence(spec, -n, n)
    value = float(np.clip(np.mean(centre), centre.min(), centre.max()))

    defect = 0.0
    for k in offsets:
        window = centre if k == 0 else sample_sequence(spec, k - n, k + n)
        defect = max(defect, abs(float(np.mean(window)) - value))
    return MeanEstimate(value=value, window_radius=n, uniformity_defect=defect,
                        offsets=tuple(offsets))


def mean_profile(spec: PotentialSpec, radii: Sequence[int]) -> List[MeanEstimate]:
    """
    Means along an increasing schedule of radii.

    Logs a warning whenever the uniformity defect grows by more than twice
    the noise floor between consecutive radii.
    """
    estimates = [von_neumann_mean(spec, r) for r in radii]
    scale = max(potential_bound(spec), 1.0)
    for prev, cur in zip(estimates, estimates[1:]):
        noise = 2.0 * MEAN_NOISE_FLOOR * cur.window_radius * scale
        if cur.uniformity_defect > 2.0 * prev.uniformity_defect + noise:
            logger.warning(
                "Uniformity defect grew from %.3e (n=%d) to %.3e (n=%d)",
                prev.uniformity_defect, prev.window_radius,
                cur.uniformity_defect, cur.window_radius,
            )
    return estimates


def periodicity_check(spec: PotentialSpec, max_period: int, tol: float,
                      window: Optional[int] = None) -> PeriodicityResult:
    """
    Find the least p <= max_period with |d_{n+p} - d_n| <= tol on a test window.

    The window is n = 0 .. window-1 (default max(2*max_period, 64)); Explicit
    specs are tested on their stored range only.
    """
    if max_period < 1:
        raise ValueError(f"max_period must be >= 1, got {max_period}")
    if window is None:
        window = max(2 * max_period, PERIODICITY_MIN_WINDOW)

    if spec.kind is PotentialKind.EXPLICIT:
        first, last = spec.stored_range
        values = sample_sequence(spec, first, last)
    else:
        values = sample_sequence(spec, 0, window + max_period - 1)

    for p in range(1, max_period + 1):
        span = min(window, values.size - p)
        if span < 1:
            break
        if np.max(np.abs(values[p:p + span] - values[:span])) <= tol:
            return PeriodicityResult(period=p, max_period=max_period, tol=tol)
    return PeriodicityResult(period=None, max_period=max_period, tol=tol)


def describe_potential(spec: PotentialSpec,
                       max_period: int = NONPERIODIC_MAX_PERIOD,
                       tol: float = NONPERIODIC_TOL) -> Dict[str, object]:
    """
    Summary used by the CLI header.

    `claimed_nonperiodic` is a finite test: no period up to `max_period`
    within `tol`. It cannot certify irrationality of theta/pi.
    """
    check = periodicity_check(spec, max_period, tol)
    return {
        "kind": spec.kind.value,
        "bound": potential_bound(spec),
        "period": check.period,
        "claimed_nonperiodic": not check.periodic,
        "max_period": max_period,
        "tol": tol,
    }
