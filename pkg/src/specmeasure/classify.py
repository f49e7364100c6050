"""
Grid classification into spectrum / gap / undecided.

For I = (x - h, x + h]:
    IN   N_n(I) / n >= density_floor for every n in the tail half of the schedule
    GAP  N_n(I) <= gap_cap for every n in the schedule
    UND  neither, or both (finite data cannot tell linear growth from a bound)
"""
import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Sequence, Tuple

import numpy as np
import pandas as pd

from src.parallel import parallel_map
from src.potentials.spec import PotentialKind, PotentialSpec
from src.specmeasure.config import DENSITY_FLOOR, GAP_CAP
from src.specmeasure.distribution import validate_grid, validate_schedule
from src.tridiag.matrix import build_unilateral
from src.tridiag.sturm import sturm_counts

logger = logging.getLogger(__name__)


class SpectralClass(str, Enum):
    IN = "IN"
    GAP = "GAP"
    UND = "UND"


@dataclass(frozen=True, eq=False)
class SpectrumReport:
    """
    Per-grid-point classification with its evidence.

    `evidence` holds the smallest tail density for IN points, the largest
    count for GAP points and the density at the largest n for UND points.
    `counts[j, i]` is N_{schedule[j]}((grid[i] - h, grid[i] + h]).
    """

    grid: np.ndarray
    labels: Tuple[SpectralClass, ...]
    evidence: np.ndarray
    counts: np.ndarray
    h: float
    schedule: tuple
    density_floor: float
    gap_cap: int

    def mask(self, label: SpectralClass) -> np.ndarray:
        return np.array([lab is label for lab in self.labels], dtype=bool)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            "x": self.grid,
            "class": [lab.value for lab in self.labels],
            "evidence": self.evidence,
            "h": self.h,
            "floor": self.density_floor,
            "cap": self.gap_cap,
        })


@dataclass(frozen=True)
class GapInterval:
    """A maximal run of GAP grid points; (start, end] is the witnessed interval."""

    first_center: float
    last_center: float
    start: float
    end: float
    max_count: int


def interval_counts(spec: PotentialSpec, n: int, grid: np.ndarray, h: float,
                    offset: int = 0) -> np.ndarray:
    """N_n((x - h, x + h]) for every x in grid."""
    A = build_unilateral(spec, n, offset=offset)
    counts = sturm_counts(A, np.concatenate([grid + h, grid - h]))
    return counts[:grid.size] - counts[grid.size:]


def classify_spectrum(spec: PotentialSpec, grid, h: float, schedule: Sequence[int],
                      density_floor: float = DENSITY_FLOOR, gap_cap: int = GAP_CAP,
                      offset: int = 0, n_jobs: int = 1) -> SpectrumReport:
    """
    Classify every grid point from the interval counts along the schedule.

    Args:
        spec: Potential description.
        grid: Strictly increasing centres.
        h: Half-width of the probing interval, > 0.
        schedule: Strictly increasing dimensions.
        density_floor: Positive density threshold.
        gap_cap: Uniform bound on counts for a gap, >= 0.
    """
    if not h > 0:
        raise ValueError(f"h must be > 0, got {h}")
    if not density_floor > 0:
        raise ValueError(f"density_floor must be > 0, got {density_floor}")
    if gap_cap < 0:
        raise ValueError(f"gap_cap must be >= 0, got {gap_cap}")
    schedule = validate_schedule(schedule)
    grid = np.asarray(grid, dtype=np.float64)
    if grid.size > 1:
        grid = validate_grid(grid)

    counts = np.vstack(parallel_map(lambda n: interval_counts(spec, int(n), grid, h, offset),
                                    schedule.tolist(), n_jobs))
    dims = schedule[:, None].astype(np.float64)
    densities = counts / dims
    tail = slice(schedule.size // 2, None)

    in_spectrum = np.all(densities[tail] >= density_floor, axis=0)
    gap = np.max(counts, axis=0) <= gap_cap

    labels: List[SpectralClass] = []
    evidence = np.empty(grid.size)
    for i in range(grid.size):
        if in_spectrum[i] and not gap[i]:
            labels.append(SpectralClass.IN)
            evidence[i] = np.min(densities[tail, i])
        elif gap[i] and not in_spectrum[i]:
            labels.append(SpectralClass.GAP)
            evidence[i] = np.max(counts[:, i])
        else:
            labels.append(SpectralClass.UND)
            evidence[i] = densities[-1, i]
    logger.info("Classified %d points: %d IN, %d GAP, %d UND", grid.size,
                labels.count(SpectralClass.IN), labels.count(SpectralClass.GAP),
                labels.count(SpectralClass.UND))
    return SpectrumReport(grid=grid, labels=tuple(labels), evidence=evidence, counts=counts,
                          h=float(h), schedule=tuple(schedule.tolist()),
                          density_floor=float(density_floor), gap_cap=int(gap_cap))


def find_gaps(report: SpectrumReport) -> List[GapInterval]:
    """Maximal runs of consecutive GAP points."""
    gaps: List[GapInterval] = []
    is_gap = report.mask(SpectralClass.GAP)
    i = 0
    while i < is_gap.size:
        if not is_gap[i]:
            i += 1
            continue
        j = i
        while j + 1 < is_gap.size and is_gap[j + 1]:
            j += 1
        gaps.append(GapInterval(
            first_center=float(report.grid[i]),
            last_center=float(report.grid[j]),
            start=float(report.grid[i] - report.h),
            end=float(report.grid[j] + report.h),
            max_count=int(np.max(report.counts[:, i:j + 1])),
        ))
        i = j + 1
    return gaps


def classify_theta_sweep(base_spec: PotentialSpec, thetas_over_pi: Sequence[float], grid,
                         h: float, schedule: Sequence[int],
                         density_floor: float = DENSITY_FLOOR, gap_cap: int = GAP_CAP,
                         n_jobs: int = 1) -> List[Tuple[float, SpectrumReport]]:
    """
    One SpectrumReport per angle theta = t * pi for a cosine potential
    (the data behind Hofstadter-type diagrams).
    """
    if base_spec.kind is not PotentialKind.COSINE_COMPOSED:
        raise ValueError("theta sweeps need a cosine potential")

    def _one(t: float) -> Tuple[float, SpectrumReport]:
        spec = base_spec.with_angle(theta_over_pi=float(t))
        return float(t), classify_spectrum(spec, grid, h, schedule, density_floor, gap_cap)

    return parallel_map(_one, list(thetas_over_pi), n_jobs)
