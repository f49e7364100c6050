"""
Command implementations behind `jacobi-spectra <command>`.

Each command computes through the pure library operations, then writes its
CSV artifacts single-threaded and prints a summary. Returns the written paths.
"""
import logging
import os
from typing import Callable, Dict, List

import numpy as np
import pandas as pd

from app_config import APP_TITLE, APP_VERSION, GAP_LABEL_MAX_K
from components import summary_display as display
from src.cli.run_config import RunConfig, grid_bounds, potential_provenance, resolve_threads
from src.errors import ConfigError
from src.potentials.means import describe_potential, von_neumann_mean
from src.potentials.spec import PotentialKind, PotentialSpec
from src.specmeasure.classify import SpectralClass, classify_spectrum, classify_theta_sweep, find_gaps
from src.specmeasure.crosscheck import bilateral_crosscheck, offset_robustness
from src.specmeasure.distribution import compression_cdf, estimate_distribution, sup_distance
from src.specmeasure.moments import moment_match
from src.specmeasure.oracles import arcsine_cdf, closest_gap_label
from src.tridiag.bisection import eigenvalues
from src.tridiag.matrix import build_unilateral
from src.tridiag.serialization import write_eigenvalues_csv
from utils.file_handler import open_output, write_csv

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# Helpers
# ---------------------------------------------------------------------------

def provenance(config: RunConfig, spec: PotentialSpec) -> List[str]:
    return [f"{APP_TITLE} {APP_VERSION}"] + config.provenance() + potential_provenance(spec)


def make_grid(config: RunConfig, spec: PotentialSpec) -> np.ndarray:
    """Configured grid, defaulting to the padded interval [-(B + 2), B + 2]."""
    lo, hi = grid_bounds(config, spec)
    return np.linspace(lo, hi, config.grid_points)


def nearest_gap_label(spec: PotentialSpec, ids: float):
    """(k, circular distance) of the closest gap label, cosine potentials only."""
    if spec.kind is not PotentialKind.COSINE_COMPOSED:
        return None, None
    return closest_gap_label(spec.theta, ids, GAP_LABEL_MAX_K)


def _label_counts(labels) -> Dict[str, int]:
    return {c.value: sum(1 for lab in labels if lab is c) for c in SpectralClass}


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def run_eigs(config: RunConfig, spec: PotentialSpec, n_jobs: int) -> List[str]:
    n = config.n or config.schedule[-1]
    A = build_unilateral(spec, n, offset=config.offset)
    eigs = eigenvalues(A, config.tol, n_jobs=n_jobs)
    with open_output(config.output_path) as f:
        write_eigenvalues_csv(f, eigs, origin=A.origin, preamble=provenance(config, spec))
    display.render_eigen_summary(n, eigs.values, eigs.certified_radius, eigs.resolved)
    return [config.output_path]


def run_cdf(config: RunConfig, spec: PotentialSpec, n_jobs: int) -> List[str]:
    grid = make_grid(config, spec)
    estimate = estimate_distribution(spec, config.schedule, grid, config.tol,
                                     offset=config.offset, n_jobs=n_jobs)
    free_distance = None
    if spec.kind is PotentialKind.CONSTANT:
        free_distance = sup_distance(estimate.limit_cdf, arcsine_cdf(grid, center=spec.value))
    write_csv(config.output_path, estimate.to_frame(), provenance(config, spec))
    display.render_distribution_summary(estimate.schedule, estimate.cauchy_sups, free_distance,
                                        richardson=estimate.richardson_cdf is not None)
    return [config.output_path]


def run_spectrum(config: RunConfig, spec: PotentialSpec, n_jobs: int) -> List[str]:
    report = classify_spectrum(spec, make_grid(config, spec), config.h, config.schedule,
                               config.density_floor, config.gap_cap, offset=config.offset,
                               n_jobs=n_jobs)
    write_csv(config.output_path, report.to_frame(), provenance(config, spec))
    display.render_spectrum_summary(_label_counts(report.labels), report.h,
                                    report.density_floor, report.gap_cap)
    return [config.output_path]


def run_gaps(config: RunConfig, spec: PotentialSpec, n_jobs: int) -> List[str]:
    report = classify_spectrum(spec, make_grid(config, spec), config.h, config.schedule,
                               config.density_floor, config.gap_cap, offset=config.offset,
                               n_jobs=n_jobs)
    gaps = find_gaps(report)
    A = build_unilateral(spec, config.schedule[-1], offset=config.offset)
    centres = np.array([0.5 * (g.first_center + g.last_center) for g in gaps])
    ids = compression_cdf(A, centres) if gaps else np.zeros(0)

    rows = []
    for gap, value in zip(gaps, ids):
        label_k, label_distance = nearest_gap_label(spec, float(value))
        rows.append({
            "start": gap.start, "end": gap.end,
            "first_center": gap.first_center, "last_center": gap.last_center,
            "max_count": gap.max_count, "ids": float(value),
            "label_k": label_k, "label_distance": label_distance,
        })
    columns = ["start", "end", "first_center", "last_center", "max_count", "ids",
               "label_k", "label_distance"]
    write_csv(config.output_path, pd.DataFrame(rows, columns=columns), provenance(config, spec))
    display.render_gaps(rows)
    return [config.output_path]


def run_moments(config: RunConfig, spec: PotentialSpec, n_jobs: int) -> List[str]:
    report = moment_match(spec, config.schedule, config.K, config.window_radius,
                          tol=config.moment_tol, eig_tol=config.tol, n_jobs=n_jobs)
    mean = von_neumann_mean(spec, config.window_radius, config.offsets)
    frame = report.to_frame()
    write_csv(config.output_path, frame, provenance(config, spec))
    display.render_moment_table(frame["k"].to_numpy(), report.cesaro, report.trace,
                                report.abs_diff, report.flagged.tolist())
    display.render_mean(mean.value, mean.window_radius, mean.uniformity_defect, len(mean.offsets))
    return [config.output_path]


def run_crosscheck(config: RunConfig, spec: PotentialSpec, n_jobs: int) -> List[str]:
    grid = make_grid(config, spec)
    m_schedule = config.m_schedule or [n // 2 for n in config.schedule]
    bilateral = bilateral_crosscheck(spec, m_schedule, grid, n_jobs=n_jobs)

    n_last = config.schedule[-1]
    rows = [{"check": "bilateral", "parameter": m, "dimension": int(d), "sup_distance": s}
            for m, d, s in zip(bilateral.m_schedule, bilateral.dimensions, bilateral.distances)]
    tolerance = None
    if len(config.schedule) > 1:
        estimate = estimate_distribution(spec, config.schedule[-2:], grid, config.tol, n_jobs=n_jobs)
        tolerance = float(estimate.cauchy_sups[-1])
        rows.append({"check": "cauchy", "parameter": config.schedule[-2], "dimension": n_last,
                     "sup_distance": tolerance})
    for shift, distance in offset_robustness(spec, n_last, grid, tolerance=tolerance).items():
        rows.append({"check": "offset", "parameter": shift, "dimension": n_last,
                     "sup_distance": distance})

    write_csv(config.output_path, pd.DataFrame(rows), provenance(config, spec))
    display.render_crosscheck(rows)
    return [config.output_path]


def run_butterfly(config: RunConfig, spec: PotentialSpec, n_jobs: int) -> List[str]:
    """One spectrum CSV per theta/pi in the sweep plus index.csv, under output_path."""
    if spec.kind is not PotentialKind.COSINE_COMPOSED:
        raise ConfigError("butterfly sweeps need kind = cosine", key="potential.kind")
    thetas = np.linspace(config.sweep_min, config.sweep_max, config.sweep_points)
    sweep = classify_theta_sweep(spec, thetas, make_grid(config, spec), config.h, config.schedule,
                                 config.density_floor, config.gap_cap, n_jobs=n_jobs)
    directory = os.path.splitext(config.output_path)[0]
    header = provenance(config, spec)

    paths, index_rows = [], []
    for i, (theta_over_pi, report) in enumerate(sweep):
        name = f"theta_{i:04d}.csv"
        path = write_csv(os.path.join(directory, name), report.to_frame(),
                         header + [f"theta_over_pi = {theta_over_pi:.17g}"])
        paths.append(path)
        counts = _label_counts(report.labels)
        index_rows.append({"index": i, "theta_over_pi": theta_over_pi, "file": name,
                           "in_count": counts["IN"], "gap_count": counts["GAP"],
                           "und_count": counts["UND"]})
    paths.append(write_csv(os.path.join(directory, "index.csv"), pd.DataFrame(index_rows), header))
    logger.info("Butterfly sweep wrote %d files to %s", len(paths), directory)
    return paths


COMMAND_TABLE: Dict[str, Callable[[RunConfig, PotentialSpec, int], List[str]]] = {
    "eigs": run_eigs,
    "cdf": run_cdf,
    "spectrum": run_spectrum,
    "gaps": run_gaps,
    "moments": run_moments,
    "crosscheck": run_crosscheck,
    "butterfly": run_butterfly,
}


def run(config: RunConfig, spec: PotentialSpec) -> List[str]:
    """
    Execute `config.command` and write its artifacts.

    Returns:
        Paths of the written files.
    """
    display.render_header(config.command)
    display.render_potential_summary(describe_potential(spec))
    n_jobs = resolve_threads(config)
    paths = COMMAND_TABLE[config.command](config, spec, n_jobs)
    display.render_outputs(paths)
    return paths
