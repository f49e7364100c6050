"""
components/summary_display.py
-----------------------------
Console rendering of run results: potential header, eigenvalue and CDF
summaries, spectrum classification counts, gap lists, moment and
cross-check tables.
"""

from typing import Dict, List, Optional, Sequence

import numpy as np

from app_config import APP_SUBTITLE, APP_TITLE, APP_VERSION, NONPERIODIC_CAVEAT

RULE = "=" * 60


def _banner(title: str) -> None:
    print(f"\n{RULE}")
    print(f"  {title}")
    print(RULE)


def render_header(command: str) -> None:
    print(f"{APP_TITLE} {APP_VERSION} :: {command}")
    print(APP_SUBTITLE)


def render_potential_summary(info: Dict[str, object]) -> None:
    """Bound, detected period and the non-periodicity caveat."""
    _banner("Potential")
    print(f"kind                : {info['kind']}")
    print(f"bound B             : {info['bound']:.6g}")
    if info["period"] is not None:
        print(f"period              : {info['period']} (tol {info['tol']:g})")
    else:
        print(f"claimed_nonperiodic : True (no period up to {info['max_period']}, tol {info['tol']:g})")
        print(NONPERIODIC_CAVEAT)


def render_eigen_summary(n: int, values: np.ndarray, radius: float, resolved: bool) -> None:
    _banner(f"Eigenvalues of T_{n}")
    print(f"range               : [{values[0]:.12g}, {values[-1]:.12g}]")
    print(f"certified radius    : {radius:.3e}")
    print(f"resolved            : {resolved}")


def render_distribution_summary(schedule: Sequence[int], cauchy: np.ndarray,
                                free_distance: Optional[float] = None,
                                richardson: bool = False) -> None:
    _banner("Spectral distribution estimate")
    print(f"schedule            : {', '.join(str(n) for n in schedule)}")
    for (a, b), d in zip(zip(schedule, schedule[1:]), cauchy):
        print(f"sup|F_{b} - F_{a}|".ljust(20) + f": {d:.3e}")
    if richardson:
        print("Richardson diagnostic available (last two dimensions in ratio 2)")
    if free_distance is not None:
        print(f"distance to free law: {free_distance:.3e}")


def render_spectrum_summary(counts: Dict[str, int], h: float, floor: float, cap: int) -> None:
    _banner("Spectrum classification")
    print(f"h = {h:g}, density floor = {floor:g}, gap cap = {cap}")
    for label in ("IN", "GAP", "UND"):
        print(f"{label:<4}: {counts.get(label, 0)} grid points")


def render_gaps(rows: List[Dict[str, object]]) -> None:
    _banner(f"Gaps ({len(rows)})")
    for row in rows:
        label = f"  label k={row['label_k']}" if row.get("label_k") is not None else ""
        print(f"({row['start']:.6f}, {row['end']:.6f}]  max count {row['max_count']}"
              f"  IDS {row['ids']:.6f}{label}")


def render_moment_table(k: np.ndarray, cesaro: np.ndarray, trace: np.ndarray,
                        abs_diff: np.ndarray, flagged: Sequence[int]) -> None:
    _banner("Moments: Cesaro vs trace")
    print(f"{'k':>3} {'cesaro':>20} {'trace':>20} {'abs_diff':>12}")
    for row in zip(k, cesaro, trace, abs_diff):
        mark = "  <-- flagged" if row[0] in flagged else ""
        print(f"{row[0]:>3} {row[1]:>20.12g} {row[2]:>20.12g} {row[3]:>12.3e}{mark}")


def render_mean(value: float, window_radius: int, defect: float, n_offsets: int) -> None:
    print(f"\nvon Neumann mean    : {value:.12g} (radius {window_radius})")
    print(f"uniformity defect   : {defect:.3e} over {n_offsets} offsets")


def render_crosscheck(rows: List[Dict[str, object]]) -> None:
    _banner("Cross-checks")
    for row in rows:
        print(f"{row['check']:<10} parameter {row['parameter']:>6}  "
              f"dimension {row['dimension']:>7}  sup distance {row['sup_distance']:.3e}")


def render_outputs(paths: Sequence[str]) -> None:
    print()
    for path in paths:
        print(f"Saved → {path}")
