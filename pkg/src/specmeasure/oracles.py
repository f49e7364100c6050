"""
Closed-form references for the free operator (d = 0) and for
cosine-potential gap labels.
"""
import itertools
from math import comb
from typing import Tuple

import numpy as np


def free_eigenvalues(n: int) -> np.ndarray:
    """Eigenvalues 2 cos(k pi / (n + 1)), k = 1..n, in increasing order."""
    k = np.arange(n, 0, -1)
    return 2.0 * np.cos(k * np.pi / (n + 1))


def arcsine_cdf(x, center: float = 0.0) -> np.ndarray:
    """Integrated density of states of the free operator shifted by `center`."""
    t = np.clip((np.asarray(x, dtype=np.float64) - center) / 2.0, -1.0, 1.0)
    return np.arccos(-t) / np.pi


def arcsine_mass(a: float, b: float, center: float = 0.0) -> float:
    """Free spectral measure of (a, b]."""
    return float(arcsine_cdf(b, center) - arcsine_cdf(a, center))


def central_binomial_moments(K: int) -> np.ndarray:
    """tau(T^k) for d = 0: C(k, k/2) for even k, 0 for odd k."""
    return np.array([comb(k, k // 2) if k % 2 == 0 else 0 for k in range(K + 1)], dtype=np.float64)


def walk_count(k: int) -> int:
    """Number of length-k walks with steps +-1 that return to the origin (brute force)."""
    return sum(1 for steps in itertools.product((-1, 1), repeat=k) if sum(steps) == 0)


def _label_table(theta: float, max_k: int):
    k = np.arange(-max_k, max_k + 1)
    return k, np.mod(k * theta / (2.0 * np.pi), 1.0)


def gap_labels(theta: float, max_k: int) -> np.ndarray:
    """
    Sorted values {k theta / (2 pi)} mod 1 for |k| <= max_k.

    For d_n = v(cos(n theta)) the integrated density of states is constant
    on every spectral gap and equals one of these values.
    """
    _, labels = _label_table(theta, max_k)
    return np.unique(np.concatenate([labels, [1.0]]))


def closest_gap_label(theta: float, ids: float, max_k: int) -> Tuple[int, float]:
    """(k, circular distance on [0, 1)) of the label {k theta / (2 pi)} closest to `ids`."""
    k, labels = _label_table(theta, max_k)
    offset = np.abs(ids - labels)
    distance = np.minimum(offset, 1.0 - offset)
    best = int(np.argmin(distance))
    return int(k[best]), float(distance[best])
