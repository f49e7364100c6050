"""
Sampling of d_n over an index range.

Angles n*theta are reduced modulo 2*pi in two-word (double-double)
arithmetic so that cos(n*theta) keeps ~1e-15 absolute accuracy for
|n| up to 1e7 on every platform.
"""
from typing import Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from src.errors import ExplicitOutOfRange
from src.potentials.config import (
    PI_HI,
    PI_MID,
    SPLITTER,
    TWO_PI_HI,
    TWO_PI_LO,
    TWO_PI_MID,
)
from src.potentials.spec import PotentialKind, PotentialSpec


def _split(a: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    t = SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def _two_prod(a: np.ndarray, b: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Exact product a*b = p + e (Dekker)."""
    p = a * b
    a_hi, a_lo = _split(a)
    b_hi, b_lo = _split(b)
    e = ((a_hi * b_hi - p) + a_hi * b_lo + a_lo * b_hi) + a_lo * b_lo
    return p, e


def angle_words(theta: float, theta_over_pi=None) -> Tuple[float, float]:
    """Two-word representation (hi, lo) of the angle."""
    if theta_over_pi is None:
        return float(theta), 0.0
    t = np.float64(theta_over_pi)
    hi, lo = _two_prod(t, np.float64(PI_HI))
    lo = lo + t * PI_MID
    s = hi + lo
    return float(s), float(lo - (s - hi))


def reduced_angles(n: np.ndarray, theta_hi: float, theta_lo: float = 0.0) -> np.ndarray:
    """
    Return n*theta reduced to roughly [-pi, pi].

    Args:
        n: Integer indices (|n| < 2**31 keeps every step exact).
        theta_hi, theta_lo: Two-word angle.
    """
    nf = np.asarray(n, dtype=np.float64)
    p, e = _two_prod(nf, np.full_like(nf, theta_hi))
    e = e + nf * theta_lo
    k = np.rint((p + e) / TWO_PI_HI)
    kp, ke = _two_prod(k, np.full_like(k, TWO_PI_HI))
    r = p - kp
    return r + ((e - ke) - k * TWO_PI_MID - k * TWO_PI_LO)


def sample_sequence(spec: PotentialSpec, lo: int, hi: int) -> np.ndarray:
    """
    Return d_lo, ..., d_hi as a float64 array.

    Args:
        spec: Potential description.
        lo, hi: Inclusive index range, lo <= hi.

    Raises:
        ValueError: If lo > hi.
        ExplicitOutOfRange: If an Explicit spec does not cover [lo, hi].
    """
    lo, hi = int(lo), int(hi)
    if lo > hi:
        raise ValueError(f"lo={lo} must not exceed hi={hi}")
    n = np.arange(lo, hi + 1, dtype=np.int64)

    if spec.kind is PotentialKind.CONSTANT:
        return np.full(n.shape, spec.value, dtype=np.float64)

    if spec.kind is PotentialKind.EXPLICIT:
        first, last = spec.stored_range
        if lo < first or hi > last:
            raise ExplicitOutOfRange(lo, hi, spec.stored_range)
        return np.asarray(spec.samples[lo - first:hi - first + 1], dtype=np.float64)

    if spec.kind is PotentialKind.COSINE_COMPOSED:
        theta_hi, theta_lo = angle_words(spec.theta, spec.theta_over_pi)
        x = np.cos(reduced_angles(n, theta_hi, theta_lo))
        return P.polyval(x, np.asarray(spec.coeffs))

    out = np.zeros(n.shape, dtype=np.float64)
    for term in spec.terms:
        angle = reduced_angles(n, term.frequency) + term.phase
        out += term.amplitude * np.cos(angle)
    return out
