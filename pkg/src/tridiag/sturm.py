"""
Sturm-sequence (LDL^T inertia) eigenvalue counting.

N(x) = #{eigenvalues <= x} equals the number of negative pivots of
T - xI in the recurrence
    q_1 = d_1 - x,   q_{k+1} = (d_{k+1} - x) - 1 / q_k.
A pivot with |q_k| below the floor is replaced by -floor, which keeps
counts monotone in x and treats x as an upper bound of a tied eigenvalue.
"""
import numpy as np

from src.tridiag.config import MACHINE_EPS, PIVOT_FLOOR_FACTOR
from src.tridiag.matrix import TridiagonalMatrix


def pivot_floor(A: TridiagonalMatrix) -> float:
    lo, hi = A.gershgorin_interval()
    return PIVOT_FLOOR_FACTOR * MACHINE_EPS * (hi - lo)


def sturm_counts(A: TridiagonalMatrix, xs) -> np.ndarray:
    """
    Vectorized Sturm count at every threshold in `xs`.

    Args:
        A: Unit off-diagonal tridiagonal matrix.
        xs: Finite thresholds (any shape).

    Returns:
        Integer array of the shape of `xs`.
    """
    xs = np.asarray(xs, dtype=np.float64)
    if not np.all(np.isfinite(xs)):
        raise ValueError("thresholds must be finite")
    flat = xs.ravel()
    floor = pivot_floor(A)
    d = A.diag

    count = np.zeros(flat.shape, dtype=np.int64)
    q = d[0] - flat
    q[np.abs(q) < floor] = -floor
    count += q < 0
    for k in range(1, d.size):
        q = (d[k] - flat) - 1.0 / q
        q[np.abs(q) < floor] = -floor
        count += q < 0
    return count.reshape(xs.shape)


def sturm_count(A: TridiagonalMatrix, x: float) -> int:
    """Number of eigenvalues of A in (-inf, x]."""
    return int(sturm_counts(A, np.array([x]))[0])
