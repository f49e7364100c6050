"""
Finite compressions of the bilateral operator T e_n = e_{n-1} + d_n e_n + e_{n+1}.
"""
from dataclasses import dataclass
from typing import Tuple

import numpy as np
import scipy.sparse as sp

from src.potentials.sequence import sample_sequence
from src.potentials.spec import PotentialSpec
from src.tridiag.config import OFFDIAG_VALUE


@dataclass(frozen=True, eq=False)
class TridiagonalMatrix:
    """
    Symmetric tridiagonal matrix with unit off-diagonals.

    Attributes:
        diag: Diagonal entries (read-only array).
        origin: Bilateral index of diag[0]; 1 for unilateral compressions,
            -m for the bilateral window of radius m.
    """

    diag: np.ndarray
    origin: int = 1

    offdiag_value = OFFDIAG_VALUE

    def __post_init__(self):
        diag = np.array(self.diag, dtype=np.float64)
        if diag.ndim != 1 or diag.size < 1:
            raise ValueError("diag must be a nonempty 1-D array")
        if not np.all(np.isfinite(diag)):
            raise ValueError("diag must be finite")
        diag.setflags(write=False)
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "origin", int(self.origin))

    @property
    def n(self) -> int:
        return int(self.diag.size)

    def gershgorin_interval(self) -> Tuple[float, float]:
        """Interval [min(diag) - 2, max(diag) + 2] containing every eigenvalue."""
        return float(self.diag.min()) - 2.0, float(self.diag.max()) + 2.0

    def leading(self, k: int) -> "TridiagonalMatrix":
        """Leading k x k principal submatrix."""
        if not 1 <= k <= self.n:
            raise ValueError(f"k must lie in [1, {self.n}], got {k}")
        return TridiagonalMatrix(self.diag[:k], origin=self.origin)

    def to_sparse(self) -> sp.csr_matrix:
        off = np.full(self.n - 1, self.offdiag_value)
        return sp.diags([off, self.diag, off], [-1, 0, 1], shape=(self.n, self.n), format="csr")

    def to_dense(self) -> np.ndarray:
        return self.to_sparse().toarray()

    def to_banded(self):
        from src.tridiag.degree import BandedMatrix
        return BandedMatrix.from_sparse(self.to_sparse())


def build_unilateral(spec: PotentialSpec, n: int, offset: int = 0) -> TridiagonalMatrix:
    """
    Unilateral n x n compression with diagonal d_{1+s}, ..., d_{n+s}.

    Args:
        spec: Potential description.
        n: Dimension >= 1.
        offset: Window shift s (0 gives the standard d_1 .. d_n).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    first = 1 + int(offset)
    return TridiagonalMatrix(sample_sequence(spec, first, first + n - 1), origin=first)


def build_bilateral(spec: PotentialSpec, m: int) -> TridiagonalMatrix:
    """Bilateral (2m+1) x (2m+1) compression over indices -m .. m."""
    if m < 0:
        raise ValueError(f"m must be >= 0, got {m}")
    return TridiagonalMatrix(sample_sequence(spec, -m, m), origin=-m)
