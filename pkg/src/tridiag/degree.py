"""
Finite-window filtration degree: ranks of P_k A - A P_k.

P_k projects onto the first k basis vectors. For a band matrix with lower
bandwidth p and upper bandwidth q the commutator only keeps the blocks
A[:k, k:] and A[k:, :k], so its rank is at most p + q; degrees add under
products.
"""
from dataclasses import dataclass
from typing import Dict, Mapping, Tuple

import numpy as np
import scipy.sparse as sp

from src.tridiag.config import MACHINE_EPS, RANK_TOL_FACTOR


@dataclass(frozen=True, eq=False)
class BandedMatrix:
    """
    Square band matrix stored as {offset: diagonal} (offset > 0 is above
    the main diagonal, the band of offset k has N - |k| entries).
    """

    bands: Mapping[int, np.ndarray]
    dimension: int

    def __post_init__(self):
        bands: Dict[int, np.ndarray] = {}
        for offset, values in self.bands.items():
            values = np.asarray(values, dtype=np.float64)
            if values.size != self.dimension - abs(offset):
                raise ValueError(
                    f"band {offset} has {values.size} entries, "
                    f"expected {self.dimension - abs(offset)}"
                )
            if np.any(values != 0.0):
                bands[int(offset)] = values
        object.__setattr__(self, "bands", bands)

    @classmethod
    def from_sparse(cls, matrix) -> "BandedMatrix":
        dia = sp.dia_matrix(matrix)
        N = dia.shape[0]
        return cls({int(k): matrix.diagonal(int(k)) for k in dia.offsets}, N)

    @classmethod
    def from_dense(cls, dense: np.ndarray) -> "BandedMatrix":
        return cls.from_sparse(sp.csr_matrix(dense))

    @classmethod
    def shift(cls, dimension: int) -> "BandedMatrix":
        """Unilateral shift e_j -> e_{j+1} (one band below the diagonal)."""
        return cls({-1: np.ones(dimension - 1)}, dimension)

    def to_sparse(self) -> sp.csr_matrix:
        if not self.bands:
            return sp.csr_matrix((self.dimension, self.dimension))
        offsets = sorted(self.bands)
        return sp.diags([self.bands[k] for k in offsets], offsets,
                        shape=(self.dimension, self.dimension), format="csr")

    def to_dense(self) -> np.ndarray:
        return self.to_sparse().toarray()

    def __matmul__(self, other: "BandedMatrix") -> "BandedMatrix":
        if other.dimension != self.dimension:
            raise ValueError("dimension mismatch")
        return BandedMatrix.from_sparse(self.to_sparse() @ other.to_sparse())

    @property
    def bandwidths(self) -> Tuple[int, int]:
        """(lower, upper) bandwidths."""
        lower = max([-k for k in self.bands if k < 0], default=0)
        upper = max([k for k in self.bands if k > 0], default=0)
        return lower, upper

    @property
    def bandwidth(self) -> int:
        return max(self.bandwidths)


@dataclass(frozen=True)
class DegreeReport:
    ranks: Tuple[int, ...]
    degree_window: int
    rank_tol: float
    rank_bound: int

    @property
    def within_bound(self) -> bool:
        return all(r <= self.rank_bound for r in self.ranks)


def commutator_with_projection(dense: np.ndarray, k: int) -> np.ndarray:
    """P_k A - A P_k on the full window."""
    C = np.zeros_like(dense)
    C[:k, k:] = dense[:k, k:]
    C[k:, :k] = -dense[k:, :k]
    return C


def filtration_degree_window(A: BandedMatrix, K: int) -> DegreeReport:
    """
    Numerical ranks of P_k A - A P_k for k = 1..K on the N-dimensional window.

    Singular values above 10 * N * eps * ||A||_inf count towards the rank.

    Args:
        A: Band matrix of dimension N.
        K: Largest projection rank, 1 <= K < N.
    """
    N = A.dimension
    if not 1 <= K < N:
        raise ValueError(f"K must satisfy 1 <= K < N={N}, got {K}")
    dense = A.to_dense()
    norm_inf = float(np.max(np.sum(np.abs(dense), axis=1))) if N else 0.0
    rank_tol = RANK_TOL_FACTOR * N * MACHINE_EPS * norm_inf

    ranks = []
    for k in range(1, K + 1):
        C = commutator_with_projection(dense, k)
        ranks.append(int(np.linalg.matrix_rank(C, tol=rank_tol)) if norm_inf > 0 else 0)
    return DegreeReport(ranks=tuple(ranks), degree_window=max(ranks), rank_tol=rank_tol,
                        rank_bound=sum(A.bandwidths))
