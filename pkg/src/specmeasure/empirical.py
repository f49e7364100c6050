"""
Empirical spectral measures n^-1 sum delta_{lambda_i} and their functionals.
"""
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np
from numpy.polynomial import polynomial as P

from src.errors import UnresolvedEndpoint
from src.tridiag.bisection import EigenvalueList


@dataclass(frozen=True)
class PiecewisePolynomial:
    """
    f(x) = polyval(x, pieces[j]) on the j-th piece.

    `breakpoints` b_1 < ... < b_m split the line into m + 1 pieces
    (-inf, b_1], (b_1, b_2], ..., (b_m, inf); `pieces` holds ascending
    coefficients for each of them.
    """

    breakpoints: Tuple[float, ...]
    pieces: Tuple[Tuple[float, ...], ...]

    def __post_init__(self):
        if len(self.pieces) != len(self.breakpoints) + 1:
            raise ValueError("need exactly one piece more than breakpoints")
        if any(b >= c for b, c in zip(self.breakpoints, self.breakpoints[1:])):
            raise ValueError("breakpoints must be strictly increasing")

    @classmethod
    def constant(cls, c: float) -> "PiecewisePolynomial":
        return cls((), ((float(c),),))

    @classmethod
    def monomial(cls, k: int) -> "PiecewisePolynomial":
        return cls((), (tuple([0.0] * k + [1.0]),))

    @classmethod
    def polynomial(cls, coeffs: Sequence[float]) -> "PiecewisePolynomial":
        return cls((), (tuple(float(c) for c in coeffs),))

    @classmethod
    def indicator(cls, a: float, b: float) -> "PiecewisePolynomial":
        """Indicator of (a, b]."""
        return cls((float(a), float(b)), ((0.0,), (1.0,), (0.0,)))

    def __call__(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=np.float64)
        which = np.searchsorted(np.asarray(self.breakpoints), x, side="left")
        out = np.empty_like(x)
        for j, coeffs in enumerate(self.pieces):
            mask = which == j
            out[mask] = P.polyval(x[mask], np.asarray(coeffs))
        return out


@dataclass(frozen=True, eq=False)
class EmpiricalMeasure:
    """The probability measure n^-1 N_n built from one eigenvalue list."""

    values: EigenvalueList

    @property
    def n(self) -> int:
        return self.values.n

    def cdf(self, x) -> np.ndarray:
        """N_n((-inf, x]) / n, right-continuous."""
        return self.values.count_le(x) / self.n

    def total_mass(self) -> float:
        return cesaro_functional(self, PiecewisePolynomial.constant(1.0))


def cesaro_functional(E: EmpiricalMeasure, f: PiecewisePolynomial) -> float:
    """(1/n) * (f(lambda_1) + ... + f(lambda_n))."""
    return float(np.mean(f(E.values.values)))


def _check_endpoint(E: EmpiricalMeasure, endpoint: float) -> None:
    eigs = E.values
    nearest = eigs.values[np.argmin(np.abs(eigs.values - endpoint))]
    if abs(nearest - endpoint) <= eigs.certified_radius:
        raise UnresolvedEndpoint(float(endpoint), float(nearest), eigs.certified_radius)


def counting(E: EmpiricalMeasure, a: float, b: float) -> int:
    """
    N_n((a, b]): number of eigenvalues in the half-open interval.

    Raises:
        ValueError: If a >= b.
        UnresolvedEndpoint: If an endpoint is within the certified radius
            of an eigenvalue.
    """
    if not a < b:
        raise ValueError(f"need a < b, got a={a}, b={b}")
    _check_endpoint(E, a)
    _check_endpoint(E, b)
    return int(E.values.count_le(b) - E.values.count_le(a))
