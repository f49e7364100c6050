"""
Exception hierarchy shared by every jacobi-spectra module.

Concrete errors also derive from ValueError so callers that only expect the
built-in contract keep working.
"""
from typing import Optional, Tuple


class JacobiSpectraError(Exception):
    """Base class for all errors raised by this package."""


class PotentialSpecError(JacobiSpectraError, ValueError):
    """An invalid potential description (bad kind, coefficients, terms...)."""

    def __init__(self, message: str, key: Optional[str] = None):
        super().__init__(message)
        self.key = key


class ExplicitOutOfRange(JacobiSpectraError, ValueError):
    """Requested indices fall outside the samples of an Explicit potential."""

    def __init__(self, lo: int, hi: int, stored: Tuple[int, int]):
        super().__init__(
            f"Indices [{lo}, {hi}] exceed the stored samples "
            f"[{stored[0]}, {stored[1]}] of the explicit potential."
        )
        self.lo = lo
        self.hi = hi
        self.stored = stored


class CertificationError(JacobiSpectraError):
    """A numerical result could not be certified at the requested accuracy."""


class TolTooSmall(CertificationError, ValueError):
    """Bisection tolerance below what round-off allows to certify."""

    def __init__(self, tol: float, floor: float):
        super().__init__(
            f"tol={tol:.3e} is below the certifiable floor {floor:.3e} "
            "(16 * machine epsilon * spectral interval width)."
        )
        self.tol = tol
        self.floor = floor


class UnresolvedEndpoint(CertificationError, ValueError):
    """An interval endpoint lies within the certified radius of an eigenvalue."""

    def __init__(self, endpoint: float, nearest: float, radius: float):
        super().__init__(
            f"Endpoint {endpoint!r} is within the certified radius {radius:.3e} "
            f"of eigenvalue {nearest!r}; perturb the endpoint."
        )
        self.endpoint = endpoint
        self.nearest = nearest
        self.radius = radius


class ConfigError(JacobiSpectraError, ValueError):
    """Invalid run configuration; `key` names the offending entry."""

    def __init__(self, message: str, key: Optional[str] = None):
        super().__init__(f"{key}: {message}" if key else message)
        self.key = key
