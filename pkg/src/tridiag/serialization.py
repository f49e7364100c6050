"""
CSV codec for diagonals and eigenvalue lists.

Format: `#` comment lines (the first one `# n=..., origin=..., tol=...`),
then one 17-significant-digit value per line, LF line endings.
"""
import io
import re
from typing import Iterable, Optional, TextIO

import numpy as np
import pandas as pd

from src.tridiag.bisection import EigenvalueList
from src.tridiag.config import FLOAT_FORMAT
from src.tridiag.matrix import TridiagonalMatrix

_HEADER_RE = re.compile(r"^#\s*n=(\d+),\s*origin=(-?\d+),\s*tol=(\S+)")


def _write_column(stream: TextIO, header: str, values: np.ndarray,
                  preamble: Optional[Iterable[str]] = None) -> None:
    for line in preamble or ():
        stream.write(f"# {line}\n")
    stream.write(header + "\n")
    pd.Series(values).to_csv(stream, header=False, index=False,
                             float_format=FLOAT_FORMAT, lineterminator="\n")


def write_matrix_csv(stream: TextIO, A: TridiagonalMatrix,
                     preamble: Optional[Iterable[str]] = None) -> None:
    """Write the diagonal of A (off-diagonals are implicitly 1)."""
    _write_column(stream, f"# n={A.n}, origin={A.origin}, tol=nan", A.diag, preamble)


def write_eigenvalues_csv(stream: TextIO, eigs: EigenvalueList, origin: int,
                          preamble: Optional[Iterable[str]] = None) -> None:
    header = (f"# n={eigs.n}, origin={origin}, tol={eigs.tol:.17g}, "
              f"certified_radius={eigs.certified_radius:.17g}, resolved={eigs.resolved}")
    _write_column(stream, header, eigs.values, preamble)


def read_eigenvalues_csv(stream: TextIO) -> EigenvalueList:
    """Parse a file written by `write_eigenvalues_csv`."""
    text = stream.read()
    tol, radius, resolved = np.nan, 0.0, True
    for line in text.splitlines():
        match = _HEADER_RE.match(line)
        if match:
            tol = float(match.group(3).rstrip(","))
            fields = dict(part.strip().split("=", 1) for part in line[1:].split(",") if "=" in part)
            radius = float(fields.get("certified_radius", radius))
            resolved = fields.get("resolved", "True") == "True"
    frame = pd.read_csv(io.StringIO(text), comment="#", header=None, dtype=np.float64,
                        float_precision="round_trip")
    return EigenvalueList(values=frame[0].to_numpy(), certified_radius=radius,
                          tol=tol, resolved=resolved)
