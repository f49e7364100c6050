# tridiag package
from src.tridiag.matrix import (  # noqa: F401
    TridiagonalMatrix,
    build_bilateral,
    build_unilateral,
)
from src.tridiag.sturm import pivot_floor, sturm_count, sturm_counts  # noqa: F401
from src.tridiag.bisection import (  # noqa: F401
    EigenvalueList,
    eigenvalues,
    interlacing_violations,
)
from src.tridiag.degree import (  # noqa: F401
    BandedMatrix,
    DegreeReport,
    filtration_degree_window,
)
