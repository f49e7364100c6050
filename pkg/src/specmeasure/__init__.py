# specmeasure package
from src.specmeasure.empirical import (  # noqa: F401
    EmpiricalMeasure,
    PiecewisePolynomial,
    cesaro_functional,
    counting,
)
from src.specmeasure.distribution import (  # noqa: F401
    SpectralDistributionEstimate,
    compression_cdf,
    estimate_distribution,
    sup_distance,
)
from src.specmeasure.moments import (  # noqa: F401
    MomentMatchReport,
    TraceMoments,
    moment_match,
    trace_moments,
)
from src.specmeasure.classify import (  # noqa: F401
    SpectralClass,
    SpectrumReport,
    classify_spectrum,
    classify_theta_sweep,
    find_gaps,
)
from src.specmeasure.crosscheck import (  # noqa: F401
    CrosscheckReport,
    bilateral_crosscheck,
    offset_robustness,
)
