# potentials package
from src.potentials.spec import (  # noqa: F401
    PotentialKind,
    PotentialSpec,
    TrigTerm,
    potential_bound,
    potential_from_mapping,
    potential_to_mapping,
)
from src.potentials.sequence import sample_sequence, reduced_angles  # noqa: F401
from src.potentials.means import (  # noqa: F401
    MeanEstimate,
    PeriodicityResult,
    default_offsets,
    describe_potential,
    mean_profile,
    periodicity_check,
    von_neumann_mean,
)
