"""q-deformed oscillator algebra and the deformed laser beam quality factor.

The package implements the root-of-unity deformed oscillator (q-brackets,
finite-dimensional ladder matrices, deformed coherent states), the closed-form
deformed beam quality factor M_q^2 with its admissibility constraints, the
position-space state series, and classical second-moment beam analysis, plus
a CLI (``qbeam``) that emits CSV/JSON.
"""

from .beamquality import (
    BeamGeometry,
    MediumCoupling,
    MediumInference,
    beta_j_inferred,
    golden_table,
    m_eff_squared,
    max_alpha_for_order,
    min_order_for_alpha,
    mq2_closed,
    theta_q,
    uncertainty_closed,
)
from .exceptions import AllZeroIntensity, ConstraintViolation, IngestionError
from .fockspace import (
    CoherentState,
    FockOperators,
    UncertaintyReport,
    build_operators,
    closed_form_gap,
    coherent_state,
    eigen_defect,
    expectation,
    position_momentum,
    uncertainty_exact,
)
from .moments import (
    SampledProfile,
    centroid_and_width,
    divergence,
    m2_from_profiles,
    read_profile_csv,
    synth_gaussian,
    synth_hermite_gaussian,
)
from .qalgebra import (
    Deformation,
    QPowerSeries,
    q_bracket,
    q_bracket_complex,
    q_derive,
    q_double_factorial,
    q_factorial,
)
from .wavefunction import (
    StateSeries,
    annihilation_residual,
    coherent_series,
    evaluate,
    excited_series,
    ground_series,
)

__version__ = "0.1.0"

__all__ = [
    "AllZeroIntensity",
    "BeamGeometry",
    "CoherentState",
    "ConstraintViolation",
    "Deformation",
    "FockOperators",
    "IngestionError",
    "MediumCoupling",
    "MediumInference",
    "QPowerSeries",
    "SampledProfile",
    "StateSeries",
    "UncertaintyReport",
    "annihilation_residual",
    "beta_j_inferred",
    "build_operators",
    "centroid_and_width",
    "closed_form_gap",
    "coherent_series",
    "coherent_state",
    "divergence",
    "eigen_defect",
    "evaluate",
    "excited_series",
    "expectation",
    "golden_table",
    "ground_series",
    "m2_from_profiles",
    "m_eff_squared",
    "max_alpha_for_order",
    "min_order_for_alpha",
    "mq2_closed",
    "position_momentum",
    "q_bracket",
    "q_bracket_complex",
    "q_derive",
    "q_double_factorial",
    "q_factorial",
    "read_profile_csv",
    "synth_gaussian",
    "synth_hermite_gaussian",
    "theta_q",
    "uncertainty_closed",
    "uncertainty_exact",
]
