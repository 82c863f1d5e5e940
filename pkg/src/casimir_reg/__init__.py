"""Regularized Casimir vacuum energies and energy densities.

Integrating a regularized energy density over the region between plates
does not in general reproduce the regularized total energy; this package
computes both orders of operations for confined scalar and electromagnetic
fields and classifies where they disagree.
"""

from .config import SystemConfig, SystemKind, load_config
from .densities import (
    DensityKind,
    StructuredDensity,
    F_theta,
    as_structured,
    eh_scalar_density,
    em_B2,
    em_E2,
    halfspace_fluctuations,
    scalar_uB,
    scalar_uE,
    wick_first_order_density,
)
from .energies import (
    ComparisonReport,
    DivergenceReport,
    compare_orders,
    eh_total_energy,
    em_eh_total_energy,
    integrate_then_regularize_uE,
    mode_sum_energy,
    regularize_then_integrate,
)
from .exceptions import (
    BoundarySingularityError,
    CasimirError,
    ConfigError,
    FitFailure,
    InvalidArgument,
    UnsupportedSystem,
)
from .regsum import (
    CutoffGrid,
    RegularizedValue,
    cutoff_sum_finite_part,
    oscillatory_sum,
    zeta_negative_integer,
)
from .spectra import ModeSpectrum, eigenmode, mode_frequency, mode_weights

__version__ = "0.1.0"
