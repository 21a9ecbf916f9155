"""Casimir pressure between parallel metal plates.

Lifshitz-theory engines in two equivalent formulations: the Matsubara
sum over imaginary frequencies (totals and TM/TE split) and the
real-frequency evanescent integrals (evanescent/propagating fractions,
the propagating part obtained by difference), for Drude and plasma
permittivities with a Debye permeability model for soft ferromagnets.
"""

from .errors import CasimirPlatesError, ConfigError, ConvergenceError
from .materials import MaterialSpec, eps_imaginary, eps_real, gold, mu_matsubara, mu_real, nickel
from .matsubara import (
    ForceBreakdown,
    NumericsConfig,
    PlateSystem,
    force_polarization_matsubara,
    force_total,
    reference_high_temperature,
    system_for_scenario,
)
from .realfreq import (
    EvanescentResult,
    certify_plasma_null,
    force_breakdown,
    force_evanescent,
    force_propagating,
)
from .reference import (
    classical_limit,
    classical_total,
    ideal_metal_zero_temperature,
    polylog3,
)
from .reflection import (
    DimensionlessPoint,
    ImagAxisPoint,
    r_imag,
    r_real_dimensionless,
    r_zero_frequency,
)
from .sweeps import SweepTable, sweep_forces, sweep_material_response
from .units import (
    CONST,
    ZETA3,
    PhysicalConstants,
    angular_frequency_to_ev,
    ev_to_angular_frequency,
    matsubara_frequency,
)
from .validate import run_validation

__version__ = "0.1.0"

__all__ = [
    "CasimirPlatesError",
    "ConfigError",
    "ConvergenceError",
    "MaterialSpec",
    "eps_imaginary",
    "eps_real",
    "mu_matsubara",
    "mu_real",
    "gold",
    "nickel",
    "ForceBreakdown",
    "NumericsConfig",
    "PlateSystem",
    "force_polarization_matsubara",
    "force_total",
    "reference_high_temperature",
    "system_for_scenario",
    "EvanescentResult",
    "certify_plasma_null",
    "force_breakdown",
    "force_evanescent",
    "force_propagating",
    "classical_limit",
    "classical_total",
    "ideal_metal_zero_temperature",
    "polylog3",
    "DimensionlessPoint",
    "ImagAxisPoint",
    "r_imag",
    "r_real_dimensionless",
    "r_zero_frequency",
    "SweepTable",
    "sweep_forces",
    "sweep_material_response",
    "CONST",
    "ZETA3",
    "PhysicalConstants",
    "angular_frequency_to_ev",
    "ev_to_angular_frequency",
    "matsubara_frequency",
    "run_validation",
    "__version__",
]
