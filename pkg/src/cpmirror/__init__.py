"""Casimir-Polder energies for two anisotropic atoms near a conducting plate.

Closed-form two-body and plate-induced three- and four-scattering
energies, a quadrature oracle that recomputes every term from dyadic
propagator traces, and sweep/figure helpers behind the cpmirror CLI.
"""

from .energies import (
    EnergyBreakdown,
    KernelCoefficients,
    ThreeBodyTerms,
    e12,
    e12_over_ecp,
    e_cp,
    energy_breakdown,
    energy_kernel,
    equidistant_terms,
    g_iso,
    kernel_coefficients,
    perp_unequal,
    three_body_terms,
    zonly_unequal,
)
from .errors import CasimirPolderError, GeometryError, InputError, QuadratureError
from .geometry import (
    AtomSpec,
    GeometryDerived,
    SystemConfig,
    derive_geometry,
    diagonal_tensor,
    equidistant_config,
    image_point,
    isotropic_tensor,
    ratio_config,
    reflect_tensor,
)
from .oracle import (
    OracleResult,
    QuadratureSettings,
    Term,
    TermCheck,
    VerificationReport,
    integrand,
    numeric_energy,
    random_configs,
    verify,
)
from .propagators import free_propagator, image_propagator, propagator_polynomials
from .sweeps import CSV_COLUMNS, FIGURE_NAMES, SweepRow, figure_rows, rows_to_csv

__version__ = "0.1.0"

__all__ = [
    "AtomSpec",
    "CSV_COLUMNS",
    "CasimirPolderError",
    "EnergyBreakdown",
    "FIGURE_NAMES",
    "GeometryDerived",
    "GeometryError",
    "InputError",
    "KernelCoefficients",
    "OracleResult",
    "QuadratureError",
    "QuadratureSettings",
    "SweepRow",
    "SystemConfig",
    "Term",
    "TermCheck",
    "ThreeBodyTerms",
    "VerificationReport",
    "derive_geometry",
    "diagonal_tensor",
    "e12",
    "e12_over_ecp",
    "e_cp",
    "energy_breakdown",
    "energy_kernel",
    "equidistant_config",
    "equidistant_terms",
    "figure_rows",
    "free_propagator",
    "g_iso",
    "image_point",
    "image_propagator",
    "integrand",
    "isotropic_tensor",
    "kernel_coefficients",
    "numeric_energy",
    "perp_unequal",
    "propagator_polynomials",
    "random_configs",
    "ratio_config",
    "reflect_tensor",
    "rows_to_csv",
    "three_body_terms",
    "verify",
    "zonly_unequal",
    "__version__",
]
