"""Modified quadratic Lorenz system: model, integrators, and analysis.

A small numerical library for the three-dimensional flow

    dx/dt = sigma * (y * z - x)
    dy/dt = rho * x - x * z
    dz/dt = (x * y) ** 2 - beta * z

with classical RK4 and multiplicative (geometric/bigeometric) RK4
integrators, equilibrium/stability analysis via closed-form 3x3
eigenvalues, Benettin Lyapunov spectra with Kaplan-Yorke dimension, and a
CSV/JSON command line front end (``mqlorenz``).
"""

from .analysis import (
    DEFAULT_INIT,
    BenettinSettings,
    Equilibrium,
    EquilibriumLabel,
    LyapunovSpectrum,
    StabilityClass,
    StabilityReport,
    SweepCell,
    SweepReport,
    classify_stability,
    find_equilibria,
    kaplan_yorke,
    lyapunov_spectrum,
    sweep_beta,
    volume_contraction_check,
)
from .errors import BlowUpError, DegenerateFrameError, ZeroCoordinateError
from .integrators import (
    BLOWUP_LIMIT,
    MulKind,
    SimSettings,
    Trajectory,
    bigeometric_rk4_step,
    geometric_rk4_step,
    integrate,
    integrate_multiplicative,
    rk4_step,
    variational_rk4_step,
)
from .io import ReportDocument, csv_text, json_text, read_csv, write_csv, write_json
from .linalg3 import (
    characteristic_coeffs,
    cubic_roots,
    det3,
    eigenvalues3,
    gram_schmidt3,
)
from .model import (
    SystemParams,
    apply_symmetry,
    bigeometric_exponent,
    divergence,
    geometric_exponent,
    jacobian,
    vector_field,
)

__version__ = "0.1.0"

__all__ = [
    "BLOWUP_LIMIT",
    "DEFAULT_INIT",
    "BenettinSettings",
    "BlowUpError",
    "DegenerateFrameError",
    "Equilibrium",
    "EquilibriumLabel",
    "LyapunovSpectrum",
    "MulKind",
    "ReportDocument",
    "SimSettings",
    "StabilityClass",
    "StabilityReport",
    "SweepCell",
    "SweepReport",
    "SystemParams",
    "Trajectory",
    "ZeroCoordinateError",
    "apply_symmetry",
    "bigeometric_exponent",
    "bigeometric_rk4_step",
    "characteristic_coeffs",
    "classify_stability",
    "csv_text",
    "cubic_roots",
    "det3",
    "divergence",
    "eigenvalues3",
    "find_equilibria",
    "geometric_exponent",
    "geometric_rk4_step",
    "gram_schmidt3",
    "integrate",
    "integrate_multiplicative",
    "jacobian",
    "json_text",
    "kaplan_yorke",
    "lyapunov_spectrum",
    "read_csv",
    "rk4_step",
    "sweep_beta",
    "variational_rk4_step",
    "vector_field",
    "volume_contraction_check",
    "write_csv",
    "write_json",
]
