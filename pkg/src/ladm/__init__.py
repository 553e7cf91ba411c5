"""Series solver for the relativistic harmonic oscillator.

Public surface: truncated power-series algebra (TimePolynomial), Adomian
polynomial generation, the decomposition recurrence and its closed-form
oscillator series, closed-form periodic approximants, a high-order
reference integrator, and report builders behind the ``ladm`` CLI.
"""

from .adomian import (
    AdomianSequence,
    AnalyticNonlinearity,
    adomian_polynomials,
    lambda_expansion_oracle,
    oscillator_adomian,
    oscillator_kappa,
)
from .approximants import SinusoidSum, eval_sinusoid, hbm, hbm_frequency, tabulated
from .errors import (
    CapabilityError,
    DomainError,
    InsufficientHorizonError,
    LadmError,
    NotTabulatedError,
    OracleError,
)
from .oracle import OracleConfig, OracleTrajectory, energy, integrate, period, sample_on_grid
from .report import ComparisonReport, build_report, sweep_csv
from .series import TimePolynomial
from .solver import (
    OSCILLATOR,
    IVPSpec,
    SeriesSolution,
    oscillator_series,
    residual,
    series_frequency,
    solve_ivp,
    tail_bound,
)

__version__ = "0.1.0"

__all__ = [
    "AdomianSequence",
    "AnalyticNonlinearity",
    "CapabilityError",
    "ComparisonReport",
    "DomainError",
    "IVPSpec",
    "InsufficientHorizonError",
    "LadmError",
    "NotTabulatedError",
    "OSCILLATOR",
    "OracleConfig",
    "OracleError",
    "OracleTrajectory",
    "SeriesSolution",
    "SinusoidSum",
    "TimePolynomial",
    "adomian_polynomials",
    "build_report",
    "energy",
    "eval_sinusoid",
    "hbm",
    "hbm_frequency",
    "integrate",
    "lambda_expansion_oracle",
    "oscillator_adomian",
    "oscillator_kappa",
    "oscillator_series",
    "period",
    "residual",
    "sample_on_grid",
    "series_frequency",
    "solve_ivp",
    "sweep_csv",
    "tabulated",
    "tail_bound",
]
