"""Series solutions of x'' + N(x) = 0 by the decomposition recurrence.

The recurrence is executed entirely in the time domain: on a factorial-
scaled monomial the transform round-trip that sends A_n to its double
primitive is exactly a degree shift by two, so

    x_0 = alpha + beta t,
    x_{n+1} = -double_integrate(A_n).

For the relativistic oscillator (tagged specs) the sequence collapses to
a pure scaling A_m = kappa x_m with kappa = (1 - beta^2)^(3/2), which
yields the closed component formula

    x_n = beta (-kappa)^n t^(2n+1) / (2n+1)!

``oscillator_series`` builds that directly; ``solve_ivp`` runs the
recurrence; the two must agree term for term.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

from .adomian import (
    AnalyticNonlinearity,
    adomian_polynomials,
    oscillator_adomian,
    oscillator_kappa,
)
from .errors import DomainError
from .series import TimePolynomial

OSCILLATOR = "relativistic-oscillator"


@dataclass(frozen=True)
class IVPSpec:
    """Initial data x(0)=alpha, x'(0)=beta plus the nonlinearity.

    ``nonlinearity`` is either an AnalyticNonlinearity or the OSCILLATOR
    tag string selecting the frozen-coefficient oscillator sequence.
    """

    alpha: float
    beta: float
    nonlinearity: AnalyticNonlinearity | str

    def __post_init__(self) -> None:
        if self.is_oscillator:
            if self.alpha != 0.0:
                raise DomainError("oscillator problems require alpha = 0")
            oscillator_kappa(self.beta)  # validates 0 < beta < 1
        elif not isinstance(self.nonlinearity, AnalyticNonlinearity):
            raise DomainError(f"unknown nonlinearity tag {self.nonlinearity!r}")

    @property
    def is_oscillator(self) -> bool:
        return self.nonlinearity == OSCILLATOR

    @classmethod
    def oscillator(cls, beta: float) -> "IVPSpec":
        return cls(alpha=0.0, beta=beta, nonlinearity=OSCILLATOR)


@dataclass(frozen=True)
class SeriesSolution:
    """Ordered components x_0..x_{n_terms-1} of a series solution."""

    components: tuple[TimePolynomial, ...]
    beta: float
    n_terms: int
    kappa: float | None = None  # set for oscillator solutions only

    def __post_init__(self) -> None:
        if self.n_terms != len(self.components):
            raise ValueError("n_terms must equal len(components)")

    @property
    def is_oscillator(self) -> bool:
        return self.kappa is not None

    def partial_sum(self, k: int) -> TimePolynomial:
        """Sum of components 0..k (inclusive)."""
        if not 0 <= k < self.n_terms:
            raise IndexError(f"k must be in [0, {self.n_terms - 1}], got {k}")
        total = TimePolynomial.zero()
        for comp in self.components[: k + 1]:
            total = total + comp
        return total

    def full_sum(self) -> TimePolynomial:
        return self.partial_sum(self.n_terms - 1)

    def eval(self, t: float) -> float:
        return self.full_sum().eval(t)


def solve_ivp(spec: IVPSpec, n_terms: int, max_degree: int | None = None) -> SeriesSolution:
    """Run the decomposition recurrence for n_terms components."""
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    if max_degree is None:
        max_degree = 2 * n_terms + 1
    x0 = TimePolynomial.from_dict({0: spec.alpha, 1: spec.beta})
    components = [x0]
    if spec.is_oscillator:
        kappa = oscillator_kappa(spec.beta)
        for m in range(n_terms - 1):
            a_m = oscillator_adomian(m, components[m], spec.beta)
            components.append(-a_m.double_integrate())
        return SeriesSolution(
            components=tuple(components), beta=spec.beta, n_terms=n_terms, kappa=kappa
        )
    for n in range(n_terms - 1):
        a_n = adomian_polynomials(spec.nonlinearity, components, n, max_degree)[n]
        components.append(-a_n.double_integrate().truncate(max_degree + 2))
    return SeriesSolution(components=tuple(components), beta=spec.beta, n_terms=n_terms)


def oscillator_series(beta: float, n_terms: int) -> SeriesSolution:
    """Closed-form oscillator components beta (-kappa)^n t^(2n+1)/(2n+1)!."""
    kappa = oscillator_kappa(beta)
    if n_terms < 1:
        raise DomainError("n_terms must be >= 1")
    components = []
    coeff = beta
    for n in range(n_terms):
        components.append(TimePolynomial.monomial(2 * n + 1, coeff))
        coeff *= -kappa
    return SeriesSolution(
        components=tuple(components), beta=beta, n_terms=n_terms, kappa=kappa
    )


def series_frequency(beta: float) -> float:
    """Fundamental frequency (1 - beta^2)^(3/4) of the summed series."""
    return math.sqrt(oscillator_kappa(beta))


def tail_bound(sol: SeriesSolution, t: float) -> float:
    """Alternating-series remainder bound for a truncated oscillator series.

    Returns beta * kappa^n_terms * |t|^(2 n_terms + 1) / (2 n_terms + 1)!,
    the magnitude of the first omitted component.  It bounds the true
    truncation error once kappa t^2 < (2 n_terms + 2)(2 n_terms + 3), i.e.
    while the omitted terms still decrease; outside that range a warning
    is emitted and the returned value is not a rigorous bound.
    """
    if not sol.is_oscillator:
        raise DomainError("tail_bound applies to oscillator solutions only")
    n = sol.n_terms
    if sol.kappa * t * t >= (2 * n + 2) * (2 * n + 3):
        warnings.warn(
            f"alternating-series condition fails at t={t}; bound not rigorous",
            stacklevel=2,
        )
    # accumulate |t|^(2n+1)/(2n+1)! by ratios to avoid overflow
    power = 1.0
    at = abs(t)
    for j in range(1, 2 * n + 2):
        power *= at / j
    return sol.beta * sol.kappa**n * power


def residual(sol: SeriesSolution, t: float) -> float:
    """|x'' + (1 - x'^2)^(3/2) x| for the full partial sum at time t.

    Measured against the exact nonlinear oscillator equation, not the
    frozen-coefficient linearization the recurrence actually solves, so
    this reports the honest defect of the truncated series.
    """
    if not sol.is_oscillator:
        raise DomainError("residual applies to oscillator solutions only")
    p = sol.full_sum()
    dp = p.derivative()
    x = p.eval(t)
    v = dp.eval(t)
    a = dp.derivative().eval(t)
    return abs(a + (1.0 - v * v) ** 1.5 * x)
