"""Adomian polynomial sequences.

Two constructions live here:

* ``adomian_polynomials`` -- the generic sequence A_0..A_k for a
  nonlinearity N(x), obtained from the lambda-expansion definition
  A_n = (1/n!) d^n/dlambda^n N(sum_i x_i lambda^i) | lambda=0,
  realized as truncated series composition.  For orders <= 4 this
  reproduces the classical closed forms (A_0 = N(x_0),
  A_1 = x_1 N'(x_0), ...).

* ``oscillator_adomian`` -- the frozen-coefficient sequence used for the
  relativistic oscillator, A_m = kappa * x_m with kappa = (1-beta^2)^(3/2).
  Note this treats the velocity factor as the constant (1 - beta^2)^(3/2)
  throughout; it is not the standard Adomian expansion of the full
  velocity-dependent nonlinearity, and the two are reconciled nowhere in
  this package (the series it generates is the deliverable).

``lambda_expansion_oracle`` is an independent finite-difference check of
the generic construction, kept deliberately free of any series algebra.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .errors import CapabilityError, DomainError
from .series import TimePolynomial


@dataclass(frozen=True)
class AnalyticNonlinearity:
    """A scalar analytic nonlinearity N with derivatives on demand.

    ``deriv_fn(u, j)`` must return N^(j)(u); ``deriv_fn(u, 0)`` is N(u).
    ``max_order`` of None means every order is available.
    """

    name: str
    deriv_fn: Callable[[float, int], float]
    max_order: int | None = None

    def deriv(self, u: float, j: int) -> float:
        if j < 0:
            raise ValueError("derivative order must be >= 0")
        if self.max_order is not None and j > self.max_order:
            raise CapabilityError(
                f"nonlinearity {self.name!r} supports derivatives up to "
                f"order {self.max_order}, got {j}"
            )
        return self.deriv_fn(u, j)

    def __call__(self, u: float) -> float:
        return self.deriv(u, 0)

    # common instances used throughout the tests and the generic solver

    @classmethod
    def power(cls, p: int) -> "AnalyticNonlinearity":
        """N(x) = x**p for integer p >= 1."""

        def d(u: float, j: int) -> float:
            if j > p:
                return 0.0
            return math.perm(p, j) * u ** (p - j)

        return cls(name=f"x^{p}", deriv_fn=d)

    @classmethod
    def linear(cls) -> "AnalyticNonlinearity":
        return cls.power(1)

    @classmethod
    def exp(cls) -> "AnalyticNonlinearity":
        return cls(name="exp", deriv_fn=lambda u, j: math.exp(u))


@dataclass(frozen=True)
class AdomianSequence:
    """Ordered polynomials A_0..A_k plus the construction they came from."""

    polys: tuple[TimePolynomial, ...]
    source: str = "generic"  # "generic" | "oscillator-paper"

    def __len__(self) -> int:
        return len(self.polys)

    def __getitem__(self, n: int) -> TimePolynomial:
        return self.polys[n]


def _compose_derivative(
    nonlin: AnalyticNonlinearity, k: int, x0: TimePolynomial, max_degree: int
) -> TimePolynomial:
    """N^(k)(x0(t)) as a TimePolynomial, Taylor-expanded about x0(0)."""
    c0 = x0.coeff(0)
    w = x0 - TimePolynomial.constant(c0)  # no constant term
    result = TimePolynomial.constant(nonlin.deriv(c0, k))
    pw = TimePolynomial.constant(1.0)
    for j in range(1, max_degree + 1):
        pw = pw.mul_truncated(w, max_degree)
        if not pw:
            break
        result = result + pw.scale(nonlin.deriv(c0, k + j) / math.factorial(j))
    return result


def adomian_polynomials(
    nonlin: AnalyticNonlinearity,
    components: Sequence[TimePolynomial],
    order: int,
    max_degree: int,
) -> AdomianSequence:
    """Generic Adomian polynomials A_0..A_order for N(x).

    Expands N(sum_i x_i lambda^i) as a series in lambda with
    TimePolynomial coefficients (truncated at max_degree in t) and reads
    off the lambda-Taylor coefficients.
    """
    if not components:
        raise DomainError("components must be non-empty")
    if not 0 <= order < len(components):
        raise DomainError(
            f"order {order} needs at least {order + 1} components, got {len(components)}"
        )
    x0 = components[0]

    # N^(k)(x0) for k = 0..order, as truncated series in t
    g = [_compose_derivative(nonlin, k, x0, max_degree) for k in range(order + 1)]

    # lambda-series v = sum_{i>=1} x_i lambda^i, and its powers v^k
    zero = TimePolynomial.zero()
    v = [zero] + [
        components[i] if i < len(components) else zero for i in range(1, order + 1)
    ]
    # v_pow[k][n] = [lambda^n] v^k
    v_pow = [[TimePolynomial.constant(1.0)] + [zero] * order]
    for k in range(1, order + 1):
        prev = v_pow[-1]
        cur = [zero] * (order + 1)
        for n in range(k, order + 1):  # v has no lambda^0 term
            acc = zero
            for i in range(1, n + 1):
                if v[i] and prev[n - i]:
                    acc = acc + v[i].mul_truncated(prev[n - i], max_degree)
            cur[n] = acc
        v_pow.append(cur)

    polys = []
    for n in range(order + 1):
        a_n = zero
        for k in range(n + 1):
            if not v_pow[k][n]:
                continue
            a_n = a_n + g[k].mul_truncated(v_pow[k][n], max_degree).scale(
                1.0 / math.factorial(k)
            )
        polys.append(a_n)
    return AdomianSequence(polys=tuple(polys), source="generic")


def oscillator_kappa(beta: float) -> float:
    """(1 - beta^2)^(3/2), the frozen velocity factor; requires 0 < beta < 1."""
    if not 0.0 < beta < 1.0:
        raise DomainError(f"beta must lie in (0, 1), got {beta}")
    return (1.0 - beta * beta) ** 1.5


def oscillator_adomian(m: int, x_m: TimePolynomial, beta: float) -> TimePolynomial:
    """Oscillator sequence A_m = kappa * x_m, independent of m."""
    if m < 0:
        raise DomainError("m must be >= 0")
    return x_m.scale(oscillator_kappa(beta))


# Central finite-difference stencils for d^n/dh^n, O(h^4) accurate.
# Keys: order n -> list of (offset multiple of h, weight); divide by h^n.
_STENCILS: dict[int, list[tuple[float, float]]] = {
    0: [(0.0, 1.0)],
    1: [(-2.0, 1 / 12), (-1.0, -8 / 12), (1.0, 8 / 12), (2.0, -1 / 12)],
    2: [(-2.0, -1 / 12), (-1.0, 16 / 12), (0.0, -30 / 12), (1.0, 16 / 12), (2.0, -1 / 12)],
    3: [(-3.0, 1 / 8), (-2.0, -1.0), (-1.0, 13 / 8), (1.0, -13 / 8), (2.0, 1.0), (3.0, -1 / 8)],
    4: [(-3.0, -1 / 6), (-2.0, 2.0), (-1.0, -13 / 2), (0.0, 28 / 3), (1.0, -13 / 2), (2.0, 2.0), (3.0, -1 / 6)],
}


def lambda_expansion_oracle(
    nonlin: AnalyticNonlinearity,
    components: Sequence[TimePolynomial],
    order: int,
    t_probe: float,
    h: float = 1e-4,
) -> list[float]:
    """Estimate A_0(t_probe)..A_order(t_probe) by finite differences in lambda.

    Differentiates g(lambda) = N(sum_i x_i(t_probe) lambda^i) with central
    stencils; independent of the series-composition machinery, so it serves
    as a ground-truth check for ``adomian_polynomials``.  Rounding limits
    the usable h: orders 3-4 need h around 1e-2 rather than the 1e-4 that
    suits orders <= 2.
    """
    if h <= 0:
        raise DomainError("h must be positive")
    vals = [p.eval(t_probe) for p in components]

    def g(lam: float) -> float:
        return nonlin(sum(v * lam**i for i, v in enumerate(vals)))

    out = []
    for n in range(order + 1):
        if n not in _STENCILS:
            raise DomainError("oracle supports orders 0..4")
        dn = sum(w * g(off * h) for off, w in _STENCILS[n]) / h**n
        out.append(dn / math.factorial(n))
    return out
