"""Reference integration of the exact oscillator equation.

Solves x'' + (1 - x'^2)^(3/2) x = 0 as the first-order system
(x, v)' = (v, -(1 - v^2)^(3/2) x) with a high-order embedded adaptive
pair (scipy's DOP853) and dense output.  The relativistic energy

    E = (1 - v^2)^(-1/2) + x^2 / 2

is an exact first integral and is tracked as a correctness monitor, never
enforced.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp as _scipy_solve_ivp

from .errors import DomainError, InsufficientHorizonError, OracleError

_MONITOR_SAMPLES = 2048  # uniform refinement used for the energy/speed monitor


@dataclass(frozen=True)
class OracleConfig:
    rel_tol: float = 1e-12
    abs_tol: float = 1e-12
    t_end: float = 100.0
    max_steps: int = 1_000_000

    def __post_init__(self) -> None:
        if self.rel_tol <= 0 or self.abs_tol <= 0:
            raise DomainError("tolerances must be positive")
        if self.t_end <= 0:
            raise DomainError("t_end must be positive")


def energy(x: float, v: float) -> float:
    """Dimensionless relativistic energy (1 - v^2)^(-1/2) + x^2/2."""
    if abs(v) >= 1.0:
        raise DomainError(f"|v| must be < 1, got {v}")
    return 1.0 / math.sqrt(1.0 - v * v) + 0.5 * x * x


@dataclass(frozen=True)
class OracleTrajectory:
    beta: float
    config: OracleConfig
    samples: tuple[tuple[float, float, float], ...]  # (t, x, v) at accepted steps
    interpolant: object = field(repr=False)  # scipy OdeSolution
    energy_drift: float = 0.0

    @property
    def t_end(self) -> float:
        return self.samples[-1][0]

    def sample_on_grid(self, ts) -> list[float]:
        """Dense-output positions at each requested time."""
        out = []
        for t in ts:
            if not 0.0 <= t <= self.t_end:
                raise DomainError(f"t={t} outside [0, {self.t_end}]")
            out.append(float(self.interpolant(t)[0]))
        return out

    def state(self, t: float) -> tuple[float, float]:
        x, v = self.interpolant(t)
        return float(x), float(v)


def _rhs(t, y):
    x, v = y
    return [v, -((1.0 - v * v) ** 1.5) * x]


def integrate(beta: float, cfg: OracleConfig | None = None) -> OracleTrajectory:
    """Integrate the oscillator from (x, v) = (0, beta) to cfg.t_end."""
    if not 0.0 < beta < 1.0:
        raise DomainError(f"beta must lie in (0, 1), got {beta}")
    cfg = cfg or OracleConfig()
    try:
        res = _scipy_solve_ivp(
            _rhs,
            (0.0, cfg.t_end),
            [0.0, beta],
            method="DOP853",
            rtol=cfg.rel_tol,
            atol=cfg.abs_tol,
            dense_output=True,
        )
    except (ValueError, FloatingPointError) as exc:
        raise OracleError(f"integration failed for beta={beta}: {exc}") from exc
    if not res.success:
        raise OracleError(f"integration failed for beta={beta}: {res.message}")
    if res.t.size > cfg.max_steps:
        raise OracleError(
            f"step budget exceeded: {res.t.size} accepted steps > {cfg.max_steps}"
        )
    xs, vs = res.y
    if np.any(np.abs(vs) >= 1.0):
        i = int(np.argmax(np.abs(vs)))
        raise OracleError(f"speed bound violated at t={res.t[i]}: v={vs[i]}")

    # energy drift on accepted steps plus a uniform refinement
    tgrid = np.union1d(res.t, np.linspace(0.0, cfg.t_end, _MONITOR_SAMPLES))
    dense = res.sol(tgrid)
    e = 1.0 / np.sqrt(1.0 - dense[1] ** 2) + 0.5 * dense[0] ** 2
    drift = float(np.max(np.abs(e - energy(0.0, beta))))

    samples = tuple((float(t), float(x), float(v)) for t, x, v in zip(res.t, xs, vs))
    return OracleTrajectory(
        beta=beta,
        config=cfg,
        samples=samples,
        interpolant=res.sol,
        energy_drift=drift,
    )


def sample_on_grid(traj: OracleTrajectory, ts) -> list[float]:
    return traj.sample_on_grid(ts)


def period(beta: float, cfg: OracleConfig | None = None, traj: OracleTrajectory | None = None) -> float:
    """Oscillation period from successive upward zero crossings of x(t).

    Crossings are located by a sign scan on dense output refined by
    bisection to 1e-12 in t.  Needs a horizon covering at least two
    crossings after t = 0.
    """
    if traj is None:
        traj = integrate(beta, cfg)
    x = lambda t: float(traj.interpolant(t)[0])
    t_end = traj.t_end
    ts = np.linspace(0.0, t_end, max(64, int(t_end * 40)))
    crossings = []
    for a, b in zip(ts[:-1], ts[1:]):
        if a == 0.0:
            continue  # x(0) = 0 is the starting crossing, not a detected one
        if x(a) < 0.0 <= x(b):
            lo, hi = a, b
            while hi - lo > 1e-12:
                mid = 0.5 * (lo + hi)
                if x(mid) < 0.0:
                    lo = mid
                else:
                    hi = mid
            crossings.append(0.5 * (lo + hi))
            if len(crossings) == 2:
                break
    if len(crossings) < 2:
        raise InsufficientHorizonError(
            f"fewer than two upward zero crossings in [0, {t_end}]; extend t_end"
        )
    return float(crossings[1] - crossings[0])
