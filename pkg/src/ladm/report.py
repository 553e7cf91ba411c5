"""Comparison reports: method-vs-method tables and error summaries.

All file output is deterministic: values render as %.12e with C-locale
decimal points, no timestamps.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from . import approximants, oracle
from .errors import DomainError
from .solver import oscillator_series, series_frequency

ALL_METHODS = ("ladm", "hbm", "dtm", "hpm", "oracle")
DEFAULT_N_TERMS = 14


def _fmt(x: float) -> str:
    return "%.12e" % x


@dataclass(frozen=True)
class ComparisonReport:
    beta: float
    grid: tuple[float, ...]
    columns: dict[str, tuple[float, ...]]  # method -> x values on grid
    errors: dict[str, tuple[float, float]]  # method -> (max_abs, rms) vs oracle
    frequency_summary: dict[str, float]

    def method_names(self) -> list[str]:
        return [m for m in ALL_METHODS if m in self.columns]

    # -- serialization ------------------------------------------------

    def to_csv(self) -> str:
        methods = self.method_names()
        err_methods = [m for m in methods if m in self.errors]
        header = ["t"] + methods + [f"err_{m}" for m in err_methods]
        lines = [",".join(header)]
        oracle_col = self.columns.get("oracle")
        for i, t in enumerate(self.grid):
            row = [_fmt(t)] + [_fmt(self.columns[m][i]) for m in methods]
            for m in err_methods:
                row.append(_fmt(abs(self.columns[m][i] - oracle_col[i])))
            lines.append(",".join(row))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "beta": self.beta,
            "grid": list(self.grid),
            "columns": {m: list(v) for m, v in self.columns.items()},
            "errors": {m: {"max_abs": e[0], "rms": e[1]} for m, e in self.errors.items()},
            "frequency_summary": self.frequency_summary,
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ComparisonReport":
        d = json.loads(text)
        return cls(
            beta=d["beta"],
            grid=tuple(d["grid"]),
            columns={m: tuple(v) for m, v in d["columns"].items()},
            errors={m: (e["max_abs"], e["rms"]) for m, e in d["errors"].items()},
            frequency_summary=d["frequency_summary"],
        )


def make_grid(t_max: float, dt: float) -> tuple[float, ...]:
    if t_max <= 0 or dt <= 0:
        raise DomainError("t_max and dt must be positive")
    n = int(round(t_max / dt))
    return tuple(i * dt for i in range(n + 1))


def build_report(
    beta: float,
    t_max: float = 10.0,
    dt: float = 0.5,
    methods: tuple[str, ...] = ALL_METHODS,
    n_terms: int = DEFAULT_N_TERMS,
    oracle_cfg: oracle.OracleConfig | None = None,
) -> ComparisonReport:
    """Evaluate the requested methods on a uniform grid against the oracle."""
    methods = tuple(m.lower() for m in methods)
    for m in methods:
        if m not in ALL_METHODS:
            raise DomainError(f"unknown method {m!r}; choose from {ALL_METHODS}")
    grid = make_grid(t_max, dt)

    columns: dict[str, tuple[float, ...]] = {}
    if "ladm" in methods:
        p = oscillator_series(beta, n_terms).full_sum()
        columns["ladm"] = tuple(p.eval(t) for t in grid)
    if "hbm" in methods:
        s = approximants.hbm(beta)
        columns["hbm"] = tuple(s.eval(t) for t in grid)
    for m in ("dtm", "hpm"):
        if m in methods:
            s = approximants.tabulated(m.upper(), beta)
            columns[m] = tuple(s.eval(t) for t in grid)

    traj = None
    errors: dict[str, tuple[float, float]] = {}
    freq: dict[str, float] = {
        "omega_series": series_frequency(beta),
        "omega_hbm": approximants.hbm_frequency(beta),
    }
    if "oracle" in methods:
        cfg = oracle_cfg or oracle.OracleConfig(t_end=max(t_max, 20.0))
        traj = oracle.integrate(beta, cfg)
        columns["oracle"] = tuple(traj.sample_on_grid(grid))
        for m in columns:
            if m == "oracle":
                continue
            diffs = [abs(a - b) for a, b in zip(columns[m], columns["oracle"])]
            rms = math.sqrt(sum(d * d for d in diffs) / len(diffs))
            errors[m] = (max(diffs), rms)
        freq["oracle_period"] = oracle.period(beta, traj=traj)
        freq["omega_oracle"] = 2.0 * math.pi / freq["oracle_period"]

    return ComparisonReport(
        beta=beta, grid=grid, columns=columns, errors=errors, frequency_summary=freq
    )


def sweep_csv(
    beta_min: float,
    beta_max: float,
    steps: int,
    t_max: float = 5.0,
    dt: float = 0.1,
    n_terms: int = DEFAULT_N_TERMS,
) -> str:
    """Per-beta accuracy summary, one CSV row per beta."""
    if not 0.0 < beta_min < beta_max < 1.0:
        raise DomainError("require 0 < beta_min < beta_max < 1")
    if steps < 2:
        raise DomainError("steps must be >= 2")
    lines = ["beta,max_abs_err_ladm,omega_series,omega_hbm,oracle_period"]
    for i in range(steps):
        beta = beta_min + (beta_max - beta_min) * i / (steps - 1)
        rep = build_report(
            beta, t_max=t_max, dt=dt, methods=("ladm", "oracle"), n_terms=n_terms
        )
        lines.append(
            ",".join(
                _fmt(v)
                for v in (
                    beta,
                    rep.errors["ladm"][0],
                    rep.frequency_summary["omega_series"],
                    rep.frequency_summary["omega_hbm"],
                    rep.frequency_summary["oracle_period"],
                )
            )
        )
    return "\n".join(lines) + "\n"
