"""Finite-population replication of the day-by-day mode choice.

Each resident draws a value of time from the Pareto law P(vot >= p) = p**(-eta)
on [1, p_max), with the leftover mass p_max**(-eta) placed at p_max. Every
day, residents whose value of time is strictly above yesterday's indifference
threshold drive; everyone else (ties included) takes transit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import ModelParams, indifference_vot

RNG_ALGORITHM = "numpy.random.PCG64"


@dataclass(frozen=True)
class Agent:
    vot: float


@dataclass(frozen=True, eq=False)
class Population:
    vot: np.ndarray   # sorted ascending, read-only
    seed: int | None

    @property
    def n(self) -> int:
        return len(self.vot)

    @property
    def agents(self) -> list[Agent]:
        return [Agent(float(v)) for v in self.vot]

    @classmethod
    def from_values(cls, values, seed: int | None = None) -> "Population":
        vot = np.sort(np.asarray(values, dtype=float))
        if vot.ndim != 1 or len(vot) < 1:
            raise ValueError("a population needs at least one resident")
        if np.any(vot < 1):
            raise ValueError("values of time must be >= 1")
        vot.setflags(write=False)
        return cls(vot=vot, seed=seed)


@dataclass(frozen=True)
class DayRecord:
    day: int
    car_share: float
    threshold_vot: float
    drivers: int


def vot_from_uniform(u, params: ModelParams):
    """Inverse transform: u in (0, 1] -> min(u**(-1/eta), p_max)."""
    u = np.asarray(u, dtype=float)
    if np.any((u <= 0) | (u > 1)):
        raise ValueError("u must lie in (0, 1]")
    out = np.minimum(u ** (-1.0 / params.eta), params.p_max)
    return float(out) if out.ndim == 0 else out


def sample_population(n: int, params: ModelParams, seed: int) -> Population:
    if n < 1:
        raise ValueError("n must be >= 1")
    rng = np.random.default_rng(seed)
    u = 1.0 - rng.random(n)  # (0, 1]
    return Population.from_values(vot_from_uniform(u, params), seed=seed)


def initial_share(seed: int) -> float:
    """Uniform x0 on [0, 1) from a stream independent of the population draw."""
    child = np.random.SeedSequence(seed).spawn(1)[0]
    return float(np.random.default_rng(child).random())


def _drivers(pop: Population, threshold: float) -> int:
    # vot is sorted: count of entries strictly above threshold
    return pop.n - int(np.searchsorted(pop.vot, threshold, side="right"))


def step_day(pop: Population, x_prev: float, params: ModelParams, day: int = 1) -> DayRecord:
    threshold = indifference_vot(x_prev, params)
    k = _drivers(pop, threshold)
    return DayRecord(day=day, car_share=k / pop.n, threshold_vot=threshold, drivers=k)


def run_days(pop: Population, x0: float, params: ModelParams, max_days: int = 100) -> list[DayRecord]:
    """Iterate step_day, stopping once two consecutive days give the same partition.

    With a fixed population the set of drivers is determined by their count,
    so an unchanged driver count is an unchanged partition.
    """
    if not 0.0 <= x0 <= 1.0:
        raise ValueError(f"x0 must lie in [0, 1], got {x0}")
    if max_days < 1:
        raise ValueError("max_days must be >= 1")
    records: list[DayRecord] = []
    x = x0
    for day in range(1, max_days + 1):
        rec = step_day(pop, x, params, day)
        records.append(rec)
        if len(records) > 1 and records[-2].drivers == rec.drivers:
            break
        x = rec.car_share
    return records


def days_to_stability(records: list[DayRecord]) -> int | None:
    """Day on which the final partition first appeared, or None if it never settled."""
    if len(records) >= 2 and records[-1].drivers == records[-2].drivers:
        return records[-2].day
    return None


def empirical_demand_curve(pop: Population, grid) -> list[float]:
    """Fraction of residents with vot >= p for each p in grid."""
    grid = np.asarray(grid, dtype=float)
    if np.any(grid < 1):
        raise ValueError("grid values must be >= 1")
    below = np.searchsorted(pop.vot, grid, side="left")
    return [float(v) for v in (pop.n - below) / pop.n]
