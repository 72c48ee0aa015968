"""City parameters, generalized trip costs and the feasibility conditions.

A resident with value of time ``p`` (rubles per minute) pays

    car:      a + p * T(x),      T(x) = T0 + gamma * x**4
    transit:  b1 + p * b2

where ``x`` is the share of residents driving. The indifference value of
time p(x) equates the two; residents above it drive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields, replace


class ModelError(ValueError):
    """Base class for model-level errors."""


class DomainError(ModelError):
    """An argument lies outside the domain of an operation."""


class InfeasibleError(ModelError):
    """The parameters violate a condition the operation relies on."""


@dataclass(frozen=True)
class ModelParams:
    """One city instance. Defaults are the experiment city with eta = 1."""

    a: float = 60.0       # rubles, fixed cost of a car trip
    b1: float = 50.0      # rubles, transit fare
    b2: float = 75.0      # minutes, comfort-adjusted transit time
    T0: float = 70.0      # minutes, free-flow car time
    gamma: float = 2.0    # minutes, coefficient of x**4
    eta: float = 1.0      # Pareto exponent of the demand curve
    p_max: float = 10.0   # rubles/minute, top value of time

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if isinstance(v, bool) or not isinstance(v, (int, float)):
                raise DomainError(f"{f.name} must be a real number, got {v!r}")
            if not math.isfinite(v):
                raise DomainError(f"{f.name} must be finite, got {v!r}")
            object.__setattr__(self, f.name, float(v))
        for name in ("a", "b1", "b2", "T0"):
            if getattr(self, name) <= 0:
                raise DomainError(f"{name} must be > 0, got {getattr(self, name)}")
        if self.gamma < 0:
            raise DomainError(f"gamma must be >= 0, got {self.gamma}")
        if self.p_max <= 1:
            raise DomainError(f"p_max must be > 1, got {self.p_max}")
        if not 1.0 <= self.eta <= 2.0:
            raise DomainError(f"eta must lie in [1, 2], got {self.eta}")

    @classmethod
    def field_names(cls) -> tuple[str, ...]:
        return tuple(f.name for f in fields(cls))

    def with_(self, **changes) -> "ModelParams":
        return replace(self, **changes)


@dataclass(frozen=True)
class Condition:
    label: str        # "1" .. "5"
    inequality: str
    margin: float     # slack of the strict inequality

    @property
    def satisfied(self) -> bool:
        return self.margin > 0


@dataclass(frozen=True)
class ConditionReport:
    conditions: tuple[Condition, ...]

    @property
    def satisfied(self) -> tuple[bool, ...]:
        return tuple(c.satisfied for c in self.conditions)

    @property
    def margins(self) -> tuple[float, ...]:
        return tuple(c.margin for c in self.conditions)

    @property
    def all_satisfied(self) -> bool:
        return all(self.satisfied)

    def holds(self, *labels: int) -> bool:
        """True if every listed condition (by number, 1-based) is satisfied."""
        return all(self.conditions[i - 1].satisfied for i in labels)

    def as_dict(self) -> dict:
        return {
            c.label: {"inequality": c.inequality, "satisfied": c.satisfied, "margin": c.margin}
            for c in self.conditions
        }


def _check_share(x: float) -> None:
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"car share must lie in [0, 1], got {x}")


def _check_vot(p: float) -> None:
    if not p >= 1.0:
        raise DomainError(f"value of time must be >= 1, got {p}")


def travel_time(x: float, params: ModelParams) -> float:
    """BPR car travel time T(x) = T0 + gamma * x**4."""
    _check_share(x)
    return params.T0 + params.gamma * x**4


def car_cost(p: float, x: float, params: ModelParams) -> float:
    _check_vot(p)
    return params.a + p * travel_time(x, params)


def transit_cost(p: float, params: ModelParams) -> float:
    _check_vot(p)
    return params.b1 + p * params.b2


def indifference_vot(x: float, params: ModelParams) -> float:
    """Value of time at which car and transit cost the same for car share x.

    Raises InfeasibleError when transit is not slower than the car at x,
    i.e. b2 <= T(x), where no finite threshold exists.
    """
    gap = params.b2 - travel_time(x, params)
    if gap <= 0:
        raise InfeasibleError(f"b2 - T(x) = {gap} <= 0 at x={x}; need T(1) < b2")
    return (params.a - params.b1) / gap


def demand_share(p: float, params: ModelParams) -> float:
    """Share of residents whose value of time is at least p: p**(-eta)."""
    _check_vot(p)
    return p ** (-params.eta)


def check_conditions(params: ModelParams) -> ConditionReport:
    a, b1, b2, p_max = params.a, params.b1, params.b2, params.p_max
    t0 = travel_time(0.0, params)
    t1 = travel_time(1.0, params)
    return ConditionReport((
        Condition("1", "b1 < a", a - b1),
        Condition("2", "T(1) < b2", b2 - t1),
        Condition("3", "a + p_max*T(1) < b1 + p_max*b2", (b1 + p_max * b2) - (a + p_max * t1)),
        Condition("4", "a + T(0) > b1 + b2", (a + t0) - (b1 + b2)),
        Condition("5", "4*gamma < a - b1", (a - b1) - 4 * params.gamma),
    ))


def require_conditions(params: ModelParams, *labels: int) -> ConditionReport:
    """Raise InfeasibleError unless the listed conditions all hold."""
    report = check_conditions(params)
    failed = [c for c in report.conditions if int(c.label) in labels and not c.satisfied]
    if failed:
        desc = ", ".join(f"({c.label}) {c.inequality} [margin {c.margin:g}]" for c in failed)
        raise InfeasibleError(f"conditions violated: {desc}")
    return report
