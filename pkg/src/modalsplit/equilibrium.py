"""Day-by-day best-response dynamics and its fixed point.

The map Phi(x) = x(p(x)) takes yesterday's car share to today's. For
eta = 1 it is a contraction of [0, 1] with modulus 4*gamma/(a - b1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .model import (
    InfeasibleError,
    ModelParams,
    demand_share,
    indifference_vot,
    require_conditions,
)

BISECTION_WIDTH = 1e-12
BISECTION_MAX_HALVINGS = 200
MODULUS_GRID_POINTS = 10_000
DAYS_TOLERANCE = 0.01


@dataclass(frozen=True)
class ConvergenceTrace:
    iterates: tuple[float, ...]
    residuals: tuple[float, ...]
    converged: bool
    tolerance: float
    iterations_to_tolerance: int | None  # map applications until residual <= tolerance
    contraction_modulus: float

    @property
    def last(self) -> float:
        return self.iterates[-1]

    @property
    def steps(self) -> int:
        return len(self.residuals)

    def steps_to(self, tol: float) -> int | None:
        """Map applications until the residual first drops to ``tol``."""
        for k, r in enumerate(self.residuals):
            if r <= tol:
                return k + 1
        return None


def best_response(x: float, params: ModelParams) -> float:
    """Tomorrow's car share given today's share x."""
    return demand_share(indifference_vot(x, params), params)


def best_response_derivative(x: float, params: ModelParams) -> float:
    """Analytic Phi'(x); also accepts an array of x."""
    d = params.a - params.b1
    base = (params.b2 - params.T0 - params.gamma * x**4) / d
    return -params.eta * base ** (params.eta - 1) * 4 * params.gamma * x**3 / d


def contraction_modulus(params: ModelParams) -> float:
    """sup |Phi'| over [0, 1].

    Closed form 4*gamma/(a - b1) for eta = 1, otherwise the max over a
    fixed 10**4-point grid (a diagnostic, not a bound).
    """
    require_conditions(params, 1, 2, 3, 4)
    if params.eta == 1.0:
        return 4 * params.gamma / (params.a - params.b1)
    xs = np.linspace(0.0, 1.0, MODULUS_GRID_POINTS)
    return float(np.max(np.abs(best_response_derivative(xs, params))))


def iterate(
    x0: float,
    params: ModelParams,
    tolerance: float = 1e-10,
    max_iter: int = 1000,
) -> ConvergenceTrace:
    """Run x_{k+1} = Phi(x_k) until |x_{k+1} - x_k| <= tolerance or max_iter steps.

    Non-convergence is reported through ``converged=False``; infeasible
    parameters raise.
    """
    if not 0.0 <= x0 <= 1.0:
        raise ValueError(f"x0 must lie in [0, 1], got {x0}")
    if not tolerance > 0:
        raise ValueError("tolerance must be > 0")
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    q = contraction_modulus(params)

    xs = [float(x0)]
    res: list[float] = []
    converged = False
    for _ in range(max_iter):
        nxt = best_response(xs[-1], params)
        res.append(abs(nxt - xs[-1]))
        xs.append(nxt)
        if res[-1] <= tolerance:
            converged = True
            break
    return ConvergenceTrace(
        iterates=tuple(xs),
        residuals=tuple(res),
        converged=converged,
        tolerance=tolerance,
        iterations_to_tolerance=len(res) if converged else None,
        contraction_modulus=q,
    )


def solve_oracle(params: ModelParams, tolerance: float = 1e-10) -> float:
    """Fixed point of Phi by bisection on g(x) = Phi(x) - x over [0, 1].

    Independent of the day-by-day iteration; used as the reference x*.
    """
    if not tolerance > 0:
        raise ValueError("tolerance must be > 0")
    require_conditions(params, 1, 2, 3, 4)

    def g(x):
        return best_response(x, params) - x

    lo, hi = 0.0, 1.0
    g_lo, g_hi = g(lo), g(hi)
    if not (g_lo > 0 > g_hi):
        raise InfeasibleError(f"no bracket: g(0)={g_lo}, g(1)={g_hi}")

    for _ in range(BISECTION_MAX_HALVINGS):
        mid = 0.5 * (lo + hi)
        g_mid = g(mid)
        if g_mid == 0:
            return mid
        if g_mid > 0:
            lo = mid
        else:
            hi = mid
        if hi - lo <= BISECTION_WIDTH:
            break
    x = 0.5 * (lo + hi)
    if abs(g(x)) > tolerance:
        # width 1e-12 leaves |g| ~ 1e-12 * |g'|; only near-machine-precision tolerances trip this
        raise InfeasibleError(f"|Phi(x*) - x*| = {abs(g(x))} exceeds tolerance {tolerance}")
    return x


def cobweb_points(trace: ConvergenceTrace) -> list[tuple[float, float]]:
    """Staircase (x0,x0) -> (x0,x1) -> (x1,x1) -> (x1,x2) -> ... in the unit square."""
    xs = trace.iterates
    pts = [(xs[0], xs[0])]
    for cur, nxt in zip(xs, xs[1:]):
        pts.append((cur, nxt))
        pts.append((nxt, nxt))
    return pts
