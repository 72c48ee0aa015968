"""Bimodal modal-split model: costs, best-response dynamics, agents, Yule process."""

from .equilibrium import (
    ConvergenceTrace,
    best_response,
    best_response_derivative,
    cobweb_points,
    contraction_modulus,
    iterate,
    solve_oracle,
)
from .model import (
    ConditionReport,
    DomainError,
    InfeasibleError,
    ModelError,
    ModelParams,
    car_cost,
    check_conditions,
    demand_share,
    indifference_vot,
    transit_cost,
    travel_time,
)
from .population import (
    Agent,
    DayRecord,
    Population,
    days_to_stability,
    empirical_demand_curve,
    run_days,
    sample_population,
    step_day,
)
from .yule import (
    InsufficientDataError,
    WealthHistogram,
    YuleParams,
    ccdf,
    estimate_exponent,
    run_yule,
    theoretical_exponent,
)

__version__ = "0.1.0"
