"""Days to reach equilibrium for the experiment city, continuum and 1000 residents.

Usage: python scripts/convergence_experiment.py [--seeds 200] [--random-params 50]
"""

import argparse
from collections import Counter

import numpy as np

from modalsplit.equilibrium import iterate, solve_oracle
from modalsplit.model import ModelParams, check_conditions
from modalsplit.population import days_to_stability, initial_share, run_days, sample_population


def city_days(params, seeds, n):
    fixed, agents, gaps = [], [], []
    x_star = solve_oracle(params)
    for s in seeds:
        x0 = initial_share(s)
        fixed.append(iterate(x0, params, 0.01, 1000).iterations_to_tolerance)
        recs = run_days(sample_population(n, params, s), x0, params, 200)
        agents.append(days_to_stability(recs))
        gaps.append(abs(recs[-1].car_share - x_star))
    return fixed, agents, gaps


def summarize(name, days):
    stable = [d for d in days if d is not None]
    never = len(days) - len(stable)
    print(f"{name:>28}: median={np.median(stable):.1f} max={max(stable)} "
          f"never-stable={never}/{len(days)} histogram={dict(sorted(Counter(stable).items()))}")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--seeds", type=int, default=200)
    ap.add_argument("--n", type=int, default=1000)
    ap.add_argument("--random-params", type=int, default=50)
    args = ap.parse_args()

    params = ModelParams()
    fixed, agents, gaps = city_days(params, range(args.seeds), args.n)
    print(f"experiment city, {args.seeds} seeds, n={args.n}")
    summarize("fixed point (tol 0.01)", fixed)
    summarize("agents (partition stable)", agents)
    print(f"{'max |final - x*|':>28}: {max(gaps):.4f}")

    rng = np.random.default_rng(0)
    worst = []
    while len(worst) < args.random_params:
        p = ModelParams(
            a=rng.uniform(51, 90), b1=50, b2=rng.uniform(71, 90), T0=70,
            gamma=rng.uniform(0, 5), eta=1.0, p_max=10,
        )
        if not check_conditions(p).all_satisfied:
            continue
        fx, _, _ = city_days(p, range(20), args.n)
        worst.append(max(fx))
    print(f"random feasible cities ({args.random_params}): worst fixed-point days per city "
          f"median={np.median(worst):.1f} max={max(worst)}")


if __name__ == "__main__":
    main()
