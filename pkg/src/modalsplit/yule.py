"""Coin-allocation (Yule) process and its power-law wealth tail.

Day 1: one resident gets one coin. Day t >= 2: a new resident arrives with
no coins, then one coin is handed out. With probability alpha it goes to a
resident chosen uniformly among all t residents (newcomer included);
otherwise to an old resident chosen in proportion to the coins held.
The stationary tail is n_s ~ s**-(1 + 1/(1 - alpha)).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

MIN_TAIL_SIZE = 50
DEFAULT_S_MIN = 5


class InsufficientDataError(ValueError):
    pass


@dataclass(frozen=True)
class YuleParams:
    alpha: float
    steps: int
    seed: int = 0

    def __post_init__(self):
        if not 0 < self.alpha < 1:
            raise ValueError(f"alpha must lie in (0, 1), got {self.alpha}")
        if int(self.steps) != self.steps or self.steps < 1:
            raise ValueError(f"steps must be a positive integer, got {self.steps}")


@dataclass(frozen=True)
class WealthHistogram:
    counts: dict[int, int]   # s -> number of residents holding exactly s coins
    total_residents: int
    total_coins: int

    @classmethod
    def from_wealth(cls, wealth) -> "WealthHistogram":
        wealth = list(wealth)
        counts = dict(sorted(Counter(int(w) for w in wealth).items()))
        return cls(counts=counts, total_residents=len(wealth), total_coins=int(sum(wealth)))

    def wealths(self, s_min: int = 0) -> np.ndarray:
        """Per-resident coin counts with s >= s_min, expanded from the histogram."""
        s = [k for k in self.counts if k >= s_min]
        return np.repeat(np.array(s, dtype=float), [self.counts[k] for k in s])


def allocate_coins(steps: int, alpha: float, rng: np.random.Generator) -> list[int]:
    """Owner index of each coin, in allocation order.

    The coin list doubles as the token pool for preferential draws: picking a
    coin uniformly picks its owner with probability proportional to wealth.
    """
    owners = [0]
    if steps == 1:
        return owners
    uniform_branch = (rng.random(steps - 1) < alpha).tolist()
    u = rng.random(steps - 1).tolist()
    for t in range(2, steps + 1):
        i = t - 2
        if uniform_branch[i]:
            owners.append(int(u[i] * t))             # residents 0..t-1
        else:
            owners.append(owners[int(u[i] * (t - 1))])  # t-1 coins so far
    return owners


def wealth_vector(owners: list[int], residents: int) -> np.ndarray:
    return np.bincount(np.asarray(owners), minlength=residents)


def run_yule(params: YuleParams) -> WealthHistogram:
    rng = np.random.default_rng(params.seed)
    owners = allocate_coins(int(params.steps), params.alpha, rng)
    hist = WealthHistogram.from_wealth(wealth_vector(owners, int(params.steps)))
    assert hist.total_residents == params.steps and hist.total_coins == params.steps
    return hist


def theoretical_exponent(alpha: float) -> float:
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must lie in (0, 1), got {alpha}")
    return 1.0 + 1.0 / (1.0 - alpha)


def estimate_exponent(hist: WealthHistogram, s_min: int = DEFAULT_S_MIN) -> tuple[float, int]:
    """Discrete power-law MLE with the continuous approximation.

    beta = 1 + m / sum(log(s_i / (s_min - 0.5))) over the m residents with
    s_i >= s_min. Returns (beta, m).
    """
    if s_min < 1:
        raise ValueError("s_min must be >= 1")
    s = hist.wealths(s_min)
    m = len(s)
    if m < MIN_TAIL_SIZE:
        raise InsufficientDataError(
            f"only {m} residents with s >= {s_min}; need at least {MIN_TAIL_SIZE}"
        )
    if np.all(s == s[0]):
        raise InsufficientDataError(f"all {m} tail residents hold {int(s[0])} coins; no spread to fit")
    return 1.0 + m / float(np.sum(np.log(s / (s_min - 0.5)))), m


def ccdf(hist: WealthHistogram) -> list[tuple[int, float]]:
    """(s, share of residents with at least s coins) for s = 1 .. max wealth.

    Zero-coin residents count in the denominator only.
    """
    if hist.total_residents < 1:
        raise ValueError("empty histogram")
    s_max = max(hist.counts)
    out = []
    at_least = sum(c for s, c in hist.counts.items() if s >= 1)
    for s in range(1, s_max + 1):
        out.append((s, at_least / hist.total_residents))
        at_least -= hist.counts.get(s, 0)
    return out


def median_exponent(alpha: float, steps: int, seeds, s_min: int = DEFAULT_S_MIN) -> float:
    est = [estimate_exponent(run_yule(YuleParams(alpha, steps, seed)), s_min)[0] for seed in seeds]
    return float(np.median(est))

