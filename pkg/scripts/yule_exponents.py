"""Tail exponent of the coin-allocation process against 1 + 1/(1 - alpha).

Prints the median estimate over seeds for several s_min, next to the value the
estimator converges to on the exact mean-field stationary law.

Usage: python scripts/yule_exponents.py [--steps 100000] [--seeds 20]
"""

import argparse

import numpy as np

from modalsplit.yule import YuleParams, estimate_exponent, run_yule, theoretical_exponent


def stationary_law(alpha, s_max=2_000_000):
    s = np.arange(s_max, dtype=float)
    r = alpha + (1 - alpha) * s
    x = np.empty(s_max)
    x[0] = 1 / (1 + alpha)
    x[1:] = x[0] * np.cumprod(r[:-1] / (1 + r[1:]))
    return x


def law_exponent(x, s_min):
    s = np.arange(len(x), dtype=float)
    m = s >= s_min
    return 1 + x[m].sum() / np.sum(x[m] * np.log(s[m] / (s_min - 0.5)))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--steps", type=int, default=100_000)
    ap.add_argument("--seeds", type=int, default=20)
    ap.add_argument("--alphas", type=float, nargs="+", default=[0.05, 1 / 11, 0.3, 0.5])
    ap.add_argument("--s-min", type=int, nargs="+", default=[5, 10, 20])
    args = ap.parse_args()

    print("alpha   theory  s_min  simulated  mean-field  tail-size")
    for alpha in args.alphas:
        hists = [run_yule(YuleParams(alpha, args.steps, s)) for s in range(args.seeds)]
        law = stationary_law(alpha)
        for s_min in args.s_min:
            fits = [estimate_exponent(h, s_min) for h in hists]
            print(f"{alpha:.4f}  {theoretical_exponent(alpha):.4f}  {s_min:5d}  "
                  f"{np.median([b for b, _ in fits]):9.4f}  {law_exponent(law, s_min):10.4f}  "
                  f"{int(np.median([m for _, m in fits])):9d}")


if __name__ == "__main__":
    main()
