"""Render the staircase and the two demand curves written by `modalsplit solve`.

Usage: python scripts/plot_cobweb.py OUT_DIR   (needs matplotlib)
"""

import sys
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from modalsplit.outputs import read_csv


def main(out_dir):
    out = Path(out_dir)
    web = read_csv(out / "cobweb.csv")
    curves = read_csv(out / "curves.csv")
    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4.5))

    ax1.plot([0, 1], [0, 1], color="grey", lw=1)
    ax1.plot([float(r["px"]) for r in web], [float(r["py"]) for r in web], color="firebrick", lw=1)
    ax1.set(xlabel="car share, day k", ylabel="car share, day k+1", xlim=(0, 1), ylim=(0, 1))

    for name, style in (("x_of_p", "-"), ("p_of_x", "--")):
        rows = [r for r in curves if r["curve"] == name]
        ax2.plot([float(r["p"]) for r in rows], [float(r["x"]) for r in rows], style, label=name)
    ax2.set(xlabel="value of time p", ylabel="share x")
    ax2.legend()
    fig.tight_layout()
    fig.savefig(out / "cobweb.png", dpi=150)
    print(out / "cobweb.png")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "out")
