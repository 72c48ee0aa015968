"""CSV and SVG emitters. Every CSV starts with a ``# seed=...`` comment line."""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Iterable, Sequence

from .population import RNG_ALGORITHM


def fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return f"{v:.6g}"
    return str(v)


def write_csv(path: Path, header: Sequence[str], rows: Iterable[Sequence], seed: int | None) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", newline="") as fh:
        fh.write(f"# seed={'' if seed is None else seed} rng={RNG_ALGORITHM}\r\n")
        w = csv.writer(fh)
        w.writerow(header)
        for row in rows:
            w.writerow([fmt(v) for v in row])
    return path


def read_csv(path: Path) -> list[dict[str, str]]:
    """Read a CSV written by write_csv, skipping leading comment lines."""
    with open(path, newline="") as fh:
        lines = [ln for ln in fh if not ln.startswith("#")]
    return list(csv.DictReader(lines))


def cobweb_svg(points, curve, size: int = 480, margin: int = 40) -> str:
    """Unit-square SVG: staircase ``points``, the map ``curve`` and the diagonal."""
    span = size - 2 * margin

    def xy(px, py):
        return f"{margin + px * span:.2f},{size - margin - py * span:.2f}"

    def poly(pts, colour, width):
        path = " ".join(xy(px, py) for px, py in pts)
        return f'<polyline points="{path}" fill="none" stroke="{colour}" stroke-width="{width}"/>'

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        '<rect width="100%" height="100%" fill="white"/>',
        f'<rect x="{margin}" y="{margin}" width="{span}" height="{span}" fill="none" stroke="black"/>',
        poly([(0, 0), (1, 1)], "grey", 1),
        poly(curve, "steelblue", 2),
        poly(points, "firebrick", 1.5),
        f'<text x="{size / 2}" y="{size - 10}" text-anchor="middle" font-size="14">x (car share, day k)</text>',
        f'<text x="14" y="{size / 2}" text-anchor="middle" font-size="14" '
        f'transform="rotate(-90 14 {size / 2})">x (day k+1)</text>',
        "</svg>",
    ]
    return "\n".join(parts) + "\n"
