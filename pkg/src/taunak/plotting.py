"""Matplotlib figures: arc patterns on the punctured disk and the torsion lattice."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from . import arcs as am  # noqa: E402
from .serial import AlgebraSpec  # noqa: E402
from .tilting import obj_str  # noqa: E402
from .tors import TorsLattice  # noqa: E402

GREEN = "#2a9d2a"
RED = "#d62728"


def draw_pattern(ax, spec: AlgebraSpec, p: am.ArcPattern, title: str | None = None) -> None:
    circle = plt.Circle((0, 0), 2.0, fill=False, color="black", lw=1)
    ax.add_patch(circle)
    ax.plot([0], [0], marker="x", color="black", ms=6)
    for c in p.colored:
        xs, ys = zip(*am.arc_points(spec, c.arc))
        ax.plot(xs, ys, color=GREEN if c.color == am.GREEN else RED, lw=2.2)
    for v, x, y in am.marked_points(spec):
        ax.plot([x], [y], "o", color="black", ms=3.5)
        ax.text(1.18 * x, 1.18 * y, str(v), ha="center", va="center", fontsize=8)
    ax.set_xlim(-2.6, 2.6)
    ax.set_ylim(-2.6, 2.6)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title, fontsize=7)


def plot_patterns(spec: AlgebraSpec, patterns: Sequence[am.ArcPattern], path: str | Path,
                  cols: int = 7) -> Path:
    """A grid with one punctured disk per pattern, green and red arcs drawn inside."""
    n = max(len(patterns), 1)
    cols = min(cols, n)
    rows = math.ceil(n / cols)
    fig, axes = plt.subplots(rows, cols, figsize=(1.8 * cols, 1.9 * rows), squeeze=False)
    for k, ax in enumerate(axes.flat):
        if k < len(patterns):
            draw_pattern(ax, spec, patterns[k], title=f"#{k + 1}")
        else:
            ax.axis("off")
    fig.suptitle(f"maximal arc patterns of {spec}: {len(patterns)}", fontsize=10)
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def hasse_layout(lat: TorsLattice) -> dict:
    """Layers by the size of the torsion class, spread evenly within a layer."""
    layers: dict[int, list] = {}
    for v in lat.vertices:
        layers.setdefault(len(lat.torsion[v]), []).append(v)
    pos = {}
    for level, (size, vs) in enumerate(sorted(layers.items())):
        vs = sorted(vs, key=obj_str)
        for k, v in enumerate(vs):
            pos[v] = ((k + 1) / (len(vs) + 1), size)
    return pos


def plot_hasse(lat: TorsLattice, path: str | Path, labels: bool = True) -> Path:
    pos = hasse_layout(lat)
    big = len(lat.vertices) > 20
    fig, ax = plt.subplots(figsize=(9 if big else 6, 9 if big else 6))
    for a in lat.arrows:
        (x0, y0), (x1, y1) = pos[a.source], pos[a.target]
        ax.annotate("", xy=(x1, y1), xytext=(x0, y0),
                    arrowprops=dict(arrowstyle="->", color="gray", lw=0.8, shrinkA=6, shrinkB=6))
        if labels:
            ax.text(0.6 * x0 + 0.4 * x1, 0.6 * y0 + 0.4 * y1, str(a.label), fontsize=5 if big else 7,
                    color="navy", ha="center", va="center",
                    bbox=dict(boxstyle="round,pad=0.1", fc="white", ec="none", alpha=0.8))
    xs = [pos[v][0] for v in lat.vertices]
    ys = [pos[v][1] for v in lat.vertices]
    ax.scatter(xs, ys, s=14, color="black", zorder=3)
    if not big:
        for v in lat.vertices:
            ax.text(pos[v][0], pos[v][1] + 0.25, obj_str(v), fontsize=6, ha="center")
    ax.set_ylabel("indecomposables in the torsion class")
    ax.set_xticks([])
    ax.set_title(f"torsion classes of {lat.spec}: {len(lat.vertices)} vertices, {len(lat.arrows)} arrows")
    fig.tight_layout()
    path = Path(path)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
