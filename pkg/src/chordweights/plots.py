"""Matplotlib rendering for the report path: diagrams and triangle figures.

Everything draws to files through the Agg backend, so reports work headless.
"""
from __future__ import annotations

import math
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .diagrams import ChordDiagram


def draw_diagram(d: ChordDiagram, ax=None, title: str | None = None):
    """Draw a chord diagram: labelled points counterclockwise, straight chords."""
    if ax is None:
        _, ax = plt.subplots(figsize=(4, 4))
    m = len(d.mate)
    angles = [2 * math.pi * p / m + math.pi / 2 for p in range(m)]
    xs = [math.cos(a) for a in angles]
    ys = [math.sin(a) for a in angles]
    circle = plt.Circle((0, 0), 1.0, fill=False, color="0.6", lw=1.2)
    ax.add_patch(circle)
    for p, q in d.chords:
        ax.plot([xs[p], xs[q]], [ys[p], ys[q]], color="C0", lw=1.6)
    ax.scatter(xs, ys, s=18, color="black", zorder=3)
    for p in range(m):
        ax.annotate(
            str(p + 1),
            (1.14 * xs[p], 1.14 * ys[p]),
            ha="center",
            va="center",
            fontsize=9,
        )
    ax.set_xlim(-1.3, 1.3)
    ax.set_ylim(-1.3, 1.3)
    ax.set_aspect("equal")
    ax.axis("off")
    if title:
        ax.set_title(title)
    return ax


def save_diagram(d: ChordDiagram, path: str, title: str | None = None) -> str:
    fig, ax = plt.subplots(figsize=(4, 4))
    draw_diagram(d, ax, title)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def save_triangle(rows: Sequence[Sequence], path: str, title: str, centered: bool = True) -> str:
    """Render a ragged triangle of values as centered text rows."""
    fig, ax = plt.subplots(figsize=(max(6, len(rows)), 0.5 * len(rows) + 1))
    ax.axis("off")
    n_rows = len(rows)
    for r, row in enumerate(rows):
        y = 1 - (r + 1) / (n_rows + 1)
        width = len(row)
        for c, value in enumerate(row):
            if centered:
                x = 0.5 + (c - (width - 1) / 2) / (n_rows + 1)
            else:
                x = (c + 1) / (max(len(rw) for rw in rows) + 1)
            ax.text(x, y, str(value), ha="center", va="center", fontsize=10)
    ax.set_title(title)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def save_linear_bridge(ns: Sequence[int], coeffs: Sequence[int], hs: Sequence[int], path: str) -> str:
    """Compare |linear coefficient of D_n| with the normalized median Genocchi numbers."""
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.semilogy(ns, [abs(c) for c in coeffs], "o-", label="|linear coeff of weight of D_n|")
    ax.semilogy(ns, hs, "s--", label="h_{n-1} from the Seidel pipeline")
    ax.set_xlabel("n")
    ax.set_ylabel("value (log scale)")
    ax.set_title("Linear coefficients against normalized median Genocchi numbers")
    ax.legend()
    ax.grid(True, which="both", alpha=0.3)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path


def save_check_summary(names: Sequence[str], millis: Sequence[float], statuses: Sequence[str], path: str) -> str:
    """Horizontal bar chart of per-check runtimes, failures highlighted."""
    fig, ax = plt.subplots(figsize=(7, 0.3 * len(names) + 1.5))
    colors = ["C2" if s == "pass" else "C3" for s in statuses]
    ypos = range(len(names))
    ax.barh(ypos, millis, color=colors)
    ax.set_yticks(list(ypos))
    ax.set_yticklabels(names, fontsize=7)
    ax.invert_yaxis()
    ax.set_xlabel("milliseconds")
    ax.set_title("Verification checks (green = pass, red = fail)")
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)
    return path
