"""Matplotlib figures: polygon triangulations and affine slice arrangements.

Figures are written with a fixed SVG hash salt and no date metadata so that
repeated runs produce identical files.
"""

from __future__ import annotations

import math
from pathlib import Path
from typing import Optional, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .affine3 import FUNDAMENTAL_WINDOW, affine_root_set, fundamental_cells, slice_lines  # noqa: E402
from .exactgeom import IntLine, Window  # noqa: E402
from .quiddity import cycle_to_triangulation  # noqa: E402

plt.rcParams.update({
    "svg.hashsalt": "friezeroots",
    "svg.fonttype": "none",
    "font.size": 10,
    "lines.linewidth": 0.8,
})


def polygon_vertices(n: int) -> list[tuple[float, float]]:
    """Regular n-gon, vertex 1 at the top, counterclockwise."""
    return [
        (math.cos(math.pi / 2 + 2 * math.pi * k / n), math.sin(math.pi / 2 + 2 * math.pi * k / n))
        for k in range(n)
    ]


def plot_triangulation(c: Sequence[int], ax=None):
    c = tuple(c)
    t = cycle_to_triangulation(c)
    if ax is None:
        _, ax = plt.subplots(figsize=(4, 4))
    pts = polygon_vertices(t.n)
    for tri in t.triangles:
        xs = [pts[v - 1][0] for v in tri]
        ys = [pts[v - 1][1] for v in tri]
        ax.fill(xs, ys, facecolor="#f2f2f2", edgecolor="black", linewidth=1.0)
    for k, (x, y) in enumerate(pts):
        ax.text(1.15 * x, 1.15 * y, str(c[k]), ha="center", va="center")
    ax.set_aspect("equal")
    ax.set_xlim(-1.35, 1.35)
    ax.set_ylim(-1.35, 1.35)
    ax.axis("off")
    return ax


def _segment(ln: IntLine, w: Window):
    pts = []
    for x in (w.x0, w.x1):
        if ln.b != 0:
            y = -(ln.a * x + ln.d) / ln.b
            if w.y0 <= y <= w.y1:
                pts.append((x, y))
    for y in (w.y0, w.y1):
        if ln.a != 0:
            x = -(ln.b * y + ln.d) / ln.a
            if w.x0 <= x <= w.x1:
                pts.append((x, y))
    pts = sorted(set(pts))
    if len(pts) < 2:
        return None
    return pts[0], pts[-1]


def plot_arrangement(
    c: Sequence[int], chamber: int = 1, window: Window = FUNDAMENTAL_WINDOW, ax=None
):
    """Slice lines over ``window``, fundamental square shaded, non-triangles in red."""
    A = affine_root_set(c, chamber)
    if ax is None:
        _, ax = plt.subplots(figsize=(6, 6))
    ax.add_patch(plt.Rectangle((0, 0), 1, 1, facecolor="#e8eef7", edgecolor="none", zorder=0))
    for ch in fundamental_cells(A, window):
        if not ch.is_triangle:
            xs = [float(x) for x, _ in ch.face.corners]
            ys = [float(y) for _, y in ch.face.corners]
            ax.fill(xs, ys, facecolor="#e06060", edgecolor="none", zorder=1)
    for ln in sorted(slice_lines(A, window)):
        seg = _segment(ln, window)
        if seg is None:
            continue
        (x0, y0), (x1, y1) = seg
        ax.plot([float(x0), float(x1)], [float(y0), float(y1)], color="black", zorder=2)
    ax.set_xlim(float(window.x0), float(window.x1))
    ax.set_ylim(float(window.y0), float(window.y1))
    ax.set_aspect("equal")
    ax.set_title(",".join(map(str, A.cycle)))
    return ax


def save_figure(ax, path, fmt: Optional[str] = None) -> Path:
    path = Path(path)
    fig = ax.figure
    fmt = fmt or path.suffix.lstrip(".") or "svg"
    meta = {"Date": None} if fmt == "svg" else None
    fig.savefig(path, format=fmt, metadata=meta, bbox_inches="tight")
    plt.close(fig)
    return path
