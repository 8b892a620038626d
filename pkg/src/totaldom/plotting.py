"""Root-locus figures.

``roots_svg`` writes plain SVG elements with no third-party imports.
``roots_png`` renders the same picture through matplotlib (Agg) and is only
importable when matplotlib is installed.
"""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

# (param, re, im, multiplicity) rows
Point = tuple[str, float, float, int]

PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
           "#8c564b", "#e377c2", "#17becf", "#7f7f7f", "#bcbd22")


def _bounds(points: list[Point]) -> tuple[float, float, float, float]:
    xs = [p[1] for p in points] + [-1.0, 0.0]
    ys = [p[2] for p in points] + [0.0]
    x0, x1 = math.floor(min(xs)) - 1, math.ceil(max(xs)) + 1
    y0, y1 = math.floor(min(ys)) - 1, math.ceil(max(ys)) + 1
    return x0, x1, y0, y1


def roots_svg(points: list[Point], title: str = "", size: int = 640) -> str:
    """Scatter of complex roots with equal axis scaling, unit ticks and a
    cross at -1."""
    x0, x1, y0, y1 = _bounds(points)
    span = max(x1 - x0, y1 - y0)
    margin = 40
    scale = (size - 2 * margin) / span

    def sx(x):
        return margin + (x - x0) * scale

    def sy(y):
        return size - margin - (y - y0) * scale

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f'<rect x="0" y="0" width="{size}" height="{size}" fill="white"/>',
    ]
    if title:
        out.append(f'<text x="{size / 2:.1f}" y="20" text-anchor="middle" '
                   f'font-family="sans-serif" font-size="14">{escape(title)}</text>')
    # axes through the origin
    out.append(f'<line x1="{sx(x0):.2f}" y1="{sy(0):.2f}" x2="{sx(x0 + span):.2f}" '
               f'y2="{sy(0):.2f}" stroke="black" stroke-width="1"/>')
    out.append(f'<line x1="{sx(0):.2f}" y1="{sy(y0):.2f}" x2="{sx(0):.2f}" '
               f'y2="{sy(y0 + span):.2f}" stroke="black" stroke-width="1"/>')
    step = max(1, int(span // 20))
    for t in range(int(x0), int(x0 + span) + 1, step):
        out.append(f'<line x1="{sx(t):.2f}" y1="{sy(0) - 3:.2f}" x2="{sx(t):.2f}" '
                   f'y2="{sy(0) + 3:.2f}" stroke="black"/>')
    for t in range(int(y0), int(y0 + span) + 1, step):
        out.append(f'<line x1="{sx(0) - 3:.2f}" y1="{sy(t):.2f}" x2="{sx(0) + 3:.2f}" '
                   f'y2="{sy(t):.2f}" stroke="black"/>')
    # centre mark at (-1, 0)
    cx, cy = sx(-1), sy(0)
    out.append(f'<path d="M {cx - 5:.2f} {cy - 5:.2f} L {cx + 5:.2f} {cy + 5:.2f} '
               f'M {cx - 5:.2f} {cy + 5:.2f} L {cx + 5:.2f} {cy - 5:.2f}" '
               f'stroke="black" stroke-width="1.5" fill="none"/>')
    params = list(dict.fromkeys(p[0] for p in points))
    colour = {p: PALETTE[i % len(PALETTE)] for i, p in enumerate(params)}
    for param, re, im, mult in points:
        r = 2.0 + min(mult - 1, 3)
        out.append(f'<circle cx="{sx(re):.2f}" cy="{sy(im):.2f}" r="{r:.1f}" '
                   f'fill="{colour[param]}" fill-opacity="0.8">'
                   f'<title>{escape(str(param))}</title></circle>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def roots_png(points: list[Point], path, title: str = "", dpi: int = 150) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(6, 6))
    xs = [p[1] for p in points]
    ys = [p[2] for p in points]
    params = list(dict.fromkeys(p[0] for p in points))
    index = {p: i for i, p in enumerate(params)}
    ax.scatter(xs, ys, s=8, c=[index[p[0]] for p in points], cmap="viridis")
    ax.plot([-1], [0], marker="x", color="black")
    ax.axhline(0, color="black", lw=0.5)
    ax.axvline(0, color="black", lw=0.5)
    ax.set_aspect("equal", adjustable="datalim")
    ax.set_xlabel("Re")
    ax.set_ylabel("Im")
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
