"""A dependency-free SVG line plot, enough to draw the W-curve."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

BREAKPOINTS = (Fraction(1, 3), Fraction(1, 2), Fraction(2, 3), Fraction(3, 4), Fraction(1), Fraction(2))


def line_plot(
    xs: Sequence[Fraction],
    series: dict[str, Sequence[Fraction | None]],
    xticks: Sequence[Fraction] = BREAKPOINTS,
    width: int = 480,
    height: int = 320,
    margin: int = 40,
) -> str:
    """One polyline per series; ``None`` values break the line."""
    x0, x1 = min(xs), max(xs)
    x1 = x1 if x1 > x0 else x0 + 1
    y1 = max([Fraction(1)] + [v for vals in series.values() for v in vals if v is not None])

    def px(x):
        return margin + float((x - x0) / (x1 - x0)) * (width - 2 * margin)

    def py(y):
        return height - margin - float(y / y1) * (height - 2 * margin)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">',
        f'<line x1="{margin}" y1="{py(0):.2f}" x2="{width - margin}" y2="{py(0):.2f}" stroke="black"/>',
        f'<line x1="{margin}" y1="{py(0):.2f}" x2="{margin}" y2="{margin}" stroke="black"/>',
    ]
    for t in xticks:
        if x0 <= t <= x1:
            out.append(f'<line x1="{px(t):.2f}" y1="{py(0):.2f}" x2="{px(t):.2f}" y2="{py(0) + 5:.2f}" stroke="black"/>')
            out.append(f'<text x="{px(t):.2f}" y="{py(0) + 18:.2f}" font-size="10" text-anchor="middle">{t}</text>')
    for t in (Fraction(1, 2), Fraction(1)):
        out.append(f'<text x="{margin - 6}" y="{py(t) + 3:.2f}" font-size="10" text-anchor="end">{t}</text>')
    colors = ("#1f5fa8", "#c0392b", "#2e8b57")
    for k, (name, vals) in enumerate(series.items()):
        runs, cur = [], []
        for x, v in zip(xs, vals):
            if v is None:
                if cur:
                    runs.append(cur)
                cur = []
            else:
                cur.append(f"{px(x):.2f},{py(v):.2f}")
        if cur:
            runs.append(cur)
        color = colors[k % len(colors)]
        for run in runs:
            out.append(f'<polyline fill="none" stroke="{color}" stroke-width="2" points="{" ".join(run)}"/>')
        out.append(f'<text x="{width - margin}" y="{margin + 14 * k}" font-size="11" text-anchor="end" fill="{color}">{name}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
