"""Minimal standalone SVG charts: polar wind rose and speed histogram with PDF overlay."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape


def _doc(width, height, body, title):
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}" font-family="sans-serif" font-size="11">\n'
        f"<title>{escape(title)}</title>\n"
        f'<rect width="{width}" height="{height}" fill="white"/>\n'
        f"{body}</svg>\n"
    )


def rose_svg(plot_data, title="Wind direction frequency", size=420):
    """Polar bar chart; bars point toward the bearing the wind comes from."""
    cx = cy = size / 2
    r_max = size / 2 - 40
    peak = max((f for _, f in plot_data), default=0.0) or 1.0
    parts = []
    for frac in (0.25, 0.5, 0.75, 1.0):
        parts.append(
            f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="{r_max * frac:.2f}" '
            f'fill="none" stroke="#ccc"/>\n'
        )
        parts.append(
            f'<text x="{cx + 3:.2f}" y="{cy - r_max * frac - 2:.2f}" fill="#888">'
            f"{100 * peak * frac:.1f}%</text>\n"
        )
    for label, bearing in (("N", 0), ("E", 90), ("S", 180), ("W", 270)):
        a = math.radians(bearing)
        x = cx + (r_max + 16) * math.sin(a)
        y = cy - (r_max + 16) * math.cos(a)
        parts.append(f'<text x="{x:.2f}" y="{y + 4:.2f}" text-anchor="middle">{label}</text>\n')
    half = math.radians(4.5)
    for angle, f in plot_data:
        if f <= 0:
            continue
        r = r_max * f / peak
        a = math.radians(angle)
        x1, y1 = cx + r * math.sin(a - half), cy - r * math.cos(a - half)
        x2, y2 = cx + r * math.sin(a + half), cy - r * math.cos(a + half)
        parts.append(
            f'<path d="M{cx:.2f},{cy:.2f} L{x1:.3f},{y1:.3f} '
            f'A{r:.3f},{r:.3f} 0 0 1 {x2:.3f},{y2:.3f} Z" '
            f'fill="#3a6ea5" fill-opacity="0.8" data-angle="{angle:g}" data-frequency="{f:.12g}"/>\n'
        )
    return _doc(size, size, "".join(parts), title)


def histogram_svg(edges, densities, pdf_points=(), title="Wind speed histogram",
                  x_max=12.0, y_max=0.65, width=560, height=360):
    """Bars of ``densities`` over ``edges`` with an optional (v, f) line overlay.

    Axis ranges default to 0-12 m/s and 0-0.65 s/m so charts of different
    stations are directly comparable.
    """
    left, bottom, right, top = 50, height - 40, width - 15, 20
    sx = (right - left) / x_max
    sy = (bottom - top) / y_max

    def X(v):
        return left + min(v, x_max) * sx

    def Y(d):
        return bottom - min(d, y_max) * sy

    parts = [
        f'<line x1="{left}" y1="{bottom}" x2="{right}" y2="{bottom}" stroke="black"/>\n',
        f'<line x1="{left}" y1="{bottom}" x2="{left}" y2="{top}" stroke="black"/>\n',
    ]
    for v in range(0, int(x_max) + 1, 2):
        parts.append(f'<text x="{X(v):.2f}" y="{bottom + 15}" text-anchor="middle">{v}</text>\n')
    for i in range(0, 7):
        d = i * 0.1
        if d <= y_max:
            parts.append(f'<text x="{left - 5}" y="{Y(d) + 4:.2f}" text-anchor="end">{d:.1f}</text>\n')
    parts.append(f'<text x="{(left + right) / 2:.2f}" y="{height - 5}" text-anchor="middle">'
                 "wind speed (m/s)</text>\n")
    for lo, hi, d in zip(edges[:-1], edges[1:], densities):
        if lo >= x_max or d <= 0:
            continue
        parts.append(
            f'<rect x="{X(lo):.3f}" y="{Y(d):.3f}" width="{X(hi) - X(lo):.3f}" '
            f'height="{bottom - Y(d):.3f}" fill="#9bb7d4" stroke="#557" data-density="{d:.12g}"/>\n'
        )
    pts = [(v, f) for v, f in pdf_points if v <= x_max]
    if pts:
        path = " ".join(f"{X(v):.3f},{Y(f):.3f}" for v, f in pts)
        parts.append(f'<polyline points="{path}" fill="none" stroke="#b22" stroke-width="2"/>\n')
    return _doc(width, height, "".join(parts), title)
