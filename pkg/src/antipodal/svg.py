"""Deterministic SVG drawings of antipodal sets and polygons."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .core import AntipodalSet, is_thick, is_thin, vertex_angles

SIZE = 600
RADIUS = 250.0
DOT = 4.0
MAX_OVERLAYS = 4

# one entry per overlay slot: stroke, fill, dash pattern
STYLES = (
    ("#1f77b4", "#1f77b4", ""),
    ("#d62728", "#d62728", "6,4"),
    ("#2ca02c", "#2ca02c", "2,3"),
    ("#9467bd", "#9467bd", "10,3,2,3"),
)


def _xy(phi: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    c = SIZE / 2
    # SVG y grows downward
    return c + RADIUS * np.cos(phi), c - RADIUS * np.sin(phi)


def _f(v: float) -> str:
    s = f"{v:.6f}"
    return "0.000000" if s == "-0.000000" else s


def render_svg(aset: AntipodalSet, selections, labels=None) -> str:
    """SVG text for the set and up to four overlaid polygons.

    ``selections`` holds Selection objects or (Selection, style index) pairs.
    """
    items = []
    for i, item in enumerate(selections):
        sel, style = item if isinstance(item, tuple) else (item, i)
        items.append((sel, int(style)))
    if len(items) > MAX_OVERLAYS:
        raise ValueError(f"at most {MAX_OVERLAYS} selections can be overlaid")
    c = SIZE / 2
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" '
        f'viewBox="0 0 {SIZE} {SIZE}">',
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="#ffffff"/>',
        f'<circle cx="{_f(c)}" cy="{_f(c)}" r="{_f(RADIUS)}" fill="none" stroke="#888888" stroke-width="1"/>',
        f'<circle cx="{_f(c)}" cy="{_f(c)}" r="2" fill="#888888"/>',
    ]
    for sel, style in items:
        stroke, fill, dash = STYLES[style % len(STYLES)]
        x, y = _xy(vertex_angles(aset, sel))
        path = " ".join(
            f"{'M' if k == 0 else 'L'} {_f(a)} {_f(b)}" for k, (a, b) in enumerate(zip(x, y))
        )
        kind = "thin" if is_thin(aset, sel) else "thick" if is_thick(aset, sel) else "neither"
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        out.append(
            f'<path d="{path} Z" fill="{fill}" fill-opacity="0.15" stroke="{stroke}" '
            f'stroke-width="2"{dash_attr} data-selection="{sel}" data-class="{kind}"/>'
        )
    n = aset.n
    x, y = _xy(aset.point_angles())
    for k in range(2 * n):
        if k < n:
            out.append(f'<circle cx="{_f(x[k])}" cy="{_f(y[k])}" r="{_f(DOT)}" fill="#000000"/>')
        else:
            out.append(
                f'<circle cx="{_f(x[k])}" cy="{_f(y[k])}" r="{_f(DOT)}" fill="#ffffff" '
                f'stroke="#000000" stroke-width="1"/>'
            )
    if labels:
        phi = aset.point_angles()
        lx = c + (RADIUS + 22) * np.cos(phi)
        ly = c - (RADIUS + 22) * np.sin(phi)
        for k, text in enumerate(labels):
            out.append(
                f'<text x="{_f(lx[k])}" y="{_f(ly[k])}" font-family="sans-serif" font-size="14" '
                f'text-anchor="middle" dominant-baseline="middle">{text}</text>'
            )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_svg(aset: AntipodalSet, selections, path, labels=None) -> int:
    """Write the drawing to ``path``; returns the number of bytes written."""
    data = render_svg(aset, selections, labels).encode("utf-8")
    Path(path).write_bytes(data)
    return len(data)
