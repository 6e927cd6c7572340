"""Static SVG illustration of planar certificates.

Rendering converts rationals to floats — fine for pictures, never used for
verification. Groups are colored from a fixed palette, each group's hull is
outlined (point, segment, or polygon as the size allows), and the common point
is drawn as a crossed marker on top.
"""

from __future__ import annotations

from typing import Optional, Sequence

from .linalg import Vector
from .partition import PartitionCertificate
from .radon import RadonCertificate

_PALETTE = (
    "#1f77b4",
    "#d62728",
    "#2ca02c",
    "#9467bd",
    "#ff7f0e",
    "#17becf",
    "#8c564b",
    "#e377c2",
)

_VIEW = 640.0
_MARGIN = 0.05


def _hull_order(points: list[tuple[float, float]]) -> list[tuple[float, float]]:
    """Convex hull vertices in drawing order (monotone chain); tiny inputs pass through."""
    unique = sorted(set(points))
    if len(unique) <= 2:
        return unique

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[tuple[float, float]] = []
    for p in unique:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[tuple[float, float]] = []
    for p in reversed(unique):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _fmt(x: float) -> str:
    return f"{x:.3f}"


def render_svg(
    points: Sequence[Vector],
    groups: Sequence[Sequence[int]],
    common_point: Vector,
    labels: Optional[Sequence[str]] = None,
) -> str:
    """SVG drawing of a planar partition certificate; requires 2-D points."""
    if any(p.dim != 2 for p in points) or common_point.dim != 2:
        raise ValueError("SVG output is only available for 2-dimensional point sets")

    xs = [float(p[0]) for p in points] + [float(common_point[0])]
    ys = [float(p[1]) for p in points] + [float(common_point[1])]
    width = max(xs) - min(xs)
    height = max(ys) - min(ys)
    span = max(width, height) or 1.0
    pad = span * _MARGIN
    scale = _VIEW / (span + 2 * pad)

    def place(x: float, y: float) -> tuple[float, float]:
        # Flip y so larger coordinates point up on screen.
        px = (x - min(xs) + pad) * scale
        py = _VIEW - (y - min(ys) + pad) * scale
        return px, py

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_fmt(_VIEW)}" '
        f'height="{_fmt(_VIEW)}" viewBox="0 0 {_fmt(_VIEW)} {_fmt(_VIEW)}">',
        f'<rect width="{_fmt(_VIEW)}" height="{_fmt(_VIEW)}" fill="#ffffff"/>',
    ]
    for g, group in enumerate(groups):
        color = _PALETTE[g % len(_PALETTE)]
        placed = [place(float(points[i][0]), float(points[i][1])) for i in group]
        hull = _hull_order(placed)
        if len(hull) >= 3:
            path = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in hull)
            parts.append(
                f'<polygon points="{path}" fill="{color}" fill-opacity="0.12" '
                f'stroke="{color}" stroke-width="1.5"/>'
            )
        elif len(hull) == 2:
            (x1, y1), (x2, y2) = hull
            parts.append(
                f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                f'stroke="{color}" stroke-width="1.5"/>'
            )
        for (x, y), i in zip(placed, group):
            parts.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="4" fill="{color}"/>')
            text = labels[i] if labels else str(i)
            parts.append(
                f'<text x="{_fmt(x + 6)}" y="{_fmt(y - 6)}" font-size="12" '
                f'font-family="sans-serif" fill="{color}">{text}</text>'
            )
    cx, cy = place(float(common_point[0]), float(common_point[1]))
    for dx1, dy1, dx2, dy2 in ((-6, -6, 6, 6), (-6, 6, 6, -6)):
        parts.append(
            f'<line x1="{_fmt(cx + dx1)}" y1="{_fmt(cy + dy1)}" x2="{_fmt(cx + dx2)}" '
            f'y2="{_fmt(cy + dy2)}" stroke="#000000" stroke-width="2"/>'
        )
    parts.append(f'<circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="3" fill="#000000"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def certificate_svg(
    points: Sequence[Vector],
    cert: RadonCertificate | PartitionCertificate,
    labels: Optional[Sequence[str]] = None,
) -> str:
    if isinstance(cert, RadonCertificate):
        groups: Sequence[Sequence[int]] = (cert.group1, cert.group2)
    else:
        groups = cert.groups
    return render_svg(points, groups, cert.common_point, labels)
