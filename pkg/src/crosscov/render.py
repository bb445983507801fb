"""Deterministic SVG emission: covariogram heatmaps and catalog figures.

Everything is computed exactly and converted to fixed-precision pixel
coordinates only at the last moment, so identical inputs produce identical
bytes.  The renderer is intentionally small: filled polygons, line segments
and axis-aligned cells cover every picture the package needs.
"""

from __future__ import annotations

from . import covariogram
from .catalog import (
    Parall12Params,
    Parall34Params,
    make_cone_counterexample,
    make_pair,
)
from .geometry import ConvexPolygon, Point2, clip_by_halfplane, polygon
from .rational import rational

VIEW = 800
PAD_FRACTION = rational(1, 20)

COLORS = {
    "background": "#ffffff",
    "support": "#1f4e79",
    "singular": "#c0392b",
    "first": "#2e75b6",
    "second": "#c55a11",
    "cone_first": "#2e75b6",
    "cone_second": "#c55a11",
}


class _Viewport:
    """Affine map from a rational world box to the fixed pixel square."""

    def __init__(self, xmin, ymin, xmax, ymax):
        pad = max(xmax - xmin, ymax - ymin) * PAD_FRACTION
        if pad == 0:
            pad = rational(1)
        xmin, xmax = xmin - pad, xmax + pad
        ymin, ymax = ymin - pad, ymax + pad
        span = max(xmax - xmin, ymax - ymin)
        self.scale = rational(VIEW) / span
        # center the shorter axis
        self.x0 = xmin - (span - (xmax - xmin)) / 2
        self.y1 = ymax + (span - (ymax - ymin)) / 2

    def x(self, wx) -> str:
        return f"{float((wx - self.x0) * self.scale):.2f}"

    def y(self, wy) -> str:
        return f"{float((self.y1 - wy) * self.scale):.2f}"

    def length(self, w) -> str:
        return f"{float(w * self.scale):.2f}"


def _svg_open(colors) -> str:
    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{VIEW}" height="{VIEW}" '
        f'viewBox="0 0 {VIEW} {VIEW}">\n'
        f'<rect width="{VIEW}" height="{VIEW}" fill="{colors["background"]}"/>\n'
    )


def _poly_points(vp: _Viewport, vertices) -> str:
    return " ".join(f"{vp.x(v.x)},{vp.y(v.y)}" for v in vertices)


def _gray(value, peak) -> str:
    """Linear map: 0 -> white, peak -> black."""
    if peak == 0:
        return "#ffffff"
    level = 255 - round(float(value / peak) * 255)
    level = min(255, max(0, level))
    return f"#{level:02x}{level:02x}{level:02x}"


def render_heatmap(
    k: ConvexPolygon,
    l: ConvexPolygon,
    nx: int = 41,
    ny: int = 41,
    colors=None,
    workers=None,
) -> str:
    """Gray heatmap of g_{K,L} with the support outline and the second
    singular set drawn on top."""
    colors = {**COLORS, **(colors or {})}
    supp = covariogram.support(k, l)
    grid = covariogram.sample_grid(k, l, nx, ny, workers=workers)
    xmin, ymin, xmax, ymax = supp.bbox()
    vp = _Viewport(xmin, ymin, xmax, ymax)
    peak = max(max(row) for row in grid.values)

    parts = [_svg_open(colors)]
    half_x, half_y = grid.x_step / 2, grid.y_step / 2
    for iy in range(grid.ny):
        for ix in range(grid.nx):
            v = grid.values[iy][ix]
            if v == 0:
                continue
            p = grid.point_at(ix, iy)
            parts.append(
                f'<rect x="{vp.x(p.x - half_x)}" y="{vp.y(p.y + half_y)}" '
                f'width="{vp.length(grid.x_step)}" height="{vp.length(grid.y_step)}" '
                f'fill="{_gray(v, peak)}"/>\n'
            )
    parts.append(
        f'<polygon points="{_poly_points(vp, supp.vertices)}" fill="none" '
        f'stroke="{colors["support"]}" stroke-width="2"/>\n'
    )
    for (a, b) in covariogram.second_singular_set(k, l):
        parts.append(
            f'<line x1="{vp.x(a.x)}" y1="{vp.y(a.y)}" x2="{vp.x(b.x)}" '
            f'y2="{vp.y(b.y)}" stroke="{colors["singular"]}" stroke-width="1.5"/>\n'
        )
    parts.append("</svg>\n")
    return "".join(parts)


def _pair_panel(vp, pair, colors, label_shift):
    first = pair.first.translate(label_shift)
    second = pair.second.translate(label_shift)
    return (
        f'<polygon points="{_poly_points(vp, first.vertices)}" '
        f'fill="{colors["first"]}" fill-opacity="0.55" '
        f'stroke="{colors["first"]}" stroke-width="2"/>\n'
        f'<polygon points="{_poly_points(vp, second.vertices)}" '
        f'fill="{colors["second"]}" fill-opacity="0.55" '
        f'stroke="{colors["second"]}" stroke-width="2"/>\n'
    )


def _cone_patch(cone, radius):
    """Cone clipped to the centered box of the given half-width."""
    box = polygon(
        (-radius, -radius), (radius, -radius), (radius, radius), (-radius, radius)
    )
    pts = list(box.vertices)
    lo, hi = cone.lower, cone.upper
    pts = clip_by_halfplane(pts, rational(lo.dy), rational(-lo.dx), rational(0))
    pts = clip_by_halfplane(pts, rational(-hi.dy), rational(hi.dx), rational(0))
    return pts


def _figure_cones(colors) -> str:
    pair1, pair2 = make_cone_counterexample()
    radius = rational(2)
    shift = rational(5)
    vp = _Viewport(-radius, -radius, radius + shift, radius)
    parts = [_svg_open(colors)]
    for offset, cp in ((rational(0), pair1), (shift, pair2)):
        for cone, color_key in ((cp.a, "cone_first"), (cp.b.reflect(), "cone_second")):
            pts = _cone_patch(cone, radius)
            moved = [Point2(p.x + offset, p.y) for p in pts]
            parts.append(
                f'<polygon points="{_poly_points(vp, moved)}" '
                f'fill="{colors[color_key]}" fill-opacity="0.55" '
                f'stroke="{colors[color_key]}" stroke-width="1.5"/>\n'
            )
    parts.append("</svg>\n")
    return "".join(parts)


def _figure_pairs(which_pair: tuple, params, colors) -> str:
    pairs = [make_pair(i, params) for i in which_pair]
    boxes = []
    for pair in pairs:
        for poly in (pair.first, pair.second):
            boxes.append(poly.bbox())
    xmin = min(b[0] for b in boxes)
    ymin = min(b[1] for b in boxes)
    xmax = max(b[2] for b in boxes)
    ymax = max(b[3] for b in boxes)
    shift_step = (xmax - xmin) * rational(5, 4)
    vp = _Viewport(xmin, ymin, xmax + shift_step, ymax)
    parts = [_svg_open(colors)]
    for i, pair in enumerate(pairs):
        shift = Point2(shift_step * i, rational(0))
        parts.append(_pair_panel(vp, pair, colors, shift))
    parts.append("</svg>\n")
    return "".join(parts)


FIGURES = ("cones", "parall", "parall-due")


def render_figure(name: str, colors=None) -> str:
    """Built-in figure recipes: the cone counterexample pairs side by side,
    and the two parallelogram families at small reference parameters."""
    colors = {**COLORS, **(colors or {})}
    if name == "cones":
        return _figure_cones(colors)
    if name == "parall":
        params = Parall12Params(1, 1, 1, 1, _ORIGIN)
        return _figure_pairs((1, 2), params, colors)
    if name == "parall-due":
        params = Parall34Params(1, 1, 2, rational(3, 2), 1, _ORIGIN)
        return _figure_pairs((3, 4), params, colors)
    raise ValueError(f"unknown figure {name!r}: choose from {', '.join(FIGURES)}")


_ORIGIN = Point2(rational(0), rational(0))
