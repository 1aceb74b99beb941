"""Deterministic SVG rendering of the slice geometry.

Two panels: the (beta, alpha) slice with the boundary curve drawn cell by
cell (each unit cell one path; parabolic cells are exact quadratic Bezier
arcs, plane cells are polylines), the vertical jump segments, and the
first-wall band; and the (ch2, c1) plane with the bounding triangle.

Coordinates are rendered with a fixed six-decimal formatter driven by
integer arithmetic only, so identical inputs give byte-identical files.
Exact values ride along in data-*-num/data-*-den attributes; nothing
semantic is ever parsed back out of the decimal strings.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import DomainError
from .hn_polygon import Triangle, bounding_triangle
from .lattice import PushforwardSpec, SurfaceK3
from .numerics import _frac
from .plane_curves import gamma_tilde
from .stability import gamma_value
from .walls import first_wall_beta_bounds

_SCALE = 10**6


def fmt(x) -> str:
    """Fixed six-decimal rendering of a rational, no floating point."""
    x = _frac(x)
    n = round(x * _SCALE)  # round-half-even on the exact rational
    sign = "-" if n < 0 else ""
    n = abs(n)
    return f"{sign}{n // _SCALE}.{n % _SCALE:06d}"


def _data_attrs(prefix: str, value: Fraction) -> str:
    v = _frac(value)
    return f' data-{prefix}-num="{v.numerator}" data-{prefix}-den="{v.denominator}"'


class _Canvas:
    """Maps a rational world box onto a pixel box, collecting elements."""

    def __init__(self, world, screen, pad=Fraction(10)):
        (self.wx0, self.wy0, self.wx1, self.wy1) = [_frac(v) for v in world]
        (self.sx0, self.sy0, self.sx1, self.sy1) = [_frac(v) for v in screen]
        if self.wx1 <= self.wx0 or self.wy1 <= self.wy0:
            raise DomainError("svg canvas: empty world box")
        self.pad = pad
        self.parts: list[str] = []

    def x(self, wx) -> Fraction:
        t = (_frac(wx) - self.wx0) / (self.wx1 - self.wx0)
        return self.sx0 + self.pad + t * (self.sx1 - self.sx0 - 2 * self.pad)

    def y(self, wy) -> Fraction:
        t = (_frac(wy) - self.wy0) / (self.wy1 - self.wy0)
        return self.sy1 - self.pad - t * (self.sy1 - self.sy0 - 2 * self.pad)

    def add(self, element: str) -> None:
        self.parts.append(element)


def _axes(c: _Canvas, suffix: str) -> None:
    if c.wy0 <= 0 <= c.wy1:
        y0 = c.y(0)
        c.add(f'<line id="axis-x{suffix}" x1="{fmt(c.x(c.wx0))}" y1="{fmt(y0)}" '
              f'x2="{fmt(c.x(c.wx1))}" y2="{fmt(y0)}" stroke="#888" '
              'stroke-width="0.75"/>')
    if c.wx0 <= 0 <= c.wx1:
        x0 = c.x(0)
        c.add(f'<line id="axis-y{suffix}" x1="{fmt(x0)}" y1="{fmt(c.y(c.wy0))}" '
              f'x2="{fmt(x0)}" y2="{fmt(c.y(c.wy1))}" stroke="#888" '
              'stroke-width="0.75"/>')


def _gamma_cell_path_k3(c: _Canvas, n: int, s: SurfaceK3) -> str:
    # On the cell [n-1/2, n+1/2] the curve is A b^2 + B b + C, one parabola:
    # a single quadratic Bezier with control point at the tangent crossing.
    a = Fraction(s.h_sq, 2) + 1
    b = Fraction(-2 * n)
    cc = Fraction(n * n - 1)
    x0, x1 = Fraction(2 * n - 1, 2), Fraction(2 * n + 1, 2)
    y0 = a * x0 * x0 + b * x0 + cc
    y1 = a * x1 * x1 + b * x1 + cc
    xm = (x0 + x1) / 2
    ym = y0 + (2 * a * x0 + b) * (x1 - x0) / 2  # tangent from x0 at midpoint
    d = (f"M {fmt(c.x(x0))} {fmt(c.y(y0))} "
         f"Q {fmt(c.x(xm))} {fmt(c.y(ym))} {fmt(c.x(x1))} {fmt(c.y(y1))}")
    return (f'<path id="gamma-path-{n}" class="gamma-path" d="{d}" '
            'fill="none" stroke="#1f4e9c" stroke-width="1.5"'
            f'{_data_attrs("cell", Fraction(n))}/>')


def _gamma_cell_path_p2(c: _Canvas, n: int) -> str:
    # Piecewise linear on each cell: the square terms cancel against the
    # profile, leaving a kink at the integer.
    xs = [Fraction(2 * n - 1, 2), Fraction(n), Fraction(2 * n + 1, 2)]
    ys = []
    for x in xs:
        t = abs(x - n)
        gt = t * t / 2 - Fraction(3, 2) * t + 1  # t > 0 on cell edges
        ys.append(x * x / 2 - gt)
    # value used at the kink abscissa is the two-sided limit, not the jump
    pts = " ".join(f"{fmt(c.x(x))},{fmt(c.y(y))}" for x, y in zip(xs, ys))
    return (f'<polyline id="gamma-tilde-path-{n}" class="gamma-tilde-path" '
            f'points="{pts}" fill="none" stroke="#1f4e9c" stroke-width="1.5"'
            f'{_data_attrs("cell", Fraction(n))}/>')


def _vertical_segment(c: _Canvas, n: int, top: Fraction, idx: int) -> str:
    x = c.x(Fraction(n))
    return (f'<line id="gamma-vertical-{idx}" class="gamma-vertical" '
            f'x1="{fmt(x)}" y1="{fmt(c.y(top - 1))}" '
            f'x2="{fmt(x)}" y2="{fmt(c.y(top))}" '
            'stroke="#1f4e9c" stroke-width="1.5"/>')


def _triangle_panel(c: _Canvas, tri: Triangle) -> None:
    _axes(c, "-zbar")
    pts = " ".join(f"{fmt(c.x(p.x))},{fmt(c.y(p.y))}"
                   for p in (tri.o, tri.apex, tri.q))
    c.add('<polygon id="triangle" points="' + pts + '" fill="#f2c94c55" '
          'stroke="#b8860b" stroke-width="1.25"'
          + _data_attrs("apex-x", tri.apex.x) + _data_attrs("apex-y", tri.apex.y)
          + _data_attrs("q-x", tri.q.x) + _data_attrs("q-y", tri.q.y) + "/>")


def _wall_band(c: _Canvas, lo: Fraction, hi: Fraction, raw_lo: Fraction,
               raw_hi: Fraction) -> str:
    x0, x1 = c.x(lo), c.x(hi)
    y0, y1 = c.y(c.wy1), c.y(c.wy0)
    return ('<rect id="wall-band" x="%s" y="%s" width="%s" height="%s" '
            'fill="#d1495b33" stroke="#d1495b" stroke-width="0.75"%s%s%s%s/>'
            % (fmt(x0), fmt(y0), fmt(x1 - x0), fmt(y1 - y0),
               _data_attrs("beta1", lo), _data_attrs("beta2", hi),
               _data_attrs("beta1-raw", raw_lo), _data_attrs("beta2-raw", raw_hi)))


def render_k3(r: int, d: int, g: int) -> str:
    s = SurfaceK3(g)
    spec = PushforwardSpec(r, d)
    bounds = first_wall_beta_bounds(spec, s)
    tri = bounding_triangle(spec, s)

    n_lo = math.floor(bounds.beta1_min - Fraction(1, 2))
    n_hi = math.ceil(bounds.beta2_max + Fraction(1, 2))
    cells = list(range(n_lo, n_hi + 1))
    xs = [Fraction(2 * n_lo - 1, 2), Fraction(2 * n_hi + 1, 2)]
    y_candidates = [gamma_value(x, s) for x in xs] + [Fraction(-2), Fraction(2)]
    world = (xs[0], min(y_candidates) - Fraction(1, 2),
             xs[1], max(y_candidates) + Fraction(1, 2))

    left = _Canvas(world, (0, 0, 420, 420))
    _axes(left, "")
    left.add(_wall_band(left, bounds.refined_beta1, bounds.refined_beta2,
                        bounds.beta1_min, bounds.beta2_max))
    for n in cells:
        left.add(_gamma_cell_path_k3(left, n, s))
    for i, n in enumerate(cells):
        top = Fraction(s.h_sq, 2) * n * n
        left.add(_vertical_segment(left, n, top, i))

    t_xs = [tri.o.x, tri.apex.x, tri.q.x]
    t_ys = [tri.o.y, tri.apex.y, tri.q.y]
    t_world = (min(t_xs) - 1, min(t_ys) - 1, max(t_xs) + 1, max(t_ys) + 1)
    right = _Canvas(t_world, (430, 0, 860, 420))
    _triangle_panel(right, tri)

    body = "\n".join(left.parts + right.parts)
    return ('<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            'width="860" height="420" viewBox="0 0 860 420">\n'
            f'<desc>slice geometry: K3 g={g} r={r} d={d}</desc>\n'
            + body + "\n</svg>\n")


def render_p2(r: int, d: int, l: int) -> str:
    if r < 1 or l < 1 or d < 0:
        raise DomainError("render_p2: need r >= 1, l >= 1, d >= 0")
    # first-wall window in the plane slice: width l, right end d/(r l)
    b2 = Fraction(d, r * l)
    b1 = b2 - l
    n_lo = math.floor(b1 - Fraction(1, 2))
    n_hi = math.ceil(b2 + Fraction(1, 2))
    cells = list(range(n_lo, n_hi + 1))
    xs = [Fraction(2 * n_lo - 1, 2), Fraction(2 * n_hi + 1, 2)]
    y_candidates = [gamma_tilde(x) for x in xs] + [Fraction(-2), Fraction(2)]
    world = (xs[0], min(y_candidates) - Fraction(1, 2),
             xs[1], max(y_candidates) + Fraction(1, 2))

    left = _Canvas(world, (0, 0, 420, 420))
    _axes(left, "")
    left.add(_wall_band(left, b1, b2, b1, b2))
    for n in cells:
        left.add(_gamma_cell_path_p2(left, n))
    for i, n in enumerate(cells):
        top = Fraction(n * n, 2)
        left.add(_vertical_segment(left, n, top, i))

    # triangle in the (ch2, c1) plane: apex of the high-degree envelope
    apex = (Fraction(d * d, 2 * r * l * l), Fraction(d, l))
    q = (Fraction(d) - Fraction(r * l * l, 2), Fraction(r * l))
    t_xs = [Fraction(0), apex[0], q[0]]
    t_ys = [Fraction(0), apex[1], q[1]]
    t_world = (min(t_xs) - 1, min(t_ys) - 1, max(t_xs) + 1, max(t_ys) + 1)
    right = _Canvas(t_world, (430, 0, 860, 420))
    _axes(right, "-zbar")
    pts = " ".join(f"{fmt(right.x(x))},{fmt(right.y(y))}"
                   for x, y in [(Fraction(0), Fraction(0)), apex, q])
    right.add('<polygon id="triangle" points="' + pts + '" fill="#f2c94c55" '
              'stroke="#b8860b" stroke-width="1.25"'
              + _data_attrs("apex-x", apex[0]) + _data_attrs("apex-y", apex[1])
              + _data_attrs("q-x", q[0]) + _data_attrs("q-y", q[1]) + "/>")

    body = "\n".join(left.parts + right.parts)
    return ('<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            'width="860" height="420" viewBox="0 0 860 420">\n'
            f'<desc>slice geometry: plane l={l} r={r} d={d}</desc>\n'
            + body + "\n</svg>\n")
