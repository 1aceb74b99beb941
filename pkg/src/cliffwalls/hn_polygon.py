"""Polygons of filtration data and the global-section bounds they imply.

Points live in the (ch2, c1) plane.  Edge lengths are measured in the
weighted norm ||x + iy|| = sqrt(x^2 + (2 H^2 + 4) y^2) (the weight equals
4g), floored to integers; half the Euler characteristic plus half the
floored total length caps the dimension of global sections.

``max_convex_chain`` is the search-side oracle: the exact maximum of the
floored edge-length sum over all convex lattice chains from the origin to
the class endpoint inside a given region.  It is a plain dynamic program
over (previous vertex, current vertex) states with integer arithmetic
throughout; results are independent of evaluation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import DomainError, RegionError
from .lattice import (
    ChernCharacter,
    PushforwardSpec,
    SurfaceK3,
    euler_characteristic,
    pushforward_class,
)
from .numerics import _frac, floor_sqrt


@dataclass(frozen=True)
class ZbarPoint:
    """(ch2, c1) of a class; the plane all polygons are drawn in."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _frac(self.x))
        object.__setattr__(self, "y", _frac(self.y))


def zbar(v: ChernCharacter) -> ZbarPoint:
    return ZbarPoint(v.ch2, Fraction(v.c1))


def norm_weight(s: SurfaceK3) -> int:
    """Weight on the imaginary part: 2 H^2 + 4 = 4g."""
    return 2 * s.h_sq + 4


def ns_norm_sq(p: ZbarPoint, q: ZbarPoint, s: SurfaceK3) -> Fraction:
    dx = q.x - p.x
    dy = q.y - p.y
    return dx * dx + norm_weight(s) * dy * dy


def ns_norm_floor(p: ZbarPoint, q: ZbarPoint, s: SurfaceK3) -> int:
    """Integer part of the weighted segment length, exactly."""
    return floor_sqrt(ns_norm_sq(p, q, s))


class HNPolygon:
    """Convex chain p0 = origin, p1, ..., pn of extremal points.

    Edges are ordered by strictly decreasing slope ch2-rate (dx/dy with
    dy > 0; a dy = 0 edge is only legal first, pointing right).  That is
    exactly convexity with the chord p0-pn underneath.
    """

    def __init__(self, points: Sequence[ZbarPoint]):
        pts = [p if isinstance(p, ZbarPoint) else ZbarPoint(*p) for p in points]
        if len(pts) < 2:
            raise DomainError("HNPolygon: need at least two points")
        if pts[0].x != 0 or pts[0].y != 0:
            raise DomainError("HNPolygon: chain must start at the origin")
        prev_slope = None  # None encodes the infinite starting slope
        for a, b in zip(pts, pts[1:]):
            dx, dy = b.x - a.x, b.y - a.y
            if dy < 0:
                raise DomainError("HNPolygon: edges cannot decrease in c1")
            if dy == 0:
                if prev_slope is not None or dx <= 0:
                    raise DomainError(
                        "HNPolygon: a horizontal edge is only legal first, "
                        "pointing in the positive ch2 direction")
                continue  # slope stays 'infinite' until a dy>0 edge appears
            slope = dx / dy
            if prev_slope is not None and slope >= prev_slope:
                raise DomainError(
                    "HNPolygon: edge slopes must strictly decrease")
            prev_slope = slope
        self.points = tuple(pts)

    def edges(self):
        return list(zip(self.points, self.points[1:]))

    @property
    def end(self) -> ZbarPoint:
        return self.points[-1]


@dataclass(frozen=True)
class BoundReport:
    """A computed cap with its exact value and where it came from."""

    value: Fraction
    integer_bound: int
    provenance: str
    slack_delta: Optional[Fraction] = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        assert self.integer_bound <= self.value < self.integer_bound + 1


def floored_length_sum(poly: HNPolygon, s: SurfaceK3) -> int:
    return sum(ns_norm_floor(a, b, s) for a, b in poly.edges())


def h0_bound_from_polygon(poly: HNPolygon, v: ChernCharacter,
                          s: SurfaceK3) -> BoundReport:
    """chi(v)/2 + half the floored edge lengths; the polygon must end at
    the point of v.  Negative values are reported as-is."""
    endpoint = zbar(v)
    if poly.end != endpoint:
        raise DomainError(
            f"h0_bound_from_polygon: polygon ends at {poly.end}, "
            f"class sits at {endpoint}")
    total = floored_length_sum(poly, s)
    value = euler_characteristic(v) / 2 + Fraction(total, 2)
    return BoundReport(value=value, integer_bound=math.floor(value),
                       provenance="polygon-edges",
                       details={"floored_length_sum": total})


@dataclass(frozen=True)
class Triangle:
    """o-apex-q bounding triangle of all admissible polygons of a class."""

    o: ZbarPoint
    apex: ZbarPoint
    q: ZbarPoint


def bounding_triangle(p: PushforwardSpec, s: SurfaceK3) -> Triangle:
    """Triangle from the extremal wall window: o the origin, q the class
    point (d - r(g-1), r), apex in closed form at height d/H^2."""
    if p.d < 0:
        raise DomainError("bounding_triangle: degree must be >= 0")
    h2 = s.h_sq
    g = s.genus
    apex = ZbarPoint(Fraction(p.d * p.d * g, h2 * h2 * p.r) - p.r,
                     Fraction(p.d, h2))
    q = zbar(pushforward_class(p, s))
    return Triangle(ZbarPoint(Fraction(0), Fraction(0)), apex, q)


def h0_closed_form_bound(p: PushforwardSpec, s: SurfaceK3,
                         enclosure_scale: int = 10**6) -> BoundReport:
    """Strict cap r + g d^2 / (4 r (g-1)^2) + r/g for 0 <= d <= r(g-1).

    Also evaluates the sharper two-leg triangle route exactly: the o-side
    leg collapses to a rational, the q-side leg is a surd enclosed from
    above, and the difference between both caps is the slack term, which
    stays in [0, 2r/g) (certified by exact squared comparison).
    """
    g, r, d = s.genus, p.r, p.d
    if not 0 <= d <= r * (g - 1):
        raise DomainError(
            f"h0_closed_form_bound: need 0 <= d <= r(g-1) = {r * (g - 1)}, "
            f"got d = {d}")
    h2 = s.h_sq
    value = r + Fraction(g * d * d, 4 * r * (g - 1) ** 2) + Fraction(r, g)

    # Exact triangle route: chi/2 + (|o-apex| + |apex-q|)/2.
    a_leg = Fraction(d * d * g, h2 * h2 * r)  # |o-apex| = a_leg + r exactly
    tri = bounding_triangle(p, s)
    q_leg_sq = ns_norm_sq(tri.apex, tri.q, s)
    base = Fraction(r * (g - 1) - d) + a_leg + r  # |apex-q| = base + slack
    cap = Fraction(2 * r, g)
    # `slack < cap` is decidable exactly; enclose the surd tightly enough
    # that the reported rational slack witnesses it whenever it holds.
    exact_lt = q_leg_sq < (base + cap) ** 2
    scale = enclosure_scale
    while True:
        hi = Fraction(floor_sqrt(q_leg_sq * scale * scale) + 1, scale)
        slack = hi - base
        if not exact_lt or slack < cap or scale > enclosure_scale * 10**12:
            break
        scale *= 1024
    chi = Fraction(r * (1 - g) + d)
    triangle_value = chi / 2 + (a_leg + r) / 2 + hi / 2
    return BoundReport(
        value=value, integer_bound=math.floor(value),
        provenance="closed-form", slack_delta=slack,
        details={"triangle_value_upper": triangle_value,
                 "o_leg": a_leg + r,
                 "q_leg_sq": q_leg_sq,
                 "slack_lt_2r_over_g": exact_lt})


class ChainRegion:
    """Region between a boundary polyline (origin -> ... -> q) and the
    chord q -> origin; chains are searched inside it.

    The polyline must start at the origin, end at the lattice endpoint q,
    and be nondecreasing in y.  Membership at height y means: at least the
    chord abscissa, at most the polyline abscissa.
    """

    def __init__(self, boundary: Sequence[tuple]):
        pts = [(_frac(x), _frac(y)) for (x, y) in boundary]
        if len(pts) < 2:
            raise RegionError("ChainRegion: boundary needs at least two points")
        if pts[0] != (0, 0):
            raise RegionError("ChainRegion: boundary must start at the origin")
        for (_, y0), (_, y1) in zip(pts, pts[1:]):
            if y1 < y0:
                raise RegionError("ChainRegion: boundary must not decrease in y")
        qx, qy = pts[-1]
        if qy <= 0:
            raise RegionError("ChainRegion: endpoint must have positive height")
        self.boundary = pts
        self.q = (qx, qy)

    def x_cap(self, y: Fraction) -> Optional[Fraction]:
        """Largest boundary abscissa at height y (None when y is outside)."""
        y = _frac(y)
        best = None
        for (x0, y0), (x1, y1) in zip(self.boundary, self.boundary[1:]):
            if y0 <= y <= y1:
                if y0 == y1:
                    cand = max(x0, x1)
                else:
                    cand = x0 + (x1 - x0) * (y - y0) / (y1 - y0)
                best = cand if best is None else max(best, cand)
        # vertices at exactly height y are covered by both adjacent segments
        return best

    def chord_x(self, y: Fraction) -> Fraction:
        qx, qy = self.q
        return qx * _frac(y) / qy

    def contains(self, x, y) -> bool:
        x, y = _frac(x), _frac(y)
        if not 0 <= y <= self.q[1]:
            return False
        cap = self.x_cap(y)
        if cap is None:
            return False
        return self.chord_x(y) <= x <= cap


def region_from_triangle(tri: Triangle) -> ChainRegion:
    return ChainRegion([(tri.o.x, tri.o.y), (tri.apex.x, tri.apex.y),
                        (tri.q.x, tri.q.y)])


def polygon_in_region(poly: HNPolygon, region: ChainRegion) -> bool:
    """Exact containment of every polygon vertex in the region."""
    return all(region.contains(p.x, p.y) for p in poly.points)


def max_convex_chain(region: ChainRegion, s: SurfaceK3,
                     x_step: Fraction = Fraction(1),
                     return_chain: bool = False):
    """Exact maximum of the floored edge-length total over convex lattice
    chains from the origin to the region endpoint.

    Vertices sit on x in x_step * Z at integer heights 1 .. y(q) - 1 inside
    the region; edge slopes dx/dy strictly decrease.  Dynamic program over
    (previous vertex, current vertex) states; integer arithmetic only.
    """
    x_step = _frac(x_step)
    if x_step <= 0:
        raise DomainError("max_convex_chain: x_step must be positive")
    qx, qy = region.q
    if qy.denominator != 1:
        raise RegionError("max_convex_chain: endpoint height must be integral")
    r = int(qy)
    qk = qx / x_step
    if qk.denominator != 1:
        raise RegionError("max_convex_chain: endpoint must sit on the lattice")
    qk = int(qk)

    w = norm_weight(s)
    step_sq = x_step * x_step

    def edge_floor(dk: int, dy: int) -> int:
        if x_step == 1:
            return math.isqrt(dk * dk + w * dy * dy)
        return floor_sqrt(step_sq * dk * dk + w * dy * dy)

    # lattice points per level, as integer x-indices k with x = k * x_step
    pts: list[tuple[int, int]] = [(0, 0)]  # (k, y)
    for y in range(1, r):
        cap = region.x_cap(Fraction(y))
        if cap is None:
            continue
        k_hi = math.floor(cap / x_step)
        k_lo = math.ceil(region.chord_x(Fraction(y)) / x_step)
        for k in range(k_lo, k_hi + 1):
            pts.append((k, y))
    pts.append((qk, r))
    n = len(pts)
    q_id = n - 1

    # best[i][j]: max floored total of a convex chain ending with edge i->j
    best: list[dict[int, int]] = [dict() for _ in range(n)]
    parent: list[dict[int, tuple]] = [dict() for _ in range(n)] if return_chain else []
    for j in range(1, n):
        kj, yj = pts[j]
        val = edge_floor(kj, yj)
        best[j][0] = val
        if return_chain:
            parent[j][0] = None

    order = sorted(range(1, n), key=lambda i: (pts[i][1], pts[i][0]))
    for j in order:
        kj, yj = pts[j]
        if yj >= r:
            continue
        for i, acc in list(best[j].items()):
            ki, yi = pts[i]
            dy_in = yj - yi
            dk_in = kj - ki
            for t in range(1, n):
                kt, yt = pts[t]
                if yt <= yj:
                    continue
                # slope(j->t) < slope(i->j):  (kt-kj)*dy_in < dk_in*(yt-yj)
                if (kt - kj) * dy_in >= dk_in * (yt - yj):
                    continue
                cand = acc + edge_floor(kt - kj, yt - yj)
                if cand > best[t].get(j, -1):
                    best[t][j] = cand
                    if return_chain:
                        parent[t][j] = (j, i)

    result = max(best[q_id].values())
    if not return_chain:
        return result
    # reconstruct one optimal chain for containment auditing
    i_best = max(best[q_id], key=lambda i: (best[q_id][i], i))
    chain = [q_id]
    cur, prev = q_id, i_best
    while prev is not None:
        chain.append(prev)
        nxt = parent[cur][prev]
        if nxt is None:
            break
        cur, prev = nxt
    chain.reverse()
    points = [ZbarPoint(pts[i][0] * x_step, Fraction(pts[i][1])) for i in chain]
    return result, points
