"""Smooth plane curves: the simplified boundary profile, the piecewise
slope gauge L with its triangle inequality, hom caps, phase windows for
filtration factors, the degree-l global-section bounds, and the rank-r
Clifford index l - 4.

On the plane, classes are (rk, c1, ch2) with c1 the degree H.ch1 (H^2 = 1)
and ch2 a half-integer-friendly rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .lattice import ChernCharacter
from .numerics import _frac
from .hn_polygon import BoundReport


@dataclass(frozen=True)
class SurfacePlane:
    """The projective plane with its degree-one polarization (H^2 = 1)."""


@dataclass(frozen=True)
class PlaneCurveSpec:
    """Degree-l smooth plane curve; genus (l-1)(l-2)/2."""

    l: int

    def __post_init__(self):
        if self.l < 1:
            raise DomainError("PlaneCurveSpec: degree must be >= 1")

    @property
    def genus(self) -> int:
        return (self.l - 1) * (self.l - 2) // 2


def gamma_tilde(x) -> Fraction:
    """Boundary profile x^2/2 - g~(x); g~ is 1-periodic, equal to
    x^2/2 - (3/2)|x| + 1 on [-1/2, 1/2] away from 0 and 0 at integers.
    On each unit cell the graph is piecewise linear."""
    x = _frac(x)
    n = math.floor(x + Fraction(1, 2))
    if x == n:
        gt = Fraction(0)
    else:
        t = abs(x - n)
        gt = t * t / 2 - Fraction(3, 2) * t + 1
    return x * x / 2 - gt


def L_value(a, b) -> Fraction:
    """Piecewise gauge on the upper half plane: (3/2) b + a when a/b >= -1,
    else -b^2/(2a); both branches agree (value b/2) on the seam a/b = -1."""
    a, b = _frac(a), _frac(b)
    if b <= 0:
        raise DomainError("L_value: second coordinate must be positive")
    if a >= -b:
        return Fraction(3, 2) * b + a
    return -b * b / (2 * a)


def pushforward_class_p2(r: int, d: int, l: int) -> ChernCharacter:
    """Plane pushforward class (0, r*l, d - r*l^2/2)."""
    if r < 1 or l < 1:
        raise DomainError("pushforward_class_p2: need r >= 1 and l >= 1")
    return ChernCharacter(0, r * l, d - Fraction(r * l * l, 2))


def hom_bound_p2(v: ChernCharacter) -> BoundReport:
    """Caps on hom from the structure sheaf for a boundary-stable class.

    Slope ch2/c1 > -3/2 gives the exact value rk + (3/2) c1 + ch2; ch2 < 0
    gives the cap rk - c1^2/(2 ch2).  Where both apply the minimum is
    reported (with both branch values in the details); slopes strictly
    inside (-3/2, -1) admit no stable class at all, which is flagged.
    """
    if v.c1 == 0:
        raise DomainError("hom_bound_p2: requires c1 != 0")
    slope = v.ch2 / v.c1
    equality = None
    cap = None
    if slope > Fraction(-3, 2):
        equality = v.rk + Fraction(3, 2) * v.c1 + v.ch2
    if v.ch2 < 0:
        cap = v.rk - Fraction(v.c1 * v.c1) / (2 * v.ch2)
    if equality is None and cap is None:
        raise DomainError(
            "hom_bound_p2: no branch applies (slope <= -3/2 and ch2 >= 0)")
    no_stable = Fraction(-3, 2) < slope < -1
    candidates = [x for x in (equality, cap) if x is not None]
    value = min(candidates)
    if equality is not None and cap is not None:
        provenance = "p2-hom-both-branches"
    elif equality is not None:
        provenance = "p2-hom-equality"
    else:
        provenance = "p2-hom-negative-ch2"
    return BoundReport(
        value=value, integer_bound=math.floor(value), provenance=provenance,
        details={"equality_branch": equality, "negative_ch2_branch": cap,
                 "no_stable_object": no_stable})


def phase_range_p2(r: int, d: int, l: int) -> list[tuple[Fraction, Fraction]]:
    """Slope window(s) for filtration factors of the plane pushforward:
    [d/(2rl) - l/2, d/(2rl)] always; for d < rl the window refines to
    [d/(2rl) - l/2, -1/2] together with [-(l-1)/2, d/r - l + 1/2]."""
    if r < 1 or l < 1:
        raise DomainError("phase_range_p2: need r >= 1 and l >= 1")
    mid = Fraction(d, 2 * r * l)
    lo = mid - Fraction(l, 2)
    if d >= r * l:
        return [(lo, mid)]
    return [(lo, Fraction(-1, 2)),
            (Fraction(1 - l, 2), Fraction(d, r) - l + Fraction(1, 2))]


def h0_bound_plane(r: int, d: int, l: int) -> BoundReport:
    """Global-section cap for a rank-r degree-d semistable bundle on a
    degree-l plane curve (l >= 5, 0 <= d <= r l (l-3)/2).

    Degrees d >= rl get r + (3/(2l) + d/(2 r l^2)) d; the window
    r(l-1) <= d < rl the larger of 3r + d - rl and r + (rl+r) d/(r l^2 - d).
    Below r(l-1) the reported cap is the low-degree envelope
    r + (rl+r) d / (r l^2 - r l), which is what forces h0 < 2r there; it
    extends the proved window and carries its own provenance tag.
    """
    if l < 5:
        raise DomainError("h0_bound_plane: requires l >= 5")
    if r < 1:
        raise DomainError("h0_bound_plane: requires r >= 1")
    d_cap = Fraction(r * l * (l - 3), 2)
    if not 0 <= d <= d_cap:
        raise DomainError(
            f"h0_bound_plane: need 0 <= d <= r*l*(l-3)/2 = {d_cap}, got d = {d}")
    if d >= r * l:
        value = r + (Fraction(3, 2 * l) + Fraction(d, 2 * r * l * l)) * d
        return BoundReport(value=value, integer_bound=math.floor(value),
                           provenance="p2-high-degree")
    linear = Fraction(3 * r + d - r * l)
    hyperbolic = r + Fraction((r * l + r) * d, r * l * l - d)
    if d >= r * (l - 1):
        value = max(linear, hyperbolic)
        branch = "linear" if linear >= hyperbolic else "hyperbolic"
        return BoundReport(value=value, integer_bound=math.floor(value),
                           provenance="p2-mid-degree",
                           details={"linear": linear, "hyperbolic": hyperbolic,
                                    "attained_by": branch})
    value = r + Fraction((r * l + r) * d, r * l * l - r * l)
    return BoundReport(value=value, integer_bound=math.floor(value),
                       provenance="p2-low-degree-envelope")


@dataclass(frozen=True)
class CliffordPlaneResult:
    """Index value with the four-case verification record behind it."""

    value: Fraction
    high_degree_endpoints_ok: bool
    mid_degree_linear_ok: bool
    mid_degree_hyperbolic_ok: bool
    low_degree_forces_h0_lt_2r: bool

    @property
    def record_all_true(self) -> bool:
        return (self.high_degree_endpoints_ok and self.mid_degree_linear_ok
                and self.mid_degree_hyperbolic_ok
                and self.low_degree_forces_h0_lt_2r)


def clifford_plane(r: int, l: int) -> CliffordPlaneResult:
    """Rank-r Clifford index of a degree-l (>= 5) smooth plane curve: l - 4.

    The returned record re-verifies, exactly and for this (r, l), the four
    case inequalities that pin the value: the high-degree envelope minimum
    over its endpoints, both mid-window branch inequalities, and the
    low-degree h0 < 2r exclusion.
    """
    if l < 5:
        raise DomainError("clifford_plane: requires l >= 5")
    if r < 1:
        raise DomainError("clifford_plane: requires r >= 1")
    target = Fraction(l - 4)

    def index_given_cap(d, cap: Fraction) -> Fraction:
        return _frac(d) / r - Fraction(2, r) * cap + 2

    # (i) d >= rl: the cap is quadratic in d with negative leading term, so
    # the induced index is concave-minimized at the window endpoints.
    ok_high = True
    for d in (r * l, Fraction(r * l * (l - 3), 2)):
        cap = r + (Fraction(3, 2 * l) + d / (2 * r * l * l)) * d
        if index_given_cap(d, cap) < target:
            ok_high = False
    lead = -Fraction(2, r) * Fraction(1, 2 * r * l * l)
    ok_high = ok_high and lead < 0

    d_lo = Fraction(r * (l * l - l), l + 1)
    ok_linear = True
    ok_hyperbolic = True
    d_start = math.ceil(d_lo)
    for d in range(d_start, r * l):
        if index_given_cap(d, Fraction(3 * r + d - r * l)) <= target:
            ok_linear = False
        cap = r + Fraction((r * l + r) * d, r * l * l - d)
        if index_given_cap(d, cap) <= target:
            ok_hyperbolic = False

    ok_low = True
    for d in range(0, math.ceil(d_lo)):
        envelope = r + Fraction((r * l + r) * d, r * l * l - r * l)
        if not envelope < 2 * r:
            ok_low = False
    return CliffordPlaneResult(value=target,
                               high_degree_endpoints_ok=ok_high,
                               mid_degree_linear_ok=ok_linear,
                               mid_degree_hyperbolic_ok=ok_hyperbolic,
                               low_degree_forces_h0_lt_2r=ok_low)
