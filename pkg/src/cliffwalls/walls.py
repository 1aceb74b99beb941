"""Wall segments in the (beta, alpha) slice.

A wall for a pair of classes is the locus where their tilt slopes agree: a
line through both projections (or through the one projection, with the
rank-0 class fixing the slope), clipped to the closure of the region above
Gamma.  Endpoints land either on the curve Gamma itself or on one of the
vertical jump segments at integer beta, and are represented exactly as
rationals or quadratic surds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DegenerateWallError, DomainError
from .lattice import ChernCharacter, PushforwardSpec, SurfaceK3
from .numerics import (
    Abscissa,
    QuadraticRoot,
    _frac,
    compare_values,
    quadratic_root,
    rational_between,
    sqrt_enclosure,
)
from .stability import ProjPoint, gamma_value, pr

ON_GAMMA = "on-gamma"
ON_VERTICAL = "on-vertical-segment"


@dataclass(frozen=True)
class GammaHit:
    """One meeting point of a line with the boundary of the slice region.

    ``beta`` is exact (Fraction or QuadraticRoot); ``kind`` says whether the
    line meets the curve Gamma or the vertical jump segment at an integer.
    """

    beta: Abscissa
    kind: str


@dataclass(frozen=True)
class WallSegment:
    """A clipped wall: line data plus the exact beta range it survives on."""

    slope: Fraction
    anchor: Optional[ProjPoint]     # projection the extension passes through
    rank0_slope: Optional[Fraction]  # set when one class had rank 0
    left: Abscissa
    right: Abscissa
    left_kind: str
    right_kind: str

    def line_value(self, beta: Fraction) -> Fraction:
        """alpha on the wall's supporting line at the given beta."""
        return self.anchor.y + self.slope * (beta - self.anchor.x)


@dataclass(frozen=True)
class R3Alternative:
    """Rank-3 disjunction: the lower beta bound improves to -1/2 unless the
    destabilizer has the exceptional shape (3, 1, *)."""

    beta1_unless: Fraction
    exceptional_chern: tuple


@dataclass(frozen=True)
class BetaBounds:
    """Abscissa window for the outermost wall of a pushforward class."""

    beta1_min: Fraction
    beta2_max: Fraction
    refined_beta1: Fraction
    refined_beta2: Fraction
    r3_alternative: Optional[R3Alternative] = None


def first_wall_beta_bounds(p: PushforwardSpec, s: SurfaceK3) -> BetaBounds:
    """Raw and refined bounds for where the outermost wall meets Gamma.

    Raw window: [d/(r H^2) - 1, d/(r H^2)], always of width one.  The left
    end refines to -1 + 1/r unconditionally; the right end refines to 1/r
    when d <= 2g - 2 + r.  At rank 3 the left refinement to -1/2 holds
    unless the destabilizer is of shape (3, 1, *), which is returned as
    data rather than resolved.
    """
    b2 = Fraction(p.d, p.r * s.h_sq)
    b1 = b2 - 1
    refined1 = max(b1, Fraction(1 - p.r, p.r))
    if p.d <= s.h_sq + p.r:
        refined2 = min(b2, Fraction(1, p.r))
    else:
        refined2 = b2
    alt = None
    if p.r == 3:
        alt = R3Alternative(beta1_unless=Fraction(-1, 2),
                            exceptional_chern=(3, 1, None))
    bounds = BetaBounds(b1, b2, refined1, refined2, alt)
    assert bounds.beta2_max - bounds.beta1_min == 1
    assert bounds.beta1_min <= bounds.refined_beta1
    assert bounds.refined_beta2 <= bounds.beta2_max
    if 0 <= p.d <= p.r * s.h_sq:
        assert bounds.refined_beta1 <= 0 <= bounds.refined_beta2
    return bounds


def intersect_gamma(slope, point: ProjPoint, s: SurfaceK3) -> list[GammaHit]:
    """All meeting points of the line through ``point`` with the region
    boundary: per-cell quadratic roots on Gamma, jump-point touches, and
    crossings of the vertical segments at integers.  Sorted, deduplicated,
    each abscissa exact.
    """
    m = _frac(slope)
    c = point.y - m * point.x  # line: alpha = m*beta + c
    h2 = Fraction(s.h_sq)

    # The line can only reach the band Gamma >= (H^2/2) beta^2 - 1 where
    # (H^2/2) beta^2 - m beta - (c + 1) <= 0; outside that window the
    # quadratic envelope wins and there is nothing to report.
    disc_w = m * m + 2 * h2 * (c + 1)
    if disc_w < 0:
        return []
    _, s_hi = sqrt_enclosure(disc_w, 1 << 20)
    n_lo = math.floor((m - s_hi) / h2)
    n_hi = math.ceil((m + s_hi) / h2)

    hits: list[GammaHit] = []

    def push(beta: Abscissa, kind: str) -> None:
        for h in hits:
            if compare_values(h.beta, beta) == 0:
                return
        hits.append(GammaHit(beta, kind))

    half = Fraction(1, 2)
    for n in range(n_lo, n_hi + 1):
        # On the cell [n - 1/2, n + 1/2] (minus the jump at n) the curve is
        # (H^2/2 + 1) b^2 - 2n b + n^2 - 1; equate with the line.
        qa = h2 / 2 + 1
        qb = Fraction(-2 * n) - m
        qc = Fraction(n * n - 1) - c
        disc = qb * qb - 4 * qa * qc
        if disc >= 0:
            for branch in (-1, 1):
                root = quadratic_root(qa, qb, qc, branch)
                if compare_values(root, n - half) < 0:
                    continue
                if compare_values(root, n + half) > 0:
                    continue
                if compare_values(root, Fraction(n)) == 0:
                    # bottom tip of the jump segment: classified below
                    continue
                push(root, ON_GAMMA)
                if disc == 0:
                    break
        # Vertical segment at beta = n spans alpha in [top - 1, top].
        top = h2 / 2 * n * n
        v = m * n + c
        if v == top:
            push(Fraction(n), ON_GAMMA)
        elif top - 1 <= v < top:
            push(Fraction(n), ON_VERTICAL)

    hits.sort(key=_SortKey)
    return hits


class _SortKey:
    """Exact comparison adapter so mixed Fraction/QuadraticRoot lists sort."""

    __slots__ = ("v",)

    def __init__(self, hit: GammaHit):
        self.v = hit.beta

    def __lt__(self, other: "_SortKey") -> bool:
        return compare_values(self.v, other.v) < 0


def _wall_line(v: ChernCharacter, w: ChernCharacter, s: SurfaceK3):
    """Supporting line (slope, anchor, rank0_slope) of the wall of v and w."""
    if v.rk == 0 and w.rk == 0:
        raise DomainError("wall_between: classes cannot both have rank 0")
    cross = (v.rk * w.c1 - w.rk * v.c1,
             v.rk * w.ch2 - w.rk * v.ch2,
             v.c1 * w.ch2 - w.c1 * v.ch2)
    if cross == (0, 0, 0):
        raise DegenerateWallError("wall_between: proportional classes make no wall")
    if v.rk != 0 and w.rk != 0:
        pv, pw = pr(v), pr(w)
        if (pv.x, pv.y) > (pw.x, pw.y):
            pv, pw = pw, pv
        if pv.x == pw.x:
            if pv.y == pw.y:
                raise DegenerateWallError(
                    "wall_between: equal projections make no wall")
            raise DegenerateWallError(
                "wall_between: vertically aligned projections give a vertical "
                "locus, not a wall segment")
        slope = (pw.y - pv.y) / (pw.x - pv.x)
        return slope, pv, None
    rank0, other = (v, w) if v.rk == 0 else (w, v)
    if rank0.c1 == 0:
        raise DegenerateWallError(
            "wall_between: rank-0 class with c1 = 0 has no finite wall slope")
    slope = rank0.ch2 / rank0.c1  # = H^2 ch2 / (H ch1)
    return slope, pr(other), Fraction(slope)


def wall_between(v: ChernCharacter, w: ChernCharacter,
                 s: SurfaceK3) -> Optional[WallSegment]:
    """The clipped wall for the pair, or None when the line misses the
    region above Gamma.

    When clipping produces several disjoint pieces (the line can dip under
    the jump segments), the piece nearest the line's maximal clearance over
    the quadratic envelope (abscissa slope/H^2) is returned; ties pick the
    rightmost piece.  Symmetric in v and w.
    """
    slope, anchor, rank0_slope = _wall_line(v, w, s)
    hits = intersect_gamma(slope, anchor, s)
    if not hits:
        return None

    c = anchor.y - slope * anchor.x

    def above(beta: Fraction) -> bool:
        return slope * beta + c > gamma_value(beta, s)

    pieces = []
    for left, right in zip(hits, hits[1:]):
        witness = rational_between(left.beta, right.beta)
        if above(witness):
            pieces.append((left, right))
    if not pieces:
        return None

    best = max(pieces, key=lambda piece: _PieceKey(piece, slope / s.h_sq))
    left, right = best
    return WallSegment(slope=Fraction(slope), anchor=anchor,
                       rank0_slope=rank0_slope,
                       left=left.beta, right=right.beta,
                       left_kind=left.kind, right_kind=right.kind)


class _PieceKey:
    """Order pieces by closeness to the apex abscissa, then rightmostness."""

    __slots__ = ("left", "right", "apex")

    def __init__(self, piece, apex: Fraction):
        self.left, self.right = piece[0].beta, piece[1].beta
        self.apex = apex

    def _nearest_end(self):
        # distance from apex to [left, right]: None means apex is inside
        if (compare_values(self.left, self.apex) <= 0
                and compare_values(self.right, self.apex) >= 0):
            return None
        if compare_values(self.left, self.apex) > 0:
            return self.left
        return self.right

    def __lt__(self, other: "_PieceKey") -> bool:
        # smaller key = farther from apex, or equally far but more leftward
        d_self = self._nearest_end()
        d_other = other._nearest_end()
        if d_self is None and d_other is None:
            return compare_values(self.left, other.left) < 0
        if d_self is None:
            return False
        if d_other is None:
            return True
        s_cmp = _compare_abs_distance(d_self, d_other, self.apex)
        if s_cmp != 0:
            return s_cmp > 0  # farther is smaller
        return compare_values(self.left, other.left) < 0


def _compare_abs_distance(a: Abscissa, b: Abscissa, apex: Fraction) -> int:
    """Exact sign of |a - apex| - |b - apex| for rational-or-surd a, b."""
    sa = compare_values(a, apex)
    sb = compare_values(b, apex)
    if sa == 0 and sb == 0:
        return 0
    if sa == 0:
        return -1
    if sb == 0:
        return 1
    # |a - apex| vs |b - apex| via sign of (a-apex) ± (b-apex)
    da = _shifted(a, apex, 1 if sa > 0 else -1)
    db = _shifted(b, apex, 1 if sb > 0 else -1)
    # both positive now; compare da - db via surd machinery
    from .numerics import sign_two_roots
    (ta, ca, Da) = da
    (tb, cb, Db) = db
    return sign_two_roots(ta - tb, ca, Da, -cb, Db)


def _shifted(x: Abscissa, apex: Fraction, sign: int):
    """|x - apex| written as t + c*sqrt(D) with rational t, c and D >= 0."""
    if isinstance(x, QuadraticRoot):
        t = ((-x.b) / (2 * x.a) - apex) * sign
        cc = Fraction(x.branch * sign) / (2 * x.a)
        return (t, cc, x.discriminant)
    return ((_frac(x) - apex) * sign, Fraction(0), Fraction(0))
