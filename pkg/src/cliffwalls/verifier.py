"""Grid verification of every proof-step inequality, with exact arithmetic.

Each suite sweeps integer parameters over finite windows, evaluates both
sides of its inequality as exact rationals (surds are compared by squaring
after sign checks), and reports failures with the offending tuple and both
sides.  Hypothesis-filtered tuples are counted as skipped, never as passes.
Suites are deterministic: a given grid always produces the same report.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Optional

from .clifford import closed_form_cap, sharp_example
from .errors import DomainError
from .hn_polygon import ChainRegion, max_convex_chain
from .lattice import SurfaceK3
from .numerics import floor_sqrt, floor_sqrt_int_sum


@dataclass(frozen=True)
class GridSpec:
    """Named integer windows driving one suite run."""

    suite: str
    ranges: dict

    def rng(self, key: str, default: tuple[int, int]) -> range:
        lo, hi = self.ranges.get(key, default)
        if hi < lo:
            raise DomainError(f"GridSpec: empty range for {key}")
        return range(lo, hi + 1)


@dataclass
class Failure:
    params: tuple
    lhs: Fraction
    rhs: Fraction
    note: str = ""


@dataclass
class VerificationReport:
    suite: str
    checked: int = 0
    skipped: int = 0
    failures: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, params: tuple, lhs, rhs, note: str = "") -> None:
        self.checked += 1
        if not ok:
            self.failures.append(Failure(params, Fraction(lhs), Fraction(rhs), note))

    def summary(self) -> str:
        status = "pass" if self.passed else f"FAIL({len(self.failures)})"
        return (f"{self.suite}: {status} checked={self.checked} "
                f"skipped={self.skipped} elapsed={self.elapsed:.2f}s")


def _q_poly(r: int, g: int, t: Fraction) -> Fraction:
    """The step-1 margin as a function of the degree offset t."""
    t = Fraction(t)
    inner = r + (2 + t / (g - 1)) ** 2 * Fraction(g, 4 * r) + Fraction(r, g)
    return t / r - Fraction(2, r) * inner + 2 + Fraction(2, r) * (g // r)


def verify_Q(r_range=(4, 8), g_range=None, report: Optional[VerificationReport] = None
             ) -> VerificationReport:
    """High-degree window: the quadratic margin is concave in the degree
    offset and positive at both checkpoints t = 5 and t = (r-2)(g-1)."""
    rep = report or VerificationReport("q-step1")
    t0 = time.perf_counter()
    r_lo, r_hi = r_range
    for r in range(r_lo, r_hi + 1):
        g_lo, g_hi = g_range or (r * r, 100)
        for g in range(g_lo, g_hi + 1):
            if r < 4 or g < r * r:
                rep.skipped += 1
                continue
            lead = -Fraction(g, 2 * r * r * (g - 1) ** 2)
            rep.check(lead < 0, (r, g, "lead"), lead, Fraction(0),
                      "leading coefficient must be negative")
            for t in (Fraction(5), Fraction((r - 2) * (g - 1))):
                val = _q_poly(r, g, t)
                rep.check(val > 0, (r, g, int(t)), val, Fraction(0),
                          "margin must be positive")
    rep.elapsed += time.perf_counter() - t0
    return rep


def verify_fs(r_range=(3, 8), g_range=None,
              report: Optional[VerificationReport] = None) -> VerificationReport:
    """Surd bound on the middle-leg length: f(s)^2 < rhs^2 with rhs > 0,
    where f(s)^2 = 4g + (g(r-2)/r + floor(g/r) - s - 2)^2 and the slack
    summand is 1 at s = 0 and 2 for 1 <= s <= g/(2r)."""
    rep = report or VerificationReport("fs-step2")
    t0 = time.perf_counter()
    r_lo, r_hi = r_range
    for r in range(r_lo, r_hi + 1):
        g_lo, g_hi = g_range or (r * r, 100)
        for g in range(g_lo, g_hi + 1):
            if r < 3 or g < r * r:
                rep.skipped += 1
                continue
            base = Fraction(g * (r - 2), r) + g // r
            for s in [0] + list(range(1, g // (2 * r) + 1)):
                delta = 1 if s == 0 else 2
                rhs = (base - s + Fraction(2, r - 1)
                       - Fraction(r - 2, r - 1) * Fraction(2 * r, g) + delta)
                f_sq = 4 * g + (base - s - 2) ** 2
                ok = rhs > 0 and f_sq < rhs * rhs
                rep.check(ok, (r, g, s), f_sq, rhs * rhs,
                          "squared middle-leg bound")
    rep.elapsed += time.perf_counter() - t0
    return rep


def step2_region(r: int, g: int, d: int) -> ChainRegion:
    """Admissible-chain region for the middle degree window.

    Every chain vertex lies right of the chord, left of the line through
    the origin with slope g/r - r (the right-end refinement beta2 <= 1/r),
    and left of the line through q = (d - r(g-1), r) with slope
    -((g-1)(r-1) - (r+1))/r (the left-end refinement beta1 >= -1 + 1/r).
    The two cap lines cross at the region apex; at d = 2(g-1) the apex
    sits exactly at height one, and the familiar corner points at heights
    one and two are this envelope's integer sections.
    """
    m_hi = Fraction(g, r) - r
    qx = Fraction(d - r * (g - 1))
    if qx > 0:
        raise DomainError("step2_region: expected d <= r(g-1)")
    # the cap lines cross at height (d-g-r)/(g-r-2) and the q-line meets
    # height zero at abscissa d-g-r
    y_star = Fraction(d - g - r, g - r - 2)
    o = (Fraction(0), Fraction(0))
    q = (qx, Fraction(r))
    if y_star > 0:
        assert y_star < r
        apex = (m_hi * y_star, y_star)
        return ChainRegion([o, apex, q])
    return ChainRegion([o, (Fraction(d - g - r), Fraction(0)), q])


def step2_window(r: int, g: int) -> range:
    lo = 2 * (g - 1) - 2 * (g // r - r)
    hi = 2 * (g - 1) + 4
    return range(lo, hi + 1)


def verify_lE_cap(r_range=(3, 5), g_range=None, d_values=None,
                  report: Optional[VerificationReport] = None) -> VerificationReport:
    """Chain-search oracle against the middle-window length cap
    g(r-2) + 2 floor(g/r) + r + 2, over the full admissible-chain region."""
    rep = report or VerificationReport("le-cap")
    t0 = time.perf_counter()
    r_lo, r_hi = r_range
    for r in range(r_lo, r_hi + 1):
        g_lo, g_hi = g_range or (r * r, 36)
        for g in range(g_lo, g_hi + 1):
            if r < 3 or g < r * r:
                rep.skipped += 1
                continue
            s = SurfaceK3(g)
            rhs = g * (r - 2) + 2 * (g // r) + r + 2
            window = d_values if d_values is not None else step2_window(r, g)
            for d in window:
                region = step2_region(r, g, d)
                best = max_convex_chain(region, s)
                rep.check(best <= rhs, (r, g, d), Fraction(best), Fraction(rhs),
                          "chain-search maximum vs length cap")
    rep.elapsed += time.perf_counter() - t0
    return rep


def rank2_wall_h0_cap(g: int, d: int, s: int) -> Fraction:
    """Two-segment polygon cap at rank 2: -g + 1 + d/2 + half the floored
    sum of the two surd leg lengths (floored once, as a sum)."""
    a = 4 * g + s * s
    b = 4 * g + (2 * (g - 1) - d + s) ** 2
    return -g + 1 + Fraction(d, 2) + Fraction(floor_sqrt_int_sum(a, b), 2)


def verify_rank2(g_range=(4, 60),
                 report: Optional[VerificationReport] = None) -> VerificationReport:
    """Full rank-2 sweep.

    Wall branch: for every degree d <= 2(g-1) and every destabilizer
    second-Chern value s with d/2 - g + 1 < s <= d - 3g/2 (one less for
    odd g, by integrality), the polygon cap stays at or below
    -floor((g+1)/2) + 3 + d/2, and when the window is nonempty the cap is
    attained, so the derived index lower bound equals g - 1 - floor(g/2)
    exactly.  No-wall branch: single-segment caps keep the index at or
    above that value on -g+4 < x <= 0, and x <= -g+4 forces
    x + sqrt(x^2 + 16g) <= 8 (squared comparison).
    """
    rep = report or VerificationReport("rank2")
    t0 = time.perf_counter()
    g_lo, g_hi = g_range
    for g in range(g_lo, g_hi + 1):
        if g < 4:
            rep.skipped += 1
            continue
        target = Fraction(g - 1 - g // 2)
        # parity identity behind the uniform cap: the derived index bound
        # d/2 - cap + 2 is degree-free and equals the rank-1 value
        derived = Fraction((g + 1) // 2 - 1)
        rep.check(derived == target, (g, "identity"), derived, target,
                  "cap-derived index equals rank-1 value")
        cap_offset = Fraction(3 - (g + 1) // 2)  # cap - d/2
        max_offset = None
        s_top_shift = math.ceil(Fraction(3 * g, 2))
        for d in range(0, 2 * (g - 1) + 1):
            s_lo = d // 2 - g + 2
            s_hi = d - s_top_shift
            for s in range(s_lo, s_hi + 1):
                offset = rank2_wall_h0_cap(g, d, s) - Fraction(d, 2)
                rep.check(offset <= cap_offset, (g, d, s), offset, cap_offset,
                          "rank-2 wall-branch cap")
                if max_offset is None or offset > max_offset:
                    max_offset = offset
            # no-wall branch, single segment from the origin
            x = d - 2 * (g - 1)
            if -g + 4 < x <= 0:
                idx = g + 1 - Fraction(floor_sqrt(x * x + 16 * g), 2)
                rep.check(idx >= target, (g, d, "no-wall"), idx, target,
                          "rank-2 no-wall index floor")
            elif x <= -g + 4:
                # x + sqrt(x^2+16g) <= 8  <=>  16 g <= 64 - 16 x (as x < 8)
                ok = 16 * g <= 64 - 16 * x
                rep.check(ok, (g, d, "low-degree"), Fraction(16 * g),
                          Fraction(64 - 16 * x), "rank-2 h0 <= 4 window")
        if max_offset is None:
            rep.skipped += 1  # wall window empty at this genus (g <= 5)
        else:
            rep.check(max_offset == cap_offset, (g, "tight"), max_offset,
                      cap_offset, "wall-branch cap is attained")
    rep.elapsed += time.perf_counter() - t0
    return rep


def verify_plane(l_range=(5, 40), r_range=(1, 10),
                 report: Optional[VerificationReport] = None) -> VerificationReport:
    """The four plane-curve case inequalities pinning the index at l - 4,
    plus the envelope identity min{l-4, (l-3)^2/4} = l-4."""
    rep = report or VerificationReport("plane-cases")
    t0 = time.perf_counter()
    l_lo, l_hi = l_range
    r_lo, r_hi = r_range
    for l in range(l_lo, l_hi + 1):
        if l < 5:
            rep.skipped += 1
            continue
        target = Fraction(l - 4)
        env = min(Fraction(l - 4), Fraction((l - 3) ** 2, 4))
        rep.check(env == target, (l, "envelope-min"), env, target,
                  "high-degree envelope minimum")
        for r in range(r_lo, r_hi + 1):
            # (i) high-degree window: concave in d, so endpoints suffice
            for d in (Fraction(r * l), Fraction(r * l * (l - 3), 2)):
                cap = r + (Fraction(3, 2 * l) + d / (2 * r * l * l)) * d
                idx = d / r - Fraction(2, r) * cap + 2
                rep.check(idx >= target, (l, r, "high", str(d)), idx, target,
                          "high-degree endpoint index")
            d_lo = Fraction(r * (l * l - l), l + 1)
            for d in range(math.ceil(d_lo), r * l):
                # (ii) linear-branch cap keeps the index strictly above l-4
                idx_lin = (Fraction(d, r)
                           - Fraction(2, r) * (3 * r + d - r * l) + 2)
                rep.check(idx_lin > target, (l, r, d, "lin"), idx_lin, target,
                          "mid-window linear branch")
                # (iii) hyperbolic-branch cap likewise
                cap = r + Fraction((r * l + r) * d, r * l * l - d)
                idx_hyp = Fraction(d, r) - Fraction(2, r) * cap + 2
                rep.check(idx_hyp > target, (l, r, d, "hyp"), idx_hyp, target,
                          "mid-window hyperbolic branch")
            # (iv) low degrees cannot reach h0 = 2r
            for d in range(0, math.ceil(d_lo)):
                envl = r + Fraction((r * l + r) * d, r * l * l - r * l)
                rep.check(envl < 2 * r, (l, r, d, "low"), envl, Fraction(2 * r),
                          "low-degree envelope below 2r")
    rep.elapsed += time.perf_counter() - t0
    return rep


def verify_sharpness(r_range=(2, 6), g_range=(2, 80),
                     report: Optional[VerificationReport] = None) -> VerificationReport:
    """Near-sharp family against the closed-form cap: strictly below it,
    and within (k^2 - t^2)/r + r/g + 3/2 of it (t = gcd(r, k); the floor
    in the family's h0 can cost up to t/2 on top of the exact offset)."""
    rep = report or VerificationReport("sharpness")
    t0 = time.perf_counter()
    r_lo, r_hi = r_range
    g_lo, g_hi = g_range
    for r in range(r_lo, r_hi + 1):
        for k in range(1, r + 1):
            t = gcd(r, k)
            for g in range(g_lo, g_hi + 1):
                if g < (r // t) ** 2 or g < 2:
                    rep.skipped += 1
                    continue
                d, h0, _ = sharp_example(r, k, g)
                cap = closed_form_cap(r, d, g)
                gap = cap - h0
                rep.check(gap > 0, (r, k, g, "strict"), Fraction(h0), cap,
                          "family h0 strictly below cap")
                allowance = (Fraction(k * k - t * t, r) + Fraction(r, g)
                             + Fraction(3, 2))
                rep.check(gap <= allowance, (r, k, g, "gap"), gap, allowance,
                          "gap within floor allowance")
    rep.elapsed += time.perf_counter() - t0
    return rep


def _run_q(spec: GridSpec) -> VerificationReport:
    r = spec.rng("r", (4, 8))
    g = spec.ranges.get("g")
    return verify_Q((r.start, r.stop - 1), g)


def _run_fs(spec: GridSpec) -> VerificationReport:
    r = spec.rng("r", (3, 8))
    g = spec.ranges.get("g")
    return verify_fs((r.start, r.stop - 1), g)


def _run_le(spec: GridSpec) -> VerificationReport:
    r = spec.rng("r", (3, 5))
    g = spec.ranges.get("g")
    return verify_lE_cap((r.start, r.stop - 1), g)


def _run_rank2(spec: GridSpec) -> VerificationReport:
    g = spec.rng("g", (4, 60))
    return verify_rank2((g.start, g.stop - 1))


def _run_plane(spec: GridSpec) -> VerificationReport:
    l = spec.rng("l", (5, 40))
    r = spec.rng("r", (1, 10))
    return verify_plane((l.start, l.stop - 1), (r.start, r.stop - 1))


def _run_sharpness(spec: GridSpec) -> VerificationReport:
    r = spec.rng("r", (2, 6))
    g = spec.rng("g", (2, 80))
    return verify_sharpness((r.start, r.stop - 1), (g.start, g.stop - 1))


SUITES: dict[str, Callable[[GridSpec], VerificationReport]] = {
    "q-step1": _run_q,
    "fs-step2": _run_fs,
    "le-cap": _run_le,
    "rank2": _run_rank2,
    "plane-cases": _run_plane,
    "sharpness": _run_sharpness,
}


def run_suite(spec: GridSpec) -> VerificationReport:
    if spec.suite not in SUITES:
        raise DomainError(f"unknown suite: {spec.suite}")
    return SUITES[spec.suite](spec)
