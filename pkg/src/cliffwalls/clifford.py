"""Clifford indices of curves on the K3: per-bundle index, the rank-r
curve index in closed form, the restriction construction that attains it,
the near-sharp degree-2k(g-1) family, and the certified surd lower bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError
from .lattice import ChernCharacter
from .numerics import floor_sqrt


@dataclass(frozen=True)
class CliffordQuery:
    """(rank, genus) pair; closed-form validity is reported, not assumed."""

    r: int
    g: int

    @property
    def formula_valid(self) -> bool:
        return (self.r == 1 and self.g >= 4) or (self.r >= 2 and self.g >= self.r ** 2)


@dataclass(frozen=True)
class LMConstruction:
    """Numerics of the restriction of the rank-r surface bundle with class
    (r, 1, floor(g/r) - r): the construction attaining the rank-r index."""

    chern: ChernCharacter
    h0_lower: int
    degree: int
    cliff_upper: Fraction
    valid: bool


def clifford_of_bundle(r: int, d: int, h0: int) -> Fraction:
    """Cliff = d/r - (2/r) h0 + 2 for a rank-r, degree-d bundle."""
    if r < 1:
        raise DomainError("clifford_of_bundle: rank must be >= 1")
    return Fraction(d, r) - Fraction(2 * h0, r) + 2


def clifford_index_k3(q: CliffordQuery) -> Fraction:
    """Closed-form rank-r Clifford index of the genus-g hyperplane curve.

    r = 1 (g >= 4): g - 1 - floor(g/2); r >= 2 (g >= r^2):
    (2/r)(g - 1 - floor(g/r)).
    """
    if q.r == 1:
        if q.g < 4:
            raise DomainError("clifford_index_k3: r = 1 requires g >= 4")
        return Fraction(q.g - 1 - q.g // 2)
    if q.r < 1:
        raise DomainError("clifford_index_k3: rank must be >= 1")
    if q.g < q.r ** 2:
        raise DomainError(
            f"clifford_index_k3: g >= r^2 violated (g = {q.g}, r^2 = {q.r ** 2})")
    return Fraction(2, q.r) * (q.g - 1) - Fraction(2, q.r) * (q.g // q.r)


def lm_construction(q: CliffordQuery) -> LMConstruction:
    """Restriction data for rank r >= 2; ``valid`` records whether both the
    genus threshold g >= max(r^2, 6) and the strict slope-stability margin
    H^2 + H^2 (r-2)/(r-1)^2 - 2 r^2 - (H^2 - 2 r floor(g/r)) > 0 hold."""
    if q.r < 2:
        raise DomainError("lm_construction: rank must be >= 2")
    r, g = q.r, q.g
    h2 = 2 * g - 2
    chern = ChernCharacter.sheaf_like(r, 1, g // r - r)
    h0_lower = g // r + r
    margin = (Fraction(h2) + Fraction(h2 * (r - 2), (r - 1) ** 2)
              - 2 * r * r - (h2 - 2 * r * (g // r)))
    valid = g >= max(r * r, 6) and margin > 0
    cliff_upper = Fraction(2, r) * (g - 1) - Fraction(2, r) * (g // r)
    return LMConstruction(chern=chern, h0_lower=h0_lower, degree=2 * (g - 1),
                          cliff_upper=cliff_upper, valid=valid)


def sharp_example(r: int, k: int, g: int) -> tuple[int, int, Fraction]:
    """Degree d = 2k(g-1) family sitting just below the closed-form cap.

    Returns (d, h0, cliff) with h0 = t*floor(t/r + k^2 (g-1)/(r t)) + r,
    t = gcd(r, k); requires 1 <= k <= r and g >= (r/t)^2.
    """
    if not 1 <= k <= r:
        raise DomainError("sharp_example: need 1 <= k <= r")
    t = gcd(r, k)
    if g < (r // t) ** 2:
        raise DomainError(
            f"sharp_example: g >= (r/t)^2 violated (g = {g}, (r/t)^2 = {(r // t) ** 2})")
    d = 2 * k * (g - 1)
    inner = Fraction(t, r) + Fraction(k * k * (g - 1), r * t)
    h0 = t * math.floor(inner) + r
    return d, h0, clifford_of_bundle(r, d, h0)


def closed_form_cap(r: int, d: int, g: int) -> Fraction:
    """The closed-form cap r + g d^2/(4 r (g-1)^2) + r/g as a bare formula
    (no degree-range check; the sharp family reaches past d = r(g-1))."""
    return r + Fraction(g * d * d, 4 * r * (g - 1) ** 2) + Fraction(r, g)


def cliff_degree_lower_bound(r: int, d: int, g: int) -> Fraction:
    """Per-degree rational floor: Cliff > d/r - d^2 g/(2 r^2 (g-1)^2) - 2/g."""
    return (Fraction(d, r) - Fraction(d * d * g, 2 * r * r * (g - 1) ** 2)
            - Fraction(2, g))


def exceeds_corollary_floor(value: Fraction, g: int) -> bool:
    """Exact test of value > 2 sqrt(g-1) - 2 - 2 sqrt(g-1)/g (g >= 3)."""
    if g < 3:
        raise DomainError("exceeds_corollary_floor: requires g >= 3")
    t = value + 2
    if t <= 0:
        return False
    return (t * g) ** 2 > 4 * Fraction(g - 1) ** 3


def corollary_lower_bound(q: CliffordQuery, scale: int = 10**6) -> Fraction:
    """A rational B <= 2 sqrt(g-1) - 2 - 2 sqrt(g-1)/g, certified exactly.

    B approaches the surd from below as ``scale`` grows; when g - 1 is a
    perfect square B equals the surd expression itself.
    """
    g = q.g
    if g < 3:
        raise DomainError("corollary_lower_bound: requires g >= 3")
    u = Fraction(floor_sqrt((g - 1) * scale * scale), scale)  # u <= sqrt(g-1)
    bound = 2 * u * (g - 1) / g - 2
    # certificate: (B + 2) g / 2 <= sqrt(g-1) * (g-1), squared
    assert ((bound + 2) * g) ** 2 <= 4 * Fraction(g - 1) ** 3
    return bound


def mercat_status(q: CliffordQuery) -> bool:
    """True when the rank-r index drops strictly below the rank-1 index."""
    if q.r < 2:
        raise DomainError("mercat_status: rank must be >= 2")
    if q.g < q.r ** 2:
        raise DomainError(
            f"mercat_status: g >= r^2 violated (g = {q.g}, r^2 = {q.r ** 2})")
    rank1 = clifford_index_k3(CliffordQuery(1, q.g))
    return clifford_index_k3(q) < rank1


def nonnegative_index(r: int, d: int, h0: int, g: int) -> bool:
    """Validation predicate: in the degree window 0 <= d <= r(g-1) a
    semistable bundle's index is nonnegative; exposed for hypothetical
    (r, d, h0) triples rather than assumed."""
    if not 0 <= d <= r * (g - 1):
        raise DomainError("nonnegative_index: degree outside [0, r(g-1)]")
    return clifford_of_bundle(r, d, h0) >= 0
