"""Numerical Chern data on a polarized K3 surface.

A class is the triple (rk, c1, ch2) where c1 stores the integer
H·ch1/H² (Picard rank one, or the divisibility assumption that makes this
integral), and ch2 is rational.  The Euler pairing, the numeric
existence test for stable sheaves, and curve-to-surface pushforward
classes live here.  All values are immutable and all operations pure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError
from .numerics import _frac


@dataclass(frozen=True)
class SurfaceK3:
    """Polarized K3 with a genus-g hyperplane curve; H^2 = 2g - 2.

    ``divisibility`` models the lattice variant where H·D is always a
    multiple of H² (the default 1 is the Picard-rank-one case).
    """

    genus: int
    divisibility: int = 1

    def __post_init__(self):
        if self.genus < 2:
            raise DomainError("SurfaceK3: genus must be >= 2")
        if self.divisibility < 1:
            raise DomainError("SurfaceK3: divisibility must be >= 1")

    @property
    def h_sq(self) -> int:
        return 2 * self.genus - 2


@dataclass(frozen=True)
class ChernCharacter:
    """(rk, c1, ch2) with c1 = H·ch1/H² an integer and ch2 rational."""

    rk: int
    c1: int
    ch2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "ch2", _frac(self.ch2))

    @staticmethod
    def sheaf_like(rk: int, c1: int, ch2) -> "ChernCharacter":
        """Constructor for honest sheaf classes on the K3: ch2 must be an integer."""
        ch2 = _frac(ch2)
        if ch2.denominator != 1:
            raise DomainError("sheaf-like class needs integral ch2, got %s" % ch2)
        return ChernCharacter(rk, c1, ch2)

    @property
    def is_zero(self) -> bool:
        return self.rk == 0 and self.c1 == 0 and self.ch2 == 0

    def __add__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(self.rk + other.rk, self.c1 + other.c1,
                              self.ch2 + other.ch2)

    def __sub__(self, other: "ChernCharacter") -> "ChernCharacter":
        return ChernCharacter(self.rk - other.rk, self.c1 - other.c1,
                              self.ch2 - other.ch2)

    def scaled(self, k: int) -> "ChernCharacter":
        return ChernCharacter(k * self.rk, k * self.c1, k * self.ch2)


@dataclass(frozen=True)
class PushforwardSpec:
    """Rank r >= 1 and degree d of a bundle on the genus-g curve."""

    r: int
    d: int

    def __post_init__(self):
        if self.r < 1:
            raise DomainError("PushforwardSpec: rank must be >= 1")


def euler_pairing(v: ChernCharacter, w: ChernCharacter, s: SurfaceK3) -> Fraction:
    """chi(v, w) = 2 rk rk' + rk ch2' + rk' ch2 - c1 c1' H^2."""
    return (2 * v.rk * w.rk + v.rk * w.ch2 + w.rk * v.ch2
            - Fraction(v.c1 * w.c1 * s.h_sq))


def euler_characteristic(v: ChernCharacter) -> Fraction:
    """chi(v) = 2 rk + ch2 on the K3."""
    return 2 * v.rk + v.ch2


def admits_stable_object(v: ChernCharacter, s: SurfaceK3) -> bool:
    """Numeric existence test: -chi(v, v) >= -2 (v nonzero required)."""
    if v.is_zero:
        raise DomainError("admits_stable_object: class must be nonzero")
    return -euler_pairing(v, v, s) >= -2


def is_primitive(v: ChernCharacter) -> bool:
    """gcd of the integral entries is 1 (reported, never required)."""
    if v.ch2.denominator != 1:
        return True
    return gcd(gcd(abs(v.rk), abs(v.c1)), abs(int(v.ch2))) == 1


def pushforward_class(p: PushforwardSpec, s: SurfaceK3) -> ChernCharacter:
    """Class of the pushforward to the surface: (0, r, d - r(g-1))."""
    return ChernCharacter.sheaf_like(0, p.r, p.d - p.r * (s.genus - 1))
