"""The two-parameter slice of stability conditions on the K3.

The slice is parametrized by (beta, alpha) above the boundary curve
Gamma(beta) = (H^2/2) beta^2 - gamma(beta), where gamma is 1-periodic with
gamma(x) = 1 - x^2 on [-1/2, 1/2] away from 0 and gamma(n) = 0 at integers
(so Gamma jumps up to (H^2/2) n^2 there).  Slope, central charge and the
rank-normalized projection of a class all live here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .lattice import ChernCharacter, SurfaceK3
from .numerics import _frac

#: sentinel slope for classes with vanishing imaginary part
INFINITE_SLOPE = math.inf


def nearest_integer(x: Fraction) -> int:
    """Integer n minimizing |x - n| (half-integers round up; both cells of
    the periodic profile agree there, so the choice is invisible)."""
    return math.floor(x + Fraction(1, 2))


def gamma_value(beta, s: SurfaceK3) -> Fraction:
    """Exact Gamma(beta), including the jump value (H^2/2) n^2 at integers."""
    beta = _frac(beta)
    n = nearest_integer(beta)
    if beta == n:
        gamma = Fraction(0)
    else:
        t = beta - n
        gamma = 1 - t * t
    return Fraction(s.h_sq, 2) * beta * beta - gamma


@dataclass(frozen=True)
class ProjPoint:
    """Rank-normalized projection of a class: (c1/rk, ch2/rk)."""

    x: Fraction
    y: Fraction


@dataclass(frozen=True)
class SlicePoint:
    """A point (beta, alpha) strictly above Gamma; rejects anything else."""

    beta: Fraction
    alpha: Fraction
    surface: SurfaceK3

    def __post_init__(self):
        object.__setattr__(self, "beta", _frac(self.beta))
        object.__setattr__(self, "alpha", _frac(self.alpha))
        if self.alpha <= gamma_value(self.beta, self.surface):
            raise DomainError(
                "SlicePoint: alpha must exceed Gamma(beta) "
                f"(alpha={self.alpha}, Gamma={gamma_value(self.beta, self.surface)})")


def central_charge(v: ChernCharacter, p: SlicePoint) -> tuple[Fraction, Fraction]:
    """(re, im) of Z = -ch2 + alpha rk + i (c1 - beta rk)."""
    re = -v.ch2 + p.alpha * v.rk
    im = Fraction(v.c1) - p.beta * v.rk
    return re, im


def tilt_slope(v: ChernCharacter, p: SlicePoint):
    """-re/im of the central charge; INFINITE_SLOPE when im = 0."""
    re, im = central_charge(v, p)
    if im == 0:
        return INFINITE_SLOPE
    return -re / im


def pr(v: ChernCharacter) -> ProjPoint:
    """Projection (c1/rk, ch2/rk); rank-0 classes have no projection."""
    if v.rk == 0:
        raise DomainError("pr: rank-0 class has a wall slope, not a projection")
    return ProjPoint(Fraction(v.c1, v.rk), v.ch2 / v.rk)


def pr_not_in_gamma_plus(v: ChernCharacter, s: SurfaceK3) -> bool:
    """ch2/rk <= Gamma(c1/rk): necessary for v to carry a stable object."""
    point = pr(v)
    return point.y <= gamma_value(point.x, s)
