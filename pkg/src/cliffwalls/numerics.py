"""Exact arithmetic substrate: rational square-root floors and quadratic surds.

Rationals are ``fractions.Fraction`` throughout (normalized, positive
denominator).  The two primitives everything else leans on:

* ``floor_sqrt(q)`` — the integer part of the square root of a nonnegative
  rational, decided by integer arithmetic only;
* ``QuadraticRoot`` — a real root of a rational quadratic, identified by
  branch, with exact sign-based comparison against rationals and against
  other quadratic roots.  No floating point enters any predicate.

Values are immutable after construction (isolating intervals only shrink),
so everything here is safe for unrestricted concurrent use.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

from .errors import DomainError

RationalLike = Union[int, Fraction]


def _frac(x: RationalLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def _sign(x) -> int:
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def floor_sqrt(q: RationalLike) -> int:
    """Largest integer m >= 0 with m*m <= q, for rational q >= 0.

    With q = p/d this is the largest m with m²·d <= p; it equals
    isqrt(p // d), which keeps the whole computation in integers.
    """
    q = _frac(q)
    if q < 0:
        raise DomainError("floor_sqrt: input must be >= 0")
    return math.isqrt(q.numerator // q.denominator)


def floor_sqrt_int_sum(a: int, b: int) -> int:
    """Exact integer part of sqrt(a) + sqrt(b) for nonnegative integers."""
    if a < 0 or b < 0:
        raise DomainError("floor_sqrt_int_sum: inputs must be >= 0")
    m = math.isqrt(a) + math.isqrt(b)
    # sqrt(a)+sqrt(b) < isqrt(a)+isqrt(b)+2, so at most two corrections.
    while _sqrt_sum_ge(a, b, m + 1):
        m += 1
    return m


def _sqrt_sum_ge(a: int, b: int, n: int) -> bool:
    # sqrt(a)+sqrt(b) >= n  <=>  2*sqrt(ab) >= n^2-a-b, squared when needed.
    t = n * n - a - b
    if t <= 0:
        return True
    return 4 * a * b >= t * t


def sqrt_enclosure(q: RationalLike, scale: int = 10**6) -> tuple[Fraction, Fraction]:
    """Rational bracket lo <= sqrt(q) <= hi with hi - lo = 1/scale."""
    q = _frac(q)
    if q < 0:
        raise DomainError("sqrt_enclosure: input must be >= 0")
    n = floor_sqrt(q * scale * scale)
    return Fraction(n, scale), Fraction(n + 1, scale)


def sign_plus_root(u: RationalLike, v: RationalLike, d: RationalLike) -> int:
    """Exact sign of u + v*sqrt(d) for rationals u, v and d >= 0."""
    u, v, d = _frac(u), _frac(v), _frac(d)
    if d < 0:
        raise DomainError("sign_plus_root: radicand must be >= 0")
    if v == 0 or d == 0:
        return _sign(u)
    if v > 0:
        if u >= 0:
            return 1
        return _sign(v * v * d - u * u)
    if u <= 0:
        return -1
    return _sign(u * u - v * v * d)


def sign_two_roots(t, a1, d1, a2, d2) -> int:
    """Exact sign of t + a1*sqrt(d1) + a2*sqrt(d2), all arguments rational."""
    t, a1, d1, a2, d2 = map(_frac, (t, a1, d1, a2, d2))
    u_sign = sign_plus_root(t, a1, d1)
    v_sign = _sign(a2) if d2 > 0 else 0
    if v_sign == 0:
        return u_sign
    if u_sign == 0:
        return v_sign
    if u_sign == v_sign:
        return u_sign
    # Opposite signs: compare u^2 = t^2 + a1^2 d1 + 2 t a1 sqrt(d1) with
    # v^2 = a2^2 d2; equality of magnitudes gives sign 0.
    s = sign_plus_root(t * t + a1 * a1 * d1 - a2 * a2 * d2, 2 * t * a1, d1)
    if s == 0:
        return 0
    return u_sign if s > 0 else v_sign


def _rational_square_root(q: Fraction):
    """sqrt(q) as a Fraction when q is a perfect rational square, else None."""
    if q < 0:
        return None
    rn = math.isqrt(q.numerator)
    rd = math.isqrt(q.denominator)
    if rn * rn == q.numerator and rd * rd == q.denominator:
        return Fraction(rn, rd)
    return None


class QuadraticRoot:
    """A real root of a*t^2 + b*t + c (rational coefficients, a != 0).

    ``branch`` is +1 for the larger root, -1 for the smaller; coefficients
    are normalized so a > 0, hence the root is (-b + branch*sqrt(disc))/(2a).
    The isolating interval [iso_lo, iso_hi] brackets the chosen root and,
    when the discriminant is positive, excludes the other one; it is only
    ever refined, never widened.
    """

    __slots__ = ("a", "b", "c", "branch", "_iso")

    def __init__(self, a, b, c, branch: int):
        a, b, c = _frac(a), _frac(b), _frac(c)
        if a == 0:
            raise DomainError("QuadraticRoot: leading coefficient must be nonzero")
        if branch not in (1, -1):
            raise DomainError("QuadraticRoot: branch must be +1 or -1")
        if a < 0:
            a, b, c = -a, -b, -c
        disc = b * b - 4 * a * c
        if disc < 0:
            raise DomainError("QuadraticRoot: negative discriminant, no real root")
        self.a, self.b, self.c = a, b, c
        self.branch = branch
        self._iso = self._initial_isolation(disc)

    @property
    def discriminant(self) -> Fraction:
        return self.b * self.b - 4 * self.a * self.c

    @property
    def isolating_interval(self) -> tuple[Fraction, Fraction]:
        return self._iso

    def _initial_isolation(self, disc: Fraction) -> tuple[Fraction, Fraction]:
        if disc == 0:
            v = Fraction(-self.b, 2 * self.a)
            return (v - 1, v + 1)
        scale = 1 << 16
        while True:
            n = floor_sqrt(disc * scale * scale)
            if n >= 1:
                break
            scale <<= 16
        s_lo, s_hi = Fraction(n, scale), Fraction(n + 1, scale)
        two_a = 2 * self.a
        if self.branch > 0:
            return ((-self.b + s_lo) / two_a, (-self.b + s_hi) / two_a)
        return ((-self.b - s_hi) / two_a, (-self.b - s_lo) / two_a)

    def rational_value(self):
        """The root as a Fraction when it is rational, else None."""
        s = _rational_square_root(self.discriminant)
        if s is None:
            return None
        return Fraction(-self.b + self.branch * s, 2 * self.a)

    def compare(self, x) -> int:
        """Exact ordering of this root against x: -1, 0 or +1."""
        if isinstance(x, QuadraticRoot):
            t = (-self.b) / (2 * self.a) - (-x.b) / (2 * x.a)
            return sign_two_roots(
                t,
                Fraction(self.branch) / (2 * self.a),
                self.discriminant,
                Fraction(-x.branch) / (2 * x.a),
                x.discriminant,
            )
        x = _frac(x)
        # sign of (-b + branch*sqrt(disc))/(2a) - x, with 2a > 0
        return sign_plus_root(-self.b - 2 * self.a * x, self.branch, self.discriminant)

    def refine(self) -> tuple[Fraction, Fraction]:
        """Halve the isolating interval (bisection on the exact compare)."""
        lo, hi = self._iso
        mid = (lo + hi) / 2
        if self.compare(mid) >= 0:
            self._iso = (mid, hi)
        else:
            self._iso = (lo, mid)
        return self._iso

    def __eq__(self, other) -> bool:
        try:
            return self.compare(other) == 0
        except (TypeError, ValueError):
            return NotImplemented

    def __lt__(self, other) -> bool:
        return self.compare(other) < 0

    def __le__(self, other) -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other) -> bool:
        return self.compare(other) > 0

    def __ge__(self, other) -> bool:
        return self.compare(other) >= 0

    def __hash__(self):
        r = self.rational_value()
        if r is not None:
            return hash(r)
        return hash((self.a, self.b, self.c, self.branch))

    def __repr__(self):
        return (f"QuadraticRoot({self.a}*t^2 + {self.b}*t + {self.c}, "
                f"branch={self.branch:+d})")

    def __float__(self):  # display only, never used in predicates
        lo, hi = self._iso
        for _ in range(80):
            if hi - lo < Fraction(1, 10**17):
                break
            lo, hi = self.refine()
        return float((lo + hi) / 2)


def quadratic_root(a, b, c, branch: int):
    """Root of a quadratic; collapses to a Fraction when it is rational."""
    r = QuadraticRoot(a, b, c, branch)
    v = r.rational_value()
    return v if v is not None else r


def compare_root(r: QuadraticRoot, x) -> int:
    """Exact ordering of the represented root against x (-1, 0, +1)."""
    return r.compare(x)


Abscissa = Union[Fraction, QuadraticRoot]


def _enclosure(x: Abscissa) -> tuple[Fraction, Fraction]:
    if isinstance(x, QuadraticRoot):
        return x.isolating_interval
    return (x, x)


def _refine(x: Abscissa) -> None:
    if isinstance(x, QuadraticRoot):
        x.refine()


def compare_values(x: Abscissa, y: Abscissa) -> int:
    """Exact ordering of two rational-or-quadratic-surd values."""
    if isinstance(x, QuadraticRoot):
        return x.compare(y)
    if isinstance(y, QuadraticRoot):
        return -y.compare(x)
    return _sign(_frac(x) - _frac(y))


def rational_between(x: Abscissa, y: Abscissa) -> Fraction:
    """A rational strictly between x and y (requires x < y exactly)."""
    if compare_values(x, y) >= 0:
        raise DomainError("rational_between: arguments must satisfy x < y")
    while True:
        _, x_hi = _enclosure(x)
        y_lo, _ = _enclosure(y)
        if x_hi < y_lo:
            return (x_hi + y_lo) / 2
        # Shrink whichever side still overlaps; rationals cannot shrink but
        # then the other side is a surd (distinct values), so this ends.
        _refine(x)
        _refine(y)
