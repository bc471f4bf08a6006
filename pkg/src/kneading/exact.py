"""Exact rationals, real quadratic surds and 2x2 integer matrices.

Rationals are plain :class:`fractions.Fraction` objects.  A quadratic
irrational is a :class:`QuadSurd` ``(a + b*sqrt(d))/c`` held in canonical
form, so equal values have equal fields and hash alike.  A "real value" is
either of the two; the surd variant is never rational.

No decision in this module touches floating point: ordering is settled by
sign analysis over the integers.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import (
    NegativeRadicand,
    NoRootInInterval,
    ProjectivePole,
    RationalRoot,
    SingularMatrix,
    ZeroDenominator,
)

__all__ = [
    "QuadSurd",
    "RealValue",
    "Mat2",
    "IDENTITY",
    "normalize_surd",
    "conjugate",
    "compare",
    "mobius_apply",
    "minimal_polynomial",
    "root_in_unit_interval",
    "squarefree_split",
    "sign_of_surd",
    "floor_value",
    "is_rational",
]


def _sign(n):
    return (n > 0) - (n < 0)


def squarefree_split(n):
    """Return ``(k, m)`` with ``n == k*k*m`` and ``m`` squarefree.

    Plain trial division; radicands here are small.
    """
    if n < 0:
        raise NegativeRadicand(f"negative radicand {n}")
    if n == 0:
        return 1, 0
    k, m = 1, n
    p = 2
    while p * p <= m:
        pp = p * p
        while m % pp == 0:
            m //= pp
            k *= p
        p += 1 if p == 2 else 2
    return k, m


def sign_of_surd(p, q, d):
    """Sign of ``p + q*sqrt(d)`` for integers ``p, q`` and ``d >= 0``."""
    sp, sq = _sign(p), _sign(q)
    if sq == 0 or sp == sq:
        return sp if sp else sq
    if sp == 0:
        return sq
    # opposite signs: the larger magnitude wins
    return sp * _sign(p * p - q * q * d)


def _sign_two(p, q, d1, r, d2):
    """Sign of ``p + q*sqrt(d1) + r*sqrt(d2)``."""
    su = sign_of_surd(p, q, d1)
    sv = _sign(r)
    if sv == 0 or su == sv:
        return su
    if su == 0:
        return sv
    # |u| vs |v| with u = p + q sqrt(d1), v = r sqrt(d2); u^2 - v^2 expands
    # to (p^2 + q^2 d1 - r^2 d2) + 2pq sqrt(d1)
    return su * sign_of_surd(p * p + q * q * d1 - r * r * d2, 2 * p * q, d1)


def _surd(a, b, c, d):
    """Canonical value of ``(a + b*sqrt(d))/c`` for squarefree ``d > 1``."""
    if c == 0:
        raise ZeroDenominator("zero denominator")
    if b == 0:
        return Fraction(a, c)
    if c < 0:
        a, b, c = -a, -b, -c
    g = math.gcd(a, b, c)
    if g > 1:
        a, b, c = a // g, b // g, c // g
    return QuadSurd(a, b, c, d)


@dataclass(frozen=True, order=False)
class QuadSurd:
    """The real number ``(a + b*sqrt(d))/c`` in canonical form.

    ``d > 1`` squarefree, ``b != 0``, ``c >= 1`` and ``gcd(a, b, c) == 1``.
    Use :func:`normalize_surd` to build one from arbitrary integers.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.d <= 1 or self.b == 0 or self.c < 1:
            raise ValueError(f"not a canonical surd: {tuple(self)}")
        if math.gcd(self.a, self.b, self.c) != 1:
            raise ValueError(f"not a canonical surd: {tuple(self)}")

    def __iter__(self):
        return iter((self.a, self.b, self.c, self.d))

    def __str__(self):
        return f"({self.a}{self.b:+d}*sqrt({self.d}))/{self.c}"

    def __repr__(self):
        return f"QuadSurd{tuple(self)!r}"

    def __float__(self):
        return (self.a + self.b * math.sqrt(self.d)) / self.c

    # -- field arithmetic within Q(sqrt(d)) --

    def _coerce(self, other):
        if isinstance(other, QuadSurd):
            if other.d != self.d:
                raise ValueError(
                    f"mixing sqrt({self.d}) and sqrt({other.d}) is not supported"
                )
            return other.a, other.b, other.c
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return other.numerator, 0, other.denominator
        return None

    def __neg__(self):
        return QuadSurd(-self.a, -self.b, self.c, self.d)

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a2, b2, c2 = o
        return _surd(self.a * c2 + a2 * self.c, self.b * c2 + b2 * self.c,
                     self.c * c2, self.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a2, b2, c2 = o
        return _surd(self.a * c2 - a2 * self.c, self.b * c2 - b2 * self.c,
                     self.c * c2, self.d)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a2, b2, c2 = o
        a, b, d = self.a, self.b, self.d
        return _surd(a * a2 + b * b2 * d, a * b2 + a2 * b, self.c * c2, d)

    __rmul__ = __mul__

    def reciprocal(self):
        # c / (a + b sqrt d) = c (a - b sqrt d) / (a^2 - b^2 d)
        a, b, c, d = self
        return _surd(c * a, -c * b, a * a - b * b * d, d)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a2, b2, c2 = o
        if b2 == 0:
            if a2 == 0:
                raise ZeroDenominator("division by zero")
            return self * Fraction(c2, a2)
        return self * QuadSurd(a2, b2, c2, self.d).reciprocal()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.reciprocal() * other

    # -- exact ordering --

    def _cmp(self, other):
        if isinstance(other, QuadSurd):
            a2, b2, c2, d2 = other
        elif isinstance(other, (int, Fraction)):
            other = Fraction(other)
            a2, b2, c2, d2 = other.numerator, 0, other.denominator, 0
        else:
            return None
        # both denominators positive, so cross-multiplying keeps the sign
        return _sign_two(self.a * c2 - a2 * self.c, self.b * c2, self.d,
                         -b2 * self.c, d2)

    def __lt__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s < 0

    def __le__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s <= 0

    def __gt__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s > 0

    def __ge__(self, other):
        s = self._cmp(other)
        return NotImplemented if s is None else s >= 0

    def __floor__(self):
        # floor((a + s)/c) == floor((a + floor(s))/c) for integer c > 0
        r = math.isqrt(self.b * self.b * self.d)
        fs = r if self.b > 0 else -r - 1
        return (self.a + fs) // self.c


RealValue = Union[Fraction, QuadSurd]


def is_rational(x):
    return isinstance(x, (int, Fraction))


def normalize_surd(a, b, c, d):
    """Canonical value of ``(a + b*sqrt(d))/c`` for arbitrary integers.

    Square factors of ``d`` move into ``b``; the result is a ``Fraction``
    whenever the radical disappears.

    >>> normalize_surd(2, 2, 4, 8)
    QuadSurd(1, 2, 2, 2)
    >>> normalize_surd(3, 0, 6, 5)
    Fraction(1, 2)
    """
    if c == 0:
        raise ZeroDenominator("zero denominator")
    if d < 0:
        raise NegativeRadicand(f"negative radicand {d}")
    k, m = squarefree_split(d)
    if m == 0 or b == 0:
        return Fraction(a, c)
    if m == 1:
        return Fraction(a + b * k, c)
    return _surd(a, b * k, c, m)


def conjugate(x):
    """Algebraic conjugate; rationals are their own conjugate."""
    if isinstance(x, QuadSurd):
        return QuadSurd(x.a, -x.b, x.c, x.d)
    return x


def compare(x, y):
    """Return -1, 0 or 1 as ``x`` is less than, equal to or greater than ``y``."""
    if isinstance(x, QuadSurd):
        return x._cmp(y)
    if isinstance(y, QuadSurd):
        return -y._cmp(x)
    return _sign(Fraction(x) - Fraction(y))


def floor_value(x):
    return math.floor(x)


def minimal_polynomial(x):
    """Primitive ``(c, d, e)`` with ``c > 0`` and ``c*x**2 + d*x + e == 0``."""
    a, b, c, d = x
    # (c x - a)^2 = b^2 d
    cc, dd, ee = c * c, -2 * a * c, a * a - b * b * d
    g = math.gcd(cc, dd, ee)
    return cc // g, dd // g, ee // g


def root_in_unit_interval(c, d, e):
    """The unique root of ``c X^2 + d X + e`` strictly inside (0, 1)."""
    if c == 0:
        raise NoRootInInterval("leading coefficient is zero")
    disc = d * d - 4 * c * e
    if disc < 0:
        raise NoRootInInterval(f"no real roots (discriminant {disc})")
    if math.isqrt(disc) ** 2 == disc:
        raise RationalRoot(f"discriminant {disc} is a perfect square")
    roots = [normalize_surd(-d, s, 2 * c, disc) for s in (1, -1)]
    inside = [r for r in roots if 0 < r < 1]
    if len(inside) != 1:
        raise NoRootInInterval(
            f"{len(inside)} roots of {c}X^2{d:+d}X{e:+d} lie in (0,1)"
        )
    return inside[0]


@dataclass(frozen=True)
class Mat2:
    """Integer matrix ``[[e00, e01], [e10, e11]]``."""

    e00: int
    e01: int
    e10: int
    e11: int

    @classmethod
    def of(cls, rows):
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def __iter__(self):
        return iter((self.e00, self.e01, self.e10, self.e11))

    def rows(self):
        return [[self.e00, self.e01], [self.e10, self.e11]]

    def __repr__(self):
        return f"Mat2({self.rows()})"

    def __str__(self):
        return str(self.rows()).replace(" ", "")

    def __matmul__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        a, b, c, d = self
        e, f, g, h = other
        return Mat2(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __mul__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        return Mat2(k * self.e00, k * self.e01, k * self.e10, k * self.e11)

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(*(x + y for x, y in zip(self, other)))

    @property
    def det(self):
        return self.e00 * self.e11 - self.e01 * self.e10

    @property
    def trace(self):
        return self.e00 + self.e11

    def adjugate(self):
        return Mat2(self.e11, -self.e01, -self.e10, self.e00)

    def inverse(self):
        """Integer inverse; only defined for determinant +-1."""
        det = self.det
        if det not in (1, -1):
            raise SingularMatrix(f"{self} is not invertible over the integers")
        return self.adjugate() * det

    def is_nonnegative(self):
        return min(self) >= 0

    def column(self, j):
        return (self.e00, self.e10) if j == 0 else (self.e01, self.e11)

    def __call__(self, x):
        return mobius_apply(self, x)


IDENTITY = Mat2(1, 0, 0, 1)


def mobius_apply(m, x):
    """``(e00*x + e01) / (e10*x + e11)``, exactly."""
    a, b, c, d = m
    if a * d - b * c == 0:
        raise SingularMatrix(f"{m} is singular")
    if isinstance(x, QuadSurd):
        xa, xb, xc, xd = x
        # (A + B r) / (C + E r) with r = sqrt(xd), all over the common xc
        A, B = a * xa + b * xc, a * xb
        C, E = c * xa + d * xc, c * xb
        den = C * C - E * E * xd
        # den == 0 only if C == E == 0, since xd is not a square
        if den == 0:
            raise ProjectivePole(f"{m} has a pole at {x}")
        return _surd(A * C - B * E * xd, B * C - A * E, den, xd)
    if type(x) is not Fraction:
        x = Fraction(x)
    u, v = x.numerator, x.denominator
    num, den = a * u + b * v, c * u + d * v
    if den == 0:
        raise ProjectivePole(f"{m} has a pole at {x}")
    return Fraction(num, den)
