"""Unimodular partitions of the unit interval and their Gauss-map branches.

A partition is a set Q of rationals ``0 = q_0 < q_1 < ... < 1`` in which
every pair of neighbours ``p/q < r/s`` satisfies ``p*s - q*r == -1``, plus a
sign in {-1, +1} per interval.  Each interval ``(p/q, r/s]`` carries the
fractional-linear branch

    G_a = [[0,1],[1,1]] . [[0,1],[1,0]]^((eps+1)/2) . [[p,r],[q,s]]^-1

which maps it onto the unit interval, increasing for ``eps == -1`` and
decreasing for ``eps == +1``.

Three systems are built in: the ordinary continued fractions, the odd
continued fractions (both countable, with branches ``(1/(a+1), 1/a]``) and
the two-branch Farey system ``Q = [0, 1/2, 1]``.
"""
from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .errors import (
    BadEndpoints,
    BadSign,
    InvalidDigit,
    LengthMismatch,
    NotSorted,
    NotUnimodular,
    OutOfDomain,
    TooFewPoints,
)
from .exact import Mat2, mobius_apply

__all__ = [
    "Branch",
    "Partition",
    "FinitePartition",
    "OrdinaryPartition",
    "OddPartition",
    "ORDINARY",
    "ODD",
    "FAREY",
    "validate_finite",
    "locate",
    "branch_matrix",
    "inverse_branch",
    "odd_digit_form",
]

_F = Mat2(0, 1, 1, 1)
_SWAP = Mat2(0, 1, 1, 0)


@dataclass(frozen=True)
class Branch:
    index: int
    lo: Fraction
    hi: Fraction
    right_closed: bool
    eps: int

    def __post_init__(self):
        if self.eps not in (-1, 1):
            raise ValueError(f"sign must be -1 or +1, got {self.eps}")
        p, q = self.lo.numerator, self.lo.denominator
        r, s = self.hi.numerator, self.hi.denominator
        if p * s - q * r != -1:
            raise ValueError(f"({self.lo}, {self.hi}] is not unimodular")

    @property
    def endpoints(self):
        """The basis matrix ``[[p, r], [q, s]]``."""
        return Mat2(self.lo.numerator, self.hi.numerator,
                    self.lo.denominator, self.hi.denominator)

    @cached_property
    def matrix(self):
        # endpoints has determinant -1, so its inverse is minus its adjugate
        inv = self.endpoints.adjugate() * -1
        if self.eps == 1:
            return _F @ _SWAP @ inv
        return _F @ inv

    @cached_property
    def inverse_matrix(self):
        p, q = self.lo.numerator, self.lo.denominator
        r, s = self.hi.numerator, self.hi.denominator
        if self.eps == -1:
            return Mat2(r - p, p, s - q, q)
        return Mat2(p - r, r, q - s, s)

    def contains(self, x):
        if not self.lo < x:
            return False
        return x < self.hi or (self.right_closed and x == self.hi)

    def interval_str(self):
        return f"({self.lo}, {self.hi}{']' if self.right_closed else ')'}"


class Partition:
    """Common interface of finite and built-in countable partitions."""

    name = "custom"

    def branch(self, a):
        raise NotImplementedError

    def locate(self, x):
        raise NotImplementedError

    def _check_domain(self, x):
        if not (0 < x < 1):
            raise OutOfDomain(f"{x} is not in (0, 1)")


class FinitePartition(Partition):
    def __init__(self, branches, name="custom"):
        self.branches = tuple(branches)
        self.name = name
        self._his = [b.hi for b in self.branches]

    @property
    def points(self):
        return [self.branches[0].lo] + self._his

    @property
    def signs(self):
        return [b.eps for b in self.branches]

    def branch(self, a):
        if not isinstance(a, int) or not 1 <= a <= len(self.branches):
            raise InvalidDigit(f"{a!r} names no branch of {self.name}")
        return self.branches[a - 1]

    def locate(self, x):
        self._check_domain(x)
        # every branch but the last is right-closed and the last ends at 1,
        # so the first branch with x <= hi is the one
        return self.branches[bisect.bisect_left(self._his, x)]

    def __eq__(self, other):
        return isinstance(other, FinitePartition) and self.branches == other.branches

    def __hash__(self):
        return hash(self.branches)

    def __repr__(self):
        return f"FinitePartition(Q={[str(q) for q in self.points]}, eps={self.signs})"


class _HarmonicPartition(Partition):
    """Branches ``(1/(a+1), 1/a]`` for a = 1, 2, ..."""

    def eps(self, a):
        raise NotImplementedError

    def branch(self, a):
        if not isinstance(a, int) or a < 1:
            raise InvalidDigit(f"{a!r} names no branch of {self.name}")
        return self._branch(a)

    @lru_cache(maxsize=4096)
    def _branch(self, a):
        return Branch(a, Fraction(1, a + 1), Fraction(1, a), True, self.eps(a))

    def locate(self, x):
        self._check_domain(x)
        # x in (1/(a+1), 1/a]  <=>  a <= 1/x < a+1
        if type(x) is Fraction:
            return self._branch(x.denominator // x.numerator)
        return self._branch(math.floor(1 / x))

    def __repr__(self):
        return f"{type(self).__name__}()"


class OrdinaryPartition(_HarmonicPartition):
    name = "ordinary"

    def eps(self, a):
        return 1


class OddPartition(_HarmonicPartition):
    name = "odd"

    def eps(self, a):
        return 1 if a % 2 else -1


def validate_finite(Q, eps, name="custom"):
    """Check Q and the sign list, returning a :class:`FinitePartition`.

    Indices in error messages are 0-based positions in Q; a unimodularity
    failure at index i concerns the pair ``Q[i], Q[i+1]``.
    """
    Q = [Fraction(q) for q in Q]
    eps = list(eps)
    for i in range(len(Q) - 1):
        if not Q[i] < Q[i + 1]:
            raise NotSorted(f"Q is not strictly increasing at index {i + 1}", i + 1)
    if not Q or Q[0] != 0:
        raise BadEndpoints("Q must start at 0", 0)
    if Q[-1] != 1:
        raise BadEndpoints("Q must end at 1", len(Q) - 1)
    if len(Q) < 3:
        raise TooFewPoints(f"Q needs at least 3 points, got {len(Q)}")
    if len(eps) != len(Q) - 1:
        raise LengthMismatch(
            f"epsilon has {len(eps)} entries, expected {len(Q) - 1}", len(eps)
        )
    for i, e in enumerate(eps):
        if e not in (-1, 1) or isinstance(e, bool):
            raise BadSign(f"epsilon[{i}] = {e!r} is not -1 or 1", i)
    for i in range(len(Q) - 1):
        p, q = Q[i].numerator, Q[i].denominator
        r, s = Q[i + 1].numerator, Q[i + 1].denominator
        det = p * s - q * r
        if det != -1:
            raise NotUnimodular(
                f"interval ({Q[i]}, {Q[i + 1]}) at index {i} has determinant {det}",
                i, det,
            )
    last = len(Q) - 2
    branches = [
        Branch(i + 1, Q[i], Q[i + 1], i != last, int(eps[i]))
        for i in range(len(Q) - 1)
    ]
    return FinitePartition(branches, name)


ORDINARY = OrdinaryPartition()
ODD = OddPartition()
FAREY = validate_finite([0, Fraction(1, 2), 1], [-1, -1], name="farey")


def locate(P, x):
    return P.locate(x)


def branch_matrix(b):
    return b.matrix


def inverse_branch(b, y):
    """psi_a(y): the point of the closed branch interval that G_a sends to y."""
    if not (0 <= y <= 1):
        raise OutOfDomain(f"{y} is not in [0, 1]")
    return mobius_apply(b.inverse_matrix, y)


def odd_digit_form(a):
    """Odd continued-fraction presentation ``(b, eps)`` of branch ``a``.

    >>> odd_digit_form(2)
    (3, -1)
    """
    return (a, 1) if a % 2 else (a + 1, -1)
