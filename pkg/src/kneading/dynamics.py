"""Exact iteration of the Gauss map of a partition.

The orbit ``x, Gx, G^2x, ...`` is followed in exact arithmetic; the branch
indices visited form the kneading sequence.  Composing inverse branches
along a digit word recovers the starting point,

    x = psi_{a_1} ... psi_{a_n}(G^n x),

and the same composition applied to 0 and 1 gives the endpoints of the
cylinder interval of the word.  Those endpoints are read off the columns of

    B_n = G_{a_1}^-1 ... G_{a_n}^-1 . [[0,1],[1,1]].
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import OutOfDomain
from .exact import Mat2, mobius_apply
from .partition import inverse_branch

__all__ = [
    "DEFAULT_MAX_STEPS",
    "Expansion",
    "CylinderState",
    "step",
    "orbit",
    "expand",
    "push_cylinder",
    "cylinder",
    "gamma_interval",
    "evaluate_composition",
]

DEFAULT_MAX_STEPS = 10_000

_F = Mat2(0, 1, 1, 1)
_F_INV = Mat2(-1, 1, 1, 0)


@dataclass(frozen=True)
class Expansion:
    """Kneading digits of a point plus how the orbit ended.

    ``status`` is ``"zero"`` or ``"one"`` when the orbit reached an endpoint
    (rational input) and ``"ongoing"`` when the step budget ran out first;
    ``value`` is the last orbit point, i.e. ``G^n x`` for ``n = len(digits)``.
    """

    digits: tuple
    status: str
    value: object

    @property
    def terminated(self):
        return self.status != "ongoing"


def step(P, x):
    """One application of the Gauss map: ``(digit, G(x))``."""
    b = P.locate(x)
    return b.index, mobius_apply(b.matrix, x)


def orbit(P, x, max_steps=DEFAULT_MAX_STEPS):
    """Yield ``(digit, next_value)`` until an endpoint or ``max_steps``."""
    for _ in range(max_steps):
        a, x = step(P, x)
        yield a, x
        if x == 0 or x == 1:
            return


def expand(P, x, max_steps=DEFAULT_MAX_STEPS):
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    if not (0 < x < 1):
        raise OutOfDomain(f"{x} is not in (0, 1)")
    digits = []
    value = x
    for a, value in orbit(P, x, max_steps):
        digits.append(a)
    if value == 0:
        status = "zero"
    elif value == 1:
        status = "one"
    else:
        status = "ongoing"
    return Expansion(tuple(digits), status, value)


@dataclass(frozen=True)
class CylinderState:
    B: Mat2 = _F
    n: int = 0


def push_cylinder(state, b):
    # B_{n+1} = (B_n F^-1) G_a^-1 F
    return CylinderState(state.B @ _F_INV @ b.inverse_matrix @ _F, state.n + 1)


def cylinder(P, digits):
    state = CylinderState()
    for a in digits:
        state = push_cylinder(state, P.branch(a))
    return state


def _column_point(col):
    p, q = col
    if q < 0:
        p, q = -p, -q
    return p, q


def gamma_interval(state):
    """Endpoints and length of the cylinder interval of ``state``.

    Returns ``(lo, hi, length)`` with ``length == 1/(q*s)`` where ``q, s``
    are the (positive) denominators of the two endpoints.
    """
    p, q = _column_point(state.B.column(0))
    r, s = _column_point(state.B.column(1))
    lo, hi = sorted((Fraction(p, q), Fraction(r, s)))
    return lo, hi, Fraction(1, q * s)


def evaluate_composition(P, digits, y):
    """``psi_{a_1} ... psi_{a_n}(y)``; the empty word gives back ``y``."""
    branches = [P.branch(a) for a in digits]
    for b in reversed(branches):
        y = inverse_branch(b, y)
    return y
