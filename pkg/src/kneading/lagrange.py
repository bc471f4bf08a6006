"""Eventual periodicity of quadratic irrationals under any Gauss map.

For a quadratic irrational x we build an integer matrix H with eigenvector
``(x, 1)`` and eigenvalues ``lam > lam_bar > 0`` (a "hyperbolic
certificate").  Conjugating H by the cylinder matrices B_n gives integer
matrices ``H_n = B_n^-1 H B_n`` of fixed trace and determinant which are
eventually entrywise nonnegative, hence eventually repeat.  A repetition
``H_t == H_{t+r}`` forces ``G^t x == G^{t+r} x`` because the
lam-eigenspace of ``H_t`` is a line spanned by ``F^-1 (G^t x, 1)``.

:func:`orbit_oracle` answers the same question by brute force (hashing exact
orbit values) and is kept deliberately independent of the matrix route.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .dynamics import DEFAULT_MAX_STEPS, CylinderState, expand, push_cylinder, step
from .errors import (
    NoValidRoot,
    NotQuadratic,
    OutOfDomain,
    RationalFixedPoint,
    StepBudgetExceeded,
)
from .exact import (
    IDENTITY,
    Mat2,
    QuadSurd,
    conjugate,
    minimal_polynomial,
    mobius_apply,
    normalize_surd,
)

__all__ = [
    "HyperbolicCert",
    "PeriodReport",
    "build_certificate",
    "conjugate_step",
    "detect_period",
    "orbit_oracle",
    "reconstruct",
    "word_matrix",
]


@dataclass(frozen=True)
class HyperbolicCert:
    H: Mat2
    lam: QuadSurd
    lam_bar: QuadSurd
    t_shift: int


@dataclass(frozen=True)
class PeriodReport:
    """Outcome of :func:`detect_period`.

    ``preperiod``/``period`` are the minimal (t*, r*) with
    ``G^t* x == G^(t*+r*) x``; ``detect_index``/``detect_gap`` are the
    (t, r) of the first matrix repetition ``H_t == H_{t+r}``.
    ``nonnegative_from`` is the least m such that every observed ``H_n``
    with ``m <= n <= detect_index + detect_gap`` is entrywise nonnegative,
    or None if the last one is not.
    """

    preperiod: int
    period: int
    preperiod_digits: tuple
    period_digits: tuple
    detect_index: int
    detect_gap: int
    certificate: HyperbolicCert
    conjugates: tuple
    nonnegative_from: int | None


def _require_surd(x):
    if not isinstance(x, QuadSurd):
        raise NotQuadratic(f"{x} is rational; use expand for rationals")


def build_certificate(x):
    _require_surd(x)
    c, d, e = minimal_polynomial(x)
    xbar = conjugate(x)
    # smallest positive t with c*x + t > 0 and c*xbar + t > 0
    low = min(x, xbar) * c
    t = max(1, math.floor(-low) + 1)
    K = Mat2(-d + t, -e, c, t)
    mu, mu_bar = x * c + t, xbar * c + t
    if mu_bar < mu:
        return HyperbolicCert(K, mu, mu_bar, t)
    # det(K) K^-1 = adj(K) swaps the roles of the eigenvalues
    return HyperbolicCert(K.adjugate(), mu_bar, mu, t)


def conjugate_step(H, B):
    """``B^-1 H B`` for a cylinder matrix ``B`` of determinant +-1."""
    return B.inverse() @ H @ B


def _nonnegative_from(conjugates):
    m = None
    for n in range(len(conjugates) - 1, -1, -1):
        if not conjugates[n].is_nonnegative():
            break
        m = n
    return m


def _minimize(values, t, r):
    for rr in range(1, r + 1):
        if r % rr == 0 and values[t] == values[t + rr]:
            break
    while t > 0 and values[t - 1] == values[t - 1 + rr]:
        t -= 1
    return t, rr


def detect_period(P, x, max_steps=DEFAULT_MAX_STEPS):
    _require_surd(x)
    if not (0 < x < 1):
        raise OutOfDomain(f"{x} is not in (0, 1)")
    cert = build_certificate(x)
    state = CylinderState()
    values, digits, conjugates = [x], [], []
    seen = {}
    while True:
        Hn = conjugate_step(cert.H, state.B)
        n = state.n
        conjugates.append(Hn)
        if Hn in seen:
            t = seen[Hn]
            r = n - t
            break
        seen[Hn] = n
        if n >= max_steps:
            raise StepBudgetExceeded(
                f"no repetition of H_n within {max_steps} steps for {x}"
            )
        b = P.locate(values[-1])
        digits.append(b.index)
        values.append(mobius_apply(b.matrix, values[-1]))
        state = push_cylinder(state, b)

    if values[t] != values[t + r]:
        # cannot happen: equal H_n have equal lambda-eigenlines
        raise AssertionError(f"H_{t} == H_{t + r} but orbit values differ")
    tt, rr = _minimize(values, t, r)
    return PeriodReport(
        preperiod=tt,
        period=rr,
        preperiod_digits=tuple(digits[:tt]),
        period_digits=tuple(digits[tt:tt + rr]),
        detect_index=t,
        detect_gap=r,
        certificate=cert,
        conjugates=tuple(conjugates),
        nonnegative_from=_nonnegative_from(conjugates),
    )


def orbit_oracle(P, x, max_steps=DEFAULT_MAX_STEPS):
    """Minimal ``(preperiod, period)`` found by hashing exact orbit values."""
    _require_surd(x)
    first = {x: 0}
    for n in range(1, max_steps + 1):
        _, x = step(P, x)
        if x in first:
            return first[x], n - first[x]
        first[x] = n
    raise StepBudgetExceeded(f"orbit did not repeat within {max_steps} steps")


def word_matrix(P, digits):
    """``G_{a_n} ... G_{a_1}`` for the word ``a_1 ... a_n``."""
    M = IDENTITY
    for a in digits:
        M = P.branch(a).matrix @ M
    return M


def _fixed_points(M):
    a, b, c, d = M
    # (a x + b)/(c x + d) = x  <=>  c x^2 + (d - a) x - b = 0
    if c == 0:
        raise RationalFixedPoint(f"{M} has no quadratic fixed-point equation")
    # the equation is a multiple of the minimal polynomial; dividing out the
    # content keeps the discriminant small enough to factor
    A, B, C = c, d - a, -b
    g = math.gcd(A, B, C)
    A, B, C = A // g, B // g, C // g
    disc = B * B - 4 * A * C
    if disc < 0:
        raise NoValidRoot(f"{M} has no real fixed points")
    if math.isqrt(disc) ** 2 == disc:
        raise RationalFixedPoint(f"{M} has rational fixed points")
    return [normalize_surd(-B, s, 2 * A, disc) for s in (1, -1)]


def reconstruct(P, preperiod_digits, period_digits):
    """The quadratic irrational with kneading sequence ``pre, per, per, ...``."""
    pre, per = tuple(preperiod_digits), tuple(period_digits)
    if not per:
        raise ValueError("period must be nonempty")
    A = word_matrix(P, pre)
    M = A.inverse() @ word_matrix(P, per) @ A
    word = pre + per
    for x in _fixed_points(M):
        if not (0 < x < 1):
            continue
        if expand(P, x, len(word)).digits == word:
            return x
    raise NoValidRoot(f"no fixed point of {M} has expansion {list(pre)}; {list(per)}")
