"""Real roots of cubic equations via the trigonometric formula.

A general cubic ``a X**3 + b X**2 + c X + d`` is depressed by ``X = x - b/(3a)``
to ``x**3 + p x + q``. When ``(q/2)**2 + (p/3)**3 <= 0`` all three roots are
real and equal ``2 sqrt(-p/3) cos(acos((3q/2p) sqrt(-3/p))/3 + 2k pi/3)``.

:func:`reference_roots` is an independent bisection solver used as an oracle.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple

from .errors import DiscriminantPositive, NotACubic
from .triangle import CLAMP_TOL, DepressedCubic, clamp_unit, cos_triple_angle

DELTA_RTOL = 1e-12


class CubicCoefficients(NamedTuple):
    """Coefficients of ``a X**3 + b X**2 + c X + d``."""

    a: float
    b: float
    c: float
    d: float

    def __call__(self, x: float) -> float:
        return ((self.a * x + self.b) * x + self.c) * x + self.d


class Classification(enum.Enum):
    THREE_DISTINCT = "three_distinct"
    ONE_DOUBLE_ONE_SIMPLE = "one_double_one_simple"
    TRIPLE = "triple"
    ONE_REAL = "one_real"

    @property
    def real_roots(self) -> bool:
        return self is not Classification.ONE_REAL


@dataclass(frozen=True)
class RootSet:
    classification: Classification
    roots: tuple[float, ...]
    delta: float

    def shifted(self, shift: float) -> "RootSet":
        return RootSet(self.classification, tuple(r + shift for r in self.roots), self.delta)


def _as_depressed(dc) -> DepressedCubic:
    p, q = (float(v) for v in dc)
    if not (math.isfinite(p) and math.isfinite(q)):
        raise ValueError(f"coefficients must be finite, got p={p}, q={q}")
    return DepressedCubic(p, q)


def depress(cc) -> tuple[DepressedCubic, float]:
    """Return ``((p, q), shift)``; a root ``x`` of the depressed cubic maps to ``x + shift``."""
    a, b, c, d = (float(v) for v in cc)
    if a == 0:
        raise NotACubic("leading coefficient is zero")
    if not all(math.isfinite(v) for v in (a, b, c, d)):
        raise ValueError(f"coefficients must be finite, got {(a, b, c, d)}")
    p = (3 * a * c - b * b) / (3 * a * a)
    q = (2 * b**3 - 9 * a * b * c + 27 * a * a * d) / (27 * a**3)
    return DepressedCubic(p, q), -b / (3 * a)


def discriminant(dc) -> tuple[float, Classification]:
    """``delta = (q/2)**2 + (p/3)**3`` and the root pattern it implies.

    ``delta`` within ``1e-12 * max(1, (q/2)**2, |p/3|**3)`` of zero counts as a
    repeated root.
    """
    p, q = _as_depressed(dc)
    half_q2 = (q / 2) ** 2
    third_p3 = (p / 3) ** 3
    delta = half_q2 + third_p3
    tol = DELTA_RTOL * max(1.0, half_q2, abs(third_p3))
    if delta > tol:
        return delta, Classification.ONE_REAL
    if delta < -tol:
        return delta, Classification.THREE_DISTINCT
    if half_q2 <= tol and abs(third_p3) <= tol:
        return delta, Classification.TRIPLE
    return delta, Classification.ONE_DOUBLE_ONE_SIMPLE


def _newton_step(f_p: float, f_q: float, y: float) -> float:
    slope = 3 * y * y + f_p
    if slope == 0:
        return y
    return y - ((y * y + f_p) * y + f_q) / slope


def trig_roots(dc, polish: bool = False) -> RootSet:
    """Three real roots of ``x**3 + p x + q``, ascending, by the cosine formula.

    Raises DiscriminantPositive when only one root is real. Set ``polish`` to
    apply one Newton step per root.
    """
    dc = _as_depressed(dc)
    p, q = dc
    delta, kind = discriminant(dc)
    if p == 0:
        if q != 0:
            raise DiscriminantPositive(f"p = 0 and q = {q}: one real root")
        return RootSet(Classification.TRIPLE, (0.0, 0.0, 0.0), delta)
    if p > 0:
        raise DiscriminantPositive(f"p = {p} > 0: one real root")
    arg = clamp_unit(cos_triple_angle(dc), CLAMP_TOL)
    if arg is None:
        raise DiscriminantPositive(f"delta = {delta} > 0: one real root")
    if kind is Classification.ONE_REAL:
        # clamped onto the boundary
        kind = Classification.ONE_DOUBLE_ONE_SIMPLE

    radius = 2.0 * math.sqrt(-p / 3.0)
    theta = math.acos(arg) / 3.0
    roots = [radius * math.cos(theta + 2 * k * math.pi / 3) for k in (-1, 0, 1)]
    if polish:
        roots = [_newton_step(p, q, y) for y in roots]
    return RootSet(kind, tuple(sorted(roots)), delta)


def _bisect(f, lo: float, hi: float, rtol: float = 1e-14) -> float:
    flo = f(lo)
    for _ in range(2000):
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi) or hi - lo <= rtol * max(abs(lo), abs(hi)):
            break
        fmid = f(mid)
        if fmid == 0:
            return mid
        if (fmid < 0) == (flo < 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def reference_roots(dc) -> RootSet:
    """Real roots by sign-change bracketing and bisection.

    Every real root lies in ``[-M, M]`` with ``M = 1 + max(|p|, |q|)``; the
    search interval ``[-2M, 2M]`` is split at the critical points of the cubic
    so each piece is monotone and holds at most one root. A critical point
    where the cubic (nearly) vanishes without a sign change is a double root.
    """
    dc = _as_depressed(dc)
    p, q = dc
    delta, kind = discriminant(dc)
    bound = 2.0 * (1.0 + max(abs(p), abs(q)))
    crit = []
    if p < 0:
        c = math.sqrt(-p / 3.0)
        crit = [-c, c]
    knots = [-bound, *crit, bound]
    values = [dc(x) for x in knots]
    # roundoff level of f near a critical point
    ftol = 1e-12 * max(1.0, abs(q), abs(p) ** 1.5)

    roots: list[float] = []
    for lo, hi, flo, fhi in zip(knots, knots[1:], values, values[1:]):
        if flo == 0:
            continue
        if fhi == 0:
            roots.append(hi)
        elif (flo < 0) != (fhi < 0):
            roots.append(_bisect(dc, lo, hi))
    for i, c in enumerate(crit, start=1):
        left_change = (values[i - 1] < 0) != (values[i] < 0)
        right_change = (values[i] < 0) != (values[i + 1] < 0)
        if values[i] != 0 and abs(values[i]) <= ftol and not (left_change or right_change):
            roots.extend([c, c])
        elif values[i] == 0:
            # exact double root at the critical point, counted once above
            roots.append(c)

    roots.sort()
    if len(roots) == 1 and kind is Classification.TRIPLE:
        roots *= 3
    elif len(roots) == 1:
        kind = Classification.ONE_REAL
    elif kind is Classification.ONE_REAL:
        kind = Classification.ONE_DOUBLE_ONE_SIMPLE
    return RootSet(kind, tuple(roots), delta)


def solve_cubic(cc, polish: bool = False) -> RootSet:
    """Real roots of ``a X**3 + b X**2 + c X + d``.

    >>> [round(x, 12) for x in solve_cubic((1, -6, 11, -6)).roots]
    [1.0, 2.0, 3.0]

    With one real root, falls back to :func:`reference_roots`.
    """
    dc, shift = depress(cc)
    return solve_depressed(dc, polish=polish).shifted(shift)


def solve_depressed(dc, polish: bool = False) -> RootSet:
    try:
        return trig_roots(dc, polish=polish)
    except DiscriminantPositive:
        found = reference_roots(dc)
    delta = found.delta
    if len(found.roots) != 1:
        # delta rounded positive while bisection sees three crossings
        return RootSet(found.classification, found.roots, delta)
    return RootSet(Classification.ONE_REAL, found.roots, delta)
