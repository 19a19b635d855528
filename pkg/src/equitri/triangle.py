"""Equilateral triangle whose vertices project onto three given points.

A pose ``(o, radius, theta, orientation)`` places the vertices at
``(o + radius*cos(phi_k), orientation * radius*sin(phi_k))`` with
``phi_k = theta + 2*k*pi/3``, ``k = -1, 0, 1``. With ``theta`` in
``[0, pi/3]`` the vertex ``k = 0`` sits over the largest point, ``k = 1``
over the smallest and ``k = -1`` over the middle one.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import ConditioningWarning, DegenerateInput
from .line_measures import CollinearTriple, as_triple

# |cos(3 theta)| may exceed 1 by this much from roundoff and still be clamped.
CLAMP_TOL = 1e-12


class DepressedCubic(NamedTuple):
    """Coefficients of ``x**3 + p*x + q``."""

    p: float
    q: float

    def __call__(self, x: float) -> float:
        return (x * x + self.p) * x + self.q


class PlanePoint(NamedTuple):
    x: float
    y: float


@dataclass(frozen=True)
class TrianglePose:
    o: float
    radius: float
    theta: float
    orientation: int = 1

    def __post_init__(self):
        if self.orientation not in (1, -1):
            raise ValueError(f"orientation must be +1 or -1, got {self.orientation!r}")
        if not self.radius >= 0 or not 0.0 <= self.theta <= math.pi / 3:
            raise ValueError(f"invalid pose radius={self.radius} theta={self.theta}")

    @property
    def phases(self) -> tuple[float, float, float]:
        """Phases of the vertices over the smallest, middle and largest point."""
        t = self.theta
        return (t + 2 * math.pi / 3, t - 2 * math.pi / 3, t)

    def mirrored(self) -> "TrianglePose":
        return TrianglePose(self.o, self.radius, self.theta, -self.orientation)


def parse_orientation(value) -> int:
    if value in (1, "+", "+1", "1"):
        return 1
    if value in (-1, "-", "-1"):
        return -1
    raise ValueError(f"orientation must be '+' or '-', got {value!r}")


def centered_invariants(points: Iterable[float]) -> tuple[float, DepressedCubic]:
    """Center the triple at its mean and return ``(o, (p, q))``.

    ``(x - y1)(x - y2)(x - y3) == x**3 + p*x + q`` for the centered values.
    """
    t = as_triple(points)
    o = math.fsum(t) / 3.0
    y1, y2, y3 = (v - o for v in t)
    # -(y1**2 + y2**2 + y3**2) / 2 equals the pairwise-product sum when the
    # y's sum to zero, and has no cancellation.
    p = -0.5 * math.fsum((y1 * y1, y2 * y2, y3 * y3))
    q = -y1 * y2 * y3
    return o, DepressedCubic(p, q)


def cos_triple_angle(dc: DepressedCubic) -> float:
    """``cos(3*theta) = (3q / 2p) * sqrt(-3/p)``, unclamped. Requires ``p < 0``."""
    p, q = dc
    return (3.0 * q) / (2.0 * p) * math.sqrt(-3.0 / p)


def clamp_unit(value: float, tol: float = CLAMP_TOL) -> float | None:
    """Clamp to [-1, 1] if within ``tol``; ``None`` if further out."""
    if abs(value) <= 1.0:
        return value
    if abs(value) <= 1.0 + tol:
        return math.copysign(1.0, value)
    return None


def pose_from_cubic(dc: DepressedCubic, o: float = 0.0, orientation=1) -> TrianglePose:
    """Pose whose vertex projections are the real roots of ``dc`` shifted by ``o``.

    Raises DegenerateInput when ``p >= 0`` or the cosine argument is outside
    the clamp window (fewer than three real roots).
    """
    p, q = dc
    if not p < 0:
        raise DegenerateInput(f"need p < 0 for three real roots, got p={p}")
    arg = cos_triple_angle(dc)
    clamped = clamp_unit(arg)
    if clamped is None:
        raise DegenerateInput(f"cos(3 theta) = {arg} is outside [-1, 1]")
    if 1.0 - abs(arg) <= CLAMP_TOL:
        warnings.warn(
            f"cos(3 theta) = {arg!r} is within {CLAMP_TOL} of +-1; "
            "two projections nearly coincide",
            ConditioningWarning,
            stacklevel=2,
        )
    radius = 2.0 * math.sqrt(-p / 3.0)
    theta = min(math.acos(clamped) / 3.0, math.pi / 3)
    return TrianglePose(o, radius, theta, parse_orientation(orientation))


def pose_from_triple(points: Iterable[float], orientation=1) -> TrianglePose:
    """Equilateral triangle, centered on the line, projecting onto ``points``.

    ``theta`` is a third of the angle whose cosine is ``(3q/2p) sqrt(-3/p)``.
    Its sine comes from the discriminant ``-(b-a)**2 (c-b)**2 (c-a)**2 / 108``,
    which the point differences give without cancellation, so the angle is
    taken with ``atan2`` rather than ``acos``. The two agree exactly in real
    arithmetic; ``atan2`` keeps full accuracy when two points nearly coincide.

    >>> pose = pose_from_triple((-1, 0, 1))
    >>> round(pose.radius, 7), round(pose.theta, 7)
    (1.1547005, 0.5235988)
    """
    o, dc = centered_invariants(points)
    a, b, c = sorted(as_triple(points))
    cos3 = cos_triple_angle(dc)
    if 1.0 - abs(cos3) <= CLAMP_TOL:
        warnings.warn(
            f"cos(3 theta) = {cos3!r} is within {CLAMP_TOL} of +-1; "
            "two points nearly coincide",
            ConditioningWarning,
            stacklevel=2,
        )
    m = -dc.p / 3.0
    sin3 = (b - a) * (c - b) * (c - a) / (math.sqrt(108.0) * m * math.sqrt(m))
    theta = min(math.atan2(sin3, cos3) / 3.0, math.pi / 3)
    return TrianglePose(o, 2.0 * math.sqrt(m), theta, parse_orientation(orientation))


def triangle_vertices(pose: TrianglePose) -> tuple[PlanePoint, PlanePoint, PlanePoint]:
    """Vertices ordered by abscissa (over the smallest, middle, largest point)."""
    return tuple(
        PlanePoint(
            pose.o + pose.radius * math.cos(phi),
            pose.orientation * pose.radius * math.sin(phi),
        )
        for phi in pose.phases
    )


def project_vertices(pose: TrianglePose) -> CollinearTriple:
    """Abscissas of the vertices, ascending."""
    xs = sorted(v.x for v in triangle_vertices(pose))
    return as_triple(xs)
