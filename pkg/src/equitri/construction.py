"""Numerical replay of the four-step ruler-and-compass construction.

Given ``a < b < c`` with ``b - a <= c - b``:

1. ``D`` on the line with ``(DA) = (BC)``; points ``L1, L2, L3`` at heights
   1, 2, 3 above ``C``; parallels to ``L3 D`` through ``L2`` and ``L1`` cut the
   line at ``F1`` and ``O``, trisecting ``DC`` so that ``O`` is the mean.
2. ``M`` midpoint of ``AB``; the ray from ``A`` at 30 degrees meets the
   vertical through ``M`` at ``D2``; ``O'`` reflects ``O`` through ``D2``;
   ``E`` is the foot of ``O'``.
3. The perpendicular bisector of ``OO'`` meets the vertical through ``B``
   at ``G`` and the line at ``I``; ``H`` is level with ``D2`` above ``B``.
4. The bisector meets the vertical through ``A`` at ``F``; line ``O'O``
   meets the vertical through ``C`` at ``K``. ``FGK`` is the triangle.

Other configurations are mirrored (``x -> -x``) before tracing and mapped
back afterwards, swapping the names ``F`` and ``K`` so that ``F`` stays over
the smallest point.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, fields
from typing import Iterable

from .errors import GeometryError
from .line_measures import CollinearTriple, as_triple
from .triangle import PlanePoint

LADDER_STEP = 1.0
DEFAULT_TOL = 1e-9


def _sub(u, v):
    return PlanePoint(u[0] - v[0], u[1] - v[1])


def _add(u, v):
    return PlanePoint(u[0] + v[0], u[1] + v[1])


def _scale(u, s):
    return PlanePoint(u[0] * s, u[1] * s)


def distance(u, v) -> float:
    return math.hypot(u[0] - v[0], u[1] - v[1])


def intersect(p1, p2, p3, p4) -> PlanePoint:
    """Intersection of line ``p1 p2`` with line ``p3 p4``."""
    d1 = _sub(p2, p1)
    d2 = _sub(p4, p3)
    cross = d1[0] * d2[1] - d1[1] * d2[0]
    scale = math.hypot(*d1) * math.hypot(*d2)
    if scale == 0 or abs(cross) <= 1e-15 * scale:
        raise GeometryError(f"lines {p1}-{p2} and {p3}-{p4} are parallel")
    w = _sub(p3, p1)
    t = (w[0] * d2[1] - w[1] * d2[0]) / cross
    return _add(p1, _scale(d1, t))


def _vertical(x):
    return PlanePoint(x, 0.0), PlanePoint(x, 1.0)


def _meet_vertical(p1, p2, x: float) -> PlanePoint:
    """Intersection of line ``p1 p2`` with the vertical at ``x``, kept exactly on it."""
    return PlanePoint(x, intersect(p1, p2, *_vertical(x)).y)


_MIRROR_SWAP = {"A": "C", "C": "A", "F": "K", "K": "F"}
_AXIS = (PlanePoint(0.0, 0.0), PlanePoint(1.0, 0.0))


@dataclass(frozen=True)
class ConstructionTrace:
    """Every named point of the construction, in input coordinates."""

    points: CollinearTriple  # sorted input
    A: PlanePoint
    B: PlanePoint
    C: PlanePoint
    Dtr: PlanePoint
    L1: PlanePoint
    L2: PlanePoint
    L3: PlanePoint
    Fthales: PlanePoint
    O: PlanePoint
    M: PlanePoint
    Dray: PlanePoint
    Oprime: PlanePoint
    E: PlanePoint
    G: PlanePoint
    H: PlanePoint
    I: PlanePoint
    F: PlanePoint
    K: PlanePoint
    reflected: bool = False

    @property
    def vertices(self) -> tuple[PlanePoint, PlanePoint, PlanePoint]:
        return (self.F, self.G, self.K)

    @property
    def scale(self) -> float:
        return self.points.scale

    def role(self, name: str) -> PlanePoint:
        """Point playing construction role ``name`` (undoes the mirror relabeling)."""
        if self.reflected:
            name = _MIRROR_SWAP.get(name, name)
        return getattr(self, name)

    def named_points(self) -> dict[str, PlanePoint]:
        return {
            f.name: getattr(self, f.name)
            for f in fields(self)
            if f.name not in ("points", "reflected")
        }


def _normalize(points: Iterable[float]) -> tuple[CollinearTriple, bool]:
    a, b, c = sorted(as_triple(points))
    if b - a <= c - b:
        return CollinearTriple(a, b, c), False
    return CollinearTriple(-c, -b, -a), True


def step1_circumcenter(points: Iterable[float]) -> tuple[PlanePoint, dict[str, PlanePoint]]:
    """Locate the circumcenter by Thales trisection of ``DC``.

    Works on sorted input; the trisection does not need the step-2 ordering.
    """
    a, b, c = sorted(as_triple(points))
    d = PlanePoint(a - (c - b), 0.0)
    C = PlanePoint(c, 0.0)
    ladder = [PlanePoint(c, k * LADDER_STEP) for k in (1, 2, 3)]
    direction = _sub(d, ladder[2])
    f_thales = intersect(ladder[1], _add(ladder[1], direction), *_AXIS)
    o = intersect(ladder[0], _add(ladder[0], direction), *_AXIS)
    o = PlanePoint(o.x, 0.0)
    return o, {
        "C": C,
        "Dtr": d,
        "L1": ladder[0],
        "L2": ladder[1],
        "L3": ladder[2],
        "Fthales": PlanePoint(f_thales.x, 0.0),
    }


def _trace_normalized(t: CollinearTriple) -> dict[str, PlanePoint]:
    a, b, c = t
    O, step1 = step1_circumcenter(t)
    A = PlanePoint(a, 0.0)
    B = PlanePoint(b, 0.0)

    # step 2
    M = PlanePoint(0.5 * (a + b), 0.0)
    ray_end = PlanePoint(a + math.cos(math.pi / 6), math.sin(math.pi / 6))
    Dray = _meet_vertical(A, ray_end, M.x)
    Oprime = _sub(_scale(Dray, 2.0), O)
    E = PlanePoint(Oprime.x, 0.0)

    # step 3: the bisector of O O' passes through Dray
    along = _sub(Oprime, O)
    bisector = (Dray, _add(Dray, PlanePoint(-along.y, along.x)))
    G = _meet_vertical(*bisector, b)
    I = intersect(*bisector, *_AXIS)
    H = _meet_vertical(Dray, _add(Dray, PlanePoint(1.0, 0.0)), b)

    # step 4
    F = _meet_vertical(*bisector, a)
    K = _meet_vertical(Oprime, O, c)

    return dict(
        step1,
        A=A, B=B, O=O, M=M, Dray=Dray, Oprime=Oprime, E=E,
        G=G, H=H, I=PlanePoint(I.x, 0.0), F=F, K=K,
    )


def build_trace(points: Iterable[float]) -> ConstructionTrace:
    """Replay the construction for any three distinct points."""
    t, reflected = _normalize(points)
    named = _trace_normalized(t)
    if reflected:
        named = {
            _MIRROR_SWAP.get(k, k): PlanePoint(0.0 - v.x, v.y) for k, v in named.items()
        }
        t = CollinearTriple(-t.c, -t.b, -t.a)
    return ConstructionTrace(points=t, reflected=reflected, **named)


@dataclass(frozen=True)
class ResidualReport:
    eq2_06: float  # |EO - OC|
    eq3_02: float  # |OG - OO'|
    eq4_01: float  # |OK - OO'|
    eq4_03: float  # |OF - OG|
    side_spread: float
    radius_spread: float
    projection_error: float
    foot_error: float  # E must be the foot of O' on the line
    tolerance: float

    @property
    def residuals(self) -> dict[str, float]:
        return {
            f.name: getattr(self, f.name) for f in fields(self) if f.name != "tolerance"
        }

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values())

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance


def _spread(values) -> float:
    return max(values) - min(values)


def verify_trace(trace: ConstructionTrace, tol: float = DEFAULT_TOL) -> ResidualReport:
    """Check the construction identities; ``tol`` is relative to the coordinate scale."""
    O, Op = trace.O, trace.Oprime
    F, G, K = (trace.role(name) for name in "FGK")
    oo = distance(O, Op)
    return ResidualReport(
        eq2_06=abs(distance(trace.E, O) - distance(O, trace.role("C"))),
        eq3_02=abs(distance(O, G) - oo),
        eq4_01=abs(distance(O, K) - oo),
        eq4_03=abs(distance(O, F) - distance(O, G)),
        side_spread=_spread([distance(F, G), distance(G, K), distance(K, F)]),
        radius_spread=_spread([distance(O, v) for v in (F, G, K)]),
        projection_error=max(abs(v.x - p) for v, p in zip(trace.vertices, trace.points)),
        foot_error=distance(trace.E, (Op.x, 0.0)),
        tolerance=tol * trace.scale,
    )


def _angle(vertex, u, v) -> float:
    a = _sub(u, vertex)
    b = _sub(v, vertex)
    return math.atan2(abs(a[0] * b[1] - a[1] * b[0]), a[0] * b[0] + a[1] * b[1])


def trace_angles(trace: ConstructionTrace) -> dict[str, float]:
    """Interior angles of FGK and the angles DFO, DGO (expected pi/3 and pi/6)."""
    F, G, K = (trace.role(name) for name in "FGK")
    return {
        "F": _angle(F, G, K),
        "G": _angle(G, K, F),
        "K": _angle(K, F, G),
        "DFO": _angle(F, trace.Dray, trace.O),
        "DGO": _angle(G, trace.Dray, trace.O),
    }
