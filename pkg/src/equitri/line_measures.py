"""Signed measures on an oriented line.

The oriented line is identified with the real axis, positive direction
to the right, so a point on it is just a float.
"""
from __future__ import annotations

import math
from typing import Iterable, NamedTuple

from .errors import DegenerateInput


class CollinearTriple(NamedTuple):
    """Three coordinates on the line. Use :func:`as_triple` to get a validated one."""

    a: float
    b: float
    c: float

    @property
    def scale(self) -> float:
        return max(1.0, abs(self.a), abs(self.b), abs(self.c))

    def sorted(self) -> "CollinearTriple":
        return CollinearTriple(*sorted(self))

    def min_gap(self) -> float:
        a, b, c = sorted(self)
        return min(b - a, c - b)


def as_triple(points: Iterable[float]) -> CollinearTriple:
    """Validate three finite, pairwise distinct coordinates.

    Distinctness is exact; there is no minimum gap.
    """
    values = tuple(float(v) for v in points)
    if len(values) != 3:
        raise DegenerateInput(f"expected three points, got {len(values)}")
    if not all(math.isfinite(v) for v in values):
        raise DegenerateInput(f"points must be finite, got {values}")
    a, b, c = values
    if a == b or b == c or a == c:
        raise DegenerateInput(f"points must be pairwise distinct, got {values}")
    return CollinearTriple(a, b, c)


def signed_measure(p: float, q: float) -> float:
    """Signed length of the oriented segment from ``p`` to ``q``."""
    return q - p


def circumcenter_abscissa(points: Iterable[float]) -> float:
    """Point ``o`` on the line with ``(oa) + (ob) + (oc) = 0``, i.e. the mean."""
    a, b, c = as_triple(points)
    return math.fsum((a, b, c)) / 3.0
