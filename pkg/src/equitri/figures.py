"""SVG figures of the statement, the construction steps and the root circle.

Scenes are lists of primitives in world coordinates. :func:`render_svg`
writes them as SVG 1.1 with the y axis pointing up.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Union
from xml.sax.saxutils import escape

from .construction import ConstructionTrace
from .cubic import trig_roots
from .errors import ConditioningWarning, EmptyScene
from .line_measures import as_triple
from .triangle import DepressedCubic, PlanePoint, TrianglePose, pose_from_cubic, triangle_vertices

MARGIN = 0.10
# sizes as fractions of the view width
POINT_RADIUS = 0.006
FONT_SIZE = 0.03
LABEL_OFFSET = 0.01
# stroke sizes in output pixels
STROKE_PX = 1.5
THIN_STROKE_PX = 0.8
DASH_PX = (6.0, 4.0)


@dataclass(frozen=True)
class Point:
    x: float
    y: float
    label: str


@dataclass(frozen=True)
class Segment:
    start: PlanePoint
    end: PlanePoint
    dashed: bool = False
    label: str = ""


@dataclass(frozen=True)
class Line:
    """Infinite line through two points, clipped to the view at render time."""

    through: PlanePoint
    toward: PlanePoint
    label: str = ""


@dataclass(frozen=True)
class Circle:
    center: PlanePoint
    radius: float


@dataclass(frozen=True)
class Polygon:
    vertices: tuple[PlanePoint, ...]


@dataclass(frozen=True)
class AngleArc:
    center: PlanePoint
    radius: float
    start: float
    end: float
    label: str = ""


@dataclass(frozen=True)
class Text:
    x: float
    y: float
    text: str


Element = Union[Point, Segment, Line, Circle, Polygon, AngleArc, Text]


def _extent(el) -> list[tuple[float, float]]:
    if isinstance(el, (Point, Text)):
        return [(el.x, el.y)]
    if isinstance(el, Segment):
        return [tuple(el.start), tuple(el.end)]
    if isinstance(el, Polygon):
        return [tuple(v) for v in el.vertices]
    if isinstance(el, (Circle, AngleArc)):
        cx, cy = el.center
        return [(cx - el.radius, cy - el.radius), (cx + el.radius, cy + el.radius)]
    return []  # lines take the extent of everything else


@dataclass
class Scene:
    elements: list = field(default_factory=list)
    title: str = ""

    def add(self, *elements: Element) -> "Scene":
        self.elements.extend(elements)
        return self

    @property
    def bounds(self) -> tuple[float, float, float, float] | None:
        pts = [xy for el in self.elements for xy in _extent(el)]
        if not pts:
            return None
        xs, ys = zip(*pts)
        return min(xs), min(ys), max(xs), max(ys)

    def count(self, kind: type, **attrs) -> int:
        return sum(
            isinstance(el, kind) and all(getattr(el, k) == v for k, v in attrs.items())
            for el in self.elements
        )

    def labels(self) -> set[str]:
        return {el.label for el in self.elements if isinstance(el, Point)}


def _pt(p: PlanePoint, label: str) -> Point:
    return Point(p[0], p[1], label)


def _axis() -> Line:
    return Line(PlanePoint(0.0, 0.0), PlanePoint(1.0, 0.0), "r")


def _vertical(x: float, label: str) -> Line:
    return Line(PlanePoint(x, 0.0), PlanePoint(x, 1.0), label)


def scene_statement(points: Iterable[float], pose: TrianglePose) -> Scene:
    """Line, the three points, the circumcenter, the triangle and its projections."""
    a, b, c = sorted(as_triple(points))
    verts = triangle_vertices(pose)
    scene = Scene(title="statement")
    scene.add(_axis())
    for x, name in zip((a, b, c, pose.o), "ABCO"):
        scene.add(Point(x, 0.0, name))
    scene.add(Polygon(verts), Circle(PlanePoint(pose.o, 0.0), pose.radius))
    for v in verts:
        scene.add(Segment(v, PlanePoint(v.x, 0.0), dashed=True))
    return scene


def _beyond(start: PlanePoint, through: PlanePoint, factor: float) -> PlanePoint:
    return PlanePoint(start.x + factor * (through.x - start.x), start.y + factor * (through.y - start.y))


def scene_trace(trace: ConstructionTrace, step: int) -> Scene:
    """Figure for construction step 1-4. Labels follow the usual letters."""
    if step not in (1, 2, 3, 4):
        raise ValueError(f"step must be 1, 2, 3 or 4, got {step!r}")
    t = trace.role
    scene = Scene(title=f"step {step}")
    scene.add(_axis())

    if step == 1:
        scene.add(_vertical(t("C").x, "h"))
        scene.add(Segment(t("L3"), t("Dtr"), label="i"))
        scene.add(Segment(t("L2"), t("Fthales"), label="j"))
        scene.add(Segment(t("L1"), t("O"), label="k"))
        for name, label in [("A", "A"), ("B", "B"), ("C", "C"), ("Dtr", "D"),
                            ("L1", "R"), ("L2", "S"), ("L3", "T"),
                            ("Fthales", "F"), ("O", "O")]:
            scene.add(_pt(t(name), label))

    elif step == 2:
        for name, label in zip("AMBC", "ambc"):
            scene.add(_vertical(t(name).x, label))
        scene.add(Segment(t("A"), _beyond(t("A"), t("Dray"), 1.5), label="s"))
        scene.add(Segment(t("O"), t("Oprime")))
        scene.add(Segment(t("Oprime"), t("E"), dashed=True))
        radius = 0.4 * abs(t("M").x - t("A").x)
        start, end = (0.0, math.pi / 6) if t("M").x > t("A").x else (5 * math.pi / 6, math.pi)
        scene.add(AngleArc(t("A"), radius, start, end, "pi/6"))
        for name, label in [("A", "A"), ("M", "M"), ("B", "B"), ("C", "C"), ("O", "O"),
                            ("Dray", "D"), ("Oprime", "O'"), ("E", "E")]:
            scene.add(_pt(t(name), label))

    elif step == 3:
        scene.add(_vertical(t("B").x, "b"))
        scene.add(Line(t("Dray"), t("G"), "p"))
        scene.add(Segment(t("O"), t("Oprime")))
        scene.add(Segment(t("Dray"), t("H"), dashed=True))
        for name, label in [("M", "M"), ("B", "B"), ("O", "O"), ("Dray", "D"),
                            ("Oprime", "O'"), ("G", "G"), ("H", "H"), ("I", "I")]:
            scene.add(_pt(t(name), label))

    else:
        for name, label in zip("ABC", "abc"):
            scene.add(_vertical(t(name).x, label))
        scene.add(Line(t("Dray"), t("G"), "p"))
        scene.add(Line(t("Oprime"), t("O")))
        scene.add(Polygon((t("F"), t("G"), t("K"))))
        for name, label in [("O", "O"), ("Oprime", "O'"), ("E", "E"), ("Dray", "D"),
                            ("F", "F"), ("G", "G"), ("K", "K")]:
            scene.add(_pt(t(name), label))
    return scene


def scene_root_circle(dc) -> Scene:
    """Circle of radius ``2 sqrt(-p/3)`` whose radii project onto the real roots."""
    dc = DepressedCubic(*dc)
    roots = trig_roots(dc)  # raises DiscriminantPositive
    scene = Scene(title="roots")
    scene.add(_axis())
    if dc.p == 0:
        pose = TrianglePose(0.0, 0.0, 0.0)
    else:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ConditioningWarning)
            pose = pose_from_cubic(dc)
    origin = PlanePoint(0.0, 0.0)
    verts = triangle_vertices(pose)
    scene.add(Circle(origin, pose.radius))
    for v in verts:
        scene.add(Segment(origin, v))
    for v in verts:
        scene.add(Segment(v, PlanePoint(v.x, 0.0), dashed=True))
    for k, x in enumerate(roots.roots, start=1):
        scene.add(Point(x, 0.0, f"x{k}"))
    return scene


def fmt(value: float) -> str:
    """Six significant digits; ``-0`` prints as ``0``."""
    s = format(value, ".6g")
    return "0" if s == "-0" else s


@dataclass(frozen=True)
class ViewTransform:
    """Affine map from world coordinates to pixels (y flipped)."""

    xmin: float
    ymin: float
    xmax: float
    ymax: float
    width_px: int

    @classmethod
    def for_scene(cls, scene: Scene, width_px: int) -> "ViewTransform":
        bounds = scene.bounds
        if bounds is None:
            raise EmptyScene("scene has no elements with extent")
        x0, y0, x1, y1 = bounds
        w, h = x1 - x0, y1 - y0
        if not (w > 0 and h > 0):
            raise EmptyScene(f"scene bounds have zero area: {bounds}")
        mx, my = MARGIN * w, MARGIN * h
        return cls(x0 - mx, y0 - my, x1 + mx, y1 + my, int(width_px))

    @property
    def width(self) -> float:
        return self.xmax - self.xmin

    @property
    def height(self) -> float:
        return self.ymax - self.ymin

    @property
    def pixels_per_unit(self) -> float:
        return self.width_px / self.width

    @property
    def height_px(self) -> float:
        return self.height * self.pixels_per_unit

    def to_pixel(self, x: float, y: float) -> tuple[float, float]:
        s = self.pixels_per_unit
        return (x - self.xmin) * s, (self.ymax - y) * s

    def from_pixel(self, u: float, v: float) -> tuple[float, float]:
        s = self.pixels_per_unit
        return self.xmin + u / s, self.ymax - v / s

    def clip_line(self, line: Line) -> tuple[PlanePoint, PlanePoint] | None:
        (px, py), (qx, qy) = line.through, line.toward
        dx, dy = qx - px, qy - py
        lo, hi = -math.inf, math.inf
        for p0, d, a, b in ((px, dx, self.xmin, self.xmax), (py, dy, self.ymin, self.ymax)):
            if d == 0:
                if not a <= p0 <= b:
                    return None
                continue
            t0, t1 = sorted(((a - p0) / d, (b - p0) / d))
            lo, hi = max(lo, t0), min(hi, t1)
        if lo > hi:
            return None
        return PlanePoint(px + lo * dx, py + lo * dy), PlanePoint(px + hi * dx, py + hi * dy)


def _user(p) -> tuple[float, float]:
    # SVG user space is world space with y negated; the viewBox does the rest.
    return p[0], 0.0 - p[1]


def _xy(p) -> str:
    u, v = _user(p)
    return f"{fmt(u)},{fmt(v)}"


def _stroke(width: float, dashed: bool = False) -> str:
    attrs = f'fill="none" stroke="black" stroke-width="{fmt(width)}"'
    if dashed:
        attrs += f' stroke-dasharray="{fmt(DASH_PX[0] * width / STROKE_PX)},{fmt(DASH_PX[1] * width / STROKE_PX)}"'
    return attrs


def _label(view: ViewTransform, x: float, y: float, text: str) -> str:
    off = LABEL_OFFSET * view.width
    u, v = _user((x + off, y + off))
    return (
        f'<text x="{fmt(u)}" y="{fmt(v)}" font-size="{fmt(FONT_SIZE * view.width)}" '
        f'font-family="sans-serif">{escape(text)}</text>'
    )


def _segment_tag(p0, p1, width: float, dashed: bool = False) -> str:
    (u0, v0), (u1, v1) = _user(p0), _user(p1)
    return (
        f'<line x1="{fmt(u0)}" y1="{fmt(v0)}" x2="{fmt(u1)}" y2="{fmt(v1)}" '
        f"{_stroke(width, dashed)}/>"
    )


def _render_element(view: ViewTransform, el) -> list[str]:
    unit = 1.0 / view.pixels_per_unit  # one pixel in world units
    if isinstance(el, Point):
        u, v = _user((el.x, el.y))
        r = POINT_RADIUS * view.width
        return [
            f'<circle cx="{fmt(u)}" cy="{fmt(v)}" r="{fmt(r)}" fill="black"/>',
            _label(view, el.x, el.y, el.label),
        ]
    if isinstance(el, Text):
        return [_label(view, el.x, el.y, el.text)]
    if isinstance(el, Segment):
        width = (THIN_STROKE_PX if el.dashed else STROKE_PX) * unit
        return [_segment_tag(el.start, el.end, width, el.dashed)]
    if isinstance(el, Line):
        clipped = view.clip_line(el)
        if clipped is None:
            return []
        out = [_segment_tag(*clipped, THIN_STROKE_PX * unit)]
        if el.label:
            out.append(_label(view, *clipped[1], el.label))
        return out
    if isinstance(el, Circle):
        u, v = _user(el.center)
        return [f'<circle cx="{fmt(u)}" cy="{fmt(v)}" r="{fmt(el.radius)}" {_stroke(STROKE_PX * unit)}/>']
    if isinstance(el, Polygon):
        pts = " ".join(_xy(p) for p in el.vertices)
        return [f'<polygon points="{pts}" {_stroke(STROKE_PX * unit)}/>']
    if isinstance(el, AngleArc):
        cx, cy = el.center
        p0 = (cx + el.radius * math.cos(el.start), cy + el.radius * math.sin(el.start))
        p1 = (cx + el.radius * math.cos(el.end), cy + el.radius * math.sin(el.end))
        r = fmt(el.radius)
        # counterclockwise in world space is clockwise on screen: sweep-flag 0
        path = f'<path d="M {_xy(p0)} A {r},{r} 0 0 0 {_xy(p1)}" {_stroke(THIN_STROKE_PX * unit)}/>'
        mid = 0.5 * (el.start + el.end)
        lx, ly = cx + 1.3 * el.radius * math.cos(mid), cy + 1.3 * el.radius * math.sin(mid)
        return [path, _label(view, lx, ly, el.label)] if el.label else [path]
    raise TypeError(f"unknown scene element {el!r}")


def render_svg(scene: Scene, width_px: int = 800) -> str:
    """Render ``scene`` as a standalone SVG 1.1 document.

    The output depends only on ``scene`` and ``width_px``.
    """
    view = ViewTransform.for_scene(scene, width_px)
    box = " ".join(fmt(v) for v in (view.xmin, 0.0 - view.ymax, view.width, view.height))
    lines = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{fmt(view.width_px)}" height="{fmt(view.height_px)}" viewBox="{box}">',
    ]
    if scene.title:
        lines.append(f"<title>{escape(scene.title)}</title>")
    lines.append(f'<rect x="{fmt(view.xmin)}" y="{fmt(0.0 - view.ymax)}" width="{fmt(view.width)}" '
                 f'height="{fmt(view.height)}" fill="white"/>')
    for el in scene.elements:
        lines.extend(_render_element(view, el))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
