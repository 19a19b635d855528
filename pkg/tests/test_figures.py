import math
import xml.etree.ElementTree as ET

import pytest
from hypothesis import given
from hypothesis import strategies as st

from equitri import DiscriminantPositive, EmptyScene, build_trace, pose_from_triple, triangle_vertices
from equitri.figures import (
    AngleArc,
    Circle,
    Line,
    Point,
    Polygon,
    Scene,
    Segment,
    ViewTransform,
    fmt,
    render_svg,
    scene_root_circle,
    scene_statement,
    scene_trace,
)

SVG = "{http://www.w3.org/2000/svg}"

# kind -> count, plus the set of point labels
INVENTORY = {
    "statement": ({Line: 1, Point: 4, Polygon: 1, Circle: 1, Segment: 3, AngleArc: 0},
                  {"A", "B", "C", "O"}),
    1: ({Line: 2, Point: 9, Polygon: 0, Circle: 0, Segment: 3, AngleArc: 0},
        {"A", "B", "C", "D", "R", "S", "T", "F", "O"}),
    2: ({Line: 5, Point: 8, Polygon: 0, Circle: 0, Segment: 3, AngleArc: 1},
        {"A", "M", "B", "C", "O", "D", "O'", "E"}),
    3: ({Line: 3, Point: 8, Polygon: 0, Circle: 0, Segment: 2, AngleArc: 0},
        {"M", "B", "O", "D", "O'", "G", "H", "I"}),
    4: ({Line: 6, Point: 7, Polygon: 1, Circle: 0, Segment: 0, AngleArc: 0},
        {"O", "O'", "E", "D", "F", "G", "K"}),
    "circle": ({Line: 1, Point: 3, Polygon: 0, Circle: 1, Segment: 6, AngleArc: 0},
               {"x1", "x2", "x3"}),
}


def all_scenes(points=(0, 1, 5), dc=(-7, 6)):
    trace = build_trace(points)
    scenes = {"statement": scene_statement(points, pose_from_triple(points))}
    scenes.update({k: scene_trace(trace, k) for k in (1, 2, 3, 4)})
    scenes["circle"] = scene_root_circle(dc)
    return scenes


@pytest.mark.parametrize("points", [(0, 1, 5), (-1, 0, 1), (0, 4, 5)])
def test_inventory(points):
    for key, scene in all_scenes(points).items():
        counts, labels = INVENTORY[key]
        for kind, n in counts.items():
            assert scene.count(kind) == n, (key, kind)
        assert len(scene.elements) == sum(counts.values()), key
        assert scene.labels() == labels, key


def test_statement_details():
    scene = scene_statement((-1, 0, 1), pose_from_triple((-1, 0, 1)))
    assert scene.count(Segment, dashed=True) == 3
    assert scene.count(Point) == 4


def test_statement_orientation():
    pose = pose_from_triple((0, 1, 5), -1)
    scene = scene_statement((0, 1, 5), pose)
    (poly,) = [el for el in scene.elements if isinstance(el, Polygon)]
    assert poly.vertices == triangle_vertices(pose)
    assert [v.y > 0 for v in poly.vertices] == [False, True, False]


def test_statement_mirror():
    up = scene_statement((0, 1, 5), pose_from_triple((0, 1, 5), 1))
    down = scene_statement((0, 1, 5), pose_from_triple((0, 1, 5), -1))
    (pu,) = [el for el in up.elements if isinstance(el, Polygon)]
    (pd,) = [el for el in down.elements if isinstance(el, Polygon)]
    assert [(v.x, -v.y) for v in pu.vertices] == [tuple(v) for v in pd.vertices]


def test_step1_ladder_and_transversals():
    scene = scene_trace(build_trace((0, 1, 5)), 1)
    assert {"R", "S", "T"} <= scene.labels()
    segs = [el for el in scene.elements if isinstance(el, Segment) and el.label in ("j", "k")]
    for s in segs:
        slope = (s.end.y - s.start.y) / (s.end.x - s.start.x)
        assert slope == pytest.approx(3 / 9)


def test_step2_arc():
    (arc,) = [el for el in scene_trace(build_trace((-1, 0, 1)), 2).elements if isinstance(el, AngleArc)]
    assert arc.label == "pi/6"
    assert (arc.center.x, arc.center.y) == (-1.0, 0.0)
    assert arc.end - arc.start == pytest.approx(math.pi / 6)


def test_step4_contents():
    scene = scene_trace(build_trace((0, 1, 5)), 4)
    assert any(isinstance(el, Line) and el.label == "p" for el in scene.elements)
    assert scene.count(Polygon) == 1


def test_bad_step():
    with pytest.raises(ValueError):
        scene_trace(build_trace((0, 1, 5)), 5)


def test_root_circle():
    scene = scene_root_circle((-1, 0))
    (circle,) = [el for el in scene.elements if isinstance(el, Circle)]
    assert circle.radius == pytest.approx(2 / math.sqrt(3))
    drops = sorted(el.end.x for el in scene.elements if isinstance(el, Segment) and el.dashed)
    assert drops == pytest.approx([-1, 0, 1], abs=1e-12)


def test_root_circle_double_root():
    scene = scene_root_circle((-3, 2))
    drops = sorted(el.end.x for el in scene.elements if isinstance(el, Segment) and el.dashed)
    assert drops == pytest.approx([-2, 1, 1], abs=1e-12)


def test_root_circle_factorization():
    scene = scene_root_circle((-7, 6))
    xs = sorted(el.x for el in scene.elements if isinstance(el, Point))
    assert xs == pytest.approx([-3, 1, 2], abs=1e-12)


def test_root_circle_single_root():
    with pytest.raises(DiscriminantPositive):
        scene_root_circle((1, 1))


def test_empty_scene():
    with pytest.raises(EmptyScene):
        render_svg(Scene())
    with pytest.raises(EmptyScene):
        render_svg(Scene([Point(1.0, 1.0, "A")]))


@pytest.mark.parametrize("key", list(INVENTORY))
def test_svg_well_formed_and_deterministic(key):
    scene = all_scenes()[key]
    text = render_svg(scene, 640)
    assert text == render_svg(all_scenes()[key], 640)
    root = ET.fromstring(text.split("\n", 1)[1])
    assert root.tag == SVG + "svg"
    assert root.get("version") == "1.1"
    assert len(root.findall(SVG + "polygon")) == INVENTORY[key][0][Polygon]


def test_statement_svg_has_one_polygon():
    root = ET.fromstring(render_svg(all_scenes()["statement"]).split("\n", 1)[1])
    assert len(root.findall(SVG + "polygon")) == 1


def test_viewbox_is_expanded_bounds():
    scene = all_scenes()["statement"]
    x0, y0, x1, y1 = scene.bounds
    root = ET.fromstring(render_svg(scene).split("\n", 1)[1])
    vx, vy, vw, vh = map(float, root.get("viewBox").split())
    w, h = x1 - x0, y1 - y0
    assert (vx, -vy - vh, vw, vh) == pytest.approx((x0 - 0.1 * w, y0 - 0.1 * h, 1.2 * w, 1.2 * h), rel=1e-5)


def test_y_axis_points_up():
    scene = Scene([Point(0.0, 0.0, "a"), Point(1.0, 2.0, "b")])
    view = ViewTransform.for_scene(scene, 100)
    assert view.to_pixel(1.0, 2.0)[1] < view.to_pixel(0.0, 0.0)[1]
    root = ET.fromstring(render_svg(scene, 100).split("\n", 1)[1])
    ys = [float(c.get("cy")) for c in root.findall(SVG + "circle")]
    assert ys == [0.0, -2.0]


finite = st.floats(min_value=-1e4, max_value=1e4, allow_nan=False)


@given(finite, finite)
def test_transform_round_trip(x, y):
    scene = all_scenes()["statement"]
    view = ViewTransform.for_scene(scene, 800)
    u, v = view.to_pixel(x, y)
    assert view.from_pixel(u, v) == pytest.approx((x, y), abs=1e-6)


@pytest.mark.parametrize(
    "value, text",
    [(1.0, "1"), (-0.0, "0"), (1234567.0, "1.23457e+06"), (1234565.0, "1.23456e+06"), (1234575.0, "1.23458e+06"), (2.5e-7, "2.5e-07")],
)
def test_fmt(value, text):
    assert fmt(value) == text
