"""Command-line front end.

    equitri solve --coeffs 1,-6,11,-6 --json
    equitri solve --depressed=-7,6
    equitri reconstruct --points 0,1,5 --orientation -
    equitri trace --points 0,1,5 --json
    equitri render --step 2 --points 0,1,5 --out step2.svg

Lists are comma-separated with no spaces; a list starting with ``-`` must be
attached with ``=`` (``--points=-1,0,1``). Exit status is 0 on success, 1 on
a computational error and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import math
import re
import sys
import warnings
from typing import Sequence

from . import construction, cubic, figures, triangle
from .errors import EquitriError

EXIT_OK, EXIT_COMPUTE, EXIT_USAGE = 0, 1, 2
_NUMBER = re.compile(r"[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?")


def _number_list(count: int):
    def parse(text: str) -> list[float]:
        parts = text.split(",")
        if len(parts) != count:
            raise argparse.ArgumentTypeError(f"expected {count} comma-separated numbers, got {text!r}")
        if not all(_NUMBER.fullmatch(p) for p in parts):
            raise argparse.ArgumentTypeError(f"malformed number in {text!r}")
        values = [float(p) for p in parts]
        if not all(math.isfinite(v) for v in values):
            raise argparse.ArgumentTypeError(f"numbers must be finite: {text!r}")
        return values

    parse.__name__ = f"{count} numbers"
    return parse


def _orientation(text: str) -> int:
    try:
        return triangle.parse_orientation(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(json.dumps({"code": "usage_error", "message": message}), file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="equitri", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    solve = sub.add_parser("solve", help="real roots of a cubic")
    group = solve.add_mutually_exclusive_group(required=True)
    group.add_argument("--coeffs", type=_number_list(4), metavar="a,b,c,d")
    group.add_argument("--depressed", type=_number_list(2), metavar="p,q")
    solve.add_argument("--polish", action="store_true", help="one Newton step per root")
    solve.add_argument("--json", action="store_true")

    rec = sub.add_parser("reconstruct", help="equilateral triangle projecting onto three points")
    rec.add_argument("--points", type=_number_list(3), required=True, metavar="x1,x2,x3")
    rec.add_argument("--orientation", type=_orientation, default=1, metavar="+|-")
    rec.add_argument("--json", action="store_true")

    tr = sub.add_parser("trace", help="replay and verify the construction")
    tr.add_argument("--points", type=_number_list(3), required=True, metavar="x1,x2,x3")
    tr.add_argument("--tol", type=float, default=construction.DEFAULT_TOL)
    tr.add_argument("--json", action="store_true")

    ren = sub.add_parser("render", help="write an SVG figure")
    which = ren.add_mutually_exclusive_group(required=True)
    which.add_argument("--statement", action="store_true")
    which.add_argument("--step", type=int, choices=(1, 2, 3, 4))
    which.add_argument("--circle", action="store_true")
    ren.add_argument("--points", type=_number_list(3), metavar="x1,x2,x3")
    ren.add_argument("--depressed", type=_number_list(2), metavar="p,q")
    ren.add_argument("--orientation", type=_orientation, default=1, metavar="+|-")
    ren.add_argument("--width", type=int, default=800)
    ren.add_argument("--out", metavar="FILE", help="write here instead of standard output")
    ren.add_argument("--json", action="store_true", help="print a JSON summary (needs --out)")
    return parser


def dumps(obj) -> str:
    """JSON with every float written to 17 significant digits."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return "null"
        return format(obj, ".17g")
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _xy(p) -> list[float]:
    return [float(p[0]), float(p[1])]


def _rootset(rs: cubic.RootSet) -> dict:
    return {
        "classification": rs.classification.value,
        "roots": list(rs.roots),
        "delta": rs.delta,
    }


def _solve(args) -> tuple[dict, dict, dict]:
    if args.coeffs is not None:
        cc = cubic.CubicCoefficients(*args.coeffs)
        rs = cubic.solve_cubic(cc, polish=args.polish)
        inputs = {"coeffs": list(cc), "polish": args.polish}
        f = cc
    else:
        dc = triangle.DepressedCubic(*args.depressed)
        rs = cubic.solve_depressed(dc, polish=args.polish)
        inputs = {"depressed": list(dc), "polish": args.polish}
        f = dc
    residuals = {"abs_value_at_roots": [abs(f(y)) for y in rs.roots]}
    return inputs, _rootset(rs), residuals


def _reconstruct(args) -> tuple[dict, dict, dict]:
    t = triangle.as_triple(args.points)
    pose = triangle.pose_from_triple(t, args.orientation)
    vertices = triangle.triangle_vertices(pose)
    projected = triangle.project_vertices(pose)
    result = {
        "pose": {
            "o": pose.o,
            "R": pose.radius,
            "theta": pose.theta,
            "orientation": pose.orientation,
        },
        "vertices": [_xy(v) for v in vertices],
        "projections": list(projected),
    }
    err = max(abs(x - y) for x, y in zip(projected, sorted(t)))
    return {"points": list(t), "orientation": pose.orientation}, result, {"projection_error": err}


def _trace(args) -> tuple[dict, dict, dict]:
    trace = construction.build_trace(args.points)
    report = construction.verify_trace(trace, args.tol)
    result = {
        "points": {name: _xy(p) for name, p in trace.named_points().items()},
        "reflected": trace.reflected,
        "pass": report.passed,
        "max_residual": report.max_residual,
        "tolerance": report.tolerance,
    }
    return {"points": list(trace.points), "tol": args.tol}, result, report.residuals


def _render(args, parser) -> tuple[dict, str]:
    if args.circle:
        if args.depressed is None:
            parser.error("render --circle needs --depressed p,q")
        scene = figures.scene_root_circle(args.depressed)
        inputs = {"depressed": list(args.depressed)}
    else:
        if args.points is None:
            parser.error("render --statement/--step needs --points x1,x2,x3")
        inputs = {"points": list(args.points)}
        if args.statement:
            pose = triangle.pose_from_triple(args.points, args.orientation)
            scene = figures.scene_statement(args.points, pose)
            inputs["orientation"] = args.orientation
        else:
            scene = figures.scene_trace(construction.build_trace(args.points), args.step)
            inputs["step"] = args.step
    return inputs, figures.render_svg(scene, args.width)


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK

    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        try:
            if args.command == "render":
                inputs, svg = _render(args, parser)
                result, residuals = None, {}
            else:
                handler = {"solve": _solve, "reconstruct": _reconstruct, "trace": _trace}
                inputs, result, residuals = handler[args.command](args)
        except EquitriError as exc:
            print(dumps({"code": exc.code, "message": str(exc)}), file=sys.stderr)
            return EXIT_COMPUTE
        except SystemExit as exc:
            return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    messages = [str(w.message) for w in caught]
    for msg in messages:
        print(f"warning: {msg}", file=sys.stderr)

    if args.command == "render":
        if args.out is None:
            sys.stdout.write(svg)
            return EXIT_OK
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(svg)
        result = {"out": args.out, "bytes": len(svg.encode("utf-8"))}

    if getattr(args, "json", False) or args.command == "render":
        envelope = {
            "command": args.command,
            "inputs": inputs,
            "result": result,
            "residuals": residuals,
            "warnings": messages,
        }
        print(dumps(envelope))
    else:
        print(_text(args.command, result, residuals))
    return EXIT_OK


def _text(command: str, result: dict, residuals: dict) -> str:
    if command == "solve":
        roots = ", ".join(repr(r) for r in result["roots"])
        return f"{result['classification']}: {roots}"
    if command == "reconstruct":
        pose = result["pose"]
        lines = [f"o={pose['o']!r} R={pose['R']!r} theta={pose['theta']!r} orientation={pose['orientation']:+d}"]
        lines += [f"vertex {x!r} {y!r}" for x, y in result["vertices"]]
        return "\n".join(lines)
    lines = [f"{name} {x!r} {y!r}" for name, (x, y) in result["points"].items()]
    lines += [f"residual {name} {value:.3e}" for name, value in residuals.items()]
    lines.append("PASS" if result["pass"] else "FAIL")
    return "\n".join(lines)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
