"""Equilateral triangles projecting onto three collinear points, and the
trigonometric solution of cubics with three real roots."""

from .construction import ConstructionTrace, ResidualReport, build_trace, step1_circumcenter, verify_trace
from .cubic import (
    Classification,
    CubicCoefficients,
    RootSet,
    depress,
    discriminant,
    reference_roots,
    solve_cubic,
    solve_depressed,
    trig_roots,
)
from .errors import (
    ConditioningWarning,
    DegenerateInput,
    DiscriminantPositive,
    EmptyScene,
    GeometryError,
    NotACubic,
)
from .line_measures import CollinearTriple, as_triple, circumcenter_abscissa, signed_measure
from .triangle import (
    DepressedCubic,
    PlanePoint,
    TrianglePose,
    centered_invariants,
    pose_from_triple,
    project_vertices,
    triangle_vertices,
)

__version__ = "0.1.0"
