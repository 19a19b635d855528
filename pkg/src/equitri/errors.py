"""Exception and warning types shared across the package.

Every error carries a short machine-readable ``code`` that the CLI reports.
"""


class EquitriError(Exception):
    code = "error"


class DegenerateInput(EquitriError, ValueError):
    """Points that must be distinct coincide, or a value is not finite."""

    code = "degenerate_input"


class NotACubic(EquitriError, ValueError):
    code = "not_a_cubic"


class DiscriminantPositive(EquitriError, ValueError):
    """The cubic has a single real root; the trigonometric formula does not apply."""

    code = "discriminant_positive"


class EmptyScene(EquitriError, ValueError):
    code = "empty_scene"


class GeometryError(EquitriError, RuntimeError):
    """An internal construction invariant failed (e.g. intersecting parallel lines)."""

    code = "geometry_error"


class ConditioningWarning(RuntimeWarning):
    """Input is valid but close to a degenerate configuration."""
