"""Batch transformers with the scikit-learn estimator interface.

Both transformers are stateless: ``fit`` only validates the input width, so
they drop into a :class:`sklearn.pipeline.Pipeline` unchanged.
"""
from __future__ import annotations

import warnings

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_array, check_is_fitted, validate_data

from . import cubic, triangle
from .errors import ConditioningWarning, DiscriminantPositive




class CubicRootTransformer(TransformerMixin, BaseEstimator):
    """Map rows of cubic coefficients to their three real roots.

    Parameters
    ----------
    form : {"depressed", "general"}
        Rows are ``(p, q)`` for ``x**3 + p x + q`` or ``(a, b, c, d)``.
    polish : bool
        Apply one Newton step to every root.
    on_single_root : {"nan", "reference", "raise"}
        For a row with one real root: fill with NaN, report the real root in
        the first column (rest NaN), or raise ``DiscriminantPositive``.

    Output rows hold the roots in ascending order.
    """

    def __init__(self, form="depressed", polish=False, on_single_root="nan"):
        self.form = form
        self.polish = polish
        self.on_single_root = on_single_root

    def _width(self):
        if self.form not in ("depressed", "general"):
            raise ValueError(f"form must be 'depressed' or 'general', got {self.form!r}")
        if self.on_single_root not in ("nan", "reference", "raise"):
            raise ValueError(f"unknown on_single_root={self.on_single_root!r}")
        return 2 if self.form == "depressed" else 4

    def fit(self, X, y=None):
        width = self._width()
        X = validate_data(self, X, reset=True, dtype=np.float64)
        if X.shape[1] != width:
            raise ValueError(f"expected {width} columns for form={self.form!r}, got {X.shape[1]}")
        return self

    def _solve_row(self, row):
        if self.form == "general":
            dc, shift = cubic.depress(row)
        else:
            dc, shift = triangle.DepressedCubic(*row), 0.0
        try:
            return cubic.trig_roots(dc, polish=self.polish).shifted(shift).roots
        except DiscriminantPositive:
            if self.on_single_root == "raise":
                raise
            if self.on_single_root == "nan":
                return (np.nan,) * 3
            root = cubic.reference_roots(dc).shifted(shift).roots
            return (root[0], np.nan, np.nan)

    def transform(self, X):
        check_is_fitted(self)
        X = validate_data(self, X, reset=False, dtype=np.float64)
        return np.array([self._solve_row(row) for row in X], dtype=np.float64).reshape(-1, 3)


class TriangleReconstructor(TransformerMixin, BaseEstimator):
    """Map rows of three distinct line coordinates to equilateral-triangle poses.

    ``output="pose"`` gives columns ``(o, R, theta, orientation)``;
    ``output="vertices"`` gives ``(x1, y1, x2, y2, x3, y3)`` ordered by abscissa.
    ``inverse_transform`` takes pose rows back to sorted triples.
    """

    def __init__(self, orientation=1, output="pose"):
        self.orientation = orientation
        self.output = output

    def fit(self, X, y=None):
        if self.output not in ("pose", "vertices"):
            raise ValueError(f"output must be 'pose' or 'vertices', got {self.output!r}")
        triangle.parse_orientation(self.orientation)
        X = validate_data(self, X, reset=True, dtype=np.float64)
        if X.shape[1] != 3:
            raise ValueError(f"expected 3 columns, got {X.shape[1]}")
        return self

    def transform(self, X):
        check_is_fitted(self)
        X = validate_data(self, X, reset=False, dtype=np.float64)
        out = []
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", ConditioningWarning)
            for row in X:
                pose = triangle.pose_from_triple(row, self.orientation)
                if self.output == "pose":
                    out.append((pose.o, pose.radius, pose.theta, pose.orientation))
                else:
                    out.append(tuple(c for v in triangle.triangle_vertices(pose) for c in v))
        width = 4 if self.output == "pose" else 6
        return np.array(out, dtype=np.float64).reshape(-1, width)

    def inverse_transform(self, X):
        check_is_fitted(self)
        if self.output != "pose":
            raise ValueError("inverse_transform needs output='pose'")
        X = check_array(X, dtype=np.float64)
        if X.shape[1] != 4:
            raise ValueError(f"expected pose rows (o, R, theta, orientation), got {X.shape[1]} columns")
        return np.array(
            [
                triangle.project_vertices(triangle.TrianglePose(o, r, th, int(s)))
                for o, r, th, s in X
            ],
            dtype=np.float64,
        ).reshape(-1, 3)
