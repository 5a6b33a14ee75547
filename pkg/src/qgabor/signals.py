"""Analytic signals evaluated pointwise on coordinate arrays.

Each builder returns a function fn(x1, x2) -> components of shape
broadcast(x1, x2).shape + (4,), suitable for grid.sample and for the
quadrature oracle.  Real-valued profiles occupy the scalar component.
"""

from __future__ import annotations

import numpy as np


def real_field(values: np.ndarray) -> np.ndarray:
    """Embed a real array as the scalar component of a quaternion array."""
    values = np.asarray(values, dtype=np.float64)
    out = np.zeros(values.shape + (4,))
    out[..., 0] = values
    return out


def gaussian(a: float = 1.0):
    """e^{-pi a |x|^2}; self-dual under the transform when a = 1."""

    def fn(x1, x2):
        return real_field(np.exp(-np.pi * a * (x1**2 + x2**2)))

    return fn


def gaussian_dx(a: float = 1.0, axis: int = 1):
    """Exact partial derivative of gaussian(a) along the given axis."""

    def fn(x1, x2):
        g = np.exp(-np.pi * a * (x1**2 + x2**2))
        x = x1 if axis == 1 else x2
        return real_field(-2.0 * np.pi * a * x * g)

    return fn


def unit_gaussian():
    """e^{-(x1^2 + x2^2)}, the Haar-window worked case."""

    def fn(x1, x2):
        return real_field(np.exp(-(x1**2 + x2**2)))

    return fn


def exp_decay_quadrant():
    """e^{-x1-x2} on the positive quadrant, zero elsewhere (box-window case)."""

    def fn(x1, x2):
        mask = (x1 >= 0.0) & (x2 >= 0.0)
        return real_field(np.where(mask, np.exp(-np.clip(x1 + x2, 0.0, None)), 0.0))

    return fn


def constant_one():
    def fn(x1, x2):
        return real_field(np.ones(np.broadcast(x1, x2).shape))

    return fn
