"""Quaternion scalar arithmetic.

A quaternion q = w + x*i + y*j + z*k with real components and the usual
Hamilton rules i*i = j*j = k*k = i*j*k = -1, i*j = k = -j*i, j*k = i = -k*j,
k*i = j = -i*k.  Components are plain 64-bit floats; the algebra is
non-commutative, so every product here is written in a fixed order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple


@dataclass(frozen=True, slots=True)
class Quaternion:
    """Value type for a single quaternion."""

    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w + other.w, self.x + other.x,
                          self.y + other.y, self.z + other.z)

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.w - other.w, self.x - other.x,
                          self.y - other.y, self.z - other.z)

    def __neg__(self) -> "Quaternion":
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return qmul(self, other)
        return Quaternion(self.w * other, self.x * other,
                          self.y * other, self.z * other)

    def __rmul__(self, other) -> "Quaternion":
        # other is a real scalar; reals commute with everything.
        return Quaternion(self.w * other, self.x * other,
                          self.y * other, self.z * other)

    def conj(self) -> "Quaternion":
        return qconj(self)

    def norm(self) -> float:
        return qnorm(self)

    __abs__ = norm

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.w, self.x, self.y, self.z)

    def is_close(self, other: "Quaternion", tol: float = 1e-12) -> bool:
        return max(abs(self.w - other.w), abs(self.x - other.x),
                   abs(self.y - other.y), abs(self.z - other.z)) <= tol


ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


class ComplexPair(NamedTuple):
    """Symplectic components of q = c1 + c2*j with c1, c2 in the (1, i) plane."""

    c1: complex
    c2: complex


def qmul(p: Quaternion, q: Quaternion) -> Quaternion:
    """Hamilton product p*q (non-commutative, associative)."""
    return Quaternion(
        p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
        p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
        p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
        p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w,
    )


def qconj(q: Quaternion) -> Quaternion:
    """Conjugate: sign flip of the pure part.  conj(p*q) = conj(q)*conj(p)."""
    return Quaternion(q.w, -q.x, -q.y, -q.z)


def qnorm(q: Quaternion) -> float:
    """Euclidean 4-norm; multiplicative, |p*q| = |p|*|q|."""
    return math.hypot(q.w, q.x, q.y, q.z)


def qexp_axis(axis: str, theta: float) -> Quaternion:
    """Unit quaternion cos(theta) + axis*sin(theta) for axis 'i' or 'j'.

    These are the left and right transform kernels: same-axis exponentials
    commute with each other, while i-plane and j-plane ones do not.
    """
    c, s = math.cos(theta), math.sin(theta)
    if axis == "i":
        return Quaternion(c, s, 0.0, 0.0)
    if axis == "j":
        return Quaternion(c, 0.0, s, 0.0)
    raise ValueError(f"axis must be 'i' or 'j', got {axis!r}")


def split(q: Quaternion) -> ComplexPair:
    """Decompose q = c1 + c2*j with c1 = w + i*x and c2 = y + i*z.

    The convention is fixed as c1 + c2*j (coefficient to the left of j);
    the fast transform relies on it.
    """
    return ComplexPair(complex(q.w, q.x), complex(q.y, q.z))


def join(p: ComplexPair) -> Quaternion:
    """Inverse of split, exact."""
    return Quaternion(p.c1.real, p.c1.imag, p.c2.real, p.c2.imag)
