"""Vectorized quaternion arithmetic on float arrays with a trailing axis of 4.

Component order is (w, x, y, z).  The (1, i) channel is A = w + i*x and the
(1, j) channel is B = y + i*z, so q = A + B*j in the split convention.
"""

from __future__ import annotations

import numpy as np


def qmul(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Elementwise Hamilton product, broadcasting over leading axes."""
    pw, px, py, pz = np.moveaxis(p, -1, 0)
    qw, qx, qy, qz = np.moveaxis(q, -1, 0)
    return np.stack(
        [
            pw * qw - px * qx - py * qy - pz * qz,
            pw * qx + px * qw + py * qz - pz * qy,
            pw * qy - px * qz + py * qw + pz * qx,
            pw * qz + px * qy - py * qx + pz * qw,
        ],
        axis=-1,
    )


def qconj(q: np.ndarray) -> np.ndarray:
    out = q.copy()
    out[..., 1:] *= -1.0
    return out


def qabs2(q: np.ndarray) -> np.ndarray:
    """Squared modulus, shape without the component axis."""
    return np.einsum("...c,...c->...", q, q)


def qabs(q: np.ndarray) -> np.ndarray:
    return np.sqrt(qabs2(q))


def to_channels(q: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split into complex channels (A, B) with q = A + B*j."""
    a = q[..., 0] + 1j * q[..., 1]
    b = q[..., 2] + 1j * q[..., 3]
    return a, b


def from_channels(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a, b = np.broadcast_arrays(a, b)
    out = np.empty(a.shape + (4,), dtype=np.float64)
    out[..., 0] = a.real
    out[..., 1] = a.imag
    out[..., 2] = b.real
    out[..., 3] = b.imag
    return out


def lmul_expi(theta: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Left-multiply by the unit phase cos(theta) + i*sin(theta).

    In channels: e^{i theta} (A + B j) = (E A) + (E B) j.
    """
    e = np.exp(1j * np.asarray(theta))
    a, b = to_channels(q)
    return from_channels(e * a, e * b)


def rmul_expj(q: np.ndarray, theta: np.ndarray) -> np.ndarray:
    """Right-multiply by cos(theta) + j*sin(theta).

    In channels: (A + B j)(c + s j) = (A c - B s) + (A s + B c) j.
    """
    theta = np.asarray(theta)
    c, s = np.cos(theta), np.sin(theta)
    a, b = to_channels(q)
    return from_channels(a * c - b * s, a * s + b * c)


def embed_complex(z: np.ndarray, axis: str) -> np.ndarray:
    """Embed complex values into the (1, i) or (1, j) quaternion subplane."""
    z = np.asarray(z, dtype=np.complex128)
    zero = np.zeros_like(z.real)
    if axis == "i":
        return from_channels(z, zero + 0j)
    if axis == "j":
        return from_channels(z.real + 0j, z.imag + 0j)
    raise ValueError(f"axis must be 'i' or 'j', got {axis!r}")
