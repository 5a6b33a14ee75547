"""Two-sided discrete quaternion Fourier transform.

Forward transform (unitary normalization):

    F[w1, w2] = (n1*n2)^(-1/2) * sum_{m1, m2}
                e_i(-2 pi m1 w1 / n1) * f[m1, m2] * e_j(-2 pi m2 w2 / n2)

with the i-exponential always on the left and the j-exponential on the
right.  The inverse flips both kernel signs.  Unitary scaling on both sides
makes the discrete Plancherel identity and the inversion round trip exact.

Spectra are stored in plain DFT bin order (index 0 is DC), which is what the
kernel formula above indexes; for continuum comparisons a bin maps to its
aliased centered frequency ((w + floor(n/2)) mod n - floor(n/2)) / (n*h).

Two evaluation paths are provided.  dqft_brute sums the definition directly
(compiled kernel when available) and serves as the reference; dqft_fast uses
the symplectic split q = c1 + c2*j: with P = c1 + i*c2 and M = c1 - i*c2 the
transform reduces to two complex FFTs, where the M channel has the sign of
the axis-2 frequency reversed (j commutes with its own exponential while i
anti-commutes with j).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _kernels
from . import _qarray as qa
from .grid import GridSpec, QSignal2D


@dataclass(frozen=True)
class QSpectrum2D:
    """Two-sided spectrum of a QSignal2D.

    spec describes the frequency grid: n1 x n2 bins with spacings
    1/(n1*h1) and 1/(n2*h2); the centered flag mirrors the spatial grid.
    """

    spec: GridSpec
    data: np.ndarray
    normalization: str = field(default="unitary")

    def __post_init__(self):
        arr = np.ascontiguousarray(self.data, dtype=np.float64)
        if arr.shape != (self.spec.n1, self.spec.n2, 4):
            raise ValueError(
                f"data shape {arr.shape} does not match {self.spec.shape + (4,)}"
            )
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)
        if self.normalization != "unitary":
            raise ValueError("only unitary normalization is supported")

    def freqs(self, axis: int) -> np.ndarray:
        """Continuum frequency of each stored bin along axis 1 or 2.

        Centered grids use the aliased signed value, matching fftfreq;
        uncentered grids use the raw m * delta ordering.
        """
        n, dw = (self.spec.n1, self.spec.h1) if axis == 1 else (self.spec.n2, self.spec.h2)
        m = np.arange(n)
        if self.spec.centered:
            m = (m + n // 2) % n - n // 2
        return m * dw

    @property
    def spatial_cell(self) -> float:
        """Cell area h1*h2 of the originating spatial grid.

        For a unitary spectrum, h1*h2 * sum g(omega) |F[w]|^2 is the Riemann
        approximation of the continuum integral of g(omega) |F_cont|^2: the
        frequency cell measure cancels against the continuum scaling of the
        transform exactly.
        """
        return 1.0 / (self.spec.n1 * self.spec.h1 * self.spec.n2 * self.spec.h2)

    def abs2(self) -> np.ndarray:
        return qa.qabs2(self.data)


def frequency_grid(spec: GridSpec) -> GridSpec:
    """Frequency-domain companion of a spatial grid."""
    return GridSpec(
        spec.n1,
        spec.n2,
        1.0 / (spec.n1 * spec.h1),
        1.0 / (spec.n2 * spec.h2),
        spec.centered,
    )


def spatial_grid(fspec: GridSpec) -> GridSpec:
    """Inverse of frequency_grid."""
    return GridSpec(
        fspec.n1,
        fspec.n2,
        1.0 / (fspec.n1 * fspec.h1),
        1.0 / (fspec.n2 * fspec.h2),
        fspec.centered,
    )


def _fast_twosided(data: np.ndarray, sign: int) -> np.ndarray:
    """Unnormalized two-sided transform via two complex FFTs."""
    a, b = qa.to_channels(data)
    p = a + 1j * b
    m = a - 1j * b
    n1, n2 = a.shape
    if sign < 0:
        tp = np.fft.fft2(p)
        tm = np.fft.ifft(np.fft.fft(m, axis=0), axis=1) * n2
    else:
        tp = np.fft.ifft2(p) * (n1 * n2)
        tm = np.fft.fft(np.fft.ifft(m, axis=0), axis=1) * n1
    fa = 0.5 * (tp + tm)
    fb = 0.5j * (tm - tp)
    return qa.from_channels(fa, fb)


def dqft_brute(f: QSignal2D) -> QSpectrum2D:
    """Direct summation of the defining double sum; the reference path."""
    out = _kernels.dqft2_direct(f.data, -1) / math.sqrt(f.spec.n1 * f.spec.n2)
    return QSpectrum2D(frequency_grid(f.spec), out)


def dqft_fast(f: QSignal2D) -> QSpectrum2D:
    """FFT evaluation through the symplectic split; matches dqft_brute."""
    out = _fast_twosided(f.data, -1) / math.sqrt(f.spec.n1 * f.spec.n2)
    return QSpectrum2D(frequency_grid(f.spec), out)


def dqft(f: QSignal2D, method: str = "fast") -> QSpectrum2D:
    if method == "fast":
        return dqft_fast(f)
    if method == "brute":
        return dqft_brute(f)
    raise ValueError(f"unknown method {method!r}")


def idqft(F: QSpectrum2D, method: str = "fast") -> QSignal2D:
    """Inverse transform; exact inverse of dqft up to rounding."""
    if F.normalization != "unitary":
        raise ValueError("idqft requires a unitary spectrum")
    scale = 1.0 / math.sqrt(F.spec.n1 * F.spec.n2)
    if method == "fast":
        out = _fast_twosided(F.data, +1) * scale
    elif method == "brute":
        out = _kernels.dqft2_direct(F.data, +1) * scale
    else:
        raise ValueError(f"unknown method {method!r}")
    return QSignal2D(spatial_grid(F.spec), out)


def spectrum_energy(F: QSpectrum2D) -> float:
    """h1*h2-weighted energy of the spectrum; equals l2_norm_sq(f) exactly."""
    return float(F.abs2().sum() * F.spatial_cell)
