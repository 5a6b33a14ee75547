"""Two-sided Gabor quaternionic transform: windows, slices, spectrogram,
reconstruction, and the shift/reflection identities.

A slice at shift b is the two-sided transform of the windowed product
x -> f[x] * conj(phi[(x - b) mod n]); the multiplication order f * conj(phi)
is fixed, the alternative is a different transform.  The shift grid equals
the signal grid with circular wrapping, so sum_b |phi(x - b)|^2 is exactly
the plain sample-energy of the window and the Plancherel and reconstruction
identities hold exactly in the discrete setting.

Energies and moments over the (omega, b) family carry the cell measure
h1*h2 per b cell on top of the per-slice spectral weighting, so that the
total transform energy equals l2_norm_sq(f) * l2_norm_sq(phi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import _qarray as qa
from .errors import BudgetExceeded, ShapeMismatch, ZeroWindow
from .grid import GridSpec, QSignal2D, l2_norm_sq, reflect, translate_circular
from .qft import QSpectrum2D, dqft, frequency_grid, idqft

DEFAULT_SHIFT_BUDGET = 4096


def _box_profile(x1: np.ndarray, x2: np.ndarray) -> np.ndarray:
    return np.where((np.abs(x1) <= 1.0) & (np.abs(x2) <= 1.0), 1.0, 0.0)


def _haar_profile(x1: np.ndarray, x2: np.ndarray) -> np.ndarray:
    # Overlapping closed intervals as written; the first branch wins on the
    # shared measure-zero edge.
    pos = (x1 >= 0.0) & (x1 <= 0.5) & (x2 >= 0.0) & (x2 <= 0.5)
    neg = (x1 >= 0.5) & (x1 <= 1.0) & (x2 >= 0.5) & (x2 <= 1.0) & ~pos
    return np.where(pos, 1.0, np.where(neg, -1.0, 0.0))


def _gaussian_profile(x1: np.ndarray, x2: np.ndarray, sigma: float) -> np.ndarray:
    return np.exp(-(x1**2 + x2**2) / (2.0 * sigma**2)) / (2.0 * np.pi * sigma**2)


def _real_field(values: np.ndarray) -> np.ndarray:
    out = np.zeros(values.shape + (4,))
    out[..., 0] = values
    return out


@dataclass(frozen=True)
class Window:
    """Materialized window with its energy C_phi = l2_norm_sq(samples)."""

    kind: str
    samples: QSignal2D
    energy: float
    sigma: float | None = None

    def label(self) -> str:
        if self.kind == "gaussian":
            return f"gaussian:{self.sigma}"
        return self.kind


def _require_cover(spec: GridSpec, lo: float, hi: float, kind: str) -> None:
    for axis in (1, 2):
        c = spec.coords(axis)
        if c[0] > lo or c[-1] < hi:
            raise ValueError(
                f"{kind} window needs the grid to cover [{lo}, {hi}] on axis "
                f"{axis}; got [{c[0]}, {c[-1]}]"
            )


def make_window(kind: str, spec: GridSpec, sigma: float | None = None,
                samples: QSignal2D | None = None) -> Window:
    """Build a window on the target grid.

    kind is one of 'box', 'haar', 'gaussian' (requires sigma > 0) or
    'custom' (requires samples).  A window with zero energy is rejected.
    """
    x1, x2 = spec.mesh()
    if kind == "box":
        _require_cover(spec, -1.0, 1.0, kind)
        sig = QSignal2D(spec, _real_field(np.broadcast_to(
            _box_profile(x1, x2), spec.shape)))
    elif kind == "haar":
        _require_cover(spec, 0.0, 1.0, kind)
        sig = QSignal2D(spec, _real_field(np.broadcast_to(
            _haar_profile(x1, x2), spec.shape)))
    elif kind == "gaussian":
        if sigma is None or not sigma > 0:
            raise ValueError("gaussian window needs sigma > 0")
        sig = QSignal2D(spec, _real_field(np.broadcast_to(
            _gaussian_profile(x1, x2, sigma), spec.shape)))
    elif kind == "custom":
        if samples is None:
            raise ValueError("custom window needs samples")
        if not samples.spec.compatible(spec):
            raise ShapeMismatch("custom window samples live on a different grid")
        sig = samples
    else:
        raise ValueError(f"unknown window kind {kind!r}")

    energy = l2_norm_sq(sig)
    if energy == 0.0:
        raise ZeroWindow(f"{kind} window has zero energy on this grid")
    return Window(kind, sig, energy, sigma)


@dataclass(frozen=True)
class GaborTransform:
    """Full transform {G(omega, b)} stored per shift b.

    slices has shape (n1, n2, n1, n2, 4) indexed by (b1, b2, w1, w2).
    """

    spec_b: GridSpec
    spec_w: GridSpec
    slices: np.ndarray
    window_energy: float

    def slice_at(self, b: tuple[int, int]) -> QSpectrum2D:
        n1, n2 = self.spec_b.shape
        if not (0 <= b[0] < n1 and 0 <= b[1] < n2):
            raise IndexError(f"shift {b} outside the {n1}x{n2} shift grid")
        return QSpectrum2D(self.spec_w, self.slices[b[0], b[1]])

    def total_energy(self) -> float:
        """(h1*h2)^2-weighted energy over (omega, b); equals
        l2_norm_sq(f) * window energy exactly."""
        return float(qa.qabs2(self.slices).sum() * self.spec_b.cell**2)


def windowed_product(f: QSignal2D, w: Window, b: tuple[int, int]) -> QSignal2D:
    """x -> f[x] * conj(phi[(x - b) mod n]), the transform's integrand."""
    if not f.spec.compatible(w.samples.spec):
        raise ShapeMismatch("signal and window grids differ")
    shifted = translate_circular(w.samples, b)
    return QSignal2D(f.spec, qa.qmul(f.data, qa.qconj(shifted.data)))


def gqft_slice(f: QSignal2D, w: Window, b: tuple[int, int],
               method: str = "fast") -> QSpectrum2D:
    """One slice G(., b) = dqft(f * conj(T_b phi))."""
    return dqft(windowed_product(f, w, b), method=method)


def iter_slices(f: QSignal2D, w: Window,
                method: str = "fast") -> Iterator[tuple[tuple[int, int], QSpectrum2D]]:
    """Stream ((b1, b2), slice) pairs without materializing the 4D tensor."""
    for b1 in range(f.spec.n1):
        for b2 in range(f.spec.n2):
            yield (b1, b2), gqft_slice(f, w, (b1, b2), method=method)


def gqft_full(f: QSignal2D, w: Window, budget: int = DEFAULT_SHIFT_BUDGET,
              method: str = "fast") -> GaborTransform:
    """All n1*n2 slices.  The tensor grows as (n1*n2)^2; shifts beyond the
    budget raise BudgetExceeded (use iter_slices to stream instead)."""
    n1, n2 = f.spec.shape
    if n1 * n2 > budget:
        raise BudgetExceeded(
            f"{n1 * n2} shifts exceed the budget of {budget}; "
            f"pass budget={n1 * n2} or stream with iter_slices"
        )
    slices = np.empty((n1, n2, n1, n2, 4))
    for (b1, b2), spec in iter_slices(f, w, method=method):
        slices[b1, b2] = spec.data
    return GaborTransform(f.spec, frequency_grid(f.spec), slices, w.energy)


def spectrogram(g: GaborTransform, b: tuple[int, int]) -> np.ndarray:
    """Energy density |G(omega, b)|^2 over the frequency grid."""
    return qa.qabs2(g.slice_at(b).data)


def reconstruct(g: GaborTransform, w: Window, method: str = "fast") -> QSignal2D:
    """Invert the full transform:

        f[x] = (h1*h2 / C_phi) * sum_b idqft(G(., b))[x] * phi[(x - b) mod n]

    The cell factor is the discrete d b measure.  Exact up to rounding when
    g was produced by gqft_full(f, w).
    """
    if w.energy <= 0.0:
        raise ZeroWindow("cannot reconstruct with a zero-energy window")
    n1, n2 = g.spec_b.shape
    acc = np.zeros((n1, n2, 4))
    for b1 in range(n1):
        for b2 in range(n2):
            inv = idqft(QSpectrum2D(g.spec_w, g.slices[b1, b2]), method=method)
            shifted = np.roll(w.samples.data, (b1, b2), axis=(0, 1))
            acc += qa.qmul(inv.data, shifted)
    acc *= g.spec_b.cell / w.energy
    return QSignal2D(g.spec_b, acc)


def shift_covariance_check(f: QSignal2D, w: Window, y: tuple[int, int],
                           budget: int = DEFAULT_SHIFT_BUDGET) -> float:
    """Max deviation of the shift identity over all (omega, b):

        G{T_y f}(omega, b) = e_i(-2 pi y1 w1 / n1) * G{f}(omega, b - y)
                             * e_j(-2 pi y2 w2 / n2)

    The right phase uses y2 (the form the identity's derivation produces).
    Exact under circular shifts; deviations are pure rounding.
    """
    n1, n2 = f.spec.shape
    g0 = gqft_full(f, w, budget=budget)
    gs = gqft_full(translate_circular(f, y), w, budget=budget)

    rolled = np.roll(g0.slices, (y[0], y[1]), axis=(0, 1))
    th1 = -2.0 * np.pi * y[0] * np.arange(n1) / n1
    th2 = -2.0 * np.pi * y[1] * np.arange(n2) / n2
    expected = qa.lmul_expi(th1[None, None, :, None], rolled)
    expected = qa.rmul_expj(expected, th2[None, None, None, :])
    return float(np.max(np.abs(gs.slices - expected)))


def reflection_check(f: QSignal2D, w: Window,
                     budget: int = DEFAULT_SHIFT_BUDGET) -> float:
    """Max deviation of the reflection identity over all (omega, b):

        G_{reflect(phi)}{reflect(f)}(omega, b) = G_phi{f}((-omega) mod n,
                                                          (-b) mod n)
    """
    n1, n2 = f.spec.shape
    w_ref = make_window("custom", f.spec, samples=reflect(w.samples))
    g0 = gqft_full(f, w, budget=budget)
    gr = gqft_full(reflect(f), w_ref, budget=budget)

    i1 = (-np.arange(n1)) % n1
    i2 = (-np.arange(n2)) % n2
    expected = g0.slices[np.ix_(i1, i2, i1, i2)]
    return float(np.max(np.abs(gr.slices - expected)))
