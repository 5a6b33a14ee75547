"""Numerical verification of the Heisenberg and logarithmic uncertainty
inequalities for the plain and windowed transforms.

All continuum integrals are h1*h2-weighted Riemann sums; frequency moments
use the aliased centered bin frequencies with the same weight (for a
unitary spectrum that reproduces the continuum frequency integral, see
QSpectrum2D.spatial_cell).  Verification is one-sided: discretization can
under-resolve a moment, so a violation within the grid tolerance indicates
grid error before it indicates mathematical error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import BoundaryMass, DomainError, ZeroSignal, ZeroWindow
from .gqft import Window, iter_slices
from .grid import GridSpec, QSignal2D, l2_norm_sq, log_moment, moment2, partial_diff_central
from .qft import QSpectrum2D, dqft, idqft

#: default digamma argument for the logarithmic bound constant; the
#: Beckner-type choice for two dimensions is t = n/4 = 1/2.
DEFAULT_T = 0.5

_BOUNDARY_DECAY = 1e-10


def digamma(t: float) -> float:
    """psi(t) = Gamma'(t) / Gamma(t) for t > 0.

    Upward recurrence to t >= 10, then the de Moivre asymptotic series;
    accurate to about 1e-13.
    """
    if not t > 0:
        raise DomainError(f"digamma requires t > 0, got {t}")
    value = 0.0
    while t < 10.0:
        value -= 1.0 / t
        t += 1.0
    r = 1.0 / (t * t)
    series = (
        r * (1.0 / 12.0
             - r * (1.0 / 120.0
                    - r * (1.0 / 252.0
                           - r * (1.0 / 240.0
                                  - r * (1.0 / 132.0
                                         - r * 691.0 / 32760.0)))))
    )
    return value + math.log(t) - 0.5 / t - series


def freq_moment2(F: QSpectrum2D, k: int) -> float:
    """Continuum-consistent second frequency moment of a unitary spectrum."""
    w = F.freqs(k)
    p = F.abs2()
    acc = (w**2) @ p.sum(axis=1) if k == 1 else p.sum(axis=0) @ (w**2)
    return float(acc * F.spatial_cell)


def freq_log_moment(F: QSpectrum2D) -> float:
    """Log frequency moment; the zero-frequency bin contributes zero."""
    w1 = F.freqs(1)[:, None]
    w2 = F.freqs(2)[None, :]
    r2 = w1**2 + w2**2
    with np.errstate(divide="ignore"):
        lnr = 0.5 * np.log(r2)
    lnr = np.where(r2 > 0.0, lnr, 0.0)
    return float((lnr * F.abs2()).sum() * F.spatial_cell)


def boundary_decay(f: QSignal2D) -> float:
    """Largest boundary-frame modulus relative to the peak modulus."""
    mag = np.sqrt(np.einsum("ijc,ijc->ij", f.data, f.data))
    peak = mag.max()
    if peak == 0.0:
        return 0.0
    frame = max(mag[0, :].max(), mag[-1, :].max(),
                mag[:, 0].max(), mag[:, -1].max())
    return float(frame / peak)


def _require_decay(f: QSignal2D) -> None:
    ratio = boundary_decay(f)
    if ratio > _BOUNDARY_DECAY:
        raise BoundaryMass(
            f"boundary samples at {ratio:.3e} of the peak exceed the "
            f"{_BOUNDARY_DECAY} decay requirement; the inequality assumes a "
            f"rapidly decaying signal"
        )


def _require_centered(f: QSignal2D) -> None:
    if not f.spec.centered:
        raise ValueError("moment-based checks need a centered grid")


@dataclass(frozen=True)
class HeisenbergReport:
    """Both sides of a spread-product lower bound and their ratio."""

    axis: int
    spatial_moment: float
    frequency_moment: float
    lhs: float
    rhs: float
    ratio: float
    grid: GridSpec


@dataclass(frozen=True)
class LogUncertaintyReport:
    """Both sides of a logarithmic-moment lower bound and the slack."""

    spatial_log: float
    frequency_log: float
    t: float
    D: float
    lhs: float
    rhs: float
    slack: float


@dataclass(frozen=True)
class DerivativeReport:
    """Both sides of the spectral derivative identity and the relative gap."""

    axis: int
    lhs: float
    rhs: float
    rel_gap: float


def heisenberg_qft(f: QSignal2D, k: int) -> HeisenbergReport:
    """Spread product bound sqrt(m_x) * sqrt(m_w) >= ||f||^2 / (4 pi).

    The Gaussian e^{-pi |x|^2} saturates the bound; on a resolving grid the
    ratio comes out as 1 to within rounding.
    """
    _require_centered(f)
    norm2 = l2_norm_sq(f)
    if norm2 == 0.0:
        raise ZeroSignal("Heisenberg check needs a nonzero signal")
    sm = moment2(f, k)
    fm = freq_moment2(dqft(f), k)
    lhs = math.sqrt(sm) * math.sqrt(fm)
    rhs = norm2 / (4.0 * math.pi)
    return HeisenbergReport(k, sm, fm, lhs, rhs, lhs / rhs, f.spec)


def heisenberg_gqft(f: QSignal2D, w: Window, k: int) -> HeisenbergReport:
    """Windowed-family version of the spread bound:

        sqrt(m_x(f)) * sqrt(sum over (omega, b) of w_k^2 |G|^2)
            >= ||f||^2 * ||phi|| / (4 pi)

    On every run two internal identities are also verified: the
    window-moment identity ||phi||^2 m_x(f) = sum_b m_x(idqft(G(., b)))
    (exact under circular shifts) and the Cauchy-Schwarz step used between
    the per-shift bounds and the family bound.
    """
    _require_centered(f)
    norm2 = l2_norm_sq(f)
    if norm2 == 0.0:
        raise ZeroSignal("Heisenberg check needs a nonzero signal")
    if w.energy <= 0.0:
        raise ZeroWindow("Heisenberg check needs a nonzero window")

    cell = f.spec.cell
    sm = moment2(f, k)
    fm_total = 0.0
    sm_slices = 0.0
    cross = 0.0
    sum_a2 = 0.0
    sum_b2 = 0.0
    for _, spectrum in iter_slices(f, w):
        fm_b = freq_moment2(spectrum, k)
        sm_b = moment2(idqft(spectrum), k)
        fm_total += cell * fm_b
        sm_slices += cell * sm_b
        cross += math.sqrt(sm_b) * math.sqrt(fm_b)
        sum_a2 += sm_b
        sum_b2 += fm_b

    lemma_target = w.energy * sm
    gap = abs(sm_slices - lemma_target) / max(lemma_target, 1e-300)
    if gap > 1e-10:
        raise RuntimeError(
            f"window-moment identity violated: relative gap {gap:.3e}"
        )
    if cross**2 > sum_a2 * sum_b2 * (1.0 + 1e-12):
        raise RuntimeError("Cauchy-Schwarz step violated beyond rounding")

    lhs = math.sqrt(sm) * math.sqrt(fm_total)
    rhs = norm2 * math.sqrt(w.energy) / (4.0 * math.pi)
    return HeisenbergReport(k, sm, fm_total, lhs, rhs, lhs / rhs, f.spec)


def window_moment_gap(f: QSignal2D, w: Window, k: int) -> float:
    """Relative gap of the window-moment identity

        ||phi||^2 * m_x(f) = sum_b m_x(idqft(G(., b))) db

    which is exact under circular shifts; the gap is pure rounding.
    """
    _require_centered(f)
    cell = f.spec.cell
    total = 0.0
    for _, spectrum in iter_slices(f, w):
        total += cell * moment2(idqft(spectrum), k)
    target = w.energy * moment2(f, k)
    return abs(total - target) / max(target, 1e-300)


def log_qft(f: QSignal2D, t: float = DEFAULT_T) -> LogUncertaintyReport:
    """Logarithmic bound: log moments in space and frequency sum to at
    least (psi(t) - ln pi) ||f||^2 for rapidly decaying signals."""
    _require_centered(f)
    _require_decay(f)
    norm2 = l2_norm_sq(f)
    if norm2 == 0.0:
        raise ZeroSignal("logarithmic check needs a nonzero signal")
    sl = log_moment(f)
    fl = freq_log_moment(dqft(f))
    d = digamma(t) - math.log(math.pi)
    lhs = sl + fl
    rhs = d * norm2
    return LogUncertaintyReport(sl, fl, t, d, lhs, rhs, lhs - rhs)


def log_gqft(f: QSignal2D, w: Window, t: float = DEFAULT_T) -> LogUncertaintyReport:
    """Windowed-family logarithmic bound:

        ||phi||^2 * logm(f) + sum_b logm_freq(G(., b)) db
            >= ||phi||^2 (psi(t) - ln pi) ||f||^2
    """
    _require_centered(f)
    _require_decay(f)
    norm2 = l2_norm_sq(f)
    if norm2 == 0.0:
        raise ZeroSignal("logarithmic check needs a nonzero signal")
    if w.energy <= 0.0:
        raise ZeroWindow("logarithmic check needs a nonzero window")

    cell = f.spec.cell
    sl = log_moment(f)
    fl_total = 0.0
    for _, spectrum in iter_slices(f, w):
        fl_total += cell * freq_log_moment(spectrum)
    d = digamma(t) - math.log(math.pi)
    lhs = w.energy * sl + fl_total
    rhs = w.energy * d * norm2
    return LogUncertaintyReport(sl, fl_total, t, d, lhs, rhs, lhs - rhs)


def derivative_identity_check(f: QSignal2D, k: int,
                              derivative: QSignal2D | None = None) -> DerivativeReport:
    """Spectral derivative identity

        (2 pi)^2 * sum w_k^2 |F[w]|^2 = ||d_k f||^2

    with the right side from central differences by default, or from
    caller-provided derivative samples (e.g. sampled analytic derivatives,
    which turn the O(h^2) difference error into spectral accuracy).
    """
    _require_centered(f)
    _require_decay(f)
    lhs = (2.0 * math.pi) ** 2 * freq_moment2(dqft(f), k)
    g = derivative if derivative is not None else partial_diff_central(f, k)
    rhs = l2_norm_sq(g)
    gap = abs(lhs - rhs) / max(abs(lhs), abs(rhs), 1e-300)
    return DerivativeReport(k, lhs, rhs, gap)
