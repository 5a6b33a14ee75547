"""Independent ground truth for the windowed transform.

Closed forms for the two worked cases (decaying exponential against the box
window; unit Gaussian against the two-level Haar window), the incomplete
Gaussian integral qf(z) = integral of e^{-t^2} from 0 to z along a straight
segment, and a composite-rule quadrature of the transform integrand.

Nothing here touches the qft/gqft modules, so agreement between these
oracles and the grid transforms is meaningful evidence for both sides.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import _qarray as qa
from .errors import BoundaryMass, OutOfRange
from .quat import Quaternion, qmul

_SQRT_PI = math.sqrt(math.pi)
_IM_STABILITY_BOUND = 50.0
# beyond this, |qf(z)| ~ e^{Im^2 - Re^2} exceeds the float64 range
_OVERFLOW_EXPONENT = 700.0


@dataclass(frozen=True)
class PlaneComplex:
    """A value re + axis*im confined to the (1, i) or (1, j) subplane.

    Within one subplane the arithmetic is ordinary complex arithmetic;
    values from different subplanes do not commute, so they are embedded
    into full quaternions before mixing.
    """

    re: float
    im: float
    axis: str = "i"

    def __post_init__(self):
        if self.axis not in ("i", "j"):
            raise ValueError(f"axis must be 'i' or 'j', got {self.axis!r}")

    @property
    def z(self) -> complex:
        return complex(self.re, self.im)

    def conj(self) -> "PlaneComplex":
        return PlaneComplex(self.re, -self.im, self.axis)

    def embed(self) -> Quaternion:
        if self.axis == "i":
            return Quaternion(self.re, self.im, 0.0, 0.0)
        return Quaternion(self.re, 0.0, self.im, 0.0)


@dataclass(frozen=True)
class QuadratureDomain:
    """Rectangular integration domain with a per-axis node count."""

    lo: tuple[float, float]
    hi: tuple[float, float]
    resolution: int
    rule: str = "simpson"

    def __post_init__(self):
        if not (self.lo[0] < self.hi[0] and self.lo[1] < self.hi[1]):
            raise ValueError("domain must satisfy lo < hi componentwise")
        if self.resolution < 2:
            raise ValueError("resolution must be >= 2")
        if self.rule not in ("midpoint", "simpson"):
            raise ValueError(f"unknown rule {self.rule!r}")


def _qf_series_plain(z: complex) -> complex:
    """Maclaurin sum of (-1)^n z^(2n+1) / (n! (2n+1)).

    Alternating for real arguments but same-signed along the imaginary
    axis, so it is the stable choice when |Im z| dominates.
    """
    zz = z * z
    u = z
    total = z
    scale = abs(z)
    nmin = int(abs(zz)) + 10
    for n in range(1, 4000):
        u *= -zz / n
        term = u / (2 * n + 1)
        total += term
        scale = max(scale, abs(total))
        if n >= nmin and abs(term) <= 1e-17 * scale:
            return total
    raise OutOfRange(f"qf series did not converge for z={z!r}")


def _qf_series_scaled(z: complex) -> complex:
    """e^{-z^2} * sum 2^n z^(2n+1) / (2n+1)!!.

    All terms share a sign for real arguments; the stable choice when
    |Re z| dominates.
    """
    zz2 = 2.0 * z * z
    u = z
    total = z
    scale = abs(z)
    nmin = int(abs(z * z)) + 10
    for n in range(1, 4000):
        u *= zz2 / (2 * n + 1)
        total += u
        scale = max(scale, abs(total))
        if n >= nmin and abs(u) <= 1e-17 * scale:
            return cmath.exp(-z * z) * total
    raise OutOfRange(f"qf series did not converge for z={z!r}")


def _qf_continued_fraction(z: complex) -> complex | None:
    """sqrt(pi)/2 - e^{-z^2} / (2 K) with the Laplace continued fraction

        K = z + (1/2)/(z + 1/(z + (3/2)/(z + 2/(z + ...))))

    valid for Re z > 0.  Returns None if Lentz iteration fails to settle
    (happens only near the imaginary axis, where the series is stable).
    """
    tiny = 1e-300
    f = z if z != 0 else tiny
    c = f
    d = 0.0 + 0.0j
    for k in range(1, 300):
        a = 0.5 * k
        d = z + a * d
        if d == 0:
            d = tiny
        c = z + a / c
        if c == 0:
            c = tiny
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < 1e-16:
            return 0.5 * _SQRT_PI - cmath.exp(-z * z) / (2.0 * f)
    return None


def _qf_kernel(z: complex) -> complex:
    if z == 0:
        return 0.0 + 0.0j
    if z.real < 0:
        return -_qf_kernel(-z)
    if z.imag**2 - z.real**2 > _OVERFLOW_EXPONENT:
        raise OutOfRange(
            f"|qf({z!r})| ~ e^{{Im^2 - Re^2}} exceeds the float64 range"
        )
    if abs(z) <= 4.0:
        if z.real >= abs(z.imag):
            return _qf_series_scaled(z)
        return _qf_series_plain(z)
    if z.real >= 1.0:
        value = _qf_continued_fraction(z)
        if value is not None:
            return value
    return _qf_series_plain(z)


def qf(x: float) -> float:
    """Incomplete Gaussian integral of e^{-t^2} over [0, x].

    Odd; tends to sqrt(pi)/2 as x grows.  Relative error below 1e-12 on
    the real axis (series for |x| <= 4, continued fraction beyond).
    """
    if not math.isfinite(x):
        raise ValueError("qf requires a finite argument")
    return _qf_kernel(complex(x, 0.0)).real


def qf_complex(p: PlaneComplex) -> PlaneComplex:
    """qf along the straight segment from 0 to p in its subplane.

    Entire in the argument, so qf_complex(conj p) = conj(qf_complex(p));
    restricted to the real axis it equals qf.  Arguments with |im| beyond
    the documented stability bound of 50 are rejected (values with
    |im| >~ 26.6 already overflow the float64 range).
    """
    if abs(p.im) > _IM_STABILITY_BOUND:
        raise OutOfRange(
            f"|im| = {abs(p.im)} outside the stability range "
            f"[0, {_IM_STABILITY_BOUND}]"
        )
    value = _qf_kernel(p.z)
    return PlaneComplex(value.real, value.imag, p.axis)


def example1_closed(omega: tuple[float, float],
                    b: tuple[float, float]) -> Quaternion:
    """Windowed transform of e^{-x1-x2} on the positive quadrant against the
    unit box window, in closed form.

    Per axis the integral runs over [max(0, b_k - 1), 1 + b_k] and is zero
    when that interval is empty.  The axis-1 factor lives in the (1, i)
    subplane and the axis-2 factor in (1, j); they are multiplied in that
    order.
    """

    def axis_factor(om: float, bk: float) -> complex:
        lo = max(0.0, bk - 1.0)
        hi = 1.0 + bk
        if hi <= lo:
            return 0.0 + 0.0j
        lam = 1.0 + 2j * math.pi * om
        return (cmath.exp(-hi * lam) - cmath.exp(-lo * lam)) / (-lam)

    f1 = PlaneComplex(*_reim(axis_factor(omega[0], b[0])), axis="i")
    f2 = PlaneComplex(*_reim(axis_factor(omega[1], b[1])), axis="j")
    return qmul(f1.embed(), f2.embed())


def example2_closed(omega: tuple[float, float],
                    b: tuple[float, float]) -> Quaternion:
    """Windowed transform of the unit Gaussian e^{-(x1^2+x2^2)} against the
    two-level Haar window, expressed through qf at complex-shifted
    arguments:

        e^{-pi^2 (w1^2 + w2^2)} * (D1(b1, w1) * D1(b2, w2)
                                   - D2(b1, w1) * D2(b2, w2))

    where, with s = b + axis*pi*w,

        D1 = qf(s + 1/2) - qf(s)        (window level +1, cells [b, b+1/2])
        D2 = qf(s + 1)   - qf(s + 1/2)  (window level -1, cells [b+1/2, b+1])

    Axis-1 factors stay in the (1, i) subplane, axis-2 factors in (1, j),
    multiplied in that order.
    """

    def diffs(om: float, bk: float) -> tuple[complex, complex]:
        shift = complex(bk, math.pi * om)
        q0 = _qf_with_bound(shift)
        qh = _qf_with_bound(shift + 0.5)
        q1 = _qf_with_bound(shift + 1.0)
        return qh - q0, q1 - qh

    d1a, d2a = diffs(omega[0], b[0])
    d1b, d2b = diffs(omega[1], b[1])
    pref = math.exp(-math.pi**2 * (omega[0] ** 2 + omega[1] ** 2))

    t1 = qmul(PlaneComplex(*_reim(d1a), axis="i").embed(),
              PlaneComplex(*_reim(d1b), axis="j").embed())
    t2 = qmul(PlaneComplex(*_reim(d2a), axis="i").embed(),
              PlaneComplex(*_reim(d2b), axis="j").embed())
    return pref * (t1 - t2)


def _qf_with_bound(z: complex) -> complex:
    if abs(z.imag) > _IM_STABILITY_BOUND:
        raise OutOfRange(
            f"|im| = {abs(z.imag)} outside the qf stability range"
        )
    return _qf_kernel(z)


def _reim(z: complex) -> tuple[float, float]:
    return z.real, z.imag


def _nodes_weights(lo: float, hi: float, res: int,
                   rule: str) -> tuple[np.ndarray, np.ndarray]:
    if rule == "midpoint":
        h = (hi - lo) / res
        nodes = lo + (np.arange(res) + 0.5) * h
        weights = np.full(res, h)
        return nodes, weights
    # composite Simpson; needs an even interval count
    if res % 2:
        res += 1
    h = (hi - lo) / res
    nodes = lo + np.arange(res + 1) * h
    weights = np.full(res + 1, 2.0)
    weights[1::2] = 4.0
    weights[0] = weights[-1] = 1.0
    weights *= h / 3.0
    return nodes, weights


def gqft_quadrature(f_fn, phi_fn, omega: tuple[float, float],
                    b: tuple[float, float], dom: QuadratureDomain,
                    require_decay: bool = True) -> Quaternion:
    """Composite quadrature of the transform integrand

        e_i(-2 pi x1 w1) * f(x) * conj(phi(x - b)) * e_j(-2 pi x2 w2)

    over dom.  f_fn and phi_fn map coordinate arrays (x1, x2) to component
    arrays of shape broadcast + (4,).  Simpson is O(res^-4) on smooth
    integrands; pass require_decay=False when dom is the exact (compact)
    support instead of a truncation of the plane, otherwise boundary mass
    above 1e-12 of the peak raises BoundaryMass.
    """
    n1, w1 = _nodes_weights(dom.lo[0], dom.hi[0], dom.resolution, dom.rule)
    n2, w2 = _nodes_weights(dom.lo[1], dom.hi[1], dom.resolution, dom.rule)
    x1 = n1[:, None]
    x2 = n2[None, :]

    fv = np.asarray(f_fn(x1, x2), dtype=np.float64)
    pv = np.asarray(phi_fn(x1 - b[0], x2 - b[1]), dtype=np.float64)
    shape = (x1.shape[0], x2.shape[1], 4)
    g = qa.qmul(np.broadcast_to(fv, shape), qa.qconj(np.broadcast_to(pv, shape).copy()))

    if require_decay:
        mag = np.sqrt(qa.qabs2(g))
        peak = mag.max()
        if peak > 0.0:
            frame = max(mag[0, :].max(), mag[-1, :].max(),
                        mag[:, 0].max(), mag[:, -1].max())
            if frame > 1e-12 * peak:
                raise BoundaryMass(
                    f"integrand boundary mass {frame:.3e} exceeds 1e-12 of "
                    f"the peak {peak:.3e}; enlarge the domain or pass "
                    f"require_decay=False for compact support"
                )

    a, bb = qa.to_channels(g)
    e1 = np.exp(-2j * np.pi * omega[0] * x1)
    th2 = -2.0 * np.pi * omega[1] * x2
    c2, s2 = np.cos(th2), np.sin(th2)

    ia = e1 * (a * c2 - bb * s2)
    ib = e1 * (a * s2 + bb * c2)
    va = w1 @ ia @ w2
    vb = w1 @ ib @ w2
    return Quaternion(va.real, va.imag, vb.real, vb.imag)
