import cmath
import math

import numpy as np
import pytest
from scipy.integrate import quad

from qgabor import (
    BoundaryMass,
    OutOfRange,
    PlaneComplex,
    QuadratureDomain,
    Quaternion,
    example1_closed,
    example2_closed,
    gqft_quadrature,
    qf,
    qf_complex,
)
from qgabor import signals
from qgabor.cli import _oracle_quadrature, oracle_agreement

SQRT_PI_HALF = math.sqrt(math.pi) / 2


def test_qf_basic_values():
    assert qf(0.0) == 0.0
    assert abs(qf(10.0) - SQRT_PI_HALF) < 1e-12
    ref, _ = quad(lambda t: math.exp(-t * t), 0.0, 1.0)
    assert abs(qf(1.0) - ref) < 1e-9
    assert qf(1.0) == pytest.approx(0.7468241328124271, abs=1e-12)


def test_qf_is_odd_and_matches_erf(rng):
    for x in rng.uniform(-9, 9, 200):
        x = float(x)
        assert qf(-x) == -qf(x)
        ref = SQRT_PI_HALF * math.erf(x)
        assert abs(qf(x) - ref) <= 1e-12 * max(abs(ref), 1e-3)


def test_qf_rejects_non_finite():
    with pytest.raises(ValueError):
        qf(float("nan"))


def test_plane_complex_embedding():
    p = PlaneComplex(1.0, 2.0, "i")
    assert p.embed() == Quaternion(1, 2, 0, 0)
    q = PlaneComplex(1.0, 2.0, "j")
    assert q.embed() == Quaternion(1, 0, 2, 0)
    assert p.conj() == PlaneComplex(1.0, -2.0, "i")
    with pytest.raises(ValueError):
        PlaneComplex(0.0, 0.0, "k")


def test_qf_complex_real_restriction(rng):
    for x in rng.uniform(-8, 8, 100):
        p = qf_complex(PlaneComplex(float(x), 0.0, "j"))
        assert p.axis == "j"
        assert p.im == 0.0
        assert abs(p.re - qf(float(x))) <= 1e-12 * max(abs(p.re), 1e-6)


def test_qf_complex_conjugate_symmetry(rng):
    for _ in range(100):
        z = PlaneComplex(float(rng.uniform(-6, 6)), float(rng.uniform(-6, 6)), "i")
        a = qf_complex(z.conj())
        b = qf_complex(z).conj()
        scale = max(abs(b.z), 1e-12)
        assert abs(a.z - b.z) / scale < 1e-12


def _segment_quadrature(z: complex, n: int = 5000) -> complex:
    # Simpson along t = s*z, s in [0, 1]
    if n % 2:
        n += 1
    s = np.linspace(0.0, 1.0, n + 1)
    w = np.full(n + 1, 2.0)
    w[1::2] = 4.0
    w[0] = w[-1] = 1.0
    w *= (1.0 / n) / 3.0
    t = s * z
    vals = np.exp(-t * t) * z
    return complex(np.sum(w * vals))


def test_qf_complex_against_segment_quadrature():
    for z in (1 + 1j, 2.5 - 0.8j, 0.3 + 3.0j, 3.9 + 0.1j, 5.0 + 2.0j):
        got = qf_complex(PlaneComplex(z.real, z.imag, "i")).z
        ref = _segment_quadrature(z)
        assert abs(got - ref) <= 1e-9 * max(abs(ref), 1e-6)


def test_qf_complex_against_mpmath_grid():
    mp = pytest.importorskip("mpmath")
    mp.mp.dps = 30
    worst = 0.0
    for a in np.linspace(0.0, 8.0, 17):
        for b in np.linspace(0.0, 8.0, 17):
            if a == b == 0.0:
                continue
            got = qf_complex(PlaneComplex(float(a), float(b), "i")).z
            ref = complex(mp.sqrt(mp.pi) / 2 * mp.erf(mp.mpc(float(a), float(b))))
            worst = max(worst, abs(got - ref) / abs(ref))
    assert worst < 1e-9


def test_qf_complex_stability_bound():
    with pytest.raises(OutOfRange):
        qf_complex(PlaneComplex(0.0, 50.001, "i"))
    with pytest.raises(OutOfRange):
        # inside the documented bound but beyond the float64 range
        qf_complex(PlaneComplex(0.0, 30.0, "i"))


def test_example1_closed_at_origin():
    value = example1_closed((0.0, 0.0), (0.0, 0.0))
    assert abs(value.norm() - (1 - math.exp(-1)) ** 2) < 1e-9
    assert value.x == value.y == value.z == 0.0


def test_example1_empty_support():
    assert example1_closed((0.3, 0.1), (-5.0, 0.0)) == Quaternion()
    assert example1_closed((0.3, 0.1), (0.0, -1.0)) == Quaternion()


def test_example1_separable_structure():
    # pure per-axis factors: i-plane times j-plane in that order
    v = example1_closed((0.5, 0.0), (0.0, 0.0))
    assert v.z == pytest.approx(0.0, abs=1e-15)  # j factor is real here
    lam = 1 + 2j * math.pi * 0.5
    i_factor = (cmath.exp(-lam) - 1) / (-lam)
    j_factor = 1 - math.exp(-1.0)
    assert v.w == pytest.approx(i_factor.real * j_factor, rel=1e-12)
    assert v.x == pytest.approx(i_factor.imag * j_factor, rel=1e-12)


def test_example1_matches_quadrature():
    cases = [((0.3, -0.7), (0.5, 0.25)), ((0.0, 0.0), (0.0, 0.0)),
             ((1.0, 1.0), (1.0, -0.5)), ((-0.5, 0.25), (0.9, 0.9))]
    for omega, b in cases:
        closed = example1_closed(omega, b)
        quadv = _oracle_quadrature("example1", omega, b)
        assert (closed - quadv).norm() <= 1e-6 * max(closed.norm(), 1e-9)


def test_example2_matches_quadrature():
    cases = [((0.0, 0.0), (0.0, 0.0)), ((0.2, 0.1), (0.0, 0.0)),
             ((0.5, -0.5), (0.5, 0.5)), ((-0.25, 0.4), (1.0, -1.0))]
    for omega, b in cases:
        closed = example2_closed(omega, b)
        quadv = _oracle_quadrature("example2", omega, b)
        rel = (closed - quadv).norm() / max(closed.norm(), quadv.norm())
        assert rel < 1e-6
        assert oracle_agreement(closed, quadv)


def test_example2_decays_far_from_window():
    assert example2_closed((0.0, 0.0), (6.0, 6.0)).norm() < 1e-10


def test_example2_out_of_range():
    with pytest.raises(OutOfRange):
        example2_closed((20.0, 0.0), (0.0, 0.0))


def test_quadrature_domain_validation():
    with pytest.raises(ValueError):
        QuadratureDomain((0.0, 0.0), (0.0, 1.0), 10)
    with pytest.raises(ValueError):
        QuadratureDomain((0.0, 0.0), (1.0, 1.0), 1)
    with pytest.raises(ValueError):
        QuadratureDomain((0.0, 0.0), (1.0, 1.0), 10, rule="gauss")


def test_quadrature_gaussian_rule_crosscheck():
    gauss = signals.gaussian(1.0 / math.pi)  # e^{-|x|^2}
    dom_s = QuadratureDomain((-7.0, -7.0), (7.0, 7.0), 160, rule="simpson")
    dom_m = QuadratureDomain((-7.0, -7.0), (7.0, 7.0), 160, rule="midpoint")
    vs = gqft_quadrature(gauss, gauss, (0.0, 0.0), (0.0, 0.0), dom_s)
    vm = gqft_quadrature(gauss, gauss, (0.0, 0.0), (0.0, 0.0), dom_m)
    # real positive value: integral of e^{-2|x|^2} = pi/2
    assert vs.w > 0
    assert abs(vs.x) < 1e-14 and abs(vs.y) < 1e-14 and abs(vs.z) < 1e-14
    assert abs(vs.w - math.pi / 2) < 1e-8
    assert abs(vs.w - vm.w) < 1e-8


def test_quadrature_zero_signal():
    zero = lambda x1, x2: signals.real_field(np.zeros(np.broadcast(x1, x2).shape))
    dom = QuadratureDomain((-1.0, -1.0), (1.0, 1.0), 32)
    v = gqft_quadrature(zero, signals.constant_one(), (0.3, 0.3), (0.0, 0.0), dom,
                        require_decay=False)
    assert v == Quaternion()


def test_quadrature_simpson_convergence_order():
    # halving the step cuts the error ~16x on the smooth box-case integrand
    omega, b = (0.3, -0.7), (0.5, 0.25)
    exp_fn = lambda x1, x2: signals.real_field(
        np.exp(-np.broadcast_to(x1 + x2, np.broadcast(x1, x2).shape)))
    one = signals.constant_one()
    lo = (max(0.0, b[0] - 1.0), max(0.0, b[1] - 1.0))
    hi = (1.0 + b[0], 1.0 + b[1])

    def value(res):
        dom = QuadratureDomain(lo, hi, res)
        return gqft_quadrature(exp_fn, one, omega, b, dom, require_decay=False)

    ref = value(1024)
    err_coarse = (value(32) - ref).norm()
    err_fine = (value(64) - ref).norm()
    assert 8.0 < err_coarse / err_fine < 32.0


def test_quadrature_boundary_mass_check():
    gauss = signals.gaussian(1.0)
    small = QuadratureDomain((-1.0, -1.0), (1.0, 1.0), 32)
    with pytest.raises(BoundaryMass):
        gqft_quadrature(gauss, gauss, (0.0, 0.0), (0.0, 0.0), small)
    # and the same domain passes when decay is waived
    gqft_quadrature(gauss, gauss, (0.0, 0.0), (0.0, 0.0), small, require_decay=False)
