import math

import numpy as np
import pytest

from qgabor import (
    GridSpec,
    QSignal2D,
    dqft,
    dqft_brute,
    dqft_fast,
    frequency_grid,
    idqft,
    l2_norm_sq,
    sample,
    spatial_grid,
    spectrum_energy,
)
from qgabor import _kernels, signals
from qgabor.quat import Quaternion

from conftest import random_signal


def test_delta_transforms_to_constant():
    n = 4
    spec = GridSpec(n, n, 1.0, 1.0)
    data = np.zeros((n, n, 4))
    data[0, 0, 0] = 1.0
    for op in (dqft_brute, dqft_fast):
        F = op(QSignal2D(spec, data))
        assert np.max(np.abs(F.data[..., 0] - 1.0 / n)) == 0.0
        assert np.max(np.abs(F.data[..., 1:])) == 0.0


def test_constant_transforms_to_delta():
    n = 4
    spec = GridSpec(n, n, 1.0, 1.0)
    F = dqft_brute(sample(signals.constant_one(), spec))
    assert F.data[0, 0, 0] == pytest.approx(float(n), abs=1e-12)
    rest = F.data.copy()
    rest[0, 0, 0] = 0.0
    assert np.max(np.abs(rest)) < 1e-14


def test_1x1_signal_is_its_own_spectrum():
    spec = GridSpec(1, 1, 1.0, 1.0)
    q = np.array([[[0.3, -1.2, 2.5, 0.7]]])
    F = dqft_brute(QSignal2D(spec, q))
    assert np.array_equal(F.data, q)


@pytest.mark.parametrize("shape,tol", [((4, 4), 1e-12), ((16, 16), 1e-10),
                                       ((5, 7), 1e-11), ((8, 12), 1e-11)])
def test_fast_matches_brute(rng, shape, tol):
    f = random_signal(rng, *shape, h1=0.4, h2=0.9)
    fb = dqft_brute(f)
    ff = dqft_fast(f)
    assert np.max(np.abs(fb.data - ff.data)) < tol


def test_fast_matches_brute_on_delta():
    spec = GridSpec(8, 8, 1.0, 1.0)
    data = np.zeros((8, 8, 4))
    data[3, 5, 2] = 1.0
    f = QSignal2D(spec, data)
    assert np.max(np.abs(dqft_brute(f).data - dqft_fast(f).data)) < 1e-14


def test_cython_and_numpy_kernels_agree(rng):
    f = random_signal(rng, 9, 11)
    for sign in (-1, +1):
        a = _kernels.dqft2_direct(f.data, sign)
        b = _kernels.dqft2_direct_numpy(f.data, sign)
        assert np.max(np.abs(a - b)) < 1e-11
    assert _kernels.backend() in ("cython", "numpy")


def test_inversion_round_trip(rng):
    f = random_signal(rng, 8, 8, 0.5, 0.25)
    assert np.max(np.abs(idqft(dqft_brute(f)).data - f.data)) < 1e-11
    assert np.max(np.abs(idqft(dqft_fast(f)).data - f.data)) < 1e-11
    assert np.max(np.abs(idqft(dqft_fast(f), method="brute").data - f.data)) < 1e-11


def test_idqft_of_constant_spectrum_is_delta():
    n = 4
    fspec = frequency_grid(GridSpec(n, n, 1.0, 1.0))
    from qgabor import QSpectrum2D

    data = np.zeros((n, n, 4))
    data[..., 0] = 1.0 / n
    f = idqft(QSpectrum2D(fspec, data))
    assert f.data[0, 0, 0] == pytest.approx(1.0, abs=1e-14)
    rest = f.data.copy()
    rest[0, 0, 0] = 0.0
    assert np.max(np.abs(rest)) < 1e-14


def test_plancherel(rng):
    for shape in [(4, 4), (8, 16), (32, 32), (7, 13)]:
        f = random_signal(rng, *shape, h1=0.7, h2=0.3)
        F = dqft_fast(f)
        lhs = F.abs2().sum()
        rhs = (f.data**2).sum()
        assert abs(lhs / rhs - 1.0) < 1e-12
        # and in measure-weighted form
        assert abs(spectrum_energy(F) / l2_norm_sq(f) - 1.0) < 1e-12


def test_real_linearity(rng):
    f = random_signal(rng, 8, 8)
    g = random_signal(rng, 8, 8)
    a, b = -1.7, 0.4
    lhs = dqft_fast(a * f + b * g).data
    rhs = a * dqft_fast(f).data + b * dqft_fast(g).data
    assert np.max(np.abs(lhs - rhs)) < 1e-12 * max(1.0, np.max(np.abs(lhs)))


def test_gaussian_self_duality():
    n, h = 256, 16.0 / 256
    f = sample(signals.gaussian(1.0), GridSpec(n, n, h, h))
    F = dqft_fast(f)
    mod = np.sqrt(F.abs2())
    mod /= mod.max()
    w1 = F.freqs(1)[:, None]
    w2 = F.freqs(2)[None, :]
    target = np.exp(-np.pi * (w1**2 + w2**2))
    assert np.max(np.abs(mod - target)) < 1e-6


def test_frequency_grid_round_trip():
    spec = GridSpec(12, 20, 0.7, 1.3, centered=True)
    fspec = frequency_grid(spec)
    assert fspec.h1 == pytest.approx(1.0 / (12 * 0.7), rel=1e-15)
    back = spatial_grid(fspec)
    assert back.compatible(spec)


def test_spectrum_freqs_match_fftfreq():
    spec = GridSpec(8, 6, 0.5, 0.25)
    F = dqft_fast(QSignal2D(spec, np.zeros((8, 6, 4))))
    assert np.allclose(F.freqs(1), np.fft.fftfreq(8, d=0.5))
    assert np.allclose(F.freqs(2), np.fft.fftfreq(6, d=0.25))


def test_left_quaternion_linearity_fails_by_noncommutativity(rng):
    # multiplying by j on the left does not commute through the left kernel,
    # so dqft(j*f) differs from j*dqft(f) in general
    f = random_signal(rng, 4, 4)
    from qgabor import _qarray as qa

    jq = np.array([0.0, 0.0, 1.0, 0.0])
    jf = QSignal2D(f.spec, qa.qmul(np.broadcast_to(jq, f.data.shape), f.data))
    lhs = dqft_fast(jf).data
    rhs = qa.qmul(np.broadcast_to(jq, lhs.shape), dqft_fast(f).data)
    assert np.max(np.abs(lhs - rhs)) > 1e-3


def test_dqft_method_dispatch(rng):
    f = random_signal(rng, 4, 4)
    assert np.array_equal(dqft(f, method="brute").data, dqft_brute(f).data)
    with pytest.raises(ValueError):
        dqft(f, method="nope")
    with pytest.raises(ValueError):
        idqft(dqft_fast(f), method="nope")
