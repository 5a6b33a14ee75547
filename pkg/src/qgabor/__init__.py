"""Two-sided quaternion Fourier and Gabor transforms on discrete 2D grids.

The transform sandwiches the signal between an i-axis exponential on the
left and a j-axis exponential on the right; the windowed (Gabor) variant
localizes with a conjugated, shifted quaternion window.  Discrete inversion
and Plancherel identities are exact by construction; the uncertainty module
verifies the Heisenberg and logarithmic inequalities numerically.
"""

from ._kernels import backend
from .errors import (
    BadMagic,
    BadVersion,
    BoundaryMass,
    BudgetExceeded,
    DomainError,
    NonFinite,
    OutOfRange,
    QGaborError,
    ShapeMismatch,
    TruncatedPayload,
    UnsupportedFormat,
    ZeroSignal,
    ZeroWindow,
)
from .gqft import (
    GaborTransform,
    Window,
    gqft_full,
    gqft_slice,
    iter_slices,
    make_window,
    reconstruct,
    reflection_check,
    shift_covariance_check,
    spectrogram,
)
from .grid import (
    GridSpec,
    QSignal2D,
    inner_product,
    l2_norm_sq,
    log_moment,
    moment2,
    partial_diff_central,
    reflect,
    sample,
    translate_circular,
)
from .oracles import (
    PlaneComplex,
    QuadratureDomain,
    example1_closed,
    example2_closed,
    gqft_quadrature,
    qf,
    qf_complex,
)
from .qft import (
    QSpectrum2D,
    dqft,
    dqft_brute,
    dqft_fast,
    frequency_grid,
    idqft,
    spatial_grid,
    spectrum_energy,
)
from .quat import ComplexPair, Quaternion, join, qconj, qexp_axis, qmul, qnorm, split
from .uncertainty import (
    DerivativeReport,
    HeisenbergReport,
    LogUncertaintyReport,
    derivative_identity_check,
    digamma,
    freq_log_moment,
    freq_moment2,
    heisenberg_gqft,
    heisenberg_qft,
    log_gqft,
    log_qft,
    window_moment_gap,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
