"""Backend selection for the direct-summation kernel.

Prefers the compiled extension (qgabor._brute); falls back to the numpy
implementation when the extension is missing or QGABOR_FORCE_NUMPY is set.
Both expose dqft2_direct(data, sign) with identical semantics.
"""

from __future__ import annotations

import os

from . import _kernels_np

if os.environ.get("QGABOR_FORCE_NUMPY"):
    _impl = _kernels_np
    BACKEND = "numpy"
else:
    try:
        from . import _brute as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_np
        BACKEND = "numpy"

dqft2_direct = _impl.dqft2_direct
dqft2_direct_numpy = _kernels_np.dqft2_direct


def backend() -> str:
    """Name of the selected direct-kernel backend: 'cython' or 'numpy'."""
    return BACKEND
