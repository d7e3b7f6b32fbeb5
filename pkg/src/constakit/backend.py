"""Kernel backend selection.

The hot arithmetic kernels exist twice: numba-compiled loops
(_kernels_numba) and a vectorized pure-numpy fallback (_kernels_numpy).
The active implementation is chosen once at import time from the
CONSTAKIT_BACKEND environment variable:

    CONSTAKIT_BACKEND=numba   force numba (error if unavailable)
    CONSTAKIT_BACKEND=numpy   force the numpy fallback
    unset                     numba when importable, else numpy

Both implementations are deterministic and produce identical outputs
(benchmarks/bench_backends.py and tests/test_backends.py check this).
"""

import os
import warnings

import numpy as np

from . import _kernels_numpy

_requested = os.environ.get("CONSTAKIT_BACKEND", "").strip().lower()

if _requested not in ("", "numba", "numpy"):
    raise RuntimeError(
        f"CONSTAKIT_BACKEND={_requested!r} not recognized; use 'numba' or 'numpy'"
    )

if _requested == "numpy":
    K = _kernels_numpy
    BACKEND = "numpy"
else:
    try:
        from . import _kernels_numba

        K = _kernels_numba
        BACKEND = "numba"
    except ImportError as exc:
        if _requested == "numba":
            raise RuntimeError(f"numba backend requested but unavailable: {exc}")
        warnings.warn(f"numba unavailable ({exc}); falling back to numpy kernels")
        K = _kernels_numpy
        BACKEND = "numpy"


def bit_array(e):
    """Exponent e >= 0 as a uint8 bit array, most significant bit first."""
    if e == 0:
        return np.zeros(1, dtype=np.uint8)
    return (np.frombuffer(bin(e)[2:].encode(), dtype=np.uint8) - ord("0")).astype(
        np.uint8
    )
