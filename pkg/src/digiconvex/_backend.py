"""Kernel backend selection.

``DIGICONVEX_BACKEND=numpy`` forces the pure-numpy kernels; the default is
``numba`` when it can be imported.
"""
import os

BACKEND_ENV = "DIGICONVEX_BACKEND"

_requested = os.environ.get(BACKEND_ENV, "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ImportError(f"{BACKEND_ENV} must be 'numba' or 'numpy', got {_requested!r}")

try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAS_NUMBA = False

BACKEND = "numba" if (_requested == "numba" and HAS_NUMBA) else "numpy"


def njit(func):
    """``numba.njit(cache=True)`` when numba is importable, identity otherwise."""
    if HAS_NUMBA:
        return numba.njit(cache=True)(func)
    return func
