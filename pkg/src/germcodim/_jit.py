"""numba switch.

Kernels are written in the numba-compatible subset of Python/numpy.  Setting
``GERMCODIM_NO_NUMBA=1`` (or not having numba installed) runs the very same
functions as plain Python over numpy arrays; results are identical, only slower.
"""
import os

_DISABLED = os.environ.get("GERMCODIM_NO_NUMBA", "").strip().lower() not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError
    import numba
    HAVE_NUMBA = True
except ImportError:
    numba = None
    HAVE_NUMBA = False


def njit(fn=None, **kwargs):
    if fn is None:
        return lambda f: njit(f, **kwargs)
    if not HAVE_NUMBA:
        return fn
    kwargs.setdefault("cache", True)
    return numba.njit(**kwargs)(fn)


def backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"
