"""Optional numba acceleration.

Set ``LWE_GROEBNER_NO_NUMBA=1`` to force the pure-numpy kernels (or when
numba is not installed). The choice is made once, at import time.
"""
import os

try:
    from numba import njit

    NUMBA_INSTALLED = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    NUMBA_INSTALLED = False

NUMBA_DISABLED = os.environ.get("LWE_GROEBNER_NO_NUMBA", "").strip().lower() in ("1", "true", "yes")
USE_NUMBA = NUMBA_INSTALLED and not NUMBA_DISABLED


def optional_njit(*args, **kwargs):
    def decorator(func):
        if NUMBA_INSTALLED:
            return njit(*args, **kwargs)(func)
        return func
    return decorator
