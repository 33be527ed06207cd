"""Backend selection for the compiled kernels.

Set ``HUE_DISABLE_NUMBA=1`` to force the pure-numpy code paths, e.g. for
debugging or on platforms without a working numba. ``HUE_THREADS`` caps
the numba thread pool used by parallel kernels.
"""

from __future__ import annotations

import os

_FALSY = {"", "0", "false", "no", "off"}


def _numba_requested() -> bool:
    return os.environ.get("HUE_DISABLE_NUMBA", "").strip().lower() in _FALSY


try:
    import numba as _numba

    HAVE_NUMBA = True
    prange = _numba.prange
    if "NUMBA_THREADING_LAYER" not in os.environ:
        # the bundled TBB is often too old; workqueue is always present
        _numba.config.THREADING_LAYER = "workqueue"
except ImportError:  # pragma: no cover - numba is a hard dependency in practice
    _numba = None
    HAVE_NUMBA = False
    prange = range


def numba_enabled() -> bool:
    return HAVE_NUMBA and _numba_requested()


def njit(*args, **kwargs):
    """``numba.njit`` when available, otherwise an identity decorator."""
    if HAVE_NUMBA:
        return _numba.njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]
    return lambda f: f


def thread_cap() -> int | None:
    raw = os.environ.get("HUE_THREADS")
    if not raw:
        return None
    try:
        return max(1, int(raw))
    except ValueError:
        return None


def apply_thread_cap() -> None:
    cap = thread_cap()
    if cap is not None and HAVE_NUMBA:
        _numba.set_num_threads(min(cap, _numba.config.NUMBA_NUM_THREADS))
