"""Kernel backend selection.

Hot numeric kernels ship in two flavours: numba-compiled loops and
vectorized numpy. ``DLOTRACK_NUMBA=0`` forces the numpy path; anything
else uses numba when it imports cleanly. ``DLOTRACK_THREADS`` caps the
numba thread pool (the numpy path has no internal threading to cap).
"""

from __future__ import annotations

import os


def _numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


NUMBA_AVAILABLE = _numba_available()
NUMBA_ENABLED = NUMBA_AVAILABLE and os.environ.get("DLOTRACK_NUMBA", "").strip() != "0"

if NUMBA_ENABLED:
    import numba

    _cap = os.environ.get("DLOTRACK_THREADS", "").strip()
    if _cap:
        numba.set_num_threads(max(1, min(int(_cap), numba.config.NUMBA_NUM_THREADS)))


def backend_name() -> str:
    """Name of the active kernel backend: ``"numba"`` or ``"numpy"``."""
    return "numba" if NUMBA_ENABLED else "numpy"
