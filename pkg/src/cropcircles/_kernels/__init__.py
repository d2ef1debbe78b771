"""Kernel backend selection.

The compiled Cython module is preferred when it built; otherwise the pure
NumPy/Python implementation takes over with the same interface. Set
CROPCIRCLES_KERNELS=python to force the fallback (the benchmark uses this
to time both paths).
"""

import os

from . import pykernels

_forced = os.environ.get("CROPCIRCLES_KERNELS", "").strip().lower()

_core = None
if _forced != "python":
    try:
        from . import _core
    except ImportError:
        _core = None
        if _forced in ("c", "compiled"):
            raise ImportError(
                "CROPCIRCLES_KERNELS requested the compiled backend, "
                "but cropcircles._kernels._core is not built"
            )

if _core is not None:
    _impl = _core
else:
    _impl = pykernels

BACKEND = _impl.BACKEND_NAME
rips_pairs = _impl.rips_pairs


def available_backends():
    """name -> module for every importable backend."""
    out = {"python": pykernels}
    if _core is not None:
        out["compiled"] = _core
    else:
        try:
            from . import _core as compiled  # may exist even when forced off

            out["compiled"] = compiled
        except ImportError:
            pass
    return out
