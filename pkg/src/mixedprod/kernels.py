"""Kernel backend selection.

Prefers the compiled extension; falls back to the pure Python module.
Set MIXEDPROD_PURE=1 to force the fallback (used by the benchmark and
the backend-agreement tests).
"""

import os

if os.environ.get("MIXEDPROD_PURE"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
minimal_hitting_sets = _impl.minimal_hitting_sets
rank_int = _impl.rank_int
