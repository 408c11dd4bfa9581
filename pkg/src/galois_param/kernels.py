"""Backend selection for the hot loops.

The compiled ``_speedups`` extension is used when it was built; otherwise the
pure-Python ``_purepy`` module is used.  Setting ``GALOIS_PARAM_PURE=1``
forces the fallback.  ``BACKEND`` names the active choice.
"""

from __future__ import annotations

import os

from . import _purepy

_impl = _purepy
BACKEND = "python"

if os.environ.get("GALOIS_PARAM_PURE", "") not in ("1", "true", "yes"):
    try:
        from . import _speedups as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _purepy

roots_mod_p = _impl.roots_mod_p
closure = _impl.closure
closure_size = _impl.closure_size
ternary_search = _impl.ternary_search

__all__ = ["BACKEND", "roots_mod_p", "closure", "closure_size", "ternary_search"]
