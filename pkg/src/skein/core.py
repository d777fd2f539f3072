"""Kernel selection: compiled extension when available, pure Python otherwise.

Set ``SKEIN_PURE=1`` to force the pure-Python kernels (used by the benchmark
and by tests that compare the two backends).
"""

from __future__ import annotations

import os

if os.environ.get("SKEIN_PURE"):
    from . import _core_py as _impl

    BACKEND = "pure"
else:
    try:
        from . import _core_c as _impl  # type: ignore[attr-defined]

        BACKEND = "compiled"
    except ImportError:
        from . import _core_py as _impl

        BACKEND = "pure"

canon_key = _impl.canon_key
state_circle_counts = _impl.state_circle_counts


def backend_name() -> str:
    return BACKEND
