"""Kernel backend selection.

The compiled extension is preferred when present; set VBOPT_PURE_PYTHON=1 to
force the numpy fallback (useful for debugging and for benchmarking the two
against each other).
"""

from __future__ import annotations

import os

if os.environ.get("VBOPT_PURE_PYTHON"):
    from . import kernels as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import kernels as _impl

BACKEND_NAME: str = _impl.BACKEND_NAME
chol_rank_one = _impl.chol_rank_one
constraint_downdate = _impl.constraint_downdate
