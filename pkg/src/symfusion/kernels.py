"""Backend selection for the hot-loop kernels.

The compiled extension is preferred when it imported cleanly; setting the
environment variable ``SYMFUSION_PURE_PYTHON=1`` forces the pure-Python
fallback (useful for benchmarking and as a safety hatch on platforms
without a compiler).
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("SYMFUSION_PURE_PYTHON"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels_cy as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND = _impl.BACKEND

compose = _impl.compose
ga_mul = _impl.ga_mul
sparse_mm = _impl.sparse_mm
zpoly_add = _impl.zpoly_add
zpoly_scale = _impl.zpoly_scale
zpoly_scale_linear = _impl.zpoly_scale_linear
bareiss_rank = _impl.bareiss_rank
frac_rref = _impl.frac_rref
