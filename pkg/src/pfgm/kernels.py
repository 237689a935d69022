"""Backend selection for the enumeration kernels.

Prefers the compiled extension (pfgm._core) and falls back to the pure
Python implementation when the extension is missing or when the
PFGM_PURE_PYTHON environment variable is set to a non-empty value other
than "0". Both backends implement the same contracts with identical
iteration and accumulation order, so results do not depend on the choice.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("PFGM_PURE_PYTHON", "0") not in ("", "0"):
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _core as _impl  # type: ignore[no-redef]

        BACKEND = "compiled"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

constrained_map_sum = _impl.constrained_map_sum
derivative_subset_sum = _impl.derivative_subset_sum


def backend_name() -> str:
    return BACKEND
