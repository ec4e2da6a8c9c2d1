"""Kernel backend selection.

Prefers the compiled extension when it imported cleanly; falls back to the
pure-Python reference otherwise. INVCAYLEY_PURE=1 forces the fallback, which is
useful for benchmarking and for ruling the extension out when debugging.
"""

from __future__ import annotations

import os

from . import _kernels_py

if os.environ.get("INVCAYLEY_PURE") == "1":
    _impl = _kernels_py
    BACKEND = "python"
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _kernels_py
        BACKEND = "python"

involution_scan = _impl.involution_scan
build_adjacency = _impl.build_adjacency
component_labels = _impl.component_labels
girth_from_root = _impl.girth_from_root
