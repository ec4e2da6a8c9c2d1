"""Both kernel backends must produce identical arrays for identical inputs."""

import importlib

import numpy as np
import pytest

from invcayley import _kernels_py

cython_kernels = None
try:
    cython_kernels = importlib.import_module("invcayley._kernels")
except ImportError:
    pass

needs_compiled = pytest.mark.skipif(
    cython_kernels is None, reason="compiled backend not built"
)

WINDOWS = [(2, 0), (2, 3), (3, 2), (4, 1), (4, 2), (6, 1), (8, 1), (12, 1), (9, 2)]


@needs_compiled
@pytest.mark.parametrize("n,d", WINDOWS)
@pytest.mark.parametrize("truncated", [False, True])
def test_involution_scan_equivalence(n, d, truncated):
    a = _kernels_py.involution_scan(n, d, truncated)
    b = cython_kernels.involution_scan(n, d, truncated)
    assert a.dtype == b.dtype == np.int64
    assert np.array_equal(a, b)


@needs_compiled
@pytest.mark.parametrize("n,d", WINDOWS)
def test_build_adjacency_equivalence(n, d):
    inv = _kernels_py.involution_scan(n, d, False)
    a = _kernels_py.build_adjacency(n, d, inv)
    b = cython_kernels.build_adjacency(n, d, inv)
    assert np.array_equal(a, b)


@needs_compiled
@pytest.mark.parametrize("n,d", WINDOWS)
def test_traversal_equivalence(n, d):
    inv = _kernels_py.involution_scan(n, d, False)
    flat = _kernels_py.build_adjacency(n, d, inv)
    size = n ** (d + 1)
    indptr = np.arange(size + 1, dtype=np.int64) * len(inv)

    labels_a, count_a = _kernels_py.component_labels(indptr, flat)
    labels_b, count_b = cython_kernels.component_labels(indptr, flat)
    assert count_a == count_b
    assert np.array_equal(labels_a, labels_b)

    for root in (0, size // 2, size - 1):
        assert _kernels_py.girth_from_root(
            indptr, flat, root
        ) == cython_kernels.girth_from_root(indptr, flat, root)


def test_backend_selection_env(tmp_path):
    """INVCAYLEY_PURE=1 must force the pure-Python backend in a fresh process."""
    import subprocess
    import sys

    code = "import invcayley; print(invcayley.BACKEND)"
    out = subprocess.run(
        [sys.executable, "-c", code],
        capture_output=True,
        text=True,
        env={"PATH": "/usr/bin:/bin", "INVCAYLEY_PURE": "1"},
    )
    assert out.stdout.strip() == "python"


def test_selected_backend_exports_kernels():
    from invcayley import kernels

    assert kernels.BACKEND in ("cython", "python")
    for name in (
        "involution_scan",
        "build_adjacency",
        "component_labels",
        "girth_from_root",
    ):
        assert callable(getattr(kernels, name))
