"""Compare the compiled kernels against the pure-Python reference.

Run from the repository root after an editable install:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --n 6 --degree 4 --repeat 5

Reports best-of-N wall time per kernel and the speedup. Exits nonzero if the
two backends disagree on any output, so this doubles as a slow equivalence
check on sizes the unit tests do not reach.
"""

from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from invcayley import _kernels_py

try:
    from invcayley import _kernels
except ImportError:
    _kernels = None


def best_of(repeat, fn, *args):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench(name, repeat, py_fn, cy_fn, *args):
    t_py, out_py = best_of(repeat, py_fn, *args)
    if cy_fn is None:
        print(f"{name:<22} python {t_py * 1e3:9.2f} ms   (no compiled backend)")
        return True
    t_cy, out_cy = best_of(repeat, cy_fn, *args)
    if isinstance(out_py, tuple):
        same = all(np.array_equal(a, b) for a, b in zip(out_py, out_cy))
    elif isinstance(out_py, np.ndarray):
        same = np.array_equal(out_py, out_cy)
    else:
        same = out_py == out_cy
    flag = "" if same else "   MISMATCH"
    print(
        f"{name:<22} python {t_py * 1e3:9.2f} ms   cython {t_cy * 1e3:9.2f} ms"
        f"   speedup {t_py / t_cy:6.1f}x{flag}"
    )
    return same


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--degree", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    n, d, repeat = args.n, args.degree, args.repeat
    size = n ** (d + 1)
    print(f"window n={n} d={d}: {size} vertices")

    cy = _kernels
    ok = True
    ok &= bench(
        "involution_scan",
        repeat,
        _kernels_py.involution_scan,
        cy.involution_scan if cy else None,
        n,
        d,
        False,
    )
    inv = _kernels_py.involution_scan(n, d, False)
    print(f"  {len(inv)} involutions")
    ok &= bench(
        "build_adjacency",
        repeat,
        _kernels_py.build_adjacency,
        cy.build_adjacency if cy else None,
        n,
        d,
        inv,
    )
    flat = _kernels_py.build_adjacency(n, d, inv)
    indptr = np.arange(size + 1, dtype=np.int64) * len(inv)
    ok &= bench(
        "component_labels",
        repeat,
        _kernels_py.component_labels,
        cy.component_labels if cy else None,
        indptr,
        flat,
    )
    ok &= bench(
        "girth_from_root",
        repeat,
        _kernels_py.girth_from_root,
        cy.girth_from_root if cy else None,
        indptr,
        flat,
        0,
    )
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
