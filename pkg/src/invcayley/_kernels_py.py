"""Pure-Python kernels: the reference implementations.

The compiled module (_kernels.pyx) mirrors these signatures exactly; tests
assert that both backends produce identical arrays. Everything here sticks to
int64 and keeps results deterministic (ascending scans, per-row sorted
adjacency, BFS in index order).
"""

from __future__ import annotations

import numpy as np


def involution_scan(n: int, d: int, truncated: bool) -> np.ndarray:
    """Indices of elements whose square is 1, ascending.

    truncated=False squares exactly in Z_n[x] (degree up to 2d);
    truncated=True squares in the quotient ring (terms beyond x^d dropped).
    """
    width = d + 1
    size = n**width
    powers = n ** np.arange(width, dtype=np.int64)
    digits = (np.arange(size, dtype=np.int64)[:, None] // powers[None, :]) % n
    ok = (digits[:, 0] * digits[:, 0]) % n == 1
    top = width - 1 if truncated else 2 * width - 2
    for k in range(1, top + 1):
        acc = np.zeros(size, dtype=np.int64)
        for j in range(max(0, k - width + 1), min(k, width - 1) + 1):
            acc += digits[:, j] * digits[:, k - j]
        ok &= acc % n == 0
    return np.nonzero(ok)[0].astype(np.int64)


def build_adjacency(n: int, d: int, inv_idx: np.ndarray) -> np.ndarray:
    """Flat adjacency of the Cayley graph, rows of length len(inv_idx), sorted.

    Vertex v is joined to v + u (coefficientwise mod n) for each involution
    index u; translation of the connection set, never an all-pairs scan.
    """
    width = d + 1
    size = n**width
    powers = n ** np.arange(width, dtype=np.int64)
    digits = (np.arange(size, dtype=np.int64)[:, None] // powers[None, :]) % n
    k = len(inv_idx)
    out = np.empty((size, k), dtype=np.int64)
    for col in range(k):
        u_digits = (int(inv_idx[col]) // powers) % n
        out[:, col] = (((digits + u_digits) % n) * powers).sum(axis=1)
    out.sort(axis=1)
    return out.reshape(-1)


def component_labels(indptr: np.ndarray, indices: np.ndarray) -> tuple[np.ndarray, int]:
    """BFS labeling over CSR adjacency; labels assigned in root index order."""
    nv = len(indptr) - 1
    ptr = indptr.tolist()
    nbr = indices.tolist()
    labels = [-1] * nv
    count = 0
    for start in range(nv):
        if labels[start] >= 0:
            continue
        labels[start] = count
        queue = [start]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for w in nbr[ptr[v] : ptr[v + 1]]:
                if labels[w] < 0:
                    labels[w] = count
                    queue.append(w)
        count += 1
    return np.array(labels, dtype=np.int64), count


def girth_from_root(indptr: np.ndarray, indices: np.ndarray, root: int) -> int:
    """Length of the shortest cycle detectable by BFS from root; 0 if none.

    Every reported value is the length of a closed walk containing a cycle, so
    it is an upper bound that is exact when the root lies on a shortest cycle.
    """
    nv = len(indptr) - 1
    ptr = indptr.tolist()
    nbr = indices.tolist()
    dist = [-1] * nv
    parent = [-1] * nv
    dist[root] = 0
    queue = [root]
    head = 0
    best = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        dv = dist[v]
        if best and 2 * dv >= best:
            break
        for w in nbr[ptr[v] : ptr[v + 1]]:
            if dist[w] < 0:
                dist[w] = dv + 1
                parent[w] = v
                queue.append(w)
            elif parent[v] != w:
                cand = dv + dist[w] + 1
                if best == 0 or cand < best:
                    best = cand
    return best
