# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels, signature-compatible with _kernels_py.

Same arrays out for the same arguments; the test suite asserts byte equality
between the two backends. Keep the semantics in lockstep with _kernels_py.py
when changing either.
"""

import numpy as np

from libc.stdint cimport int64_t


def involution_scan(int64_t n, int64_t d, bint truncated):
    cdef int64_t width = d + 1
    cdef int64_t size = 1
    cdef int64_t i
    for i in range(width):
        size *= n
    cdef int64_t top = (width - 1) if truncated else (2 * width - 2)
    out_arr = np.empty(size, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    digit_buf = np.empty(width, dtype=np.int64)
    cdef int64_t[::1] a = digit_buf
    cdef int64_t v, tmp, k, j, lo, hi, acc
    cdef int64_t cnt = 0
    cdef bint ok
    for v in range(size):
        tmp = v
        for i in range(width):
            a[i] = tmp % n
            tmp //= n
        if (a[0] * a[0]) % n != 1:
            continue
        ok = True
        for k in range(1, top + 1):
            lo = k - width + 1
            if lo < 0:
                lo = 0
            hi = k if k < width - 1 else width - 1
            acc = 0
            for j in range(lo, hi + 1):
                acc += a[j] * a[k - j]
            if acc % n != 0:
                ok = False
                break
        if ok:
            out[cnt] = v
            cnt += 1
    return out_arr[:cnt].copy()


def build_adjacency(int64_t n, int64_t d, inv_idx):
    cdef int64_t width = d + 1
    cdef int64_t size = 1
    cdef int64_t i
    for i in range(width):
        size *= n
    inv_arr = np.ascontiguousarray(inv_idx, dtype=np.int64)
    cdef int64_t[::1] invs = inv_arr
    cdef int64_t k = invs.shape[0]
    out_arr = np.empty(size * k, dtype=np.int64)
    cdef int64_t[::1] out = out_arr
    ud_arr = np.empty((k, width), dtype=np.int64)
    cdef int64_t[:, ::1] ud = ud_arr
    digit_buf = np.empty(width, dtype=np.int64)
    cdef int64_t[::1] a = digit_buf
    cdef int64_t v, c, tmp, w, pw, key, pos
    for c in range(k):
        tmp = invs[c]
        for i in range(width):
            ud[c, i] = tmp % n
            tmp //= n
    for v in range(size):
        tmp = v
        for i in range(width):
            a[i] = tmp % n
            tmp //= n
        for c in range(k):
            w = 0
            pw = 1
            for i in range(width):
                w += ((a[i] + ud[c, i]) % n) * pw
                pw *= n
            out[v * k + c] = w
        # insertion sort the row; k is small (the regular degree)
        for c in range(1, k):
            key = out[v * k + c]
            pos = c - 1
            while pos >= 0 and out[v * k + pos] > key:
                out[v * k + pos + 1] = out[v * k + pos]
                pos -= 1
            out[v * k + pos + 1] = key
    return out_arr


def component_labels(indptr, indices):
    ptr_arr = np.ascontiguousarray(indptr, dtype=np.int64)
    nbr_arr = np.ascontiguousarray(indices, dtype=np.int64)
    cdef int64_t[::1] ptr = ptr_arr
    cdef int64_t[::1] nbr = nbr_arr
    cdef int64_t nv = ptr.shape[0] - 1
    labels_arr = np.full(nv, -1, dtype=np.int64)
    cdef int64_t[::1] labels = labels_arr
    queue_arr = np.empty(nv if nv > 0 else 1, dtype=np.int64)
    cdef int64_t[::1] queue = queue_arr
    cdef int64_t count = 0
    cdef int64_t start, headq, tailq, v, e, w
    for start in range(nv):
        if labels[start] >= 0:
            continue
        labels[start] = count
        queue[0] = start
        headq = 0
        tailq = 1
        while headq < tailq:
            v = queue[headq]
            headq += 1
            for e in range(ptr[v], ptr[v + 1]):
                w = nbr[e]
                if labels[w] < 0:
                    labels[w] = count
                    queue[tailq] = w
                    tailq += 1
        count += 1
    return labels_arr, int(count)


def girth_from_root(indptr, indices, int64_t root):
    ptr_arr = np.ascontiguousarray(indptr, dtype=np.int64)
    nbr_arr = np.ascontiguousarray(indices, dtype=np.int64)
    cdef int64_t[::1] ptr = ptr_arr
    cdef int64_t[::1] nbr = nbr_arr
    cdef int64_t nv = ptr.shape[0] - 1
    dist_arr = np.full(nv, -1, dtype=np.int64)
    parent_arr = np.full(nv, -1, dtype=np.int64)
    queue_arr = np.empty(nv if nv > 0 else 1, dtype=np.int64)
    cdef int64_t[::1] dist = dist_arr
    cdef int64_t[::1] parent = parent_arr
    cdef int64_t[::1] queue = queue_arr
    cdef int64_t headq = 0, tailq = 1
    cdef int64_t best = 0
    cdef int64_t v, dv, e, w, cand
    dist[root] = 0
    queue[0] = root
    while headq < tailq:
        v = queue[headq]
        headq += 1
        dv = dist[v]
        if best != 0 and 2 * dv >= best:
            break
        for e in range(ptr[v], ptr[v + 1]):
            w = nbr[e]
            if dist[w] < 0:
                dist[w] = dv + 1
                parent[w] = v
                queue[tailq] = w
                tailq += 1
            elif parent[v] != w:
                cand = dv + dist[w] + 1
                if best == 0 or cand < best:
                    best = cand
    return int(best)
