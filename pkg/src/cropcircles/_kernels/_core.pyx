# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled persistence kernels.

Mirror of pykernels.rips_pairs: union-find sweep for dimension 0 and a
GF(2) low-pivot column reduction for dimension 1, with triangles streamed
per edge instead of materialized. Columns are kept as ascending int arrays
and added by sorted symmetric-difference merges.
"""

import numpy as np

cimport numpy as cnp
from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memcpy

cnp.import_array()

BACKEND_NAME = "compiled"


cdef inline int _find(int* parent, int a) noexcept:
    cdef int root = a
    cdef int nxt
    while parent[root] != root:
        root = parent[root]
    while parent[a] != root:
        nxt = parent[a]
        parent[a] = root
        a = nxt
    return root


cdef inline Py_ssize_t _symdiff(int* a, Py_ssize_t alen,
                                int* b, Py_ssize_t blen,
                                int* out) noexcept:
    cdef Py_ssize_t i = 0, j = 0, k = 0
    while i < alen and j < blen:
        if a[i] < b[j]:
            out[k] = a[i]; k += 1; i += 1
        elif a[i] > b[j]:
            out[k] = b[j]; k += 1; j += 1
        else:
            i += 1; j += 1
    while i < alen:
        out[k] = a[i]; k += 1; i += 1
    while j < blen:
        out[k] = b[j]; k += 1; j += 1
    return k


def rips_pairs(int n,
               int[::1] edges_i not None,
               int[::1] edges_j not None,
               double[::1] edges_v not None,
               int[:, ::1] rank not None):
    """Same contract as pykernels.rips_pairs."""
    cdef Py_ssize_t m = edges_v.shape[0]
    cdef Py_ssize_t r, c, idx, wlen, need, n_stored = 0
    cdef int a, b, ra, rb, rac, rbc, low, t
    cdef double v, birth
    cdef Py_ssize_t h0_count = 0, h1_count = 0, h1_cap = 64

    cdef int* parent = NULL
    cdef int* usize = NULL
    cdef unsigned char* cycle = NULL
    cdef Py_ssize_t* pivot = NULL
    cdef int** col_data = NULL
    cdef Py_ssize_t* col_len = NULL
    cdef int* work = NULL
    cdef int* tmp = NULL
    cdef int* swap_ptr = NULL
    cdef double* h0_buf = NULL
    cdef double* h1_b = NULL
    cdef double* h1_d = NULL
    cdef Py_ssize_t work_cap = 256, tmp_cap = 256, swap_cap
    cdef Py_ssize_t n_components = 0
    cdef const int* row_a
    cdef const int* row_b

    parent = <int*>malloc(n * sizeof(int))
    usize = <int*>malloc(n * sizeof(int))
    if m > 0:
        cycle = <unsigned char*>malloc(m)
        pivot = <Py_ssize_t*>malloc(m * sizeof(Py_ssize_t))
        col_data = <int**>malloc(m * sizeof(int*))
        col_len = <Py_ssize_t*>malloc(m * sizeof(Py_ssize_t))
        h0_buf = <double*>malloc(m * sizeof(double))
    work = <int*>malloc(work_cap * sizeof(int))
    tmp = <int*>malloc(tmp_cap * sizeof(int))
    h1_b = <double*>malloc(h1_cap * sizeof(double))
    h1_d = <double*>malloc(h1_cap * sizeof(double))
    if (parent == NULL or usize == NULL or work == NULL or tmp == NULL
            or h1_b == NULL or h1_d == NULL
            or (m > 0 and (cycle == NULL or pivot == NULL or col_data == NULL
                           or col_len == NULL or h0_buf == NULL))):
        free(parent); free(usize); free(cycle); free(pivot)
        free(col_data); free(col_len); free(work); free(tmp)
        free(h0_buf); free(h1_b); free(h1_d)
        raise MemoryError()

    try:
        for c in range(n):
            parent[c] = <int>c
            usize[c] = 1
        for r in range(m):
            cycle[r] = 0
            pivot[r] = -1
            col_data[r] = NULL

        # dimension 0: Kruskal-style sweep, merges record deaths
        for r in range(m):
            ra = _find(parent, edges_i[r])
            rb = _find(parent, edges_j[r])
            if ra == rb:
                cycle[r] = 1
                continue
            if usize[ra] < usize[rb]:
                t = ra; ra = rb; rb = t
            parent[rb] = ra
            usize[ra] += usize[rb]
            v = edges_v[r]
            if v > 0.0:
                h0_buf[h0_count] = v
                h0_count += 1
        for c in range(n):
            if _find(parent, <int>c) == <int>c:
                n_components += 1

        # dimension 1: reduce triangle columns in filtration order
        for r in range(m):
            a = edges_i[r]
            b = edges_j[r]
            v = edges_v[r]
            row_a = &rank[a, 0]
            row_b = &rank[b, 0]
            for c in range(n):
                rac = row_a[c]
                if rac >= r:
                    continue
                rbc = row_b[c]
                if rbc >= r:
                    continue
                # initial column, ascending; rac != rbc and both < r
                if rac < rbc:
                    work[0] = rac; work[1] = rbc
                else:
                    work[0] = rbc; work[1] = rac
                work[2] = <int>r
                wlen = 3
                while wlen > 0:
                    low = work[wlen - 1]
                    idx = pivot[low]
                    if idx < 0:
                        pivot[low] = n_stored
                        col_data[n_stored] = <int*>malloc(wlen * sizeof(int))
                        if col_data[n_stored] == NULL:
                            raise MemoryError()
                        memcpy(col_data[n_stored], work, wlen * sizeof(int))
                        col_len[n_stored] = wlen
                        n_stored += 1
                        birth = edges_v[low]
                        if v > birth:
                            if h1_count == h1_cap:
                                h1_cap *= 2
                                h1_b = <double*>realloc(h1_b, h1_cap * sizeof(double))
                                h1_d = <double*>realloc(h1_d, h1_cap * sizeof(double))
                                if h1_b == NULL or h1_d == NULL:
                                    raise MemoryError()
                            h1_b[h1_count] = birth
                            h1_d[h1_count] = v
                            h1_count += 1
                        break
                    need = wlen + col_len[idx]
                    if tmp_cap < need:
                        while tmp_cap < need:
                            tmp_cap *= 2
                        tmp = <int*>realloc(tmp, tmp_cap * sizeof(int))
                        if tmp == NULL:
                            raise MemoryError()
                    wlen = _symdiff(work, wlen, col_data[idx], col_len[idx], tmp)
                    swap_ptr = work; work = tmp; tmp = swap_ptr
                    swap_cap = work_cap; work_cap = tmp_cap; tmp_cap = swap_cap

        h0 = np.empty(h0_count, dtype=np.float64)
        for r in range(h0_count):
            h0[r] = h0_buf[r]
        births = np.empty(h1_count, dtype=np.float64)
        deaths = np.empty(h1_count, dtype=np.float64)
        for r in range(h1_count):
            births[r] = h1_b[r]
            deaths[r] = h1_d[r]
        essential = []
        for r in range(m):
            if cycle[r] and pivot[r] < 0:
                essential.append(edges_v[r])
        return (
            h0,
            int(n_components),
            births,
            deaths,
            np.asarray(essential, dtype=np.float64),
        )
    finally:
        for idx in range(n_stored):
            free(col_data[idx])
        free(parent); free(usize); free(cycle); free(pivot)
        free(col_data); free(col_len); free(work); free(tmp)
        free(h0_buf); free(h1_b); free(h1_d)
