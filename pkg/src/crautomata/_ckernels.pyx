# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled search kernels; see ``_pykernels`` for the reference semantics."""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

DEF MAX_CV_STATES = 32
DEF MAX_MASK_STATES = 63


cdef int *_pack_table(table, int n) except NULL:
    cdef Py_ssize_t m = len(table)
    cdef int *flat = <int *> malloc(m * n * sizeof(int))
    if flat == NULL:
        raise MemoryError()
    cdef Py_ssize_t a, q
    for a in range(m):
        row = table[a]
        for q in range(n):
            flat[a * n + q] = row[q]
    return flat


cdef inline int _defect(uint64_t code, int n) nogil:
    cdef int d = 0, q
    for q in range(n):
        if not (code >> (2 * q)) & 3:
            d += 1
    return d


cdef inline uint64_t _step(uint64_t code, const int *row, int n, int *acc) nogil:
    cdef int q, p, c
    cdef uint64_t out = 0
    for p in range(n):
        acc[p] = 0
    for q in range(n):
        c = (code >> (2 * q)) & 3
        if c:
            acc[row[q]] += c
    for p in range(n):
        if acc[p] > 1:
            out |= (<uint64_t> 2) << (2 * p)
        elif acc[p] == 1:
            out |= (<uint64_t> 1) << (2 * p)
    return out


def cv_identity(int n):
    cdef uint64_t code = 0
    cdef int q
    for q in range(n):
        code |= (<uint64_t> 1) << (2 * q)
    return code


def cv_defect(uint64_t code, int n):
    return _defect(code, n)


def cv_step(uint64_t code, row, int n):
    if n > MAX_CV_STATES:
        raise OverflowError("count vectors are limited to 32 states")
    cdef int r[MAX_CV_STATES]
    cdef int acc[MAX_CV_STATES]
    cdef int q
    for q in range(n):
        r[q] = row[q]
    return _step(code, r, n, acc)


def explore(table, int n, queue, dict parent, int cap):
    if n > MAX_CV_STATES:
        raise OverflowError("count vectors are limited to 32 states")
    cdef int m = len(table)
    cdef int *flat = _pack_table(table, n)
    cdef int acc[MAX_CV_STATES]
    cdef list work = list(queue)
    cdef list discovered = []
    cdef list suspended = []
    cdef Py_ssize_t head = 0
    cdef uint64_t code, nxt
    cdef int a
    try:
        while head < len(work):
            code = work[head]
            head += 1
            for a in range(m):
                nxt = _step(code, flat + a * n, n, acc)
                key = nxt
                if key in parent:
                    continue
                parent[key] = (code, a)
                discovered.append(key)
                if _defect(nxt, n) <= cap:
                    work.append(key)
                else:
                    suspended.append(key)
    finally:
        free(flat)
    return discovered, suspended


def image_mask(uint64_t mask, row):
    cdef uint64_t out = 0
    cdef int q = 0
    while mask:
        if mask & 1:
            out |= (<uint64_t> 1) << <int> row[q]
        mask >>= 1
        q += 1
    return out


def subset_closure(table, int n, uint64_t start):
    if n > MAX_MASK_STATES:
        raise OverflowError("subset masks are limited to 63 states")
    cdef int m = len(table)
    cdef int *flat = _pack_table(table, n)
    cdef dict parent = {start: (-1, -1)}
    cdef list work = [start]
    cdef Py_ssize_t head = 0
    cdef uint64_t mask, rest, out
    cdef int a, q
    cdef const int *row
    try:
        while head < len(work):
            mask = work[head]
            head += 1
            for a in range(m):
                row = flat + a * n
                out = 0
                rest = mask
                q = 0
                while rest:
                    if rest & 1:
                        out |= (<uint64_t> 1) << row[q]
                    rest >>= 1
                    q += 1
                key = out
                if key not in parent:
                    parent[key] = (mask, a)
                    work.append(key)
    finally:
        free(flat)
    return parent
