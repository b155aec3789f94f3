# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled weight-ordered logical-operator search.

Hot kernel behind the brute-force distance oracle; the pure-Python twin
lives in ``_distance_py`` and must return identical values.  Weight classes
are scanned in ascending order, enumerating each class with Gosper's hack.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


def min_logical_weight(n, stab_cols, excl_rows, excl_pivots):
    """See ``hypermap_codes._distance_py.min_logical_weight``."""
    cdef int nn = n
    if nn <= 0:
        return 0
    if nn > 62:
        raise ValueError("compiled kernel supports at most 62 columns")

    cdef int n_excl = len(excl_rows)
    cdef uint64_t *cols = <uint64_t *> malloc(nn * sizeof(uint64_t))
    cdef uint64_t *rows = <uint64_t *> malloc((n_excl or 1) * sizeof(uint64_t))
    cdef int *pivots = <int *> malloc((n_excl or 1) * sizeof(int))
    if cols == NULL or rows == NULL or pivots == NULL:
        free(cols); free(rows); free(pivots)
        raise MemoryError()

    cdef int idx
    cdef int result
    try:
        for idx in range(nn):
            cols[idx] = stab_cols[idx]
        for idx in range(n_excl):
            rows[idx] = excl_rows[idx]
            pivots[idx] = excl_pivots[idx]
        with nogil:
            result = _search(nn, cols, n_excl, rows, pivots)
    finally:
        free(cols)
        free(rows)
        free(pivots)
    return result


cdef int _search(int n, uint64_t *cols, int n_excl, uint64_t *rows,
                 int *pivots) nogil:
    cdef int w, r
    cdef uint64_t mask, last, m, syndrome, v, c, hi
    for w in range(1, n + 1):
        mask = (<uint64_t> 1 << w) - 1
        last = mask << (n - w)
        while True:
            syndrome = 0
            m = mask
            while m:
                syndrome ^= cols[__builtin_ctzll(m)]
                m &= m - 1
            if syndrome == 0:
                v = mask
                for r in range(n_excl):
                    if (v >> pivots[r]) & 1:
                        v ^= rows[r]
                if v:
                    return w
            if mask == last:
                break
            # Gosper's hack: next n-bit word with the same popcount.
            c = mask & (~mask + 1)
            hi = mask + c
            mask = hi | (((mask ^ hi) >> 2) >> __builtin_ctzll(c))
    return 0
