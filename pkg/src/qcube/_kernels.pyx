# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled enumeration kernels; see _kernels_py.py for the contract."""

from libc.stdlib cimport free, malloc

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef unsigned long long* _to_array(object seq, Py_ssize_t n) except NULL:
    cdef unsigned long long* arr = <unsigned long long*> malloc(n * sizeof(unsigned long long))
    if arr == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        arr[i] = seq[i]
    return arr


def span_weight_histogram(rows, int nbits):
    """Hamming-weight histogram over the XOR span of `rows`."""
    cdef Py_ssize_t k = len(rows)
    if k > 30:
        raise ValueError("span enumeration limited to 30 generators")
    cdef unsigned long long* gen = _to_array(rows, k) if k else NULL
    cdef unsigned long long* hist = <unsigned long long*> malloc((nbits + 1) * sizeof(unsigned long long))
    if hist == NULL:
        free(gen)
        raise MemoryError()
    cdef Py_ssize_t w
    for w in range(nbits + 1):
        hist[w] = 0
    cdef unsigned long long cur = 0
    cdef unsigned long long i, total = 1ULL << k
    hist[0] = 1
    with nogil:
        for i in range(1, total):
            cur ^= gen[__builtin_ctzll(i)]
            hist[__builtin_popcountll(cur)] += 1
    out = [hist[w] for w in range(nbits + 1)]
    free(gen)
    free(hist)
    return out


def span_mp_histogram(rows, unsigned long long mask, int nbits):
    """Joint (m, p) histogram over the XOR span of `rows`."""
    cdef Py_ssize_t k = len(rows)
    if k > 30:
        raise ValueError("span enumeration limited to 30 generators")
    cdef int pmax = __builtin_popcountll(mask)
    cdef Py_ssize_t ncells = (nbits + 1) * (pmax + 1)
    cdef unsigned long long* gen = _to_array(rows, k) if k else NULL
    cdef unsigned long long* hist = <unsigned long long*> malloc(ncells * sizeof(unsigned long long))
    if hist == NULL:
        free(gen)
        raise MemoryError()
    cdef Py_ssize_t cell
    for cell in range(ncells):
        hist[cell] = 0
    cdef unsigned long long cur = 0
    cdef unsigned long long i, total = 1ULL << k
    cdef int p
    hist[0] = 1
    with nogil:
        for i in range(1, total):
            cur ^= gen[__builtin_ctzll(i)]
            p = __builtin_popcountll(cur & mask)
            hist[(__builtin_popcountll(cur) - p) * (pmax + 1) + p] += 1
    out = [[hist[m * (pmax + 1) + p] for p in range(pmax + 1)] for m in range(nbits + 1)]
    free(gen)
    free(hist)
    return out


def coset_minima(words, coset):
    """For each word w, the minimum of w ^ c over all c in `coset`."""
    cdef Py_ssize_t nw = len(words)
    cdef Py_ssize_t nc = len(coset)
    if nc == 0:
        raise ValueError("coset must contain at least the zero word")
    cdef unsigned long long* warr = _to_array(words, nw) if nw else NULL
    cdef unsigned long long* carr = _to_array(coset, nc)
    cdef unsigned long long* out = <unsigned long long*> malloc(nw * sizeof(unsigned long long))
    if out == NULL and nw:
        free(warr)
        free(carr)
        raise MemoryError()
    cdef Py_ssize_t i, j
    cdef unsigned long long best, x
    with nogil:
        for i in range(nw):
            best = warr[i] ^ carr[0]
            for j in range(1, nc):
                x = warr[i] ^ carr[j]
                if x < best:
                    best = x
            out[i] = best
    res = [out[i] for i in range(nw)]
    free(warr)
    free(carr)
    free(out)
    return res
