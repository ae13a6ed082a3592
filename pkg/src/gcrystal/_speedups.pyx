# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled arithmetic kernels (same API as gcrystal._kernel_py).

Requires every modulus p^N to fit in 62 bits; the selector in
gcrystal.kernel falls back to the pure-Python kernel otherwise.
"""

from libc.stdlib cimport malloc, free

cdef extern from *:
    ctypedef long long lint128 "__int128"

IMPLEMENTATION = "cython"

MAX_MODULUS = 1 << 62


cdef long long* _to_c(object seq, Py_ssize_t n) except NULL:
    cdef long long* buf = <long long*> malloc(n * sizeof(long long))
    if buf == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        buf[i] = seq[i]
    return buf


def cell_mul(x, y, Py_ssize_t s, red, long long pn):
    cdef lint128 conv[64]
    cdef Py_ssize_t i, j, t, u
    cdef long long xi
    if s == 1:
        return ((<lint128> (<long long> x[0]) * <long long> y[0]) % pn,)
    for t in range(2 * s - 1):
        conv[t] = 0
    for i in range(s):
        xi = x[i]
        if xi:
            for j in range(s):
                conv[i + j] += (<lint128> xi * <long long> y[j]) % pn
    cdef long long c
    for t in range(2 * s - 2, s - 1, -1):
        c = <long long> (conv[t] % pn)
        if c:
            for u in range(s):
                conv[u] += (<lint128> c * <long long> red[(t - s) * s + u]) % pn
            conv[t] = 0
    return tuple((<long long> (conv[u] % pn)) for u in range(s))


def mat_mul(a, b, Py_ssize_t n, Py_ssize_t k, Py_ssize_t m, Py_ssize_t s,
            red, long long pn):
    cdef Py_ssize_t na = n * k * s, nb = k * m * s, nr = (s - 1) * s
    cdef long long* ca = _to_c(a, na)
    cdef long long* cb
    cdef long long* cr = NULL
    cdef list out = [0] * (n * m * s)
    cdef lint128 conv[64]
    cdef lint128 acc
    cdef Py_ssize_t i, j, t, u, v, pa, pb, pos
    cdef long long xu, c
    try:
        cb = _to_c(b, nb)
    except BaseException:
        free(ca)
        raise
    try:
        if s > 1:
            cr = _to_c(red, nr)
        if s == 1:
            for i in range(n):
                for j in range(m):
                    acc = 0
                    for t in range(k):
                        acc += (<lint128> ca[i * k + t] * cb[t * m + j]) % pn
                    out[i * m + j] = <long long> (acc % pn)
        else:
            for i in range(n):
                for j in range(m):
                    for u in range(2 * s - 1):
                        conv[u] = 0
                    for t in range(k):
                        pa = (i * k + t) * s
                        pb = (t * m + j) * s
                        for u in range(s):
                            xu = ca[pa + u]
                            if xu:
                                for v in range(s):
                                    conv[u + v] += (<lint128> xu * cb[pb + v]) % pn
                    for t in range(2 * s - 2, s - 1, -1):
                        c = <long long> (conv[t] % pn)
                        if c:
                            for u in range(s):
                                conv[u] += (<lint128> c * cr[(t - s) * s + u]) % pn
                            conv[t] = 0
                    pos = (i * m + j) * s
                    for u in range(s):
                        out[pos + u] = <long long> (conv[u] % pn)
        return out
    finally:
        free(ca)
        free(cb)
        if cr != NULL:
            free(cr)


def mat_add(a, b, long long pn):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = (<long long> a[i] + <long long> b[i]) % pn
    return out


def mat_sub(a, b, long long pn):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    cdef long long v
    for i in range(n):
        v = (<long long> a[i] - <long long> b[i]) % pn
        if v < 0:
            v += pn
        out[i] = v
    return out


def mat_neg(a, long long pn):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    cdef long long v
    for i in range(n):
        v = (-<long long> a[i]) % pn
        if v < 0:
            v += pn
        out[i] = v
    return out


def mat_cellmap(a, Py_ssize_t ncells, Py_ssize_t s_in, Py_ssize_t s_out,
                fm, long long pn):
    cdef long long* ca = _to_c(a, ncells * s_in)
    cdef long long* cf
    cdef list out = [0] * (ncells * s_out)
    cdef Py_ssize_t c, i, j
    cdef lint128 acc
    try:
        cf = _to_c(fm, s_out * s_in)
    except BaseException:
        free(ca)
        raise
    try:
        for c in range(ncells):
            for i in range(s_out):
                acc = 0
                for j in range(s_in):
                    acc += (<lint128> cf[i * s_in + j] * ca[c * s_in + j]) % pn
                out[c * s_out + i] = <long long> (acc % pn)
        return out
    finally:
        free(ca)
        free(cf)
