# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled determinant kernels over GF(p) for primes below 2**31.

Same contract as ``_pykernels``: ``det_mod``, ``interpolate_mod`` and
``det_poly_mod``.
"""

from libc.stdlib cimport malloc, free
from libc.stdint cimport uint64_t, int64_t

MAX_FAST_PRIME = 2**31


cdef inline uint64_t _powmod(uint64_t b, uint64_t e, uint64_t p) nogil:
    cdef uint64_t r = 1
    b %= p
    while e:
        if e & 1:
            r = r * b % p
        b = b * b % p
        e >>= 1
    return r


cdef uint64_t _det_c(uint64_t* a, Py_ssize_t n, uint64_t p) nogil:
    # destroys a
    cdef Py_ssize_t col, piv, r, c
    cdef uint64_t det = 1, pv, inv, f, tmp
    cdef bint neg = 0
    for col in range(n):
        piv = col
        while piv < n and a[piv * n + col] == 0:
            piv += 1
        if piv == n:
            return 0
        if piv != col:
            for c in range(n):
                tmp = a[col * n + c]
                a[col * n + c] = a[piv * n + c]
                a[piv * n + c] = tmp
            neg = not neg
        pv = a[col * n + col]
        det = det * pv % p
        inv = _powmod(pv, p - 2, p)
        for r in range(col + 1, n):
            f = a[r * n + col]
            if f:
                f = f * inv % p
                for c in range(col, n):
                    a[r * n + c] = (a[r * n + c] + (p - f) * a[col * n + c]) % p
    if neg and det:
        det = p - det
    return det


def det_mod(rows, p):
    """Determinant of a square integer matrix modulo the prime ``p``."""
    cdef Py_ssize_t n = len(rows), i, j
    cdef uint64_t P = p
    cdef uint64_t* a
    if n == 0:
        return 1
    a = <uint64_t*> malloc(n * n * sizeof(uint64_t))
    if a == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            row = rows[i]
            for j in range(n):
                a[i * n + j] = <uint64_t> (row[j] % p)
        return int(_det_c(a, n, P))
    finally:
        free(a)


cdef void _interp_c(uint64_t* xs, uint64_t* dd, uint64_t* coeffs, Py_ssize_t n, uint64_t p) nogil:
    cdef Py_ssize_t i, j, k
    cdef uint64_t diff, xi
    for j in range(1, n):
        i = n - 1
        while i >= j:
            diff = (xs[i] + p - xs[i - j]) % p
            dd[i] = (dd[i] + p - dd[i - 1]) % p * _powmod(diff, p - 2, p) % p
            i -= 1
    for k in range(n):
        coeffs[k] = 0
    i = n - 1
    while i >= 0:
        xi = xs[i]
        k = n - 1
        while k > 0:
            coeffs[k] = (coeffs[k - 1] + p - xi * coeffs[k] % p) % p
            k -= 1
        coeffs[0] = (dd[i] + p - xi * coeffs[0] % p) % p
        i -= 1


def interpolate_mod(xs, ys, p):
    """Coefficients (ascending) of the interpolating polynomial over GF(p)."""
    cdef Py_ssize_t n = len(xs), i
    cdef uint64_t P = p
    cdef uint64_t* buf = <uint64_t*> malloc(3 * n * sizeof(uint64_t) + 8)
    if buf == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            buf[i] = <uint64_t> (xs[i] % p)
            buf[n + i] = <uint64_t> (ys[i] % p)
        _interp_c(buf, buf + n, buf + 2 * n, n, P)
        return [int(buf[2 * n + i]) for i in range(n)]
    finally:
        free(buf)


def det_poly_mod(entries, Py_ssize_t n, Py_ssize_t npoints, p):
    """Determinant of an ``n x n`` polynomial matrix over GF(p), recovered
    from its values at ``0 .. npoints - 1``."""
    cdef uint64_t P = p
    cdef Py_ssize_t L = 1, e, c, x, i
    cdef uint64_t acc, X
    cdef uint64_t* coef
    cdef int64_t* lens
    cdef uint64_t* work
    cdef uint64_t* xs
    cdef uint64_t* ys
    cdef uint64_t* out
    if n == 0:
        return [1] + [0] * (npoints - 1)
    for e in range(n * n):
        if len(entries[e]) > L:
            L = len(entries[e])
    coef = <uint64_t*> malloc(n * n * L * sizeof(uint64_t))
    lens = <int64_t*> malloc(n * n * sizeof(int64_t))
    work = <uint64_t*> malloc(n * n * sizeof(uint64_t))
    xs = <uint64_t*> malloc(3 * npoints * sizeof(uint64_t) + 8)
    if coef == NULL or lens == NULL or work == NULL or xs == NULL:
        free(coef); free(lens); free(work); free(xs)
        raise MemoryError()
    ys = xs + npoints
    out = xs + 2 * npoints
    try:
        for e in range(n * n):
            ent = entries[e]
            lens[e] = len(ent)
            for c in range(lens[e]):
                coef[e * L + c] = <uint64_t> (ent[c] % p)
        with nogil:
            for x in range(npoints):
                X = <uint64_t> x % P
                for e in range(n * n):
                    acc = 0
                    c = lens[e] - 1
                    while c >= 0:
                        acc = (acc * X + coef[e * L + c]) % P
                        c -= 1
                    work[e] = acc
                xs[x] = X
                ys[x] = _det_c(work, n, P)
            _interp_c(xs, ys, out, npoints, P)
        return [int(out[i]) for i in range(npoints)]
    finally:
        free(coef); free(lens); free(work); free(xs)
