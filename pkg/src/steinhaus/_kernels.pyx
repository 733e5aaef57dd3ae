# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; same API and results as ``_kernels_py``.

Sizes are capped at 64 so every row fits a ``uint64_t``; the public wrappers
route larger inputs to the pure-Python kernels.
"""

from libc.stdint cimport uint64_t

from steinhaus import _kernels_py

cdef enum:
    MAXN = 64

FULL, HSYM, RSYM, DSYM, DSYM0 = 0, 1, 2, 3, 4


cdef inline uint64_t mask(int w) nogil:
    if w >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return ((<uint64_t>1) << w) - 1


cdef inline void fill_rows(uint64_t bits, int n, uint64_t* rows) nogil:
    cdef int i
    cdef uint64_t r = bits
    for i in range(n):
        rows[i] = r & mask(n - i)
        r ^= r >> 1


cdef inline bint row_palindrome(uint64_t r, int length) nogil:
    cdef int p
    for p in range(length // 2):
        if ((r >> p) ^ (r >> (length - 1 - p))) & 1:
            return False
    return True


cdef inline bint is_hsym(uint64_t* rows, int n) nogil:
    cdef int i
    for i in range(n):
        if not row_palindrome(rows[i], n - i):
            return False
    return True


cdef inline bint is_rsym(uint64_t* rows, int n) nogil:
    cdef int i, j, si, sj
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            si = j - i + 1
            sj = n - i + 1
            if ((rows[i - 1] >> (j - i)) ^ (rows[si - 1] >> (sj - si))) & 1:
                return False
    return True


cdef inline int popcount(uint64_t x) nogil:
    cdef int c = 0
    while x:
        x &= x - 1
        c += 1
    return c


cdef bint c_member(uint64_t bits, int n, int cls) nogil:
    cdef uint64_t rows[MAXN]
    if cls == 0:
        return True
    fill_rows(bits, n, rows)
    if cls == 1:
        return is_hsym(rows, n)
    if cls == 2:
        return is_rsym(rows, n)
    if not (is_hsym(rows, n) and is_rsym(rows, n)):
        return False
    if cls == 4:
        return popcount(bits) % 2 == 0
    return True


def derive_rows(bits, int n):
    if n > MAXN:
        return _kernels_py.derive_rows(bits, n)
    cdef uint64_t rows[MAXN]
    fill_rows(<uint64_t>bits, n, rows)
    return [rows[i] for i in range(n)]


def member(bits, int n, int cls):
    if n > MAXN:
        return _kernels_py.member(bits, n, cls)
    return c_member(<uint64_t>bits, n, cls)


def scan_members(int n, int cls):
    if n > 40:
        raise ValueError("scan size too large")
    cdef uint64_t s
    cdef uint64_t top = (<uint64_t>1) << n
    out = []
    s = 0
    while s < top:
        if c_member(s, n, cls):
            out.append(s)
        s += 1
    return out


cdef uint64_t c_degree_parities(uint64_t bits, int order) nogil:
    cdef uint64_t rows[MAXN]
    cdef int m = order - 1
    cdef int i
    cdef uint64_t par = 0, cols = 0
    fill_rows(bits, m, rows)
    # row i covers edges to higher vertices; shifted rows XOR into column parities
    for i in range(m):
        par |= (<uint64_t>(popcount(rows[i]) & 1)) << i
        cols ^= rows[i] << i
    return par ^ (cols << 1)


def degree_parities(bits, int order):
    if order > MAXN:
        return _kernels_py.degree_parities(bits, order)
    return c_degree_parities(<uint64_t>bits, order)


def scan_graph_parity(int order):
    if order > 40:
        raise ValueError("scan size too large")
    cdef uint64_t s, p
    cdef uint64_t top = (<uint64_t>1) << (order - 1)
    cdef uint64_t full = mask(order)
    even, odd = [], []
    s = 0
    while s < top:
        p = c_degree_parities(s, order)
        if p == 0:
            even.append(s)
        elif p == full:
            odd.append(s)
        s += 1
    return even, odd


def gf2_rank(vectors):
    cdef uint64_t piv[64]
    cdef uint64_t v
    cdef int top, rank = 0, k
    vecs = list(vectors)
    for x in vecs:
        if x < 0 or x.bit_length() > 64:
            return _kernels_py.gf2_rank(vecs)
    for k in range(64):
        piv[k] = 0
    for x in vecs:
        v = <uint64_t>x
        while v:
            top = 63
            while not ((v >> top) & 1):
                top -= 1
            if piv[top] == 0:
                piv[top] = v
                rank += 1
                break
            v ^= piv[top]
    return rank
