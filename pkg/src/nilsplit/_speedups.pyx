# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels: Koszul monomial merge and fraction-free elimination.

Same contract as nilsplit._kernels_py; that module is the reference
implementation and the import-time fallback. Matrix entries stay Python
ints (they are minors and overflow any machine word), so the win here is
loop and indexing overhead, not machine arithmetic.
"""

BACKEND = "c"


def merge_monomials(tuple key_a, tuple key_b, bytes parity):
    """Multiply two normal-form monomial keys; see _kernels_py for the law."""
    cdef Py_ssize_t la = len(key_a)
    cdef Py_ssize_t lb = len(key_b)
    if la == 0:
        return 1, key_b
    if lb == 0:
        return 1, key_a
    cdef const unsigned char* par = parity
    cdef Py_ssize_t odd_left = 0
    cdef Py_ssize_t i = 0
    cdef long ia, ib
    while i < la:
        ia = key_a[i]
        if par[ia]:
            odd_left += 1
        i += 2
    cdef list out = []
    cdef Py_ssize_t inv = 0
    cdef Py_ssize_t pa = 0
    cdef Py_ssize_t pb = 0
    while pa < la and pb < lb:
        ia = key_a[pa]
        ib = key_b[pb]
        if ia < ib:
            out.append(key_a[pa])
            out.append(key_a[pa + 1])
            if par[ia]:
                odd_left -= 1
            pa += 2
        elif ib < ia:
            if par[ib]:
                inv += odd_left
            out.append(key_b[pb])
            out.append(key_b[pb + 1])
            pb += 2
        else:
            if par[ia]:
                return 0, ()
            out.append(key_a[pa])
            out.append(key_a[pa + 1] + key_b[pb + 1])
            pa += 2
            pb += 2
    while pa < la:
        out.append(key_a[pa])
        out.append(key_a[pa + 1])
        pa += 2
    while pb < lb:
        out.append(key_b[pb])
        out.append(key_b[pb + 1])
        pb += 2
    return (-1 if inv & 1 else 1), tuple(out)


def bareiss_rank(list rows, ncols=None):
    """Rank of an integer matrix by Bareiss elimination; destroys rows."""
    cdef Py_ssize_t m = len(rows)
    if m == 0:
        return 0
    cdef Py_ssize_t n = len(<list>rows[0]) if ncols is None else <Py_ssize_t>ncols
    cdef Py_ssize_t rank = 0
    cdef Py_ssize_t r = 0
    cdef Py_ssize_t c, i, j, p
    cdef object prev = 1
    cdef object piv, f
    cdef list row, piv_row
    for c in range(n):
        p = -1
        for i in range(r, m):
            row = <list>rows[i]
            if row[c] != 0:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
        piv_row = <list>rows[r]
        piv = piv_row[c]
        for i in range(r + 1, m):
            row = <list>rows[i]
            f = row[c]
            for j in range(c + 1, n):
                row[j] = (piv * row[j] - f * piv_row[j]) // prev
            row[c] = 0
        prev = piv
        rank += 1
        r += 1
        if r == m:
            break
    return rank
