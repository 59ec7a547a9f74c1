"""Pure-Python kernels: Koszul monomial merge and fraction-free elimination.

These two loops dominate the runtime of everything downstream (products of
exterior-algebra elements, and ranks of differential matrices). A compiled
twin lives in _speedups.pyx with the identical contract; nilsplit.kernels
selects between them at import time. Keep the two implementations in sync:
tests/test_kernels.py diffs them on random inputs.
"""

BACKEND = "python"


def merge_monomials(key_a, key_b, parity):
    """Multiply two normal-form monomial keys.

    Keys are flat tuples (i0, e0, i1, e1, ...) with generator indices
    strictly ascending and exponents positive; parity[i] is 1 when generator
    i has odd degree. Returns (sign, merged_key) where sign is +1 or -1, or
    (0, ()) when the product vanishes on the square of an odd generator.

    The sign counts transpositions of odd-degree factors needed to merge the
    concatenated word key_a + key_b back into ascending order: a factor of
    key_b at index j moves past every not-yet-emitted odd factor of key_a,
    and contributes only if it is itself odd. Even generators never sign.
    """
    if not key_a:
        return 1, key_b
    if not key_b:
        return 1, key_a
    la = len(key_a)
    lb = len(key_b)
    odd_left = 0
    i = 0
    while i < la:
        if parity[key_a[i]]:
            odd_left += 1
        i += 2
    out = []
    inv = 0
    pa = 0
    pb = 0
    while pa < la and pb < lb:
        ia = key_a[pa]
        ib = key_b[pb]
        if ia < ib:
            out.append(ia)
            out.append(key_a[pa + 1])
            if parity[ia]:
                odd_left -= 1
            pa += 2
        elif ib < ia:
            if parity[ib]:
                inv += odd_left
            out.append(ib)
            out.append(key_b[pb + 1])
            pb += 2
        else:
            if parity[ia]:
                return 0, ()
            out.append(ia)
            out.append(key_a[pa + 1] + key_b[pb + 1])
            pa += 2
            pb += 2
    while pa < la:
        out.append(key_a[pa])
        out.append(key_a[pa + 1])
        pa += 2
    while pb < lb:
        # key_a exhausted, so odd_left == 0 and no further sign arises
        out.append(key_b[pb])
        out.append(key_b[pb + 1])
        pb += 2
    return (-1 if inv & 1 else 1), tuple(out)


def bareiss_rank(rows, ncols=None):
    """Rank of an integer matrix by fraction-free (Bareiss) elimination.

    `rows` is a list of lists of Python ints and is consumed destructively.
    Every interior division is exact (entries stay minors of the input), so
    the computation never leaves the integers. Pivoting is deterministic:
    columns left to right, first nonzero row.
    """
    m = len(rows)
    if m == 0:
        return 0
    n = len(rows[0]) if ncols is None else ncols
    rank = 0
    prev = 1
    r = 0
    for c in range(n):
        p = -1
        for i in range(r, m):
            if rows[i][c]:
                p = i
                break
        if p < 0:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
        piv_row = rows[r]
        piv = piv_row[c]
        for i in range(r + 1, m):
            row = rows[i]
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
