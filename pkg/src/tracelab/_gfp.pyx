# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row reduction over GF(p)."""

ctypedef long long i64


cdef i64 _inv(i64 a, i64 p):
    cdef i64 t = 0, newt = 1, r = p, newr = a, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


def rref_inplace(i64[:, ::1] a, i64 p):
    """Reduce ``a`` (entries in [0, p)) to reduced row echelon form in place.

    Returns the list of pivot columns. Rows whose factor is zero are skipped,
    which is the common case for the sparse intertwiner systems.
    """
    cdef Py_ssize_t nrows = a.shape[0], ncols = a.shape[1]
    cdef Py_ssize_t row = 0, col, r, j, piv
    cdef i64 f, inv, tmp
    pivots = []
    for col in range(ncols):
        if row >= nrows:
            break
        piv = -1
        for r in range(row, nrows):
            if a[r, col] != 0:
                piv = r
                break
        if piv < 0:
            continue
        if piv != row:
            for j in range(col, ncols):
                tmp = a[row, j]
                a[row, j] = a[piv, j]
                a[piv, j] = tmp
        inv = _inv(a[row, col], p)
        if inv != 1:
            for j in range(col, ncols):
                a[row, j] = (a[row, j] * inv) % p
        for r in range(nrows):
            if r == row:
                continue
            f = a[r, col]
            if f == 0:
                continue
            f = p - f
            for j in range(col, ncols):
                if a[row, j] != 0:
                    a[r, j] = (a[r, j] + f * a[row, j]) % p
        pivots.append(col)
        row += 1
    return pivots
