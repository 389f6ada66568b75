# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of ``_kernels_py``; same functions, same semantics.

Coefficients stay generic Python objects (Fraction, RationalFunction,
int); the win comes from moving the loop and dict bookkeeping to C.
"""

BACKEND = "cython"


def compose(tuple s, tuple t):
    cdef Py_ssize_t n = len(t)
    cdef Py_ssize_t i
    out = [None] * n
    for i in range(n):
        out[i] = s[<Py_ssize_t> t[i] - 1]
    return tuple(out)


def ga_mul(dict a, dict b):
    cdef dict out = {}
    cdef tuple sa, sb, key
    cdef Py_ssize_t i, n
    cdef list img
    for sa, ca in a.items():
        for sb, cb in b.items():
            n = len(sb)
            img = [None] * n
            for i in range(n):
                img[i] = sa[<Py_ssize_t> sb[i] - 1]
            key = tuple(img)
            c = ca * cb
            prev = out.get(key)
            if prev is None:
                out[key] = c
            else:
                c = prev + c
                if c:
                    out[key] = c
                else:
                    del out[key]
    return out


def sparse_mm(dict arows, dict brows):
    cdef dict out = {}
    cdef dict acc, arow, brow
    for r, arow in arows.items():
        acc = {}
        for k, av in arow.items():
            brow = brows.get(k)
            if brow is None:
                continue
            for c, bv in brow.items():
                v = av * bv
                prev = acc.get(c)
                if prev is None:
                    acc[c] = v
                else:
                    v = prev + v
                    if v:
                        acc[c] = v
                    else:
                        del acc[c]
        if acc:
            out[r] = acc
    return out


def zpoly_add(tuple p, tuple q):
    cdef Py_ssize_t i
    if len(p) < len(q):
        p, q = q, p
    cdef list out = list(p)
    for i in range(len(q)):
        out[i] = out[i] + q[i]
    while out and out[len(out) - 1] == 0:
        out.pop()
    return tuple(out)


def zpoly_scale(tuple p, c):
    cdef Py_ssize_t i
    if c == 0:
        return ()
    cdef list out = [None] * len(p)
    for i in range(len(p)):
        out[i] = p[i] * c
    return tuple(out)


def zpoly_scale_linear(tuple p, a, b):
    cdef Py_ssize_t n = len(p), i
    if n == 0:
        return ()
    cdef list out = [0] * (n + 1)
    for i in range(n):
        out[i] = out[i] + a * p[i]
        out[i + 1] = out[i + 1] + b * p[i]
    while out and out[len(out) - 1] == 0:
        out.pop()
    return tuple(out)


def bareiss_rank(list rows, Py_ssize_t ncols):
    cdef list m = [r for r in rows if any(r)]
    cdef Py_ssize_t nrows = len(m)
    cdef Py_ssize_t rank = 0, col, i, j, piv
    cdef list mi, mr
    prev = 1
    for col in range(ncols):
        piv = -1
        for i in range(rank, nrows):
            if (<list> m[i])[col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        mr = <list> m[rank]
        pivot = mr[col]
        for i in range(rank + 1, nrows):
            mi = <list> m[i]
            head = mi[col]
            if head == 0 and pivot == prev:
                continue
            for j in range(col, ncols):
                mi[j] = (pivot * mi[j] - head * mr[j]) // prev
        prev = pivot
        rank += 1
        if rank == nrows:
            break
    return rank


def frac_rref(list rows, Py_ssize_t ncols, zero, one):
    cdef list m = [r for r in rows if any(r)]
    cdef list pivots = []
    cdef Py_ssize_t rank = 0, col, i, j, piv
    cdef list row, mi
    for col in range(ncols):
        piv = -1
        for i in range(rank, len(m)):
            if (<list> m[i])[col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != rank:
            m[rank], m[piv] = m[piv], m[rank]
        row = <list> m[rank]
        inv = one / row[col]
        if inv != one:
            for j in range(col, ncols):
                if row[j]:
                    row[j] = row[j] * inv
        for i in range(len(m)):
            if i == rank:
                continue
            mi = <list> m[i]
            head = mi[col]
            if head:
                for j in range(col, ncols):
                    if row[j]:
                        mi[j] = mi[j] - head * row[j]
        pivots.append(col)
        rank += 1
        if rank == len(m):
            break
    return pivots, [r for r in m if any(r)]
