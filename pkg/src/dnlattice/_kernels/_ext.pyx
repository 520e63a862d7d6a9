# cython: language_level=3, boundscheck=False, wraparound=False
"""int64 ports of the kernels in ``_pure.py``.

Each routine mirrors its pure-Python twin step for step, so results are
identical. Any intermediate leaving [-2**62, 2**62] raises OverflowError and
the dispatcher reruns the call on the exact path.
"""

import numpy as np
cimport numpy as cnp

ctypedef long long i64

cdef extern from *:
    """
    static inline int dn_mul_ovf(long long a, long long b, long long *r) {
        return __builtin_mul_overflow(a, b, r);
    }
    static inline int dn_sub_ovf(long long a, long long b, long long *r) {
        return __builtin_sub_overflow(a, b, r);
    }
    static inline int dn_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    int dn_mul_ovf(i64 a, i64 b, i64 *r) nogil
    int dn_sub_ovf(i64 a, i64 b, i64 *r) nogil
    int dn_add_ovf(i64 a, i64 b, i64 *r) nogil

cdef i64 LIMIT = 1LL << 62


cdef inline i64 fms(i64 x, i64 q, i64 y) except? -1:
    """x - q*y, checked."""
    cdef i64 t, r
    if dn_mul_ovf(q, y, &t) or dn_sub_ovf(x, t, &r) or r > LIMIT or r < -LIMIT:
        raise OverflowError("int64 kernel overflow")
    return r


cdef inline i64 fma_(i64 x, i64 q, i64 y) except? -1:
    """x + q*y, checked."""
    cdef i64 t, r
    if dn_mul_ovf(q, y, &t) or dn_add_ovf(x, t, &r) or r > LIMIT or r < -LIMIT:
        raise OverflowError("int64 kernel overflow")
    return r


cdef inline i64 iabs(i64 x) nogil:
    return -x if x < 0 else x


def _load(rows, Py_ssize_t ncols):
    cdef Py_ssize_t m = len(rows)
    arr = np.zeros((m, ncols), dtype=np.int64)
    cdef i64[:, :] a = arr
    cdef Py_ssize_t i, j
    cdef object x
    for i in range(m):
        row = rows[i]
        for j in range(ncols):
            x = row[j]
            if x > LIMIT or x < -LIMIT:
                raise OverflowError("entry exceeds int64 kernel range")
            a[i, j] = x
    return arr


def _eye(Py_ssize_t n):
    return np.eye(n, dtype=np.int64)


def _dump(arr):
    return [[int(x) for x in row] for row in arr.tolist()]


def matmul(a, b, Py_ssize_t inner):
    cdef Py_ssize_t m = len(a)
    if m == 0:
        return []
    cdef Py_ssize_t p = len(b[0]) if len(b) else 0
    A = _load(a, inner)
    B = _load(b, p)
    out = np.zeros((m, p), dtype=np.int64)
    cdef i64[:, :] av = A
    cdef i64[:, :] bv = B
    cdef i64[:, :] ov = out
    cdef Py_ssize_t i, j, k
    cdef i64 x
    for i in range(m):
        for k in range(inner):
            x = av[i, k]
            if x != 0:
                for j in range(p):
                    if bv[k, j] != 0:
                        ov[i, j] = fma_(ov[i, j], x, bv[k, j])
    return _dump(out)


def bareiss_det(a):
    cdef Py_ssize_t n = len(a)
    if n == 0:
        return 1
    M = _load(a, n)
    cdef i64[:, :] mv = M
    cdef int sign = 1
    cdef i64 prev = 1
    cdef i64 pk, lik, t1, t2, num
    cdef Py_ssize_t i, j, k, s
    for k in range(n - 1):
        if mv[k, k] == 0:
            s = -1
            for i in range(k + 1, n):
                if mv[i, k] != 0:
                    s = i
                    break
            if s < 0:
                return 0
            for j in range(n):
                mv[k, j], mv[s, j] = mv[s, j], mv[k, j]
            sign = -sign
        pk = mv[k, k]
        for i in range(k + 1, n):
            lik = mv[i, k]
            for j in range(k + 1, n):
                if dn_mul_ovf(mv[i, j], pk, &t1) or dn_mul_ovf(lik, mv[k, j], &t2) \
                        or dn_sub_ovf(t1, t2, &num):
                    raise OverflowError("int64 kernel overflow")
                mv[i, j] = num // prev
            mv[i, k] = 0
        prev = pk
    return sign * int(mv[n - 1, n - 1])


def hnf_rows(a, Py_ssize_t ncols, bint want_transform):
    cdef Py_ssize_t m = len(a)
    H = _load(a, ncols)
    cdef i64[:, :] h = H
    U = _eye(m) if want_transform else np.zeros((1, 1), dtype=np.int64)
    cdef i64[:, :] u = U
    pivots = []
    cdef Py_ssize_t r = 0, c, i, j, best
    cdef i64 bestabs, x, p, q
    cdef bint found, clean
    for c in range(ncols):
        if r == m:
            break
        found = False
        while True:
            best = -1
            bestabs = 0
            for i in range(r, m):
                x = h[i, c]
                if x != 0 and (best < 0 or iabs(x) < bestabs):
                    best = i
                    bestabs = iabs(x)
            if best < 0:
                break
            found = True
            if best != r:
                for j in range(ncols):
                    h[r, j], h[best, j] = h[best, j], h[r, j]
                if want_transform:
                    for j in range(m):
                        u[r, j], u[best, j] = u[best, j], u[r, j]
            p = h[r, c]
            clean = True
            for i in range(r + 1, m):
                x = h[i, c]
                if x != 0:
                    q = x // p
                    for j in range(c, ncols):
                        if h[r, j] != 0:
                            h[i, j] = fms(h[i, j], q, h[r, j])
                    if want_transform:
                        for j in range(m):
                            if u[r, j] != 0:
                                u[i, j] = fms(u[i, j], q, u[r, j])
                    if h[i, c] != 0:
                        clean = False
            if clean:
                break
        if not found:
            continue
        if h[r, c] < 0:
            for j in range(c, ncols):
                h[r, j] = -h[r, j]
            if want_transform:
                for j in range(m):
                    u[r, j] = -u[r, j]
        p = h[r, c]
        for i in range(r):
            q = h[i, c] // p
            if q != 0:
                for j in range(c, ncols):
                    if h[r, j] != 0:
                        h[i, j] = fms(h[i, j], q, h[r, j])
                if want_transform:
                    for j in range(m):
                        if u[r, j] != 0:
                            u[i, j] = fms(u[i, j], q, u[r, j])
        pivots.append(c)
        r += 1
    return _dump(H), (_dump(U) if want_transform else None), pivots


def smith(a, Py_ssize_t ncols):
    cdef Py_ssize_t m = len(a)
    cdef Py_ssize_t n = ncols
    D = _load(a, n)
    U = _eye(m)
    V = _eye(n)
    cdef i64[:, :] d = D
    cdef i64[:, :] u = U
    cdef i64[:, :] v = V
    cdef Py_ssize_t t = 0, i, j, pi, pj, bad
    cdef i64 pabs, x, ax, p, q
    cdef bint dirty
    while t < m and t < n:
        pi = -1
        pj = -1
        pabs = 0
        for i in range(t, m):
            for j in range(t, n):
                x = d[i, j]
                if x != 0:
                    ax = iabs(x)
                    if pi < 0 or ax < pabs:
                        pi = i
                        pj = j
                        pabs = ax
        if pi < 0:
            break
        while True:
            if pi != t:
                for j in range(n):
                    d[t, j], d[pi, j] = d[pi, j], d[t, j]
                for j in range(m):
                    u[t, j], u[pi, j] = u[pi, j], u[t, j]
            if pj != t:
                for i in range(m):
                    d[i, t], d[i, pj] = d[i, pj], d[i, t]
                for i in range(n):
                    v[i, t], v[i, pj] = v[i, pj], v[i, t]
            p = d[t, t]
            dirty = False
            for i in range(t + 1, m):
                x = d[i, t]
                if x != 0:
                    q = x // p
                    for j in range(t, n):
                        if d[t, j] != 0:
                            d[i, j] = fms(d[i, j], q, d[t, j])
                    for j in range(m):
                        if u[t, j] != 0:
                            u[i, j] = fms(u[i, j], q, u[t, j])
                    if d[i, t] != 0:
                        dirty = True
            for j in range(t + 1, n):
                x = d[t, j]
                if x != 0:
                    q = x // p
                    for i in range(t, m):
                        if d[i, t] != 0:
                            d[i, j] = fms(d[i, j], q, d[i, t])
                    for i in range(n):
                        if v[i, t] != 0:
                            v[i, j] = fms(v[i, j], q, v[i, t])
                    if d[t, j] != 0:
                        dirty = True
            if not dirty:
                bad = -1
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if d[i, j] % p != 0:
                            bad = i
                            break
                    if bad >= 0:
                        break
                if bad < 0:
                    break
                for j in range(t, n):
                    d[t, j] = fma_(d[t, j], 1, d[bad, j])
                for j in range(m):
                    u[t, j] = fma_(u[t, j], 1, u[bad, j])
            pi = -1
            pj = -1
            pabs = 0
            for i in range(t, m):
                x = d[i, t]
                if x != 0:
                    ax = iabs(x)
                    if pi < 0 or ax < pabs:
                        pi = i
                        pj = t
                        pabs = ax
            for j in range(t + 1, n):
                x = d[t, j]
                if x != 0:
                    ax = iabs(x)
                    if ax < pabs:
                        pi = t
                        pj = j
                        pabs = ax
        if d[t, t] < 0:
            for j in range(n):
                d[t, j] = -d[t, j]
            for j in range(m):
                u[t, j] = -u[t, j]
        t += 1
    return _dump(D), _dump(U), _dump(V)
