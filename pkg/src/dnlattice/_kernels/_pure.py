"""Reference integer elimination kernels on lists of Python ints.

Every routine here is exact for any input size. The compiled module in
``_ext.pyx`` ports these loops line for line onto int64 buffers and must
return identical results whenever it does not overflow.
"""


def matmul(a, b, inner):
    """Product of row lists ``a`` (m x inner) and ``b`` (inner x p)."""
    if not a:
        return []
    p = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [0] * p
        for k in range(inner):
            x = row[k]
            if x:
                bk = b[k]
                for j in range(p):
                    y = bk[j]
                    if y:
                        acc[j] += x * y
        out.append(acc)
    return out


def bareiss_det(a):
    """Fraction-free determinant of a square row list."""
    n = len(a)
    if n == 0:
        return 1
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = m[k][k]
        rk = m[k]
        for i in range(k + 1, n):
            ri = m[i]
            lik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pk - lik * rk[j]) // prev
            ri[k] = 0
        prev = pk
    return sign * m[n - 1][n - 1]


def hnf_rows(a, ncols, want_transform):
    """Row Hermite normal form with optional left transform.

    Returns ``(h, u, pivots)`` with ``u * a == h``; ``u`` is unimodular and
    ``None`` when not requested. Pivots are positive and the entries above
    each pivot lie in ``[0, pivot)``. Zero rows of ``h`` sit at the bottom.
    """
    m = len(a)
    h = [row[:] for row in a]
    u = None
    if want_transform:
        u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        found = False
        while True:
            best = -1
            bestabs = 0
            for i in range(r, m):
                x = h[i][c]
                if x != 0 and (best < 0 or abs(x) < bestabs):
                    best = i
                    bestabs = abs(x)
            if best < 0:
                break
            found = True
            if best != r:
                h[r], h[best] = h[best], h[r]
                if u is not None:
                    u[r], u[best] = u[best], u[r]
            hr = h[r]
            p = hr[c]
            clean = True
            for i in range(r + 1, m):
                hi = h[i]
                x = hi[c]
                if x != 0:
                    q = x // p
                    for j in range(c, ncols):
                        if hr[j]:
                            hi[j] -= q * hr[j]
                    if u is not None:
                        ui = u[i]
                        ur = u[r]
                        for j in range(m):
                            if ur[j]:
                                ui[j] -= q * ur[j]
                    if hi[c] != 0:
                        clean = False
            if clean:
                break
        if not found:
            continue
        hr = h[r]
        if hr[c] < 0:
            for j in range(c, ncols):
                hr[j] = -hr[j]
            if u is not None:
                u[r] = [-x for x in u[r]]
        p = hr[c]
        for i in range(r):
            hi = h[i]
            q = hi[c] // p
            if q:
                for j in range(c, ncols):
                    if hr[j]:
                        hi[j] -= q * hr[j]
                if u is not None:
                    ui = u[i]
                    ur = u[r]
                    for j in range(m):
                        if ur[j]:
                            ui[j] -= q * ur[j]
        pivots.append(c)
        r += 1
    return h, u, pivots


def smith(a, ncols):
    """Smith form ``d`` with transforms ``u``, ``v`` such that ``u*a*v == d``.

    Pivot choice: smallest absolute nonzero entry of the active block, ties
    broken by lowest (row, col).
    """
    m = len(a)
    n = ncols
    d = [row[:] for row in a]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    t = 0
    while t < m and t < n:
        pi = -1
        pj = -1
        pabs = 0
        for i in range(t, m):
            di = d[i]
            for j in range(t, n):
                x = di[j]
                if x != 0:
                    ax = -x if x < 0 else x
                    if pi < 0 or ax < pabs:
                        pi, pj, pabs = i, j, ax
        if pi < 0:
            break
        while True:
            if pi != t:
                d[t], d[pi] = d[pi], d[t]
                u[t], u[pi] = u[pi], u[t]
            if pj != t:
                for row in d:
                    row[t], row[pj] = row[pj], row[t]
                for row in v:
                    row[t], row[pj] = row[pj], row[t]
            dt = d[t]
            p = dt[t]
            dirty = False
            for i in range(t + 1, m):
                di = d[i]
                x = di[t]
                if x != 0:
                    q = x // p
                    for j in range(t, n):
                        if dt[j]:
                            di[j] -= q * dt[j]
                    ui = u[i]
                    ut = u[t]
                    for j in range(m):
                        if ut[j]:
                            ui[j] -= q * ut[j]
                    if di[t] != 0:
                        dirty = True
            for j in range(t + 1, n):
                x = dt[j]
                if x != 0:
                    q = x // p
                    for i in range(t, m):
                        di = d[i]
                        if di[t]:
                            di[j] -= q * di[t]
                    for row in v:
                        if row[t]:
                            row[j] -= q * row[t]
                    if dt[j] != 0:
                        dirty = True
            if not dirty:
                # row t and column t are clear; enforce divisibility
                bad = -1
                for i in range(t + 1, m):
                    di = d[i]
                    for j in range(t + 1, n):
                        if di[j] % p != 0:
                            bad = i
                            break
                    if bad >= 0:
                        break
                if bad < 0:
                    break
                db = d[bad]
                for j in range(t, n):
                    dt[j] += db[j]
                ub = u[bad]
                ut = u[t]
                for j in range(m):
                    ut[j] += ub[j]
            # re-pick the pivot within row t and column t
            pi, pj, pabs = -1, -1, 0
            for i in range(t, m):
                x = d[i][t]
                if x != 0:
                    ax = -x if x < 0 else x
                    if pi < 0 or ax < pabs:
                        pi, pj, pabs = i, t, ax
            for j in range(t + 1, n):
                x = dt[j]
                if x != 0:
                    ax = -x if x < 0 else x
                    if ax < pabs:
                        pi, pj, pabs = t, j, ax
        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return d, u, v
