"""Smith normal form over the integers, pure-Python reference kernel.

The compiled kernel in ``_snfcore.pyx`` implements the same algorithm with
typed loop indices; this module is the fallback selected at import time by
``snf.py`` when the extension is unavailable.

Entries are Python ints throughout, so results are exact at any size.
Coefficient growth is limited by picking the smallest nonzero absolute
value in the remaining block as the pivot and by eliminating with
nearest-integer quotients, so remainders never exceed half the pivot.
"""


def _nearest_quotient(x, p):
    """q with |x - q*p| <= |p|/2."""
    q, r = divmod(x, p)
    if 2 * abs(r) > abs(p):
        q += 1
    return q


def snf_ext(rows, m, n):
    """Diagonalize an m-by-n integer matrix.

    ``rows`` is a list of m lists of n ints; it is consumed (mutated into
    D).  Returns (U, Uinv, D, V, Vinv) with U*A*V = D, U and V unimodular,
    D diagonal with nonnegative entries forming a divisibility chain.
    """
    a = rows
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    uinv = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    vinv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_sub(i, t, q):
        # row_i -= q * row_t on A and U; inverse column op on Uinv
        ai, at = a[i], a[t]
        for k in range(n):
            ai[k] -= q * at[k]
        ui, ut = u[i], u[t]
        for k in range(m):
            ui[k] -= q * ut[k]
        for k in range(m):
            uinv[k][t] += q * uinv[k][i]

    def col_sub(j, t, q):
        # col_j -= q * col_t on A and V; inverse row op on Vinv
        for k in range(m):
            a[k][j] -= q * a[k][t]
        for k in range(n):
            v[k][j] -= q * v[k][t]
        vt, vj = vinv[t], vinv[j]
        for k in range(n):
            vt[k] += q * vj[k]

    def row_swap(i, t):
        a[i], a[t] = a[t], a[i]
        u[i], u[t] = u[t], u[i]
        for k in range(m):
            uinv[k][i], uinv[k][t] = uinv[k][t], uinv[k][i]

    def col_swap(j, t):
        for k in range(m):
            a[k][j], a[k][t] = a[k][t], a[k][j]
        for k in range(n):
            v[k][j], v[k][t] = v[k][t], v[k][j]
        vinv[j], vinv[t] = vinv[t], vinv[j]

    def row_negate(i):
        ai = a[i]
        for k in range(n):
            ai[k] = -ai[k]
        ui = u[i]
        for k in range(m):
            ui[k] = -ui[k]
        for k in range(m):
            uinv[k][i] = -uinv[k][i]

    for t in range(min(m, n)):
        # pivot: smallest nonzero absolute value in the remaining block
        best = 0
        bi = bj = -1
        for i in range(t, m):
            ai = a[i]
            for j in range(t, n):
                x = ai[j]
                if x and (best == 0 or -best < x < best):
                    best = abs(x)
                    bi, bj = i, j
                    if best == 1:
                        break
            if best == 1:
                break
        if best == 0:
            break
        if bi != t:
            row_swap(bi, t)
        if bj != t:
            col_swap(bj, t)

        while True:
            # clear the pivot column
            dirty = False
            for i in range(t + 1, m):
                x = a[i][t]
                if x:
                    p = a[t][t]
                    q = _nearest_quotient(x, p)
                    row_sub(i, t, q)
                    if a[i][t]:
                        # remainder is strictly smaller; make it the pivot
                        row_swap(i, t)
                        dirty = True
            if dirty:
                continue
            # clear the pivot row
            for j in range(t + 1, n):
                x = a[t][j]
                if x:
                    p = a[t][t]
                    q = _nearest_quotient(x, p)
                    col_sub(j, t, q)
                    if a[t][j]:
                        col_swap(j, t)
                        dirty = True
            if dirty:
                continue
            # enforce divisibility of the remaining block by the pivot
            p = a[t][t]
            fixed = True
            for i in range(t + 1, m):
                ai = a[i]
                for j in range(t + 1, n):
                    if ai[j] % p:
                        row_sub(t, i, -1)  # row_t += row_i
                        fixed = False
                        break
                if not fixed:
                    break
            if fixed:
                break
        if a[t][t] < 0:
            row_negate(t)

    return u, uinv, a, v, vinv
