# cython: language_level=3
"""Smith normal form kernel, compiled.

Same algorithm as ``_snf_pure`` (smallest-pivot elimination with tracked
unimodular transforms and their inverses).  Entries stay Python ints for
exactness; the speedup comes from typed loop indices and compiled
control flow around the inner loops.
"""


cdef inline object _nearest_quotient(object x, object p):
    # q with |x - q*p| <= |p|/2
    q, r = divmod(x, p)
    if 2 * abs(r) > abs(p):
        q += 1
    return q


def snf_ext(list rows, Py_ssize_t m, Py_ssize_t n):
    """Diagonalize an m-by-n integer matrix.

    ``rows`` is a list of m lists of n ints; it is consumed (mutated into
    D).  Returns (U, Uinv, D, V, Vinv) with U*A*V = D, U and V unimodular,
    D diagonal with nonnegative entries forming a divisibility chain.
    """
    cdef list a = rows
    cdef list u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    cdef list uinv = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    cdef list v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    cdef list vinv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    cdef Py_ssize_t t, i, j, k, bi, bj
    cdef bint dirty, fixed
    cdef list ai, at, ui, ut, vt, vj, row
    cdef object x, q, p, best

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
            _row_swap(a, u, uinv, m, bi, t)
        if bj != t:
            _col_swap(a, v, vinv, m, n, bj, t)

        while True:
            # clear the pivot column
            dirty = False
            for i in range(t + 1, m):
                x = (<list> a[i])[t]
                if x:
                    p = (<list> a[t])[t]
                    q = _nearest_quotient(x, p)
                    _row_sub(a, u, uinv, m, n, i, t, q)
                    if (<list> a[i])[t]:
                        # remainder is strictly smaller; make it the pivot
                        _row_swap(a, u, uinv, m, i, t)
                        dirty = True
            if dirty:
                continue
            # clear the pivot row
            for j in range(t + 1, n):
                x = (<list> a[t])[j]
                if x:
                    p = (<list> a[t])[t]
                    q = _nearest_quotient(x, p)
                    _col_sub(a, v, vinv, m, n, j, t, q)
                    if (<list> a[t])[j]:
                        _col_swap(a, v, vinv, m, n, j, t)
                        dirty = True
            if dirty:
                continue
            # enforce divisibility of the remaining block by the pivot
            p = (<list> a[t])[t]
            fixed = True
            for i in range(t + 1, m):
                ai = a[i]
                for j in range(t + 1, n):
                    if ai[j] % p:
                        _row_sub(a, u, uinv, m, n, t, i, -1)  # row_t += row_i
                        fixed = False
                        break
                if not fixed:
                    break
            if fixed:
                break
        if (<list> a[t])[t] < 0:
            ai = a[t]
            for k in range(n):
                ai[k] = -ai[k]
            ui = u[t]
            for k in range(m):
                ui[k] = -ui[k]
            for k in range(m):
                row = uinv[k]
                row[t] = -row[t]

    return u, uinv, a, v, vinv


cdef void _row_sub(list a, list u, list uinv, Py_ssize_t m, Py_ssize_t n,
                   Py_ssize_t i, Py_ssize_t t, object q):
    # row_i -= q * row_t on A and U; inverse column op on Uinv
    cdef Py_ssize_t k
    cdef list ai = a[i], at = a[t], ui = u[i], ut = u[t], row
    for k in range(n):
        ai[k] = ai[k] - q * at[k]
    for k in range(m):
        ui[k] = ui[k] - q * ut[k]
    for k in range(m):
        row = uinv[k]
        row[t] = row[t] + q * row[i]


cdef void _col_sub(list a, list v, list vinv, Py_ssize_t m, Py_ssize_t n,
                   Py_ssize_t j, Py_ssize_t t, object q):
    # col_j -= q * col_t on A and V; inverse row op on Vinv
    cdef Py_ssize_t k
    cdef list row, vt = vinv[t], vj = vinv[j]
    for k in range(m):
        row = a[k]
        row[j] = row[j] - q * row[t]
    for k in range(n):
        row = v[k]
        row[j] = row[j] - q * row[t]
    for k in range(n):
        vt[k] = vt[k] + q * vj[k]


cdef void _row_swap(list a, list u, list uinv, Py_ssize_t m,
                    Py_ssize_t i, Py_ssize_t t):
    cdef Py_ssize_t k
    cdef list row
    a[i], a[t] = a[t], a[i]
    u[i], u[t] = u[t], u[i]
    for k in range(m):
        row = uinv[k]
        row[i], row[t] = row[t], row[i]


cdef void _col_swap(list a, list v, list vinv, Py_ssize_t m, Py_ssize_t n,
                    Py_ssize_t j, Py_ssize_t t):
    cdef Py_ssize_t k
    cdef list row
    for k in range(m):
        row = a[k]
        row[j], row[t] = row[t], row[j]
    for k in range(n):
        row = v[k]
        row[j], row[t] = row[t], row[j]
    vinv[j], vinv[t] = vinv[t], vinv[j]
