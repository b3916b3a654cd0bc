"""Smith normal form front end with kernel selection.

The compiled Cython kernel ``momentangle._snfcore`` is used when present;
otherwise the pure-Python kernel ``momentangle._snf_pure`` takes over.
Set ``MOMENTANGLE_PURE=1`` to force the fallback (used by the benchmark).

Matrices are plain lists of lists of Python ints, so all arithmetic is
arbitrary precision.
"""

from __future__ import annotations

import os

if os.environ.get("MOMENTANGLE_PURE"):
    from . import _snf_pure as _kernel
    KERNEL = "pure"
else:
    try:
        from . import _snfcore as _kernel  # type: ignore[attr-defined]
        KERNEL = "compiled"
    except ImportError:
        from . import _snf_pure as _kernel
        KERNEL = "pure"

IntMatrix = list  # list[list[int]]


def identity(n: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zeros(m: int, n: int) -> IntMatrix:
    return [[0] * n for _ in range(m)]


def shape(a: IntMatrix) -> tuple[int, int]:
    return len(a), len(a[0]) if a else 0


def mat_mul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    m, n = shape(a)
    n2, p = shape(b)
    assert n == n2, "inner dimensions differ"
    bt = [[b[i][j] for i in range(n)] for j in range(p)]
    out = zeros(m, p)
    for i in range(m):
        ai = a[i]
        oi = out[i]
        for j in range(p):
            bj = bt[j]
            oi[j] = sum(ai[k] * bj[k] for k in range(n))
    return out


def mat_vec(a: IntMatrix, x: list) -> list:
    return [sum(row[k] * x[k] for k in range(len(x))) for row in a]


def smith_normal_form(a: IntMatrix) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return (U, D, V) with U*A*V = D in Smith normal form."""
    u, _, d, v, _ = smith_normal_form_ext(a)
    return u, d, v


def smith_normal_form_ext(a: IntMatrix, m=None, n=None):
    """Return (U, Uinv, D, V, Vinv); inverses come free from the kernel.

    Pass m and n explicitly for matrices with zero rows, where the column
    count cannot be recovered from the nested-list representation.
    """
    if m is None or n is None:
        m, n = shape(a)
    work = [list(row) for row in a]
    return _kernel.snf_ext(work, m, n)


def diagonal(d: IntMatrix) -> list[int]:
    """Diagonal entries of a (rectangular) diagonal matrix."""
    m, n = shape(d)
    return [d[i][i] for i in range(min(m, n))]


def snf_rank(d: IntMatrix) -> int:
    return sum(1 for x in diagonal(d) if x)


def invariant_factors(a: IntMatrix) -> list[int]:
    """Nonzero diagonal entries of the Smith form of ``a``."""
    _, _, d, _, _ = smith_normal_form_ext(a)
    return [x for x in diagonal(d) if x]
