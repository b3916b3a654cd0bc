"""Smith normal form postconditions, checked against independent oracles."""

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from momentangle.snf import (diagonal, identity, invariant_factors, mat_mul,
                             shape, smith_normal_form, smith_normal_form_ext,
                             snf_rank, zeros)


def bareiss_det(a):
    """Fraction-free determinant; independent of the SNF kernel."""
    n = len(a)
    m = [row[:] for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k]:
                    m[i], m[k] = m[k], m[i]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def rational_rank(a):
    """Gaussian elimination over Q; independent of the SNF kernel."""
    m = [[Fraction(x) for x in row] for row in a]
    rank = 0
    cols = len(m[0]) if m else 0
    for j in range(cols):
        pivot = next((i for i in range(rank, len(m)) if m[i][j]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = 1 / m[rank][j]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][j]:
                c = m[i][j]
                m[i] = [x - c * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def check_postconditions(a, m=None, n=None):
    if m is None or n is None:
        m, n = shape(a)
    u, uinv, d, v, vinv = smith_normal_form_ext(a, m, n)
    assert mat_mul(mat_mul(u, a), v) == d if a else True
    assert mat_mul(u, uinv) == identity(m)
    assert mat_mul(v, vinv) == identity(n)
    if m:
        assert abs(bareiss_det(u)) == 1
    if n:
        assert abs(bareiss_det(v)) == 1
    diag = diagonal(d)
    assert all(x >= 0 for x in diag)
    nonzero = [x for x in diag if x]
    assert nonzero == diag[:len(nonzero)], "zeros must come last"
    for x, y in zip(nonzero, nonzero[1:]):
        assert y % x == 0, f"divisibility violated: {diag}"
    for i in range(m):
        for j in range(n):
            if i != j:
                assert d[i][j] == 0
    if a:
        assert snf_rank(d) == rational_rank(a)
    return d


matrices = st.integers(1, 5).flatmap(
    lambda rows: st.integers(1, 5).flatmap(
        lambda cols: st.lists(
            st.lists(st.integers(-9, 9), min_size=cols, max_size=cols),
            min_size=rows, max_size=rows)))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_random_matrices(a):
    check_postconditions(a)


def test_frozen_example():
    u, d, v = smith_normal_form([[2, 4], [6, 8]])
    assert diagonal(d) == [2, 4]
    assert mat_mul(mat_mul(u, [[2, 4], [6, 8]]), v) == d


def test_zero_and_empty_matrices():
    check_postconditions([[0, 0], [0, 0]])
    _, _, d, v, vinv = smith_normal_form_ext(zeros(0, 3), 0, 3)
    assert shape(v) == (3, 3) and shape(vinv) == (3, 3)
    assert v == identity(3)


def test_invariant_factors():
    assert invariant_factors([[2, 0], [0, 3]]) == [1, 6]
    assert invariant_factors([[1, 0], [0, 1]]) == [1, 1]
    assert invariant_factors([[0, 0], [0, 0]]) == []


def test_kernels_agree():
    """The selected kernel and the pure fallback give identical output."""
    import random

    from momentangle import _snf_pure
    from momentangle import snf

    rng = random.Random(31)
    for _ in range(50):
        m, n = rng.randint(1, 5), rng.randint(1, 5)
        a = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        selected = snf.smith_normal_form_ext(a)
        pure = _snf_pure.snf_ext([row[:] for row in a], m, n)
        assert selected == pure


def test_determinant_preserved_up_to_sign():
    a = [[3, 1, -2], [0, 4, 5], [7, -1, 2]]
    d = check_postconditions(a)
    prod = 1
    for x in diagonal(d):
        prod *= x
    assert prod == abs(bareiss_det(a))
