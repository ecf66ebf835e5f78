import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from latticepaths.core import (
    CountMatrix,
    CountTriangle,
    DomainError,
    NonIntegralError,
    ShapeError,
    binomial,
    diag_pow2,
    identity_matrix,
    mat_mul,
    mat_transpose,
    multinomial,
    pascal_matrix,
    ratio_to_int,
)


@pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (7, 0, 1), (7, 3, 35)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


@pytest.mark.parametrize("k", [-3, -1, 8, 20])
def test_binomial_outside_range_is_zero(k):
    assert binomial(7, k) == 0


def test_binomial_matches_math_comb():
    for n in range(80):
        for k in range(-2, n + 3):
            expected = math.comb(n, k) if 0 <= k <= n else 0
            assert binomial(n, k) == expected


def test_binomial_huge_exact():
    assert binomial(400, 200) == math.comb(400, 200)


@given(st.integers(2, 300), st.data())
def test_pascal_rule(n, data):
    k = data.draw(st.integers(1, n - 1))
    assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@given(st.integers(0, 300), st.data())
def test_binomial_symmetry(n, data):
    k = data.draw(st.integers(0, n))
    assert binomial(n, k) == binomial(n, n - k)


def _multinomial_by_factorials(total, parts):
    out = math.factorial(total)
    for x in parts:
        out //= math.factorial(x)
    return out


@pytest.mark.parametrize(
    "total,parts,expected", [(2, [0, 0, 2], 1), (3, [1, 1, 1], 6), (4, [2, 2, 0], 6)]
)
def test_multinomial_examples(total, parts, expected):
    assert multinomial(total, parts) == expected
    assert _multinomial_by_factorials(total, parts) == expected


@given(st.lists(st.integers(0, 15), min_size=1, max_size=4))
def test_multinomial_matches_factorials(parts):
    assert multinomial(sum(parts), parts) == _multinomial_by_factorials(sum(parts), parts)


@given(st.integers(0, 60), st.integers(0, 60))
def test_multinomial_two_parts_is_binomial(a, b):
    assert multinomial(a + b, [a, b]) == binomial(a + b, a)


def test_multinomial_bad_sum():
    with pytest.raises(DomainError):
        multinomial(5, [1, 1])


def test_pascal_matrix():
    assert pascal_matrix(1).tolist() == [[1]]
    assert pascal_matrix(3).tolist() == [[1, 0, 0], [1, 1, 0], [1, 2, 1]]
    for n in range(1, 20):
        assert sum(pascal_matrix(n).entries[n - 1]) == 2 ** (n - 1)
    with pytest.raises(DomainError):
        pascal_matrix(0)


def test_diag_pow2():
    assert diag_pow2(1).tolist() == [[1]]
    assert diag_pow2(3).tolist() == [[1, 0, 0], [0, 2, 0], [0, 0, 4]]
    for n in range(1, 20):
        d = diag_pow2(n)
        assert sum(d[i, i] for i in range(n)) == 2**n - 1
    with pytest.raises(DomainError):
        diag_pow2(0)


def _naive_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        for j in range(cols):
            for k in range(inner):
                out[i][j] += a[i][k] * b[k][j]
    return out


def matrices(rows, cols):
    big = st.integers(-(10**30), 10**30)
    return st.lists(st.lists(big, min_size=cols, max_size=cols), min_size=rows, max_size=rows)


@settings(max_examples=50)
@given(st.data())
def test_mat_mul_matches_triple_loop(data):
    r, k, c = (data.draw(st.integers(1, 5)) for _ in range(3))
    a = data.draw(matrices(r, k))
    b = data.draw(matrices(k, c))
    got = mat_mul(CountMatrix.from_rows(a), CountMatrix.from_rows(b))
    assert got.tolist() == _naive_mul(a, b)


@settings(max_examples=50)
@given(matrices(3, 3), matrices(3, 3), matrices(3, 3))
def test_mat_mul_associative(a, b, c):
    A, B, C = (CountMatrix.from_rows(m) for m in (a, b, c))
    assert mat_mul(mat_mul(A, B), C) == mat_mul(A, mat_mul(B, C))


@given(matrices(3, 3))
def test_identity_is_neutral(m):
    M = CountMatrix.from_rows(m)
    assert mat_mul(identity_matrix(3), M) == M
    assert mat_mul(M, identity_matrix(3)) == M


def test_pascal_times_transpose():
    p = pascal_matrix(3)
    assert mat_mul(p, mat_transpose(p)).tolist() == [[1, 1, 1], [1, 2, 3], [1, 3, 6]]
    assert (p @ p.T).tolist() == [[1, 1, 1], [1, 2, 3], [1, 3, 6]]


def test_mat_mul_shape_error():
    with pytest.raises(ShapeError):
        mat_mul(pascal_matrix(2), pascal_matrix(3))


@given(st.integers(1, 4), st.integers(1, 4), st.data())
def test_transpose_involution(r, c, data):
    a = CountMatrix.from_rows(data.draw(matrices(r, c)))
    t = mat_transpose(a)
    assert t.shape == (c, r)
    assert all(t[j, i] == a[i, j] for i in range(r) for j in range(c))
    assert mat_transpose(t) == a


def test_transpose_examples():
    assert mat_transpose(pascal_matrix(2)).tolist() == [[1, 1], [0, 1]]
    q3 = CountMatrix.from_rows([[1, 1, 1], [1, 2, 3], [1, 3, 6]])
    assert mat_transpose(q3) == q3


def test_ratio_to_int():
    assert ratio_to_int(Fraction(6, 1)) == 6
    assert ratio_to_int(Fraction(12, 2)) == 6
    with pytest.raises(NonIntegralError) as err:
        ratio_to_int(Fraction(2, 3) * binomial(5, 2))
    assert err.value.value == Fraction(20, 3)


def test_ratio_prefactor_integral_on_domain():
    for p in range(21):
        for q in range(p + 1):
            ratio_to_int(Fraction(p - q + 1, p + 1) * binomial(p + q, q))


@given(st.integers(-(10**12), 10**12), st.integers(1, 10**12))
def test_fraction_lowest_terms(a, b):
    r = Fraction(a, b) + Fraction(1, b)
    assert r.denominator > 0
    assert math.gcd(abs(r.numerator), r.denominator) == 1


def test_triangle_rejects_cells_above_diagonal():
    t = CountTriangle.from_rows([[1], [1, 1]])
    assert t[1, 1] == 1
    with pytest.raises(IndexError):
        t[0, 1]
    with pytest.raises(ShapeError):
        CountTriangle.from_rows([[1], [1]])


def test_matrix_shape_checks():
    with pytest.raises(ShapeError):
        CountMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(IndexError):
        pascal_matrix(2)[2, 0]
