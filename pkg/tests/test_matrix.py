import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ffsolve import (
    ZZ,
    ZZ_t,
    DimensionMismatch,
    InexactDivision,
    Mat,
    MulBackend,
    OpCounts,
    block,
    hconcat,
    identity,
    mat_div_scalar,
    mat_mul,
    mat_scale,
    mat_sub,
    vconcat,
    zeros,
)
from ffsolve.metrics import mul_cost

from helpers import GOLDEN, rand_mat

STRASSEN1 = MulBackend.strassen(1)


def test_mat_mul_worked_product():
    a = Mat([[0, 1], [1, 0]])
    b = Mat([[2, -3, 4], [-1, 4, 8]])
    assert mat_mul(a, b) == Mat([[-1, 4, 8], [2, -3, 4]])
    assert mat_mul(a, b, STRASSEN1) == Mat([[-1, 4, 8], [2, -3, 4]])


def test_identity_product():
    x = Mat([[1, 2, 3], [4, 5, 6]])
    assert mat_mul(identity(2), x) == x


def test_scale_sub_div_worked_values():
    assert mat_scale(5, Mat([[2, 0, -2], [0, 2, -1]])) == Mat([[10, 0, -10], [0, 10, -5]])
    assert mat_scale(27, Mat([[4], [8]])) == Mat([[108], [216]])
    got = mat_sub(Mat([[10, 0, -10], [0, 10, -5]]), Mat([[-1, 4, 8], [2, -3, 4]]))
    assert got == Mat([[11, -4, -18], [-2, 13, -9]])
    rhs = mat_sub(mat_scale(27, Mat([[4], [8]])), mat_mul(Mat([[2, -3], [-1, 4]]), Mat([[-54], [-27]])))
    assert rhs == Mat([[135], [270]])
    assert mat_div_scalar(Mat([[6, -9, 12]]), 3) == Mat([[2, -3, 4]])
    assert mat_div_scalar(rhs, 5) == Mat([[27], [54]])


def test_trivial_identities():
    x = Mat([[1, -2], [3, 4]])
    assert mat_scale(1, x) == x
    assert mat_sub(x, x) == zeros(2, 2)
    ctx = OpCounts()
    assert mat_div_scalar(x, 1, ctx, unit=True) == x
    assert ctx.divs == 0 and ctx.unit_divs == 4


def test_div_scalar_reports_entry():
    with pytest.raises(InexactDivision) as exc:
        mat_div_scalar(Mat([[2, 4], [6, 7]]), 2)
    assert exc.value.where == (1, 1)


def test_dimension_errors():
    with pytest.raises(DimensionMismatch):
        mat_mul(Mat([[1, 2]]), Mat([[1, 2]]))
    with pytest.raises(DimensionMismatch):
        mat_sub(Mat([[1, 2]]), Mat([[1], [2]]))
    with pytest.raises(DimensionMismatch):
        hconcat(Mat([[1]]), Mat([[1], [2]]))
    with pytest.raises(DimensionMismatch):
        block(Mat([[1]]), (0, 2), (0, 1))
    with pytest.raises(DimensionMismatch):
        Mat([[1, 2], [3]])


def test_block_split_of_worked_matrix():
    a = Mat(GOLDEN)
    upper, lower = block(a, (0, 2), (0, 5)), block(a, (2, 4), (0, 5))
    assert upper == Mat(GOLDEN[:2]) and lower == Mat(GOLDEN[2:])
    assert vconcat(upper, lower) == a
    assert vconcat(a) == a


def test_zero_width_blocks():
    a = Mat([[1, 2], [3, 4]])
    empty = block(a, (0, 2), (2, 2))
    assert empty.shape == (2, 0)
    assert hconcat(a, empty) == a and hconcat(empty, a) == a
    assert vconcat(block(a, (0, 0), (0, 2)), a) == a
    z = mat_mul(a, empty)
    assert z.shape == (2, 0)
    assert mat_mul(Mat([[], []], cols=0), Mat([], cols=3)) == zeros(2, 3)


@given(st.data())
def test_block_concat_roundtrip(data):
    r = data.draw(st.integers(0, 5))
    c = data.draw(st.integers(0, 5))
    a = Mat([[data.draw(st.integers(-9, 9)) for _ in range(c)] for _ in range(r)], cols=c)
    i = data.draw(st.integers(0, r))
    j = data.draw(st.integers(0, c))
    top = hconcat(block(a, (0, i), (0, j)), block(a, (0, i), (j, c)))
    bottom = hconcat(block(a, (i, r), (0, j)), block(a, (i, r), (j, c)))
    assert vconcat(top, bottom) == a


def _naive(a, b):
    return [[sum(a[i, p] * b[p, j] for p in range(a.cols)) for j in range(b.cols)] for i in range(a.rows)]


def test_strassen_matches_classical_200_products():
    rng = random.Random(11)
    for trial in range(200):
        dom = ZZ if trial % 2 else ZZ_t
        l, n, c = (rng.randint(1, 17) for _ in range(3))
        if dom is ZZ_t:
            l, n, c = (min(x, 9) for x in (l, n, c))
        a, b = rand_mat(rng, l, n, dom, 20, 2), rand_mat(rng, n, c, dom, 20, 2)
        cutoff = rng.choice([1, 2, 3, 8])
        classical = mat_mul(a, b)
        assert mat_mul(a, b, MulBackend.strassen(cutoff)) == classical
        if dom is ZZ:
            assert classical.tolist() == _naive(a, b)


def test_strassen_random_4x4():
    rng = random.Random(2)
    a, b = rand_mat(rng, 4, 4), rand_mat(rng, 4, 4)
    assert mat_mul(a, b, STRASSEN1) == mat_mul(a, b)


@pytest.mark.parametrize("l,n,c", [(1, 1, 1), (3, 4, 5), (7, 2, 9), (16, 16, 16), (6, 5, 3)])
def test_classical_counts(l, n, c):
    ctx = OpCounts()
    mat_mul(Mat([[1] * n] * l, cols=n), Mat([[1] * c] * n, cols=c), ctx=ctx)
    assert (ctx.muls, ctx.adds) == (l * n * c, l * (n - 1) * c)


@pytest.mark.parametrize("l,n,c", [(4, 4, 4), (5, 7, 3), (8, 8, 9), (16, 16, 16)])
def test_strassen_cutoff_above_max_dim_is_classical(l, n, c):
    rng = random.Random(l * n * c)
    a, b = rand_mat(rng, l, n), rand_mat(rng, n, c)
    c1, c2 = OpCounts(), OpCounts()
    mat_mul(a, b, ctx=c1)
    mat_mul(a, b, MulBackend.strassen(max(l, n, c)), ctx=c2)
    assert c1 == c2


def test_strassen_power_of_two_counts():
    ctx = OpCounts()
    rng = random.Random(3)
    mat_mul(rand_mat(rng, 8, 8), rand_mat(rng, 8, 8), STRASSEN1, ctx)
    assert ctx.muls == 7**3
    # every Strassen level does 18 half-size additions
    assert ctx.adds == 18 * 16 + 7 * (18 * 4 + 7 * 18)


@pytest.mark.parametrize("shape", [(3, 5, 7), (9, 9, 9), (2, 2, 3), (6, 11, 4), (17, 3, 12)])
@pytest.mark.parametrize("cutoff", [1, 2, 4])
def test_mul_cost_model_matches_instrumentation(shape, cutoff):
    rng = random.Random(sum(shape))
    l, n, c = shape
    ctx = OpCounts()
    mat_mul(rand_mat(rng, l, n), rand_mat(rng, n, c), MulBackend.strassen(cutoff), ctx)
    assert mul_cost(l, n, c, MulBackend.strassen(cutoff)) == (ctx.adds, ctx.muls)


def test_mat_mul_associative():
    rng = random.Random(4)
    for _ in range(50):
        p, q, r, s = (rng.randint(1, 6) for _ in range(4))
        a, b, c = rand_mat(rng, p, q), rand_mat(rng, q, r), rand_mat(rng, r, s)
        assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c, STRASSEN1), STRASSEN1)


def test_mixed_domains_rejected():
    with pytest.raises(DimensionMismatch):
        mat_mul(Mat([[1]]), Mat.from_ints([[1]], ZZ_t))


def test_immutable():
    a = Mat([[1]])
    with pytest.raises(AttributeError):
        a.rows = 3


def test_backend_validation():
    with pytest.raises(ValueError):
        MulBackend("strassen", 0)
    with pytest.raises(ValueError):
        MulBackend("winograd")
