from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from bhmirror import exactla

F = Fraction


def test_rank_and_det_frozen():
    m = [[2, 1], [0, 2]]
    assert exactla.rat_rank(m) == 2
    assert exactla.rat_det(m) == 4
    assert exactla.rat_rank([[1, 2], [2, 4]]) == 1
    assert exactla.rat_det([[1, 2], [2, 4]]) == 0


def test_solve_frozen():
    # [[2,1],[0,2]] x = (1,1)  =>  x = (1/4, 1/2)
    assert exactla.rat_solve([[2, 1], [0, 2]], [1, 1]) == [F(1, 4), F(1, 2)]
    assert exactla.rat_solve([[1, 1], [1, 1]], [1, 2]) is None


def test_inverse_frozen():
    inv = exactla.rat_inv([[2, 1], [0, 2]])
    assert inv == [[F(1, 2), F(-1, 4)], [F(0), F(1, 2)]]


def test_smith_normal_form_frozen():
    a = [[2, 1], [0, 2]]
    u, d, v = exactla.smith_normal_form(a)
    assert d == [[1, 0], [0, 4]]
    assert exactla.mat_eq(exactla.mat_mul(exactla.mat_mul(u, a), v), d)
    _, d2, _ = exactla.smith_normal_form([[2, 0], [0, 2]])
    assert d2 == [[2, 0], [0, 2]]


def test_hermite_normal_form_frozen():
    h, u = exactla.hermite_normal_form([[2, 0], [1, 1]])
    assert exactla.mat_eq(exactla.mat_mul(u, [[2, 0], [1, 1]]), h)
    assert h == [[1, 1], [0, 2]]


def test_sparse_rank_matches_dense():
    rows = [{0: F(1), 2: F(3)}, {0: F(2), 2: F(6)}, {1: F(1)}]
    assert exactla.sparse_rank(rows) == 2


sq = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n),
                       min_size=n, max_size=n))


@settings(max_examples=60, deadline=None)
@given(sq)
def test_snf_properties(a):
    u, d, v = exactla.smith_normal_form(a)
    n = len(a)
    assert exactla.mat_eq(exactla.mat_mul(exactla.mat_mul(u, a), v), d)
    assert abs(exactla.rat_det(u)) == 1
    assert abs(exactla.rat_det(v)) == 1
    diag = [d[i][i] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j:
                assert d[i][j] == 0
    for i in range(n - 1):
        if diag[i]:
            assert diag[i + 1] % diag[i] == 0
        else:
            assert diag[i + 1] == 0


@settings(max_examples=60, deadline=None)
@given(sq)
def test_hnf_properties(a):
    h, u = exactla.hermite_normal_form(a)
    assert abs(exactla.rat_det(u)) == 1
    assert exactla.mat_eq(exactla.mat_mul(u, a), h)


@settings(max_examples=60, deadline=None)
@given(sq, st.lists(st.integers(-5, 5), min_size=1, max_size=4))
def test_solve_roundtrip(a, b):
    if len(b) != len(a):
        b = (b * len(a))[:len(a)]
    x = exactla.rat_solve(a, b)
    if x is not None:
        assert exactla.mat_vec(a, x) == [F(v) for v in b]
    else:
        assert exactla.rat_rank(a) < exactla.rat_rank(
            [row + [bv] for row, bv in zip(a, b)])
