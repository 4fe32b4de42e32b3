import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from torsionheart import linalg


def _random_matrix(draw, p, max_dim=4):
    rows = draw(st.integers(0, max_dim))
    cols = draw(st.integers(0, max_dim))
    entries = draw(st.lists(st.integers(0, p - 1), min_size=rows * cols,
                            max_size=rows * cols))
    return np.array(entries, dtype=np.int64).reshape(rows, cols)


matrices_mod5 = st.builds(
    lambda flat, rows, cols: np.array(
        (flat * (rows * cols + 1))[: rows * cols], dtype=np.int64,
    ).reshape(rows, cols),
    st.lists(st.integers(0, 4), min_size=1, max_size=16),
    st.integers(1, 4),
    st.integers(1, 4),
)


@settings(max_examples=60, deadline=None)
@given(matrices_mod5)
def test_rref_idempotent_and_rank(a):
    p = 5
    r, pivots = linalg.rref(a, p)
    r2, pivots2 = linalg.rref(r, p)
    assert np.array_equal(r, r2)
    assert pivots == pivots2
    assert len(pivots) == linalg.rank(a, p)


@settings(max_examples=60, deadline=None)
@given(matrices_mod5)
def test_nullspace_annihilates(a):
    p = 5
    ns = linalg.nullspace(a, p)
    if ns.shape[0]:
        assert not ((a @ ns.T) % p).any()
    assert ns.shape[0] == a.shape[1] - linalg.rank(a, p)


@settings(max_examples=60, deadline=None)
@given(matrices_mod5)
def test_left_nullspace(a):
    p = 5
    ns = linalg.left_nullspace(a, p)
    if ns.shape[0]:
        assert not ((ns @ a) % p).any()


@settings(max_examples=40, deadline=None)
@given(matrices_mod5, matrices_mod5)
def test_solve_left_roundtrip(a, x):
    p = 5
    if x.shape[1] != a.shape[0]:
        x = x[:, : a.shape[0]]
        if x.shape[1] < a.shape[0]:
            x = np.pad(x, ((0, 0), (0, a.shape[0] - x.shape[1])))
    b = (x @ a) % p
    sol = linalg.solve_left(a, b, p)
    assert sol is not None
    assert np.array_equal((sol @ a) % p, b)


def test_solve_left_unsolvable():
    a = np.array([[1, 0]], dtype=np.int64)
    b = np.array([[0, 1]], dtype=np.int64)
    assert linalg.solve_left(a, b, 2) is None


def test_inverse():
    a = np.array([[1, 1], [0, 1]], dtype=np.int64)
    inv = linalg.inverse(a, 2)
    assert np.array_equal(linalg.matmul(a, inv, 2), linalg.eye(2))
    assert linalg.inverse(np.array([[1, 1], [1, 1]], dtype=np.int64), 2) is None


def test_subspace_count_f2_dim2():
    # 1 + 3 + 1 subspaces of F_2^2
    assert sum(1 for _ in linalg.subspace_bases(2, 2)) == 5


def test_subspace_count_f3_dim2():
    # 1 + 4 + 1 subspaces of F_3^2
    assert sum(1 for _ in linalg.subspace_bases(2, 3)) == 6


def test_subspace_bases_unique():
    seen = set()
    for b in linalg.subspace_bases(3, 2):
        key = b.tobytes() + bytes([b.shape[0]])
        assert key not in seen
        seen.add(key)
    assert len(seen) == 1 + 7 + 7 + 1


def test_minimal_polynomial_nilpotent():
    a = np.array([[0, 1], [0, 0]], dtype=np.int64)
    assert linalg.minimal_polynomial(a, 2) == [0, 0, 1]  # t^2


def test_minimal_polynomial_idempotent():
    a = np.array([[1, 0], [0, 0]], dtype=np.int64)
    # t^2 - t = t^2 + t over F_2
    assert linalg.minimal_polynomial(a, 2) == [0, 1, 1]


def test_poly_eval():
    a = np.array([[0, 1], [0, 0]], dtype=np.int64)
    out = linalg.poly_eval_matrix([1, 1], a, 2)  # 1 + t at a
    assert np.array_equal(out, (linalg.eye(2) + a) % 2)


def test_intersect_row_spaces():
    a = np.array([[1, 0, 0], [0, 1, 0]], dtype=np.int64)
    b = np.array([[0, 1, 0], [0, 0, 1]], dtype=np.int64)
    inter = linalg.intersect_row_spaces(a, b, 2)
    assert inter.shape[0] == 1
    assert np.array_equal(inter[0], np.array([0, 1, 0]))
