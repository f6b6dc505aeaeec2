import numpy as np
import pytest

from clifftest import gf2
from clifftest.errors import BudgetExceededError


def test_rref_canonical_under_row_ops():
    rng = np.random.default_rng(11)
    for _ in range(100):
        rows = rng.integers(0, 2, (4, 6)).astype(np.uint8)
        R1, _ = gf2.rref(rows)
        mixed = rows.copy()
        mixed[0] ^= mixed[2]
        mixed[3] ^= mixed[1]
        rng.shuffle(mixed)
        R2, _ = gf2.rref(mixed)
        assert np.array_equal(R1, R2)


def test_rref_pivot_columns_are_unit():
    R, pivots = gf2.rref([[1, 1, 0, 1], [0, 1, 1, 0], [1, 0, 1, 1]])
    for i, c in enumerate(pivots):
        col = R[:, c]
        assert col[i] == 1 and col.sum() == 1


def test_rank_nullity():
    rng = np.random.default_rng(5)
    for _ in range(200):
        m = rng.integers(0, 2, (rng.integers(1, 7), rng.integers(1, 7)))
        m = m.astype(np.uint8)
        assert gf2.rank(m) + gf2.kernel(m).dim == m.shape[1]


def test_kernel_vectors_are_in_kernel():
    m = np.array([[1, 0, 1, 1], [0, 1, 1, 0]], dtype=np.uint8)
    K = gf2.kernel(m)
    for v in gf2.enumerate_elements(K):
        assert not gf2.mat2mul(m, v[:, None]).any()


def test_solve_consistent_and_inconsistent():
    m = np.array([[1, 1, 0], [0, 1, 1]], dtype=np.uint8)
    b = np.array([1, 0], dtype=np.uint8)
    x = gf2.solve(m, b)
    assert x is not None
    assert np.array_equal(gf2.mat2mul(m, x[:, None])[:, 0], b)
    # rank-deficient system with incompatible rhs
    m2 = np.array([[1, 1], [1, 1]], dtype=np.uint8)
    assert gf2.solve(m2, np.array([1, 0], dtype=np.uint8)) is None


def test_subspace_equality_is_structural():
    a = gf2.Subspace.from_vectors([[1, 0, 1], [0, 1, 1]], 3)
    b = gf2.Subspace.from_vectors([[1, 1, 0], [0, 1, 1]], 3)
    assert a == b
    assert hash(a) == hash(b)
    assert len({a, b}) == 1


def test_subspace_contains():
    V = gf2.Subspace.from_vectors([[1, 1, 0, 0], [0, 0, 1, 1]], 4)
    assert V.contains([1, 1, 1, 1])
    assert not V.contains([1, 0, 0, 0])


def test_dual_involution_both_forms():
    rng = np.random.default_rng(3)
    for _ in range(50):
        V = gf2.Subspace.from_vectors(rng.integers(0, 2, (3, 6)).astype(np.uint8), 6)
        for form in ("standard", "symplectic"):
            W = gf2.dual(V, form)
            assert V.dim + W.dim == 6
            assert gf2.dual(W, form) == V


def test_symplectic_form_alternating():
    rng = np.random.default_rng(7)
    for _ in range(100):
        x = rng.integers(0, 2, 8).astype(np.uint8)
        y = rng.integers(0, 2, 8).astype(np.uint8)
        assert gf2.symplectic_inner(x, x) == 0
        assert gf2.symplectic_inner(x, y) == gf2.symplectic_inner(y, x)


def test_symplectic_inner_matches_form_matrix():
    J = gf2.symplectic_form_matrix(6)
    rng = np.random.default_rng(9)
    for _ in range(50):
        x = rng.integers(0, 2, 6).astype(np.uint8)
        y = rng.integers(0, 2, 6).astype(np.uint8)
        via_matrix = int(gf2.mat2mul(x[None, :], gf2.mat2mul(J, y[:, None]))[0, 0])
        assert gf2.symplectic_inner(x, y) == via_matrix


def test_lagrangian_detection():
    # span{(1,0), (0,0)} in F2^2: the X axis, isotropic and maximal
    V = gf2.Subspace.from_vectors([[1, 0]], 2)
    assert gf2.is_isotropic(V)
    assert gf2.is_lagrangian(V)
    W = gf2.Subspace.full(2)
    assert not gf2.is_isotropic(W)


def test_enumerate_subspaces_gaussian_binomial():
    for amb, k in [(3, 1), (4, 2), (5, 2)]:
        subs = list(gf2.enumerate_subspaces(amb, k))
        assert len(subs) == gf2.gaussian_binomial(amb, k)
        assert len(set(subs)) == len(subs)


def test_gaussian_binomial_values():
    assert gf2.gaussian_binomial(4, 2) == 35
    assert gf2.gaussian_binomial(4, 0) == 1
    assert gf2.gaussian_binomial(3, 1) == 7


def test_enumerate_elements_count():
    V = gf2.Subspace.from_vectors([[1, 0, 0], [0, 1, 0]], 3)
    els = gf2.enumerate_elements(V)
    assert len(els) == 4


def test_enumeration_guards():
    with pytest.raises(BudgetExceededError):
        gf2.enumerate_elements(gf2.Subspace.full(30))
    with pytest.raises(BudgetExceededError):
        list(gf2.enumerate_subspaces(12, 3))


def test_intersect_and_sum():
    V = gf2.Subspace.from_vectors([[1, 0, 0], [0, 1, 0]], 3)
    W = gf2.Subspace.from_vectors([[0, 1, 0], [0, 0, 1]], 3)
    I = gf2.intersect(V, W)
    S = gf2.subspace_sum(V, W)
    assert I.dim == 1 and I.contains([0, 1, 0])
    assert S == gf2.Subspace.full(3)
    assert V.dim + W.dim == I.dim + S.dim


def test_rref_ints_matches_dense():
    rng = np.random.default_rng(13)
    for _ in range(100):
        m = rng.integers(0, 2, (4, 8)).astype(np.uint8)
        packed = gf2.rref_ints(gf2.pack_rows(m), 8)
        dense, _ = gf2.rref(m)
        assert np.array_equal(gf2.unpack_rows(packed, 8), dense)
