import numpy as np
import pytest

from clifftest import gf2, pauli
from clifftest.errors import BudgetExceededError

X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]])
Z = np.diag([1.0, -1.0]).astype(complex)


def test_weyl_single_qubit_letters():
    n = 1
    assert np.allclose(pauli.weyl_matrix(pauli.WeylLabel(n, (1, 0))), X)
    assert np.allclose(pauli.weyl_matrix(pauli.WeylLabel(n, (0, 1))), Z)
    # a=b=1 carries the i^(a.b) phase making it Hermitian Y
    assert np.allclose(pauli.weyl_matrix(pauli.WeylLabel(n, (1, 1))), Y)


def test_weyl_hermitian_unitary_exhaustive():
    for n in (1, 2):
        for i in range(4 ** n):
            P = np.asarray(pauli.weyl_matrix(pauli.WeylLabel.from_index(n, i)))
            assert np.allclose(P, P.conj().T)
            assert np.allclose(P @ P, np.eye(2 ** n))


def test_weyl_trace_orthogonality():
    n = 2
    mats = [
        np.asarray(pauli.weyl_matrix(pauli.WeylLabel.from_index(n, i)))
        for i in range(16)
    ]
    for i in range(16):
        for j in range(16):
            tr = np.trace(mats[i] @ mats[j])
            assert abs(tr - (4.0 if i == j else 0.0)) < 1e-12


def test_weyl_mul_matches_dense():
    rng = np.random.default_rng(2)
    for _ in range(200):
        n = int(rng.integers(1, 3))
        p = pauli.PhasedPauli(
            pauli.WeylLabel.from_index(n, int(rng.integers(4 ** n))),
            int(rng.integers(4)),
        )
        q = pauli.PhasedPauli(
            pauli.WeylLabel.from_index(n, int(rng.integers(4 ** n))),
            int(rng.integers(4)),
        )
        prod = pauli.weyl_mul(p, q)
        assert np.allclose(prod.matrix(), p.matrix() @ q.matrix(), atol=1e-12)


def test_phased_pauli_text_roundtrip():
    for text in ("XZY", "-iXZY", "iZ", "-Y", "II", "X"):
        p = pauli.parse_phased_pauli(text)
        assert str(p) == text
        q = pauli.parse_phased_pauli(str(p))
        assert q == p


def test_parse_rejects_garbage():
    for bad in ("", "i", "XQ", "--X"):
        with pytest.raises(ValueError):
            pauli.parse_phased_pauli(bad)


def test_stabilizer_state_vector_plus():
    t = pauli.StabilizerTableau(1, (pauli.parse_phased_pauli("X"),))
    psi = pauli.stabilizer_state_vector(t)
    assert np.allclose(np.abs(psi), np.sqrt(0.5))
    assert np.allclose(X @ psi, psi)


def test_stabilizer_state_vector_bell():
    t = pauli.StabilizerTableau(
        2, (pauli.parse_phased_pauli("XX"), pauli.parse_phased_pauli("ZZ"))
    )
    psi = pauli.stabilizer_state_vector(t)
    bell = np.array([1, 0, 0, 1]) / np.sqrt(2)
    assert abs(abs(np.vdot(bell, psi)) - 1.0) < 1e-12


def test_stabilizer_tableau_rejects_empty_eigenspace():
    with pytest.raises(ValueError):
        # -I is not a stabilizer: X and -X stabilize nothing jointly
        pauli.StabilizerTableau(
            1, (pauli.parse_phased_pauli("X"), pauli.parse_phased_pauli("-X"))
        )


def test_tableau_json_roundtrip():
    t = pauli.StabilizerTableau(
        2, (pauli.parse_phased_pauli("XX"), pauli.parse_phased_pauli("-ZZ"))
    )
    assert pauli.StabilizerTableau.from_json(t.to_json()) == t


def test_clifford_element_validates_symplectic():
    bad = np.eye(2, dtype=np.uint8)
    bad[0, 1] = 0
    bad[1, 0] = 0
    bad[0, 0] = 0  # singular
    with pytest.raises(ValueError):
        pauli.CliffordElement(1, bad, np.zeros(2, dtype=np.uint8))


def test_conjugation_matches_dense():
    rng = np.random.default_rng(4)
    for _ in range(60):
        n = int(rng.integers(1, 3))
        c = pauli.random_clifford(n, rng)
        C = pauli.clifford_matrix(c)
        assert np.allclose(C @ C.conj().T, np.eye(2 ** n), atol=1e-10)
        for idx in range(4 ** n):
            p = pauli.PhasedPauli(pauli.WeylLabel.from_index(n, idx), 0)
            img = pauli.conjugate_label(c, p)
            lhs = C @ p.matrix() @ C.conj().T
            assert np.allclose(lhs, img.matrix(), atol=1e-10)


def test_random_symplectic_preserves_form():
    rng = np.random.default_rng(8)
    for n in (1, 2, 3):
        J = gf2.symplectic_form_matrix(2 * n)
        for _ in range(20):
            S = pauli.random_symplectic(n, rng)
            assert np.array_equal(gf2.mat2mul(S.T, gf2.mat2mul(J, S)), J)


def test_random_symplectic_uniform_n1():
    # Sp(2, F2) has 6 elements; chi-square sanity at 6000 draws
    rng = np.random.default_rng(10)
    counts = {}
    for _ in range(6000):
        S = pauli.random_symplectic(1, rng)
        counts[S.tobytes()] = counts.get(S.tobytes(), 0) + 1
    assert len(counts) == 6
    assert all(800 < c < 1200 for c in counts.values())


def test_enumerate_symplectic_counts():
    assert len(pauli.enumerate_symplectic(1)) == 6
    assert len(pauli.enumerate_symplectic(2)) == 720


def test_enumerate_lagrangians_counts():
    # prod_{i<=n} (2^i + 1)
    assert len(pauli.enumerate_lagrangians(1)) == 3
    assert len(pauli.enumerate_lagrangians(2)) == 15
    assert len(pauli.enumerate_lagrangians(3)) == 135


def test_enumerate_lagrangians_are_lagrangian():
    for n in (1, 2):
        for L in pauli.enumerate_lagrangians(n):
            assert gf2.is_lagrangian(L)


def test_enumerate_stabilizer_states_counts():
    assert len(pauli.enumerate_stabilizer_states(1)) == 6
    assert len(pauli.enumerate_stabilizer_states(2)) == 60


def test_stabilizer_states_distinct():
    states = [
        pauli.stabilizer_state_vector(t) for t in pauli.enumerate_stabilizer_states(1)
    ]
    G = np.abs(np.array(states) @ np.array(states).conj().T) ** 2
    # distinct states of the 6-element octahedron: overlaps 1 on the
    # diagonal, 0 or 1/2 elsewhere
    off = G - np.eye(6)
    assert np.max(off) < 0.5 + 1e-12


def test_clifford_count_projective():
    seen = {c.key()[0:2] for c in pauli.enumerate_cliffords(1)}
    # 6 symplectics x 4 phase-bit patterns
    assert len(list(pauli.enumerate_cliffords(1))) == 24


def test_clifford_matrix_bank_sizes():
    assert pauli.clifford_matrix_bank(1).shape == (24, 2, 2)
    assert pauli.clifford_matrix_bank(2).shape == (11520, 4, 4)


def test_enumeration_guards():
    with pytest.raises(BudgetExceededError):
        pauli.enumerate_symplectic(3)
    with pytest.raises(BudgetExceededError):
        pauli.enumerate_lagrangians(5)
