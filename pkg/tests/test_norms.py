import numpy as np
import pytest

from clifftest import densesim, norms, pauli
from clifftest.errors import BudgetExceededError

T_GATE = np.diag([1.0, np.exp(1j * np.pi / 4)])


def haar(n, seed):
    return densesim.haar_unitary(n, np.random.default_rng(seed))


def rand_state(m, seed):
    rng = np.random.default_rng(seed)
    psi = rng.normal(size=2 ** m) + 1j * rng.normal(size=2 ** m)
    return psi / np.linalg.norm(psi)


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("n", [1, 2])
def test_q2_fourth_power_identity(n, seed):
    U = haar(n, seed)
    q2 = norms.qk_norm(U, 2).value
    diag = np.sum(np.diag(densesim.char_dist_unitary(U).table))
    assert abs(q2 ** 4 - diag) < 1e-9


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("n", [1, 2])
def test_q3_two_norm_identity(n, seed):
    U = haar(n, seed)
    q3 = norms.qk_norm(U, 3).value
    p2 = np.sum(densesim.char_dist_unitary(U).table ** 2)
    assert abs(q3 ** 8 - 4 ** n * p2) < 1e-9


@pytest.mark.parametrize("seed", range(10))
@pytest.mark.parametrize("m", [1, 2, 3])
def test_u3_state_identity(m, seed):
    psi = rand_state(m, seed)
    u3 = norms.gowers_uk(psi, 3).value
    p2 = np.sum(densesim.char_dist_state(psi).table ** 2)
    assert abs(u3 ** 8 - 2 ** m * p2) < 1e-9


@pytest.mark.parametrize("seed", range(10))
def test_q3_equals_choi_u3(seed):
    n = 1 + seed % 2
    U = haar(n, 50 + seed)
    q3 = norms.qk_norm(U, 3).value
    u3 = norms.gowers_uk(densesim.choi_state(U), 3).value
    assert abs(q3 - u3) < 1e-9


def test_clifford_q3_is_one():
    for C in pauli.clifford_matrix_bank(1):
        assert abs(norms.qk_norm(C, 3).value - 1.0) < 1e-10


def test_t_gate_q3():
    # ||T||_Q3^8 = 4 ||p_T||_2^2 = 4 * (2/16 + 4/64) = 3/4
    q3 = norms.qk_norm(T_GATE, 3).value
    assert abs(q3 ** 8 - 0.75) < 1e-12


def test_u1_is_plain_sum():
    psi = np.array([0.6, 0.8], dtype=complex)
    v = norms.gowers_uk(psi, 1).value
    assert abs(v - abs(psi.sum())) < 1e-12


def test_norm_value_validation():
    with pytest.raises(ValueError):
        norms.NormValue(2, -1.0, "sum")
    with pytest.raises(ValueError):
        norms.gowers_uk(np.ones(2) / np.sqrt(2), 4)
    with pytest.raises(ValueError):
        norms.qk_norm(np.eye(2, dtype=complex), 0)


def test_budget_guards():
    with pytest.raises(BudgetExceededError):
        norms.qk_norm(np.eye(16, dtype=complex), 2)
    with pytest.raises(BudgetExceededError):
        norms.gowers_uk(np.ones(2 ** 7) / 2 ** 3.5, 2)


def test_qk_monotone_near_clifford():
    # interpolate T^s: the Q3 norm rises to 1 as the gate becomes Clifford
    vals = []
    for s in (1.0, 0.5, 0.25, 0.0):
        U = np.diag([1.0, np.exp(1j * s * np.pi / 4)])
        vals.append(norms.qk_norm(U, 3).value)
    assert vals[-1] == pytest.approx(1.0, abs=1e-12)
    assert vals[0] < vals[1] < vals[2] < vals[3] + 1e-12
