import numpy as np
import pytest

from clifftest import densesim, pauli, testers
from clifftest.errors import BudgetExceededError

T_GATE = np.diag([1.0, np.exp(1j * np.pi / 4)])


def test_pacc_exact_t_gate():
    # p_T puts 1/4 on (I,I) and (Z,Z), 1/8 on the four (X/Y, X/Y) pairs;
    # 4 ||p_T||_2^2 = 4 (2/16 + 4/64) = 3/4
    assert abs(testers.pacc_exact(T_GATE) - 0.75) < 1e-12


def test_pacc_exact_clifford_completeness():
    for C in pauli.clifford_matrix_bank(1):
        assert abs(testers.pacc_exact(C) - 1.0) < 1e-10


def test_pacc_exact_matches_pi4_form():
    rng = np.random.default_rng(1)
    for _ in range(5):
        U = densesim.haar_unitary(1, rng)
        assert abs(testers.pacc_exact(U) - testers.pacc_pi4(U)) < 1e-9


def test_pacc_gnw_choi_values():
    # 3-norm of p_T: 2 (1/4)^3 + 4 (1/8)^3 = 5/128; (1 + 16 * 5/128)/2 = 13/16
    assert abs(testers.pacc_gnw_choi(T_GATE) - 13.0 / 16.0) < 1e-12
    assert abs(testers.pacc_gnw_choi(np.eye(2, dtype=complex)) - 1.0) < 1e-12
    rng = np.random.default_rng(2)
    C = pauli.clifford_matrix(pauli.random_clifford(2, rng))
    assert abs(testers.pacc_gnw_choi(C) - 1.0) < 1e-10


def test_run_4query_deterministic():
    cfg = testers.TesterConfig(shots=500, seed=42)
    r1 = testers.run_4query(T_GATE, cfg)
    r2 = testers.run_4query(T_GATE, cfg)
    assert r1.log == r2.log
    assert r1.acceptance_rate == r2.acceptance_rate


def test_run_4query_rate_near_exact():
    cfg = testers.TesterConfig(shots=100_000, seed=7)
    rep = testers.run_4query(T_GATE, cfg)
    sigma = np.sqrt(0.75 * 0.25 / cfg.shots)
    assert abs(rep.acceptance_rate - 0.75) < 4 * sigma
    assert rep.exact_reference == pytest.approx(0.75)


def test_run_4query_clifford_accepts_every_shot():
    rng = np.random.default_rng(3)
    C = pauli.clifford_matrix(pauli.random_clifford(1, rng))
    rep = testers.run_4query(C, testers.TesterConfig(shots=1000, seed=0))
    assert rep.verdict == "accept"
    assert rep.acceptance_rate == 1.0


def test_repetition_count_formula():
    assert testers.four_query_repetitions(1.0) == 24
    assert testers.four_query_repetitions(0.1) == 120
    assert testers.four_query_repetitions(0.5) == 24


def test_run_4query_repeated_rejects_t_gate():
    rejects = 0
    for seed in range(20):
        rep = testers.run_4query_repeated(
            T_GATE, 0.2, testers.TesterConfig(epsilon=0.2, seed=seed)
        )
        rejects += rep.verdict == "reject"
    # per-run rejection is 1/4; 24+ repetitions make misses very rare
    assert rejects >= 19


def test_aux_free_trial_count():
    m = testers.aux_free_trial_count(0.05)
    assert m == int(np.ceil(np.log(3.0) / (0.05 / 16))) + 1
    assert testers.aux_free_trial_count(0.1, p_floor=0.5) == 4


def test_aux_free_accepts_cliffords():
    rng = np.random.default_rng(5)
    for n in (1, 2):
        C = pauli.clifford_matrix(pauli.random_clifford(n, rng))
        rep = testers.run_aux_free_single_copy(
            C, 0.1, testers.TesterConfig(seed=int(rng.integers(2 ** 32)))
        )
        assert rep.verdict == "accept"
        assert rep.acceptance_rate == 1.0
        assert rep.queries_used > rep.shots_used


def test_aux_free_rejects_far_unitary():
    U = np.kron(T_GATE, np.eye(2))
    rep = testers.run_aux_free_single_copy(U, 0.05, testers.TesterConfig(seed=11))
    assert rep.verdict == "reject"


def test_aux_free_log_records_fidelities():
    rng = np.random.default_rng(9)
    C = pauli.clifford_matrix(pauli.random_clifford(1, rng))
    rep = testers.run_aux_free_single_copy(C, 0.5, testers.TesterConfig(seed=1))
    assert len(rep.log) == rep.shots_used
    for tableau_json, fid, ok in rep.log:
        assert abs(fid - 1.0) < 1e-10
        assert ok


def test_oracle_subroutine_failure_injection():
    # with delta = 1 the emulated tester always flips its verdict
    sub = testers.OracleStabTester(emulate_failures=True)
    rng = np.random.default_rng(0)
    psi = np.array([1.0, 0.0], dtype=complex)
    assert sub(lambda: psi, 0.1, 1.0, rng) is False
    assert testers.OracleStabTester()(lambda: psi, 0.1, 1.0, rng) is True


def test_avg_stab_fidelity_bounds():
    rng = np.random.default_rng(13)
    for n in (1, 2):
        for _ in range(5):
            U = densesim.haar_unitary(n, rng)
            avg = testers.avg_stab_fidelity_exact(U)
            fc = densesim.f_cliff(U)
            fs_choi = densesim.f_stab(densesim.choi_state(U))
            assert avg >= fc - 1e-9
            upper = ((fs_choi + 7.0) / 8.0 + 9.0 * 2.0 ** -n) ** 0.25
            assert avg <= upper + 1e-9


def test_avg_stab_fidelity_clifford_is_one():
    rng = np.random.default_rng(17)
    C = pauli.clifford_matrix(pauli.random_clifford(1, rng))
    assert abs(testers.avg_stab_fidelity_exact(C) - 1.0) < 1e-10


def _default_strategy(t):
    zero = np.array([[1, 0], [0, 0]], dtype=complex)
    plus = np.full((2, 2), 0.5, dtype=complex)
    mz = [zero, np.array([[0, 0], [0, 1]], dtype=complex)]
    return [(plus if i % 2 == 0 else zero, mz) for i in range(t)]


@pytest.mark.parametrize("t", [1, 2, 3])
def test_leaf_distribution_group_vs_weingarten(t):
    strat = _default_strategy(t)
    pg = testers.leaf_distribution(strat, "clifford", "group")
    pw = testers.leaf_distribution(strat, "clifford", "weingarten")
    assert max(abs(pg[k] - pw[k]) for k in pg) < 1e-8
    assert abs(sum(pg.values()) - 1.0) < 1e-9


def test_leaf_distribution_depolarizing():
    strat = _default_strategy(2)
    pd = testers.leaf_distribution(strat, "depolarizing")
    for v in pd.values():
        assert v == pytest.approx(0.25)


def test_tv_distance():
    p = {(0,): 0.5, (1,): 0.5}
    q = {(0,): 1.0}
    assert testers.tv_distance(p, q) == pytest.approx(0.5)
    assert testers.tv_distance(p, p) == 0.0


def test_budget_guards():
    with pytest.raises(BudgetExceededError):
        testers.pacc_exact(np.eye(16, dtype=complex))
    with pytest.raises(BudgetExceededError):
        testers.run_aux_free_single_copy(
            np.eye(8, dtype=complex), 0.1, testers.TesterConfig(seed=0)
        )
    with pytest.raises(BudgetExceededError):
        testers.leaf_distribution(_default_strategy(4), "clifford")


def test_config_validation():
    with pytest.raises(ValueError):
        testers.TesterConfig(epsilon=0.0)
    with pytest.raises(ValueError):
        testers.TesterConfig(shots=0)
    with pytest.raises(ValueError):
        testers.TesterReport("maybe", 1, 0.5, None)
