"""
Testing algorithms: the 4-query Clifford tester, the auxiliary-free
single-copy tester built on a pluggable stabilizer-testing subroutine,
the 6-copy Choi-reduction acceptance formula, and a small fixed-strategy
discrimination harness for channel ensembles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from itertools import product

import numpy as np

from . import commutant, densesim, pauli
from .errors import BudgetExceededError

MAX_TESTER_QUBITS = 3


@dataclass(frozen=True)
class TesterConfig:
    """Knobs shared by the testing algorithms.

    p_floor is the Omega(epsilon) constant used by the single-copy
    tester's Markov step; it defaults to epsilon / 16 when unset.
    """

    epsilon: float = 0.1
    shots: int = 1000
    seed: int = 0
    delta: float | None = None
    p_floor: float | None = None

    def __post_init__(self):
        if not 0 < self.epsilon < 1:
            raise ValueError("epsilon must lie in (0, 1)")
        if self.shots < 1:
            raise ValueError("shots must be positive")


@dataclass(frozen=True)
class TesterReport:
    verdict: str  # "accept" | "reject"
    shots_used: int
    acceptance_rate: float
    exact_reference: float | None
    log: tuple = field(repr=False, default=())
    queries_used: int | None = None

    def __post_init__(self):
        if self.verdict not in ("accept", "reject"):
            raise ValueError("verdict must be accept or reject")
        if not 0 <= self.acceptance_rate <= 1:
            raise ValueError("acceptance rate must lie in [0, 1]")


# ---------------------------------------------------------------------------
# 4-query tester (two Bell measurements on two copies of U^(x)2 |P_x>>)

def pacc_exact(U) -> float:
    """Exact acceptance probability 2^2n ||p_U||_2^2 of the 4-query tester."""
    U = np.asarray(U, dtype=complex)
    n = densesim.check_unitary(U)
    if n > MAX_TESTER_QUBITS:
        raise BudgetExceededError(f"pacc_exact requires n <= {MAX_TESTER_QUBITS} (got {n})")
    table = densesim.char_dist_unitary(U, allow_large=True).table
    return float(4 ** n * np.sum(table ** 2))


def pacc_pi4(U) -> float:
    """Acceptance probability via 2^-2n tr(Pi_4 U^(x)4 Pi_4 U^dag(x)4)."""
    U = np.asarray(U, dtype=complex)
    n = densesim.check_unitary(U)
    if n > 1:
        raise BudgetExceededError("pacc_pi4 is a dense n = 1 cross-check")
    P4 = commutant.pi4(n)
    U4 = reduce(np.kron, [U] * 4)
    return float(np.real(np.trace(P4 @ U4 @ P4 @ U4.conj().T)) / 4 ** n)


def pacc_gnw_choi(U) -> float:
    """Acceptance probability (1 + 2^4n ||p_U||_3^3) / 2 of the 6-copy
    Bell-difference tester run on the Choi state."""
    U = np.asarray(U, dtype=complex)
    n = densesim.check_unitary(U)
    if n > MAX_TESTER_QUBITS:
        raise BudgetExceededError(f"pacc_gnw_choi requires n <= {MAX_TESTER_QUBITS} (got {n})")
    table = densesim.char_dist_unitary(U, allow_large=True).table
    return float((1.0 + 2.0 ** (4 * n) * np.sum(table ** 3)) / 2.0)


@lru_cache(maxsize=None)
def _bell_outcome_cdfs(u_bytes: bytes, n: int) -> np.ndarray:
    U = np.frombuffer(u_bytes, dtype=complex).reshape(2 ** n, 2 ** n)
    UU = np.kron(U, U)
    B = densesim.bell_basis_matrix(n)
    cdfs = np.empty((4 ** n, 4 ** n))
    for x in range(4 ** n):
        px = densesim.choi_state(
            np.asarray(pauli.weyl_matrix(pauli.WeylLabel.from_index(n, x)))
        )
        probs = np.abs(B @ (UU @ px)) ** 2
        cdfs[x] = np.cumsum(probs / probs.sum())
    return cdfs


def run_4query(U, cfg: TesterConfig) -> TesterReport:
    """Monte Carlo run of the 4-query tester.

    Each shot draws x uniformly, prepares two copies of U^(x)2 |P_x>>,
    Bell-measures both, and accepts iff the outcomes agree.
    """
    U = np.asarray(U, dtype=complex)
    n = densesim.check_unitary(U)
    if n > MAX_TESTER_QUBITS:
        raise BudgetExceededError(f"run_4query requires n <= {MAX_TESTER_QUBITS} (got {n})")
    cdfs = _bell_outcome_cdfs(U.tobytes(), n)
    rng = np.random.default_rng(cfg.seed)
    xs = rng.integers(0, 4 ** n, cfg.shots)
    ys = np.empty(cfg.shots, dtype=np.int64)
    yps = np.empty(cfg.shots, dtype=np.int64)
    for x in range(4 ** n):
        sel = np.flatnonzero(xs == x)
        if sel.size == 0:
            continue
        ys[sel] = np.searchsorted(cdfs[x], rng.random(sel.size))
        yps[sel] = np.searchsorted(cdfs[x], rng.random(sel.size))
    accepts = ys == yps
    rate = float(accepts.mean())
    exact = pacc_exact(U) if n <= 2 else None
    log = tuple(
        (int(x), int(y), int(yp), bool(a)) for x, y, yp, a in zip(xs, ys, yps, accepts)
    )
    verdict = "accept" if bool(accepts.all()) else "reject"
    return TesterReport(verdict, cfg.shots, rate, exact, log)


def four_query_repetitions(epsilon: float) -> int:
    """Repetition count making the per-run rejection gap compound to >= 2/3."""
    gap = min(0.25, epsilon / 2.0)
    return math.ceil(6.0 / gap)


def run_4query_repeated(U, epsilon: float, cfg: TesterConfig) -> TesterReport:
    """Repeat the 4-query tester; accept iff every repetition accepts."""
    reps = four_query_repetitions(epsilon)
    rep_cfg = TesterConfig(
        epsilon=epsilon, shots=reps, seed=cfg.seed, delta=cfg.delta, p_floor=cfg.p_floor
    )
    report = run_4query(U, rep_cfg)
    return report


# ---------------------------------------------------------------------------
# Single-copy tester (Alg. 2) with a pluggable stabilizer-testing subroutine

class OracleStabTester:
    """Stand-in for the cited single-copy stabilizer tester.

    Contract: given a source of identical copies of a state, accept
    stabilizer states and reject states with F_Stab <= 1 - epsilon, each
    with probability >= 1 - delta; consume O((n / epsilon^2) log(1/delta))
    copies.  This default backs the decision with the exact f_stab
    oracle; set emulate_failures=True to flip the verdict with
    probability delta, mimicking the cited tester's statistics.
    """

    def __init__(self, emulate_failures: bool = False):
        self.emulate_failures = emulate_failures

    def queries(self, n: int, epsilon: float, delta: float) -> int:
        return math.ceil((n / epsilon ** 2) * math.log(1.0 / delta))

    def __call__(self, state_source, epsilon: float, delta: float,
                 rng: np.random.Generator) -> bool:
        psi = state_source()
        accept = densesim.f_stab(psi) > 1.0 - epsilon
        if self.emulate_failures and rng.random() < delta:
            accept = not accept
        return accept


def single_copy_stab_tester(state_source, epsilon: float, delta: float,
                            cfg: TesterConfig, subroutine=None) -> str:
    """Run one stabilizer test on a state source; returns accept/reject."""
    sub = subroutine if subroutine is not None else OracleStabTester()
    rng = np.random.default_rng(cfg.seed)
    return "accept" if sub(state_source, epsilon, delta, rng) else "reject"


def aux_free_trial_count(epsilon: float, p_floor: float | None = None) -> int:
    p = p_floor if p_floor is not None else epsilon / 16.0
    return math.ceil(math.log(3.0) / p) + 1


def run_aux_free_single_copy(U, epsilon: float, cfg: TesterConfig,
                             subroutine=None) -> TesterReport:
    """Auxiliary-free single-copy Clifford tester.

    Runs m = ceil(ln 3 / p_floor) + 1 independent trials; each draws a
    fresh uniformly random stabilizer state |S>, feeds U|S> to the
    stabilizer-testing subroutine with failure budget delta = 1/(3m),
    and accepts iff every trial accepts.
    """
    U = np.asarray(U, dtype=complex)
    n = densesim.check_unitary(U)
    if n > 2:
        raise BudgetExceededError(
            f"run_aux_free_single_copy requires n <= 2 for the exact oracle (got {n})"
        )
    sub = subroutine if subroutine is not None else OracleStabTester()
    m = aux_free_trial_count(epsilon, cfg.p_floor)
    delta = 1.0 / (3.0 * m)
    rng = np.random.default_rng(cfg.seed)
    log = []
    accepted = 0
    for _ in range(m):
        tableau = pauli.random_stabilizer_state(n, rng)
        psi = U @ pauli.stabilizer_state_vector(tableau)
        ok = sub(lambda psi=psi: psi, epsilon, delta, rng)
        accepted += ok
        log.append((tableau.to_json(), float(densesim.f_stab(psi)), bool(ok)))
    queries = m * sub.queries(n, epsilon, delta) if hasattr(sub, "queries") else None
    verdict = "accept" if accepted == m else "reject"
    return TesterReport(verdict, m, accepted / m, None, tuple(log), queries)


def avg_stab_fidelity_exact(U) -> float:
    """E over all stabilizer states |S> of f_stab(U|S>), exact (n <= 2)."""
    U = np.asarray(U, dtype=complex)
    n = densesim.check_unitary(U)
    if n > 2:
        raise BudgetExceededError(f"avg_stab_fidelity_exact requires n <= 2 (got {n})")
    bank = densesim.stab_state_bank(n)
    outs = bank @ U.T  # row i = U |S_i>
    overlaps = np.abs(outs @ bank.conj().T) ** 2  # |<S_j|U|S_i>|^2
    return float(np.mean(np.max(overlaps, axis=1)))


# ---------------------------------------------------------------------------
# Fixed-strategy discrimination harness (single-qubit channels)

def leaf_distribution(strategy, ensemble: str, method: str = "group") -> dict:
    """Leaf probabilities of a fixed prepare-and-measure strategy.

    strategy: sequence of rounds (rho_i, [M_0, M_1, ...]) with
    single-qubit input states and POVM elements.  ensemble: "clifford"
    (uniform over Cl(1)) or "depolarizing".  For the Clifford ensemble,
    method selects the direct group average ("group") or the commutant
    expansion ("weingarten").
    """
    t = len(strategy)
    if t > 3:
        raise BudgetExceededError("leaf_distribution requires t <= 3")
    rhos = [np.asarray(r, dtype=complex) for r, _ in strategy]
    povms = [[np.asarray(M, dtype=complex) for M in Ms] for _, Ms in strategy]
    for rho, Ms in zip(rhos, povms):
        if rho.shape != (2, 2):
            raise ValueError("strategy states must be single-qubit")
        if np.max(np.abs(sum(Ms) - np.eye(2))) > 1e-9:
            raise ValueError("POVM elements must sum to identity")
    outcomes = list(product(*[range(len(Ms)) for Ms in povms]))
    probs: dict[tuple, float] = {}
    if ensemble == "depolarizing":
        for leaf in outcomes:
            p = 1.0
            for i, s in enumerate(leaf):
                p *= float(np.real(np.trace(povms[i][s])) * np.real(np.trace(rhos[i])) / 2)
            probs[leaf] = p
    elif ensemble == "clifford":
        if method == "group":
            bank = pauli.clifford_matrix_bank(1)
            for leaf in outcomes:
                total = 0.0
                for C in bank:
                    p = 1.0
                    for i, s in enumerate(leaf):
                        p *= float(np.real(np.trace(povms[i][s] @ C @ rhos[i] @ C.conj().T)))
                    total += p
                probs[leaf] = total / bank.shape[0]
        elif method == "weingarten":
            gw = commutant.gram_weingarten(1, t)
            ops = [commutant.R_operator(T, 1) for T in gw.labels]
            rho_full = reduce(np.kron, rhos) if t > 1 else rhos[0]
            rho_coeffs = np.array(
                [np.real(np.sum(op.conj().T * rho_full.T)) for op in ops]
            )
            for leaf in outcomes:
                M_full = reduce(np.kron, [povms[i][s] for i, s in enumerate(leaf)]) if t > 1 else povms[0][leaf[0]]
                m_coeffs = np.array([np.real(np.trace(op @ M_full)) for op in ops])
                probs[leaf] = float(m_coeffs @ gw.weingarten @ rho_coeffs)
        else:
            raise ValueError(f"unknown method {method!r}")
    else:
        raise ValueError(f"unknown ensemble {ensemble!r}")
    total = sum(probs.values())
    if abs(total - 1.0) > 1e-9:
        raise AssertionError("leaf probabilities do not sum to 1")
    return probs


def tv_distance(p: dict, q: dict) -> float:
    """Total variation distance between two outcome distributions."""
    keys = set(p) | set(q)
    return 0.5 * sum(abs(p.get(k, 0.0) - q.get(k, 0.0)) for k in keys)
