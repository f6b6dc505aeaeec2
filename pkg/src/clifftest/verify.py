"""
Named invariant checks grouped into suites.

Each check exercises one stated property (an identity, inequality, or
enumeration count) and records the observed margin: how much slack the
property passed with, or by how much it failed.  The `verify` CLI
command aggregates these into a report.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

import numpy as np

from . import commutant, densesim, gf2, norms, pauli, testers

SUITES = ("all", "fidelity", "norms", "commutant", "testers", "appendixA")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    margin: float  # slack with which the property held (negative = violation)
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": bool(self.passed),
            "margin": float(self.margin),
            "detail": self.detail,
        }


def _result(name: str, margin: float, tol: float = 0.0, detail: str = "") -> CheckResult:
    return CheckResult(name, bool(margin >= -tol), float(margin), detail)


# ---------------------------------------------------------------------------
# fidelity suite: GF(2) structure, Weyl algebra, characteristic
# distributions, and the stabilizer/Clifford fidelity theorems

def _random_subspace(ambient: int, rng) -> gf2.Subspace:
    k = int(rng.integers(0, ambient + 1))
    return gf2.Subspace.from_vectors(
        rng.integers(0, 2, (k, ambient)).astype(np.uint8), ambient
    )


def check_gf2_structure(samples: int, seed: int) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    results = []

    ok = True
    for _ in range(samples):
        amb = int(rng.integers(2, 9)) & ~1  # even ambient for the symplectic form
        V = _random_subspace(amb, rng)
        for form in ("standard", "symplectic"):
            ok &= gf2.dual(gf2.dual(V, form), form) == V
    results.append(_result("gf2.dual-involution", 1.0 if ok else -1.0))

    ok = True
    for _ in range(samples):
        m = rng.integers(0, 2, (int(rng.integers(1, 8)), int(rng.integers(1, 8))))
        m = m.astype(np.uint8)
        ok &= gf2.rank(m) + gf2.kernel(m).dim == m.shape[1]
    results.append(_result("gf2.rank-nullity", 1.0 if ok else -1.0))

    ok = True
    for _ in range(samples):
        amb = 2 * int(rng.integers(1, 5))
        x, y, z = (rng.integers(0, 2, amb).astype(np.uint8) for _ in range(3))
        ok &= gf2.symplectic_inner(x, x) == 0
        ok &= gf2.symplectic_inner(x, y) == gf2.symplectic_inner(y, x)
        ok &= gf2.symplectic_inner(x ^ y, z) == (
            gf2.symplectic_inner(x, z) ^ gf2.symplectic_inner(y, z)
        )
    results.append(_result("gf2.symplectic-alternating-bilinear", 1.0 if ok else -1.0))

    ok = True
    for _ in range(samples):
        amb = int(rng.integers(1, 8))
        V = _random_subspace(amb, rng)
        if V.dim == 0:
            continue
        mixed = V.basis.copy()
        for _ in range(5):  # random invertible row operations
            i, j = rng.integers(0, mixed.shape[0], 2)
            if i != j:
                mixed[i] ^= mixed[j]
        rng.shuffle(mixed)
        ok &= gf2.Subspace.from_vectors(mixed, amb) == V
    results.append(_result("gf2.rref-canonical", 1.0 if ok else -1.0))
    return results


def check_weyl_algebra() -> list[CheckResult]:
    results = []
    worst_herm, worst_orth, worst_comm = 0.0, 0.0, 0.0
    for n in (1, 2):
        mats = [
            np.asarray(pauli.weyl_matrix(pauli.WeylLabel.from_index(n, i)))
            for i in range(4 ** n)
        ]
        for i, P in enumerate(mats):
            worst_herm = max(worst_herm, float(np.max(np.abs(P - P.conj().T))))
            worst_herm = max(
                worst_herm, float(np.max(np.abs(P @ P.conj().T - np.eye(2 ** n))))
            )
            for j, Q in enumerate(mats):
                tr = np.trace(P @ Q)
                expect = 2 ** n if i == j else 0.0
                worst_orth = max(worst_orth, float(abs(tr - expect)))
                x = pauli.WeylLabel.from_index(n, i).vector
                y = pauli.WeylLabel.from_index(n, j).vector
                sign = (-1.0) ** gf2.symplectic_inner(x, y)
                worst_comm = max(worst_comm, float(np.max(np.abs(P @ Q - sign * Q @ P))))
    results.append(_result("pauli.weyl-hermitian-unitary", 1e-12 - worst_herm, 0.0))
    results.append(_result("pauli.weyl-trace-orthogonality", 1e-10 - worst_orth))
    results.append(_result("pauli.weyl-commutation-symplectic", 1e-12 - worst_comm))
    return results


def check_clifford_conjugation(samples: int, seed: int) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        n = int(rng.integers(1, 3))
        c = pauli.random_clifford(n, rng)
        C = pauli.clifford_matrix(c)
        x = pauli.WeylLabel.from_index(n, int(rng.integers(0, 4 ** n)))
        lhs = C @ np.asarray(pauli.weyl_matrix(x)) @ C.conj().T
        img = pauli.conjugate_label(c, pauli.PhasedPauli(x, 0))
        worst = max(worst, float(np.max(np.abs(lhs - img.matrix()))))
    return [_result("pauli.conjugation-signed-weyl", 1e-10 - worst)]


def check_clifford_choi_stabilizer() -> list[CheckResult]:
    bank = pauli.clifford_matrix_bank(1)
    worst = 0.0
    for C in bank:
        fs = densesim.f_stab(densesim.choi_state(C))
        worst = max(worst, abs(1.0 - fs))
    return [_result("pauli.clifford-choi-is-stabilizer", 1e-10 - worst)]


def check_chardist_choi(samples: int, seed: int) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        n = int(rng.integers(1, 3))
        U = densesim.haar_unitary(n, rng)
        dU = densesim.char_dist_unitary(U).table
        dchoi = densesim.char_dist_state(densesim.choi_state(U)).table
        worst = max(worst, float(np.max(np.abs(np.sort(dU.reshape(-1)) - np.sort(dchoi)))))
    return [_result("densesim.chardist-unitary-vs-choi", 1e-10 - worst)]


def check_fidelity_theorems(n: int, samples: int, seed: int) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    sandwich, equiv, pacc_upper, pacc_lower = np.inf, np.inf, np.inf, np.inf
    for _ in range(samples):
        U = densesim.haar_unitary(n, rng)
        fs = densesim.f_stab(densesim.choi_state(U))
        fc = densesim.f_cliff(U)
        sandwich = min(sandwich, fc - fs ** 6, fs - fc + 1e-9)
        if fs > 0.5:
            equiv = min(equiv, 1e-9 - abs(fc - fs))
        pacc = testers.pacc_exact(U)
        pacc_upper = min(pacc_upper, (1.0 + fs) / 2.0 - pacc)
        pacc_lower = min(pacc_lower, pacc - fc ** 4)
    return [
        _result(f"densesim.fidelity-sandwich-n{n}", sandwich, 1e-9),
        _result(f"densesim.fidelity-equivalence-n{n}", equiv, 0.0),
        _result(f"testers.pacc-upper-bound-n{n}", pacc_upper, 1e-9),
        _result(f"testers.pacc-completeness-chain-n{n}", pacc_lower, 1e-9),
    ]


def check_lagrangian_weight_bounds(samples: int, seed: int) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    results = []
    for n in (1, 2):
        lags = pauli.enumerate_lagrangians(n)
        lower, upper, quartic = np.inf, np.inf, np.inf
        for _ in range(samples):
            psi = rng.normal(size=2 ** n) + 1j * rng.normal(size=2 ** n)
            psi /= np.linalg.norm(psi)
            d = densesim.char_dist_state(psi)
            fs = densesim.f_stab(psi)
            best = 0.0
            for M in lags:
                w = densesim.subspace_weight(d, M)
                lower = min(lower, fs - w)
                best = max(best, w)
            upper = min(upper, best - fs ** 2)
            quartic = min(quartic, 2 ** n * float(np.sum(d.table ** 2)) - fs ** 4)
        results.append(_result(f"densesim.stab-fidelity-lower-bound-n{n}", lower, 1e-9))
        results.append(_result(f"densesim.stab-fidelity-upper-bound-n{n}", upper, 1e-9))
        results.append(_result(f"densesim.collision-upper-bound-n{n}", quartic, 1e-9))
    return results


def check_shift_monotonicity(samples: int, seed: int) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    worst = np.inf
    for _ in range(samples):
        n = int(rng.integers(1, 4))
        psi = rng.normal(size=2 ** n) + 1j * rng.normal(size=2 ** n)
        psi /= np.linalg.norm(psi)
        d = densesim.char_dist_state(psi)
        V = _random_subspace(2 * n, rng)
        s = rng.integers(0, 2, 2 * n).astype(np.uint8)
        if V.contains(s):
            continue
        worst = min(worst, densesim.subspace_weight(d, V) - densesim.shifted_weight(d, V, s))
    return [_result("densesim.shift-monotonicity", worst, 1e-10)]


def check_clifford_lagrangian_lower_bound(samples: int, seed: int) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    worst = np.inf
    graphs = [densesim.graph_subspace(S, 1) for S in pauli.enumerate_symplectic(1)]
    for _ in range(samples):
        U = densesim.haar_unitary(1, rng)
        d = densesim.char_dist_unitary(U)
        fc = densesim.f_cliff(U)
        for M in graphs:
            worst = min(worst, fc - densesim.subspace_weight(d, M))
    return [_result("densesim.cliff-fidelity-lower-bound", worst, 1e-9)]


def check_q2_inverse(samples: int, seed: int) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    worst = np.inf
    for _ in range(samples):
        n = int(rng.integers(1, 3))
        U = densesim.haar_unitary(n, rng)
        d = densesim.char_dist_unitary(U).table
        uhat = np.abs(
            np.array(
                [
                    np.trace(
                        np.asarray(pauli.weyl_matrix(pauli.WeylLabel.from_index(n, i)))
                        @ U
                    )
                    / 2 ** n
                    for i in range(4 ** n)
                ]
            )
        )
        worst = min(worst, float(np.max(uhat ** 2) - np.sum(np.diag(d))))
    return [_result("densesim.q2-inverse-collision-bound", worst, 1e-9)]


def suite_fidelity(n: int = 1, samples: int = 50, seed: int = 0) -> list[CheckResult]:
    out = []
    out += check_gf2_structure(samples, seed)
    out += check_weyl_algebra()
    out += check_clifford_conjugation(min(samples, 20), seed + 1)
    out += check_clifford_choi_stabilizer()
    out += check_chardist_choi(min(samples, 20), seed + 2)
    out += check_fidelity_theorems(1, samples, seed + 3)
    if n >= 2:
        out += check_fidelity_theorems(2, max(5, samples // 8), seed + 4)
    out += check_lagrangian_weight_bounds(min(samples, 25), seed + 5)
    out += check_shift_monotonicity(samples, seed + 6)
    out += check_clifford_lagrangian_lower_bound(min(samples, 25), seed + 7)
    out += check_q2_inverse(min(samples, 20), seed + 8)
    return out


# ---------------------------------------------------------------------------
# norms suite

def suite_norms(n: int = 2, samples: int = 20, seed: int = 0) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    results = []
    worst_q2 = worst_q3 = worst_u3 = worst_choi = np.inf
    for _ in range(samples):
        m = int(rng.integers(1, min(n, 2) + 1))
        U = densesim.haar_unitary(m, rng)
        d = densesim.char_dist_unitary(U).table
        q2 = norms.qk_norm(U, 2).value
        q3 = norms.qk_norm(U, 3).value
        worst_q2 = min(worst_q2, -abs(q2 ** 4 - float(np.sum(np.diag(d)))))
        worst_q3 = min(worst_q3, -abs(q3 ** 8 - 4 ** m * float(np.sum(d ** 2))))
        worst_choi = min(
            worst_choi, -abs(q3 - norms.gowers_uk(densesim.choi_state(U), 3).value)
        )
    for _ in range(samples):
        m = int(rng.integers(1, 4))
        psi = rng.normal(size=2 ** m) + 1j * rng.normal(size=2 ** m)
        psi /= np.linalg.norm(psi)
        u3 = norms.gowers_uk(psi, 3).value
        p = densesim.char_dist_state(psi).table
        worst_u3 = min(worst_u3, -abs(u3 ** 8 - 2 ** m * float(np.sum(p ** 2))))
    results.append(_result("norms.q2-diagonal-identity", worst_q2, 1e-9))
    results.append(_result("norms.q3-2norm-identity", worst_q3, 1e-9))
    results.append(_result("norms.u3-state-identity", worst_u3, 1e-9))
    results.append(_result("norms.q3-equals-choi-u3", worst_choi, 1e-9))

    worst = 0.0
    for C in pauli.clifford_matrix_bank(1):
        worst = max(worst, abs(norms.qk_norm(C, 3).value - 1.0))
    results.append(_result("norms.clifford-q3-is-one", 1e-10 - worst))

    # Inverse-theorem direction is recorded, not asserted: the paper's
    # polynomial has unspecified constants.
    rng2 = np.random.default_rng(seed + 1)
    min_fc = np.inf
    hits = 0
    for _ in range(samples):
        U = densesim.haar_unitary(1, rng2)
        if norms.qk_norm(U, 3).value > 2 ** (-0.25):
            hits += 1
            min_fc = min(min_fc, densesim.f_cliff(U))
    results.append(
        CheckResult(
            "norms.q3-inverse-direction-recorded",
            True,
            float(min_fc if hits else np.inf),
            f"{hits} samples above threshold; min f_cliff recorded, not asserted",
        )
    )
    return results


# ---------------------------------------------------------------------------
# commutant suite

def _count_stochastic_orthogonal(t: int) -> int:
    # O in O_t^(1) iff Ox . Ox = x . x mod 4 for all x; equivalently the
    # columns are pairwise orthogonal over the integers mod 2 with each
    # column weight = 1 mod 4, and O is invertible.
    count = 0
    for bits in range(2 ** (t * t)):
        O = np.array([(bits >> k) & 1 for k in range(t * t)], dtype=np.uint8)
        O = O.reshape(t, t)
        cols = O.T.astype(np.int64)
        if np.any(cols.sum(axis=1) % 4 != 1):
            continue
        if np.any((cols @ cols.T) % 2 != np.eye(t, dtype=np.int64)):
            continue
        if gf2.rank(O) == t:
            count += 1
    return count


def _permutation_lagrangian(perm, t: int) -> commutant.StochasticLagrangian:
    eye = np.eye(t, dtype=np.uint8)
    rows = np.hstack([eye[:, perm].T, eye])  # {(pi y, y)}
    return commutant.StochasticLagrangian(commutant.SelfDualCode.from_generator(rows, t))


def suite_commutant(n: int = 1, samples: int = 50, seed: int = 0,
                    t_max: int = 4) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    results = []

    sigma_expect = {2: 2, 3: 6, 4: 30, 5: 270}
    sd_expect = {1: 1, 2: 3, 3: 15, 4: 135}
    for t in range(2, min(t_max, 4) + 1):
        got = len(commutant.enumerate_sigma_tt(t))
        results.append(
            _result(f"commutant.sigma-count-t{t}", 1.0 if got == sigma_expect[t] else -1.0,
                    detail=f"|Sigma_{t}_{t}| = {got}")
        )
    for t in range(1, min(t_max, 4) + 1):
        got = len(commutant.enumerate_sd(t))
        results.append(
            _result(f"commutant.sd-count-t{t}", 1.0 if got == sd_expect[t] else -1.0,
                    detail=f"|SD({2 * t})| = {got}")
        )

    # Inclusion chain S_t <= O_t^(1) <= Sigma_{t,t}: equality at t=3, strict at t=4.
    for t, strict in ((3, False), (4, True)):
        sigma = set(commutant.enumerate_sigma_tt(t))
        perms = {
            _permutation_lagrangian(list(p), t) for p in permutations(range(t))
        }
        n_orth = _count_stochastic_orthogonal(t)
        ok = perms <= {s for s in sigma} and len(perms) == len(
            list(permutations(range(t)))
        )
        if strict:
            ok &= len(perms) == n_orth == 24 and len(sigma) == 30
        else:
            ok &= len(perms) == n_orth == len(sigma) == 6
        results.append(
            _result(f"commutant.inclusion-chain-t{t}", 1.0 if ok else -1.0,
                    detail=f"|S_t|={len(perms)}, |O_t^(1)|={n_orth}, |Sigma|={len(sigma)}")
        )

    # Rank lemmas over all self-dual codes.
    ok_eq, ok_gi = True, True
    for t in range(1, min(t_max, 4) + 1):
        for code in commutant.enumerate_sd(t):
            A, B = code.a_block, code.b_block
            ok_eq &= gf2.rank(A) == gf2.rank(B)
            G = code.generator
            for r in range(1, t + 1):
                for I in combinations(range(t), r):
                    cols = [i for i in I] + [t + i for i in I]
                    ok_gi &= gf2.rank(G[:, cols]) >= r
    results.append(_result("commutant.equal-rank-A-B", 1.0 if ok_eq else -1.0))
    results.append(_result("commutant.rank-G_I-lower-bound", 1.0 if ok_gi else -1.0))

    # R(T) commutes with C^{(x)t} for every Cl(1) element.
    worst = 0.0
    bank = pauli.clifford_matrix_bank(1)
    for t in range(2, min(t_max, 4) + 1):
        for T in commutant.enumerate_sigma_tt(t):
            R = commutant.R_operator(T, 1)
            for C in bank:
                Ct = C
                for _ in range(t - 1):
                    Ct = np.kron(Ct, C)
                worst = max(worst, float(np.max(np.abs(R @ Ct - Ct @ R))))
    results.append(_result("commutant.RT-commutes-clifford", 1e-9 - worst))

    # Twirl: exact group average vs Weingarten expansion.
    worst = 0.0
    for t in range(2, min(t_max, 4) + 1):
        rho = rng.normal(size=(2 ** t, 2 ** t)) + 1j * rng.normal(size=(2 ** t, 2 ** t))
        rho = rho @ rho.conj().T
        rho /= np.trace(rho).real
        diff = commutant.clifford_twirl_exact(rho, t) - commutant.clifford_twirl_weingarten(rho, 1, t)
        worst = max(worst, float(np.max(np.abs(diff))))
    results.append(_result("commutant.twirl-exact-vs-weingarten", 1e-8 - worst))

    # PPT overlap and minimum trace norm bounds.
    worst_overlap, worst_norm = np.inf, np.inf
    for t in range(2, min(t_max, 4) + 1):
        sigma = commutant.enumerate_sigma_tt(t)
        ident = commutant.identity_lagrangian(t)
        for T in sigma:
            for _ in range(max(1, samples // len(sigma))):
                factors = []
                for _ in range(t):
                    v = rng.normal(size=2) + 1j * rng.normal(size=2)
                    v /= np.linalg.norm(v)
                    factors.append(np.outer(v, v.conj()))
                worst_overlap = min(
                    worst_overlap, 1.0 - commutant.ppt_overlap_check(T, factors)
                )
            if T != ident:
                worst_norm = min(
                    worst_norm, 2.0 ** (t - 1) - commutant.min_trace_norm_pt(T)
                )
    results.append(_result("commutant.ppt-overlap-bound", worst_overlap, 1e-10))
    results.append(_result("commutant.min-trace-norm-bound", worst_norm, 1e-8))

    # Four-copy stabilizer average: dense group average vs closed formula.
    for m in range(1, (2 if n >= 2 else 1) + 1):
        diff = np.max(
            np.abs(commutant.avg_stab_fourcopy(m) - commutant.avg_stab_fourcopy_formula(m))
        )
        results.append(_result(f"commutant.four-copy-average-n{m}", 1e-10 - float(diff)))
    return results


# ---------------------------------------------------------------------------
# appendixA suite

def suite_appendixA(t_max: int = 4, **_ignored) -> list[CheckResult]:
    results = []
    ok_rank = ok_orth = ok_unit = ok_loop = True
    total = 0
    for t in range(1, t_max + 1):
        eye = np.eye(t, dtype=np.uint8)
        for code in commutant.enumerate_sd(t):
            total += 1
            trace: list = []

            def hook(k, M, swaps, trace=trace, t=t):
                # Loop invariant: before iteration k the top-left k x k
                # block is the identity and the rows below it vanish.
                A = M[:, :t]
                good = np.array_equal(A[:k, :k], np.eye(k, dtype=np.uint8)) and not A[
                    k:, :k
                ].any()
                trace.append(good)

            S, O = commutant.unitary_partial_transpose(code, hook=hook)
            ok_loop &= all(trace)
            swapped = commutant.partial_transpose_code(code, S)
            ok_rank &= gf2.rank(swapped.a_block) == t
            ok_orth &= np.array_equal(gf2.mat2mul(O.T, O), eye)
            ok_orth &= swapped == commutant.SelfDualCode.from_generator(
                np.hstack([O.T, eye]), t
            )
            r = commutant.r_operator(swapped)
            ok_unit &= bool(
                np.max(np.abs(r @ r.conj().T - np.eye(2 ** t))) < 1e-12
            )
    results.append(_result("appendixA.a-block-full-rank", 1.0 if ok_rank else -1.0,
                           detail=f"{total} codes"))
    results.append(_result("appendixA.o-orthogonal-graph", 1.0 if ok_orth else -1.0))
    results.append(_result("appendixA.r-unitary-dense", 1.0 if ok_unit else -1.0))
    results.append(_result("appendixA.loop-invariant", 1.0 if ok_loop else -1.0))
    return results


# ---------------------------------------------------------------------------
# testers suite

def suite_testers(n: int = 1, samples: int = 50, seed: int = 0) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    results = []

    worst = 0.0
    for C in pauli.clifford_matrix_bank(1):
        worst = max(worst, abs(1.0 - testers.pacc_exact(C)))
    results.append(_result("testers.clifford-completeness-exact", 1e-10 - worst))

    worst_sound = np.inf
    for _ in range(samples):
        m = int(rng.integers(1, min(n, 2) + 1))
        U = densesim.haar_unitary(m, rng)
        eps = 1.0 - densesim.f_cliff(U)
        if eps <= 0:
            continue
        rej = 1.0 - testers.pacc_exact(U)
        worst_sound = min(worst_sound, rej - min(0.25, eps / 2.0))
    results.append(_result("testers.fourtest-soundness", worst_sound, 1e-9))

    worst_mc = np.inf
    shots = 2000
    for _ in range(min(samples, 50)):
        U = densesim.haar_unitary(1, rng)
        exact = testers.pacc_exact(U)
        rep = testers.run_4query(
            U, testers.TesterConfig(shots=shots, seed=int(rng.integers(2 ** 32)))
        )
        sigma = max(np.sqrt(exact * (1 - exact) / shots), 1e-12)
        worst_mc = min(worst_mc, 4.0 * sigma - abs(rep.acceptance_rate - exact))
    results.append(_result("testers.monte-carlo-4sigma", worst_mc))

    ok = True
    for _ in range(10):
        C = pauli.clifford_matrix(pauli.random_clifford(1, rng))
        rep = testers.run_aux_free_single_copy(
            C, 0.1, testers.TesterConfig(seed=int(rng.integers(2 ** 32)))
        )
        ok &= rep.verdict == "accept"
    results.append(_result("testers.singlecopy-clifford-completeness", 1.0 if ok else -1.0))

    zero = np.array([[1, 0], [0, 0]], dtype=complex)
    plus = np.full((2, 2), 0.5, dtype=complex)
    mz = [zero, np.array([[0, 0], [0, 1]], dtype=complex)]
    strat = [(plus, mz), (zero, mz)]
    pg = testers.leaf_distribution(strat, "clifford", "group")
    pw = testers.leaf_distribution(strat, "clifford", "weingarten")
    diff = max(abs(pg[k] - pw[k]) for k in pg)
    results.append(_result("testers.leaf-group-vs-weingarten", 1e-8 - diff))
    return results


def run_suite(name: str, n: int = 1, samples: int = 50, seed: int = 0,
              t_max: int = 4) -> list[CheckResult]:
    if name == "fidelity":
        return suite_fidelity(n=n, samples=samples, seed=seed)
    if name == "norms":
        return suite_norms(n=max(n, 2), samples=min(samples, 20), seed=seed)
    if name == "commutant":
        return suite_commutant(n=n, samples=samples, seed=seed, t_max=t_max)
    if name == "appendixA":
        return suite_appendixA(t_max=t_max)
    if name == "testers":
        return suite_testers(n=n, samples=samples, seed=seed)
    if name == "all":
        out = []
        for sub in ("fidelity", "norms", "commutant", "appendixA", "testers"):
            out += run_suite(sub, n=n, samples=samples, seed=seed, t_max=t_max)
        return out
    raise ValueError(f"unknown suite {name!r}")
