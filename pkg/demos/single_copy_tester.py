"""
The auxiliary-free single-copy Clifford tester.

Feeds the tester a random two-qubit Clifford (always accepted: every
U|S> is again a stabilizer state) and T (x) I at epsilon = 0.05, where
random stabilizer inputs land on low-fidelity outputs often enough that
a single meta-run almost always rejects.
"""

import numpy as np

from clifftest import densesim, pauli, testers

rng = np.random.default_rng(3)

C = pauli.clifford_matrix(pauli.random_clifford(2, rng))
rep = testers.run_4query(C, testers.TesterConfig(shots=100, seed=0))
rep = testers.run_aux_free_single_copy(C, 0.1, testers.TesterConfig(seed=5))
print(f"random Clifford:  {rep.verdict} after {rep.shots_used} trials "
      f"({rep.queries_used} oracle queries accounted)")

T = np.diag([1.0, np.exp(1j * np.pi / 4)])
U = np.kron(T, np.eye(2))
rep = testers.run_aux_free_single_copy(U, 0.05, testers.TesterConfig(seed=5))
fids = sorted(f for _, f, _ in rep.log)
print(f"T (x) I:          {rep.verdict}; trial fidelities ranged "
      f"{fids[0]:.4f} .. {fids[-1]:.4f}")
print(f"exact average stabilizer fidelity of T (x) I: "
      f"{testers.avg_stab_fidelity_exact(U):.4f} "
      f"(f_cliff = {densesim.f_cliff(U):.4f})")
