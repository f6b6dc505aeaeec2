"""
The 4-query Clifford tester on a family of phase gates.

Sweeps diag(1, e^{i theta}) from the identity (a Clifford) to the T gate
and prints the exact acceptance probability 2^{2n} ||p_U||_2^2 next to a
Monte Carlo estimate, then sizes the repetition wrapper for a target
distance epsilon.
"""

import numpy as np

from clifftest import testers

print("theta/pi    pacc exact    pacc MC (20k shots)")
for frac in (0.0, 0.05, 0.10, 0.15, 0.20, 0.25):
    U = np.diag([1.0, np.exp(1j * np.pi * frac)])
    exact = testers.pacc_exact(U)
    rep = testers.run_4query(U, testers.TesterConfig(shots=20_000, seed=1))
    print(f"  {frac:4.2f}      {exact:.6f}      {rep.acceptance_rate:.4f}")

print()
T = np.diag([1.0, np.exp(1j * np.pi / 4)])
for eps in (0.5, 0.2, 0.05):
    reps = testers.four_query_repetitions(eps)
    rep = testers.run_4query_repeated(T, eps, testers.TesterConfig(seed=7))
    print(f"epsilon = {eps:4.2f}: {reps:4d} repetitions -> T gate {rep.verdict}ed")
