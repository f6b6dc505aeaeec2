"""
Clifford twirling two ways: group average versus commutant expansion.

Twirls a random two-copy state over Cl(1) by brute-force averaging over
all 24 group elements and by the Gram/Weingarten expansion in the
R(T) basis, then compares leaf distributions of a three-round
prepare-and-measure strategy against a depolarizing channel.
"""

import numpy as np

from clifftest import commutant, testers

rng = np.random.default_rng(1)
rho = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
rho = rho @ rho.conj().T
rho /= np.trace(rho).real

exact = commutant.clifford_twirl_exact(rho, 2)
expanded = commutant.clifford_twirl_weingarten(rho, 1, 2)
print(f"t = 2 twirl, max entrywise difference: "
      f"{np.max(np.abs(exact - expanded)):.2e}")

gw = commutant.gram_weingarten(1, 2)
print(f"Gram matrix (t = 2):\n{gw.gram}")

zero = np.array([[1, 0], [0, 0]], dtype=complex)
plus = np.full((2, 2), 0.5, dtype=complex)
mz = [zero, np.array([[0, 0], [0, 1]], dtype=complex)]
strategy = [(plus, mz), (zero, mz), (plus, mz)]

p_cliff = testers.leaf_distribution(strategy, "clifford", "group")
p_wein = testers.leaf_distribution(strategy, "clifford", "weingarten")
p_dep = testers.leaf_distribution(strategy, "depolarizing")
print(f"leaf distributions, group vs Weingarten TV: "
      f"{testers.tv_distance(p_cliff, p_wein):.2e}")
print(f"Clifford vs depolarizing TV distance:      "
      f"{testers.tv_distance(p_cliff, p_dep):.4f}")
for leaf in sorted(p_cliff):
    print(f"  leaf {leaf}: clifford {p_cliff[leaf]:.4f}  "
          f"depolarizing {p_dep[leaf]:.4f}")
