"""
The t = 4 Clifford commutant and its partial-transpose structure.

Enumerates the 30 stochastic Lagrangian subspaces indexing the
commutant basis, runs the augmenting-path algorithm that finds a
partial transpose turning each R(T) into a unitary permutation-like
operator, and reports the minimum trace norm over all 2^t transposes.
"""

import numpy as np

from clifftest import commutant, gf2

t = 4
sigma = commutant.enumerate_sigma_tt(t)
print(f"|Sigma_{t},{t}| = {len(sigma)} (24 from the stochastic orthogonal "
      "group + 6 involving the anti-identity)")
print()
print("generator (A|B)           S          min_S ||R^Gamma_S||_1")
for T in sigma:
    S, O = commutant.unitary_partial_transpose(T.code)
    swapped = commutant.partial_transpose_code(T.code, S)
    assert gf2.rank(swapped.a_block) == t
    norm = commutant.min_trace_norm_pt(T)
    gen = " ".join("".join(map(str, row)) for row in T.code.generator)
    print(f"  {gen}   {sorted(S)!s:10s} {norm:8.3f}")

T4 = commutant.t4_code()
R = commutant.R_operator(T4, 1)
print()
print(f"special code T_4: R(T_4) = 2 Pi_4 -> trace {np.trace(R).real:.1f}, "
      f"min trace norm {commutant.min_trace_norm_pt(T4):.1f} = 2^{{t-1}}")
