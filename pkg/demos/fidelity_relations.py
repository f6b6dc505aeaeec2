"""
Clifford fidelity versus stabilizer fidelity of the Choi state.

Draws Haar-random single-qubit unitaries and tabulates the sandwich
F_Stab^6 <= f_cliff <= F_Stab, then builds block-diagonal instances
U = sum_x |x><x| (x) U^(x) with an identity block: in this
high-fidelity regime the two quantities coincide exactly, while the
average stabilizer fidelity over random inputs stays strictly higher.
"""

import numpy as np

from clifftest import densesim, testers

rng = np.random.default_rng(0)

print("f_cliff     F_Stab(|U>>)   F_Stab^6      sandwich holds")
for _ in range(8):
    U = densesim.haar_unitary(1, rng)
    fc = densesim.f_cliff(U)
    fs = densesim.f_stab(densesim.choi_state(U))
    ok = fs ** 6 - 1e-9 <= fc <= fs + 1e-9
    print(f"  {fc:.6f}   {fs:.6f}     {fs ** 6:.6f}      {ok}")

print()
print("block-diagonal instances with an identity block:")
for k in (1, 2):
    U = densesim.gap_instance(2, k, rng)
    fc = densesim.f_cliff(U)
    fs = densesim.f_stab(densesim.choi_state(U))
    avg = testers.avg_stab_fidelity_exact(U)
    print(f"  k = {k}: f_cliff = {fc:.4f} = F_Stab(choi) = {fs:.4f}, "
          f"avg stabilizer fidelity = {avg:.4f}")
