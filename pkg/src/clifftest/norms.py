"""
Gowers U^k norms of amplitude functions and Q^k uniformity measures of
unitaries.

Conventions follow the source identities they must satisfy: the U^k
norm of a state amplitude function uses *sums* over F2^n (not
expectations), while the Q^k norm of a unitary uses *expectations* over
directions and the normalized trace.  With these mixed normalizations
the closing identities hold exactly:

    ||psi||_{U^3}^8 = 2^n  ||p_psi||_2^2
    ||U||_{Q^2}^4   = sum_x p_U(x, x)
    ||U||_{Q^3}^8   = 2^{2n} ||p_U||_2^2
    ||U||_{Q^3}     = || |U>> ||_{U^3}
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import densesim, pauli
from .errors import BudgetExceededError

MAX_UK_QUBITS = 6  # amplitude functions on F2^m, m <= 6 covers Choi states of n <= 3
MAX_QK_QUBITS = 3


@dataclass(frozen=True)
class NormValue:
    k: int
    value: float
    convention: str  # "sum" for U^k, "expectation" for Q^k

    def __post_init__(self):
        if not np.isfinite(self.value) or self.value < 0:
            raise ValueError("norm value must be finite and nonnegative")


@lru_cache(maxsize=None)
def _xor_table(m: int) -> np.ndarray:
    idx = np.arange(2 ** m)
    return np.bitwise_xor.outer(idx, idx)


def _u1_power(g: np.ndarray) -> float:
    # ||g||_{U^1}^2 with the sum convention = |sum_x g(x)|^2.
    return float(np.abs(g.sum()) ** 2)


def _uk_power(g: np.ndarray, k: int, xor: np.ndarray) -> float:
    """||g||_{U^k}^{2^k} with sums, via the derivative recursion."""
    if k == 1:
        return _u1_power(g)
    total = 0.0
    for h in range(g.shape[0]):
        deriv = g[xor[h]] * np.conj(g)
        total += _uk_power(deriv, k - 1, xor)
    return total


def gowers_uk(psi, k: int) -> NormValue:
    """Gowers U^k norm (sum convention) of the amplitude function of psi."""
    if k not in (1, 2, 3):
        raise ValueError("k must be 1, 2, or 3")
    psi = np.asarray(psi, dtype=complex)
    m = densesim.qubit_count(psi.shape[0])
    if m > MAX_UK_QUBITS:
        raise BudgetExceededError(f"gowers_uk requires n <= {MAX_UK_QUBITS} (got {m})")
    power = _uk_power(psi, k, _xor_table(m))
    return NormValue(k, max(power, 0.0) ** (1.0 / 2 ** k), "sum")


def _qk_power(A: np.ndarray, k: int, weyls: list[np.ndarray], dim: int) -> float:
    """||A||_{Q^k}^{2^k} with expectations over directions."""
    if k == 1:
        return float(np.abs(np.trace(A) / dim) ** 2)
    total = 0.0
    for P in weyls:
        deriv = P @ A @ P @ A.conj().T  # P_x A P_x^dag A^dag with P Hermitian
        total += _qk_power(deriv, k - 1, weyls, dim)
    return total / len(weyls)


def qk_norm(U, k: int) -> NormValue:
    """Q^k norm (expectation convention) of a unitary, k <= 3."""
    if k not in (1, 2, 3):
        raise ValueError("k must be 1, 2, or 3")
    U = np.asarray(U, dtype=complex)
    n = densesim.check_unitary(U)
    if n > MAX_QK_QUBITS:
        raise BudgetExceededError(f"qk_norm requires n <= {MAX_QK_QUBITS} (got {n})")
    weyls = [
        np.asarray(pauli.weyl_matrix(pauli.WeylLabel.from_index(n, i)))
        for i in range(4 ** n)
    ]
    power = _qk_power(U, k, weyls, 2 ** n)
    return NormValue(k, max(power, 0.0) ** (1.0 / 2 ** k), "expectation")
