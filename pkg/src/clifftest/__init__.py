"""
Desk-scale simulation and verification laboratory for Clifford testing:
GF(2) symplectic linear algebra, Weyl/Clifford bookkeeping, dense
characteristic distributions and fidelities, Gowers-type norms, the
Clifford commutant with its partial-transpose algorithms, and the
testing algorithms themselves.
"""

from . import cli, commutant, densesim, gf2, norms, pauli, serialize, testers, verify
from .errors import BudgetExceededError

__all__ = [
    "BudgetExceededError",
    "cli",
    "commutant",
    "densesim",
    "gf2",
    "norms",
    "pauli",
    "serialize",
    "testers",
    "verify",
]
