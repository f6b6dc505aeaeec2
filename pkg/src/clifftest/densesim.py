"""
Small-n dense simulation: Choi states, characteristic distributions,
brute-force fidelity oracles, Bell measurement, and subspace weights.

States are complex numpy vectors of length 2^n; unitaries are complex
2^n x 2^n matrices.  Characteristic-distribution tables index Weyl
labels by the integer packing of (a | b) with coordinate 0 as the most
significant bit (WeylLabel.index).

For a 2n-qubit label z = (A | B) of a Choi state, the two n-qubit pair
labels x = (a, b), y = (a', b') interleave as A = (a, a'), B = (b, b').
Subspaces of pairs (x, y) live in F2^(4n) as the concatenation x || y
and are isotropic with respect to the direct-sum form
[x1, x2] + [y1, y2] (pair_form_matrix).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import gf2, pauli
from .errors import BudgetExceededError

ATOL = 1e-10
MAX_CHOI_QUBITS = 5
MAX_STAB_ORACLE_QUBITS = 4
MAX_CLIFF_ORACLE_QUBITS = 2
MAX_CHARDIST_UNITARY = 4


def qubit_count(dim: int) -> int:
    n = int(round(np.log2(dim)))
    if 2 ** n != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    return n


def check_state(psi) -> int:
    psi = np.asarray(psi, dtype=complex)
    n = qubit_count(psi.shape[0])
    if abs(np.linalg.norm(psi) - 1.0) > ATOL:
        raise ValueError("state vector is not normalized")
    return n


def check_unitary(U) -> int:
    U = np.asarray(U, dtype=complex)
    n = qubit_count(U.shape[0])
    if U.shape != (2 ** n, 2 ** n):
        raise ValueError("unitary must be square")
    if np.max(np.abs(U.conj().T @ U - np.eye(2 ** n))) > ATOL:
        raise ValueError("matrix is not unitary")
    return n


def haar_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-random unitary via QR of a complex Gaussian with phase-corrected R."""
    dim = 2 ** n
    G = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    Q, R = np.linalg.qr(G)
    return Q * (np.diag(R) / np.abs(np.diag(R)))


def choi_state(U) -> np.ndarray:
    """|U>> = (U x I)|Omega| as a 2n-qubit state vector."""
    U = np.asarray(U, dtype=complex)
    n = check_unitary(U)
    if n > MAX_CHOI_QUBITS:
        raise BudgetExceededError(f"choi_state requires n <= {MAX_CHOI_QUBITS} (got {n})")
    return U.flatten() / np.sqrt(2 ** n)


@dataclass(frozen=True)
class CharDist:
    """Characteristic distribution p_psi (state) or p_U (unitary).

    For kind="state" the table is 1-D of length 4^n; for kind="unitary"
    it is 2-D of shape (4^n, 4^n) indexed [x, y].
    """

    n: int
    kind: str
    table: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.table, dtype=float)
        object.__setattr__(self, "table", t)
        t.setflags(write=False)
        if self.kind not in ("state", "unitary"):
            raise ValueError(f"unknown CharDist kind {self.kind!r}")
        if np.min(t) < -1e-12:
            raise ValueError("characteristic distribution has negative entries")
        if abs(t.sum() - 1.0) > 1e-9:
            raise ValueError("characteristic distribution does not sum to 1")
        if self.kind == "state":
            if t.shape != (4 ** self.n,):
                raise ValueError("state table has wrong shape")
            if np.max(t) > 2.0 ** (-self.n) + 1e-9:
                raise ValueError("state table entry exceeds 2^-n")
        else:
            if t.shape != (4 ** self.n, 4 ** self.n):
                raise ValueError("unitary table has wrong shape")
            marg = 2.0 ** (-2 * self.n)
            if np.max(np.abs(t.sum(axis=0) - marg)) > 1e-9 or np.max(
                np.abs(t.sum(axis=1) - marg)
            ) > 1e-9:
                raise ValueError("unitary table marginals are not uniform")


@lru_cache(maxsize=None)
def _wht_matrix(m: int) -> np.ndarray:
    H = np.array([[1.0]])
    block = np.array([[1.0, 1.0], [1.0, -1.0]])
    for _ in range(m):
        H = np.kron(H, block)
    return H


def weyl_expectations(psi) -> np.ndarray:
    """<psi|P_z|psi> for every 2m-bit label z, via a Walsh-Hadamard transform."""
    psi = np.asarray(psi, dtype=complex)
    m = qubit_count(psi.shape[0])
    dim = 2 ** m
    H = _wht_matrix(m)
    ks = np.arange(dim)
    out = np.empty((dim, dim), dtype=complex)  # [a, c]
    for a in range(dim):
        h = psi * np.conj(psi[ks ^ a])
        f = H @ h
        phases = 1j ** np.array([int(a & c).bit_count() for c in ks])
        out[a] = phases * f
    return out.reshape(-1)  # index (a << m) | c == WeylLabel.index


def char_dist_state(psi) -> CharDist:
    """p_psi(x) = 2^-n |<psi|P_x|psi>|^2."""
    m = check_state(psi)
    if m > MAX_CHOI_QUBITS:
        raise BudgetExceededError(f"char_dist_state requires n <= {MAX_CHOI_QUBITS} (got {m})")
    vals = weyl_expectations(psi)
    table = np.abs(vals) ** 2 / 2 ** m
    return CharDist(m, "state", table)


def char_dist_unitary(U, allow_large: bool = False) -> CharDist:
    """p_U(x,y) = 2^-4n tr(P_x U P_y U^dag)^2, as the full 2^4n table."""
    U = np.asarray(U, dtype=complex)
    n = check_unitary(U)
    if n > MAX_CHARDIST_UNITARY:
        raise BudgetExceededError(
            f"char_dist_unitary requires n <= {MAX_CHARDIST_UNITARY} (got {n})"
        )
    if n >= 3 and not allow_large:
        raise BudgetExceededError(
            f"char_dist_unitary at n = {n} stores a 2^{4 * n}-entry table;"
            " pass allow_large=True to proceed"
        )
    count = 4 ** n
    conj_rows = np.empty((count, 4 ** n), dtype=complex)  # vec(U^dag P_x U)
    pauli_rows = np.empty((count, 4 ** n), dtype=complex)  # vec(P_y^T)
    for i in range(count):
        P = pauli.weyl_matrix(pauli.WeylLabel.from_index(n, i))
        conj_rows[i] = (U.conj().T @ P @ U).flatten()
        pauli_rows[i] = P.T.flatten()
    traces = conj_rows @ pauli_rows.T  # traces[x, y] = tr(P_x U P_y U^dag)
    table = traces.real ** 2 / 2.0 ** (4 * n)
    return CharDist(n, "unitary", table)


# ---------------------------------------------------------------------------
# Fidelity oracles

@lru_cache(maxsize=None)
def stab_state_bank(n: int) -> np.ndarray:
    """Matrix whose rows are all stabilizer state vectors of Stab(n)."""
    if n > MAX_STAB_ORACLE_QUBITS:
        raise BudgetExceededError(
            f"stab_state_bank requires n <= {MAX_STAB_ORACLE_QUBITS} (got {n})"
        )
    tableaux = pauli.enumerate_stabilizer_states(n)
    bank = np.empty((len(tableaux), 2 ** n), dtype=complex)
    for i, t in enumerate(tableaux):
        bank[i] = pauli.stabilizer_state_vector(t)
    return bank


def f_stab(psi) -> float:
    """Stabilizer fidelity: max over Stab(n) of |<S|psi>|^2, exact."""
    psi = np.asarray(psi, dtype=complex)
    n = check_state(psi)
    bank = stab_state_bank(n)
    return float(np.max(np.abs(bank.conj() @ psi) ** 2))


@lru_cache(maxsize=None)
def _clifford_vec_bank(n: int) -> np.ndarray:
    bank = pauli.clifford_matrix_bank(n)
    return bank.reshape(bank.shape[0], -1)


def f_cliff(U) -> float:
    """Clifford fidelity: max over projective Cl(n) of 2^-2n |tr(U^dag C)|^2."""
    U = np.asarray(U, dtype=complex)
    n = check_unitary(U)
    if n > MAX_CLIFF_ORACLE_QUBITS:
        raise BudgetExceededError(
            f"f_cliff requires n <= {MAX_CLIFF_ORACLE_QUBITS} (got {n})"
        )
    overlaps = _clifford_vec_bank(n) @ U.conj().flatten()
    return float(np.max(np.abs(overlaps) ** 2) / 4 ** n)


# ---------------------------------------------------------------------------
# Weights and subspace structure of characteristic distributions

def _label_indices(d: CharDist, v: np.ndarray):
    if d.kind == "state":
        if v.shape[0] != 2 * d.n:
            raise ValueError("label length does not match CharDist")
        return pauli.WeylLabel.from_vector(v).index
    if v.shape[0] != 4 * d.n:
        raise ValueError("pair label length does not match CharDist")
    x = pauli.WeylLabel.from_vector(v[: 2 * d.n]).index
    y = pauli.WeylLabel.from_vector(v[2 * d.n :]).index
    return (x, y)


def shifted_weight(d: CharDist, V: gf2.Subspace, shift) -> float:
    """Total probability of the coset V + shift under the distribution."""
    shift = gf2.as_bits(shift)
    expected = 2 * d.n if d.kind == "state" else 4 * d.n
    if V.ambient_dim != expected or shift.shape[0] != expected:
        raise ValueError("subspace ambient does not match CharDist")
    total = 0.0
    for v in gf2.enumerate_elements(V):
        total += float(d.table[_label_indices(d, v ^ shift)])
    return total


def subspace_weight(d: CharDist, V: gf2.Subspace) -> float:
    """Total probability the distribution puts on the subspace V."""
    expected = 2 * d.n if d.kind == "state" else 4 * d.n
    return shifted_weight(d, V, np.zeros(expected, dtype=np.uint8))


def high_weight_set(d: CharDist) -> list[pauli.WeylLabel]:
    """Labels with 2^n p(x) > 1/2 (always an isotropic set for states)."""
    if d.kind != "state":
        raise ValueError("high_weight_set is defined for state distributions")
    thresh = 0.5 / 2 ** d.n
    return [
        pauli.WeylLabel.from_index(d.n, i)
        for i in range(4 ** d.n)
        if d.table[i] > thresh
    ]


# ---------------------------------------------------------------------------
# Pair subspaces (x, y) in F2^(4n) and Clifford Lagrangians

def pair_form_matrix(n: int) -> np.ndarray:
    """Gram matrix of the form [x1,x2] + [y1,y2] on pairs x || y."""
    J = gf2.symplectic_form_matrix(2 * n)
    G = np.zeros((4 * n, 4 * n), dtype=np.uint8)
    G[: 2 * n, : 2 * n] = J
    G[2 * n :, 2 * n :] = J
    return G


def pair_is_isotropic(V: gf2.Subspace, n: int) -> bool:
    prods = gf2.mat2mul(gf2.mat2mul(V.basis, pair_form_matrix(n)), V.basis.T)
    return not prods.any()


def graph_subspace(S, n: int) -> gf2.Subspace:
    """The pair subspace {(x, Sx)} of a 2n x 2n matrix over F2."""
    S = gf2.as_bitmatrix(S)
    rows = np.hstack([np.eye(2 * n, dtype=np.uint8), S.T % 2])
    return gf2.Subspace.from_vectors(rows, 4 * n)


def is_clifford_lagrangian(M: gf2.Subspace, n: int) -> np.ndarray | None:
    """Recover S with M = {(x, Sx)} if M is the graph of a symplectic map.

    Returns None when the left projection is not bijective or the graph
    map fails to be symplectic.  Raises if M is not of Lagrangian
    dimension for the pair form.
    """
    if M.ambient_dim != 4 * n or M.dim != 2 * n:
        raise ValueError("expected a dimension-2n subspace of F2^(4n)")
    X = M.basis[:, : 2 * n]
    Y = M.basis[:, 2 * n :]
    if gf2.rank(X) != 2 * n:
        return None
    # Rows satisfy y_i = S x_i, i.e. S X^T = Y^T.
    S = np.zeros((2 * n, 2 * n), dtype=np.uint8)
    Xt = X.T
    for j in range(2 * n):
        col = gf2.solve(Xt.T, Y.T[j])  # row j of S solves X s_j = (Y^T)_j
        assert col is not None
        S[j] = col
    J = gf2.symplectic_form_matrix(2 * n)
    if not np.array_equal(gf2.mat2mul(gf2.mat2mul(S.T, J), S), J):
        return None
    return S


def extract_extendable(V: gf2.Subspace, n: int):
    """Split an isotropic pair subspace as V = V' + (L0 + 0) + (0 + R0).

    V' is the graph of a form-preserving bijection between its left and
    right projections; L0 collects the x with (x, 0) in V and R0 the y
    with (0, y) in V.
    """
    if V.ambient_dim != 4 * n:
        raise ValueError("expected a subspace of F2^(4n)")
    if not pair_is_isotropic(V, n):
        raise ValueError("subspace is not isotropic for the pair form")
    left_block = gf2.Subspace(
        4 * n,
        np.hstack([np.eye(2 * n, dtype=np.uint8), np.zeros((2 * n, 2 * n), np.uint8)]),
    )
    right_block = gf2.Subspace(
        4 * n,
        np.hstack([np.zeros((2 * n, 2 * n), np.uint8), np.eye(2 * n, dtype=np.uint8)]),
    )
    VL = gf2.intersect(V, left_block)
    VR = gf2.intersect(V, right_block)
    L0 = gf2.Subspace.from_vectors(
        VL.basis[:, : 2 * n] if VL.dim else np.zeros((0, 2 * n), np.uint8), 2 * n
    )
    R0 = gf2.Subspace.from_vectors(
        VR.basis[:, 2 * n :] if VR.dim else np.zeros((0, 2 * n), np.uint8), 2 * n
    )
    # Complete a basis of (L0+0) + (0+R0) to a basis of V; the added
    # vectors span a complement V'.
    fixed = np.vstack([VL.basis, VR.basis]) if VL.dim + VR.dim else np.zeros(
        (0, 4 * n), np.uint8
    )
    current = list(fixed)
    added = []
    for row in V.basis:
        stacked = np.array(current + [row], dtype=np.uint8)
        if gf2.rank(stacked) > len(current):
            current.append(row)
            added.append(row)
    Vp = gf2.Subspace.from_vectors(added, 4 * n) if added else gf2.Subspace.zero(4 * n)
    return Vp, L0, R0


def extend_to_symplectic(domain_basis, image_basis, n: int) -> np.ndarray:
    """Witt extension: complete a form-preserving partial map to Sp(2n, F2).

    domain_basis and image_basis are matching lists of rows: the map
    sends domain_basis[i] to image_basis[i].  Greedily appends pairs
    (v, w) that preserve all symplectic inner products; a valid w always
    exists at every step, mirroring Witt's extension theorem.
    """
    D = (
        gf2.as_bitmatrix(domain_basis)
        if len(domain_basis)
        else np.zeros((0, 2 * n), np.uint8)
    )
    I = (
        gf2.as_bitmatrix(image_basis)
        if len(image_basis)
        else np.zeros((0, 2 * n), np.uint8)
    )
    if D.shape != I.shape or D.shape[1] != 2 * n:
        raise ValueError("domain/image shape mismatch")
    if gf2.rank(D) != D.shape[0] or gf2.rank(I) != I.shape[0]:
        raise ValueError("domain and image bases must be linearly independent")
    J = gf2.symplectic_form_matrix(2 * n)
    gram_d = gf2.mat2mul(gf2.mat2mul(D, J), D.T)
    gram_i = gf2.mat2mul(gf2.mat2mul(I, J), I.T)
    if not np.array_equal(gram_d, gram_i):
        raise ValueError("partial map does not preserve the symplectic form")
    dom = list(D)
    img = list(I)
    while len(dom) < 2 * n:
        v = None
        for j in range(2 * n):
            cand = np.zeros(2 * n, dtype=np.uint8)
            cand[j] = 1
            if gf2.rank(np.array(dom + [cand], dtype=np.uint8)) > len(dom):
                v = cand
                break
        assert v is not None
        targets = np.array(
            [gf2.symplectic_inner(v, d) for d in dom], dtype=np.uint8
        )
        A = gf2.mat2mul(np.array(img, dtype=np.uint8), J) if img else np.zeros(
            (0, 2 * n), np.uint8
        )
        w0 = gf2.solve(A, targets) if img else np.zeros(2 * n, dtype=np.uint8)
        assert w0 is not None
        w = None
        # Prefer w = v so that partial identity maps extend to the identity.
        if (not img or np.array_equal(gf2.mat2mul(A, v[:, None])[:, 0], targets)) and (
            gf2.rank(np.array(img + [v], dtype=np.uint8)) > len(img)
        ):
            w = v
        if w is None:
            for k in gf2.enumerate_elements(
                gf2.kernel(A) if img else gf2.Subspace.full(2 * n)
            ):
                cand = w0 ^ k
                if gf2.rank(np.array(img + [cand], dtype=np.uint8)) > len(img):
                    w = cand
                    break
        assert w is not None, "Witt extension step failed"
        dom.append(v)
        img.append(w)
    # S maps dom_k -> img_k: S X = Y with X, Y having the vectors as columns.
    X = np.array(dom, dtype=np.uint8).T
    Y = np.array(img, dtype=np.uint8).T
    S = np.zeros((2 * n, 2 * n), dtype=np.uint8)
    for j in range(2 * n):
        row = gf2.solve(X.T, Y[j])  # solve X^T s = (row j of Y)^T
        assert row is not None
        S[j] = row
    if not np.array_equal(gf2.mat2mul(gf2.mat2mul(S.T, J), S), J):
        raise AssertionError("extension failed to be symplectic")
    return S


# ---------------------------------------------------------------------------
# Bell measurement and gap instances

@lru_cache(maxsize=None)
def bell_basis_matrix(n: int) -> np.ndarray:
    """Rows are the conjugated Bell-basis vectors <<P_y| for y in F2^(2n)."""
    count = 4 ** n
    B = np.empty((count, count), dtype=complex)
    for y in range(count):
        P = pauli.weyl_matrix(pauli.WeylLabel.from_index(n, y))
        B[y] = np.conj(P.flatten() / np.sqrt(2 ** n))
    return B


def bell_outcome_probs(psi) -> np.ndarray:
    """Exact Bell-measurement outcome distribution on a 2n-qubit state."""
    psi = np.asarray(psi, dtype=complex)
    m = check_state(psi)
    if m % 2:
        raise ValueError("Bell measurement needs an even qubit count")
    n = m // 2
    amps = bell_basis_matrix(n) @ psi
    probs = np.abs(amps) ** 2
    if abs(probs.sum() - 1.0) > 1e-9:
        raise AssertionError("Bell outcome probabilities do not sum to 1")
    return probs


def bell_measure(psi, rng: np.random.Generator) -> pauli.WeylLabel:
    """Sample a Bell-basis outcome label y with probability |<<P_y|psi>|^2."""
    probs = bell_outcome_probs(psi)
    n = qubit_count(probs.shape[0]) // 2
    idx = int(rng.choice(probs.shape[0], p=probs / probs.sum()))
    return pauli.WeylLabel.from_index(n, idx)


def gap_instance(n: int, k: int, rng: np.random.Generator) -> np.ndarray:
    """Block-diagonal unitary separating Clifford and stabilizer fidelity.

    U = sum_x |x><x| (x) U^(x) over x in F2^k with U^(0) = I and the
    remaining blocks Haar random.
    """
    if not 0 <= k <= n or n > MAX_CHOI_QUBITS:
        raise BudgetExceededError(
            f"gap_instance requires 0 <= k <= n <= {MAX_CHOI_QUBITS} (got n={n}, k={k})"
        )
    block_dim = 2 ** (n - k)
    U = np.zeros((2 ** n, 2 ** n), dtype=complex)
    for x in range(2 ** k):
        blk = np.eye(block_dim, dtype=complex) if x == 0 else haar_unitary(n - k, rng)
        sl = slice(x * block_dim, (x + 1) * block_dim)
        U[sl, sl] = blk
    return U
