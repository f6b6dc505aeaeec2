"""
Clifford commutant toolkit: self-dual codes, stochastic Lagrangian
subspaces, the commutant generators r(T)/R(T), Pi_4, Gram/Weingarten
matrices, twirl channels, partial transposes (with the constructive
column-swap algorithm), and PPT bounds.

Codewords of a [2t, t] code are stored as vectors (x | y) of length 2t;
integer packing puts coordinate 0 in the most significant bit, so a
packed codeword c splits as x = c >> t, y = c & (2^t - 1).
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache, reduce

import numpy as np

from . import densesim, gf2, pauli
from .errors import BudgetExceededError

MAX_SD_T = 4
MAX_SIGMA_T = 5
MAX_DENSE_DIM = 256  # 2^(n t) cap for dense R(T) work


@dataclass(frozen=True)
class SelfDualCode:
    """A self-dual [2t, t] binary code with canonical RREF generator."""

    t: int
    space: gf2.Subspace

    def __post_init__(self):
        if self.space.ambient_dim != 2 * self.t or self.space.dim != self.t:
            raise ValueError("generator must have dimension t in F2^(2t)")
        if gf2.dual(self.space) != self.space:
            raise ValueError("code is not self-dual")

    @classmethod
    def from_generator(cls, rows, t: int | None = None) -> "SelfDualCode":
        m = gf2.as_bitmatrix(rows)
        if t is None:
            t = m.shape[1] // 2
        return cls(t, gf2.Subspace.from_vectors(m, 2 * t))

    @property
    def generator(self) -> np.ndarray:
        return self.space.basis

    @property
    def a_block(self) -> np.ndarray:
        return self.space.basis[:, : self.t]

    @property
    def b_block(self) -> np.ndarray:
        return self.space.basis[:, self.t :]

    def codewords_packed(self) -> list[int]:
        basis = gf2.pack_rows(self.space.basis)
        words = []
        for coeffs in itertools.product((0, 1), repeat=len(basis)):
            w = 0
            for c, b in zip(coeffs, basis):
                if c:
                    w ^= b
            words.append(w)
        return words

    def contains(self, v) -> bool:
        return self.space.contains(v)

    def to_text(self) -> str:
        return "\n".join("".join(str(b) for b in row) for row in self.space.basis)


@dataclass(frozen=True)
class StochasticLagrangian:
    """An element T of Sigma_{t,t}: self-dual, totally isotropic mod 4,
    and containing the all-ones vector."""

    code: SelfDualCode

    def __post_init__(self):
        t = self.code.t
        ones = np.ones(2 * t, dtype=np.uint8)
        if not self.code.contains(ones):
            raise ValueError("stochastic Lagrangian must contain the all-ones vector")
        mask = (1 << t) - 1
        for w in self.code.codewords_packed():
            x, y = w >> t, w & mask
            if (x.bit_count() - y.bit_count()) % 4:
                raise ValueError("code violates total isotropy mod 4")

    @property
    def t(self) -> int:
        return self.code.t


def identity_code(t: int) -> SelfDualCode:
    rows = np.hstack([np.eye(t, dtype=np.uint8), np.eye(t, dtype=np.uint8)])
    return SelfDualCode.from_generator(rows, t)


def identity_lagrangian(t: int) -> StochasticLagrangian:
    return StochasticLagrangian(identity_code(t))


def t4_code() -> StochasticLagrangian:
    """The special T_4 with R(T_4) = 2^n Pi_4."""
    rows = [
        [1, 0, 0, 1, 1, 0, 0, 1],
        [0, 1, 0, 1, 0, 1, 0, 1],
        [0, 0, 0, 0, 1, 1, 1, 1],
        [1, 1, 1, 1, 0, 0, 0, 0],
    ]
    return StochasticLagrangian(SelfDualCode.from_generator(rows, 4))


# ---------------------------------------------------------------------------
# Enumeration by recursive generator extension (integer-packed)

def _extend_self_orthogonal(t: int, seeds: set[tuple[int, ...]],
                            candidate_ok) -> set[tuple[int, ...]]:
    """Grow each seed basis by one vector keeping pairwise orthogonality."""
    out: set[tuple[int, ...]] = set()
    for basis in seeds:
        for v in range(1, 1 << (2 * t)):
            if not candidate_ok(v):
                continue
            if any((v & b).bit_count() % 2 for b in basis):
                continue
            r = v
            for b in basis:
                r = min(r, r ^ b)
            if r == 0:
                continue
            out.add(gf2.rref_ints(basis + (v,), 2 * t))
    return out


@lru_cache(maxsize=None)
def enumerate_sd(t: int) -> tuple[SelfDualCode, ...]:
    """All self-dual [2t, t] codes, t <= 4."""
    if not 1 <= t <= MAX_SD_T:
        raise BudgetExceededError(f"enumerate_sd requires 1 <= t <= {MAX_SD_T} (got {t})")
    even = lambda v: v.bit_count() % 2 == 0
    level: set[tuple[int, ...]] = {()}
    for _ in range(t):
        level = _extend_self_orthogonal(t, level, even)
    return tuple(
        SelfDualCode(t, gf2.Subspace(2 * t, gf2.unpack_rows(b, 2 * t)))
        for b in sorted(level)
    )


@lru_cache(maxsize=None)
def enumerate_sigma_tt(t: int) -> tuple[StochasticLagrangian, ...]:
    """All of Sigma_{t,t}, t <= 5.

    For t <= 4 this filters the self-dual codes.  For t = 5 (where
    SD(10) is not enumerated) it searches directly: grow from the
    all-ones vector keeping pairwise orthogonality and the per-vector
    condition wt(x) = wt(y) mod 4, which together are equivalent to
    total isotropy.
    """
    if not 1 <= t <= MAX_SIGMA_T:
        raise BudgetExceededError(
            f"enumerate_sigma_tt requires 1 <= t <= {MAX_SIGMA_T} (got {t})"
        )
    mask = (1 << t) - 1
    balanced = lambda v: ((v >> t).bit_count() - (v & mask).bit_count()) % 4 == 0
    if t <= MAX_SD_T:
        ones = np.ones(2 * t, dtype=np.uint8)
        out = []
        for code in enumerate_sd(t):
            if not code.contains(ones):
                continue
            if all(balanced(int(w)) for w in gf2.pack_rows(code.generator)):
                out.append(StochasticLagrangian(code))
        return tuple(out)
    ones_packed = (1 << (2 * t)) - 1
    level: set[tuple[int, ...]] = {(ones_packed,)}
    for _ in range(t - 1):
        level = _extend_self_orthogonal(t, level, balanced)
    return tuple(
        StochasticLagrangian(SelfDualCode(t, gf2.Subspace(2 * t, gf2.unpack_rows(b, 2 * t))))
        for b in sorted(level)
    )


# ---------------------------------------------------------------------------
# Dense operators

def _as_code(d) -> SelfDualCode:
    return d.code if isinstance(d, StochasticLagrangian) else d


def r_operator(d) -> np.ndarray:
    """r(T) = sum over codewords (x, y) of |x><y| on (C^2)^(x)t."""
    code = _as_code(d)
    t = code.t
    mask = (1 << t) - 1
    r = np.zeros((2 ** t, 2 ** t))
    for w in code.codewords_packed():
        r[w >> t, w & mask] = 1.0
    return r


def _copy_major_perm(n: int, t: int) -> np.ndarray:
    """Index permutation from copy-major to qubit-major bit layout."""
    size = 2 ** (n * t)
    perm = np.empty(size, dtype=np.int64)
    for X in range(size):
        q = 0
        for i in range(t):
            for j in range(n):
                bit = (X >> (n * t - 1 - (i * n + j))) & 1
                q |= bit << (n * t - 1 - (j * t + i))
        perm[X] = q
    return perm


def R_operator(d, n: int) -> np.ndarray:
    """R(T) = r(T)^(x)n acting on t copies of n qubits (copy-major order)."""
    code = _as_code(d)
    t = code.t
    if 2 ** (n * t) > MAX_DENSE_DIM:
        raise BudgetExceededError(
            f"R_operator requires 2^(n t) <= {MAX_DENSE_DIM} (got n={n}, t={t})"
        )
    r = r_operator(code)
    if n == 1:
        return r
    R = reduce(np.kron, [r] * n)
    perm = _copy_major_perm(n, t)
    return R[np.ix_(perm, perm)]


def pi4(n: int) -> np.ndarray:
    """Projector Pi_4 = 2^-2n sum_x P_x^(x)4 on four copies of n qubits."""
    if n > 2:
        raise BudgetExceededError(f"pi4 requires n <= 2 (got {n})")
    dim = 4 ** n  # one copy pair |P_x>> lives on 2n qubits
    out = np.zeros((dim * dim, dim * dim), dtype=complex)
    for x in range(4 ** n):
        v = densesim.choi_state(
            np.asarray(pauli.weyl_matrix(pauli.WeylLabel.from_index(n, x)))
        )
        vv = np.kron(v, v)
        out += np.outer(vv, vv.conj())
    return out


def permutation_operator(perm, d: int) -> np.ndarray:
    """Operator permuting t tensor factors of dimension d: copy i of the
    output takes copy perm[i] of the input."""
    t = len(perm)
    size = d ** t
    op = np.zeros((size, size))
    for idx in range(size):
        digits = []
        rem = idx
        for _ in range(t):
            digits.append(rem % d)
            rem //= d
        digits.reverse()  # digits[i] = factor i of the input index
        out_digits = [digits[perm[i]] for i in range(t)]
        out_idx = 0
        for dig in out_digits:
            out_idx = out_idx * d + dig
        op[out_idx, idx] = 1.0
    return op


@lru_cache(maxsize=None)
def sym_projector(d: int, t: int = 4) -> np.ndarray:
    """Projector onto the symmetric subspace of (C^d)^(x)t."""
    if d ** t > MAX_DENSE_DIM:
        raise BudgetExceededError(f"sym_projector requires d^t <= {MAX_DENSE_DIM}")
    acc = np.zeros((d ** t, d ** t))
    perms = list(itertools.permutations(range(t)))
    for p in perms:
        acc += permutation_operator(p, d)
    return acc / len(perms)


# ---------------------------------------------------------------------------
# Gram / Weingarten and twirls

@dataclass(frozen=True)
class GramWeingarten:
    n: int
    t: int
    labels: tuple[StochasticLagrangian, ...]
    gram: np.ndarray
    weingarten: np.ndarray

    def __post_init__(self):
        G, W = self.gram, self.weingarten
        if np.max(np.abs(G - G.T)) > 1e-12 or np.min(np.diag(G)) <= 0:
            raise ValueError("gram must be symmetric with positive diagonal")
        resid = np.max(np.abs(G @ W @ G - G)) / np.max(np.abs(G))
        if resid > 1e-8:
            raise ValueError("weingarten is not a pseudo-inverse of gram")


def gram_weingarten(n: int, t: int) -> GramWeingarten:
    """Gram matrix of the R(T) under the trace inner product and its
    eigendecomposition pseudo-inverse (relative cutoff 1e-10)."""
    if 2 ** (n * t) > MAX_DENSE_DIM:
        raise BudgetExceededError(
            f"gram_weingarten requires 2^(n t) <= {MAX_DENSE_DIM} (got n={n}, t={t})"
        )
    labels = enumerate_sigma_tt(t)
    ops = [R_operator(T, n) for T in labels]
    k = len(ops)
    G = np.empty((k, k))
    for i in range(k):
        for j in range(i, k):
            G[i, j] = G[j, i] = float(np.sum(ops[i] * ops[j]))  # real 0/1 matrices
    evals, evecs = np.linalg.eigh(G)
    cutoff = 1e-10 * np.max(np.abs(evals))
    inv = np.where(np.abs(evals) > cutoff, 1.0 / np.where(evals == 0, 1.0, evals), 0.0)
    W = evecs @ np.diag(inv) @ evecs.T
    return GramWeingarten(n, t, labels, G, W)


def clifford_twirl_exact(rho, t: int, n: int = 1) -> np.ndarray:
    """E over Cl(n) of C^(x)t rho C^dag(x)t by direct group average (n = 1)."""
    if n != 1:
        raise BudgetExceededError("clifford_twirl_exact enumerates Cl(1) only")
    if 2 ** t > MAX_DENSE_DIM:
        raise BudgetExceededError(f"clifford_twirl_exact requires 2^t <= {MAX_DENSE_DIM}")
    rho = np.asarray(rho, dtype=complex)
    bank = pauli.clifford_matrix_bank(1)
    acc = np.zeros_like(rho)
    for C in bank:
        Ct = reduce(np.kron, [C] * t)
        acc += Ct @ rho @ Ct.conj().T
    return acc / bank.shape[0]


def clifford_twirl_weingarten(rho, n: int, t: int) -> np.ndarray:
    """Twirl via the commutant expansion sum_{T,T'} W tr[R(T')^dag rho] R(T)."""
    rho = np.asarray(rho, dtype=complex)
    gw = gram_weingarten(n, t)
    ops = [R_operator(T, n) for T in gw.labels]
    coeffs = np.array([np.sum(op.conj().T * rho.T) for op in ops])  # tr(R^dag rho)
    out = np.zeros_like(rho)
    for i, op in enumerate(ops):
        out += (gw.weingarten[i] @ coeffs) * op
    return out


# ---------------------------------------------------------------------------
# Partial transposes

def partial_transpose_code(d: SelfDualCode, S) -> SelfDualCode:
    """Swap coordinates a_i <-> b_i for i in S (0-indexed copies)."""
    code = _as_code(d)
    t = code.t
    g = code.generator.copy()
    for i in S:
        g[:, [i, t + i]] = g[:, [t + i, i]]
    return SelfDualCode.from_generator(g, t)


def partial_transpose_dense(M, S, n: int) -> np.ndarray:
    """Transpose the selected tensor factors (each of dimension 2^n)."""
    M = np.asarray(M)
    d = 2 ** n
    t = densesim.qubit_count(M.shape[0]) // n
    tensor = M.reshape((d,) * (2 * t))
    axes = list(range(2 * t))
    for i in S:
        axes[i], axes[t + i] = axes[t + i], axes[i]
    return tensor.transpose(axes).reshape(M.shape)


def unitary_partial_transpose(d: SelfDualCode, hook=None):
    """Find S with A-block of the S-partially-transposed code invertible.

    Implements the constructive column-swap algorithm: for each column k
    a shortest augmenting path in the digraph on vertices {0..k} (edge
    i -> j iff B[j, i] = 1) is shortened step by step until some row
    t0 >= k has B[t0, k] = 1; the column is then swapped into A and
    cleaned up by row operations.

    Returns:
        (S, O): the swap set as a frozenset of copy indices, and the
        orthogonal matrix O such that the transposed code is the graph
        {(O y, y)}.  If hook is given it is called as hook(k, M, S)
        after each outer iteration with the working generator matrix.
    """
    code = _as_code(d)
    t = code.t
    M = code.generator.copy()
    swaps: set[int] = set()

    def swap_column(i: int):
        M[:, [i, t + i]] = M[:, [t + i, i]]
        swaps.symmetric_difference_update({i})

    def reduce_augmenting_path(k: int) -> int:
        # Digraph on vertices {0..k}: edge i -> j iff B[j, i] = 1.
        B = M[:, t:]
        verts = range(k + 1)
        v0 = {i for i in verts if B[k:, i].any()}
        # BFS for a shortest path from vertex k into v0.
        parent = {k: None}
        queue = deque([k])
        path = None
        if k in v0:
            path = [k]
        while queue and path is None:
            i = queue.popleft()
            for j in verts:
                if j not in parent and B[j, i]:
                    parent[j] = i
                    if j in v0:
                        node, path = j, []
                        while node is not None:
                            path.append(node)
                            node = parent[node]
                        path.reverse()
                        break
                    queue.append(j)
        assert path is not None, "no augmenting path: code is not self-dual"
        a = path  # a[0] = k, a[-1] in v0
        rows_t0 = [r for r in range(k, t) if M[r, t + a[-1]]]
        t0 = rows_t0[0]
        for idx in range(len(a) - 1, 0, -1):
            col = t + a[idx]
            for r in range(t):
                if r != t0 and M[r, col]:
                    M[r] ^= M[t0]
            swap_column(a[idx])
            M[[t0, a[idx]]] = M[[a[idx], t0]]
        return t0 if len(a) > 1 else t0

    for k in range(t):
        t0 = reduce_augmenting_path(k)
        assert M[t0, t + k] == 1
        swap_column(k)
        if t0 != k:
            M[[t0, k]] = M[[k, t0]]
        for r in range(t):
            if r != k and M[r, k]:
                M[r] ^= M[k]
        if hook is not None:
            hook(k, M.copy(), frozenset(swaps))

    A, B = M[:, :t], M[:, t:]
    assert np.array_equal(A, np.eye(t, dtype=np.uint8))
    # Codewords are (u, u B), i.e. column vectors y = B^T u, x = u; as a
    # graph {(O y, y)} this gives O = (B^T)^-1 = B since B is orthogonal.
    O = B.copy()
    return frozenset(swaps), O


def min_trace_norm_pt(T, n: int = 1) -> float:
    """min over S of the trace norm of R(T)^Gamma_S."""
    code = _as_code(T)
    t = code.t
    R = R_operator(code, n)
    best = np.inf
    for size in range(t + 1):
        for S in itertools.combinations(range(t), size):
            val = float(np.linalg.svd(partial_transpose_dense(R, S, n), compute_uv=False).sum())
            best = min(best, val)
    return best


def ppt_overlap_check(T, rho_factors, n: int = 1) -> float:
    """|tr(R(T) rho)| for a t-fold product state rho = rho_1 x ... x rho_t."""
    code = _as_code(T)
    rho = reduce(np.kron, [np.asarray(f, dtype=complex) for f in rho_factors])
    R = R_operator(code, n)
    if rho.shape != R.shape:
        raise ValueError("product state has wrong number of factors")
    return float(abs(np.trace(R @ rho)))


# ---------------------------------------------------------------------------
# Four-copy stabilizer average

def avg_stab_fourcopy(n: int) -> np.ndarray:
    """E over Stab(n) of (|S><S|)^(x)4 by direct enumeration (n <= 2)."""
    if n > 2:
        raise BudgetExceededError(f"avg_stab_fourcopy requires n <= 2 (got {n})")
    bank = densesim.stab_state_bank(n)
    acc = np.zeros((bank.shape[1] ** 4,) * 2, dtype=complex)
    for psi in bank:
        v = reduce(np.kron, [psi] * 4)
        acc += np.outer(v, v.conj())
    return acc / bank.shape[0]


def avg_stab_fourcopy_formula(n: int) -> np.ndarray:
    """Closed form via Pi_4 and the symmetric-subspace projector."""
    if n > 2:
        raise BudgetExceededError(f"avg_stab_fourcopy_formula requires n <= 2 (got {n})")
    d = 2 ** n
    P4 = pi4(n)
    Psym = sym_projector(d, 4)
    d_plus = (d + 1) * (d + 2) / 6
    eye = np.eye(d ** 4)
    return (P4 @ Psym + (4.0 / (d + 4)) * (eye - P4) @ Psym) / (d * d_plus)
