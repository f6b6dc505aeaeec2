"""
Weyl/Pauli operators, stabilizer tableaux, and the Clifford group.

Weyl operators follow P_x = i^(a.b) X^a Z^b where x = (a | b) and the
phase exponent a.b is the *integer* inner product.  Phases of signed
Paulis are tracked exactly as exponents of i in Z4.  Clifford elements
are projective: a symplectic 2n x 2n matrix S over F2 plus 2n sign bits
fixing the images of the generators X_i and Z_i.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import gf2
from .errors import BudgetExceededError

MAX_DENSE_QUBITS = 6

_PAULI_LETTERS = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}
_LETTER_BITS = {v: k for k, v in _PAULI_LETTERS.items()}
_PHASE_PREFIX = {0: "", 1: "i", 2: "-", 3: "-i"}


@dataclass(frozen=True)
class WeylLabel:
    """Phase-space label x = (a | b) in F2^(2n) of an unsigned Weyl operator."""

    n: int
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != 2 * self.n:
            raise ValueError("label length must be 2n")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("label entries must be bits")

    @classmethod
    def from_vector(cls, v) -> "WeylLabel":
        v = gf2.as_bits(v)
        if v.shape[0] % 2:
            raise ValueError("label length must be even")
        return cls(v.shape[0] // 2, tuple(int(b) for b in v))

    @classmethod
    def from_index(cls, n: int, idx: int) -> "WeylLabel":
        bits = tuple((idx >> (2 * n - 1 - j)) & 1 for j in range(2 * n))
        return cls(n, bits)

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.bits, dtype=np.uint8)

    @property
    def index(self) -> int:
        """Integer packing with coordinate 0 as the most significant bit."""
        idx = 0
        for b in self.bits:
            idx = (idx << 1) | b
        return idx


@dataclass(frozen=True)
class PhasedPauli:
    """i^phase_exp * P_label with the phase exponent in Z4."""

    label: WeylLabel
    phase_exp: int = 0

    def __post_init__(self):
        object.__setattr__(self, "phase_exp", self.phase_exp % 4)

    @property
    def n(self) -> int:
        return self.label.n

    def matrix(self) -> np.ndarray:
        return (1j ** self.phase_exp) * weyl_matrix(self.label)

    def __str__(self) -> str:
        bits = self.label.bits
        n = self.label.n
        letters = "".join(_PAULI_LETTERS[(bits[j], bits[n + j])] for j in range(n))
        return _PHASE_PREFIX[self.phase_exp] + letters


def parse_phased_pauli(text: str) -> PhasedPauli:
    """Parse the text form, e.g. "-iXZY" or "+IZ" or "Y"."""
    s = text.strip()
    phase = 0
    if s.startswith("+"):
        s = s[1:]
    if s.startswith("-"):
        phase = 2
        s = s[1:]
    if s.startswith("i"):
        phase += 1
        s = s[1:]
    if not s or any(ch not in _LETTER_BITS for ch in s):
        raise ValueError(f"invalid Pauli string {text!r}")
    n = len(s)
    a = [_LETTER_BITS[ch][0] for ch in s]
    b = [_LETTER_BITS[ch][1] for ch in s]
    return PhasedPauli(WeylLabel(n, tuple(a + b)), phase)


_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_WEYL_CACHE: dict[tuple[int, tuple[int, ...]], np.ndarray] = {}


def weyl_matrix(lbl: WeylLabel) -> np.ndarray:
    """Dense 2^n x 2^n matrix of P_x = i^(a.b) X^a Z^b."""
    n = lbl.n
    if n > MAX_DENSE_QUBITS:
        raise BudgetExceededError(
            f"weyl_matrix requires n <= {MAX_DENSE_QUBITS} (got {n})"
        )
    key = (n, lbl.bits)
    cached = _WEYL_CACHE.get(key)
    if cached is not None:
        return cached
    a, b = lbl.bits[:n], lbl.bits[n:]
    M = np.array([[1.0 + 0j]])
    for j in range(n):
        factor = np.eye(2, dtype=complex)
        if a[j]:
            factor = factor @ _X
        if b[j]:
            factor = factor @ _Z
        M = np.kron(M, factor)
    M = (1j ** sum(x * y for x, y in zip(a, b))) * M
    M.setflags(write=False)
    _WEYL_CACHE[key] = M
    return M


def weyl_mul(p: PhasedPauli, q: PhasedPauli) -> PhasedPauli:
    """Exact product of two phased Paulis (Z4 phase bookkeeping)."""
    if p.n != q.n:
        raise ValueError("qubit count mismatch")
    n = p.n
    pb, qb = p.label.bits, q.label.bits
    a, b = pb[:n], pb[n:]
    ap, bp = qb[:n], qb[n:]
    dot = lambda u, v: sum(x * y for x, y in zip(u, v))
    new_bits = tuple((x + y) % 2 for x, y in zip(pb, qb))
    na, nb = new_bits[:n], new_bits[n:]
    # X^a Z^b X^a' Z^b' = (-1)^(b.a') X^(a+a') Z^(b+b'), then re-absorb the
    # i^(a.b) definition phases of the three Weyl operators involved.
    k = dot(a, b) + dot(ap, bp) + 2 * dot(b, ap) - dot(na, nb)
    return PhasedPauli(WeylLabel(n, new_bits), (p.phase_exp + q.phase_exp + k) % 4)


@dataclass(frozen=True)
class StabilizerTableau:
    """n commuting, independent, real-phased Pauli generators."""

    n: int
    generators: tuple[PhasedPauli, ...]

    def __post_init__(self):
        if len(self.generators) != self.n:
            raise ValueError("need exactly n generators")
        labels = [g.label.vector for g in self.generators]
        for g in self.generators:
            if g.n != self.n:
                raise ValueError("generator qubit count mismatch")
            if g.phase_exp % 2:
                raise ValueError("generator phases must be real (+1 or -1)")
        span = gf2.Subspace.from_vectors(labels, 2 * self.n)
        if span.dim != self.n or not gf2.is_lagrangian(span):
            raise ValueError("generator labels must span a Lagrangian subspace")

    def label_space(self) -> gf2.Subspace:
        return gf2.Subspace.from_vectors(
            [g.label.vector for g in self.generators], 2 * self.n
        )

    def to_json(self) -> list[str]:
        return [str(g) for g in self.generators]

    @classmethod
    def from_json(cls, strings) -> "StabilizerTableau":
        gens = tuple(parse_phased_pauli(s) for s in strings)
        if not gens:
            raise ValueError("empty tableau")
        return cls(gens[0].n, gens)


def stabilizer_state_vector(t: StabilizerTableau) -> np.ndarray:
    """The unit vector fixed by every generator of the tableau.

    Projects (prod_i (I + s_i P_i)/2) onto computational basis states until
    a nonzero projection appears, then normalizes.
    """
    n = t.n
    if n > MAX_DENSE_QUBITS:
        raise BudgetExceededError(
            f"stabilizer_state_vector requires n <= {MAX_DENSE_QUBITS} (got {n})"
        )
    mats = [g.matrix() for g in t.generators]
    dim = 2 ** n
    for r in range(dim):
        v = np.zeros(dim, dtype=complex)
        v[r] = 1.0
        for P in mats:
            v = (v + P @ v) / 2
        norm = np.linalg.norm(v)
        if norm > 1e-8:
            return v / norm
    raise ValueError("inconsistent tableau: joint +1 eigenspace is empty")


@dataclass(frozen=True)
class CliffordElement:
    """Projective Clifford element: symplectic label map plus sign bits.

    Conjugation sends the generator P_{e_i} (X_i for i < n, Z_{i-n} for
    i >= n) to (-1)^{phase_bits[i]} P_{S e_i}.
    """

    n: int
    symplectic: np.ndarray
    phase_bits: np.ndarray

    def __post_init__(self):
        S = gf2.as_bitmatrix(self.symplectic)
        r = gf2.as_bits(self.phase_bits)
        object.__setattr__(self, "symplectic", S)
        object.__setattr__(self, "phase_bits", r)
        two_n = 2 * self.n
        if S.shape != (two_n, two_n) or r.shape != (two_n,):
            raise ValueError("shape mismatch in Clifford element")
        J = gf2.symplectic_form_matrix(two_n)
        if not np.array_equal(gf2.mat2mul(gf2.mat2mul(S.T, J), S), J):
            raise ValueError("matrix is not symplectic")
        S.setflags(write=False)
        r.setflags(write=False)

    @classmethod
    def identity(cls, n: int) -> "CliffordElement":
        return cls(n, np.eye(2 * n, dtype=np.uint8), np.zeros(2 * n, dtype=np.uint8))

    def key(self) -> tuple:
        return (self.n, self.symplectic.tobytes(), self.phase_bits.tobytes())

    def __eq__(self, other):
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())


def conjugate_label(c: CliffordElement, p: PhasedPauli) -> PhasedPauli:
    """Exact image C P C^dagger as a phased Pauli."""
    if p.n != c.n:
        raise ValueError("qubit count mismatch")
    n = c.n
    bits = p.label.bits
    # Express P_x as i^s * (ordered product of generator Weyls), then map
    # each generator through the Clifford and re-multiply.
    pre = PhasedPauli(WeylLabel(n, (0,) * (2 * n)), 0)
    post = PhasedPauli(WeylLabel(n, (0,) * (2 * n)), 0)
    for i in range(2 * n):
        if not bits[i]:
            continue
        e_i = tuple(1 if j == i else 0 for j in range(2 * n))
        pre = weyl_mul(pre, PhasedPauli(WeylLabel(n, e_i), 0))
        img = WeylLabel.from_vector(c.symplectic[:, i])
        post = weyl_mul(post, PhasedPauli(img, 2 * int(c.phase_bits[i])))
    # pre = i^s P_x, so C P_x C^dag = i^{-s} * post.
    return PhasedPauli(post.label, (post.phase_exp - pre.phase_exp + p.phase_exp) % 4)


def clifford_matrix(c: CliffordElement) -> np.ndarray:
    """Dense unitary (one representative of the projective class).

    Built from the images of the generators: the column for basis state
    |x> is (prod_i Q_i^{x_i}) |psi_0> where Q_i is the image of X_i and
    |psi_0> is stabilized by the images of the Z_i.
    """
    n = c.n
    if n > MAX_DENSE_QUBITS:
        raise BudgetExceededError(
            f"clifford_matrix requires n <= {MAX_DENSE_QUBITS} (got {n})"
        )
    z_gens = tuple(
        PhasedPauli(
            WeylLabel.from_vector(c.symplectic[:, n + i]),
            2 * int(c.phase_bits[n + i]),
        )
        for i in range(n)
    )
    psi0 = stabilizer_state_vector(StabilizerTableau(n, z_gens))
    x_imgs = [
        ((-1.0) ** int(c.phase_bits[i]))
        * weyl_matrix(WeylLabel.from_vector(c.symplectic[:, i]))
        for i in range(n)
    ]
    dim = 2 ** n
    U = np.zeros((dim, dim), dtype=complex)
    for x in range(dim):
        v = psi0
        for i in range(n):
            if (x >> (n - 1 - i)) & 1:
                v = x_imgs[i] @ v
        U[:, x] = v
    return U


# ---------------------------------------------------------------------------
# Sampling

def _sample_from_affine(particular: np.ndarray, hom_basis: np.ndarray, rng) -> np.ndarray:
    v = particular.copy()
    if hom_basis.shape[0]:
        coeffs = rng.integers(0, 2, hom_basis.shape[0])
        for cf, row in zip(coeffs, hom_basis):
            if cf:
                v ^= row
    return v


def random_symplectic(n: int, rng: np.random.Generator) -> np.ndarray:
    """Exactly uniform element of Sp(2n, F2).

    Builds a uniformly random symplectic basis pair by pair: v_i uniform
    in the symplectic complement of the previous pairs, then w_i uniform
    among vectors of that complement with [v_i, w_i] = 1.  Every
    symplectic basis arises in exactly one way, so the result is uniform.
    """
    two_n = 2 * n
    J = gf2.symplectic_form_matrix(two_n)
    pairs: list[np.ndarray] = []  # constraint rows (J v)^T for chosen vectors
    vs, ws = [], []
    for _ in range(n):
        if pairs:
            constraints = np.array(pairs, dtype=np.uint8)
            ker = gf2.kernel(constraints).basis
        else:
            ker = np.eye(two_n, dtype=np.uint8)
        v = np.zeros(two_n, dtype=np.uint8)
        while not v.any():
            v = _sample_from_affine(np.zeros(two_n, dtype=np.uint8), ker, rng)
        row_v = gf2.mat2mul(v[None, :], J)[0]
        sys_rows = pairs + [row_v]
        A = np.array(sys_rows, dtype=np.uint8)
        b = np.zeros(len(sys_rows), dtype=np.uint8)
        b[-1] = 1
        particular = gf2.solve(A, b)
        assert particular is not None
        w = _sample_from_affine(particular, gf2.kernel(A).basis, rng)
        vs.append(v)
        ws.append(w)
        pairs.append(row_v)
        pairs.append(gf2.mat2mul(w[None, :], J)[0])
    S = np.zeros((two_n, two_n), dtype=np.uint8)
    for i in range(n):
        S[:, i] = vs[i]
        S[:, n + i] = ws[i]
    return S


def random_clifford(n: int, rng: np.random.Generator) -> CliffordElement:
    """Exactly uniform element of the projective Clifford group."""
    S = random_symplectic(n, rng)
    r = rng.integers(0, 2, 2 * n).astype(np.uint8)
    return CliffordElement(n, S, r)


def random_stabilizer_state(n: int, rng: np.random.Generator) -> StabilizerTableau:
    """Uniform stabilizer state, as a random Clifford applied to |0...0>."""
    c = random_clifford(n, rng)
    gens = tuple(
        PhasedPauli(
            WeylLabel.from_vector(c.symplectic[:, n + i]),
            2 * int(c.phase_bits[n + i]),
        )
        for i in range(n)
    )
    return StabilizerTableau(n, gens)


# ---------------------------------------------------------------------------
# Enumeration

def _packed_symplectic_inner(x: int, y: int, n: int) -> int:
    mask = (1 << n) - 1
    return (((x >> n) & y).bit_count() + ((y >> n) & x & mask).bit_count()) % 2


@lru_cache(maxsize=None)
def enumerate_lagrangians(n: int) -> tuple[gf2.Subspace, ...]:
    """All Lagrangian subspaces of F2^(2n), n <= 4."""
    if n > 4:
        raise BudgetExceededError(f"enumerate_lagrangians requires n <= 4 (got {n})")
    two_n = 2 * n
    level: set[tuple[int, ...]] = {()}
    for _ in range(n):
        nxt: set[tuple[int, ...]] = set()
        for basis in level:
            for v in range(1, 1 << two_n):
                if any(_packed_symplectic_inner(v, b, n) for b in basis):
                    continue
                r = v
                for b in basis:
                    r = min(r, r ^ b)
                if r == 0:
                    continue  # already in the span
                nxt.add(gf2.rref_ints(basis + (v,), two_n))
        level = nxt
    return tuple(
        gf2.Subspace(two_n, gf2.unpack_rows(basis, two_n)) for basis in sorted(level)
    )


@lru_cache(maxsize=None)
def enumerate_stabilizer_states(n: int) -> tuple[StabilizerTableau, ...]:
    """Every n-qubit stabilizer state exactly once (n <= 4)."""
    if n > 4:
        raise BudgetExceededError(
            f"enumerate_stabilizer_states requires n <= 4 (got {n})"
        )
    out = []
    for lag in enumerate_lagrangians(n):
        labels = [WeylLabel.from_vector(row) for row in lag.basis]
        for signs in itertools.product((0, 2), repeat=n):
            gens = tuple(PhasedPauli(lbl, s) for lbl, s in zip(labels, signs))
            out.append(StabilizerTableau(n, gens))
    return tuple(out)


@lru_cache(maxsize=None)
def enumerate_symplectic(n: int) -> tuple[np.ndarray, ...]:
    """All of Sp(2n, F2) by brute force (n <= 2)."""
    if n > 2:
        raise BudgetExceededError(f"enumerate_symplectic requires n <= 2 (got {n})")
    two_n = 2 * n
    J = gf2.symplectic_form_matrix(two_n).astype(np.int64)
    count = 1 << (two_n * two_n)
    bits = ((np.arange(count)[:, None] >> np.arange(two_n * two_n)[None, :]) & 1).astype(
        np.int64
    )
    mats = bits.reshape(count, two_n, two_n)
    stjs = np.einsum("nji,jk,nkl->nil", mats, J, mats) % 2
    good = np.all(stjs == J[None, :, :], axis=(1, 2))
    out = []
    for m in mats[good]:
        arr = m.astype(np.uint8)
        arr.setflags(write=False)
        out.append(arr)
    return tuple(out)


def enumerate_cliffords(n: int):
    """Iterate over the projective Clifford group (n <= 2)."""
    if n > 2:
        raise BudgetExceededError(f"enumerate_cliffords requires n <= 2 (got {n})")
    for S in enumerate_symplectic(n):
        for bits in itertools.product((0, 1), repeat=2 * n):
            yield CliffordElement(n, S, np.array(bits, dtype=np.uint8))


@lru_cache(maxsize=None)
def clifford_matrix_bank(n: int) -> np.ndarray:
    """Stack of dense representatives of all projective Cl(n), n <= 2.

    For each symplectic S one representative C0 is synthesized and the
    2^(2n) sign classes are obtained as P_w C0, which is both faster than
    re-synthesis and exhaustive over phase-bit classes.
    """
    if n > 2:
        raise BudgetExceededError(f"clifford_matrix_bank requires n <= 2 (got {n})")
    dim = 2 ** n
    mats = []
    zeros = np.zeros(2 * n, dtype=np.uint8)
    for S in enumerate_symplectic(n):
        c0 = clifford_matrix(CliffordElement(n, S, zeros))
        for idx in range(4 ** n):
            w = weyl_matrix(WeylLabel.from_index(n, idx))
            mats.append(w @ c0)
    return np.array(mats).reshape(len(mats), dim, dim)
