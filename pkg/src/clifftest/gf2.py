"""
Exact linear algebra over F2.

Vectors are 1-D numpy uint8 arrays with entries in {0, 1}; matrices are
2-D uint8 arrays.  Subspaces are stored via a canonical reduced
row-echelon basis, so equality and hashing of subspaces are structural.

Symplectic convention: a vector x of even length 2n is read as the
block pair x = (a | b) with a, b in F2^n, and the symplectic inner
product is [x, y] = a.b' + a'.b (mod 2).  This (a | b) block order is
used everywhere in the package.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import BudgetExceededError

# Desk-scale enumeration guards.
MAX_ELEMENT_DIM = 24
MAX_SUBSPACE_AMBIENT = 10


def as_bits(v) -> np.ndarray:
    """Coerce a sequence to a 1-D uint8 vector with entries reduced mod 2."""
    arr = np.asarray(v, dtype=np.int64) % 2
    if arr.ndim != 1:
        raise ValueError(f"expected a 1-D vector, got shape {arr.shape}")
    return arr.astype(np.uint8)


def as_bitmatrix(m) -> np.ndarray:
    """Coerce a nested sequence to a 2-D uint8 matrix reduced mod 2."""
    arr = np.asarray(m, dtype=np.int64) % 2
    if arr.ndim == 1:
        arr = arr.reshape(1, -1)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {arr.shape}")
    return arr.astype(np.uint8)


def mat2mul(a, b) -> np.ndarray:
    """Matrix product over F2."""
    prod = np.asarray(a, dtype=np.int64) @ np.asarray(b, dtype=np.int64)
    return (prod % 2).astype(np.uint8)


def rref(m) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form over F2.

    Returns:
        (R, pivot_cols): R is the canonical RREF with zero rows dropped;
        pivot_cols lists the pivot column indices (length = rank).
    """
    R = as_bitmatrix(m).copy()
    rows, cols = R.shape
    pivot_cols: list[int] = []
    pivot_row = 0
    for col in range(cols):
        found = -1
        for row in range(pivot_row, rows):
            if R[row, col]:
                found = row
                break
        if found == -1:
            continue
        if found != pivot_row:
            R[[pivot_row, found]] = R[[found, pivot_row]]
        # Eliminate everywhere else in this column (reduced form).
        for row in range(rows):
            if row != pivot_row and R[row, col]:
                R[row] ^= R[pivot_row]
        pivot_cols.append(col)
        pivot_row += 1
    return R[:pivot_row].copy(), pivot_cols


def rank(m) -> int:
    """F2 row rank."""
    _, pivots = rref(m)
    return len(pivots)


@dataclass(frozen=True)
class Subspace:
    """A subspace of F2^ambient_dim with a canonical RREF basis.

    Because the basis is the unique RREF of the row space, two Subspace
    values are equal iff they describe the same subspace, and hashing
    is structural.
    """

    ambient_dim: int
    basis: np.ndarray = field(compare=False)  # RREF, shape (dim, ambient_dim)

    def __post_init__(self):
        object.__setattr__(self, "basis", as_bitmatrix(self.basis))
        if self.basis.shape[1] != self.ambient_dim:
            raise ValueError("basis width does not match ambient dimension")
        self.basis.setflags(write=False)

    @classmethod
    def from_vectors(cls, vectors, ambient_dim: int | None = None) -> "Subspace":
        """Span of a (possibly dependent, possibly empty) list of vectors."""
        if ambient_dim is None:
            m = as_bitmatrix(vectors)
            ambient_dim = m.shape[1]
        else:
            m = (
                np.zeros((0, ambient_dim), dtype=np.uint8)
                if len(vectors) == 0
                else as_bitmatrix(vectors)
            )
        R, _ = rref(m)
        return cls(ambient_dim, R)

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, np.zeros((0, ambient_dim), dtype=np.uint8))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, np.eye(ambient_dim, dtype=np.uint8))

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def contains(self, v) -> bool:
        v = as_bits(v)
        if v.shape[0] != self.ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
        stacked = np.vstack([self.basis, v[None, :]])
        return rank(stacked) == self.dim

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.basis.shape == other.basis.shape
            and bool(np.all(self.basis == other.basis))
        )

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.basis.tobytes()))


def kernel(m) -> Subspace:
    """Right null space {x : m x = 0} as a Subspace of F2^cols."""
    m = as_bitmatrix(m)
    _, cols = m.shape
    R, pivots = rref(m)
    free_cols = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free_cols), cols), dtype=np.uint8)
    for i, fc in enumerate(free_cols):
        basis[i, fc] = 1
        for row, pc in enumerate(pivots):
            basis[i, pc] = R[row, fc]
    return Subspace.from_vectors(basis, cols)


def solve(m, b) -> np.ndarray | None:
    """One solution x of m x = b over F2, or None if inconsistent."""
    m = as_bitmatrix(m)
    b = as_bits(b)
    if m.shape[0] != b.shape[0]:
        raise ValueError("right-hand side length does not match row count")
    aug = np.hstack([m, b[:, None]])
    R, pivots = rref(aug)
    if m.shape[1] in pivots:
        return None  # pivot in the augmented column
    x = np.zeros(m.shape[1], dtype=np.uint8)
    for row, pc in enumerate(pivots):
        x[pc] = R[row, -1]
    return x


def standard_inner(x, y) -> int:
    """Sum x_i y_i mod 2."""
    x, y = as_bits(x), as_bits(y)
    if x.shape != y.shape:
        raise ValueError("length mismatch in inner product")
    return int(np.bitwise_and(x, y).sum() % 2)


def symplectic_form_matrix(two_n: int) -> np.ndarray:
    """The Gram matrix J of the symplectic form in (a | b) block order."""
    if two_n % 2:
        raise ValueError("symplectic form needs even dimension")
    n = two_n // 2
    J = np.zeros((two_n, two_n), dtype=np.uint8)
    J[:n, n:] = np.eye(n, dtype=np.uint8)
    J[n:, :n] = np.eye(n, dtype=np.uint8)
    return J


def symplectic_inner(x, y) -> int:
    """[x, y] = a.b' + a'.b mod 2 for x = (a|b), y = (a'|b')."""
    x, y = as_bits(x), as_bits(y)
    if x.shape != y.shape:
        raise ValueError("length mismatch in symplectic inner product")
    if x.shape[0] % 2:
        raise ValueError("symplectic inner product needs even length")
    n = x.shape[0] // 2
    return int((int(np.bitwise_and(x[:n], y[n:]).sum()) + int(np.bitwise_and(x[n:], y[:n]).sum())) % 2)


def dual_under(V: Subspace, gram) -> Subspace:
    """Dual {x : v^T gram x = 0 for all v in V} under a bilinear form."""
    gram = as_bitmatrix(gram)
    if V.dim == 0:
        return Subspace.full(V.ambient_dim)
    return kernel(mat2mul(V.basis, gram))


def dual(V: Subspace, form: str = "standard") -> Subspace:
    """Dual subspace under the standard or symplectic inner product."""
    if form == "standard":
        gram = np.eye(V.ambient_dim, dtype=np.uint8)
    elif form == "symplectic":
        gram = symplectic_form_matrix(V.ambient_dim)
    else:
        raise ValueError(f"unknown form {form!r}")
    return dual_under(V, gram)


def is_isotropic(V: Subspace) -> bool:
    """All pairwise symplectic inner products among basis vectors vanish."""
    if V.ambient_dim % 2:
        raise ValueError("isotropy is defined for even ambient dimension")
    J = symplectic_form_matrix(V.ambient_dim)
    prods = mat2mul(mat2mul(V.basis, J), V.basis.T)
    return not prods.any()


def is_lagrangian(V: Subspace) -> bool:
    """Isotropic of the maximal dimension n = ambient_dim / 2."""
    return is_isotropic(V) and V.dim == V.ambient_dim // 2


def enumerate_elements(V: Subspace) -> list[np.ndarray]:
    """All 2^dim elements of the subspace (including 0)."""
    if V.dim > MAX_ELEMENT_DIM:
        raise BudgetExceededError(
            f"enumerate_elements requires dim <= {MAX_ELEMENT_DIM} (got {V.dim})"
        )
    out = []
    for coeffs in itertools.product((0, 1), repeat=V.dim):
        v = np.zeros(V.ambient_dim, dtype=np.uint8)
        for c, row in zip(coeffs, V.basis):
            if c:
                v ^= row
        out.append(v)
    return out


def enumerate_subspaces(ambient_dim: int, dim: int):
    """Yield every dim-dimensional subspace of F2^ambient_dim exactly once.

    Enumerates canonical RREF matrices directly: choose pivot columns,
    then fill the free entries (non-pivot columns to the right of each
    pivot) in all possible ways.
    """
    if ambient_dim > MAX_SUBSPACE_AMBIENT:
        raise BudgetExceededError(
            f"enumerate_subspaces requires ambient <= {MAX_SUBSPACE_AMBIENT}"
            f" (got {ambient_dim})"
        )
    if dim < 0 or dim > ambient_dim:
        return
    if dim == 0:
        yield Subspace.zero(ambient_dim)
        return
    for pivots in itertools.combinations(range(ambient_dim), dim):
        free_slots = [
            (i, j)
            for i in range(dim)
            for j in range(ambient_dim)
            if j > pivots[i] and j not in pivots
        ]
        for bits in itertools.product((0, 1), repeat=len(free_slots)):
            basis = np.zeros((dim, ambient_dim), dtype=np.uint8)
            for i, p in enumerate(pivots):
                basis[i, p] = 1
            for (i, j), bit in zip(free_slots, bits):
                basis[i, j] = bit
            yield Subspace(ambient_dim, basis)


def intersect(V: Subspace, W: Subspace) -> Subspace:
    """Intersection of two subspaces of the same ambient space."""
    if V.ambient_dim != W.ambient_dim:
        raise ValueError("ambient dimension mismatch in intersection")
    constraints = np.vstack([dual(V).basis, dual(W).basis])
    if constraints.shape[0] == 0:
        return Subspace.full(V.ambient_dim)
    return kernel(constraints)


def subspace_sum(V: Subspace, W: Subspace) -> Subspace:
    """Sum (span of the union) of two subspaces."""
    if V.ambient_dim != W.ambient_dim:
        raise ValueError("ambient dimension mismatch in sum")
    return Subspace.from_vectors(np.vstack([V.basis, W.basis]), V.ambient_dim)


def gaussian_binomial(m: int, k: int) -> int:
    """Number of k-dimensional subspaces of F2^m."""
    if k < 0 or k > m:
        return 0
    num = den = 1
    for i in range(k):
        num *= 2 ** (m - i) - 1
        den *= 2 ** (k - i) - 1
    return num // den


# ---------------------------------------------------------------------------
# Integer-packed helpers for enumeration-heavy callers.  Rows are Python
# ints with bit i of the row in position (ncols - 1 - i), i.e. leftmost
# coordinate = most significant bit, so lexicographic comparisons match
# the array order.

def pack_rows(m) -> list[int]:
    m = as_bitmatrix(m)
    ncols = m.shape[1]
    return [int("".join("1" if b else "0" for b in row), 2) if ncols else 0 for row in m]


def unpack_rows(rows, ncols: int) -> np.ndarray:
    out = np.zeros((len(rows), ncols), dtype=np.uint8)
    for i, r in enumerate(rows):
        for j in range(ncols):
            out[i, ncols - 1 - j] = (r >> j) & 1
    return out


def rref_ints(rows, ncols: int) -> tuple[int, ...]:
    """Canonical RREF of integer-packed rows; zero rows dropped."""
    basis: list[int] = []
    for r in rows:
        for b in basis:
            r = min(r, r ^ b)
        if r:
            basis.append(r)
            basis.sort(reverse=True)
    # Back-substitute to the reduced form.
    for i in range(len(basis)):
        lead = 1 << basis[i].bit_length() - 1
        for j in range(len(basis)):
            if j != i and basis[j] & lead:
                basis[j] ^= basis[i]
    basis.sort(reverse=True)
    return tuple(basis)
