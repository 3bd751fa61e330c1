"""Exact integer and prime-field linear algebra.

Integer matrices are numpy arrays of dtype ``object`` holding Python ints, so
every entry is arbitrary precision. Prime-field work reduces to ``int64``
arrays with entries in ``0..p-1``.
"""

import logging
import time
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import factorint, isprime

from .errors import ContractViolation, InputError

LOGGER = logging.getLogger(__name__)

IntMatrix = np.ndarray
Vector = List[int]


# ========== Matrix Construction ==========


def int_matrix(data: Iterable[Iterable[int]], rows: Optional[int] = None, cols: Optional[int] = None) -> IntMatrix:
    """Build an exact integer matrix from nested rows.

    Args:
        data: Row-major entries.
        rows: Row count, required when ``data`` is empty.
        cols: Column count, required when there are no rows to infer it from.

    Returns:
        A ``rows x cols`` object array of Python ints.
    """
    materialized = [[int(v) for v in row] for row in data]
    if rows is None:
        rows = len(materialized)
    if cols is None:
        cols = len(materialized[0]) if materialized else 0
    out = zeros(rows, cols)
    for i, row in enumerate(materialized):
        if len(row) != cols:
            raise InputError(f"row {i} has {len(row)} entries, expected {cols}")
        for j, v in enumerate(row):
            out[i, j] = v
    return out


def zeros(rows: int, cols: int) -> IntMatrix:
    out = np.empty((rows, cols), dtype=object)
    out.fill(0)
    return out


def identity(n: int) -> IntMatrix:
    out = zeros(n, n)
    for i in range(n):
        out[i, i] = 1
    return out


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact product that also handles empty inner or outer dimensions."""
    if a.shape[1] != b.shape[0]:
        raise InputError(f"cannot multiply {a.shape} by {b.shape}")
    if 0 in (a.shape[0], a.shape[1], b.shape[1]):
        return zeros(a.shape[0], b.shape[1])
    return np.dot(a, b)


def matvec(a: IntMatrix, v: Sequence[int]) -> Vector:
    if a.shape[1] != len(v):
        raise InputError(f"cannot apply {a.shape} matrix to vector of length {len(v)}")
    col = zeros(len(v), 1)
    for i, x in enumerate(v):
        col[i, 0] = int(x)
    return [int(x) for x in matmul(a, col)[:, 0]]


def is_zero(a: IntMatrix) -> bool:
    return not any(v != 0 for v in a.flat)


def first_nonzero_column(a: IntMatrix) -> Optional[int]:
    """Index of the first column with a nonzero entry, or None."""
    for j in range(a.shape[1]):
        if any(v != 0 for v in a[:, j]):
            return j
    return None


def check_prime(modulus: Optional[int]) -> None:
    if modulus is not None and not isprime(modulus):
        raise InputError(f"modulus must be prime, got {modulus}")


# ========== Smith Normal Form ==========


@dataclass(frozen=True)
class SNFResult:
    """U·M·V = D with D diagonal and d₁ | d₂ | ⋯.

    Attributes:
        diagonal: The min(rows, cols) diagonal entries of D, all non-negative.
        U: Unimodular row transform.
        V: Unimodular column transform.
    """

    diagonal: Tuple[int, ...]
    U: IntMatrix
    V: IntMatrix

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def invariant_factors(self) -> Tuple[int, ...]:
        return tuple(d for d in self.diagonal if d != 0)

    def D(self) -> IntMatrix:
        out = zeros(self.U.shape[0], self.V.shape[0])
        for i, d in enumerate(self.diagonal):
            out[i, i] = d
        return out


def _pivot(a: IntMatrix, t: int) -> Optional[Tuple[int, int]]:
    """Position of the minimal nonzero |entry| in a[t:, t:], ties by (row, col)."""
    sub = a[t:, t:]
    rows, cols = np.nonzero(sub != 0)
    if rows.size == 0:
        return None
    values = np.abs(sub[rows, cols]).tolist()
    _, i, j = min(zip(values, rows.tolist(), cols.tolist()))
    return t + i, t + j


def smith_normal_form(matrix: IntMatrix) -> SNFResult:
    """Smith normal form with unimodular transforms.

    Each step moves the smallest nonzero entry of the trailing block to the
    diagonal, clears its row and column by floor division, and restarts with a
    smaller pivot whenever a remainder survives. If the pivot fails to divide
    some trailing entry, that entry's row is added to the pivot row.

    Args:
        matrix: Integer matrix (any shape, possibly empty).

    Returns:
        SNFResult with U·M·V = D re-verified exactly.

    Raises:
        ContractViolation: If the re-verification fails.
    """
    start = time.perf_counter()
    a = np.array(matrix, dtype=object).reshape(matrix.shape)
    m, n = a.shape
    U = identity(m)
    V = identity(n)

    t = 0
    while t < min(m, n):
        pos = _pivot(a, t)
        if pos is None:
            break
        while True:
            i, j = pos
            if i != t:
                a[[t, i], :] = a[[i, t], :]
                U[[t, i], :] = U[[i, t], :]
            if j != t:
                a[:, [t, j]] = a[:, [j, t]]
                V[:, [t, j]] = V[:, [j, t]]
            p = a[t, t]

            remainder = False
            for r in range(t + 1, m):
                if a[r, t] != 0:
                    q = a[r, t] // p
                    a[r, :] = a[r, :] - q * a[t, :]
                    U[r, :] = U[r, :] - q * U[t, :]
                    remainder = remainder or a[r, t] != 0
            for c in range(t + 1, n):
                if a[t, c] != 0:
                    q = a[t, c] // p
                    a[:, c] = a[:, c] - q * a[:, t]
                    V[:, c] = V[:, c] - q * V[:, t]
                    remainder = remainder or a[t, c] != 0
            if remainder:
                pos = _pivot(a, t)
                continue

            offenders = np.nonzero(np.mod(a[t + 1:, t + 1:], p) != 0)[0]
            if offenders.size == 0:
                break
            offender = t + 1 + int(offenders[0])
            a[t, :] = a[t, :] + a[offender, :]
            U[t, :] = U[t, :] + U[offender, :]
            pos = (t, t)

        if a[t, t] < 0:
            a[t, :] = -a[t, :]
            U[t, :] = -U[t, :]
        t += 1

    result = SNFResult(diagonal=tuple(int(a[k, k]) for k in range(min(m, n))), U=U, V=V)
    if not np.array_equal(matmul(matmul(U, matrix), V), result.D()):
        raise ContractViolation("U·M·V does not reproduce D", witness=matrix.shape)
    LOGGER.debug("SNF of %dx%d matrix, rank %d, %.3fs", m, n, result.rank, time.perf_counter() - start)
    return result


def kernel_basis(matrix: IntMatrix, modulus: Optional[int] = None) -> List[Vector]:
    """A basis of {x : Mx = 0} over ℤ (saturated lattice basis) or over F_p."""
    if modulus is not None:
        return nullspace_mod_p(matrix, modulus)
    snf = smith_normal_form(matrix)
    return [[int(v) for v in snf.V[:, j]] for j in range(snf.rank, matrix.shape[1])]


def solve_integral(matrix: IntMatrix, b: Sequence[int]) -> Optional[Vector]:
    """Return an integer x with Mx = b, or None when b is not in the image.

    Raises:
        InputError: If ``len(b)`` differs from the number of rows.
    """
    if len(b) != matrix.shape[0]:
        raise InputError(f"right-hand side has length {len(b)}, matrix has {matrix.shape[0]} rows")
    snf = smith_normal_form(matrix)
    c = matvec(snf.U, b)
    y = [0] * matrix.shape[1]
    for i, ci in enumerate(c):
        d = snf.diagonal[i] if i < len(snf.diagonal) else 0
        if d == 0:
            if ci != 0:
                return None
        elif ci % d != 0:
            return None
        else:
            y[i] = ci // d
    x = matvec(snf.V, y)
    if matvec(matrix, x) != [int(v) for v in b]:
        raise ContractViolation("integral solution does not satisfy Mx = b", witness=list(b))
    return x


# ========== Rank ==========


def _rank_bareiss(matrix: IntMatrix) -> int:
    """Rank over ℚ by fraction-free (Bareiss) elimination."""
    a = [[int(v) for v in row] for row in matrix.tolist()]
    m, n = matrix.shape
    rank = 0
    prev = 1
    for col in range(n):
        if rank == m:
            break
        pr = next((r for r in range(rank, m) if a[r][col] != 0), None)
        if pr is None:
            continue
        a[rank], a[pr] = a[pr], a[rank]
        piv = a[rank][col]
        for r in range(rank + 1, m):
            for c in range(col + 1, n):
                a[r][c] = (a[r][c] * piv - a[r][col] * a[rank][c]) // prev
            a[r][col] = 0
        prev = piv
        rank += 1
    return rank


def rank(matrix: IntMatrix, modulus: Optional[int] = None) -> int:
    """Rank over ℚ, or over F_p when ``modulus`` is given.

    Raises:
        InputError: If ``modulus`` is not prime.
    """
    check_prime(modulus)
    if modulus is None:
        return _rank_bareiss(matrix)
    _, pivots = rref_mod_p(matrix, modulus)
    return len(pivots)


# ========== Prime Field ==========


def reduce_mod_p(matrix: IntMatrix, p: int) -> np.ndarray:
    m, n = matrix.shape
    out = np.zeros((m, n), dtype=np.int64)
    for i in range(m):
        for j in range(n):
            out[i, j] = int(matrix[i, j]) % p
    return out


def rref_mod_p(matrix: IntMatrix, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form over F_p and its pivot columns."""
    check_prime(p)
    a = reduce_mod_p(matrix, p)
    m, n = a.shape
    pivots: List[int] = []
    r = 0
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr], :] = a[[pr, r], :]
        a[r, :] = (a[r, :] * pow(int(a[r, c]), -1, p)) % p
        factors = a[:, c].copy()
        factors[r] = 0
        a = (a - np.outer(factors, a[r, :])) % p
        pivots.append(c)
        r += 1
    return a, pivots


def nullspace_mod_p(matrix: IntMatrix, p: int) -> List[Vector]:
    a, pivots = rref_mod_p(matrix, p)
    n = matrix.shape[1]
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for k, pc in enumerate(pivots):
            v[pc] = int(-a[k, f]) % p
        basis.append(v)
    return basis


def solve_mod_p(matrix: IntMatrix, b: Sequence[int], p: int) -> Optional[Vector]:
    """Return x with Mx ≡ b (mod p), or None."""
    if len(b) != matrix.shape[0]:
        raise InputError(f"right-hand side has length {len(b)}, matrix has {matrix.shape[0]} rows")
    m, n = matrix.shape
    augmented = zeros(m, n + 1)
    augmented[:, :n] = matrix
    for i, v in enumerate(b):
        augmented[i, n] = int(v)
    a, pivots = rref_mod_p(augmented, p)
    if n in pivots:
        return None
    x = [0] * n
    for k, pc in enumerate(pivots):
        x[pc] = int(a[k, n])
    return x


def extend_to_basis_mod_p(independent: List[Vector], candidates: Iterable[Vector], p: int) -> List[Vector]:
    """Greedily append candidates that raise the rank over F_p.

    Returns:
        The appended vectors only (``independent`` is left as given).
    """
    current = [list(v) for v in independent]
    current_rank = rank(int_matrix(current), p) if current else 0
    added = []
    for v in candidates:
        if current and current_rank == len(current[0]):
            break
        trial = current + [list(v)]
        r = rank(int_matrix(trial), p)
        if r > current_rank:
            current, current_rank = trial, r
            added.append(list(v))
    return added


# ========== Homology ==========


@dataclass(frozen=True)
class HomologyGroup:
    """ℤ^free_rank ⊕ ℤ/t₁ ⊕ ⋯ with t₁ | t₂ | ⋯ (empty torsion over a field)."""

    free_rank: int
    torsion: Tuple[int, ...] = ()

    def elementary_divisors(self) -> Tuple[int, ...]:
        """Prime powers of the torsion part, sorted."""
        powers = []
        for t in self.torsion:
            for prime, exp in factorint(t).items():
                powers.append(prime**exp)
        return tuple(sorted(powers))

    @classmethod
    def from_elementary_divisors(cls, free_rank: int, powers: Iterable[int]) -> "HomologyGroup":
        by_prime = {}
        for q in powers:
            (prime, exp), = factorint(q).items()
            by_prime.setdefault(prime, []).append(prime**exp)
        for qs in by_prime.values():
            qs.sort(reverse=True)
        factors = []
        while any(by_prime.values()):
            f = 1
            for qs in by_prime.values():
                if qs:
                    f *= qs.pop(0)
            factors.append(f)
        return cls(free_rank, tuple(sorted(factors)))

    def direct_sum(self, other: "HomologyGroup") -> "HomologyGroup":
        return HomologyGroup.from_elementary_divisors(
            self.free_rank + other.free_rank,
            self.elementary_divisors() + other.elementary_divisors(),
        )

    def to_json(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def __str__(self) -> str:
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"


def homology_of_pair(
    boundary_out: IntMatrix,
    boundary_in: IntMatrix,
    modulus: Optional[int] = None,
) -> HomologyGroup:
    """Ker(boundary_out) / Im(boundary_in).

    Args:
        boundary_out: Matrix of C_n → C_{n−1} (columns indexed by C_n).
        boundary_in: Matrix of C_{n+1} → C_n.
        modulus: Prime p to compute over F_p instead of ℤ.

    Returns:
        The homology group; over F_p only ``free_rank`` (the dimension) is set.

    Raises:
        InputError: On incompatible shapes or a composite modulus.
        ContractViolation: If boundary_out · boundary_in ≠ 0; the witness is
            the index of the first basis vector of C_{n+1} not sent to zero.
    """
    check_prime(modulus)
    if boundary_out.shape[1] != boundary_in.shape[0]:
        raise InputError(
            f"boundary maps do not compose: {boundary_out.shape} after {boundary_in.shape}"
        )
    composite = matmul(boundary_out, boundary_in)
    if modulus is not None:
        composite = reduce_mod_p(composite, modulus)
    witness = first_nonzero_column(composite)
    if witness is not None:
        raise ContractViolation(
            f"boundary composite is nonzero on basis vector {witness}", witness=witness
        )

    dim = boundary_out.shape[1]
    if modulus is not None:
        free = dim - rank(boundary_out, modulus) - rank(boundary_in, modulus)
        return HomologyGroup(free)

    snf_in = smith_normal_form(boundary_in)
    rank_out = smith_normal_form(boundary_out).rank
    torsion = tuple(d for d in snf_in.invariant_factors if d > 1)
    return HomologyGroup(dim - rank_out - snf_in.rank, torsion)
