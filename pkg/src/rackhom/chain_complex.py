"""Rack chain and cochain complexes C_n(X, R): faces, boundaries, (co)homology."""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Mapping, NamedTuple, Optional, Sequence, Tuple

from .config import MAX_BASIS_SIZE, MAX_DEGREE
from .errors import InputError, ResourceLimitExceeded
from .exactlin import (
    HomologyGroup,
    IntMatrix,
    check_prime,
    homology_of_pair,
    kernel_basis,
    zeros,
)
from .shelf import CoefficientSystem, FiniteShelf

LOGGER = logging.getLogger(__name__)

Word = Tuple[int, ...]


class ChainBasisElement(NamedTuple):
    """Basis element r·x₁⋯xₙ; ``coeff_index`` is 0 for trivial coefficients."""

    coeff_index: int
    word: Word

    @property
    def degree(self) -> int:
        return len(self.word)


@dataclass(frozen=True)
class Chain:
    """Sparse integer combination of basis elements of one degree."""

    degree: int
    terms: Mapping[ChainBasisElement, int] = field(default_factory=dict)

    @classmethod
    def from_pairs(cls, degree: int, pairs: Iterable[Tuple[ChainBasisElement, int]]) -> "Chain":
        acc: Dict[ChainBasisElement, int] = {}
        for b, c in pairs:
            if b.degree != degree:
                raise InputError(f"basis element {b} does not have degree {degree}")
            acc[b] = acc.get(b, 0) + c
        return cls(degree, {b: c for b, c in sorted(acc.items()) if c != 0})

    def __add__(self, other: "Chain") -> "Chain":
        return Chain.from_pairs(self.degree, itertools.chain(self.terms.items(), other.terms.items()))

    def __neg__(self) -> "Chain":
        return Chain(self.degree, {b: -c for b, c in self.terms.items()})

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def is_zero(self) -> bool:
        return not self.terms


# ========== Faces ==========


def face_word(shelf: FiniteShelf, side: int, i: int, word: Sequence[int]) -> Word:
    """δᵢ^side on a bare tuple (trivial coefficients)."""
    n = len(word)
    if not 1 <= i <= n:
        raise InputError(f"face index {i} out of range 1..{n}")
    if side == 0:
        return tuple(word[: i - 1]) + tuple(word[i:])
    if side == 1:
        xi = word[i - 1]
        return tuple(shelf.op(x, xi) for x in word[: i - 1]) + tuple(word[i:])
    raise InputError(f"face side must be 0 or 1, got {side}")


def multi_face_word(shelf: FiniteShelf, side: int, positions: Iterable[int], word: Sequence[int]) -> Word:
    """δ_S^side: delete every position of S, largest first."""
    out = tuple(word)
    for i in sorted(positions, reverse=True):
        out = face_word(shelf, side, i, out)
    return out


def face(
    shelf: FiniteShelf,
    coeff: CoefficientSystem,
    side: int,
    i: int,
    b: ChainBasisElement,
) -> ChainBasisElement:
    """δᵢ^side on r·x₁⋯xₙ; side 1 also moves r to r◀xᵢ.

    Raises:
        InputError: If ``i`` is outside 1..n or side is not 0/1.
    """
    word = face_word(shelf, side, i, b.word)
    if side == 0:
        return ChainBasisElement(b.coeff_index, word)
    return ChainBasisElement(coeff.act(b.coeff_index, b.word[i - 1]), word)


# ========== Bases ==========


def basis_size(shelf: FiniteShelf, coeff: CoefficientSystem, n: int) -> int:
    return coeff.size * shelf.size**n


def _check_size(shelf: FiniteShelf, coeff: CoefficientSystem, n: int) -> None:
    size = basis_size(shelf, coeff, n)
    if size > MAX_BASIS_SIZE:
        raise ResourceLimitExceeded(
            f"C_{n} has {size} basis elements, above the cap of {MAX_BASIS_SIZE}", dimension=size
        )


def iter_basis(shelf: FiniteShelf, coeff: CoefficientSystem, n: int) -> Iterator[ChainBasisElement]:
    """Lazy basis of C_n in lexicographic order, without the size cap."""
    if n < 0:
        raise InputError(f"degree must be non-negative, got {n}")
    for r in range(coeff.size):
        for word in itertools.product(range(shelf.size), repeat=n):
            yield ChainBasisElement(r, word)


def basis(shelf: FiniteShelf, coeff: CoefficientSystem, n: int) -> List[ChainBasisElement]:
    """Basis of C_n in lexicographic order on (coeff_index, word)."""
    if n < 0:
        raise InputError(f"degree must be non-negative, got {n}")
    _check_size(shelf, coeff, n)
    return list(iter_basis(shelf, coeff, n))


def basis_index(shelf: FiniteShelf, coeff: CoefficientSystem, b: ChainBasisElement) -> int:
    """Position of ``b`` in :func:`basis` (mixed radix)."""
    index = b.coeff_index
    for x in b.word:
        index = index * shelf.size + x
    return index


# ========== Boundary ==========


def basis_boundary(shelf: FiniteShelf, coeff: CoefficientSystem, b: ChainBasisElement) -> Chain:
    """∂ = Σᵢ (−1)^{i−1} (δᵢ⁰ − δᵢ¹) on one basis element."""
    pairs = []
    for i in range(1, b.degree + 1):
        sign = 1 if i % 2 == 1 else -1
        pairs.append((face(shelf, coeff, 0, i, b), sign))
        pairs.append((face(shelf, coeff, 1, i, b), -sign))
    return Chain.from_pairs(max(b.degree - 1, 0), pairs)


def chain_boundary(shelf: FiniteShelf, coeff: CoefficientSystem, chain: Chain) -> Chain:
    pairs = []
    for b, c in chain.terms.items():
        pairs.extend((t, c * v) for t, v in basis_boundary(shelf, coeff, b).terms.items())
    return Chain.from_pairs(max(chain.degree - 1, 0), pairs)


def boundary(shelf: FiniteShelf, coeff: CoefficientSystem, n: int) -> IntMatrix:
    """Matrix of ∂_n : C_n → C_{n−1}, columns in basis order.

    For n = 0 this is the zero map onto the zero group (shape 0 x dim C_0).
    """
    if n == 0:
        return zeros(0, basis_size(shelf, coeff, 0))
    _check_size(shelf, coeff, n)
    rows = basis_size(shelf, coeff, n - 1)
    columns = basis(shelf, coeff, n)
    out = zeros(rows, len(columns))
    for j, b in enumerate(columns):
        for t, c in basis_boundary(shelf, coeff, b).terms.items():
            out[basis_index(shelf, coeff, t), j] += c
    LOGGER.debug("boundary matrix d_%d: %dx%d", n, rows, len(columns))
    return out


def homology_table(
    shelf: FiniteShelf,
    coeff: CoefficientSystem,
    max_n: int,
    dual: bool = False,
    modulus: Optional[int] = None,
) -> List[HomologyGroup]:
    """H_n (or H^n when ``dual``) for 0 ≤ n ≤ max_n.

    Cohomology is the homology of the transposed boundary matrices.

    Args:
        shelf: The shelf.
        coeff: Coefficient system; its modulus applies when ``modulus`` is None.
        max_n: Highest degree.
        dual: Compute rack cohomology instead of homology.
        modulus: Prime p for F_p coefficients.

    Raises:
        ResourceLimitExceeded: If some C_n needed exceeds the basis cap.
    """
    if max_n < 0:
        raise InputError(f"max_n must be non-negative, got {max_n}")
    if max_n > MAX_DEGREE:
        raise ResourceLimitExceeded(f"degree {max_n} is above the cap of {MAX_DEGREE}", dimension=max_n)
    modulus = modulus if modulus is not None else coeff.modulus
    check_prime(modulus)
    mats = [boundary(shelf, coeff, n) for n in range(max_n + 2)]
    groups = []
    for n in range(max_n + 1):
        if dual:
            groups.append(homology_of_pair(mats[n + 1].T, mats[n].T, modulus))
        else:
            groups.append(homology_of_pair(mats[n], mats[n + 1], modulus))
    LOGGER.info("%s table up to degree %d: %s", "cohomology" if dual else "homology", max_n, [str(g) for g in groups])
    return groups


def cocycle_basis(
    shelf: FiniteShelf,
    coeff: CoefficientSystem,
    n: int,
    modulus: Optional[int] = None,
) -> List[Dict[ChainBasisElement, int]]:
    """Basis of Ker(∂*: Cⁿ → Cⁿ⁺¹) as value tables on the basis of C_n.

    :mod:`rackhom.products` wraps these tables into cochains.
    """
    if n < 1:
        raise InputError(f"cocycle degree must be at least 1, got {n}")
    modulus = modulus if modulus is not None else coeff.modulus
    check_prime(modulus)
    d_next = boundary(shelf, coeff, n + 1)
    cells = basis(shelf, coeff, n)
    vectors = kernel_basis(d_next.T, modulus)
    return [{b: v for b, v in zip(cells, vec)} for vec in vectors]
