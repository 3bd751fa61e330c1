"""Cochain-level algebra: coboundary, cup and half-cup products, homotopy
witnesses, the A(X)-action, coboundary membership, and the induced coproduct
on homology with field coefficients.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Literal, Optional, Sequence, Tuple

import numpy as np

from .bialgebra import (
    HBAR_SIGN,
    BarTensor,
    coproduct_word,
    dendri_word,
    homotopy_h_word,
    homotopy_hbar_word,
)
from .chain_complex import (
    ChainBasisElement,
    basis,
    basis_index,
    basis_size,
    boundary,
    cocycle_basis,
)
from .config import RANDOM_STATE, RANDOM_VALUE_BOUND
from .errors import ContractViolation, InputError, UnsupportedOperation
from .exactlin import (
    check_prime,
    extend_to_basis_mod_p,
    int_matrix,
    kernel_basis,
    matvec,
    rref_mod_p,
    solve_integral,
    solve_mod_p,
)
from .shelf import CoefficientSystem, FiniteShelf

LOGGER = logging.getLogger(__name__)

Word = Tuple[int, ...]

# f⌣g − (−1)^{|f||g|} g⌣f = COMMUTATIVITY_SIGN · d*(witness(f, g, "commutativity"))
COMMUTATIVITY_SIGN = 1
# f⇀g − (−1)^{|f||g|} g↼f = ZINBIEL_SIGN · d*(witness(f, g, "zinbielity"))
ZINBIEL_SIGN = -HBAR_SIGN


@lru_cache(maxsize=None)
def _boundary(shelf: FiniteShelf, coeff: CoefficientSystem, n: int):
    return boundary(shelf, coeff, n)


# ========== Cochains ==========


@dataclass(frozen=True)
class Cochain:
    """Function on coefficient × X^n, stored densely in basis order.

    Values are reduced into 0..p−1 when the coefficient system carries a
    modulus p.
    """

    shelf: FiniteShelf
    coeff: CoefficientSystem
    degree: int
    values: Tuple[int, ...] = field(default=())

    def __post_init__(self):
        expected = basis_size(self.shelf, self.coeff, self.degree)
        if len(self.values) != expected:
            raise InputError(f"degree-{self.degree} cochain needs {expected} values, got {len(self.values)}")
        p = self.coeff.modulus
        if p is not None:
            object.__setattr__(self, "values", tuple(int(v) % p for v in self.values))
        else:
            object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    @classmethod
    def zero(cls, shelf: FiniteShelf, coeff: CoefficientSystem, degree: int) -> "Cochain":
        return cls(shelf, coeff, degree, (0,) * basis_size(shelf, coeff, degree))

    @classmethod
    def from_function(
        cls,
        shelf: FiniteShelf,
        coeff: CoefficientSystem,
        degree: int,
        fn: Callable[[ChainBasisElement], int],
    ) -> "Cochain":
        return cls(shelf, coeff, degree, tuple(fn(b) for b in basis(shelf, coeff, degree)))

    @classmethod
    def from_table(
        cls,
        shelf: FiniteShelf,
        coeff: CoefficientSystem,
        degree: int,
        table: Dict[ChainBasisElement, int],
    ) -> "Cochain":
        return cls.from_function(shelf, coeff, degree, lambda b: table.get(b, 0))

    def __call__(self, word: Sequence[int], coeff_index: int = 0) -> int:
        b = ChainBasisElement(coeff_index, tuple(word))
        if b.degree != self.degree:
            raise InputError(f"cochain of degree {self.degree} evaluated on {tuple(word)}")
        return self.values[basis_index(self.shelf, self.coeff, b)]

    def _combine(self, other: "Cochain", op) -> "Cochain":
        if other.degree != self.degree or other.coeff != self.coeff:
            raise InputError("cochains live in different groups")
        return Cochain(self.shelf, self.coeff, self.degree, tuple(op(a, b) for a, b in zip(self.values, other.values)))

    def __add__(self, other: "Cochain") -> "Cochain":
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self._combine(other, lambda a, b: a - b)

    def __neg__(self) -> "Cochain":
        return Cochain(self.shelf, self.coeff, self.degree, tuple(-v for v in self.values))

    def __rmul__(self, scalar: int) -> "Cochain":
        return Cochain(self.shelf, self.coeff, self.degree, tuple(scalar * v for v in self.values))

    def is_zero(self) -> bool:
        return not any(self.values)

    def evaluate_tensor(self, other: "Cochain", t: BarTensor) -> int:
        """(f⊗g)(t) with the Koszul sign (f⊗g)(a⊗b) = (−1)^{|g||a|} f(a)g(b)."""
        total = 0
        for (a, b), c in t.terms.items():
            if len(a) == self.degree and len(b) == other.degree:
                sign = -1 if (other.degree * len(a)) % 2 else 1
                total += sign * c * self(a) * other(b)
        return total

    def to_json(self) -> Dict[str, object]:
        labels = {}
        for b, v in zip(basis(self.shelf, self.coeff, self.degree), self.values):
            key = ",".join(str(x) for x in b.word)
            if self.coeff.size > 1:
                key = f"{b.coeff_index}|{key}"
            labels[key] = v
        return {"degree": self.degree, "values": labels}


def random_cochain(
    shelf: FiniteShelf,
    coeff: CoefficientSystem,
    degree: int,
    rng: Optional[np.random.Generator] = None,
    bound: int = RANDOM_VALUE_BOUND,
) -> Cochain:
    rng = rng if rng is not None else np.random.default_rng(RANDOM_STATE)
    size = basis_size(shelf, coeff, degree)
    return Cochain(shelf, coeff, degree, tuple(int(v) for v in rng.integers(-bound, bound + 1, size=size)))


def cocycles(shelf: FiniteShelf, coeff: CoefficientSystem, n: int) -> List[Cochain]:
    """Cocycle basis of degree n as cochains (over F_p when ``coeff`` has a modulus)."""
    return [
        Cochain.from_table(shelf, coeff, n, table)
        for table in cocycle_basis(shelf, coeff, n, coeff.modulus)
    ]


def random_cocycle(
    shelf: FiniteShelf,
    coeff: CoefficientSystem,
    n: int,
    rng: Optional[np.random.Generator] = None,
    bound: int = RANDOM_VALUE_BOUND,
) -> Cochain:
    rng = rng if rng is not None else np.random.default_rng(RANDOM_STATE)
    out = Cochain.zero(shelf, coeff, n)
    for z in cocycles(shelf, coeff, n):
        out = out + int(rng.integers(-bound, bound + 1)) * z
    return out


def _require_trivial(coeff: CoefficientSystem, operation: str) -> None:
    if coeff.kind != "trivial":
        raise UnsupportedOperation(f"{operation} needs trivial coefficients, got {coeff.kind}")


def _check_pair(f: Cochain, g: Cochain) -> None:
    if f.shelf != g.shelf or f.coeff != g.coeff:
        raise InputError("cochains are defined over different shelves or coefficients")


# ========== Coboundary ==========


def coboundary(shelf: FiniteShelf, coeff: CoefficientSystem, f: Cochain) -> Cochain:
    """d*f = (−1)^{|f|} f∘∂, of degree |f| + 1."""
    n = f.degree
    sign = -1 if n % 2 else 1
    values = matvec(_boundary(shelf, coeff, n + 1).T, f.values)
    return Cochain(shelf, coeff, n + 1, tuple(sign * v for v in values))


def is_cocycle(f: Cochain) -> bool:
    return coboundary(f.shelf, f.coeff, f).is_zero()


def is_coboundary(shelf: FiniteShelf, coeff: CoefficientSystem, f: Cochain) -> Optional[Cochain]:
    """Return g with d*g = f over the working ring, or None.

    Raises:
        InputError: For degree-0 cochains (there is no degree −1).
    """
    n = f.degree
    if n < 1:
        raise InputError("coboundary membership needs a cochain of positive degree")
    sign = -1 if (n - 1) % 2 else 1
    d_star = sign * _boundary(shelf, coeff, n).T
    if coeff.modulus is None:
        solution = solve_integral(d_star, f.values)
    else:
        solution = solve_mod_p(d_star, f.values, coeff.modulus)
    if solution is None:
        return None
    g = Cochain(shelf, coeff, n - 1, tuple(solution))
    if coboundary(shelf, coeff, g) != f:
        raise ContractViolation("coboundary preimage does not map back", witness=f.values)
    return g


@dataclass(frozen=True)
class CohomologyClass:
    """A cocycle taken up to coboundaries."""

    representative: Cochain

    def __post_init__(self):
        if not is_cocycle(self.representative):
            raise InputError("a cohomology class needs a cocycle representative")

    @property
    def degree(self) -> int:
        return self.representative.degree

    def is_zero(self) -> bool:
        r = self.representative
        return r.degree > 0 and is_coboundary(r.shelf, r.coeff, r) is not None

    def same_class(self, other: "CohomologyClass") -> bool:
        difference = CohomologyClass(self.representative - other.representative)
        return difference.representative.is_zero() or difference.is_zero()

    def to_json(self) -> Dict[str, object]:
        return {"degree": self.degree, "representative": self.representative.to_json()}


# ========== Products ==========


def _convolve(f: Cochain, g: Cochain, tensor_of: Callable[[Word], BarTensor]) -> Cochain:
    n = f.degree + g.degree
    return Cochain.from_function(f.shelf, f.coeff, n, lambda b: f.evaluate_tensor(g, tensor_of(b.word)))


def cup(shelf: FiniteShelf, coeff: CoefficientSystem, f: Cochain, g: Cochain) -> Cochain:
    """(f⌣g)(b) = (f⊗g)(Δb) with the Koszul evaluation sign.

    Raises:
        UnsupportedOperation: For coefficient systems other than trivial.
    """
    _require_trivial(coeff, "cup product")
    _check_pair(f, g)
    return _convolve(f, g, lambda w: coproduct_word(shelf, w))


Side = Literal["left", "right"]


def half_cup(shelf: FiniteShelf, f: Cochain, g: Cochain, side: Side) -> Cochain:
    """f↼g (side="left", dual to ←Δ) or f⇀g (side="right", dual to →Δ).

    Raises:
        UnsupportedOperation: If either degree is 0, or coefficients are not trivial.
    """
    _require_trivial(f.coeff, "half cup product")
    _check_pair(f, g)
    if f.degree < 1 or g.degree < 1:
        raise UnsupportedOperation("half cup products need cochains of positive degree")
    return _convolve(f, g, lambda w: dendri_word(shelf, w, side))


WitnessKind = Literal["commutativity", "zinbielity"]


def witness(shelf: FiniteShelf, f: Cochain, g: Cochain, kind: WitnessKind) -> Cochain:
    """(−1)^{|f|+|g|−1}·(f⊗g)∘h (or ∘h̄), of degree |f| + |g| − 1.

    For cocycles f, g this gives
        f⌣g − (−1)^{|f||g|} g⌣f = d*(witness(f, g, "commutativity")),
        f⇀g − (−1)^{|f||g|} g↼f = d*(witness(f, g, "zinbielity")).
    In degree (1, 1) the commutativity witness is x ↦ f(x)g(x).
    """
    _require_trivial(f.coeff, "witness")
    _check_pair(f, g)
    n = f.degree + g.degree - 1
    if n < 0:
        raise InputError("witness needs total degree at least 1")
    if kind == "commutativity":
        homotopy = homotopy_h_word
    elif kind == "zinbielity":
        homotopy = homotopy_hbar_word
    else:
        raise InputError(f"Unknown witness kind: {kind}")
    sign = -1 if n % 2 else 1
    return Cochain.from_function(
        shelf, f.coeff, n, lambda b: sign * f.evaluate_tensor(g, homotopy(shelf, b.word))
    )


# ========== A(X)-action ==========


def x_action(shelf: FiniteShelf, x: int, f: Cochain) -> Cochain:
    """(x·f)(r, x₁,…,xₙ) = f(r◀x, x₁◁x, …, xₙ◁x)."""
    return Cochain.from_function(
        shelf,
        f.coeff,
        f.degree,
        lambda b: f(tuple(shelf.op(y, x) for y in b.word), f.coeff.act(b.coeff_index, x)),
    )


def action_contraction(shelf: FiniteShelf, x: int, f: Cochain) -> Cochain:
    """Explicit g with d*g = x·f − f for a cocycle f of positive degree.

    g(r, x₁,…,x_{n−1}) = −f(r, x₁,…,x_{n−1}, x), dual to appending e_x.

    Raises:
        InputError: If f is not a cocycle or has degree 0.
        ContractViolation: If the identity fails.
    """
    if f.degree < 1:
        raise InputError("action contraction needs a cochain of positive degree")
    if not is_cocycle(f):
        raise InputError("action contraction needs a cocycle")
    g = Cochain.from_function(
        shelf, f.coeff, f.degree - 1, lambda b: -f(b.word + (x,), b.coeff_index)
    )
    if coboundary(shelf, f.coeff, g) != x_action(shelf, x, f) - f:
        raise ContractViolation(f"contraction fails for x = {x}", witness=x)
    return g


# ========== Induced Coproduct over F_p ==========


@dataclass(frozen=True)
class InducedCoproduct:
    """Δ on H_•(X, F_p) up to degree ``degree``.

    Attributes:
        modulus: The prime p.
        representatives: Per degree i, cycle vectors (in the basis of C_i)
            whose classes form a basis of H_i.
        constants: Per degree n and split (i, j) with i + j = n, a nested list
            c[k][a][b] = coefficient of [z_a]⊗[z_b] in Δ[z_k].
    """

    modulus: int
    degree: int
    representatives: Tuple[Tuple[Tuple[int, ...], ...], ...]
    constants: Dict[int, Dict[Tuple[int, int], List[List[List[int]]]]]

    def dimension(self, i: int) -> int:
        return len(self.representatives[i])

    def to_json(self) -> Dict[str, object]:
        return {
            "modulus": self.modulus,
            "dimensions": [self.dimension(i) for i in range(self.degree + 1)],
            "constants": {
                str(n): {f"{i},{j}": c for (i, j), c in sorted(splits.items())}
                for n, splits in sorted(self.constants.items())
            },
        }


def _class_projection(
    shelf: FiniteShelf,
    coeff: CoefficientSystem,
    n: int,
    p: int,
    rng: np.random.Generator,
) -> Tuple[List[List[int]], List[List[int]]]:
    """Class representatives of H_n(F_p) and the projection φ: C_n → H_n.

    C_n is split as Im ∂ ⊕ span(representatives) ⊕ L with L a random
    complement of the cycles; φ reads off the representative coordinates.

    Returns:
        (representatives, phi) where phi[w] is the coordinate vector of the
        w-th basis word.
    """
    dim = basis_size(shelf, coeff, n)
    d_in = _boundary(shelf, coeff, n + 1)
    _, pivots = rref_mod_p(d_in, p)
    image = [[int(v) % p for v in d_in[:, j]] for j in pivots]
    cycles = kernel_basis(_boundary(shelf, coeff, n), p)
    reps = extend_to_basis_mod_p(image, cycles, p)

    randoms = [[int(v) for v in rng.integers(0, p, size=dim)] for _ in range(2 * dim)]
    units = [[1 if k == j else 0 for k in range(dim)] for j in range(dim)]
    complement = extend_to_basis_mod_p(image + reps, randoms + units, p)

    new_basis = image + reps + complement
    change = int_matrix([list(col) for col in zip(*new_basis)], rows=dim, cols=len(new_basis))
    offset = len(image)
    phi = []
    for j in range(dim):
        coords = solve_mod_p(change, units[j], p)
        phi.append(coords[offset: offset + len(reps)])
    return reps, phi


def induced_coproduct(
    shelf: FiniteShelf,
    p: int,
    n: int,
    rng: Optional[np.random.Generator] = None,
) -> InducedCoproduct:
    """Structure constants of Δ on H_i(X, F_p) for all i ≤ n.

    Args:
        shelf: The shelf.
        p: Prime modulus.
        n: Highest degree.
        rng: Drives the choice of complements; the result does not depend on it.
    """
    check_prime(p)
    shelf.require_shelf()
    rng = rng if rng is not None else np.random.default_rng(RANDOM_STATE)
    coeff = CoefficientSystem.trivial(shelf, p)

    reps: List[List[List[int]]] = []
    phis: List[List[List[int]]] = []
    for i in range(n + 1):
        r, phi = _class_projection(shelf, coeff, i, p, rng)
        reps.append(r)
        phis.append(phi)

    constants: Dict[int, Dict[Tuple[int, int], List[List[List[int]]]]] = {}
    for m in range(n + 1):
        words = [b.word for b in basis(shelf, coeff, m)]
        splits = {(i, m - i): [] for i in range(m + 1)}
        for z in reps[m]:
            delta: Dict[Tuple[Word, Word], int] = {}
            for w, c in zip(words, z):
                if c % p:
                    for key, v in coproduct_word(shelf, w).terms.items():
                        delta[key] = (delta.get(key, 0) + c * v) % p
            for (i, j) in splits:
                block = [[0] * len(reps[j]) for _ in range(len(reps[i]))]
                for (a, b), v in delta.items():
                    if v and len(a) == i:
                        ia = basis_index(shelf, coeff, ChainBasisElement(0, a))
                        ib = basis_index(shelf, coeff, ChainBasisElement(0, b))
                        for s, fa in enumerate(phis[i][ia]):
                            if fa:
                                for t, fb in enumerate(phis[j][ib]):
                                    block[s][t] = (block[s][t] + v * fa * fb) % p
                splits[(i, j)].append(block)
        constants[m] = splits
    LOGGER.info("induced coproduct over F_%d: dimensions %s", p, [len(r) for r in reps])
    return InducedCoproduct(
        modulus=p,
        degree=n,
        representatives=tuple(tuple(tuple(z) for z in r) for r in reps),
        constants=constants,
    )


def induced_counit_defect(delta: InducedCoproduct) -> Optional[Tuple[int, int]]:
    """First (n, k) where (ε⊗Id)Δ or (Id⊗ε)Δ differs from the identity on [z_k]."""
    p = delta.modulus
    for n in range(delta.degree + 1):
        for k in range(delta.dimension(n)):
            expected = [1 if t == k else 0 for t in range(delta.dimension(n))]
            left = [v % p for v in delta.constants[n][(0, n)][k][0]]
            right = [row[0] % p for row in delta.constants[n][(n, 0)][k]]
            if left != expected or right != expected:
                return n, k
    return None


def induced_coassociativity_defect(delta: InducedCoproduct) -> Optional[Tuple[int, int, Tuple[int, int, int]]]:
    """First (n, k, (i, j, l)) where (Δ⊗Id)Δ[z_k] ≠ (Id⊗Δ)Δ[z_k]."""
    p = delta.modulus
    dims = [delta.dimension(i) for i in range(delta.degree + 1)]
    for n in range(delta.degree + 1):
        for k in range(dims[n]):
            for i in range(n + 1):
                for j in range(n - i + 1):
                    l = n - i - j
                    c = delta.constants
                    lhs = np.zeros((dims[i], dims[j], dims[l]), dtype=object)
                    rhs = np.zeros((dims[i], dims[j], dims[l]), dtype=object)
                    for a in range(dims[i + j]):
                        for t in range(dims[l]):
                            coefficient = c[n][(i + j, l)][k][a][t]
                            if coefficient:
                                lhs[:, :, t] += coefficient * np.array(c[i + j][(i, j)][a], dtype=object).reshape(dims[i], dims[j])
                    for s in range(dims[i]):
                        for b in range(dims[j + l]):
                            coefficient = c[n][(i, j + l)][k][s][b]
                            if coefficient:
                                rhs[s, :, :] += coefficient * np.array(c[j + l][(j, l)][b], dtype=object).reshape(dims[j], dims[l])
                    if np.any(np.mod(lhs - rhs, p) != 0):
                        return n, k, (i, j, l)
    return None
