"""Quandle, degenerate and late splittings of B̄(X) for spindles."""

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Dict, List, Literal, Optional, Sequence, Tuple

import numpy as np

from .bialgebra import BarElement, BarTensor, coproduct_word, diff_word, words
from .config import MAX_BASIS_SIZE, MAX_DEGREE
from .errors import ContractViolation, InputError, ResourceLimitExceeded, UnsupportedOperation
from .exactlin import (
    HomologyGroup,
    IntMatrix,
    check_prime,
    homology_of_pair,
    identity,
    kernel_basis,
    matmul,
    matvec,
    zeros,
)
from .products import ZINBIEL_SIGN, Cochain, coboundary, cocycles, cup, half_cup, is_coboundary, witness
from .shelf import CoefficientSystem, FiniteShelf

LOGGER = logging.getLogger(__name__)

Word = Tuple[int, ...]


def is_degenerate(word: Sequence[int]) -> bool:
    """True when some neighbours repeat: x_i = x_{i+1}."""
    return any(a == b for a, b in zip(word, word[1:]))


def is_late(word: Sequence[int]) -> bool:
    """True when a repeat x_i = x_{i+1} occurs at some i ≥ 2."""
    return is_degenerate(word[1:])


def _index(shelf: FiniteShelf, word: Sequence[int]) -> int:
    index = 0
    for x in word:
        index = index * shelf.size + x
    return index


def _word_list(shelf: FiniteShelf, n: int) -> List[Word]:
    if shelf.size**n > MAX_BASIS_SIZE:
        raise ResourceLimitExceeded(f"B̄_{n} has {shelf.size ** n} basis words", dimension=shelf.size**n)
    return list(words(shelf, n))


def _column(shelf: FiniteShelf, n: int, b: BarElement) -> List[int]:
    col = [0] * shelf.size**n
    for w, c in b.terms.items():
        col[_index(shelf, w)] += c
    return col


def _as_element(shelf: FiniteShelf, n: int, vector: Sequence[int]) -> BarElement:
    return BarElement.from_pairs(n, ((w, int(c)) for w, c in zip(_word_list(shelf, n), vector) if c))


def _apply(shelf: FiniteShelf, matrix: IntMatrix, b: BarElement) -> BarElement:
    return _as_element(shelf, b.degree, matvec(matrix, _column(shelf, b.degree, b)))


# ========== N-generators and the map s ==========


def n_generator(shelf: FiniteShelf, word: Sequence[int]) -> BarElement:
    """(e_{x₁}−e_{x₂})(e_{x₂}−e_{x₃})⋯(e_{x_{n−1}}−e_{xₙ})e_{xₙ}, expanded in B̄.

    Zero exactly when some x_i = x_{i+1}; otherwise ``word`` plus degenerate
    words.
    """
    word = tuple(word)
    n = len(word)
    if n == 0:
        return BarElement.one()
    factors = [((word[i], 1), (word[i + 1], -1)) for i in range(n - 1)] + [((word[-1], 1),)]
    pairs = []
    for choice in itertools.product(*factors):
        sign = 1
        for _, s in choice:
            sign *= s
        pairs.append((tuple(x for x, _ in choice), sign))
    return BarElement.from_pairs(n, pairs)


def s_map(shelf: FiniteShelf, b: BarElement) -> BarElement:
    """(x₁, x₂, …, xₙ) ↦ (x₁, x₁, x₂, …, xₙ), extended linearly.

    Raises:
        UnsupportedOperation: On a non-spindle or on degree 0.
    """
    shelf.require_spindle("s_map")
    if b.degree == 0:
        raise UnsupportedOperation("s is defined in positive degree only")
    return BarElement.from_pairs(b.degree + 1, ((w[:1] + w, c) for w, c in b.terms.items()))


def rewrite_alternative_generator(
    shelf: FiniteShelf,
    pairs: Sequence[Tuple[int, int]],
    last: int,
) -> Dict[Word, int]:
    """Write (e_{x₁}−e_{y₁})⋯(e_{x_{n−1}}−e_{y_{n−1}})e_{xₙ} in N-generators.

    Uses (e_x − e_y)·g(z) = g(x, z) − g(y, z), applied from the right.

    Args:
        shelf: A spindle.
        pairs: The (x_i, y_i) of the difference factors.
        last: x_n.

    Returns:
        Map from non-degenerate tuples z to the coefficient of g(z).

    Raises:
        ContractViolation: If the rewriting does not reproduce the product.
    """
    shelf.require_spindle("rewrite_alternative_generator")
    combination: Dict[Word, int] = {(last,): 1}
    for x, y in reversed(pairs):
        step: Dict[Word, int] = {}
        for z, c in combination.items():
            for head, sign in ((x, 1), (y, -1)):
                key = (head,) + z
                if not is_degenerate(key):
                    step[key] = step.get(key, 0) + sign * c
        combination = {k: v for k, v in sorted(step.items()) if v}

    n = len(pairs) + 1
    factors = [((x, 1), (y, -1)) for x, y in pairs] + [((last, 1),)]
    direct = BarElement.from_pairs(
        n,
        ((tuple(x for x, _ in choice), int(np.prod([s for _, s in choice]))) for choice in itertools.product(*factors)),
    )
    rebuilt = BarElement(n)
    for z, c in combination.items():
        rebuilt = rebuilt + c * n_generator(shelf, z)
    if rebuilt != direct:
        raise ContractViolation("alternative generator rewriting failed", witness=(tuple(pairs), last))
    return combination


# ========== Decompositions ==========


@dataclass(frozen=True)
class NDDecomposition:
    """B̄_n = B̄ᴺ_n ⊕ B̄ᴰ_n in the monomial basis.

    Attributes:
        degree: n.
        n_words: Non-degenerate tuples y, indexing the N-generators g(y).
        d_words: Tuples with repeating neighbours.
        P_N: Projector onto B̄ᴺ along B̄ᴰ (columns = images of monomials).
        P_D: I − P_N.
    """

    degree: int
    n_words: Tuple[Word, ...]
    d_words: Tuple[Word, ...]
    P_N: IntMatrix = field(repr=False)
    P_D: IntMatrix = field(repr=False)


@lru_cache(maxsize=None)
def nd_decomposition(shelf: FiniteShelf, n: int) -> NDDecomposition:
    shelf.require_spindle("the N/D decomposition")
    all_words = _word_list(shelf, n)
    size = len(all_words)
    P_N = zeros(size, size)
    for j, w in enumerate(all_words):
        if not is_degenerate(w):
            for v, c in n_generator(shelf, w).terms.items():
                P_N[_index(shelf, v), j] += c
    P_D = identity(size) - P_N
    return NDDecomposition(
        degree=n,
        n_words=tuple(w for w in all_words if not is_degenerate(w)),
        d_words=tuple(w for w in all_words if is_degenerate(w)),
        P_N=P_N,
        P_D=P_D,
    )


def nd_project(shelf: FiniteShelf, b: BarElement) -> Tuple[BarElement, BarElement]:
    """Split b into its B̄ᴺ and B̄ᴰ parts.

    Raises:
        UnsupportedOperation: If the shelf is not a spindle.
    """
    dec = nd_decomposition(shelf, b.degree)
    return _apply(shelf, dec.P_N, b), _apply(shelf, dec.P_D, b)


@dataclass(frozen=True)
class LateDecomposition:
    """B̄ᴰ_n = B̄ᴸ_n ⊕ s(B̄ᴺ_{n−1}) for n ≥ 2.

    Attributes:
        degree: n.
        late_words: Tuples with a repeat at some position ≥ 2.
        s_words: Non-degenerate y of degree n − 1; the basis vectors are s(g(y)).
        P_L: Projector of B̄_n onto B̄ᴸ_n (zero on B̄ᴺ_n).
        P_S: Projector of B̄_n onto s(B̄ᴺ_{n−1}) (zero on B̄ᴺ_n).
    """

    degree: int
    late_words: Tuple[Word, ...]
    s_words: Tuple[Word, ...]
    P_L: IntMatrix = field(repr=False)
    P_S: IntMatrix = field(repr=False)


@lru_cache(maxsize=None)
def late_split(shelf: FiniteShelf, n: int) -> LateDecomposition:
    """Basis split of the degenerate part into late and s-parts.

    Raises:
        InputError: If n < 2.
        UnsupportedOperation: If the shelf is not a spindle.
    """
    if n < 2:
        raise InputError(f"the late splitting starts in degree 2, got {n}")
    nd = nd_decomposition(shelf, n)
    all_words = _word_list(shelf, n)
    size = len(all_words)
    within_d = zeros(size, size)
    for j, w in enumerate(all_words):
        if is_degenerate(w) and not is_late(w):
            for v, c in s_map(shelf, n_generator(shelf, w[1:])).terms.items():
                within_d[_index(shelf, v), j] += c
    P_S = matmul(within_d, nd.P_D)
    P_L = nd.P_D - P_S
    return LateDecomposition(
        degree=n,
        late_words=tuple(w for w in all_words if is_late(w)),
        s_words=tuple(w for w in _word_list(shelf, n - 1) if not is_degenerate(w)),
        P_L=P_L,
        P_S=P_S,
    )


# ========== Split Complexes ==========


Part = Literal["rack", "quandle", "degenerate", "late", "s"]
PARTS = ("rack", "quandle", "degenerate", "late")


def part_basis(shelf: FiniteShelf, part: Part, n: int) -> List[Tuple[Word, BarElement]]:
    """Basis of one summand in degree n as (leading word, vector) pairs.

    Each vector contains its own leading word with coefficient 1 and no other
    leading word of the same summand, so coordinates are read off leading
    coefficients.
    """
    if part == "rack":
        return [(w, BarElement.basis(w)) for w in _word_list(shelf, n)]
    shelf.require_spindle(f"the {part} part")
    if part == "quandle":
        return [(w, n_generator(shelf, w)) for w in _word_list(shelf, n) if not is_degenerate(w)]
    if part == "degenerate":
        return [(w, BarElement.basis(w)) for w in _word_list(shelf, n) if is_degenerate(w)]
    if part == "late":
        return [(w, BarElement.basis(w)) for w in _word_list(shelf, n) if is_late(w)]
    if part == "s":
        if n < 2:
            return []
        return [
            (w[:1] + w, s_map(shelf, n_generator(shelf, w)))
            for w in _word_list(shelf, n - 1)
            if not is_degenerate(w)
        ]
    raise InputError(f"Unknown part: {part}")


def part_boundary(shelf: FiniteShelf, part: Part, n: int) -> IntMatrix:
    """Matrix of d restricted to the summand, degree n → n − 1.

    Raises:
        ContractViolation: If d leaves the summand.
    """
    source = part_basis(shelf, part, n)
    target = part_basis(shelf, part, n - 1) if n > 0 else []
    position = {lead: i for i, (lead, _) in enumerate(target)}
    out = zeros(len(target), len(source))
    for j, (lead, vector) in enumerate(source):
        image = BarElement(max(n - 1, 0))
        for w, c in vector.terms.items():
            image = image + c * diff_word(shelf, w)
        rebuilt = BarElement(max(n - 1, 0))
        for w, c in image.terms.items():
            if w in position:
                out[position[w], j] = c
                rebuilt = rebuilt + c * target[position[w]][1]
        if rebuilt != image:
            raise ContractViolation(f"d leaves the {part} part at {lead}", witness=lead)
    return out


def split_homology(
    shelf: FiniteShelf,
    part: Part,
    max_n: int,
    dual: bool = False,
    modulus: Optional[int] = None,
) -> List[HomologyGroup]:
    """(Co)homology of one summand for 0 ≤ n ≤ max_n.

    Raises:
        UnsupportedOperation: If the shelf is not a spindle (for proper parts).
    """
    if max_n < 0:
        raise InputError(f"max_n must be non-negative, got {max_n}")
    if max_n > MAX_DEGREE:
        raise ResourceLimitExceeded(f"degree {max_n} is above the cap of {MAX_DEGREE}", dimension=max_n)
    check_prime(modulus)
    mats = [part_boundary(shelf, part, n) for n in range(max_n + 2)]
    groups = []
    for n in range(max_n + 1):
        if dual:
            groups.append(homology_of_pair(mats[n + 1].T, mats[n].T, modulus))
        else:
            groups.append(homology_of_pair(mats[n], mats[n + 1], modulus))
    LOGGER.info("%s part up to degree %d: %s", part, max_n, [str(g) for g in groups])
    return groups


# ========== Degree-3 Obstruction ==========


@lru_cache(maxsize=None)
def _project_word(shelf: FiniteShelf, kind: str, word: Word) -> BarElement:
    dec = nd_decomposition(shelf, len(word))
    column = (dec.P_N if kind == "N" else dec.P_D)[:, _index(shelf, word)]
    return _as_element(shelf, len(word), column)


def _project_tensor(shelf: FiniteShelf, t: BarTensor, left: str, right: str) -> BarTensor:
    pairs = []
    for (a, b), c in t.terms.items():
        pa = _project_word(shelf, left, a)
        pb = _project_word(shelf, right, b)
        pairs.extend(((u, v), c * cu * cv) for u, cu in pa.terms.items() for v, cv in pb.terms.items())
    return BarTensor.from_pairs(pairs)


def component(shelf: FiniteShelf, t: BarTensor, left: str, right: str) -> BarTensor:
    """(P_left ⊗ P_right)(t) with left, right ∈ {"N", "D"}."""
    shelf.require_spindle("tensor components")
    return _project_tensor(shelf, t, left, right)


def degree3_obstruction(shelf: FiniteShelf, x: int, y: int, z: int) -> Tuple[BarTensor, BarTensor, BarElement]:
    """D⊗N component of Δ((e_x−e_y)(e_y−e_z)e_z) and its closed form.

    Returns:
        (computed component, e_z²⊗(e_{X◁Y} − e_{X◁z} − e_Y + e_{Y◁z}) with
        X = x◁z and Y = y◁z, a degree-2 chain whose boundary is the right
        factor).
    """
    shelf.require_spindle("degree3_obstruction")
    g = n_generator(shelf, (x, y, z))
    delta = BarTensor()
    for w, c in g.terms.items():
        delta = delta + c * coproduct_word(shelf, w)
    computed = component(shelf, delta, "D", "N")

    X, Y = shelf.op(x, z), shelf.op(y, z)
    right = BarElement.from_pairs(1, [((shelf.op(X, Y),), 1), ((shelf.op(X, z),), -1), ((Y,), -1), ((shelf.op(Y, z),), 1)])
    predicted = BarTensor.from_pairs((((z, z), w), c) for w, c in right.terms.items())
    preimage = BarElement.from_pairs(2, [((X, Y), 1), ((X, z), -1), ((Y, z), 1)])
    return computed, predicted, preimage


# ========== Cohomology Splitting Checks ==========


def restrict(f: Cochain, projector: IntMatrix) -> Cochain:
    """f∘P as a cochain."""
    return Cochain(f.shelf, f.coeff, f.degree, tuple(matvec(projector.T, f.values)))


def quandle_cocycles(shelf: FiniteShelf, coeff: CoefficientSystem, n: int) -> List[Cochain]:
    """Cocycles vanishing on degenerate tuples."""
    lead = [w for w, _ in part_basis(shelf, "quandle", n)]
    out = []
    for vec in kernel_basis(part_boundary(shelf, "quandle", n + 1).T, coeff.modulus):
        table = dict(zip(lead, vec))
        out.append(Cochain.from_function(shelf, coeff, n, lambda b, t=table: t.get(b.word, 0)))
    return out


def degenerate_cocycles(shelf: FiniteShelf, coeff: CoefficientSystem, n: int) -> List[Cochain]:
    """Cocycles of the form φ∘P_D with φ a cocycle of the degenerate part."""
    lead = [w for w, _ in part_basis(shelf, "degenerate", n)]
    P_D = nd_decomposition(shelf, n).P_D
    out = []
    for vec in kernel_basis(part_boundary(shelf, "degenerate", n + 1).T, coeff.modulus):
        table = dict(zip(lead, vec))
        phi = Cochain.from_function(shelf, coeff, n, lambda b, t=table: t.get(b.word, 0))
        out.append(restrict(phi, P_D))
    return out


@dataclass
class SplittingReport:
    """Outcome of :func:`verify_splitting`.

    ``failures`` lists re-runnable instances; ``informational`` counts the
    N-supported pairs whose half-cup leaves the quandle part.
    """

    shelf: Dict[str, object]
    max_n: int
    moduli: Tuple[Optional[int], ...]
    checked: int = 0
    failures: List[Dict[str, object]] = field(default_factory=list)
    informational: Dict[str, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> Dict[str, object]:
        return {
            "shelf": self.shelf,
            "max_n": self.max_n,
            "moduli": list(self.moduli),
            "checked": self.checked,
            "passed": self.passed,
            "failures": self.failures,
            "informational": dict(sorted(self.informational.items())),
        }


def verify_splitting(
    shelf: FiniteShelf,
    max_n: int,
    moduli: Sequence[Optional[int]] = (None, 2, 3),
) -> SplittingReport:
    """Check that cup restricts to quandle cohomology and that the degenerate
    part is a Zinbiel ideal, for every pair of basis cocycles of total degree
    ≤ max_n. The identities are bilinear, so the basis pairs cover all cocycles.

    (a) f, g quandle cocycles: f⌣g vanishes on degenerate tuples.
    (b) f degenerate cocycle, g any cocycle: (g↼f)∘P_N = 0 and
        (f↼g)∘P_N = −(−1)^{|f||g|}·ZINBIEL_SIGN·d*(witness(g, f, zinbielity)∘P_N).
    (c) informational: how often f↼g leaves the quandle part for quandle
        cocycles f, g.
    """
    shelf.require_spindle("verify_splitting")
    report = SplittingReport(shelf=shelf.to_json(), max_n=max_n, moduli=tuple(moduli))
    report.informational["half_cup_leaves_quandle_part"] = 0

    for p in moduli:
        coeff = CoefficientSystem.trivial(shelf, p)
        quandle = {n: quandle_cocycles(shelf, coeff, n) for n in range(1, max_n)}
        degenerate = {n: degenerate_cocycles(shelf, coeff, n) for n in range(1, max_n)}
        every = {n: cocycles(shelf, coeff, n) for n in range(1, max_n)}

        for i in range(1, max_n):
            for j in range(1, max_n - i + 1):
                n = i + j
                d_words = nd_decomposition(shelf, n).d_words
                P_N = nd_decomposition(shelf, n).P_N
                for f in quandle[i]:
                    for g in quandle[j]:
                        report.checked += 1
                        product = cup(shelf, coeff, f, g)
                        bad = next((w for w in d_words if product(w) != 0), None)
                        if bad is not None:
                            report.failures.append(
                                {"check": "cup_restricts", "modulus": p, "f": f.to_json(), "g": g.to_json(), "tuple": list(bad)}
                            )
                        leaving = half_cup(shelf, f, g, "left")
                        if any(leaving(w) != 0 for w in d_words):
                            report.informational["half_cup_leaves_quandle_part"] += 1

                for f in degenerate[i]:
                    for g in every[j]:
                        report.checked += 1
                        instance = {"modulus": p, "f": f.to_json(), "g": g.to_json()}
                        if not restrict(half_cup(shelf, g, f, "left"), P_N).is_zero():
                            report.failures.append({"check": "zinbiel_ideal_left", **instance})
                        projected = restrict(half_cup(shelf, f, g, "left"), P_N)
                        sign = (-1 if (i * j) % 2 == 0 else 1) * ZINBIEL_SIGN
                        preimage = sign * restrict(witness(shelf, g, f, "zinbielity"), nd_decomposition(shelf, n - 1).P_N)
                        if coboundary(shelf, coeff, preimage) != projected or is_coboundary(shelf, coeff, projected) is None:
                            report.failures.append({"check": "zinbiel_ideal_right", **instance})
    LOGGER.info("splitting checks: %d instances, %d failures", report.checked, len(report.failures))
    return report
