"""Arithmetic in the d.g. bialgebra B(X) and its reduced quotient B̄(X).

A monomial of B(X) has the canonical form a·e_{x₁}⋯e_{xₙ} where ``a`` is a
word in the degree-0 generators. The relation e_y·x = x·e_{y◁x} moves degree-0
letters to the left. B̄(X) forgets ``a``; its degree-n basis is X^n.

Every structure map (Δ, ←Δ, →Δ, h, h̄) is computed by multiplying
generator tensors in B ⊗ B and then dropping the A-words on both sides.

Koszul conventions:
    (a⊗b)(c⊗d) = (−1)^{|b||c|} ac⊗bd
    τ(a⊗b) = (−1)^{|a||b|} b⊗a
    (d⊗Id + Id⊗d)(a⊗b) = da⊗b + (−1)^{|a|} a⊗db
"""

import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from typing import Callable, Dict, Iterable, List, Literal, Mapping, NamedTuple, Sequence, Tuple, Union

from .chain_complex import ChainBasisElement, basis_boundary, multi_face_word
from .errors import ContractViolation, InputError, UnsupportedOperation
from .shelf import CoefficientSystem, FiniteShelf

LOGGER = logging.getLogger(__name__)

Word = Tuple[int, ...]

# Global sign of the h̄ relation: tensor_diff∘h̄ + h̄∘d = HBAR_SIGN·(τ←Δ − →Δ).
# resolve_hbar_sign re-detects it on a concrete shelf.
HBAR_SIGN = -1


# ========== Sparse Elements ==========


def _accumulate(pairs: Iterable[Tuple[object, int]]) -> Dict[object, int]:
    acc: Dict[object, int] = {}
    for key, c in pairs:
        if c:
            acc[key] = acc.get(key, 0) + c
    return {k: v for k, v in sorted(acc.items()) if v != 0}


@dataclass(frozen=True)
class BarElement:
    """Homogeneous element of B̄_n: tuple (x₁,…,xₙ) stands for e_{x₁}⋯e_{xₙ}."""

    degree: int
    terms: Mapping[Word, int] = field(default_factory=dict)

    @classmethod
    def from_pairs(cls, degree: int, pairs: Iterable[Tuple[Sequence[int], int]]) -> "BarElement":
        materialized = [(tuple(w), c) for w, c in pairs]
        for w, _ in materialized:
            if len(w) != degree:
                raise InputError(f"tuple {w} does not have degree {degree}")
        return cls(degree, _accumulate(materialized))

    @classmethod
    def basis(cls, word: Sequence[int]) -> "BarElement":
        return cls(len(word), {tuple(word): 1})

    @classmethod
    def one(cls) -> "BarElement":
        return cls(0, {(): 1})

    def __add__(self, other: "BarElement") -> "BarElement":
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.degree != other.degree:
            raise InputError(f"cannot add degrees {self.degree} and {other.degree}")
        return BarElement.from_pairs(self.degree, itertools.chain(self.terms.items(), other.terms.items()))

    def __neg__(self) -> "BarElement":
        return BarElement(self.degree, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other: "BarElement") -> "BarElement":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "BarElement":
        return BarElement.from_pairs(self.degree, ((w, scalar * c) for w, c in self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def to_json(self) -> Dict[str, object]:
        return {
            "degree": self.degree,
            "terms": [{"tuple": list(w), "coeff": c} for w, c in self.terms.items()],
        }


@dataclass(frozen=True)
class BarTensor:
    """Element of B̄^{⊗k}, a formal sum of homogeneous multi-degree parts.

    ``terms`` maps k-tuples of words to coefficients; k = 2 unless stated.
    """

    terms: Mapping[Tuple[Word, ...], int] = field(default_factory=dict)
    arity: int = 2

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[Tuple[Word, ...], int]], arity: int = 2) -> "BarTensor":
        return cls(_accumulate(((tuple(tuple(w) for w in k), c) for k, c in pairs)), arity)

    def __add__(self, other: "BarTensor") -> "BarTensor":
        return BarTensor.from_pairs(itertools.chain(self.terms.items(), other.terms.items()), self.arity)

    def __neg__(self) -> "BarTensor":
        return BarTensor({k: -c for k, c in self.terms.items()}, self.arity)

    def __sub__(self, other: "BarTensor") -> "BarTensor":
        return self + (-other)

    def __rmul__(self, scalar: int) -> "BarTensor":
        return BarTensor.from_pairs(((k, scalar * c) for k, c in self.terms.items()), self.arity)

    def is_zero(self) -> bool:
        return not self.terms

    def multidegrees(self) -> List[Tuple[int, ...]]:
        return sorted({tuple(len(w) for w in k) for k in self.terms})

    def part(self, *degrees: int) -> "BarTensor":
        return BarTensor(
            {k: c for k, c in self.terms.items() if tuple(len(w) for w in k) == degrees}, self.arity
        )

    def to_json(self) -> Dict[str, object]:
        return {"terms": [{"tuples": [list(w) for w in k], "coeff": c} for k, c in self.terms.items()]}


def _linear(b: BarElement, fn: Callable[[Word], BarTensor]) -> BarTensor:
    arity = 2
    pairs = []
    for w, c in b.terms.items():
        image = fn(w)
        arity = image.arity
        pairs.extend((k, c * v) for k, v in image.terms.items())
    return BarTensor.from_pairs(pairs, arity)


def apply_on_factor(
    t: BarTensor,
    position: int,
    fn: Callable[[Word], Union[BarElement, BarTensor]],
    degree: int,
) -> BarTensor:
    """Apply Id^{⊗position} ⊗ φ ⊗ Id^{⊗…} with the Koszul sign.

    Args:
        t: The tensor.
        position: 0-based factor index.
        fn: φ on a basis word; a BarTensor result is spliced in place.
        degree: Degree of φ modulo 2 (1 for d, 0 for Δ).
    """
    pairs = []
    arity = t.arity
    for key, c in t.terms.items():
        before = sum(len(w) for w in key[:position])
        sign = -1 if (degree * before) % 2 else 1
        image = fn(key[position])
        if isinstance(image, BarElement):
            pairs.extend((key[:position] + (w,) + key[position + 1:], sign * c * v) for w, v in image.terms.items())
        else:
            arity = t.arity + image.arity - 1
            pairs.extend((key[:position] + k + key[position + 1:], sign * c * v) for k, v in image.terms.items())
    return BarTensor.from_pairs(pairs, arity)


def contract_factor(t: BarTensor, position: int, fn: Callable[[Word], int]) -> BarTensor:
    """Apply a degree-0 functional (such as ε) to one factor."""
    return BarTensor.from_pairs(
        ((key[:position] + key[position + 1:], c * fn(key[position])) for key, c in t.terms.items()),
        t.arity - 1,
    )


def tensor_to_element(t: BarTensor, degree: int) -> BarElement:
    if t.arity != 1:
        raise InputError(f"tensor of arity {t.arity} is not an element")
    return BarElement.from_pairs(degree, ((k[0], c) for k, c in t.terms.items()))


# ========== B-level Canonical Forms ==========


class Letter(NamedTuple):
    """Letter of a MixedWord: degree 0 stands for x, degree 1 for e_x."""

    degree: int
    x: int


def deg0(x: int) -> Letter:
    return Letter(0, x)


def gen(x: int) -> Letter:
    return Letter(1, x)


MixedWord = Sequence[Letter]


class BMonomial(NamedTuple):
    """Canonical monomial a·e_{x₁}⋯e_{xₙ} of B(X)."""

    aword: Word
    etuple: Word

    @property
    def degree(self) -> int:
        return len(self.etuple)


_ONE = BMonomial((), ())


def monomial_product(shelf: FiniteShelf, left: BMonomial, right: BMonomial) -> BMonomial:
    """(a₁·e_{t₁})(a₂·e_{t₂}) = a₁a₂·e_{t₁^{a₂}}e_{t₂}."""
    acted = tuple(shelf.act(y, right.aword) for y in left.etuple)
    return BMonomial(left.aword + right.aword, acted + right.etuple)


def normalize_word(shelf: FiniteShelf, w: MixedWord) -> BMonomial:
    """Canonical form of a product of generators.

    Degree-0 letters are read left to right; each one replaces every e_y to
    its left by e_{y◁x} and joins the A-word.

    Returns:
        (A-word, tuple); the tuple alone is the class in B̄.
    """
    aword: List[int] = []
    etuple: List[int] = []
    for letter in w:
        if not 0 <= letter.x < shelf.size:
            raise InputError(f"letter {letter} out of range for a shelf of size {shelf.size}")
        if letter.degree == 0:
            etuple = [shelf.op(y, letter.x) for y in etuple]
            aword.append(letter.x)
        elif letter.degree == 1:
            etuple.append(letter.x)
        else:
            raise InputError(f"letter degree must be 0 or 1, got {letter.degree}")
    return BMonomial(tuple(aword), tuple(etuple))


BTensor = Dict[Tuple[BMonomial, BMonomial], int]


def _b_product(shelf: FiniteShelf, s: BTensor, t: BTensor) -> BTensor:
    out: BTensor = {}
    for (l1, r1), c1 in s.items():
        for (l2, r2), c2 in t.items():
            sign = -1 if (r1.degree * l2.degree) % 2 else 1
            key = (monomial_product(shelf, l1, l2), monomial_product(shelf, r1, r2))
            out[key] = out.get(key, 0) + sign * c1 * c2
    return {k: v for k, v in out.items() if v != 0}


def _b_chain_product(shelf: FiniteShelf, factors: Iterable[BTensor]) -> BTensor:
    return reduce(lambda s, t: _b_product(shelf, s, t), factors, {(_ONE, _ONE): 1})


def _e(x: int) -> BMonomial:
    return BMonomial((), (x,))


def _a(x: int) -> BMonomial:
    return BMonomial((x,), ())


def _delta_gen(x: int) -> BTensor:
    return {(_e(x), _a(x)): 1, (_ONE, _e(x)): 1}


def _tau_delta_gen(x: int) -> BTensor:
    return {(_a(x), _e(x)): 1, (_e(x), _ONE): 1}


def _reduce(t: BTensor) -> BarTensor:
    """Forget the A-words on both sides (B⊗B → B̄⊗B̄)."""
    return BarTensor.from_pairs(((l.etuple, r.etuple), c) for (l, r), c in t.items())


def _b_coproduct(shelf: FiniteShelf, word: Word) -> BTensor:
    return _b_chain_product(shelf, (_delta_gen(x) for x in word))


def _b_homotopy(shelf: FiniteShelf, word: Word) -> BTensor:
    total: BTensor = {}
    for i, x in enumerate(word):
        sign = 1 if i % 2 == 0 else -1
        factors = [_tau_delta_gen(y) for y in word[:i]]
        factors.append({(_e(x), _e(x)): 1})
        factors.extend(_delta_gen(y) for y in word[i + 1:])
        for key, c in _b_chain_product(shelf, factors).items():
            total[key] = total.get(key, 0) + sign * c
    return {k: v for k, v in total.items() if v != 0}


# ========== Differential and Counit ==========


@lru_cache(maxsize=None)
def _diff_word(shelf: FiniteShelf, word: Word) -> BarElement:
    pairs = []
    for i, x in enumerate(word):
        sign = 1 if i % 2 == 0 else -1
        head = BMonomial((), word[:i])
        tail = BMonomial((), word[i + 1:])
        pairs.append((monomial_product(shelf, head, tail).etuple, sign))
        moved = monomial_product(shelf, monomial_product(shelf, head, _a(x)), tail)
        pairs.append((moved.etuple, -sign))
    image = BarElement.from_pairs(max(len(word) - 1, 0), pairs)

    reference = basis_boundary(shelf, CoefficientSystem.trivial(shelf), ChainBasisElement(0, word))
    if dict(image.terms) != {b.word: c for b, c in reference.terms.items()}:
        raise ContractViolation(f"d and the rack boundary disagree on {word}", witness=word)
    return image


def diff(shelf: FiniteShelf, b: BarElement) -> BarElement:
    """d in B̄, from d(e_x) = 1 − x extended as a graded derivation.

    Each value is checked against the rack boundary ∂ = Σ(−1)^{i−1}(δᵢ⁰ − δᵢ¹).
    """
    shelf.require_shelf()
    out = BarElement(max(b.degree - 1, 0))
    for w, c in b.terms.items():
        out = out + c * _diff_word(shelf, w)
    return out


def diff_word(shelf: FiniteShelf, word: Sequence[int]) -> BarElement:
    return _diff_word(shelf, tuple(word))


def counit(b: BarElement) -> int:
    """ε: coefficient of the empty tuple."""
    return b.terms.get((), 0)


def counit_word(word: Sequence[int]) -> int:
    return 1 if len(word) == 0 else 0


def right_action(shelf: FiniteShelf, b: BarElement, x: int) -> BarElement:
    """b·x in B̄: e_{x₁}⋯e_{xₙ}·x ∼ e_{x₁◁x}⋯e_{xₙ◁x}."""
    return BarElement.from_pairs(b.degree, ((tuple(shelf.op(y, x) for y in w), c) for w, c in b.terms.items()))


# ========== Coproducts ==========


def unshuffle_sign(n: int, subset: Iterable[int]) -> int:
    """ε(S) = (−1)^{#{(s, c) : s ∈ S, c ∉ S, s < c}} for S ⊆ {1..n}."""
    chosen = set(subset)
    inversions = sum(1 for s in chosen for c in range(1, n + 1) if c not in chosen and s < c)
    return -1 if inversions % 2 else 1


@lru_cache(maxsize=None)
def _multiplicative_word(shelf: FiniteShelf, word: Word) -> BarTensor:
    return _reduce(_b_coproduct(shelf, word))


@lru_cache(maxsize=None)
def _unshuffle_word(shelf: FiniteShelf, word: Word) -> BarTensor:
    n = len(word)
    pairs = []
    for size in range(n + 1):
        for subset in itertools.combinations(range(1, n + 1), size):
            rest = [i for i in range(1, n + 1) if i not in subset]
            left = multi_face_word(shelf, 0, subset, word)
            right = multi_face_word(shelf, 1, rest, word)
            pairs.append(((left, right), unshuffle_sign(n, subset)))
    return BarTensor.from_pairs(pairs)


CoproductMethod = Literal["multiplicative", "unshuffle"]


def coproduct_word(shelf: FiniteShelf, word: Sequence[int], method: CoproductMethod = "multiplicative") -> BarTensor:
    if method == "multiplicative":
        return _multiplicative_word(shelf, tuple(word))
    elif method == "unshuffle":
        return _unshuffle_word(shelf, tuple(word))
    else:
        raise InputError(f"Unknown coproduct method: {method}")


def coproduct(shelf: FiniteShelf, b: BarElement, method: CoproductMethod = "multiplicative") -> BarTensor:
    """Δ on B̄.

    Args:
        shelf: The shelf.
        b: Element of B̄.
        method: "multiplicative" expands Π(e_x⊗x + 1⊗e_x) in B and reduces;
            "unshuffle" sums ε(S)·δ_S⁰(b) ⊗ δ_{S^c}¹(b) over S ⊆ {1..n}.

    Raises:
        UnsupportedOperation: For the unshuffle method on a non-rack.
    """
    shelf.require_shelf()
    if method == "unshuffle":
        shelf.require_rack("the unshuffle coproduct")
    return _linear(b, lambda w: coproduct_word(shelf, w, method))


def tau(t: BarTensor) -> BarTensor:
    """Signed flip a⊗b ↦ (−1)^{|a||b|} b⊗a."""
    return BarTensor.from_pairs(
        ((b, a), (-c if (len(a) * len(b)) % 2 else c)) for (a, b), c in t.terms.items()
    )


def tensor_diff(shelf: FiniteShelf, t: BarTensor) -> BarTensor:
    """Σ over factors of Id⊗⋯⊗d⊗⋯⊗Id with Koszul signs."""
    out = BarTensor(arity=t.arity)
    for position in range(t.arity):
        out = out + apply_on_factor(t, position, lambda w: diff_word(shelf, w), degree=1)
    return out


# ========== Homotopies and Codendriform Maps ==========


@lru_cache(maxsize=None)
def _homotopy_word(shelf: FiniteShelf, word: Word) -> BarTensor:
    return _reduce(_b_homotopy(shelf, word))


def homotopy_h(shelf: FiniteShelf, b: BarElement) -> BarTensor:
    """h with tensor_diff∘h + h∘d = Δ − τΔ; h(1) = 0."""
    shelf.require_shelf()
    return _linear(b, lambda w: _homotopy_word(shelf, w))


def homotopy_h_word(shelf: FiniteShelf, word: Sequence[int]) -> BarTensor:
    return _homotopy_word(shelf, tuple(word))


Side = Literal["left", "right"]


@lru_cache(maxsize=None)
def _dendri_word(shelf: FiniteShelf, word: Word, side: str) -> BarTensor:
    if not word:
        raise UnsupportedOperation("half coproducts are defined in positive degree only")
    x = word[0]
    head = {(_e(x), _a(x)): 1} if side == "left" else {(_ONE, _e(x)): 1}
    return _reduce(_b_product(shelf, head, _b_coproduct(shelf, word[1:])))


def dendri_word(shelf: FiniteShelf, word: Sequence[int], side: Side) -> BarTensor:
    if side not in ("left", "right"):
        raise InputError(f"side must be 'left' or 'right', got {side}")
    return _dendri_word(shelf, tuple(word), side)


def dendri(shelf: FiniteShelf, b: BarElement, side: Side) -> BarTensor:
    """←Δ (side="left") or →Δ (side="right") on B̄⁺.

    ←Δ(e_{x₁}⋯) = (e_{x₁}⊗x₁)·Δ(e_{x₂}⋯) and →Δ(e_{x₁}⋯) = (1⊗e_{x₁})·Δ(e_{x₂}⋯),
    computed in B and reduced.

    Raises:
        UnsupportedOperation: On degree-0 input.
    """
    shelf.require_shelf()
    if b.degree == 0 and not b.is_zero():
        raise UnsupportedOperation("half coproducts are defined in positive degree only")
    return _linear(b, lambda w: dendri_word(shelf, w, side))


@lru_cache(maxsize=None)
def _hbar_word(shelf: FiniteShelf, word: Word) -> BarTensor:
    if len(word) < 2:
        return BarTensor()
    x = word[0]
    head = {(_a(x), _e(x)): -1}
    return _reduce(_b_product(shelf, head, _b_homotopy(shelf, word[1:])))


def homotopy_hbar(shelf: FiniteShelf, b: BarElement) -> BarTensor:
    """h̄(e_{x₁}⋯e_{xₙ}) = −(x₁⊗e_{x₁})·h(e_{x₂}⋯e_{xₙ}), reduced; zero in degree ≤ 1."""
    shelf.require_shelf()
    return _linear(b, lambda w: _hbar_word(shelf, w))


def homotopy_hbar_word(shelf: FiniteShelf, word: Sequence[int]) -> BarTensor:
    return _hbar_word(shelf, tuple(word))


def hbar_defect(shelf: FiniteShelf, word: Sequence[int]) -> Tuple[BarTensor, BarTensor]:
    """(tensor_diff∘h̄ + h̄∘d, τ←Δ − →Δ) on one basis word of degree ≥ 1."""
    word = tuple(word)
    lhs = tensor_diff(shelf, homotopy_hbar_word(shelf, word))
    lhs = lhs + _linear(diff_word(shelf, word), lambda w: _hbar_word(shelf, w))
    rhs = tau(dendri_word(shelf, word, "left")) - dendri_word(shelf, word, "right")
    return lhs, rhs


def resolve_hbar_sign(shelf: FiniteShelf, max_degree: int = 4) -> int:
    """Detect the global sign ε̄ of the h̄ relation on the first word where τ←Δ ≠ →Δ.

    Falls back to :data:`HBAR_SIGN` when the right side vanishes on every
    word up to ``max_degree`` (as on trivial shelves).

    Raises:
        ContractViolation: If the left side is not ±(τ←Δ − →Δ).
    """
    shelf.require_shelf()
    for n in range(2, max_degree + 1):
        for word in itertools.product(shelf.elements(), repeat=n):
            lhs, rhs = hbar_defect(shelf, word)
            if rhs.is_zero():
                continue
            if lhs == rhs:
                sign = 1
            elif lhs == -rhs:
                sign = -1
            else:
                raise ContractViolation(f"h̄ relation fails up to sign on {word}", witness=word)
            LOGGER.info("h̄ sign detected on %s: %+d", word, sign)
            return sign
    LOGGER.info("τ←Δ = →Δ up to degree %d; using the fixed h̄ sign %+d", max_degree, HBAR_SIGN)
    return HBAR_SIGN


def words(shelf: FiniteShelf, n: int) -> Iterable[Word]:
    """All tuples of X^n in lexicographic order."""
    return itertools.product(shelf.elements(), repeat=n)
