"""Named identity suites shared by the CLI and the tests.

Each suite walks every basis tuple and every pair or triple of basis
cocycles (random cochains for the cochain-level laws) up to a degree cap and stops recording after the first failure, which is reported
with enough data (shelf table, identity, element) to be re-run by hand.
"""

import itertools
import logging
import time
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

import numpy as np

from .bialgebra import (
    HBAR_SIGN,
    BarElement,
    BarTensor,
    apply_on_factor,
    contract_factor,
    coproduct,
    coproduct_word,
    counit_word,
    dendri_word,
    diff,
    diff_word,
    hbar_defect,
    homotopy_h_word,
    resolve_hbar_sign,
    tau,
    tensor_diff,
    tensor_to_element,
    words,
)
from .chain_complex import basis_boundary, basis_size, boundary, chain_boundary, face, iter_basis
from .config import (
    CUP_CHECK_DEGREE,
    DEFAULT_VERIFY_DEGREE,
    MAX_BASIS_SIZE,
    RANDOM_COCHAINS_PER_CHECK,
    RANDOM_STATE,
    SUITES,
)
from .errors import ContractViolation, InputError
from .exactlin import is_zero, matmul
from .products import (
    COMMUTATIVITY_SIGN,
    ZINBIEL_SIGN,
    Cochain,
    action_contraction,
    coboundary,
    cocycles,
    cup,
    half_cup,
    induced_coassociativity_defect,
    induced_counit_defect,
    induced_coproduct,
    is_coboundary,
    random_cochain,
    witness,
    x_action,
)
from .shelf import CoefficientSystem, FiniteShelf, XSetAction
from .splitting import (
    PARTS,
    component,
    degree3_obstruction,
    late_split,
    n_generator,
    nd_decomposition,
    part_boundary,
    rewrite_alternative_generator,
    split_homology,
    verify_splitting,
)

LOGGER = logging.getLogger(__name__)


@dataclass
class SuiteReport:
    """Outcome of one suite.

    Attributes:
        name: Suite name.
        checked: Number of identity instances evaluated.
        failure: First failing instance (identity, shelf JSON, element), if any.
        notes: Informational findings that do not fail the suite.
    """

    name: str
    shelf: Dict[str, Any]
    max_degree: int
    checked: int = 0
    failure: Optional[Dict[str, Any]] = None
    notes: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failure is None

    def check(self, holds: bool, identity: str, element: Any = None) -> bool:
        self.checked += 1
        if not holds and self.failure is None:
            self.failure = {"identity": identity, "shelf": self.shelf, "element": element}
            LOGGER.warning("%s suite: %s fails at %s", self.name, identity, element)
        return holds

    def to_json(self) -> Dict[str, Any]:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "max_degree": self.max_degree,
            "failure": self.failure,
            "notes": self.notes,
        }


def _words(shelf: FiniteShelf, lo: int, hi: int):
    for n in range(lo, hi + 1):
        yield from words(shelf, n)


def _delta(shelf: FiniteShelf) -> Callable[[tuple], BarTensor]:
    return lambda w: coproduct_word(shelf, w)


def _reduce(value: int, modulus: Optional[int]) -> int:
    return value % modulus if modulus is not None else value


def _cocycle_bases(shelf: FiniteShelf, coeff: CoefficientSystem, top: int) -> Dict[int, List[Cochain]]:
    """Full cocycle bases in degrees 1..top; the checked identities are multilinear."""
    return {n: cocycles(shelf, coeff, n) for n in range(1, top + 1)}


def _pairs(lo: int, total: int):
    """Degree pairs (p, q) with p, q ≥ lo and p + q ≤ total."""
    return [(p, q) for p in range(lo, total + 1) for q in range(lo, total - p + 1)]


# ========== Suites ==========


def complex_suite(
    shelf: FiniteShelf,
    max_degree: int,
    xsets: Sequence[XSetAction] = (),
) -> SuiteReport:
    """∂² = 0 and the cube identities δᵢ^ε δⱼ^ω = δ_{j−1}^ω δᵢ^ε (i < j).

    Runs on trivial and self coefficients plus every given X-set. ∂_n∂_{n+1}
    is a matrix product while C_{n+1} fits under ``MAX_BASIS_SIZE`` and is
    evaluated basis element by basis element above it.
    """
    report = SuiteReport("complex", shelf.to_json(), max_degree)
    systems = [CoefficientSystem.trivial(shelf), CoefficientSystem.self_action(shelf)]
    systems += [CoefficientSystem.from_xset(a) for a in xsets]
    report.notes["coefficients"] = [coeff.kind for coeff in systems]
    for coeff in systems:
        for n in range(1, max_degree + 1):
            element = {"coefficients": coeff.kind, "degree": n + 1}
            if basis_size(shelf, coeff, n + 1) <= MAX_BASIS_SIZE:
                composite = matmul(boundary(shelf, coeff, n), boundary(shelf, coeff, n + 1))
                report.check(is_zero(composite), "boundary squares to zero", element)
            else:
                report.notes.setdefault("elementwise_degrees", []).append(element)
                for b in iter_basis(shelf, coeff, n + 1):
                    twice = chain_boundary(shelf, coeff, basis_boundary(shelf, coeff, b))
                    holds = report.check(
                        twice.is_zero(), "boundary squares to zero", {**element, "basis": [b.coeff_index, list(b.word)]}
                    )
                    if not holds:
                        break
            for b in iter_basis(shelf, coeff, n):
                for i, j in itertools.combinations(range(1, n + 1), 2):
                    for eps, omega in itertools.product((0, 1), repeat=2):
                        lhs = face(shelf, coeff, eps, i, face(shelf, coeff, omega, j, b))
                        rhs = face(shelf, coeff, omega, j - 1, face(shelf, coeff, eps, i, b))
                        report.check(
                            lhs == rhs,
                            "cube identity",
                            {"coefficients": coeff.kind, "basis": [b.coeff_index, list(b.word)], "i": i, "j": j, "sides": [eps, omega]},
                        )
    return report


def dgb_suite(
    shelf: FiniteShelf,
    max_degree: int,
    modulus: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
) -> SuiteReport:
    """Coalgebra laws of B̄, the two coproduct formulas, and their cochain duals.

    Cup associativity and the Leibniz rule for d* run on random cochains of
    total degree up to ``CUP_CHECK_DEGREE``, over F_p when ``modulus`` is set.
    """
    rng = rng if rng is not None else np.random.default_rng(RANDOM_STATE)
    report = SuiteReport("dgb", shelf.to_json(), max_degree)
    delta = _delta(shelf)
    disagreements = 0
    for w in _words(shelf, 0, max_degree):
        element = {"tuple": list(w)}
        dw = diff_word(shelf, w)
        report.check(diff(shelf, dw).is_zero(), "d∘d = 0", element)
        t = delta(w)
        report.check(tensor_to_element(contract_factor(t, 0, counit_word), len(w)) == BarElement.basis(w), "(ε⊗Id)Δ = Id", element)
        report.check(tensor_to_element(contract_factor(t, 1, counit_word), len(w)) == BarElement.basis(w), "(Id⊗ε)Δ = Id", element)
        report.check(apply_on_factor(t, 0, delta, 0) == apply_on_factor(t, 1, delta, 0), "coassociativity", element)
        report.check(coproduct(shelf, dw) == tensor_diff(shelf, t), "Δ∘d = tensor_diff∘Δ", element)
        agree = coproduct_word(shelf, w, "unshuffle") == t
        if shelf.is_rack:
            report.check(agree, "unshuffle formula = multiplicative coproduct", element)
        elif not agree:
            disagreements += 1
    if not shelf.is_rack:
        report.notes["unshuffle_disagreements_on_non_rack"] = disagreements

    coeff = CoefficientSystem.trivial(shelf, modulus)
    total = min(max_degree, CUP_CHECK_DEGREE)
    associativity = []
    for p, q in _pairs(1, total - 1):
        for r in range(1, total - p - q + 1):
            f, g, k = (random_cochain(shelf, coeff, d, rng) for d in (p, q, r))
            report.check(cup(shelf, coeff, cup(shelf, coeff, f, g), k) == cup(shelf, coeff, f, cup(shelf, coeff, g, k)), "cup associativity", {"degrees": [p, q, r]})
            associativity.append([p, q, r])
    report.notes["cup_associativity_degrees"] = associativity
        f, g = random_cochain(shelf, coeff, p, rng), random_cochain(shelf, coeff, q, rng)
        if p + q < total:
            lhs = coboundary(shelf, coeff, cup(shelf, coeff, f, g))
            rhs = cup(shelf, coeff, coboundary(shelf, coeff, f), g) + (-1) ** p * cup(shelf, coeff, f, coboundary(shelf, coeff, g))
            report.check(lhs == rhs, "d* is a derivation for cup", {"degrees": [p, q]})
    return report


def _h_closed_form(shelf: FiniteShelf, w: tuple) -> Optional[BarTensor]:
    if len(w) == 0:
        return BarTensor()
    if len(w) == 1:
        return BarTensor.from_pairs([((w, w), 1)])
    if len(w) == 2:
        x, y = w
        return BarTensor.from_pairs(
            [(((y,), w), 1), (((x,), w), 1), ((w, (shelf.op(x, y),)), -1), ((w, (y,)), -1)]
        )
    return None


def _cup_22_closed_form(shelf: FiniteShelf, f: Cochain, g: Cochain, w: tuple) -> int:
    x, y, z, t = w
    op = shelf.op
    return (
        f((x, y)) * g((z, t))
        + f((z, t)) * g((op(op(x, z), t), op(op(y, z), t)))
        - f((x, z)) * g((op(y, z), t))
        + f((y, z)) * g((op(op(x, y), z), t))
        + f((x, t)) * g((op(y, t), op(z, t)))
        - f((y, t)) * g((op(op(x, y), t), op(z, t)))
    )


def homotopy_suite(
    shelf: FiniteShelf,
    max_degree: int,
    modulus: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
) -> SuiteReport:
    """tensor_diff∘h + h∘d = Δ − τΔ, closed forms of h and of low-degree cups,
    and exact commutativity control on every pair of basis cocycles."""
    rng = rng if rng is not None else np.random.default_rng(RANDOM_STATE)
    report = SuiteReport("homotopy", shelf.to_json(), max_degree)
    for w in _words(shelf, 0, max_degree):
        element = {"tuple": list(w)}
        h = homotopy_h_word(shelf, w)
        lhs = tensor_diff(shelf, h)
        for v, c in diff_word(shelf, w).terms.items():
            lhs = lhs + c * homotopy_h_word(shelf, v)
        t = coproduct_word(shelf, w)
        report.check(lhs == t - tau(t), "tensor_diff∘h + h∘d = Δ − τΔ", element)
        expected = _h_closed_form(shelf, w)
        if expected is not None:
            report.check(h == expected, "closed form of h", element)

    coeff = CoefficientSystem.trivial(shelf, modulus)
    f, g = random_cochain(shelf, coeff, 1, rng), random_cochain(shelf, coeff, 1, rng)
    if max_degree >= 2:
        product = cup(shelf, coeff, f, g)
        for x, y in words(shelf, 2):
            value = -f((x,)) * g((y,)) + f((y,)) * g((shelf.op(x, y),))
            report.check(product((x, y)) == _reduce(value, modulus), "degree-(1,1) cup formula", {"tuple": [x, y]})
    if max_degree >= 4 and shelf.is_rack:
        f2, g2 = random_cochain(shelf, coeff, 2, rng), random_cochain(shelf, coeff, 2, rng)
        product = cup(shelf, coeff, f2, g2)
        for w in words(shelf, 4):
            expected = _reduce(_cup_22_closed_form(shelf, f2, g2, w), modulus)
            report.check(product(w) == expected, "degree-(2,2) cup formula", {"tuple": list(w)})

    total = min(max_degree, DEFAULT_VERIFY_DEGREE)
    basis_by_degree = _cocycle_bases(shelf, coeff, total - 1)
    report.notes["commutativity_pairs"] = sum(len(basis_by_degree[p]) * len(basis_by_degree[q]) for p, q in _pairs(1, total))
    for p, q in _pairs(1, total):
        for f in basis_by_degree[p]:
            for g in basis_by_degree[q]:
                defect = cup(shelf, coeff, f, g) - (-1) ** (p * q) * cup(shelf, coeff, g, f)
                expected = COMMUTATIVITY_SIGN * coboundary(shelf, coeff, witness(shelf, f, g, "commutativity"))
                report.check(defect == expected, "commutativity defect = d*(witness)", {"f": f.to_json(), "g": g.to_json()})
                if p == q == 1:
                    w_fg = witness(shelf, f, g, "commutativity")
                    closed = all(w_fg((x,)) == _reduce(f((x,)) * g((x,)), modulus) for x in shelf.elements())
                    report.check(closed, "degree-(1,1) witness is x ↦ f(x)g(x)", {"f": f.to_json(), "g": g.to_json()})
    return report


def dendriform_suite(
    shelf: FiniteShelf,
    max_degree: int,
    modulus: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
) -> SuiteReport:
    """Codendriform axioms in B̄ and the dendriform axioms on cochains."""
    rng = rng if rng is not None else np.random.default_rng(RANDOM_STATE)
    report = SuiteReport("dendriform", shelf.to_json(), max_degree)
    delta = _delta(shelf)

    def left(w):
        return dendri_word(shelf, w, "left")

    def right(w):
        return dendri_word(shelf, w, "right")

    def d(w):
        return diff_word(shelf, w)

    for w in _words(shelf, 1, max_degree):
        element = {"tuple": list(w)}
        lw, rw = left(w), right(w)
        report.check(lw + rw == delta(w), "←Δ + →Δ = Δ", element)
        report.check(apply_on_factor(lw, 0, left, 0) == apply_on_factor(lw, 1, delta, 0), "(←Δ⊗Id)←Δ = (Id⊗Δ)←Δ", element)
        report.check(apply_on_factor(rw, 1, right, 0) == apply_on_factor(rw, 0, delta, 0), "(Id⊗→Δ)→Δ = (Δ⊗Id)→Δ", element)
        report.check(apply_on_factor(rw, 1, left, 0) == apply_on_factor(lw, 0, right, 0), "(Id⊗←Δ)→Δ = (→Δ⊗Id)←Δ", element)
        dw = d(w)
        if len(w) >= 2:
            for side, fn, t in (("←Δ", left, lw), ("→Δ", right, rw)):
                image = BarTensor()
                for v, c in dw.terms.items():
                    image = image + c * fn(v)
                report.check(image == tensor_diff(shelf, t), f"{side}∘d = tensor_diff∘{side}", element)
        else:
            mixed = apply_on_factor(lw, 0, d, 1) + apply_on_factor(rw, 1, d, 1)
            report.check(coproduct(shelf, dw) == mixed, "Δ∘d = (d⊗Id)←Δ + (Id⊗d)→Δ in degree 1", element)

    coeff = CoefficientSystem.trivial(shelf, modulus)
    total = min(max_degree, DEFAULT_VERIFY_DEGREE)
    for p, q in _pairs(1, total):
        f, g = random_cochain(shelf, coeff, p, rng), random_cochain(shelf, coeff, q, rng)
        degrees = {"degrees": [p, q]}
        report.check(half_cup(shelf, f, g, "left") + half_cup(shelf, f, g, "right") == cup(shelf, coeff, f, g), "f↼g + f⇀g = f⌣g", degrees)
        for r in range(1, total - p - q + 1):
            k = random_cochain(shelf, coeff, r, rng)
            degrees = {"degrees": [p, q, r]}
            report.check(
                half_cup(shelf, half_cup(shelf, f, g, "left"), k, "left") == half_cup(shelf, f, cup(shelf, coeff, g, k), "left"),
                "(f↼g)↼k = f↼(g⌣k)",
                degrees,
            )
            report.check(
                half_cup(shelf, f, half_cup(shelf, g, k, "right"), "right") == half_cup(shelf, cup(shelf, coeff, f, g), k, "right"),
                "f⇀(g⇀k) = (f⌣g)⇀k",
                degrees,
            )
            report.check(
                half_cup(shelf, f, half_cup(shelf, g, k, "left"), "right") == half_cup(shelf, half_cup(shelf, f, g, "right"), k, "left"),
                "f⇀(g↼k) = (f⇀g)↼k",
                degrees,
            )
    return report


def zinbiel_suite(
    shelf: FiniteShelf,
    max_degree: int,
    moduli: Sequence[int] = (2, 3),
    modulus: Optional[int] = None,
) -> SuiteReport:
    """h̄ relation with one global sign, flip control and Zinbiel up to coboundaries.

    Flip control runs on every pair of basis cocycles, over F_p when
    ``modulus`` is set. The Zinbiel relation runs on every triple of basis
    cocycles over each field in ``moduli``, or over F_p alone when
    ``modulus`` is set.
    """
    moduli = (modulus,) if modulus is not None else tuple(moduli)
    report = SuiteReport("zinbiel", shelf.to_json(), max_degree)
    sign = resolve_hbar_sign(shelf, max_degree)
    report.notes["hbar_sign"] = sign
    report.check(sign == HBAR_SIGN, "detected h̄ sign equals the fixed global sign", {"detected": sign})
    for w in _words(shelf, 1, max_degree):
        lhs, rhs = hbar_defect(shelf, w)
        report.check(lhs == HBAR_SIGN * rhs, "tensor_diff∘h̄ + h̄∘d = ε̄(τ←Δ − →Δ)", {"tuple": list(w)})

    total = min(max_degree, DEFAULT_VERIFY_DEGREE)
    coeff = CoefficientSystem.trivial(shelf, modulus)
    flip_bases = _cocycle_bases(shelf, coeff, total - 1)
    report.notes["flip_pairs"] = sum(len(flip_bases[p]) * len(flip_bases[q]) for p, q in _pairs(1, total))
    for p, q in _pairs(1, total):
        for f in flip_bases[p]:
            for g in flip_bases[q]:
                defect = half_cup(shelf, f, g, "right") - (-1) ** (p * q) * half_cup(shelf, g, f, "left")
                expected = ZINBIEL_SIGN * coboundary(shelf, coeff, witness(shelf, f, g, "zinbielity"))
                report.check(defect == expected, "f⇀g − ±g↼f = ε_z·d*(witness)", {"f": f.to_json(), "g": g.to_json()})

    for prime in moduli:
        field_coeff = CoefficientSystem.trivial(shelf, prime)
        field_bases = _cocycle_bases(shelf, field_coeff, total - 2)
        triples = 0
        for p, q in _pairs(1, total - 1):
            for r in range(1, total - p - q + 1):
                for f, g, k in itertools.product(field_bases[p], field_bases[q], field_bases[r]):
                    triples += 1
                    inner = half_cup(shelf, g, k, "left") + (-1) ** (q * r) * half_cup(shelf, k, g, "left")
                    relation = half_cup(shelf, half_cup(shelf, f, g, "left"), k, "left") - half_cup(shelf, f, inner, "left")
                    report.check(
                        is_coboundary(shelf, field_coeff, relation) is not None,
                        "Zinbiel relation holds up to coboundaries",
                        {"modulus": prime, "f": f.to_json(), "g": g.to_json(), "k": k.to_json()},
                    )
        report.notes.setdefault("zinbiel_triples", {})[str(prime)] = triples
    return report


def action_suite(shelf: FiniteShelf, max_degree: int, modulus: Optional[int] = None) -> SuiteReport:
    """x·f − f is a coboundary for every x and every cocycle basis element."""
    report = SuiteReport("action", shelf.to_json(), max_degree)
    coeff = CoefficientSystem.trivial(shelf, modulus)
    for n in range(1, min(max_degree, 3) + 1):
        for f in cocycles(shelf, coeff, n):
            for x in shelf.elements():
                element = {"x": x, "f": f.to_json()}
                difference = x_action(shelf, x, f) - f
                report.check(is_coboundary(shelf, coeff, difference) is not None, "x·f − f is a coboundary", element)
                try:
                    action_contraction(shelf, x, f)
                    report.check(True, "explicit contraction of x·f − f", element)
                except ContractViolation:
                    report.check(False, "explicit contraction of x·f − f", element)
    return report


def _delta_tensor(shelf: FiniteShelf, b: BarElement, kind: str) -> BarTensor:
    out = BarTensor()
    for w, c in b.terms.items():
        t = coproduct_word(shelf, w) if kind == "both" else dendri_word(shelf, w, kind)
        out = out + c * t
    return out


def splitting_suite(
    shelf: FiniteShelf,
    max_degree: int,
    moduli: Sequence[Optional[int]] = (None, 2, 3),
    modulus: Optional[int] = None,
    rng: Optional[np.random.Generator] = None,
) -> SuiteReport:
    """Subcomplex closure and (co)homology splittings for spindles.

    With ``modulus`` set, the homology splittings, the cohomology checks and
    the induced coproduct run over F_p only. Non-spindles are reported as
    passed with only the induced coproduct checked.
    """
    moduli = (modulus,) if modulus is not None else tuple(moduli)
    rng = rng if rng is not None else np.random.default_rng(RANDOM_STATE)
    report = SuiteReport("splitting", shelf.to_json(), max_degree)
    if not shelf.is_spindle:
        report.notes["skipped"] = "not a spindle"
    else:
        _splitting_chain_checks(shelf, max_degree, report, rng)
        _splitting_homology_checks(shelf, max_degree, report, modulus)
        cohomology = verify_splitting(shelf, min(max_degree, DEFAULT_VERIFY_DEGREE), moduli)
        report.checked += cohomology.checked
        report.notes["cohomology"] = cohomology.informational
        if cohomology.failures and report.failure is None:
            report.failure = {"identity": "cohomology splitting", "shelf": report.shelf, "element": cohomology.failures[0]}

    for p in (modulus,) if modulus is not None else (2, 3):
        first = induced_coproduct(shelf, p, min(max_degree, 3), np.random.default_rng(RANDOM_STATE))
        second = induced_coproduct(shelf, p, min(max_degree, 3), np.random.default_rng(RANDOM_STATE + 1))
        element = {"modulus": p}
        report.check(first.constants == second.constants, "induced coproduct is independent of the complement", element)
        report.check(induced_counit_defect(first) is None, "induced counit law", element)
        report.check(induced_coassociativity_defect(first) is None, "induced coassociativity", element)
    return report


def _splitting_chain_checks(shelf: FiniteShelf, max_degree: int, report: SuiteReport, rng: np.random.Generator) -> None:
    for x in shelf.elements():
        square = (x, x)
        report.check(diff_word(shelf, square).is_zero(), "d(e_x e_x) = 0", {"x": x})
        expected = BarTensor.from_pairs([((square, ()), 1), (((), square), 1)])
        report.check(coproduct_word(shelf, square) == expected, "Δ(e_x e_x) = e_x e_x⊗1 + 1⊗e_x e_x", {"x": x})

    for n in range(1, max_degree + 1):
        nd = nd_decomposition(shelf, n)
        element = {"degree": n}
        report.check(is_zero(matmul(nd.P_N, nd.P_N) - nd.P_N), "P_N is idempotent", element)
        report.check(is_zero(matmul(nd.P_N, nd.P_D)), "P_N P_D = 0", element)
        for part in ("quandle", "degenerate", "late", "s"):
            try:
                part_boundary(shelf, part, n)
                report.check(True, f"d preserves the {part} part", element)
            except ContractViolation as e:
                report.check(False, f"d preserves the {part} part", {"degree": n, "tuple": list(e.witness)})
        if n >= 2:
            late = late_split(shelf, n)
            report.check(len(late.late_words) + len(late.s_words) == len(nd.d_words), "dim D = dim L + #N-generators below", element)
            report.check(is_zero(late.P_L + late.P_S - nd.P_D), "P_L + P_S = P_D", element)
            report.check(is_zero(matmul(late.P_S, late.P_S) - late.P_S), "P_S is idempotent", element)

        for w in nd.d_words:
            t = coproduct_word(shelf, w)
            report.check(component(shelf, t, "N", "N").is_zero(), "degenerate part is a coideal", {"tuple": list(w)})
        for y in nd.n_words:
            g = n_generator(shelf, y)
            for kind in ("both", "left", "right"):
                t = _delta_tensor(shelf, g, kind)
                closed = component(shelf, t, "N", "D").is_zero() and component(shelf, t, "D", "D").is_zero()
                report.check(closed, f"quandle part is a left coideal ({kind})", {"tuple": list(y)})

        if n >= 2:
            for _ in range(RANDOM_COCHAINS_PER_CHECK):
                pairs = [tuple(int(v) for v in rng.integers(0, shelf.size, size=2)) for _ in range(n - 1)]
                last = int(rng.integers(0, shelf.size))
                element = {"pairs": [list(p) for p in pairs], "last": last}
                try:
                    rewrite_alternative_generator(shelf, pairs, last)
                    report.check(True, "alternative generators rewrite into N-generators", element)
                except ContractViolation:
                    report.check(False, "alternative generators rewrite into N-generators", element)

    if max_degree >= 2:
        for x, y in words(shelf, 2):
            g = n_generator(shelf, (x, y))
            report.check(component(shelf, _delta_tensor(shelf, g, "both"), "D", "N").is_zero(), "no D⊗N term in degree 2", {"tuple": [x, y]})
    if max_degree >= 3:
        for x, y, z in words(shelf, 3):
            computed, predicted, preimage = degree3_obstruction(shelf, x, y, z)
            element = {"tuple": [x, y, z]}
            report.check(computed == predicted, "degree-3 D⊗N term", element)
            right = BarElement.from_pairs(1, ((b, c) for (_, b), c in predicted.terms.items()))
            report.check(diff(shelf, preimage) == right, "degree-3 D⊗N term is a boundary on the right", element)


def _splitting_homology_checks(shelf: FiniteShelf, max_degree: int, report: SuiteReport, modulus: Optional[int]) -> None:
    top = min(max_degree, DEFAULT_VERIFY_DEGREE)
    tables = {part: split_homology(shelf, part, top, modulus=modulus) for part in PARTS}
    for n in range(top + 1):
        element = {"degree": n, **{part: str(tables[part][n]) for part in PARTS}}
        report.check(tables["rack"][n] == tables["quandle"][n].direct_sum(tables["degenerate"][n]), "H^R = H^Q + H^D", element)
        if n >= 2:
            report.check(
                tables["degenerate"][n] == tables["late"][n].direct_sum(tables["quandle"][n - 1]),
                "H^D_n = H^L_n + H^Q_{n-1}",
                element,
            )


SUITE_RUNNERS: Dict[str, Callable[..., SuiteReport]] = {
    "complex": complex_suite,
    "dgb": dgb_suite,
    "homotopy": homotopy_suite,
    "dendriform": dendriform_suite,
    "zinbiel": zinbiel_suite,
    "action": action_suite,
    "splitting": splitting_suite,
}


def _suite_options(suite: str, coeff: Optional[CoefficientSystem]) -> Dict[str, Any]:
    if coeff is None:
        return {}
    if suite == "complex":
        return {"xsets": [coeff.action] if coeff.kind == "xset" else []}
    return {"modulus": coeff.modulus}


def run_suite(
    name: str,
    shelf: FiniteShelf,
    max_degree: int,
    coeff: Optional[CoefficientSystem] = None,
) -> List[SuiteReport]:
    """Run one suite (or all of them for ``name == "all"``).

    Args:
        name: Suite name or "all".
        shelf: The shelf under test.
        max_degree: Degree cap passed to every suite.
        coeff: Coefficients chosen by the caller. An X-set is added to the
            complex suite, and a modulus moves the cochain-level suites to F_p.

    Raises:
        InputError: On an unknown suite name.
        AxiomFailure: If the table is not a shelf.
    """
    names = SUITES if name == "all" else [name]
    unknown = [n for n in names if n not in SUITE_RUNNERS]
    if unknown:
        raise InputError(f"Unknown suite: {unknown[0]} (choose from {', '.join(SUITES)} or all)")
    shelf.require_shelf()
    reports = []
    for suite in names:
        start = time.time()
        reports.append(SUITE_RUNNERS[suite](shelf, max_degree, **_suite_options(suite, coeff)))
        LOGGER.info("%s suite: %d checks in %.2fs", suite, reports[-1].checked, time.time() - start)
    return reports
