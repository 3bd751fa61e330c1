import numpy as np
import pytest

from rackhom.chain_complex import ChainBasisElement
from rackhom.errors import InputError, UnsupportedOperation
from rackhom.products import (
    COMMUTATIVITY_SIGN,
    ZINBIEL_SIGN,
    Cochain,
    CohomologyClass,
    action_contraction,
    coboundary,
    cocycles,
    cup,
    half_cup,
    induced_coassociativity_defect,
    induced_counit_defect,
    induced_coproduct,
    is_coboundary,
    is_cocycle,
    random_cochain,
    witness,
    x_action,
)
from rackhom.shelf import CoefficientSystem


@pytest.fixture
def rng():
    return np.random.default_rng(7)


@pytest.fixture
def coeff(d3):
    return CoefficientSystem.trivial(d3)


class TestCochain:
    def test_wrong_number_of_values(self, d3, coeff):
        with pytest.raises(InputError):
            Cochain(d3, coeff, 1, (1, 2))

    def test_values_are_reduced_mod_p(self, d3):
        f = Cochain(d3, CoefficientSystem.trivial(d3, 3), 1, (4, -1, 3))
        assert f.values == (1, 2, 0)

    def test_evaluation_and_json(self, d3, coeff):
        f = Cochain.from_table(d3, coeff, 2, {ChainBasisElement(0, (0, 1)): 5})
        assert f((0, 1)) == 5 and f((1, 0)) == 0
        assert f.to_json()["values"]["0,1"] == 5
        with pytest.raises(InputError):
            f((0,))

    def test_mismatched_groups(self, d3, coeff):
        with pytest.raises(InputError):
            Cochain.zero(d3, coeff, 1) + Cochain.zero(d3, coeff, 2)


class TestCoboundary:
    def test_degree_one_formula(self, d3, coeff, rng):
        f = random_cochain(d3, coeff, 1, rng)
        df = coboundary(d3, coeff, f)
        for x in d3.elements():
            for y in d3.elements():
                assert df((x, y)) == f((x,)) - f((d3.op(x, y),))

    def test_squares_to_zero(self, d3, coeff, rng):
        f = random_cochain(d3, coeff, 2, rng)
        assert coboundary(d3, coeff, coboundary(d3, coeff, f)).is_zero()

    def test_membership(self, d3, coeff, rng):
        g = random_cochain(d3, coeff, 1, rng)
        f = coboundary(d3, coeff, g)
        preimage = is_coboundary(d3, coeff, f)
        assert preimage is not None
        assert coboundary(d3, coeff, preimage) == f

    def test_nonzero_first_cocycle_is_not_a_coboundary(self, d3, coeff):
        (z,) = cocycles(d3, coeff, 1)
        assert is_cocycle(z)
        assert is_coboundary(d3, coeff, z) is None
        assert not CohomologyClass(z).is_zero()

    def test_degree_zero_membership(self, d3, coeff):
        with pytest.raises(InputError):
            is_coboundary(d3, coeff, Cochain.zero(d3, coeff, 0))

    def test_cohomology_class_needs_a_cocycle(self, d3, coeff):
        f = Cochain.from_table(d3, coeff, 1, {ChainBasisElement(0, (0,)): 1})
        with pytest.raises(InputError):
            CohomologyClass(f)

    def test_same_class(self, d3, coeff, rng):
        z = cocycles(d3, coeff, 2)[0]
        shifted = z + coboundary(d3, coeff, random_cochain(d3, coeff, 1, rng))
        assert CohomologyClass(z).same_class(CohomologyClass(shifted))


class TestCup:
    def test_degree_one_one_formula(self, d3, coeff, rng):
        f, g = random_cochain(d3, coeff, 1, rng), random_cochain(d3, coeff, 1, rng)
        product = cup(d3, coeff, f, g)
        for x in d3.elements():
            for y in d3.elements():
                assert product((x, y)) == -f((x,)) * g((y,)) + f((y,)) * g((d3.op(x, y),))

    def test_associative(self, d3, coeff, rng):
        f, g, k = (random_cochain(d3, coeff, 1, rng) for _ in range(3))
        assert cup(d3, coeff, cup(d3, coeff, f, g), k) == cup(d3, coeff, f, cup(d3, coeff, g, k))

    def test_coboundary_is_a_derivation(self, d3, coeff, rng):
        for p, q in ((1, 1), (1, 2), (2, 1)):
            f, g = random_cochain(d3, coeff, p, rng), random_cochain(d3, coeff, q, rng)
            lhs = coboundary(d3, coeff, cup(d3, coeff, f, g))
            rhs = cup(d3, coeff, coboundary(d3, coeff, f), g) + (-1) ** p * cup(d3, coeff, f, coboundary(d3, coeff, g))
            assert lhs == rhs

    def test_unit(self, d3, coeff, rng):
        one = Cochain(d3, coeff, 0, (1,))
        f = random_cochain(d3, coeff, 2, rng)
        assert cup(d3, coeff, one, f) == f
        assert cup(d3, coeff, f, one) == f

    def test_needs_trivial_coefficients(self, d3):
        coeff = CoefficientSystem.self_action(d3)
        f = Cochain.zero(d3, coeff, 1)
        with pytest.raises(UnsupportedOperation):
            cup(d3, coeff, f, f)

    def test_half_cups_sum_to_the_cup(self, d3, coeff, rng):
        f, g = random_cochain(d3, coeff, 1, rng), random_cochain(d3, coeff, 2, rng)
        assert half_cup(d3, f, g, "left") + half_cup(d3, f, g, "right") == cup(d3, coeff, f, g)

    def test_half_cup_needs_positive_degrees(self, d3, coeff):
        with pytest.raises(UnsupportedOperation):
            half_cup(d3, Cochain.zero(d3, coeff, 0), Cochain.zero(d3, coeff, 1), "left")


class TestWitnesses:
    def test_commutativity_on_cocycles(self, d3, coeff):
        z1 = cocycles(d3, coeff, 1)
        z2 = cocycles(d3, coeff, 2)
        for f, g in [(a, b) for a in z1 for b in z1 + z2]:
            p, q = f.degree, g.degree
            defect = cup(d3, coeff, f, g) - (-1) ** (p * q) * cup(d3, coeff, g, f)
            assert defect == COMMUTATIVITY_SIGN * coboundary(d3, coeff, witness(d3, f, g, "commutativity"))

    def test_degree_one_witness_is_pointwise_product(self, d3, coeff, rng):
        f, g = random_cochain(d3, coeff, 1, rng), random_cochain(d3, coeff, 1, rng)
        w = witness(d3, f, g, "commutativity")
        assert all(w((x,)) == f((x,)) * g((x,)) for x in d3.elements())

    def test_zinbiel_flip_on_cocycles(self, d3, coeff):
        z1 = cocycles(d3, coeff, 1)
        z2 = cocycles(d3, coeff, 2)
        for f, g in [(a, b) for a in z1 for b in z1 + z2] + [(b, a) for a in z1 for b in z2]:
            p, q = f.degree, g.degree
            defect = half_cup(d3, f, g, "right") - (-1) ** (p * q) * half_cup(d3, g, f, "left")
            assert defect == ZINBIEL_SIGN * coboundary(d3, coeff, witness(d3, f, g, "zinbielity"))

    def test_unknown_kind(self, d3, coeff):
        f = Cochain.zero(d3, coeff, 1)
        with pytest.raises(InputError):
            witness(d3, f, f, "bogus")


class TestAction:
    def test_action_is_trivial_in_cohomology(self, d3, coeff):
        for f in cocycles(d3, coeff, 2):
            for x in d3.elements():
                g = action_contraction(d3, x, f)
                assert coboundary(d3, coeff, g) == x_action(d3, x, f) - f

    def test_contraction_needs_a_cocycle(self, d3, coeff):
        f = Cochain.from_table(d3, coeff, 1, {ChainBasisElement(0, (0,)): 1})
        with pytest.raises(InputError):
            action_contraction(d3, 0, f)


class TestInducedCoproduct:
    def test_dihedral3_mod_3(self, d3):
        delta = induced_coproduct(d3, 3, 3)
        assert [delta.dimension(i) for i in range(4)] == [1, 1, 1, 2]
        assert induced_counit_defect(delta) is None
        assert induced_coassociativity_defect(delta) is None
        assert delta.to_json()["dimensions"] == [1, 1, 1, 2]

    def test_independent_of_complement(self, d3):
        first = induced_coproduct(d3, 2, 2, np.random.default_rng(1))
        second = induced_coproduct(d3, 2, 2, np.random.default_rng(2))
        assert first.constants == second.constants

    def test_composite_modulus(self, d3):
        with pytest.raises(InputError):
            induced_coproduct(d3, 4, 1)
