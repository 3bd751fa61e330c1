import itertools

import pytest
from hypothesis import given, strategies as st
from sympy.combinatorics import Permutation

from rackhom.bialgebra import (
    HBAR_SIGN,
    BarElement,
    BarTensor,
    coproduct,
    coproduct_word,
    counit,
    deg0,
    dendri,
    dendri_word,
    diff_word,
    gen,
    hbar_defect,
    homotopy_h_word,
    homotopy_hbar_word,
    normalize_word,
    resolve_hbar_sign,
    right_action,
    tau,
    tensor_diff,
    unshuffle_sign,
    words,
)
from rackhom.errors import InputError, UnsupportedOperation
from rackhom.shelf import classify


def _t(*pairs):
    return BarTensor.from_pairs(((tuple(a), tuple(b)), c) for a, b, c in pairs)


class TestCanonicalForm:
    def test_degree_zero_letters_act_on_the_left(self, d3):
        word = normalize_word(d3, [gen(0), deg0(1)])
        assert word.aword == (1,)
        assert word.etuple == (d3.op(0, 1),)

    def test_leading_degree_zero_letter_is_kept(self, d3):
        word = normalize_word(d3, [deg0(1), gen(0), gen(2)])
        assert word.aword == (1,)
        assert word.etuple == (0, 2)

    def test_out_of_range_letter(self, d3):
        with pytest.raises(InputError):
            normalize_word(d3, [gen(3)])


class TestElements:
    def test_arithmetic(self):
        a = BarElement.from_pairs(2, [((0, 1), 2), ((1, 1), 1)])
        b = BarElement.from_pairs(2, [((0, 1), -2)])
        assert (a + b) == BarElement.basis((1, 1))
        assert (a - a).is_zero()
        assert (3 * BarElement.basis((0,))).terms == {(0,): 3}

    def test_degree_mismatch(self):
        with pytest.raises(InputError):
            BarElement.from_pairs(2, [((0,), 1)])
        with pytest.raises(InputError):
            BarElement.basis((0,)) + BarElement.basis((0, 1))

    def test_counit_and_action(self, d3):
        assert counit(BarElement.one()) == 1
        assert counit(BarElement.basis((0,))) == 0
        assert right_action(d3, BarElement.basis((0, 1)), 2) == BarElement.basis((d3.op(0, 2), d3.op(1, 2)))


class TestDifferential:
    def test_degree_one_is_zero(self, d3):
        assert diff_word(d3, (1,)).is_zero()

    def test_degree_two(self, d3):
        assert diff_word(d3, (0, 1)) == BarElement.from_pairs(1, [((0,), -1), ((d3.op(0, 1),), 1)])

    def test_squares_to_zero(self, d3):
        for w in words(d3, 3):
            total = BarElement(1)
            for v, c in diff_word(d3, w).terms.items():
                total = total + c * diff_word(d3, v)
            assert total.is_zero()


class TestCoproduct:
    def test_generator(self, d3):
        assert coproduct_word(d3, (1,)) == _t(((1,), (), 1), ((), (1,), 1))

    def test_degree_two(self, d3):
        x, y = 0, 1
        expected = _t(
            ((x, y), (), 1),
            ((x,), (y,), 1),
            ((y,), (d3.op(x, y),), -1),
            ((), (x, y), 1),
        )
        assert coproduct_word(d3, (x, y)) == expected

    def test_unshuffle_agrees_on_a_rack(self, d3):
        for w in words(d3, 3):
            assert coproduct_word(d3, w, "unshuffle") == coproduct_word(d3, w)

    def test_unshuffle_needs_a_rack(self, d3):
        shelf = classify([[0, 0], [0, 1]])
        assert shelf.is_shelf and not shelf.is_rack
        with pytest.raises(UnsupportedOperation):
            coproduct(shelf, BarElement.basis((0, 1)), "unshuffle")

    def test_unknown_method(self, d3):
        with pytest.raises(InputError):
            coproduct_word(d3, (0,), "bogus")

    @given(n=st.integers(min_value=0, max_value=6), data=st.data())
    def test_unshuffle_sign_is_a_permutation_sign(self, n, data):
        subset = data.draw(st.sets(st.integers(min_value=1, max_value=n), max_size=n)) if n else set()
        rest = [c for c in range(1, n + 1) if c not in subset]
        order = [c - 1 for c in rest] + [s - 1 for s in sorted(subset)]
        expected = Permutation(order).signature() if n else 1
        assert unshuffle_sign(n, subset) == expected

    def test_tau(self):
        assert tau(_t(((0,), (1,), 1))) == _t(((1,), (0,), -1))
        assert tau(_t(((0, 1), (), 2))) == _t(((), (0, 1), 2))

    def test_coderivation(self, d3):
        for w in words(d3, 3):
            image = BarTensor()
            for v, c in diff_word(d3, w).terms.items():
                image = image + c * coproduct_word(d3, v)
            assert image == tensor_diff(d3, coproduct_word(d3, w))


class TestHalfCoproducts:
    def test_degree_two(self, d3):
        x, y = 0, 1
        assert dendri_word(d3, (x, y), "left") == _t(((x, y), (), 1), ((x,), (y,), 1))
        assert dendri_word(d3, (x, y), "right") == _t(((y,), (d3.op(x, y),), -1), ((), (x, y), 1))

    def test_sum_is_the_coproduct(self, d3):
        for w in itertools.chain(words(d3, 1), words(d3, 3)):
            assert dendri_word(d3, w, "left") + dendri_word(d3, w, "right") == coproduct_word(d3, w)

    def test_degree_zero_is_unsupported(self, d3):
        with pytest.raises(UnsupportedOperation):
            dendri(d3, BarElement.one(), "left")

    def test_bad_side(self, d3):
        with pytest.raises(InputError):
            dendri_word(d3, (0,), "up")


class TestHomotopies:
    def test_h_closed_forms(self, d3):
        assert homotopy_h_word(d3, (2,)) == _t(((2,), (2,), 1))
        x, y = 1, 2
        expected = _t(
            ((y,), (x, y), 1),
            ((x,), (x, y), 1),
            ((x, y), (d3.op(x, y),), -1),
            ((x, y), (y,), -1),
        )
        assert homotopy_h_word(d3, (x, y)) == expected

    def test_h_relation(self, d3):
        for n in (1, 2, 3):
            for w in words(d3, n):
                lhs = tensor_diff(d3, homotopy_h_word(d3, w))
                for v, c in diff_word(d3, w).terms.items():
                    lhs = lhs + c * homotopy_h_word(d3, v)
                t = coproduct_word(d3, w)
                assert lhs == t - tau(t)

    def test_hbar_degree_two(self, d3):
        assert homotopy_hbar_word(d3, (0, 1)) == _t(((1,), (0, 1), 1))
        assert homotopy_hbar_word(d3, (0,)).is_zero()

    def test_hbar_relation(self, d3):
        for n in (1, 2, 3):
            for w in words(d3, n):
                lhs, rhs = hbar_defect(d3, w)
                assert lhs == HBAR_SIGN * rhs

    def test_resolved_sign(self, d3, t2):
        assert resolve_hbar_sign(d3, 3) == HBAR_SIGN
        assert resolve_hbar_sign(t2, 3) == HBAR_SIGN
