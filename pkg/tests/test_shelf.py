import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from rackhom.errors import AxiomFailure, InputError, UnsupportedOperation
from rackhom.shelf import (
    CoefficientSystem,
    builtin,
    classify,
    conjugation,
    dihedral,
    orbits,
    permutation,
    remarkable_map,
    trivial,
    validate_xset,
)


class TestClassify:
    def test_dihedral3_is_a_quandle(self, d3):
        assert d3.is_shelf and d3.is_rack and d3.is_spindle and d3.is_quandle
        assert d3.witness is None
        assert d3.table[0] == (0, 2, 1)

    def test_trivial_is_a_quandle(self, t2):
        assert t2.is_quandle
        assert t2.table == ((0, 0), (1, 1))

    def test_permutation_rack_is_not_a_spindle(self, swap):
        assert swap.is_shelf and swap.is_rack
        assert not swap.is_spindle and not swap.is_quandle

    def test_non_distributive_table_reports_first_witness(self):
        shelf = classify([[1, 0], [0, 1]])
        assert not shelf.is_shelf
        assert not shelf.is_rack and not shelf.is_spindle
        assert shelf.witness == (0, 0, 0)
        with pytest.raises(AxiomFailure) as info:
            shelf.require_shelf()
        assert info.value.witness == (0, 0, 0)

    def test_constant_table_is_a_shelf_but_not_a_rack(self):
        shelf = classify([[0, 0], [0, 0]])
        assert shelf.is_shelf
        assert not shelf.is_rack
        assert not shelf.is_spindle

    @pytest.mark.parametrize(
        "table",
        [
            [],
            [[0, 1], [0]],
            [[0, 5], [1, 1]],
            [[0, -1], [1, 1]],
            [[0, "1"], [1, 1]],
        ],
    )
    def test_malformed_tables_are_rejected(self, table):
        with pytest.raises(InputError):
            classify(table)

    def test_requirements_raise_unsupported(self, swap):
        with pytest.raises(UnsupportedOperation):
            swap.require_spindle("test")
        with pytest.raises(UnsupportedOperation):
            classify([[0, 0], [0, 0]]).require_rack("test")

    @settings(max_examples=25, deadline=None)
    @given(n=st.integers(min_value=1, max_value=6))
    def test_dihedral_flags_match_parity(self, n):
        shelf = dihedral(n)
        assert shelf.is_shelf and shelf.is_spindle
        # x ↦ 2y − x is always a bijection
        assert shelf.is_rack

    def test_array_is_a_copy(self, d3):
        arr = d3.array
        arr[0, 0] = 2
        assert d3.op(0, 0) == 0
        assert np.array_equal(d3.array[0], [0, 2, 1])

    def test_reclassifying_a_shelf(self, d3, swap):
        assert classify(d3) == d3
        assert classify(swap) == swap
        again = classify(classify([[1, 0], [0, 1]]))
        assert not again.is_shelf
        assert again.witness == (0, 0, 0)


class TestFamilies:
    def test_builtin_dispatch(self):
        assert builtin("dihedral", 3) == dihedral(3)
        assert builtin("trivial", 2) == trivial(2)
        assert builtin("permutation", [1, 0]) == permutation([1, 0])
        with pytest.raises(InputError):
            builtin("free", 3)

    def test_permutation_must_be_a_permutation(self):
        with pytest.raises(InputError):
            permutation([0, 0])

    def test_conjugation_of_abelian_group_is_trivial(self):
        assert conjugation([[0, 1], [1, 0]]).table == ((0, 0), (1, 1))

    def test_conjugation_of_s3_is_a_quandle(self):
        perms = [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)]
        index = {p: i for i, p in enumerate(perms)}
        table = [[index[tuple(a[b[k]] for k in range(3))] for b in perms] for a in perms]
        shelf = conjugation(table)
        assert shelf.is_quandle
        assert orbits(shelf) == [[0], [1, 2, 3], [4, 5]]

    def test_conjugation_rejects_non_groups(self):
        with pytest.raises(InputError, match="associativity|identity|inverse"):
            conjugation([[0, 0], [0, 0]])


class TestOrbitsAndActions:
    def test_orbits(self, d3, t2, d4):
        assert orbits(d3) == [[0, 1, 2]]
        assert orbits(t2) == [[0], [1]]
        assert orbits(d4) == [[0, 2], [1, 3]]

    @pytest.mark.parametrize("n", range(1, 9))
    def test_dihedral_orbits_follow_parity(self, n):
        parts = orbits(dihedral(n))
        assert len(parts) == (1 if n % 2 else 2)
        assert sorted(x for part in parts for x in part) == list(range(n))

    def test_orbits_need_a_rack(self):
        with pytest.raises(UnsupportedOperation):
            orbits(classify([[0, 0], [0, 0]]))

    def test_act_iterates_right_translations(self, d3):
        assert d3.act(0, (1, 2)) == d3.op(d3.op(0, 1), 2) == 2
        assert d3.act(1, ()) == 1

    def test_remarkable_map(self, d3):
        assert remarkable_map(d3, (0, 1, 2)) == (2, 0, 2)
        assert remarkable_map(d3, ()) == ()

    @pytest.mark.parametrize("name", ["d3", "d4", "swap"])
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_remarkable_map_is_a_bijection_on_racks(self, request, name, n):
        shelf = request.getfixturevalue(name)
        images = {remarkable_map(shelf, w) for w in itertools.product(shelf.elements(), repeat=n)}
        assert len(images) == shelf.size**n

    def test_self_action_is_an_xset(self, d3):
        action = validate_xset(d3, [list(row) for row in d3.table])
        assert action.size == 3
        assert action.act(0, 1) == 2

    def test_bad_xset_reports_witness(self, d3):
        with pytest.raises(AxiomFailure) as info:
            validate_xset(d3, [[1, 0, 0], [0, 1, 1]])
        assert info.value.witness == (0, 0, 1)

    def test_two_point_action_over_dihedral3(self, d3):
        with pytest.raises(AxiomFailure) as info:
            validate_xset(d3, [[0, 1, 0], [1, 0, 1]])
        assert info.value.witness == (0, 0, 2)
        flip = validate_xset(d3, [[1, 1, 1], [0, 0, 0]])
        assert flip.size == 2
        assert [flip.act(s, 0) for s in (0, 1)] == [1, 0]

    @settings(max_examples=60, deadline=None)
    @given(
        st.integers(min_value=1, max_value=3).flatmap(
            lambda n: st.lists(st.lists(st.integers(0, n - 1), min_size=n, max_size=n), min_size=n, max_size=n)
        )
    )
    def test_table_is_its_own_xset_exactly_for_shelves(self, table):
        shelf = classify(table)
        try:
            validate_xset(shelf, table)
            valid = True
        except AxiomFailure:
            valid = False
        assert valid == shelf.is_shelf

    def test_coefficient_systems(self, d3):
        trivial_coeff = CoefficientSystem.trivial(d3)
        assert trivial_coeff.size == 1
        assert all(trivial_coeff.act(0, y) == 0 for y in d3.elements())
        self_coeff = CoefficientSystem.self_action(d3, 3)
        assert self_coeff.size == 3 and self_coeff.modulus == 3
        assert self_coeff.with_modulus(None).modulus is None
