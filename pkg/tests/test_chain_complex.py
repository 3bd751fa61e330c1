import pytest

from rackhom.chain_complex import (
    Chain,
    ChainBasisElement,
    basis,
    basis_boundary,
    basis_index,
    boundary,
    chain_boundary,
    cocycle_basis,
    face,
    face_word,
    homology_table,
    multi_face_word,
)
from rackhom.errors import InputError, ResourceLimitExceeded
from rackhom.exactlin import HomologyGroup, matmul, is_zero, rank
from rackhom.shelf import CoefficientSystem


def _e(*word, r=0):
    return ChainBasisElement(r, tuple(word))


class TestFaces:
    def test_face_word(self, d3):
        assert face_word(d3, 0, 1, (0, 1)) == (1,)
        assert face_word(d3, 1, 2, (0, 1)) == (d3.op(0, 1),)
        assert face_word(d3, 1, 1, (0, 1)) == (1,)

    def test_face_index_out_of_range(self, d3):
        with pytest.raises(InputError):
            face_word(d3, 0, 3, (0, 1))
        with pytest.raises(InputError):
            face_word(d3, 2, 1, (0, 1))

    def test_multi_face(self, d3):
        assert multi_face_word(d3, 0, [1, 3], (0, 1, 2)) == (1,)
        assert multi_face_word(d3, 1, [2, 3], (0, 1, 2)) == (d3.op(d3.op(0, 1), 2),)

    def test_side_one_moves_the_coefficient(self, d3):
        coeff = CoefficientSystem.self_action(d3)
        b = _e(1, 2, r=0)
        assert face(d3, coeff, 1, 2, b) == _e(d3.op(1, 2), r=d3.op(0, 2))
        assert face(d3, coeff, 0, 2, b) == _e(1, r=0)


class TestBoundary:
    def test_degree_one_boundary_vanishes(self, d3, trivial_coeff):
        assert basis_boundary(d3, trivial_coeff(d3), _e(2)).is_zero()

    def test_degree_two(self, d3, trivial_coeff):
        # the (y) terms cancel: ∂(x, y) = (x◁y) − (x)
        b = basis_boundary(d3, trivial_coeff(d3), _e(0, 1))
        assert b == Chain.from_pairs(1, [(_e(0), -1), (_e(2), 1)])

    def test_boundary_squares_to_zero(self, d3, d4, swap):
        for shelf in (d3, d4, swap):
            for coeff in (CoefficientSystem.trivial(shelf), CoefficientSystem.self_action(shelf)):
                for n in (1, 2, 3):
                    product = matmul(boundary(shelf, coeff, n), boundary(shelf, coeff, n + 1))
                    assert is_zero(product)

    def test_chain_boundary_is_linear(self, d3, trivial_coeff):
        coeff = trivial_coeff(d3)
        chain = Chain.from_pairs(3, [(_e(0, 1, 2), 2), (_e(1, 1, 0), -1)])
        expected = Chain.from_pairs(
            2,
            [(t, 2 * c) for t, c in basis_boundary(d3, coeff, _e(0, 1, 2)).terms.items()]
            + [(t, -c) for t, c in basis_boundary(d3, coeff, _e(1, 1, 0)).terms.items()],
        )
        assert chain_boundary(d3, coeff, chain) == expected

    def test_rank_of_second_boundary(self, d3, trivial_coeff):
        assert rank(boundary(d3, trivial_coeff(d3), 2)) == 2

    def test_degree_zero_boundary_is_empty(self, d3, trivial_coeff):
        assert boundary(d3, trivial_coeff(d3), 0).shape == (0, 1)


class TestBases:
    def test_basis_order_and_index(self, d3):
        coeff = CoefficientSystem.self_action(d3)
        cells = basis(d3, coeff, 2)
        assert len(cells) == 27
        assert cells[0] == _e(0, 0, r=0)
        assert all(basis_index(d3, coeff, b) == i for i, b in enumerate(cells))

    def test_mixed_degree_chain_is_rejected(self):
        with pytest.raises(InputError):
            Chain.from_pairs(2, [(_e(0), 1)])

    def test_basis_cap(self, d4, trivial_coeff):
        with pytest.raises(ResourceLimitExceeded) as info:
            basis(d4, trivial_coeff(d4), 6)
        assert info.value.dimension == 4**6


class TestHomology:
    def test_dihedral3_homology(self, d3, trivial_coeff):
        groups = homology_table(d3, trivial_coeff(d3), 3)
        assert groups == [
            HomologyGroup(1),
            HomologyGroup(1),
            HomologyGroup(1),
            HomologyGroup(1, (3,)),
        ]

    def test_trivial_quandle_homology_is_free(self, t2, trivial_coeff):
        groups = homology_table(t2, trivial_coeff(t2), 2)
        assert [g.free_rank for g in groups] == [1, 2, 4]
        assert all(not g.torsion for g in groups)

    def test_first_cohomology_rank(self, d3, trivial_coeff):
        groups = homology_table(d3, trivial_coeff(d3), 1, dual=True)
        assert groups[1].free_rank == 1

    def test_mod_3_sees_the_torsion(self, d3, trivial_coeff):
        groups = homology_table(d3, trivial_coeff(d3), 3, modulus=3)
        assert groups[3] == HomologyGroup(2)

    @pytest.mark.parametrize("name", ["d3", "d4", "t2", "swap"])
    @pytest.mark.parametrize("kind", ["trivial", "self"])
    def test_free_rank_matches_rational_ranks(self, request, name, kind):
        shelf = request.getfixturevalue(name)
        coeff = CoefficientSystem.trivial(shelf) if kind == "trivial" else CoefficientSystem.self_action(shelf)
        groups = homology_table(shelf, coeff, 3)
        for n, group in enumerate(groups):
            d_out, d_in = boundary(shelf, coeff, n), boundary(shelf, coeff, n + 1)
            assert group.free_rank == d_out.shape[1] - rank(d_out) - rank(d_in)

    @pytest.mark.parametrize("name", ["d3", "d4", "t2"])
    @pytest.mark.parametrize("p", [2, 3])
    def test_field_cohomology_and_homology_have_equal_dimensions(self, request, name, p):
        shelf = request.getfixturevalue(name)
        for coeff in (CoefficientSystem.trivial(shelf), CoefficientSystem.self_action(shelf)):
            homology = homology_table(shelf, coeff, 3, modulus=p)
            cohomology = homology_table(shelf, coeff, 3, dual=True, modulus=p)
            assert [g.free_rank for g in cohomology] == [g.free_rank for g in homology]

    def test_cocycle_basis_dimension(self, d3, trivial_coeff):
        assert len(cocycle_basis(d3, trivial_coeff(d3), 1)) == 1
        with pytest.raises(InputError):
            cocycle_basis(d3, trivial_coeff(d3), 0)

    def test_degree_above_cap(self, d3, trivial_coeff):
        with pytest.raises(ResourceLimitExceeded):
            homology_table(d3, trivial_coeff(d3), 7)
