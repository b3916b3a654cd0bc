"""Homology of chain complexes, cross-checked against rational ranks."""

import random

import pytest

from momentangle import complexes as cx
from momentangle.errors import NotAComplex, NotACycle
from momentangle.fixtures import projective_plane
from momentangle.homology import (GradedChainComplex, HomologyGroup,
                                  chain_vector, direct_sum, homology_basis,
                                  homology_of, nonzero_groups,
                                  reduced_simplicial_homology,
                                  simplicial_chain_complex)
from momentangle.snf import mat_vec

from test_snf import rational_rank


def test_group_formatting():
    assert str(HomologyGroup(0)) == "0"
    assert str(HomologyGroup(2)) == "Z^2"
    assert str(HomologyGroup(1, (2, 4))) == "Z + Z/2 + Z/4"
    with pytest.raises(ValueError):
        HomologyGroup(0, (4, 2))


def test_direct_sum_invariant_factors():
    total = direct_sum([HomologyGroup(1, (2,)), HomologyGroup(0, (2, 6)),
                        HomologyGroup(2, (9,))])
    assert total.rank == 3
    assert total.torsion == (2, 6, 18)


def test_sphere_homology():
    S = cx.boundary_simplex((1, 2, 3, 4))
    groups = nonzero_groups(reduced_simplicial_homology(S))
    assert groups == {2: HomologyGroup(1)}


def test_projective_plane_torsion():
    groups = nonzero_groups(reduced_simplicial_homology(projective_plane()))
    assert groups == {1: HomologyGroup(0, (2,))}


def test_contractible():
    K = cx.simplex((1, 2, 3))
    assert nonzero_groups(reduced_simplicial_homology(K)) == {}


def test_boundary_squared_is_checked():
    bad = GradedChainComplex({0: ["a"], 1: ["b"], 2: ["c"]},
                             {1: [[1]], 2: [[1]]})
    with pytest.raises(NotAComplex):
        bad.validate()


def test_euler_characteristic_matches_ranks():
    rng = random.Random(11)
    for _ in range(20):
        K = cx.random_complex(5, rng)
        C = simplicial_chain_complex(K)
        groups = homology_of(C)
        assert C.euler_characteristic() == sum(
            (-1) ** d * g.rank for d, g in groups.items())


def test_ranks_against_rational_oracle():
    rng = random.Random(3)
    for _ in range(15):
        K = cx.random_complex(5, rng)
        C = simplicial_chain_complex(K)
        for d in C.degrees():
            n = C.dim(d)
            r_out = rational_rank(C.boundary_matrix(d)) if C.dim(d - 1) else 0
            r_in = rational_rank(C.boundary_matrix(d + 1)) if C.dim(d + 1) else 0
            assert homology_of(C, [d])[d].rank == n - r_out - r_in


def test_homology_basis_representatives_are_cycles():
    K = projective_plane()
    C = simplicial_chain_complex(K)
    basis = homology_basis(C, 1)
    assert basis.group == HomologyGroup(0, (2,))
    (rep,) = basis.representatives
    assert not any(mat_vec(C.boundary_matrix(1), rep))
    assert basis.class_of(rep) == [1]
    # doubling a Z/2 generator gives the zero class
    assert basis.is_zero_class([2 * x for x in rep])


def test_class_of_rejects_non_cycles():
    C = simplicial_chain_complex(cx.simplex((1, 2)))
    basis = homology_basis(C, 0)
    with pytest.raises(NotACycle):
        basis.class_of(chain_vector({cx.to_bits((1,)): 1}, C.basis[0]))


def test_chain_vector_unknown_label():
    with pytest.raises(KeyError):
        chain_vector({"x": 1}, ["a", "b"])
