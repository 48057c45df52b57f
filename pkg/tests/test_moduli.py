import math
from fractions import Fraction

import numpy as np
import pytest

from torus_wrt.asymp import aec_terms_su3
from torus_wrt.moduli import (
    CohomologyDims,
    ConnectionTriple,
    ModuliComponent,
    RelationError,
    adjoint_matrix,
    cocycle_matrix,
    coboundary_matrix,
    cohomology_dims,
    connection_triple_for,
    cs_values,
    growth_rate,
    random_su2,
    su2_components,
    su3_cs_phase_set,
    su3_example_values,
    sun_cs_completely_reducible,
    sun_cs_partially_reducible,
)

IDENTITY = np.eye(2, dtype=complex)


def test_su2_components_odd_shear():
    components = su2_components(3)
    assert [c.kind for c in components] == ["pillowcase", "torus", "point"]
    assert [c.cs for c in components] == [Fraction(0), Fraction(1, 3), Fraction(1, 4)]
    assert components[-1].irreducible


def test_su2_components_even_shear():
    components = su2_components(-4)
    assert [c.kind for c in components] == ["pillowcase", "torus", "pillowcase"]
    assert [c.j for c in components] == [0, 1, 2]
    assert cs_values(-4) == {Fraction(0), Fraction(3, 4)}


def test_su2_components_small_cases():
    assert cs_values(1) == {Fraction(0), Fraction(3, 4)}
    assert cs_values(2) == {Fraction(0), Fraction(1, 2)}
    with pytest.raises(RelationError):
        su2_components(0)


def test_component_serialisation():
    component = ModuliComponent("torus", Fraction(7, 5), j=2)
    assert component.cs == Fraction(2, 5)
    assert component.to_dict() == {"kind": "torus", "cs": "2/5", "irreducible": False, "j": 2}


def test_su3_worked_values():
    zero, three_quarters, two_thirds = Fraction(0), Fraction(3, 4), Fraction(2, 3)
    assert su3_example_values() == [zero] + [three_quarters] * 3 + [two_thirds] * 4 + [zero] * 3


def test_chern_simons_preconditions():
    with pytest.raises(RelationError):
        sun_cs_completely_reducible(3, 1, [Fraction(1, 2), Fraction(1, 2), 0])
    with pytest.raises(RelationError):
        sun_cs_completely_reducible(3, 1, [0, 0])
    with pytest.raises(RelationError):
        sun_cs_partially_reducible(3, 1, [2, 1], [0, 0])
    with pytest.raises(RelationError):
        sun_cs_partially_reducible(3, 1, [1, 2], [0, Fraction(1, 3)])


def test_completely_reducible_value():
    assert sun_cs_completely_reducible(3, 2, [Fraction(1, 2), Fraction(1, 2), -1]) == Fraction(1, 2)


@pytest.mark.parametrize("b", [1, -1, 2, 3, -4])
def test_su3_phase_set_matches_expansion(b):
    assert su3_cs_phase_set(b) == {term.c for term in aec_terms_su3(b)}


def test_su3_phase_set_small_shear():
    assert su3_cs_phase_set(1) == {Fraction(0), Fraction(2, 3), Fraction(3, 4)}


def test_adjoint_of_diagonal_is_rotation():
    phi = 0.3
    g = np.diag([np.exp(1j * phi), np.exp(-1j * phi)])
    expected = np.array(
        [[math.cos(2 * phi), -math.sin(2 * phi), 0], [math.sin(2 * phi), math.cos(2 * phi), 0], [0, 0, 1]]
    )
    assert np.allclose(adjoint_matrix(g), expected)
    assert np.allclose(adjoint_matrix(IDENTITY), np.eye(3))


def test_adjoint_is_a_homomorphism():
    rng = np.random.default_rng(5)
    g, h = random_su2(rng), random_su2(rng)
    assert np.allclose(adjoint_matrix(g @ h), adjoint_matrix(g) @ adjoint_matrix(h))
    assert np.allclose(adjoint_matrix(g) @ adjoint_matrix(g).T, np.eye(3))


def test_triple_rejects_broken_relations():
    B = np.diag([1j, -1j])
    C = np.array([[0, 1], [-1, 0]], dtype=complex)
    with pytest.raises(RelationError):
        ConnectionTriple(IDENTITY, B, C, 1)
    with pytest.raises(RelationError):
        ConnectionTriple(2 * IDENTITY, IDENTITY, IDENTITY, 1)


def test_trivial_connection_dims():
    assert cohomology_dims(ConnectionTriple(IDENTITY, IDENTITY, IDENTITY, -1)) == CohomologyDims(3, 6)


def test_irreducible_point_dims():
    point = su2_components(3)[-1]
    triple = connection_triple_for(point, 3)
    assert 9 - np.linalg.matrix_rank(cocycle_matrix(triple), tol=1e-8) == 3
    assert cohomology_dims(triple) == CohomologyDims(0, 0)


@pytest.mark.parametrize("b, index", [(3, 0), (3, 1), (-5, 2), (4, 2)])
def test_generic_torus_points(b, index):
    component = su2_components(b)[index]
    triple = connection_triple_for(component, b, 0.17, 0.31)
    assert 9 - np.linalg.matrix_rank(cocycle_matrix(triple), tol=1e-8) == 4
    dims = cohomology_dims(triple)
    assert dims == CohomologyDims(1, 2)
    assert dims.growth == Fraction(1, 2)


@pytest.mark.parametrize(
    "b, index, s, t",
    [
        (3, 0, 0.5, 0.5),
        (3, 0, 0.0, 0.5),
        (-2, 0, 0.5, 0.0),
        (-2, 1, 0.5, 0.5),
        (4, 2, 0.5, 0.5),
        (-6, 3, 0.0, 0.0),
    ],
)
def test_central_corners_of_pillowcases(b, index, s, t):
    component = su2_components(b)[index]
    assert component.kind == "pillowcase"
    triple = connection_triple_for(component, b, s, t)
    assert 9 - np.linalg.matrix_rank(cocycle_matrix(triple), tol=1e-8) == 6
    assert cohomology_dims(triple) == CohomologyDims(3, 6)


def test_coboundaries_are_cocycles():
    triple = connection_triple_for(su2_components(-5)[1], -5, 0.2, 0.7)
    assert np.allclose(cocycle_matrix(triple) @ coboundary_matrix(triple), 0)


def test_relator_block_for_diagonal_holonomy():
    component = su2_components(-3)[1]
    triple = connection_triple_for(component, -3, 0.17, 0.31)
    block = cocycle_matrix(triple)[6:9, 0:3]
    assert np.allclose(block, np.diag([0, 0, -3]))


def test_cohomology_is_conjugation_invariant():
    rng = np.random.default_rng(9)
    triple = connection_triple_for(su2_components(5)[2], 5, 0.13, 0.41)
    for _ in range(5):
        moved = triple.conjugate(random_su2(rng))
        assert cohomology_dims(moved) == cohomology_dims(triple)


@pytest.mark.parametrize("b", [1, -2, 3, 6])
def test_growth_rates(b):
    for component in su2_components(b):
        expected = Fraction(0) if component.irreducible else Fraction(1, 2)
        assert growth_rate(component, b, seed=1) == expected
