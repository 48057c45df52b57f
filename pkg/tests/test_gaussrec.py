import math
from fractions import Fraction

import numpy as np
import pytest
import sympy

from torus_wrt import gaussrec
from torus_wrt.gaussrec import (
    BranchAuditError,
    GaussSumProblem,
    IntegralLattice,
    ReciprocityPreconditionError,
    check_conditions,
    coset_key,
    enumerate_quotient,
    gauss_sum_1d,
    lattice_gauss_lhs,
    lattice_gauss_rhs,
    random_problem,
    random_scalar_triple,
    reciprocity_rhs_1d,
    smith_normal_form,
)

ROOT3 = math.sqrt(3)


def _line(B, psi, r, audit=False):
    return GaussSumProblem(IntegralLattice.standard(1), ((B,),), (Fraction(psi),), r, audit=audit)


def test_scalar_sum_and_reciprocal_side():
    assert gauss_sum_1d(2, 0, 3) == pytest.approx(1j * ROOT3)
    assert reciprocity_rhs_1d(2, 0, 3) == pytest.approx(1j * ROOT3)


@pytest.mark.parametrize("triple", [(1, 0, 3), (0, 2, 4), (2, 1, 0)])
def test_scalar_preconditions(triple):
    with pytest.raises(ReciprocityPreconditionError):
        gauss_sum_1d(*triple)


def test_seeded_scalar_reciprocity():
    rng = np.random.default_rng(7)
    for _ in range(200):
        a, b, c = random_scalar_triple(rng)
        assert (a * c + b) % 2 == 0
        assert gauss_sum_1d(a, b, c) == pytest.approx(reciprocity_rhs_1d(a, b, c), abs=1e-9)


@pytest.mark.parametrize(
    "B, psi, r, expected",
    [
        (2, 0, 3, 1j * ROOT3),
        (2, Fraction(1, 3), 3, (3 - 1j * ROOT3) / 2),
        (-2, 0, 3, -1j * ROOT3),
        (2, 0, -3, -1j * ROOT3),
    ],
)
def test_rank_one_lattice_sums(B, psi, r, expected):
    problem = _line(B, psi, r)
    assert lattice_gauss_lhs(problem) == pytest.approx(expected)
    assert lattice_gauss_rhs(problem) == pytest.approx(expected)


def test_a2_root_lattice_with_doubled_form():
    problem = GaussSumProblem(IntegralLattice.a2_root(), ((2, 0), (0, 2)), (), 3)
    assert check_conditions(problem) == []
    assert lattice_gauss_lhs(problem) == pytest.approx(-3j)
    assert lattice_gauss_rhs(problem) == pytest.approx(-3j)


def test_a2_root_lattice_rejects_even_modulus():
    with pytest.raises(ReciprocityPreconditionError, match="Integrality"):
        GaussSumProblem(IntegralLattice.a2_root(), ((2, 0), (0, 2)), (), 2)


def test_problem_validation():
    lattice = IntegralLattice.standard(2)
    with pytest.raises(ReciprocityPreconditionError):
        GaussSumProblem(lattice, ((2,),), (), 3)
    with pytest.raises(ReciprocityPreconditionError):
        GaussSumProblem(lattice, ((2, 2), (0, 2)), (), 2)
    with pytest.raises(ReciprocityPreconditionError):
        GaussSumProblem(lattice, ((2, 2), (2, 2)), (), 2)
    with pytest.raises(ReciprocityPreconditionError):
        _line(2, 0, 0)
    with pytest.raises(ReciprocityPreconditionError):
        IntegralLattice.from_rows([[1, 0], [0, -1]])


def test_weight_lattice_is_inverse_cartan():
    lattice = IntegralLattice.weight_lattice(3)
    assert lattice.gram_matrix * IntegralLattice.a2_root().gram_matrix == sympy.eye(2)
    assert lattice.volume * lattice.dual_volume == pytest.approx(1.0)


def test_smith_normal_form_transforms():
    matrix = sympy.Matrix([[2, 4], [6, 8]])
    diagonal, left, right = smith_normal_form(matrix)
    assert left * matrix * right == diagonal
    assert (diagonal[0, 0], diagonal[1, 1]) == (2, 4)
    assert diagonal[0, 1] == diagonal[1, 0] == 0
    assert abs(left.det()) == 1 and abs(right.det()) == 1


def test_quotient_enumeration_counts_cosets():
    matrix = [[2, 1], [0, 3]]
    representatives = enumerate_quotient(matrix)
    assert len(representatives) == 6
    assert len({coset_key(matrix, v) for v in representatives}) == 6
    assert coset_key(matrix, (1, 3)) == coset_key(matrix, (0, 0))
    assert coset_key(matrix, (3, 3)) == coset_key(matrix, (0, 0))
    with pytest.raises(ReciprocityPreconditionError):
        enumerate_quotient([[1, 2], [2, 4]])


def test_seeded_lattice_reciprocity():
    rng = np.random.default_rng(11)
    for _ in range(25):
        problem = random_problem(rng)
        lhs = lattice_gauss_lhs(problem)
        assert lattice_gauss_rhs(problem) == pytest.approx(lhs, abs=1e-9 * max(1.0, abs(lhs)))


def test_audit_catches_a_wrong_branch(monkeypatch):
    problem = _line(2, 0, 3, audit=True)
    assert lattice_gauss_rhs(problem) == pytest.approx(1j * ROOT3)

    original = gaussrec.det_factor
    monkeypatch.setattr(gaussrec, "det_factor", lambda p: -original(p))
    with pytest.raises(BranchAuditError):
        lattice_gauss_rhs(problem)
