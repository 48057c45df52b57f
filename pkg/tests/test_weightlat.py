from fractions import Fraction

import pytest

from torus_wrt.weightlat import (
    InnerProductTable,
    LabelError,
    RationalPhase,
    WeightVector,
    YoungDiagram,
    casimir_exponent,
    diagram_to_weight,
    enumerate_diagrams,
    in_level,
    inner_product,
    involution_star,
    level_histogram,
    level_of,
    phase_sum,
    root_of_unity_sum,
    self_dual_diagrams,
    shifted_norm,
    strange_constant,
    weight_to_diagram,
)


def test_enumeration_is_graded_by_size():
    rows = [d.rows for d in enumerate_diagrams(3, 1)]
    assert rows == [(), (1,), (1, 1)]
    assert [d.rows for d in enumerate_diagrams(2, 3)] == [(), (1,), (2,), (3,)]


@pytest.mark.parametrize("N, k, expected", [(2, 5, 6), (3, 2, 6), (4, 3, 20), (3, 0, 1)])
def test_enumeration_size_matches_binomial(N, k, expected):
    assert len(enumerate_diagrams(N, k)) == expected


def test_malformed_diagrams_are_rejected():
    with pytest.raises(LabelError):
        YoungDiagram((1, 2))
    with pytest.raises(LabelError):
        YoungDiagram((2, 0))
    with pytest.raises(LabelError):
        diagram_to_weight(YoungDiagram((1, 1, 1)), 3)
    with pytest.raises(LabelError):
        enumerate_diagrams(1, 3)


def test_from_rows_drops_trailing_zeros():
    assert YoungDiagram.from_rows([3, 1, 0, 0]) == YoungDiagram((3, 1))
    assert str(YoungDiagram.from_rows([0])) == "()"


def test_weight_round_trip_and_levels():
    diagram = YoungDiagram((3, 1))
    weight = diagram_to_weight(diagram, 4)
    assert weight.coeffs == (2, 1, 0)
    assert weight_to_diagram(weight) == diagram
    assert level_of(diagram) == 3 == weight.level
    assert in_level(diagram, 4, 3)
    assert not in_level(diagram, 4, 2)
    assert not in_level(diagram, 2, 5)


def test_content_sum_and_casimir():
    assert YoungDiagram((2, 1)).content_sum() == 0
    assert YoungDiagram((3,)).content_sum() == 3
    assert casimir_exponent(YoungDiagram((1,)), 2) == 3
    assert casimir_exponent(YoungDiagram(()), 5) == 0


def test_inner_products_on_fundamental_weights():
    table = InnerProductTable.for_rank(3)
    assert table.entries == ((Fraction(2, 3), Fraction(1, 3)), (Fraction(1, 3), Fraction(2, 3)))
    rho = WeightVector.rho(3)
    assert inner_product(rho, rho) == strange_constant(3) == 2
    with pytest.raises(LabelError):
        inner_product(WeightVector.rho(3), WeightVector.rho(4))


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_shifted_norm_equals_casimir_over_rank(N):
    for diagram in enumerate_diagrams(N, 4):
        difference = shifted_norm(diagram, N) - strange_constant(N)
        assert difference == Fraction(casimir_exponent(diagram, N), N)


def test_involution_star():
    assert involution_star(YoungDiagram((1,)), 3) == YoungDiagram((1, 1))
    assert involution_star(YoungDiagram((2, 1)), 3) == YoungDiagram((2, 1))
    for diagram in enumerate_diagrams(4, 3):
        assert involution_star(involution_star(diagram, 4), 4) == diagram
        assert involution_star(diagram, 4).level == diagram.level


def test_involution_reverses_weight_coordinates():
    diagram = YoungDiagram((4, 2, 1))
    star = involution_star(diagram, 4)
    assert diagram_to_weight(star, 4).coeffs == tuple(reversed(diagram_to_weight(diagram, 4).coeffs))


@pytest.mark.parametrize("N, k", [(2, 4), (3, 4), (4, 3), (5, 2)])
def test_level_histogram_matches_enumeration(N, k):
    totals, self_dual = level_histogram(N, k)
    assert sum(totals) == len(enumerate_diagrams(N, k))
    assert sum(self_dual) == len(self_dual_diagrams(N, k))
    for level in range(k + 1):
        assert totals[level] == sum(1 for d in enumerate_diagrams(N, k) if d.level == level)


def test_rational_phase_reduction():
    phase = RationalPhase(Fraction(5, 2))
    assert phase.q == Fraction(1, 2)
    assert phase.to_complex() == pytest.approx(1j)
    assert (-phase).q == Fraction(3, 2)
    assert (phase * 4).q == 0
    assert (phase + RationalPhase.from_ratio(1, 2)).to_complex() == pytest.approx(-1)


def test_phase_sums():
    assert phase_sum([]) == 0
    assert phase_sum([Fraction(0), Fraction(1)]) == pytest.approx(0)
    assert root_of_unity_sum([1], -2) == pytest.approx(-1j)
    assert root_of_unity_sum([0, 2, 4], 3) == pytest.approx(0)
    with pytest.raises(ZeroDivisionError):
        root_of_unity_sum([1], 0)
