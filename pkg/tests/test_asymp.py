import dataclasses
import math
from fractions import Fraction

import pytest

from torus_wrt.asymp import (
    AecTerm,
    aec_terms_su2,
    aec_terms_su3,
    evaluate_expansion,
    fit_slope,
    table_row,
    verify_aec,
)
from torus_wrt.moduli import cs_values
from torus_wrt.wrt import (
    FiniteOrder,
    Hyperbolic,
    InvariantDomainError,
    SL2ZMatrix,
    Trace2,
    TraceMinus2,
    invariant_su2_closed,
    invariant_su3_closed,
)

HALF = Fraction(1, 2)


def _pairs(terms):
    return {(term.c, term.d) for term in terms}


@pytest.mark.parametrize(
    "b, expected",
    [
        (2, {(Fraction(0), HALF), (HALF, HALF)}),
        (3, {(Fraction(0), HALF), (Fraction(1, 3), HALF), (Fraction(1, 4), Fraction(0))}),
        (1, {(Fraction(0), HALF), (Fraction(3, 4), Fraction(0))}),
    ],
)
def test_su2_phase_families(b, expected):
    assert _pairs(aec_terms_su2(b)) == expected


def test_zero_shear_is_rejected():
    with pytest.raises(InvariantDomainError):
        aec_terms_su2(0)
    with pytest.raises(InvariantDomainError):
        aec_terms_su3(0)


@pytest.mark.parametrize("b", [1, -1, 2, 3, 4, -5, 12])
def test_exact_expansion_reproduces_closed_form(b):
    terms = aec_terms_su2(b)
    for k in range(61):
        assert evaluate_expansion(terms, k + 2) == pytest.approx(invariant_su2_closed(k, b), abs=1e-10)


def test_expansion_worked_value():
    assert evaluate_expansion(aec_terms_su2(1), 3) == pytest.approx(1 - 1j)


def test_long_truncation_approaches_exact_value():
    terms = aec_terms_su2(4)
    assert evaluate_expansion(terms, 200, order=30) == pytest.approx(evaluate_expansion(terms, 200), abs=1e-10)


def test_series_coefficients():
    interior, = [term for term in aec_terms_su2(5) if term.c == Fraction(1, 5)]
    series = interior.series(3)
    assert series[0] == 1
    assert series[1] == 0 and series[3] == 0
    assert series[2] == pytest.approx(1j * math.pi * 5 / 2)

    endpoint = aec_terms_su2(5)[0]
    series = endpoint.series(3)
    ratio = -0.5 / endpoint.leading
    assert series[1] == pytest.approx(ratio)
    assert series[3] == pytest.approx(ratio * series[2])


def test_perturbed_phase_breaks_identity():
    b = 3
    terms = aec_terms_su2(b)
    lcm = math.lcm(*(term.c.denominator for term in terms))
    for index in range(len(terms)):
        shifted = list(terms)
        shifted[index] = dataclasses.replace(terms[index], c=terms[index].c + Fraction(1, 2 * lcm))
        worst = max(abs(evaluate_expansion(shifted, k + 2) - invariant_su2_closed(k, b)) for k in range(49))
        assert worst > 1e-6


@pytest.mark.parametrize("b", [1, -2, 3])
def test_su3_families_reproduce_closed_form(b):
    terms = aec_terms_su3(b)
    assert {term.d for term in terms} == {Fraction(1), HALF, Fraction(0)}
    for k in range(11):
        assert evaluate_expansion(terms, k + 3) == pytest.approx(invariant_su3_closed(k, b), abs=1e-9)


def test_fit_slope_on_power_law():
    rs = list(range(50, 200))
    residuals = [3.0 * r**-1.5 for r in rs]
    assert fit_slope(rs, residuals) == pytest.approx(-1.5)
    assert fit_slope(rs, [0.0] * len(rs)) is None


def test_fit_slope_tolerates_oscillating_amplitude():
    rs = list(range(100, 301))
    residuals = [(1.0 + 0.9 * (-1) ** r) / r for r in rs]
    assert fit_slope(rs, residuals) == pytest.approx(-1.0, abs=0.1)


@pytest.mark.parametrize("b, L", [(2, 2), (5, 2), (-1, 3)])
def test_truncation_residuals_decay(b, L):
    report = verify_aec(b, 120, L)
    assert report.exact_residual < 1e-10
    assert report.passed
    payload = report.to_dict()
    assert payload["passed"] is True
    assert set(payload["slopes"]) == {str(l) for l in range(L + 1)}


@pytest.mark.parametrize("b", [4, -4, 8, -8, 12, -12])
def test_truncation_slopes_for_shears_divisible_by_four(b):
    report = verify_aec(b, 300, 3)
    assert report.exact_residual < 1e-10
    for L, slope in report.slopes.items():
        assert slope is not None
        assert slope <= report.targets[L] + 0.3
    assert report.passed


def test_table_rows():
    assert table_row(FiniteOrder("id")) == ({Fraction(0)}, {Fraction(1)})
    assert table_row(FiniteOrder("varpi")) == ({Fraction(0)}, {Fraction(1)})
    assert table_row(Trace2(3)) == ({Fraction(0), Fraction(1, 3), Fraction(1, 4)}, {HALF, Fraction(0)})
    assert table_row(TraceMinus2(2)) == ({Fraction(0), HALF}, {HALF})
    phases, growth = table_row(Hyperbolic(SL2ZMatrix(2, 1, 1, 1)))
    assert growth == {Fraction(0)}
    assert phases == {Fraction(0), Fraction(1, 5), Fraction(4, 5)}
    assert table_row(FiniteOrder("f4^-1")) == ({Fraction(0), HALF}, {Fraction(0)})
    assert table_row(FiniteOrder("f6^-1"))[0] == {Fraction(0), Fraction(2, 3)}


@pytest.mark.parametrize("b", [b for b in range(-12, 13) if b])
def test_table_phases_match_moduli(b):
    assert table_row(Trace2(b))[0] == cs_values(b)


def test_term_coefficient_includes_prefactor():
    term = AecTerm(Fraction(0), HALF, 1 + 0j, 0j, 2j)
    assert term.coefficient(4) == pytest.approx(complex(math.cos(0.5), math.sin(0.5)))
    assert term.to_dict()["c"] == "0"
