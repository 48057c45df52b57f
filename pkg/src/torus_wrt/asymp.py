"""Asymptotic expansions of the closed forms and their numerical verification.

A closed form is regrouped as ``sum_j exp(2 pi i r c_j) r^d_j beta_j(r)`` with
``beta_j(r) = exp(x/r) (b_j + e_j r^-1/2)``.  Expanding the prefactor gives the
coefficients ``a_j^l`` of ``b_j (1 + sum_l a_j^l r^(-l/2))``.
"""

from __future__ import annotations

import cmath
import math
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import numpy as np

from .weightlat import RationalPhase
from .wrt import (
    FiniteOrder,
    Hyperbolic,
    InvariantDomainError,
    Trace2,
    TraceMinus2,
    BundleClass,
    invariant_su2_closed,
)

__all__ = [
    "AecTerm",
    "AecReport",
    "NOISE_FLOOR",
    "SLOPE_SLACK",
    "aec_terms_su2",
    "aec_terms_su3",
    "evaluate_expansion",
    "fit_slope",
    "verify_aec",
    "table_row",
]

NOISE_FLOOR = 1e-13
SLOPE_SLACK = 0.3

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class AecTerm:
    """One phase family ``exp(2 pi i r c) r^d beta(r)`` of an expansion."""

    c: Fraction
    d: Fraction
    leading: complex
    correction: complex = 0j
    exponent: complex = 0j

    def __post_init__(self) -> None:
        object.__setattr__(self, "c", Fraction(self.c) % 1)
        object.__setattr__(self, "d", Fraction(self.d))

    def coefficient(self, r: int) -> complex:
        """The exact ``beta(r)``."""

        return cmath.exp(self.exponent / r) * (self.leading + self.correction / math.sqrt(r))

    def series(self, order: int) -> List[complex]:
        """``[a^0, ..., a^order]`` with ``a^0 = 1``."""

        ratio = self.correction / self.leading
        coefficients: List[complex] = []
        for l in range(order + 1):
            m = l // 2
            taylor = self.exponent**m / math.factorial(m)
            coefficients.append(taylor if l % 2 == 0 else ratio * taylor)
        return coefficients

    def phase(self, r: int) -> complex:
        return RationalPhase(2 * r * self.c).to_complex()

    def to_dict(self) -> Dict[str, object]:
        return {
            "c": str(self.c),
            "d": str(self.d),
            "b": [self.leading.real, self.leading.imag],
        }


def _merge(terms: Iterable[AecTerm]) -> List[AecTerm]:
    """Collect terms sharing ``(c, d)`` and the same prefactor."""

    leading: Dict[Tuple[Fraction, Fraction, complex], complex] = defaultdict(complex)
    correction: Dict[Tuple[Fraction, Fraction, complex], complex] = defaultdict(complex)
    for term in terms:
        key = (term.c, term.d, term.exponent)
        leading[key] += term.leading
        correction[key] += term.correction
    return [
        AecTerm(c, d, leading[(c, d, x)], correction[(c, d, x)], x)
        for (c, d, x) in sorted(leading, key=lambda key: (-key[1], key[0]))
    ]


def aec_terms_su2(b: int) -> List[AecTerm]:
    """Regrouping of the SU(2) closed form by Chern-Simons value.

    Interior Gauss-sum terms pair up with coefficient ``2X``; the ``n = 0`` term
    and, for even ``b``, the ``n = |b|/2`` term absorb the constant ``-1/2``.
    """

    if b == 0:
        raise InvariantDomainError("The shear b must be nonzero")
    sign = 1 if b > 0 else -1
    unit = cmath.exp(-sign * 1j * math.pi / 4) / math.sqrt(2 * abs(b))
    x = 1j * math.pi * b / 2
    terms = [AecTerm(Fraction(0), HALF, unit, -0.5, x)]
    for n in range(1, (abs(b) + 1) // 2):
        terms.append(AecTerm(Fraction(n * n, b), HALF, 2 * unit, 0j, x))
    if b % 2 == 0:
        half = abs(b) // 2
        terms.append(AecTerm(Fraction(half * half, b), HALF, unit, -0.5, x))
    else:
        terms.append(AecTerm(Fraction(-b, 4), Fraction(0), -0.5 + 0j, 0j, x))
    return terms


def aec_terms_su3(b: int) -> List[AecTerm]:
    """Leading-order families of the SU(3) closed form: double sum, single sum and constants."""

    if b == 0:
        raise InvariantDomainError("The shear b must be nonzero")
    sign = 1 if b > 0 else -1
    x = 2j * math.pi * b
    size = 3 * abs(b)
    double = -1j / (18 * math.sqrt(3) * b)
    single = -0.5 * math.sqrt(3 / (2 * abs(b))) * cmath.exp(-sign * 1j * math.pi / 4)
    terms = [
        AecTerm(Fraction(n * n + m * m - n * m, b), Fraction(1), double, 0j, x)
        for n in range(size)
        for m in range(size)
    ]
    terms += [AecTerm(Fraction(3 * n * n, 4 * b), HALF, single, 0j, x) for n in range(2 * abs(b))]
    terms.append(AecTerm(Fraction(0), Fraction(0), 1 / 3 + 0j, 0j, x))
    terms.append(AecTerm(Fraction(-b, 3), Fraction(0), 2 / 3 + 0j, 0j, x))
    return _merge(terms)


def evaluate_expansion(terms: Sequence[AecTerm], r: int, order: int | None = None) -> complex:
    """Partial sum of the expansion; ``order=None`` uses the exact coefficients."""

    total = 0j
    for term in terms:
        scale = term.phase(r) * r ** float(term.d)
        if order is None:
            total += scale * term.coefficient(r)
        else:
            powers = sum(a * r ** (-l / 2) for l, a in enumerate(term.series(order)))
            total += scale * term.leading * powers
    return total


def fit_slope(rs: Sequence[int], residuals: Sequence[float]) -> float | None:
    """Least-squares slope of ``log residual`` against ``log r``.

    One fit over every level given.  Residuals below :data:`NOISE_FLOOR` are
    dropped; fewer than two usable points give ``None``.
    """

    points = [(math.log(r), math.log(res)) for r, res in zip(rs, residuals) if res > NOISE_FLOOR]
    if len(points) < 2:
        return None
    x, y = np.array(points).T
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


@dataclass
class AecReport:
    b: int
    k_max: int
    terms: List[AecTerm]
    exact_residual: float
    slopes: Dict[int, float | None] = field(default_factory=dict)
    targets: Dict[int, float] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        if self.exact_residual > 1e-10:
            return False
        return all(slope is None or slope <= self.targets[L] + SLOPE_SLACK for L, slope in self.slopes.items())

    def to_dict(self) -> Dict[str, object]:
        return {
            "b": self.b,
            "k_max": self.k_max,
            "terms": [term.to_dict() for term in self.terms],
            "exact_residual": self.exact_residual,
            "slopes": {str(L): slope for L, slope in self.slopes.items()},
            "targets": {str(L): target for L, target in self.targets.items()},
            "passed": self.passed,
        }


def verify_aec(b: int, k_max: int, L_max: int) -> AecReport:
    """Exact-expansion residual over ``0..k_max`` and truncation slopes over the upper half."""

    terms = aec_terms_su2(b)
    closed = {k: invariant_su2_closed(k, b) for k in range(k_max + 1)}
    exact = max(abs(evaluate_expansion(terms, k + 2) - value) for k, value in closed.items())
    report = AecReport(b, k_max, terms, float(exact))
    d = max(term.d for term in terms)
    levels = range(k_max // 2, k_max + 1)
    rs = [k + 2 for k in levels]
    for L in range(L_max + 1):
        residuals = [abs(closed[k] - evaluate_expansion(terms, k + 2, order=L)) for k in levels]
        report.slopes[L] = fit_slope(rs, residuals)
        report.targets[L] = float(d) - (L + 1) / 2
    return report


def _hyperbolic_phases(cls: Hyperbolic) -> FrozenSet[Fraction]:
    a, b, c, d = cls.matrix.as_tuple()
    phases = set()
    for D in (a + d - 2, a + d + 2):
        for beta in range(abs(c)):
            for g in range(1, abs(D) + 1):
                phases.add(Fraction(-c * g * g + (a - d) * g * beta + b * beta * beta, D) % 1)
    return frozenset(phases)


_FINITE_PHASES = {
    "f4": {Fraction(0), HALF},
    "f6": {Fraction(0), Fraction(1, 3)},
    "f3": {Fraction(0), Fraction(2, 3)},
}


def table_row(cls: BundleClass) -> Tuple[FrozenSet[Fraction], FrozenSet[Fraction]]:
    """Phases ``{c_j}`` and growth rates ``{d_j}`` of the SU(2) invariants of a class."""

    if isinstance(cls, FiniteOrder):
        base, _, inverse = cls.tag.partition("^")
        if base in {"id", "varpi"}:
            return frozenset({Fraction(0)}), frozenset({Fraction(1)})
        phases = _FINITE_PHASES[base]
        if inverse:
            phases = {(-c) % 1 for c in phases}
        return frozenset(phases), frozenset({Fraction(0)})
    if isinstance(cls, Hyperbolic):
        return _hyperbolic_phases(cls), frozenset({Fraction(0)})
    if isinstance(cls, (Trace2, TraceMinus2)) and cls.shear == 0:
        return frozenset({Fraction(0)}), frozenset({Fraction(1)})
    terms = aec_terms_su2(cls.shear)
    return frozenset(term.c for term in terms), frozenset(term.d for term in terms)
