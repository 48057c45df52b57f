"""Verification suites comparing independent evaluations against each other.

Every suite returns a :class:`SuiteReport` of named checks.  A check keeps the
largest residual it saw, the tolerance it was held to and how many cases fed
it; the CLI prints the reports as JSON and exits non-zero when any check fails.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterator, List

import numpy as np

from .asymp import aec_terms_su3, table_row, verify_aec
from .config import VerifySettings, _debug
from .gaussrec import (
    coset_key,
    enumerate_quotient,
    gauss_sum_1d,
    lattice_gauss_lhs,
    lattice_gauss_rhs,
    random_problem,
    random_scalar_triple,
    reciprocity_rhs_1d,
)
from .moduli import (
    ConnectionTriple,
    cocycle_matrix,
    cohomology_dims,
    connection_triple_for,
    cs_values,
    growth_rate,
    su2_components,
    su3_cs_phase_set,
)
from .weightlat import (
    casimir_exponent,
    enumerate_diagrams,
    level_histogram,
    shifted_norm,
    strange_constant,
)
from .wrt import (
    Trace2,
    TraceMinus2,
    anomaly_phase,
    framing_factor,
    invariant_direct,
    invariant_su2_closed,
    invariant_su2_link_closed,
    invariant_su2_link_direct,
    invariant_su3_closed,
    invariant_su3_tilde1,
    invariant_word_modulus,
    representative,
    tilde_verlinde,
    verlinde_dim,
)

__all__ = ["Check", "SuiteReport", "SUITES", "run_suite"]

RANKS = range(2, 7)
IDENTITY_LEVEL = 12
COUNT_LEVEL = 40
WORD_LIMITS = (6, 60)
LINK_LIMITS = (6, 100)
SU3_LIMITS = (6, 60)
AEC_LEVEL = 300
AEC_ORDERS = 3


@dataclass
class Check:
    name: str
    tolerance: float
    max_residual: float = 0.0
    count: int = 0
    failures: int = 0
    seconds: float = 0.0

    @contextmanager
    def timed(self) -> Iterator["Check"]:
        """Add the wall time of the block to :attr:`seconds`."""

        start = time.perf_counter()
        try:
            yield self
        finally:
            self.seconds += time.perf_counter() - start

    def record(self, residual: float, allowed: float | None = None) -> None:
        limit = self.tolerance if allowed is None else allowed
        self.count += 1
        self.max_residual = max(self.max_residual, float(residual))
        if not residual <= limit:
            self.failures += 1

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_dict(self) -> Dict[str, object]:
        return {
            "name": self.name,
            "max_residual": self.max_residual,
            "tolerance": self.tolerance,
            "count": self.count,
            "failures": self.failures,
            "seconds": round(self.seconds, 3),
            "passed": self.passed,
        }


@dataclass
class SuiteReport:
    suite: str
    checks: List[Check] = field(default_factory=list)

    def check(self, name: str, tolerance: float) -> Check:
        entry = Check(name, tolerance)
        self.checks.append(entry)
        return entry

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    def to_dict(self) -> Dict[str, object]:
        return {"suite": self.suite, "passed": self.passed, "checks": [c.to_dict() for c in self.checks]}


def _shears(bmax: int) -> List[int]:
    return [sign * b for b in range(1, bmax + 1) for sign in (1, -1)]


def suite_gauss(settings: VerifySettings) -> SuiteReport:
    report = SuiteReport("gauss")
    rng = np.random.default_rng(settings.seed)
    scalar = report.check("scalar-reciprocity", 1e-9)
    for _ in range(settings.trials):
        a, b, c = random_scalar_triple(rng)
        scalar.record(abs(gauss_sum_1d(a, b, c) - reciprocity_rhs_1d(a, b, c)))
    lattice = report.check("lattice-reciprocity", 1e-9)
    quotient = report.check("quotient-size", 0.0)
    for _ in range(max(1, settings.trials // 5)):
        problem = random_problem(rng)
        lhs = lattice_gauss_lhs(problem)
        rhs = lattice_gauss_rhs(problem)
        lattice.record(abs(lhs - rhs), 1e-9 * max(1.0, abs(lhs)))
        matrix = problem.action.T
        representatives = enumerate_quotient(matrix)
        keys = {coset_key(matrix, v) for v in representatives}
        expected = abs(int(matrix.det()))
        quotient.record(abs(len(representatives) - expected) + abs(len(keys) - expected))
    return report


def suite_oracle(settings: VerifySettings) -> SuiteReport:
    report = SuiteReport("oracle")
    closed = report.check("su2-direct-vs-closed", 1e-9)
    word = report.check("su2-word-modulus", 1e-8)
    link = report.check("su2-linked", 1e-9)
    su3 = report.check("su3-direct-vs-closed", 1e-8)
    tilde = report.check("su3-self-dual", 1e-10)
    counting = report.check("label-counts", 0.0)
    for b in _shears(settings.bmax):
        _debug(f"oracle: shear {b}")
        with closed.timed():
            for k in range(settings.kmax + 1):
                value = invariant_su2_closed(k, b)
                direct = invariant_direct(2, k, Trace2(b)).value
                closed.record(abs(direct - value), 1e-9 * (1 + abs(value)))
        if abs(b) <= WORD_LIMITS[0]:
            U = representative(Trace2(b))
            with word.timed():
                for k in range(min(settings.kmax, WORD_LIMITS[1]) + 1):
                    word.record(abs(abs(invariant_su2_closed(k, b)) - invariant_word_modulus(k, U)))
        if abs(b) <= LINK_LIMITS[0]:
            with link.timed():
                for k in range(min(settings.kmax, LINK_LIMITS[1]) + 1):
                    for j in range(k + 1):
                        value = invariant_su2_link_closed(k, b, j)
                        link.record(abs(invariant_su2_link_direct(k, b, j) - value), 1e-9 * (1 + abs(value)))
        if abs(b) <= SU3_LIMITS[0]:
            with su3.timed():
                for k in range(min(settings.kmax, SU3_LIMITS[1]) + 1):
                    value = invariant_su3_closed(k, b)
                    su3.record(abs(invariant_direct(3, k, Trace2(b)).value - value), 1e-8 * (1 + abs(value)))
    for k in range(settings.kmax + 1):
        tilde.record(abs(invariant_direct(3, k, TraceMinus2(1)).value - invariant_su3_tilde1(k)))
    level = min(settings.kmax, COUNT_LEVEL)
    for N in RANKS:
        totals, self_dual = level_histogram(N, level)
        for k in range(level + 1):
            labels = sum(totals[: k + 1])
            fixed = sum(self_dual[: k + 1])
            counting.record(abs(verlinde_dim(N, k) - labels) + abs(tilde_verlinde(N, k) - fixed))
    return report


def suite_aec(settings: VerifySettings) -> SuiteReport:
    report = SuiteReport("aec")
    exact = report.check("exact-expansion", 1e-10)
    slopes = report.check("truncation-slopes", 0.3)
    phases = report.check("su2-phase-sets", 0.0)
    su3 = report.check("su3-phase-sets", 0.0)
    for b in _shears(settings.bmax):
        _debug(f"aec: shear {b}")
        result = verify_aec(b, min(settings.kmax, AEC_LEVEL), AEC_ORDERS)
        exact.record(result.exact_residual)
        for L, slope in result.slopes.items():
            if slope is not None:
                slopes.record(slope - result.targets[L])
        phases.record(0.0 if table_row(Trace2(b))[0] == cs_values(b) else 1.0)
        if abs(b) <= SU3_LIMITS[0]:
            expansion = {term.c for term in aec_terms_su3(b)}
            su3.record(0.0 if expansion == su3_cs_phase_set(b) else 1.0)
    return report


def suite_growth(settings: VerifySettings) -> SuiteReport:
    report = SuiteReport("growth")
    rates = report.check("generic-growth-rates", 0.0)
    kernels = report.check("cocycle-kernels", 0.0)
    for b in _shears(settings.bmax):
        for component in su2_components(b):
            expected = Fraction(0) if component.irreducible else Fraction(1, 2)
            rate = growth_rate(component, b, seed=settings.seed)
            rates.record(float(abs(rate - expected)))
    identity = np.eye(2, dtype=complex)
    for b in (1, 2, 3):
        components = su2_components(b)
        generic = connection_triple_for(components[0], b, 0.17, 0.31)
        kernels.record(abs(9 - np.linalg.matrix_rank(cocycle_matrix(generic), tol=1e-8) - 4))
        trivial = ConnectionTriple(identity, identity, identity, -b)
        dims = cohomology_dims(trivial)
        kernels.record(abs(dims.h1 - 6) + abs(dims.h0 - 3))
        corner = connection_triple_for(components[0], b, 0.5, 0.5)
        kernels.record(abs(9 - np.linalg.matrix_rank(cocycle_matrix(corner), tol=1e-8) - 6))
        if b % 2:
            point = connection_triple_for(components[-1], b)
            kernels.record(abs(9 - np.linalg.matrix_rank(cocycle_matrix(point), tol=1e-8) - 3))
    return report


def suite_lemma(settings: VerifySettings) -> SuiteReport:
    report = SuiteReport("lemma")
    identity = report.check("shifted-norm-vs-casimir", 0.0)
    for N in RANKS:
        constant = strange_constant(N)
        for diagram in enumerate_diagrams(N, IDENTITY_LEVEL):
            difference = shifted_norm(diagram, N) - constant - Fraction(casimir_exponent(diagram, N), N)
            identity.record(float(abs(difference)))
    return report


def suite_framing(settings: VerifySettings) -> SuiteReport:
    report = SuiteReport("framing")
    anomaly = report.check("framing-anomaly", 1e-10)
    for k in range(1, settings.kmax + 1):
        anomaly.record(abs(framing_factor(k) - anomaly_phase(2, k)))
    return report


SUITES: Dict[str, Callable[[VerifySettings], SuiteReport]] = {
    "gauss": suite_gauss,
    "oracle": suite_oracle,
    "aec": suite_aec,
    "growth": suite_growth,
    "lemma": suite_lemma,
    "framing": suite_framing,
}


def run_suite(name: str, settings: VerifySettings) -> List[SuiteReport]:
    """Run one suite, or every suite in order for ``"all"``."""

    if name == "all":
        return [suite(settings) for suite in SUITES.values()]
    try:
        suite = SUITES[name]
    except KeyError as exc:
        raise ValueError(f"Unknown suite {name!r}; choose from {', '.join([*SUITES, 'all'])}") from exc
    return [suite(settings)]
