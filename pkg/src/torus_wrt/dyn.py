"""Stretch factors and fixed points of Anosov torus maps, recovered from invariants."""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Dict, List

import numpy as np

from .wrt import SL2ZMatrix, invariant_hyperbolic_modulus, random_sl2z

__all__ = [
    "NotAnosovError",
    "StretchEstimate",
    "STRETCH_METHODS",
    "spectral_radius",
    "matrix_power",
    "stretch_via_invariant",
    "fixed_point_count",
    "fixed_point_ratios",
    "root_limit",
    "estimate",
    "random_hyperbolic",
]

STRETCH_METHODS = ("invariant", "root", "spectral")

_HALF_PERIODS = ((0, 0), (1, 0), (0, 1), (1, 1))


class NotAnosovError(ValueError):
    """Raised when a monodromy is not hyperbolic."""


@dataclass(frozen=True)
class StretchEstimate:
    lambda_: float
    n: int
    method: str

    def to_dict(self) -> Dict[str, object]:
        return {"lambda": self.lambda_, "n": self.n, "method": self.method}


def _require_anosov(U: SL2ZMatrix) -> None:
    if abs(U.trace) <= 2:
        raise NotAnosovError(f"{U} has trace {U.trace}; an Anosov map needs |trace| > 2")


def spectral_radius(U: SL2ZMatrix) -> float:
    """Largest eigenvalue modulus; non-hyperbolic input warns and gives 1."""

    if abs(U.trace) <= 2:
        warnings.warn(f"{U} is not hyperbolic (trace {U.trace}); its spectral radius is 1", RuntimeWarning, stacklevel=2)
    matrix = np.array([[U.a, U.b], [U.c, U.d]], dtype=float)
    return float(np.max(np.abs(np.linalg.eigvals(matrix))))


def matrix_power(U: SL2ZMatrix, m: int) -> SL2ZMatrix:
    """``U^m`` by repeated squaring in Python integers."""

    if m < 0:
        return matrix_power(U.inverse(), -m)
    result = SL2ZMatrix.identity()
    base = U
    while m:
        if m & 1:
            result = result @ base
        base = base @ base
        m >>= 1
    return result


def stretch_via_invariant(U: SL2ZMatrix, n: int = 1) -> StretchEstimate:
    """``|Z_k|^-2`` at the level ``k = n (tr^2 - 4) - 2``."""

    _require_anosov(U)
    if n < 1:
        raise ValueError(f"The level index n must be positive, got {n}")
    k = n * (U.trace**2 - 4) - 2
    modulus = invariant_hyperbolic_modulus(k, U)
    return StretchEstimate(modulus**-2, n, "invariant")


def fixed_point_count(U: SL2ZMatrix, m: int) -> int:
    """Fixed points of ``U^m`` on the pillowcase.

    ``|2 + t| + |2 - t|`` counts the fixed points of ``x -> U^m x`` and of
    ``x -> -U^m x`` on the torus; half periods fixed by both are counted once.
    """

    _require_anosov(U)
    if m < 1:
        raise ValueError(f"The iterate m must be positive, got {m}")
    V = matrix_power(U, m)
    t = V.trace
    shared = 0
    for p, q in _HALF_PERIODS:
        # V x = x and -V x = x coincide on half periods
        if ((V.a - 1) * p + V.b * q) % 2 == 0 and (V.c * p + (V.d - 1) * q) % 2 == 0:
            shared += 1
    return abs(2 + t) + abs(2 - t) - shared


def fixed_point_ratios(U: SL2ZMatrix, m_max: int) -> List[float]:
    """``c_{m+1} / c_m`` for ``1 <= m < m_max``."""

    counts = [fixed_point_count(U, m) for m in range(1, m_max + 1)]
    return [after / before for before, after in zip(counts, counts[1:])]


def root_limit(U: SL2ZMatrix, n: int) -> StretchEstimate:
    """``|Z_{k_n}(U^n)|^(-2/n)`` with ``k_n = tr(U^n)^2 - 6``."""

    _require_anosov(U)
    if n < 1:
        raise ValueError(f"The iterate n must be positive, got {n}")
    V = matrix_power(U, n)
    k = V.trace**2 - 6
    modulus = invariant_hyperbolic_modulus(k, V)
    return StretchEstimate(modulus ** (-2 / n), n, "root")


def estimate(U: SL2ZMatrix, n: int = 1, method: str = "invariant") -> StretchEstimate:
    if method == "invariant":
        return stretch_via_invariant(U, n)
    if method == "root":
        return root_limit(U, n)
    if method == "spectral":
        _require_anosov(U)
        return StretchEstimate(spectral_radius(U), n, "spectral")
    raise ValueError(f"Unknown stretch method {method!r}; choose from {', '.join(STRETCH_METHODS)}")


def random_hyperbolic(rng: np.random.Generator, bound: int = 20) -> SL2ZMatrix:
    """Seeded Anosov matrix with every entry at most ``bound`` in absolute value."""

    while True:
        length = int(rng.integers(2, 9))
        U = random_sl2z(rng, length)
        if abs(U.trace) > 2 and max(abs(x) for x in U.as_tuple()) <= bound:
            return U
