"""Young diagrams, SU(N) weights and exact phases underlying every label sum.

Labels of the level ``k`` quantum representation are Young diagrams with fewer
than ``N`` rows and at most ``k`` columns.  They correspond to dominant weights
through ``eps_i = lambda_i - lambda_{i+1}``.  Inner products, Casimir exponents
and phases are kept as exact integers or :class:`fractions.Fraction` values;
floating point only enters when a phase is finally exponentiated.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, List, Sequence, Tuple

import numpy as np

__all__ = [
    "LabelError",
    "YoungDiagram",
    "WeightVector",
    "RationalPhase",
    "InnerProductTable",
    "enumerate_diagrams",
    "level_of",
    "in_level",
    "self_dual_diagrams",
    "diagram_to_weight",
    "weight_to_diagram",
    "inner_product",
    "shifted_norm",
    "strange_constant",
    "casimir_exponent",
    "casimir_exponents",
    "involution_star",
    "level_histogram",
    "phase_sum",
    "root_of_unity_sum",
]


class LabelError(ValueError):
    """Raised for malformed diagrams, rank mismatches or out-of-range labels."""


@dataclass(frozen=True)
class YoungDiagram:
    """Weakly decreasing positive row lengths; ``()`` is the empty diagram."""

    rows: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.rows)
        if any(r <= 0 for r in rows):
            raise LabelError(f"Row lengths must be positive, got {rows}")
        if any(a < b for a, b in zip(rows, rows[1:])):
            raise LabelError(f"Row lengths must be weakly decreasing, got {rows}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "YoungDiagram":
        """Build a diagram, dropping trailing zero rows."""

        trimmed = list(rows)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        return cls(tuple(trimmed))

    @property
    def size(self) -> int:
        return sum(self.rows)

    @property
    def num_rows(self) -> int:
        return len(self.rows)

    @property
    def level(self) -> int:
        """The first row length, i.e. the number of columns."""

        return self.rows[0] if self.rows else 0

    def row(self, i: int) -> int:
        """Row ``i`` counted from 1; rows past the end have length 0."""

        return self.rows[i - 1] if 1 <= i <= len(self.rows) else 0

    def cells(self) -> Iterator[Tuple[int, int]]:
        for i, length in enumerate(self.rows, start=1):
            for j in range(1, length + 1):
                yield i, j

    def content_sum(self) -> int:
        """Sum of the contents ``j - i`` over all cells."""

        return sum(length * (length + 1) // 2 - i * length for i, length in enumerate(self.rows, start=1))

    def in_level(self, N: int, k: int) -> bool:
        """Membership in ``Gamma_{N,k}``."""

        return self.num_rows < N and self.level <= k

    def __str__(self) -> str:
        return "()" if not self.rows else "(" + ",".join(str(r) for r in self.rows) + ")"


@dataclass(frozen=True)
class WeightVector:
    """Coordinates of a weight over the fundamental weights of SU(N)."""

    coeffs: Tuple[int, ...]
    N: int

    def __post_init__(self) -> None:
        if self.N < 2:
            raise LabelError(f"Rank parameter N must be at least 2, got {self.N}")
        coeffs = tuple(int(c) for c in self.coeffs)
        if len(coeffs) != self.N - 1:
            raise LabelError(f"SU({self.N}) weights have {self.N - 1} coordinates, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, N: int) -> "WeightVector":
        return cls((0,) * (N - 1), N)

    @classmethod
    def rho(cls, N: int) -> "WeightVector":
        return cls((1,) * (N - 1), N)

    @classmethod
    def fundamental(cls, N: int, i: int) -> "WeightVector":
        if not 1 <= i <= N - 1:
            raise LabelError(f"Fundamental weight index {i} out of range for SU({N})")
        return cls(tuple(1 if m == i else 0 for m in range(1, N)), N)

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    @property
    def level(self) -> int:
        """Pairing with the highest root."""

        return sum(self.coeffs)

    def in_level(self, k: int) -> bool:
        return self.is_dominant() and self.level <= k

    def __add__(self, other: "WeightVector") -> "WeightVector":
        _check_rank(self, other)
        return WeightVector(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), self.N)

    def scale(self, n: int) -> "WeightVector":
        return WeightVector(tuple(n * c for c in self.coeffs), self.N)


@dataclass(frozen=True)
class RationalPhase:
    """The unimodular number ``exp(i*pi*q)`` with ``q`` kept exactly in ``[0, 2)``."""

    q: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "q", Fraction(self.q) % 2)

    @classmethod
    def from_ratio(cls, numerator: int, denominator: int) -> "RationalPhase":
        return cls(Fraction(numerator, denominator))

    def __add__(self, other: "RationalPhase") -> "RationalPhase":
        return RationalPhase(self.q + other.q)

    def __neg__(self) -> "RationalPhase":
        return RationalPhase(-self.q)

    def __mul__(self, n: int) -> "RationalPhase":
        return RationalPhase(self.q * n)

    __rmul__ = __mul__

    def to_complex(self) -> complex:
        return cmath.exp(1j * math.pi * float(self.q))


@dataclass(frozen=True)
class InnerProductTable:
    """Basic inner product of fundamental weights: ``min(i,j) - ij/N``."""

    N: int
    entries: Tuple[Tuple[Fraction, ...], ...]

    @classmethod
    def for_rank(cls, N: int) -> "InnerProductTable":
        return _table(N)

    def pair(self, x: Sequence[int | Fraction], y: Sequence[int | Fraction]) -> Fraction:
        total = Fraction(0)
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.entries[i]
            for j, yj in enumerate(y):
                if yj:
                    total += xi * yj * row[j]
        return total


@lru_cache(maxsize=None)
def _table(N: int) -> InnerProductTable:
    if N < 2:
        raise LabelError(f"Rank parameter N must be at least 2, got {N}")
    entries = tuple(
        tuple(Fraction(min(i, j)) - Fraction(i * j, N) for j in range(1, N)) for i in range(1, N)
    )
    return InnerProductTable(N, entries)


def _check_rank(mu: WeightVector, nu: WeightVector) -> None:
    if mu.N != nu.N:
        raise LabelError(f"Rank mismatch: SU({mu.N}) against SU({nu.N})")


def _partitions(max_parts: int, max_part: int) -> Iterator[Tuple[int, ...]]:
    if max_parts == 0 or max_part == 0:
        yield ()
        return
    yield ()
    for first in range(1, max_part + 1):
        for rest in _partitions(max_parts - 1, first):
            yield (first,) + rest


@lru_cache(maxsize=256)
def _diagrams(N: int, k: int) -> Tuple[YoungDiagram, ...]:
    rows = sorted(_partitions(N - 1, k), key=lambda p: (sum(p), p))
    return tuple(YoungDiagram(p) for p in rows)


def enumerate_diagrams(N: int, k: int) -> List[YoungDiagram]:
    """All of ``Gamma_{N,k}``, graded by size and then lexicographic in the rows."""

    if N < 2:
        raise LabelError(f"Rank parameter N must be at least 2, got {N}")
    if k < 0:
        raise LabelError(f"Level must be non-negative, got {k}")
    return list(_diagrams(N, k))


def diagram_to_weight(diagram: YoungDiagram, N: int) -> WeightVector:
    if diagram.num_rows >= N:
        raise LabelError(f"Diagram {diagram} has {diagram.num_rows} rows; SU({N}) allows at most {N - 1}")
    return WeightVector(tuple(diagram.row(i) - diagram.row(i + 1) for i in range(1, N)), N)


def weight_to_diagram(weight: WeightVector) -> YoungDiagram:
    if not weight.is_dominant():
        raise LabelError(f"Weight {weight.coeffs} is not dominant")
    rows = [sum(weight.coeffs[i:]) for i in range(weight.N - 1)]
    return YoungDiagram.from_rows(rows)


def inner_product(mu: WeightVector, nu: WeightVector) -> Fraction:
    _check_rank(mu, nu)
    return _table(mu.N).pair(mu.coeffs, nu.coeffs)


def shifted_norm(diagram: YoungDiagram, N: int) -> Fraction:
    """``<lambda + rho, lambda + rho>`` for the weight of ``diagram``."""

    shifted = diagram_to_weight(diagram, N) + WeightVector.rho(N)
    return inner_product(shifted, shifted)


def strange_constant(N: int) -> Fraction:
    """``N * dim SU(N) / 12``, which also equals ``<rho, rho>``."""

    return Fraction(N * (N * N - 1), 12)


def casimir_exponent(diagram: YoungDiagram, N: int) -> int:
    """``E = -|l|^2 + N^2 |l| + 2N * sum of contents``; the T-matrix exponent of ``a``."""

    if diagram.num_rows >= N:
        raise LabelError(f"Diagram {diagram} has too many rows for SU({N})")
    size = diagram.size
    return -size * size + N * N * size + 2 * N * diagram.content_sum()


@lru_cache(maxsize=256)
def casimir_exponents(N: int, k: int) -> Tuple[int, ...]:
    """Casimir exponents of ``Gamma_{N,k}`` in enumeration order."""

    return tuple(casimir_exponent(d, N) for d in _diagrams(N, k))


def involution_star(diagram: YoungDiagram, N: int) -> YoungDiagram:
    """``lambda_i -> lambda_1 - lambda_{N+1-i}``; on weights this reverses the coordinates."""

    if diagram.num_rows >= N:
        raise LabelError(f"Diagram {diagram} has too many rows for SU({N})")
    first = diagram.row(1)
    return YoungDiagram.from_rows([first - diagram.row(N + 1 - i) for i in range(1, N + 1)])


def self_dual_diagrams(N: int, k: int) -> List[YoungDiagram]:
    return [d for d in _diagrams(N, k) if involution_star(d, N) == d]


def phase_sum(phases: Iterable[RationalPhase | Fraction]) -> complex:
    """Sum ``exp(i*pi*q)`` over reduced exact exponents, in the given order."""

    reduced = [float(p.q if isinstance(p, RationalPhase) else Fraction(p) % 2) for p in phases]
    if not reduced:
        return 0j
    return complex(np.exp(1j * math.pi * np.asarray(reduced)).sum())


def level_of(diagram: YoungDiagram) -> int:
    return diagram.level


def in_level(diagram: YoungDiagram, N: int, k: int) -> bool:
    return diagram.in_level(N, k)


def root_of_unity_sum(numerators: Iterable[int], denominator: int) -> complex:
    """Sum ``exp(i*pi*n/denominator)``; each ``n`` is reduced mod ``2*denominator`` in integers first."""

    if denominator == 0:
        raise ZeroDivisionError("Phase denominator must be nonzero")
    sign = 1 if denominator > 0 else -1
    modulus = 2 * abs(denominator)
    reduced = [(sign * n) % modulus for n in numerators]
    if not reduced:
        return 0j
    angles = np.asarray(reduced, dtype=float) * (math.pi / abs(denominator))
    return complex(np.exp(1j * angles).sum())


def level_histogram(N: int, k: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Counts of labels, and of self-dual labels, at each level ``0..k``.

    Works on raw row tuples, so all levels up to ``k`` cost one enumeration.
    """

    if N < 2 or k < 0:
        raise LabelError(f"Need N >= 2 and k >= 0, got N={N}, k={k}")
    totals = [0] * (k + 1)
    self_dual = [0] * (k + 1)
    for rows in _partitions(N - 1, k):
        padded = rows + (0,) * (N - len(rows))
        level = padded[0]
        totals[level] += 1
        if all(padded[i] == level - padded[N - 1 - i] for i in range(N)):
            self_dual[level] += 1
    return tuple(totals), tuple(self_dual)
