"""Flat connections on torus bundles: components, Chern-Simons values and cohomology.

The fundamental group of the shear-``b`` bundle is presented as
``<alpha, beta, delta | [alpha, beta], delta alpha delta^-1 = alpha,
delta beta delta^-1 = alpha^m beta>`` with ``m = -b``.  A flat SU(2)
connection is a triple ``(A, B, C)`` of holonomies satisfying the same
relations.  Chern-Simons values are exact rationals reduced mod 1.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Sequence, Set, Tuple

import numpy as np

__all__ = [
    "RelationError",
    "ModuliComponent",
    "ConnectionTriple",
    "CohomologyDims",
    "RANK_TOLERANCE",
    "su2_components",
    "cs_values",
    "sun_cs_completely_reducible",
    "sun_cs_partially_reducible",
    "su3_cs_phase_set",
    "su3_example_values",
    "adjoint_matrix",
    "cocycle_matrix",
    "coboundary_matrix",
    "cohomology_dims",
    "connection_triple_for",
    "growth_rate",
    "random_su2",
]

RANK_TOLERANCE = 1e-8
RELATION_TOLERANCE = 1e-10
GENERIC_MARGIN = 0.05
GROWTH_SAMPLES = 32


class RelationError(ValueError):
    """Raised for triples violating the group relations or failed CS preconditions."""


def _mod1(value: Fraction) -> Fraction:
    return Fraction(value) % 1


@dataclass(frozen=True)
class ModuliComponent:
    kind: str
    cs: Fraction
    irreducible: bool = False
    j: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "cs", _mod1(self.cs))

    def to_dict(self) -> Dict[str, object]:
        return {"kind": self.kind, "cs": str(self.cs), "irreducible": self.irreducible, "j": self.j}


@dataclass(frozen=True)
class CohomologyDims:
    h0: int
    h1: int

    @property
    def growth(self) -> Fraction:
        """``(h1 - h0) / 2``."""

        return Fraction(self.h1 - self.h0, 2)


@dataclass(frozen=True, eq=False)
class ConnectionTriple:
    """Holonomies ``A, B, C`` in SU(2) for the shear ``b = -m`` bundle."""

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    m: int
    tolerance: float = field(default=RELATION_TOLERANCE, repr=False)

    def __post_init__(self) -> None:
        for name in ("A", "B", "C"):
            matrix = np.asarray(getattr(self, name), dtype=complex)
            if matrix.shape != (2, 2):
                raise RelationError(f"{name} must be a 2x2 matrix")
            if np.abs(matrix @ matrix.conj().T - np.eye(2)).max() > self.tolerance:
                raise RelationError(f"{name} is not unitary")
            if abs(np.linalg.det(matrix) - 1) > self.tolerance:
                raise RelationError(f"{name} does not have unit determinant")
            object.__setattr__(self, name, matrix)
        residuals = self.residuals()
        if max(residuals) > self.tolerance:
            raise RelationError(f"Relation residuals {residuals} exceed {self.tolerance}")

    def residuals(self) -> Tuple[float, float, float]:
        A, B, C = self.A, self.B, self.C
        C_inv = C.conj().T
        A_m = np.linalg.matrix_power(A, self.m)
        return (
            float(np.abs(A @ B - B @ A).max()),
            float(np.abs(C @ A @ C_inv - A).max()),
            float(np.abs(C @ B @ C_inv - A_m @ B).max()),
        )

    def conjugate(self, g: np.ndarray) -> "ConnectionTriple":
        g_inv = g.conj().T
        return ConnectionTriple(g @ self.A @ g_inv, g @ self.B @ g_inv, g @ self.C @ g_inv, self.m)


def su2_components(b: int) -> List[ModuliComponent]:
    """Components of the SU(2) moduli space with their Chern-Simons values ``j^2/b``.

    Odd ``b`` gives one pillowcase, ``(|b|-1)/2`` tori and an irreducible point
    at ``-b/4``; even ``b`` gives two pillowcases and ``|b|/2 - 1`` tori.
    """

    if b == 0:
        raise RelationError("The shear b must be nonzero")
    half = abs(b) // 2
    components = [ModuliComponent("pillowcase", Fraction(0), j=0)]
    components.extend(ModuliComponent("torus", Fraction(j * j, b), j=j) for j in range(1, (abs(b) + 1) // 2))
    if b % 2:
        components.append(ModuliComponent("point", Fraction(-b, 4), irreducible=True))
    else:
        components.append(ModuliComponent("pillowcase", Fraction(half * half, b), j=half))
    return components


def cs_values(b: int) -> Set[Fraction]:
    return {component.cs for component in su2_components(b)}


def sun_cs_completely_reducible(N: int, b: int, a: Sequence[Fraction | int]) -> Fraction:
    """Chern-Simons value of a flat connection with holonomy in the maximal torus."""

    values = [Fraction(v) for v in a]
    if len(values) != N:
        raise RelationError(f"Expected {N} eigenvalue parameters, got {len(values)}")
    total = sum(values, Fraction(0))
    if total.denominator != 1 or any((b * v).denominator != 1 for v in values):
        raise RelationError("Need sum(a) integral and b*a_l integral for every l")
    squares = sum((v * v for v in values), Fraction(0))
    return _mod1(Fraction(b, 2) * (squares + total * total - 2 * values[-1] * total))


def sun_cs_partially_reducible(
    N: int,
    b: int,
    blocks: Sequence[int],
    a: Sequence[Fraction | int],
) -> Fraction:
    """Chern-Simons value of a connection whose invariant subspaces have dimensions ``blocks``.

    The last term is the theta-characteristic sign ``(-1)^(b (1 - a_r i_r) sum i_l a_l)``.
    """

    sizes = [int(i) for i in blocks]
    values = [Fraction(v) for v in a]
    if len(sizes) != len(values) or not sizes:
        raise RelationError("Block sizes and eigenvalue parameters must have the same nonzero length")
    if sum(sizes) != N or any(i < 1 for i in sizes) or sorted(sizes) != sizes:
        raise RelationError(f"Block sizes must be non-decreasing positive integers summing to {N}")
    weighted = sum((i * v for i, v in zip(sizes, values)), Fraction(0))
    if weighted.denominator != 1 or any((b * i * v).denominator != 1 for i, v in zip(sizes, values)):
        raise RelationError("Need sum(i_l a_l) integral and b*i_l*a_l integral for every l")
    top = sizes[-1] * values[-1]
    quadratic = sum((i * v * (top - v) for i, v in zip(sizes, values)), Fraction(0))
    exponent = b * (1 - top) * weighted
    sign = 1 if exponent.numerator % 2 == 0 else -1
    return _mod1(-Fraction(b, 2) * quadratic + Fraction(sign - 1, 4))


def su3_cs_phase_set(b: int) -> Set[Fraction]:
    """Chern-Simons values of the SU(3) moduli space, by connection type."""

    if b == 0:
        raise RelationError("The shear b must be nonzero")
    values: Set[Fraction] = set()
    for n in range(3 * abs(b)):
        for m in range(3 * abs(b)):
            values.add(sun_cs_completely_reducible(3, b, [Fraction(n, b), Fraction(m, b), Fraction(-(n + m), b)]))
    for n in range(2 * abs(b)):
        values.add(sun_cs_partially_reducible(3, b, [1, 2], [Fraction(b - n, b), Fraction(n, 2 * b)]))
    values.add(sun_cs_partially_reducible(3, b, [3], [Fraction(1, 3)]))
    return values


def su3_example_values() -> List[Fraction]:
    """The eleven SU(3), ``b = 1`` component values in their usual listing order."""

    half = Fraction(1, 2)
    third = Fraction(1, 3)
    values = [sun_cs_completely_reducible(3, 1, [0, 0, 0])]
    values += [sun_cs_partially_reducible(3, 1, [1, 2], [0, half])] * 3
    for a in (third, 2 * third, third, 2 * third):
        values.append(sun_cs_partially_reducible(3, 1, [3], [a]))
    values += [sun_cs_partially_reducible(3, 1, [1, 2], [0, 0])] * 3
    return values


_BASIS = (
    np.array([[0, 1j], [1j, 0]]),
    np.array([[0, -1], [1, 0]], dtype=complex),
    np.array([[1j, 0], [0, -1j]]),
)


def _coordinates(X: np.ndarray) -> np.ndarray:
    return np.array([((X[0, 1] + X[1, 0]) / 2).imag, ((X[1, 0] - X[0, 1]) / 2).real, X[0, 0].imag])


def adjoint_matrix(g: np.ndarray) -> np.ndarray:
    """``Ad(g)`` on su(2) in the basis ``e1, e2, e3``."""

    g_inv = np.linalg.inv(g)
    return np.column_stack([_coordinates(g @ e @ g_inv) for e in _BASIS])


def _power_sum(ad_a: np.ndarray, m: int) -> np.ndarray:
    """Matrix of ``u(alpha^m)`` in terms of ``u(alpha)``."""

    if m >= 0:
        return sum((np.linalg.matrix_power(ad_a, n) for n in range(m)), np.zeros((3, 3)))
    return -sum((np.linalg.matrix_power(ad_a, n) for n in range(m, 0)), np.zeros((3, 3)))


def cocycle_matrix(triple: ConnectionTriple) -> np.ndarray:
    """The relator map on ``su(2)^3``; its kernel is the space of cocycles."""

    identity = np.eye(3)
    ad_a, ad_b, ad_c = (adjoint_matrix(g) for g in (triple.A, triple.B, triple.C))
    ad_amb = adjoint_matrix(np.linalg.matrix_power(triple.A, triple.m) @ triple.B)
    zero = np.zeros((3, 3))
    return np.block(
        [
            [identity - ad_b, ad_a - identity, zero],
            [identity - ad_c, zero, ad_a - identity],
            [-ad_b @ _power_sum(ad_a, triple.m), ad_c - identity, identity - ad_amb],
        ]
    )


def coboundary_matrix(triple: ConnectionTriple) -> np.ndarray:
    identity = np.eye(3)
    return np.vstack([identity - adjoint_matrix(g) for g in (triple.A, triple.B, triple.C)])


def _rank(matrix: np.ndarray) -> int:
    return int(np.linalg.matrix_rank(matrix, tol=RANK_TOLERANCE))


def cohomology_dims(triple: ConnectionTriple) -> CohomologyDims:
    coboundary = coboundary_matrix(triple)
    h0 = 3 - _rank(coboundary)
    kernel = 9 - _rank(cocycle_matrix(triple))
    return CohomologyDims(h0, kernel - _rank(coboundary))


def _diagonal(theta: float) -> np.ndarray:
    phase = np.exp(2j * math.pi * theta)
    return np.diag([phase, phase.conjugate()])


def connection_triple_for(component: ModuliComponent, b: int, s: float = 0.0, t: float = 0.0) -> ConnectionTriple:
    """Representative triple of a component at torus parameters ``(s, t)``."""

    m = -b
    if component.kind == "point":
        return ConnectionTriple(-np.eye(2), np.diag([1j, -1j]), np.array([[0, 1], [-1, 0]], dtype=complex), m)
    if component.j is None:
        raise RelationError(f"Component {component} carries no holonomy parameter")
    return ConnectionTriple(_diagonal(component.j / m), _diagonal(s), _diagonal(t), m)


def _generic_parameter(rng: np.random.Generator) -> float:
    while True:
        value = float(rng.uniform(0.0, 1.0))
        if min(abs(value - x) for x in (0.0, 0.5, 1.0)) >= GENERIC_MARGIN:
            return value


def growth_rate(component: ModuliComponent, b: int, *, seed: int = 0, samples: int = GROWTH_SAMPLES) -> Fraction:
    """Generic value of ``(h1 - h0)/2`` over sampled points of the component."""

    if component.kind == "point":
        return cohomology_dims(connection_triple_for(component, b)).growth
    rng = np.random.default_rng(seed)
    counts: Counter[Fraction] = Counter()
    for _ in range(samples):
        triple = connection_triple_for(component, b, _generic_parameter(rng), _generic_parameter(rng))
        counts[cohomology_dims(triple).growth] += 1
    return counts.most_common(1)[0][0]


def random_su2(rng: np.random.Generator) -> np.ndarray:
    """Haar-random SU(2) element from a normalised quaternion."""

    q = rng.normal(size=4)
    q /= np.linalg.norm(q)
    return np.array([[q[0] + 1j * q[1], q[2] + 1j * q[3]], [-q[2] + 1j * q[3], q[0] - 1j * q[1]]])
