"""Scalar and lattice Gauss sums together with their reciprocity transforms.

Lattice vectors are written in coordinates of a fixed basis ``e_1..e_l`` with
Gram matrix ``G``; dual vectors use the dual basis, whose Gram matrix is
``G^-1``.  The self-adjoint map ``B`` is supplied as the integer matrix ``Bm``
of its action on the basis, so that ``<x, By> = x^T Q y`` with ``Q = G Bm``
symmetric, and ``B`` acts on dual coordinates through ``Bm^T``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import List, Sequence, Tuple

import numpy as np
import sympy

from .weightlat import InnerProductTable, RationalPhase, phase_sum

__all__ = [
    "ReciprocityPreconditionError",
    "BranchAuditError",
    "IntegralLattice",
    "GaussSumProblem",
    "gauss_sum_1d",
    "reciprocity_rhs_1d",
    "lattice_gauss_lhs",
    "lattice_gauss_rhs",
    "det_factor",
    "check_conditions",
    "smith_normal_form",
    "enumerate_quotient",
    "coset_key",
    "random_problem",
    "random_scalar_triple",
]

AUDIT_TOLERANCE = 1e-9


class ReciprocityPreconditionError(ValueError):
    """Raised when a Gauss sum is requested outside the hypotheses of reciprocity."""


class BranchAuditError(RuntimeError):
    """Raised when an audited problem evaluates differently on its two sides."""


def _fraction(value: sympy.Rational | int | Fraction) -> Fraction:
    if isinstance(value, Fraction):
        return value
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def _is_integer(value: Fraction) -> bool:
    return value.denominator == 1


def _square_rows(rows: Sequence[Sequence[object]], name: str) -> int:
    size = len(rows)
    if size == 0 or any(len(row) != size for row in rows):
        raise ReciprocityPreconditionError(f"{name} must be a non-empty square matrix")
    return size


@dataclass(frozen=True)
class IntegralLattice:
    """A lattice given by the exact Gram matrix of one of its bases."""

    gram: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        size = _square_rows(self.gram, "Gram matrix")
        gram = tuple(tuple(Fraction(entry) for entry in row) for row in self.gram)
        object.__setattr__(self, "gram", gram)
        if any(gram[i][j] != gram[j][i] for i in range(size) for j in range(size)):
            raise ReciprocityPreconditionError("Gram matrix must be symmetric")
        if not self.gram_matrix.is_positive_definite:
            raise ReciprocityPreconditionError("Gram matrix must be positive definite")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int | Fraction]]) -> "IntegralLattice":
        return cls(tuple(tuple(Fraction(v) for v in row) for row in rows))

    @classmethod
    def standard(cls, rank: int) -> "IntegralLattice":
        return cls.from_rows([[1 if i == j else 0 for j in range(rank)] for i in range(rank)])

    @classmethod
    def a2_root(cls) -> "IntegralLattice":
        return cls.from_rows([[2, -1], [-1, 2]])

    @classmethod
    def weight_lattice(cls, N: int) -> "IntegralLattice":
        """SU(N) weight lattice on the fundamental weights (the inverse Cartan matrix)."""

        return cls(InnerProductTable.for_rank(N).entries)

    @property
    def rank(self) -> int:
        return len(self.gram)

    @cached_property
    def gram_matrix(self) -> sympy.Matrix:
        return sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row] for row in self.gram])

    @cached_property
    def dual_gram(self) -> sympy.Matrix:
        return self.gram_matrix.inv()

    @property
    def volume(self) -> float:
        return math.sqrt(float(self.gram_matrix.det()))

    @property
    def dual_volume(self) -> float:
        return 1.0 / self.volume


@dataclass(frozen=True)
class GaussSumProblem:
    """Data of a lattice Gauss sum: lattice, self-adjoint ``B``, shift ``psi`` and modulus ``r``."""

    lattice: IntegralLattice
    B: Tuple[Tuple[int, ...], ...]
    psi: Tuple[Fraction, ...]
    r: int
    audit: bool = field(default=False, compare=False)

    def __post_init__(self) -> None:
        size = self.lattice.rank
        if _square_rows(self.B, "B") != size:
            raise ReciprocityPreconditionError(f"B must be {size}x{size} to act on a rank {size} lattice")
        object.__setattr__(self, "B", tuple(tuple(int(v) for v in row) for row in self.B))
        psi = tuple(Fraction(v) for v in self.psi) if self.psi else (Fraction(0),) * size
        if len(psi) != size:
            raise ReciprocityPreconditionError(f"psi must have {size} dual coordinates")
        object.__setattr__(self, "psi", psi)
        if self.r == 0:
            raise ReciprocityPreconditionError("Modulus r must be nonzero")
        if not self.form.is_symmetric():
            raise ReciprocityPreconditionError("B is not self-adjoint for the lattice inner product")
        if self.form.det() == 0:
            raise ReciprocityPreconditionError("B must be invertible")
        failures = check_conditions(self)
        if failures:
            raise ReciprocityPreconditionError("Integrality conditions fail: " + ", ".join(failures))

    @property
    def rank(self) -> int:
        return self.lattice.rank

    @cached_property
    def action(self) -> sympy.Matrix:
        return sympy.Matrix(self.B)

    @cached_property
    def form(self) -> sympy.Matrix:
        """The symmetric matrix ``Q`` of ``<x, By>`` in lattice coordinates."""

        return self.lattice.gram_matrix * self.action

    @cached_property
    def dual_form(self) -> sympy.Matrix:
        """Matrix of ``<mu, B nu>`` in dual coordinates."""

        return self.lattice.dual_gram * self.action.T

    def normalized(self) -> "GaussSumProblem":
        """The equivalent problem with positive modulus: ``(B, r) -> (-B, -r)`` when ``r < 0``."""

        if self.r > 0:
            return self
        flipped = tuple(tuple(-v for v in row) for row in self.B)
        return GaussSumProblem(self.lattice, flipped, self.psi, -self.r, audit=self.audit)


def _quadratic_integral(matrix: sympy.Matrix, scale: int) -> bool:
    """Whether ``scale * x^T M x / 2`` is integral for every integer vector ``x``."""

    size = matrix.shape[0]
    for i in range(size):
        if not _is_integer(_fraction(matrix[i, i]) * scale / 2):
            return False
        for j in range(i + 1, size):
            if not _is_integer(_fraction(matrix[i, j]) * scale):
                return False
    return True


def check_conditions(problem: GaussSumProblem) -> List[str]:
    """Names of the integrality conditions that fail, checked on basis vectors."""

    r = problem.r
    size = problem.rank
    form = problem.form
    dual_gram = problem.lattice.dual_gram
    psi = problem.psi
    failures: List[str] = []
    if not _quadratic_integral(form, r):
        failures.append("r<l,Bl>/2")
    if not all(_is_integer(_fraction(form[i, j])) for i in range(size) for j in range(size)):
        failures.append("<l,Be>")
    if not all(_is_integer(r * value) for value in psi):
        failures.append("r<l,psi>")
    if not _quadratic_integral(problem.dual_form, r):
        failures.append("r<m,Bm>/2")
    if not all(_is_integer(r * _fraction(dual_gram[i, j])) for i in range(size) for j in range(size)):
        failures.append("r<m,x>")
    dual_psi = [sum((_fraction(dual_gram[i, j]) * psi[j] for j in range(size)), Fraction(0)) for i in range(size)]
    if not all(_is_integer(r * value) for value in dual_psi):
        failures.append("r<m,psi>")
    return failures


def _validate_scalar(a: int, b: int, c: int) -> None:
    if a == 0 or c == 0:
        raise ReciprocityPreconditionError(f"Coefficients a and c must be nonzero, got a={a}, c={c}")
    if (a * c + b) % 2:
        raise ReciprocityPreconditionError(f"ac + b must be even, got {a * c + b}")


def gauss_sum_1d(a: int, b: int, c: int) -> complex:
    """``sum_{n < |c|} exp(i*pi*(a n^2 + b n)/c)`` by direct summation."""

    _validate_scalar(a, b, c)
    return phase_sum(RationalPhase(Fraction(a * n * n + b * n, c)) for n in range(abs(c)))


def reciprocity_rhs_1d(a: int, b: int, c: int) -> complex:
    """The reciprocal side, a sum of ``|a|`` terms."""

    _validate_scalar(a, b, c)
    prefactor = math.sqrt(abs(c) / abs(a)) * RationalPhase(Fraction(abs(a * c) - b * b, 4 * a * c)).to_complex()
    total = phase_sum(RationalPhase(Fraction(-(c * n * n + b * n), a)) for n in range(abs(a)))
    return prefactor * total


def lattice_gauss_lhs(problem: GaussSumProblem) -> complex:
    """``vol(L*) * sum over L/rL`` using the box ``{0..|r|-1}^l`` of representatives."""

    size = problem.rank
    r = problem.r
    form = [[int(problem.form[i, j]) for j in range(size)] for i in range(size)]
    psi = problem.psi
    phases = []
    for x in itertools.product(range(abs(r)), repeat=size):
        quadratic = sum(x[i] * form[i][j] * x[j] for i in range(size) for j in range(size))
        linear = sum((x[i] * psi[i] for i in range(size)), Fraction(0))
        phases.append(RationalPhase(Fraction(quadratic, r) + 2 * linear))
    return problem.lattice.dual_volume * phase_sum(phases)


def det_factor(problem: GaussSumProblem) -> complex:
    """``det(B/i)^(-1/2)`` on the principal branch, one eigenvalue at a time.

    Each positive eigenvalue contributes ``exp(i*pi/4)`` and each negative one
    ``exp(-i*pi/4)``, so the product is ``|det B|^(-1/2) exp(i*pi*sigma/4)`` with
    ``sigma`` the signature of ``<x, By>``.
    """

    det = abs(float(problem.action.det()))
    form = np.array(problem.form.tolist(), dtype=float)
    eigenvalues = np.linalg.eigvalsh(form)
    signature = int(np.sum(eigenvalues > 0) - np.sum(eigenvalues < 0))
    return det ** -0.5 * RationalPhase(Fraction(signature, 4)).to_complex()


def lattice_gauss_rhs(problem: GaussSumProblem) -> complex:
    """``det(B/i)^(-1/2) r^(l/2) sum over L*/BL*`` of ``exp(-i*pi*<m+psi, r B^-1 (m+psi)>)``.

    A negative modulus is first rewritten as ``(-B, -r)``, which leaves the
    left-hand side unchanged.  With ``problem.audit`` set the left-hand side is
    recomputed and a disagreement raises :class:`BranchAuditError`.
    """

    normalized = problem.normalized()
    size = normalized.rank
    r = normalized.r
    inverse_form = normalized.form.inv()
    inverse = [[_fraction(inverse_form[i, j]) for j in range(size)] for i in range(size)]
    psi = normalized.psi
    phases = []
    for mu in enumerate_quotient(normalized.action.T):
        shifted = [mu[i] + psi[i] for i in range(size)]
        value = sum((shifted[i] * inverse[i][j] * shifted[j] for i in range(size) for j in range(size)), Fraction(0))
        phases.append(RationalPhase(-r * value))
    result = det_factor(normalized) * r ** (size / 2) * phase_sum(phases)
    if problem.audit:
        expected = lattice_gauss_lhs(problem)
        if abs(expected - result) > AUDIT_TOLERANCE * abs(r) ** size:
            raise BranchAuditError(f"Reciprocity sides disagree: lhs={expected!r}, rhs={result!r}")
    return result


def smith_normal_form(matrix: Sequence[Sequence[int]] | sympy.Matrix) -> Tuple[sympy.Matrix, sympy.Matrix, sympy.Matrix]:
    """Return ``(D, U, V)`` with ``D = U * M * V`` diagonal and ``U``, ``V`` unimodular.

    The reduction moves the smallest nonzero entry of the trailing block to the
    pivot, clears its row and column by integer division and repeats until the
    pivot divides the remaining block.
    """

    work = sympy.Matrix(matrix).copy()
    rows, cols = work.shape
    left, right = sympy.eye(rows), sympy.eye(cols)
    for s in range(min(rows, cols)):
        while True:
            pivot = _smallest_entry(work, s)
            if pivot is None:
                return work, left, right
            i, j = pivot
            if i != s:
                work.row_swap(s, i)
                left.row_swap(s, i)
            if j != s:
                work.col_swap(s, j)
                right.col_swap(s, j)
            clean = True
            for i in range(s + 1, rows):
                q = work[i, s] // work[s, s]
                if q:
                    work.row_op(i, lambda val, col: val - q * work[s, col])
                    left.row_op(i, lambda val, col: val - q * left[s, col])
                clean = clean and work[i, s] == 0
            for j in range(s + 1, cols):
                q = work[s, j] // work[s, s]
                if q:
                    work.col_op(j, lambda val, row: val - q * work[row, s])
                    right.col_op(j, lambda val, row: val - q * right[row, s])
                clean = clean and work[s, j] == 0
            if not clean:
                continue
            offender = _non_divisible(work, s)
            if offender is None:
                break
            work.row_op(s, lambda val, col: val + work[offender, col])
            left.row_op(s, lambda val, col: val + left[offender, col])
        if work[s, s] < 0:
            work.row_op(s, lambda val, col: -val)
            left.row_op(s, lambda val, col: -val)
    return work, left, right


def _smallest_entry(matrix: sympy.Matrix, s: int) -> Tuple[int, int] | None:
    rows, cols = matrix.shape
    best = None
    for i in range(s, rows):
        for j in range(s, cols):
            value = abs(matrix[i, j])
            if value and (best is None or value < best[0]):
                best = (value, i, j)
    return None if best is None else (best[1], best[2])


def _non_divisible(matrix: sympy.Matrix, s: int) -> int | None:
    rows, cols = matrix.shape
    for i in range(s + 1, rows):
        for j in range(s + 1, cols):
            if matrix[i, j] % matrix[s, s]:
                return i
    return None


def _quotient_data(matrix: Sequence[Sequence[int]] | sympy.Matrix) -> Tuple[List[int], sympy.Matrix]:
    square = sympy.Matrix(matrix)
    if square.shape[0] != square.shape[1] or square.det() == 0:
        raise ReciprocityPreconditionError("Quotient enumeration needs a nonsingular square matrix")
    diagonal, left, _ = smith_normal_form(square)
    return [int(abs(diagonal[i, i])) for i in range(square.shape[0])], left


def enumerate_quotient(matrix: Sequence[Sequence[int]] | sympy.Matrix) -> List[Tuple[int, ...]]:
    """Coset representatives of ``Z^l / M Z^l``, exactly ``|det M|`` of them.

    With ``D = U M V`` the cosets are ``U^-1 y`` for ``0 <= y_i < d_i``.
    """

    divisors, left = _quotient_data(matrix)
    inverse = left.inv()
    size = len(divisors)
    representatives = []
    for y in itertools.product(*(range(d) for d in divisors)):
        x = inverse * sympy.Matrix(y)
        representatives.append(tuple(int(x[i]) for i in range(size)))
    return representatives


def coset_key(matrix: Sequence[Sequence[int]] | sympy.Matrix, vector: Sequence[int]) -> Tuple[int, ...]:
    """Canonical label of the coset of ``vector`` in ``Z^l / M Z^l``."""

    divisors, left = _quotient_data(matrix)
    image = left * sympy.Matrix(list(vector))
    return tuple(int(image[i]) % d for i, d in enumerate(divisors))


def _unimodular(rng: np.random.Generator, size: int, moves: int = 3) -> sympy.Matrix:
    matrix = sympy.eye(size)
    for _ in range(moves if size > 1 else 0):
        i, j = rng.choice(size, size=2, replace=False)
        step = int(rng.choice([-1, 1]))
        matrix.row_op(int(i), lambda val, col: val + step * matrix[int(j), col])
    return matrix


def random_problem(
    rng: np.random.Generator,
    *,
    max_rank: int = 3,
    max_modulus: int = 8,
) -> GaussSumProblem:
    """A random problem satisfying every integrality condition.

    The lattice is unimodular with Gram ``P^T P``, the form ``G Bm = 2 R^T R`` is
    even and positive definite, and ``psi`` lies in ``(1/r) Z^l``.
    """

    size = int(rng.integers(1, max_rank + 1))
    r = int(rng.integers(1, max_modulus + 1))
    basis = _unimodular(rng, size)
    gram = basis.T * basis
    factor = sympy.zeros(size, size)
    for i in range(size):
        factor[i, i] = int(rng.integers(1, 3))
        for j in range(i):
            factor[i, j] = int(rng.integers(-1, 2))
    form = 2 * factor.T * factor
    action = gram.inv() * form
    psi = tuple(Fraction(int(v), r) for v in rng.integers(0, r, size=size))
    lattice = IntegralLattice.from_rows([[int(v) for v in row] for row in gram.tolist()])
    return GaussSumProblem(lattice, tuple(tuple(int(v) for v in row) for row in action.tolist()), psi, r)


def random_scalar_triple(rng: np.random.Generator, *, bound_ac: int = 30, bound_b: int = 60) -> Tuple[int, int, int]:
    """Seeded ``(a, b, c)`` with ``a, c`` nonzero and ``ac + b`` even."""

    choices = [v for v in range(-bound_ac, bound_ac + 1) if v]
    a = int(rng.choice(choices))
    c = int(rng.choice(choices))
    b = int(rng.integers(-bound_b, bound_b + 1))
    if (a * c + b) % 2:
        b = b - 1 if b > -bound_b else b + 1
    return a, b, c
