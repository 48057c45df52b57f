"""Quantum SU(N) invariants of torus bundles.

The level ``k`` invariant of the mapping torus of ``U`` is the trace of the
quantum representation of ``U``.  This module evaluates it three independent
ways: as a direct sum over the labels ``Gamma_{N,k}``, through closed
Gauss-sum formulas, and as the trace of an ``S``/``T`` word product.  It also
classifies ``SL(2, Z)`` monodromies into the classes those methods accept.

Every value is framing-uncorrected; :func:`apply_framing` multiplies by a
power of the framing anomaly on request.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Tuple, Union

import numpy as np

from .config import _debug
from .weightlat import (
    LabelError,
    RationalPhase,
    YoungDiagram,
    casimir_exponent,
    casimir_exponents,
    enumerate_diagrams,
    involution_star,
    root_of_unity_sum,
    shifted_norm,
    strange_constant,
)

__all__ = [
    "InvariantDomainError",
    "MethodUnavailable",
    "SL2ZMatrix",
    "SL2ZWord",
    "Trace2",
    "TraceMinus2",
    "Hyperbolic",
    "FiniteOrder",
    "BundleClass",
    "InvariantResult",
    "FINITE_ORDER_TAGS",
    "METHODS",
    "t_matrix_entry",
    "t_matrix_cft",
    "central_charge",
    "anomaly_phase",
    "invariant_direct",
    "curve_operator_eigenvalue",
    "invariant_su2_link_direct",
    "invariant_su2_link_closed",
    "invariant_su2_closed",
    "invariant_su3_closed",
    "verlinde_dim",
    "tilde_verlinde",
    "invariant_su3_tilde1",
    "invariant_finite_order",
    "invariant_hyperbolic_modulus",
    "sl2z_word",
    "sl2z_matrix",
    "representative",
    "invariant_word_modulus",
    "classify",
    "s_matrix",
    "s_matrix_unnormalized",
    "rank_D",
    "framing_factor",
    "apply_framing",
    "invariant",
    "random_sl2z",
]

FINITE_ORDER_TAGS = ("id", "varpi", "f3", "f3^-1", "f4", "f4^-1", "f6", "f6^-1")
METHODS = ("direct", "closed", "word")


class InvariantDomainError(ValueError):
    """Raised when an evaluator is called outside the domain of its formula."""


class MethodUnavailable(RuntimeError):
    """Raised when no evaluator of the requested kind exists for a bundle class."""


@dataclass(frozen=True)
class SL2ZMatrix:
    """An integer matrix ``[[a, b], [c, d]]`` of determinant one."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, int(getattr(self, name)))
        if self.a * self.d - self.b * self.c != 1:
            raise InvariantDomainError(f"{self.as_tuple()} has determinant {self.a * self.d - self.b * self.c}, not 1")

    @classmethod
    def parse(cls, text: str) -> "SL2ZMatrix":
        """Read ``"a,b,c,d"``."""

        parts = [p.strip() for p in text.split(",")]
        if len(parts) != 4:
            raise InvariantDomainError(f"Expected four comma-separated integers, got {text!r}")
        try:
            return cls(*(int(p) for p in parts))
        except ValueError as exc:
            raise InvariantDomainError(f"Matrix entries must be integers, got {text!r}") from exc

    @classmethod
    def identity(cls) -> "SL2ZMatrix":
        return cls(1, 0, 0, 1)

    @classmethod
    def S(cls) -> "SL2ZMatrix":
        return cls(0, -1, 1, 0)

    @classmethod
    def T(cls, power: int = 1) -> "SL2ZMatrix":
        return cls(1, power, 0, 1)

    @property
    def trace(self) -> int:
        return self.a + self.d

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.d

    def __matmul__(self, other: "SL2ZMatrix") -> "SL2ZMatrix":
        return SL2ZMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> "SL2ZMatrix":
        return SL2ZMatrix(-self.a, -self.b, -self.c, -self.d)

    def inverse(self) -> "SL2ZMatrix":
        return SL2ZMatrix(self.d, -self.b, -self.c, self.a)

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


@dataclass(frozen=True)
class Trace2:
    """The class of ``[[1, -b], [0, 1]]``."""

    shear: int

    def to_dict(self) -> Dict[str, object]:
        return {"kind": "trace2", "shear": self.shear}


@dataclass(frozen=True)
class TraceMinus2:
    """The class of ``-[[1, -b], [0, 1]]``."""

    shear: int

    def to_dict(self) -> Dict[str, object]:
        return {"kind": "trace-2", "shear": self.shear}


@dataclass(frozen=True)
class Hyperbolic:
    matrix: SL2ZMatrix

    def to_dict(self) -> Dict[str, object]:
        return {"kind": "hyperbolic", "matrix": list(self.matrix.as_tuple())}


@dataclass(frozen=True)
class FiniteOrder:
    tag: str

    def __post_init__(self) -> None:
        if self.tag not in FINITE_ORDER_TAGS:
            raise InvariantDomainError(f"Unknown finite order tag {self.tag!r}; choose from {', '.join(FINITE_ORDER_TAGS)}")

    def to_dict(self) -> Dict[str, object]:
        return {"kind": "finite-order", "tag": self.tag}


BundleClass = Union[Trace2, TraceMinus2, Hyperbolic, FiniteOrder]


@dataclass(frozen=True)
class InvariantResult:
    value: complex
    N: int
    k: int
    r: int
    method: str
    framing_corrected: bool = False

    def to_dict(self) -> Dict[str, object]:
        return {
            "N": self.N,
            "k": self.k,
            "r": self.r,
            "method": self.method,
            "re": float(self.value.real),
            "im": float(self.value.imag),
            "framing_corrected": self.framing_corrected,
        }


@dataclass(frozen=True)
class SL2ZWord:
    """Letters over ``S``, ``T``, ``T^-1`` whose product is ``sign * U``."""

    letters: Tuple[str, ...]
    sign: int = 1

    def product(self) -> SL2ZMatrix:
        result = SL2ZMatrix.identity()
        for letter in self.letters:
            result = result @ _LETTERS[letter]
        return result

    def __len__(self) -> int:
        return len(self.letters)


_LETTERS = {"S": SL2ZMatrix.S(), "T": SL2ZMatrix.T(1), "T^-1": SL2ZMatrix.T(-1)}


def _check_level(N: int, k: int) -> int:
    if N < 2:
        raise InvariantDomainError(f"Rank parameter N must be at least 2, got {N}")
    if k < 0:
        raise InvariantDomainError(f"Level must be non-negative, got {k}")
    return k + N


def _require_shear(b: int) -> None:
    if b == 0:
        raise InvariantDomainError("Closed forms need a nonzero shear; use the Verlinde count for b = 0")


def _sign(b: int) -> int:
    return 1 if b > 0 else -1


def _phase(q: Fraction) -> complex:
    return RationalPhase(q).to_complex()


def t_matrix_entry(N: int, k: int, diagram: YoungDiagram) -> complex:
    """``a^E(lambda)`` with ``a = exp(-2 pi i / (2 N r))``."""

    r = _check_level(N, k)
    if not diagram.in_level(N, k):
        raise LabelError(f"Diagram {diagram} is not a level {k} label for SU({N})")
    return _phase(Fraction(-casimir_exponent(diagram, N), N * r))


def central_charge(N: int, k: int) -> Fraction:
    r = _check_level(N, k)
    return Fraction((N * N - 1) * k, r)


def t_matrix_cft(N: int, k: int, diagram: YoungDiagram) -> complex:
    """Conformal-field-theory normalisation ``exp(i pi (<l+rho,l+rho>/r - <rho,rho>/N))``."""

    r = _check_level(N, k)
    if not diagram.in_level(N, k):
        raise LabelError(f"Diagram {diagram} is not a level {k} label for SU({N})")
    return _phase(shifted_norm(diagram, N) / r - strange_constant(N) / N)


def anomaly_phase(N: int, k: int) -> complex:
    """``exp(2 pi i c / 24)^3``, the effect of one unit of framing change."""

    return _phase(central_charge(N, k) / 4)


def _trace_sum(N: int, k: int, b: int, self_dual_only: bool) -> complex:
    r = k + N
    exponents = casimir_exponents(N, k)
    if self_dual_only:
        labels = enumerate_diagrams(N, k)
        exponents = tuple(e for e, d in zip(exponents, labels) if involution_star(d, N) == d)
    return root_of_unity_sum((-b * e for e in exponents), N * r)


def invariant_direct(N: int, k: int, cls: BundleClass) -> InvariantResult:
    """Trace of ``T^-b``: the sum of ``t_lambda^b``, over self-dual labels for trace ``-2``."""

    r = _check_level(N, k)
    if isinstance(cls, Trace2):
        value = _trace_sum(N, k, cls.shear, self_dual_only=False)
    elif isinstance(cls, TraceMinus2):
        value = _trace_sum(N, k, cls.shear, self_dual_only=True)
    else:
        raise MethodUnavailable(f"Direct label sums exist only for trace +-2 classes, not {cls}")
    return InvariantResult(value, N, k, r, "direct")


def curve_operator_eigenvalue(k: int, j: int, l: int) -> float:
    """Eigenvalue of the ``j``-coloured meridian on basis vector ``l``: ``chi_j(pi (l+1)/r)``."""

    r = _check_level(2, k)
    if not (0 <= j <= k and 0 <= l <= k):
        raise InvariantDomainError(f"Colours must lie in 0..{k}, got j={j}, l={l}")
    return math.sin(math.pi * (j + 1) * (l + 1) / r) / math.sin(math.pi * (l + 1) / r)


def invariant_su2_link_direct(k: int, b: int, j: int) -> complex:
    r = _check_level(2, k)
    if not 0 <= j <= k:
        raise InvariantDomainError(f"Colour j={j} outside 0..{k}")
    n = np.arange(k + 1, dtype=np.int64)
    # exponents of exp(i pi q / (2r)), reduced in integers before scaling
    exponents = (-b * (n * n + 2 * n)) % (4 * r)
    phases = np.exp(1j * math.pi * exponents / (2 * r))
    eigenvalues = np.sin(math.pi * (j + 1) * (n + 1) / r) / np.sin(math.pi * (n + 1) / r)
    return complex(np.dot(phases, eigenvalues))


def invariant_su2_link_closed(k: int, b: int, j: int) -> complex:
    """SU(2) invariant of the shear-``b`` bundle containing a ``j``-coloured fibre-parallel link."""

    r = _check_level(2, k)
    _require_shear(b)
    if not 0 <= j <= k:
        raise InvariantDomainError(f"Colour j={j} outside 0..{k}")
    numerators = []
    denominator = 4 * b * r
    for n in range(abs(b)):
        for l in range(j + 1):
            m = 2 * l - j
            # 2 (r n^2 / b + m^2 / (4 b r) + m n / b), over the common denominator 4 b r
            numerators.append(2 * (4 * r * r * n * n + m * m + 4 * r * m * n))
    gauss = root_of_unity_sum(numerators, denominator)
    scale = math.sqrt(r / (2 * abs(b))) * _phase(Fraction(-_sign(b), 4))
    tail = (j + 1) / 2 + ((-1) ** j) * (j + 1) / 2 * _phase(Fraction(-b * r, 2))
    return _phase(Fraction(b, 2 * r)) * (scale * gauss - tail)


def invariant_su2_closed(k: int, b: int) -> complex:
    r = _check_level(2, k)
    _require_shear(b)
    gauss = root_of_unity_sum((2 * r * n * n for n in range(abs(b))), b)
    scale = math.sqrt(r / (2 * abs(b))) * _phase(Fraction(-_sign(b), 4))
    return _phase(Fraction(b, 2 * r)) * (scale * gauss - 0.5 - 0.5 * _phase(Fraction(-r * b, 2)))


def invariant_su3_closed(k: int, b: int) -> complex:
    """SU(3) invariant of the shear-``b`` bundle as two Gauss sums and a constant part."""

    r = _check_level(3, k)
    _require_shear(b)
    size = 3 * abs(b)
    double = root_of_unity_sum(
        (2 * r * (n * n + m * m - n * m) for n in range(size) for m in range(size)), b
    )
    single = root_of_unity_sum((3 * r * n * n for n in range(2 * abs(b))), 2 * b)
    first = -1j * r / (18 * math.sqrt(3) * b) * double
    second = -0.5 * math.sqrt(3 * r / (2 * abs(b))) * _phase(Fraction(-_sign(b), 4)) * single
    constant = 1 / 3 + 2 / 3 * _phase(Fraction(-2 * r * b, 3))
    return _phase(Fraction(2 * b, r)) * (first + second + constant)


def verlinde_dim(N: int, k: int) -> int:
    """Dimension of the level ``k`` space of the torus, ``C(r-1, N-1)``."""

    r = _check_level(N, k)
    return math.comb(r - 1, N - 1)


def tilde_verlinde(N: int, k: int) -> complex:
    """Number of self-dual labels, via the closed product formulas."""

    r = _check_level(N, k)
    half = Fraction(r, 2)
    half_up = Fraction(r + 1, 2)
    if N % 2 == 0:
        n = N // 2
        first = (half - Fraction(n, 2)) * math.prod((half - l for l in range(1, n)), start=Fraction(1))
        second = math.prod((half_up - l for l in range(1, n + 1)), start=Fraction(1))
        scale = Fraction(1, math.factorial(n))
    else:
        n = (N + 1) // 2
        first = math.prod((half - l for l in range(1, n)), start=Fraction(1))
        second = math.prod((half_up - l for l in range(1, n)), start=Fraction(1))
        scale = Fraction(1, 2 * math.factorial(n - 1))
    parity = 1 if r % 2 == 0 else -1
    return complex(scale * ((first + second) + (first - second) * parity))


def invariant_su3_tilde1(k: int) -> complex:
    """SU(3) invariant of the trace ``-2`` bundle with shear 1, split on ``r mod 4``."""

    r = _check_level(3, k)
    gauss = math.sqrt(r / 2) * _phase(Fraction(-1, 4))
    if r % 4 == 0:
        partial = gauss - 1
    elif r % 4 == 2:
        partial = 0j
    else:
        partial = (gauss * (1 + _phase(Fraction(r, 2))) - 1) / 2
    return _phase(Fraction(2, r)) * partial


def invariant_finite_order(k: int, tag: str) -> complex:
    """SU(2) invariants of the periodic bundles; inverse tags give complex conjugates."""

    r = _check_level(2, k)
    FiniteOrder(tag)
    base, _, inverse = tag.partition("^")
    if base in {"id", "varpi"}:
        value = complex(r - 1)
    elif base == "f4":
        value = (_phase(Fraction(r)) + 1) / 2
    elif base == "f6":
        value = 1j / (2 * math.sqrt(3)) * (2 * _phase(Fraction(2 * r, 3)) + 1) + 0.5
    else:
        value = 1j / (2 * math.sqrt(3)) * (2 * _phase(Fraction(-2 * r, 3)) + 1) - 0.5
    return value.conjugate() if inverse else value


def invariant_hyperbolic_modulus(k: int, U: SL2ZMatrix) -> float:
    """``|Z_k|`` of an Anosov bundle from the double Gauss sum; the framing phase is dropped.

    When ``a + d -+ 2`` both divide ``r`` every phase equals one and the
    difference of the two terms is taken in a cancellation-free form.
    """

    r = _check_level(2, k)
    if abs(U.trace) <= 2:
        raise InvariantDomainError(f"{U} is not hyperbolic (trace {U.trace})")
    a, b, c, d = U.as_tuple()
    plus, minus = U.trace - 2, U.trace + 2
    if r % plus == 0 and r % minus == 0:
        _debug(f"resonant level k={k} for {U}")
        lo, hi = abs(plus), abs(minus)
        return abs(hi - lo) / (2 * (math.sqrt(hi) + math.sqrt(lo)))
    total = 0j
    for sign, D in ((1, plus), (-1, minus)):
        numerators = (
            2 * r * (-c * g * g + (a - d) * g * beta + b * beta * beta)
            for beta in range(abs(c))
            for g in range(1, abs(D) + 1)
        )
        total += sign * root_of_unity_sum(numerators, D) / (2 * abs(c) * math.sqrt(abs(D)))
    return abs(total)


def sl2z_word(U: SL2ZMatrix) -> SL2ZWord:
    """Euclidean reduction of ``U`` into ``T^q1 S T^q2 S ... T^x`` up to sign."""

    letters: List[str] = []
    current = U
    while current.c != 0:
        q = current.a // current.c
        letters.extend(_t_power(q))
        letters.append("S")
        current = SL2ZMatrix.S().inverse() @ SL2ZMatrix.T(-q) @ current
    sign = current.a
    letters.extend(_t_power(sign * current.b))
    return SL2ZWord(tuple(letters), sign)


def _t_power(q: int) -> List[str]:
    return ["T"] * q if q >= 0 else ["T^-1"] * (-q)


def sl2z_matrix(tag: str) -> SL2ZMatrix:
    """Representative matrix of a finite order tag."""

    FiniteOrder(tag)
    base, _, inverse = tag.partition("^")
    matrix = {
        "id": SL2ZMatrix.identity(),
        "varpi": -SL2ZMatrix.identity(),
        "f3": SL2ZMatrix(0, -1, 1, -1),
        "f4": SL2ZMatrix(0, -1, 1, 0),
        "f6": SL2ZMatrix(0, 1, -1, 1),
    }[base]
    return matrix.inverse() if inverse else matrix


def s_matrix_unnormalized(k: int) -> np.ndarray:
    """Hopf-link values ``[(j+1)(l+1)]`` as ``sin(pi (j+1)(l+1)/r) / sin(pi/r)``."""

    r = _check_level(2, k)
    index = np.arange(1, k + 2)
    return np.sin(np.pi * np.outer(index, index) / r) / math.sin(math.pi / r)


def rank_D(k: int) -> float:
    r = _check_level(2, k)
    return math.sqrt(r / 2) / math.sin(math.pi / r)


def s_matrix(k: int) -> np.ndarray:
    """``S = D^-1 s``, entrywise ``sqrt(2/r) sin(pi (j+1)(l+1)/r)``."""

    return s_matrix_unnormalized(k) / rank_D(k)


def framing_factor(k: int) -> complex:
    """``D^-1 * sum_j T_jj^-1 [j+1]^2``."""

    r = _check_level(2, k)
    quantum = np.array([math.sin(math.pi * (j + 1) / r) / math.sin(math.pi / r) for j in range(k + 1)])
    inverse_t = np.array([t_matrix_entry(2, k, YoungDiagram.from_rows([j])).conjugate() for j in range(k + 1)])
    return complex(np.sum(inverse_t * quantum**2)) / rank_D(k)


def apply_framing(result: InvariantResult, power: int) -> InvariantResult:
    value = result.value * anomaly_phase(result.N, result.k) ** power
    return dataclasses.replace(result, value=value, framing_corrected=True)


def invariant_word_modulus(k: int, U: SL2ZMatrix) -> float:
    """``|tr rho(U)|`` with ``rho(S)`` the S-matrix and ``rho(T)`` the inverse T-diagonal."""

    _check_level(2, k)
    word = sl2z_word(U)
    t_inverse = np.array([t_matrix_entry(2, k, YoungDiagram.from_rows([j])).conjugate() for j in range(k + 1)])
    images = {"S": s_matrix(k).astype(complex), "T": np.diag(t_inverse), "T^-1": np.diag(t_inverse.conjugate())}
    product = np.eye(k + 1, dtype=complex)
    for letter in word.letters:
        product = product @ images[letter]
    return float(abs(np.trace(product)))


def _egcd(x: int, y: int) -> Tuple[int, int, int]:
    if y == 0:
        return (abs(x), 1 if x >= 0 else -1, 0)
    g, s, t = _egcd(y, x % y)
    return g, t, s - (x // y) * t


def _parabolic_shear(U: SL2ZMatrix, eps: int) -> int:
    a, b, c, d = U.as_tuple()
    p, q = -b, a - eps
    if p == 0 and q == 0:
        p, q = d - eps, -c
    g = math.gcd(p, q)
    p, q = p // g, q // g
    _, s, t = _egcd(p, q)
    conjugator = SL2ZMatrix(p, -t, q, s)
    reduced = conjugator.inverse() @ U @ conjugator
    if reduced.c != 0 or reduced.a != eps:
        raise InvariantDomainError(f"Conjugation of {U} failed to reach upper triangular form")
    return -eps * reduced.b


def classify(U: SL2ZMatrix) -> BundleClass:
    """Conjugacy class of a monodromy: shear for trace +-2, order and orientation otherwise."""

    trace = U.trace
    if U == SL2ZMatrix.identity():
        return FiniteOrder("id")
    if U == -SL2ZMatrix.identity():
        return FiniteOrder("varpi")
    if abs(trace) > 2:
        return Hyperbolic(U)
    if abs(trace) == 2:
        eps = trace // 2
        shear = _parabolic_shear(U, eps)
        return Trace2(shear) if eps == 1 else TraceMinus2(shear)
    # elliptic: the sign of c is the orientation of the rotation
    if trace == -1:
        return FiniteOrder("f3" if U.c > 0 else "f3^-1")
    if trace == 0:
        return FiniteOrder("f4" if U.c > 0 else "f4^-1")
    return FiniteOrder("f6" if U.c < 0 else "f6^-1")


def representative(cls: BundleClass) -> SL2ZMatrix:
    if isinstance(cls, Trace2):
        return SL2ZMatrix(1, -cls.shear, 0, 1)
    if isinstance(cls, TraceMinus2):
        return -SL2ZMatrix(1, -cls.shear, 0, 1)
    if isinstance(cls, Hyperbolic):
        return cls.matrix
    return sl2z_matrix(cls.tag)


def _closed_value(N: int, k: int, cls: BundleClass) -> complex:
    if isinstance(cls, (Trace2, TraceMinus2)) and cls.shear == 0:
        return complex(verlinde_dim(N, k)) if isinstance(cls, Trace2) else tilde_verlinde(N, k)
    if N == 2:
        if isinstance(cls, (Trace2, TraceMinus2)):
            return invariant_su2_closed(k, cls.shear)
        if isinstance(cls, FiniteOrder):
            return invariant_finite_order(k, cls.tag)
        return complex(invariant_hyperbolic_modulus(k, cls.matrix))
    if N == 3 and isinstance(cls, Trace2):
        return invariant_su3_closed(k, cls.shear)
    if N == 3 and cls == TraceMinus2(1):
        return invariant_su3_tilde1(k)
    raise MethodUnavailable(f"No closed form for SU({N}) and {cls}")


def invariant(
    N: int,
    k: int,
    cls: BundleClass,
    method: str = "direct",
    *,
    colour: int | None = None,
) -> InvariantResult:
    """Evaluate with the requested method, raising :class:`MethodUnavailable` when none applies."""

    r = _check_level(N, k)
    if method not in METHODS:
        raise InvariantDomainError(f"Unknown method {method!r}; choose from {', '.join(METHODS)}")
    if colour is not None:
        if N != 2 or not isinstance(cls, Trace2) or method == "word":
            raise MethodUnavailable("Coloured links are supported for SU(2) trace 2 classes with direct or closed methods")
        if method == "direct":
            value = invariant_su2_link_direct(k, cls.shear, colour)
        else:
            if cls.shear == 0:
                raise MethodUnavailable("The linked closed form needs a nonzero shear")
            value = invariant_su2_link_closed(k, cls.shear, colour)
        return InvariantResult(value, N, k, r, method)
    if method == "direct":
        if isinstance(cls, FiniteOrder) and cls.tag in {"id", "varpi"}:
            cls = Trace2(0) if cls.tag == "id" else TraceMinus2(0)
        return invariant_direct(N, k, cls)
    if method == "closed":
        return InvariantResult(_closed_value(N, k, cls), N, k, r, method)
    if N != 2:
        raise MethodUnavailable(f"Word products are implemented for SU(2) only, not SU({N})")
    return InvariantResult(complex(invariant_word_modulus(k, representative(cls))), N, k, r, method)


def random_sl2z(rng: np.random.Generator, length: int = 6) -> SL2ZMatrix:
    """Seeded product of ``length`` random letters ``S``, ``T``, ``T^-1``."""

    letters = list(_LETTERS)
    result = SL2ZMatrix.identity()
    for index in rng.integers(0, len(letters), size=length):
        result = result @ _LETTERS[letters[int(index)]]
    return result
