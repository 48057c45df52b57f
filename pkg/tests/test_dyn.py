import math

import numpy as np
import pytest

from torus_wrt.dyn import (
    NotAnosovError,
    estimate,
    fixed_point_count,
    fixed_point_ratios,
    matrix_power,
    random_hyperbolic,
    root_limit,
    spectral_radius,
    stretch_via_invariant,
)
from torus_wrt.wrt import SL2ZMatrix

CAT_MAP = SL2ZMatrix(2, 1, 1, 1)
GOLDEN_SQUARE = (3 + math.sqrt(5)) / 2


def test_spectral_radius():
    assert spectral_radius(CAT_MAP) == pytest.approx(GOLDEN_SQUARE)
    assert spectral_radius(SL2ZMatrix(3, 1, 2, 1)) == pytest.approx(2 + math.sqrt(3))
    assert spectral_radius(SL2ZMatrix(-2, -1, -1, -1)) == pytest.approx(GOLDEN_SQUARE)


@pytest.mark.parametrize("matrix", [SL2ZMatrix(1, 1, 0, 1), SL2ZMatrix(0, -1, 1, 0), SL2ZMatrix(-1, 0, 0, -1)])
def test_spectral_radius_flags_non_hyperbolic(matrix):
    with pytest.warns(RuntimeWarning, match="not hyperbolic"):
        assert spectral_radius(matrix) == pytest.approx(1.0)


@pytest.mark.parametrize("n", [1, 4])
def test_stretch_from_resonant_level(n):
    result = stretch_via_invariant(CAT_MAP, n)
    assert result.lambda_ == pytest.approx(GOLDEN_SQUARE, rel=1e-12)
    assert result.to_dict() == {"lambda": result.lambda_, "n": n, "method": "invariant"}


def test_stretch_of_trace_four():
    assert stretch_via_invariant(SL2ZMatrix(3, 1, 2, 1), 2).lambda_ == pytest.approx(2 + math.sqrt(3))


def test_stretch_of_random_anosov_maps():
    rng = np.random.default_rng(7)
    for _ in range(10):
        U = random_hyperbolic(rng)
        assert abs(U.trace) > 2
        assert max(abs(x) for x in U.as_tuple()) <= 20
        expected = spectral_radius(U)
        for n in range(1, 6):
            assert stretch_via_invariant(U, n).lambda_ == pytest.approx(expected, rel=1e-9)


def test_non_anosov_maps_are_rejected():
    rotation = SL2ZMatrix(0, -1, 1, 0)
    with pytest.raises(NotAnosovError):
        stretch_via_invariant(rotation)
    with pytest.raises(NotAnosovError):
        fixed_point_count(SL2ZMatrix(1, 3, 0, 1), 1)
    with pytest.raises(ValueError):
        stretch_via_invariant(CAT_MAP, 0)
    with pytest.raises(ValueError):
        fixed_point_count(CAT_MAP, 0)


def test_fixed_points():
    assert fixed_point_count(CAT_MAP, 1) == 5
    ratios = fixed_point_ratios(CAT_MAP, 16)
    assert len(ratios) == 15
    assert ratios[-1] == pytest.approx(GOLDEN_SQUARE, rel=0.01)


@pytest.mark.parametrize("n", [5, 10, 20])
def test_root_limit(n):
    assert root_limit(CAT_MAP, n).lambda_ == pytest.approx(GOLDEN_SQUARE, rel=1e-6)


def test_matrix_power():
    assert matrix_power(CAT_MAP, 0) == SL2ZMatrix.identity()
    assert matrix_power(CAT_MAP, 1) == CAT_MAP
    assert matrix_power(CAT_MAP, 3) == CAT_MAP @ CAT_MAP @ CAT_MAP
    assert matrix_power(CAT_MAP, -2) @ matrix_power(CAT_MAP, 2) == SL2ZMatrix.identity()


def test_estimate_methods():
    for method in ("invariant", "root", "spectral"):
        result = estimate(CAT_MAP, 3, method)
        assert result.method == method
        assert result.lambda_ == pytest.approx(GOLDEN_SQUARE, rel=1e-6)
    with pytest.raises(ValueError):
        estimate(CAT_MAP, 1, "guess")
    with pytest.raises(NotAnosovError):
        estimate(SL2ZMatrix.identity(), 1, "spectral")
