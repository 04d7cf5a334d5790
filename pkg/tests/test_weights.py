import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leray_trudinger.errors import DomainError
from leray_trudinger.weights import (
    E1,
    E2,
    E2_of_t,
    T_CAP,
    WeightPoint,
    gradient_bound_holds,
    weight_derivative,
)


def test_E1_examples():
    assert E1(1.0) == 1.0
    assert E1(math.exp(-1.0)) == pytest.approx(2.0, rel=1e-15)
    assert E1(0.5) == pytest.approx(1.0 + math.log(2.0), rel=1e-15)


def test_E2_examples():
    assert E2(1.0) == 1.0
    assert E2(math.exp(1.0 - math.e)) == pytest.approx(2.0, rel=1e-14)
    mpmath.mp.dps = 40
    ref = float(1 + mpmath.log(1 + mpmath.log(2)))
    assert E2(0.5) == pytest.approx(ref, rel=1e-15)


def test_E2_accurate_near_one():
    s = 1.0 - 1e-12
    mpmath.mp.dps = 50
    ref = float(1 + mpmath.log(1 + mpmath.log(mpmath.e / mpmath.mpf(s)) - 1))
    assert E2(s) == pytest.approx(ref, rel=1e-15)


@pytest.mark.parametrize("bad", [0.0, -0.1, 1.5, float("nan")])
def test_domain_errors(bad):
    with pytest.raises(DomainError):
        E1(bad)
    with pytest.raises(DomainError):
        E2(bad)


@pytest.mark.parametrize("bad", [1.0, 0.0])
def test_derivative_rejects_endpoints(bad):
    with pytest.raises(DomainError):
        weight_derivative("E1", bad)


def test_derivative_examples():
    assert weight_derivative("E1", 0.5) == -2.0
    assert gradient_bound_holds(2, 0.1)
    with pytest.raises(DomainError):
        weight_derivative("E3", 0.5)


def _fd(kind, s, exps, h=1e-6):
    def w(x):
        if kind == "E1":
            return E1(x)
        if kind == "E2":
            return E2(x)
        return E1(x) ** exps[0] * E2(x) ** exps[1]

    return (w(s + h) - w(s - h)) / (2 * h)


@pytest.mark.parametrize("kind", ["E1", "E2", "E1_power_E2_power"])
def test_derivative_matches_finite_differences(kind):
    rng = np.random.default_rng(3)
    exps = (0.5, -1.0)
    for s in rng.uniform(0.01, 0.99, size=100):
        fd = _fd(kind, s, exps)
        an = weight_derivative(kind, s, exps)
        assert an == pytest.approx(fd, rel=1e-6)
    assert weight_derivative(kind, 0.3, exps) == pytest.approx(_fd(kind, 0.3, exps), rel=1e-6)


@given(st.floats(min_value=1e-300, max_value=1.0))
def test_weights_at_least_one(s):
    assert E1(s) >= 1.0
    assert E2(s) >= 1.0


def test_monotone_decreasing():
    s = np.linspace(1e-6, 1.0, 2001)
    assert np.all(np.diff(E1(s)) < 0)
    assert np.all(np.diff(E2(s)) < 0)


@given(st.floats(min_value=1.0, max_value=T_CAP))
@settings(max_examples=200)
def test_composition_identity(t):
    r = math.exp(1.0 - t)
    assert E1(r) == pytest.approx(t, rel=1e-14)
    assert E2(r) == pytest.approx(E2_of_t(t), rel=1e-14)


def test_weight_point_round_trip():
    for t in (1.0, 2.5, 37.0, 699.0):
        p = WeightPoint.from_t(t)
        assert p.r_over_R <= 1.0
        assert WeightPoint.from_ratio(p.r_over_R).t == pytest.approx(t, rel=1e-14)
    far = WeightPoint.from_t(800.0)
    assert far.r_over_R == 0.0 and far.E1 == 800.0
    assert far.E2 == pytest.approx(1 + math.log(800.0))
    with pytest.raises(DomainError):
        WeightPoint.from_t(0.5)


def test_gradient_bound_grid():
    s = np.linspace(1e-4, 0.999, 500)
    for n in (2, 3, 4, 8):
        assert np.all(gradient_bound_holds(n, s))
