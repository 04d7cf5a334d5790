import math

import numpy as np
import pytest

from leray_trudinger.errors import DomainError, IntegrandError
from leray_trudinger.quadrature import (
    GAUSS_WEIGHTS,
    KRONROD_WEIGHTS,
    NODES,
    DiscGrid,
    QuadratureSpec,
    Tail,
    adaptive_integrate,
    integrate_disc_2d,
    integrate_interval,
    integrate_log,
    integrate_radius,
    truncated_series,
)


def test_rule_exactness():
    for deg in range(23):
        exact = 0.0 if deg % 2 else 2.0 / (deg + 1)
        assert float(KRONROD_WEIGHTS @ NODES**deg) == pytest.approx(exact, abs=1e-14)
    for deg in range(14):
        exact = 0.0 if deg % 2 else 2.0 / (deg + 1)
        assert float(GAUSS_WEIGHTS @ NODES**deg) == pytest.approx(exact, abs=1e-14)


def test_log_examples():
    r = integrate_log(lambda t: np.exp(3.0 * (1.0 - t)), 1.0, tail=Tail.exponential_decay(3))
    assert r.converged and r.value == pytest.approx(1 / 3, rel=1e-12)
    r = integrate_log(lambda t: t**-2.0, 1.0)
    assert r.converged and r.value == pytest.approx(1.0, rel=1e-12)
    r = integrate_log(lambda t: 1.0 / t, 1.0, tail=Tail.power_decay(-1.0))
    assert r.status == "divergent"


def test_harmonic_declared_faster_is_caught():
    r = integrate_log(lambda t: 1.0 / t, 1.0, tail=Tail.power_decay(-2.0))
    assert r.status == "divergent"
    r = integrate_log(lambda t: 1.0 / t, 1.0, tail=Tail.log_power_decay(-2.0))
    assert r.status == "divergent"


def test_log_power_tail():
    # int_1^inf t^-1 (1 + log t)^-1.2 dt = 1 / 0.2
    r = integrate_log(lambda t: (1 + np.log(t)) ** -1.2 / t, 1.0, tail=Tail.log_power_decay(-1.2))
    assert r.converged
    assert r.value == pytest.approx(5.0, rel=1e-10)


def test_finite_harmonic():
    r = integrate_interval(lambda t: 1.0 / t, 1.0, math.exp(5.0))
    assert r.value == pytest.approx(5.0, rel=1e-13)


def test_radius_examples():
    r = integrate_radius(lambda r: 2.0 * r, 1.0)
    assert r.converged and r.value == pytest.approx(1.0, rel=1e-12)
    r = integrate_radius(lambda r: 1.0 / (r * (1.0 - np.log(r)) ** 2), 1.0)
    assert r.value == pytest.approx(1.0, rel=1e-8)


def test_dual_path_random_integrands():
    rng = np.random.default_rng(11)
    for _ in range(20):
        p = rng.uniform(1.5, 4.0)
        k = rng.uniform(0.0, 2.0)
        amp = rng.uniform(0.1, 3.0, size=3)

        def f_t(t, p=p, k=k, amp=amp):
            return amp[0] * t**-p + amp[1] * np.exp(-k * (t - 1)) * t**-2 + amp[2] * t**-p / (1.0 + 1.0 / t)

        log_res = integrate_log(f_t, 1.0, tail=Tail.power_decay(-p))
        rad_res = integrate_radius(lambda r: f_t(1.0 - np.log(r)) / r, 1.0)
        assert log_res.status != "divergent" and rad_res.status != "divergent"
        assert rad_res.value == pytest.approx(log_res.value, rel=1e-6)


def test_tail_soundness_under_tmax_doubling():
    f = lambda t: t**-2.5 + np.exp(-t)  # noqa: E731
    a = integrate_log(f, 1.0, QuadratureSpec(t_max=60.0), Tail.power_decay(-2.5))
    b = integrate_log(f, 1.0, QuadratureSpec(t_max=120.0), Tail.power_decay(-2.5))
    assert a.converged
    assert abs(a.value - b.value) <= a.budget() + b.budget()


def test_nonfinite_sample_raises():
    def f(x):
        return np.where(x > 0.75, np.nan, 1.0)

    with pytest.raises(IntegrandError) as exc:
        adaptive_integrate(f, 0.0, 1.0, rel_tol=1e-10, abs_tol=0.0)
    assert exc.value.t > 0.75


def test_budget_exhaustion_status():
    r = adaptive_integrate(lambda x: np.abs(x - 0.3) ** -0.9, 0.0, 1.0, rel_tol=1e-14, abs_tol=0.0,
                           max_subdivisions=8)
    assert r.status == "budget_exhausted"


def test_truncated_series_monotone_and_limit():
    eps = [10.0**-k for k in range(2, 9)]
    parts = truncated_series(lambda t: np.exp(2.0 * (1.0 - t)), 1.0, eps)
    assert all(b >= a for a, b in zip(parts, parts[1:]))
    assert parts[-1] == pytest.approx(0.5, rel=1e-12)
    with pytest.raises(DomainError):
        truncated_series(lambda t: t, 1.0, [1e-3, 1e-2])


def test_divergence_soundness_growth():
    eps = [10.0**-k for k in range(2, 9)]
    parts = truncated_series(lambda t: np.exp(0.5 * t), 1.0, eps)
    ratios = [b / a for a, b in zip(parts, parts[1:])]
    assert all(r >= 1.1 for r in ratios[-3:])
    assert integrate_log(lambda t: np.exp(0.5 * t), 1.0, tail=Tail.exponential_growth()).status == "divergent"


def test_disc_examples():
    g = DiscGrid()
    assert integrate_disc_2d(lambda a, b: np.ones_like(a), (0, 0), g) == pytest.approx(math.pi, rel=1e-12)
    assert integrate_disc_2d(lambda a, b: np.hypot(a, b), (0, 0), g) == pytest.approx(2 * math.pi / 3, rel=1e-12)
    assert integrate_disc_2d(lambda a, b: 1 / np.hypot(a, b), (0, 0), g) == pytest.approx(2 * math.pi, rel=1e-12)
    # Off-centre singular point: same area.
    assert integrate_disc_2d(lambda a, b: np.ones_like(a), (0.3, -0.2), g) == pytest.approx(math.pi, rel=1e-3)
    with pytest.raises(IntegrandError):
        integrate_disc_2d(lambda a, b: np.where(a > 0.5, np.inf, 1.0), (0, 0), g)


def test_spec_validation():
    with pytest.raises(DomainError):
        QuadratureSpec(rel_tol=0.0)
    assert QuadratureSpec().relaxed(1e-6).rel_tol == 1e-6
