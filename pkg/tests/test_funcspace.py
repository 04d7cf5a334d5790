import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leray_trudinger.errors import ConfigurationError, DomainError, NormalizationError
from leray_trudinger.functionals import I_n, dirichlet_energy
from leray_trudinger.funcspace import (
    FamilySpec,
    GroundStateTransform,
    MeshProfile,
    derivative,
    evaluate,
    make_family,
    normalize_to_unit_hardy,
    profile_from_dict,
    profile_from_json,
    sample_random_mesh,
    scale,
)
from leray_trudinger.geometry import BallDomain

D2 = BallDomain(2)


def fam(kind, domain=D2, **params):
    return make_family(FamilySpec(kind, params), domain)


def test_evaluate_examples():
    assert evaluate(fam("moser_plateau", L=2.0, scale=1.0), 3.0) == 2.0
    assert evaluate(fam("pure_power", a=1.0), 1.0) == 0.0
    u = fam("ground_state_power", s=0.4)
    expect = (math.exp(0.5) - 1.0) * 2.0**0.4
    assert evaluate(u, math.e) == pytest.approx(expect, rel=1e-14)


def test_derivative_examples():
    m = fam("moser_plateau", L=2.0)
    assert derivative(m, 1.5) == 1.0
    assert derivative(m, 5.0) == 0.0
    assert derivative(fam("pure_power", a=2.0), 2.0) == pytest.approx(2.0)
    assert derivative(fam("ground_state_power", s=0.0), 4.0) == pytest.approx(0.25)


def test_domain_checks():
    with pytest.raises(DomainError):
        evaluate(fam("moser_plateau", L=1.0), 0.5)
    d = BallDomain(2, 0.5, 1.0)
    u = fam("moser_plateau", d, L=1.0)
    with pytest.raises(DomainError):
        evaluate(u, 1.2)
    assert evaluate(u, d.t_boundary) == 0.0


def test_family_validation():
    assert fam("moser_plateau", L=0.01).admissible
    assert not fam("ground_state_power", s=0.6).admissible
    assert fam("ground_state_power", s=0.6, cutoff=50.0).admissible
    with pytest.raises(ConfigurationError, match=r"\(a-1\)\*n"):
        fam("pure_power", a=0.3)
    with pytest.raises(ConfigurationError, match="L must be"):
        fam("moser_plateau", L=-1.0)
    with pytest.raises(ConfigurationError):
        fam("nope")


@pytest.mark.parametrize("spec", [
    FamilySpec("moser_plateau", {"L": 3.0, "scale": 0.7}),
    FamilySpec("ground_state_power", {"s": 0.3}),
    FamilySpec("ground_state_power", {"s": -0.2}),
    FamilySpec("ground_state_power", {"s": 0.7, "cutoff": 40.0}),
    FamilySpec("pure_power", {"a": 1.7, "t_cap": 12.0}),
])
@pytest.mark.parametrize("n", [2, 3])
def test_analytic_derivative_matches_fd(spec, n):
    dom = BallDomain(n, 0.6, 1.0)
    u = make_family(spec, dom)
    rng = np.random.default_rng(5)
    kinks = set(u.breakpoints())
    ts = dom.t_boundary + rng.uniform(0.05, 60.0, size=100)
    h = 1e-6
    for t in ts:
        if any(abs(t - k) < 1e-3 for k in kinks):
            continue
        fd = (u.value(t + h) - u.value(t - h)) / (2 * h)
        assert u.slope(t) == pytest.approx(fd, rel=1e-6, abs=1e-9)
        # Residual and amplitude are consistent with the definitions.
        assert u.residual(t) == pytest.approx(u.slope(t) - u.a * u.value(t) / t, rel=1e-9, abs=1e-12)
        assert u.amplitude(t) == pytest.approx(t ** (-u.a) * u.value(t), rel=1e-9, abs=1e-15)


def test_boundary_values_vanish():
    for n in (2, 3, 4):
        d = BallDomain(n, 0.3, 1.0)
        for spec in (FamilySpec("moser_plateau", {"L": 1.0}), FamilySpec("ground_state_power", {"s": 0.1}),
                     FamilySpec("pure_power", {"a": 1.0})):
            assert evaluate(make_family(spec, d), d.t_boundary) == 0.0


def test_amplitude_at_level_matches_direct():
    for u in (fam("ground_state_power", s=0.3), fam("moser_plateau", L=4.0),
              sample_random_mesh(D2, 8, seed=2)):
        for ell in (1.5, 3.0, 10.0, 100.0):
            t = math.exp(ell - 1.0)
            assert u.amplitude_at_level(ell) == pytest.approx(float(u.amplitude(np.array(t))), rel=1e-10)
    far = fam("ground_state_power", s=0.3).amplitude_at_level(1e100)
    assert far == pytest.approx(1e30, rel=1e-12)


def test_random_mesh_deterministic_and_valid():
    a = sample_random_mesh(D2, 10, 2.0, seed=7)
    b = sample_random_mesh(D2, 10, 2.0, seed=7)
    assert a == b
    assert a != sample_random_mesh(D2, 10, 2.0, seed=8)
    assert a.u_nodes[0] == 0.0 and a.t_boundary == D2.t_boundary
    assert np.all(np.diff(a.t_nodes) > 0)
    z = sample_random_mesh(D2, 2, seed=0, compact=True)
    assert z.u_nodes == (0.0, 0.0)
    assert dirichlet_energy(z, D2).value == 0.0


def test_mesh_validation():
    with pytest.raises(ConfigurationError):
        MeshProfile(2, (1.0, 2.0), (1.0, 0.0))
    with pytest.raises(ConfigurationError):
        MeshProfile(2, (1.0, 1.0), (0.0, 0.0))
    with pytest.raises(ConfigurationError):
        MeshProfile(2, (1.0, 2.0), (0.0, 1.0), compact=True)


def test_mesh_evaluation():
    m = MeshProfile(2, (1.0, 2.0, 4.0), (0.0, 1.0, -1.0))
    assert evaluate(m, 1.5) == 0.5
    assert evaluate(m, 3.0) == 0.0
    assert evaluate(m, 10.0) == -1.0
    assert derivative(m, 2.0) == -1.0  # right slope
    assert derivative(m, 5.0) == 0.0
    c = MeshProfile(2, (1.0, 2.0, 4.0), (0.0, 1.0, 0.0), compact=True)
    assert evaluate(c, 10.0) == 0.0


@given(st.floats(min_value=1e-3, max_value=1e3), st.floats(min_value=1.0, max_value=100.0))
@settings(max_examples=50, deadline=None)
def test_scale_is_exact(lam, t):
    for u in (fam("ground_state_power", s=0.2), sample_random_mesh(D2, 6, seed=1)):
        assert evaluate(scale(u, lam), t) == lam * evaluate(u, t) or \
            evaluate(scale(u, lam), t) == pytest.approx(lam * evaluate(u, t), rel=1e-15)


def test_homogeneity_of_I():
    for n in (2, 3):
        d = BallDomain(n)
        u = sample_random_mesh(d, 9, seed=4)
        base = I_n(u, d).value
        for lam in (0.1, 3.0):
            assert I_n(scale(u, lam), d).value == pytest.approx(lam**n * base, rel=1e-10)


def test_normalize():
    u = fam("moser_plateau", L=2.0)
    i = I_n(u, D2).value
    v = normalize_to_unit_hardy(u, D2)
    assert I_n(v, D2).value == pytest.approx(1.0, rel=1e-12)
    # I = 16 gives a factor 1/4 in dimension two.
    w = scale(u, 4.0 / i**0.5)
    assert I_n(w, D2).value == pytest.approx(16.0, rel=1e-12)
    assert normalize_to_unit_hardy(w, D2).factor == pytest.approx(w.factor / 4.0, rel=1e-12)
    assert normalize_to_unit_hardy(v, D2).factor == pytest.approx(v.factor, rel=1e-12)
    with pytest.raises(NormalizationError):
        normalize_to_unit_hardy(sample_random_mesh(D2, 2, compact=True), D2)
    with pytest.raises(NormalizationError):
        normalize_to_unit_hardy(fam("ground_state_power", s=0.7), D2)


def test_serialization_round_trip():
    for u in (fam("ground_state_power", s=0.3), sample_random_mesh(D2, 5, seed=3, compact=True),
              GroundStateTransform(fam("moser_plateau", L=1.0))):
        assert profile_from_json(u.to_json()) == u
        assert profile_from_dict(u.to_dict()).digest() == u.digest()


def test_mesh_refinement_consistency():
    u = fam("ground_state_power", s=0.2, cutoff=30.0)
    exact = I_n(u, D2).value
    errs, hs = [], []
    for m in (16, 32, 64, 128):
        nodes = tuple(np.linspace(1.0, 30.0, m + 1).tolist())
        mesh = MeshProfile(2, nodes, tuple([0.0] * (m + 1))).interpolate(u)
        errs.append(abs(I_n(mesh, D2).value - exact))
        hs.append(29.0 / m)
    orders = [math.log(errs[k] / errs[k + 1]) / math.log(hs[k] / hs[k + 1]) for k in range(3)]
    assert min(orders) >= 1.0
