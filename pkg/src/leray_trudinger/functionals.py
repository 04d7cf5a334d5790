"""Functionals and explicit constants on radial profiles over balls.

All integrals are one-dimensional after the substitution ``t = E1(r/R)``
(``dt = -dr/r``, ``dx = n w_n r^(n-1) dr``)::

    int |grad u|^n dx                    = n w_n int |u'|^n dt
    int |u|^n / (r^n E1^n) dx            = n w_n int |u|^n t^-n dt
    int |grad v|^n E1^(n-1) dx           = n w_n int |v'|^n t^(n-1) dt
    int F(u, t) dx                       = n w_n R^n int F e^(n(1-t)) dt

Each evaluator can also run in the original radius variable
(``path="radius"``); the two paths share no quadrature code beyond the
panel rule and serve as cross-checks of each other.
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field
from math import comb
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError, IntegrandError
from .funcspace import GroundStateTransform, RadialProfile
from .geometry import BallDomain, unit_ball_volume
from .quadrature import (
    DEFAULT_SPEC,
    EXPONENTIAL_SPEC,
    DiscGrid,
    QuadratureResult,
    QuadratureSpec,
    Tail,
    integrate_disc_2d,
    integrate_log,
    integrate_radius,
    truncated_series,
)

DEFAULT_EPSILONS = (1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8)
# Levels l = 1 + log t at which the asymptotic exponent is sampled.  Power
# laws in l separate only at very large l, far beyond any float t.
ASYMPTOTIC_LEVELS = (1e1, 1e2, 1e4, 1e8, 1e16, 1e32, 1e64, 1e128, 1e256)


@dataclass
class FunctionalReport:
    name: str
    value: float
    error_estimate: float
    status: str
    inputs_digest: str
    notes: list[str] = field(default_factory=list)
    partials: list[float] | None = None
    epsilons: list[float] | None = None

    @property
    def converged(self) -> bool:
        return self.status == "converged"

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "value": self.value,
            "error_estimate": self.error_estimate,
            "status": self.status,
            "inputs_digest": self.inputs_digest,
        }
        if self.partials is not None:
            d["partials"] = list(self.partials)
            d["epsilons"] = list(self.epsilons or [])
        if self.notes:
            d["notes"] = list(self.notes)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "FunctionalReport":
        return cls(d["name"], float(d["value"]), float(d["error_estimate"]), d["status"],
                   d["inputs_digest"], list(d.get("notes", [])), d.get("partials"),
                   d.get("epsilons"))


def inputs_digest(name: str, profile: RadialProfile | None, domain: BallDomain | None,
                  params: dict | None = None) -> str:
    payload = {
        "functional": name,
        "profile": profile.to_dict() if profile is not None else None,
        "domain": domain.to_dict() if domain is not None else None,
        "params": params or {},
    }
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()


# ---------------------------------------------------------------------------
# Constants


def C1(n: int) -> int:
    """``2^(n-1) - 1``."""
    return 2 ** (n - 1) - 1


def hardy_constant(n: int) -> float:
    return ((n - 1.0) / n) ** n


def remainder_constant(n: int) -> float:
    """Best constant ``(1/2) ((n-1)/n)^(n-1)`` of the E2^-2 remainder."""
    return 0.5 * ((n - 1.0) / n) ** (n - 1)


def prop31_constant(n: int) -> float:
    if n < 2:
        raise DomainError("n must be >= 2")
    w = unit_ball_volume(n)
    bracket = C1(n) ** (1.0 / n) + 2.0 ** (1.0 / n) * (n / (n - 1.0)) ** ((n - 1.0) / n) * (n + 1.0) / n
    return bracket / (n * w ** (1.0 / n))


def series_threshold(n: int) -> float:
    """``A_n = 1 / (e C_n^(n/(n-1)))``."""
    return 1.0 / (math.e * prop31_constant(n) ** (n / (n - 1.0)))


def series_log_terms(n: int, c: float, k_max: int) -> np.ndarray:
    """Logs of ``(c C_n^(n/(n-1)))^k (1+k)^(1+k) / k!`` for ``k = n..k_max``."""
    x = c * prop31_constant(n) ** (n / (n - 1.0))
    k = np.arange(n, k_max + 1, dtype=float)
    lgam = np.array([math.lgamma(kk + 1.0) for kk in k])
    return k * math.log(x) + (1.0 + k) * np.log1p(k) - lgam


def series_partial_sums(n: int, c: float, k_max: int) -> np.ndarray:
    with np.errstate(over="ignore"):
        return np.cumsum(np.exp(series_log_terms(n, c, k_max)))


def prop31_bound_rhs(n: int, q: float, volume: float, I_value: float) -> float:
    if not q > n:
        raise DomainError("q must exceed n")
    if not volume > 0 or I_value < 0:
        raise DomainError("need volume > 0 and I >= 0")
    expo = 1.0 - 1.0 / n + 1.0 / q
    return (prop31_constant(n) * (1.0 + q * (n - 1.0) / n) ** expo
            * volume ** (1.0 / q) * I_value ** (1.0 / n))


def riesz_bound(n: int, q: float, volume: float) -> float:
    """Bound on ``||h_r||_inf^(1/r)`` for the Riesz-type potential ``h_r``."""
    if not q > n:
        raise DomainError("q must exceed n")
    expo = 1.0 - 1.0 / n + 1.0 / q
    return unit_ball_volume(n) ** (1.0 - 1.0 / n) * (1.0 + q * (n - 1.0) / n) ** expo * volume ** (1.0 / q)


def young_base_residual(a, b):
    """``e^a - a - 1 + (1+b) log(1+b) - b - a b``; nonnegative for ``a, b >= 0``."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    with np.errstate(over="ignore"):
        return np.expm1(a) - a + (1.0 + b) * np.log1p(b) - b - a * b


def young_pairing_check(a, b, n: int):
    """``2^(n-2) [e^((n-1) a^(1/(n-1))) + 2^(n-2) (1+b) log(1 + b^(1/(n-1)))^(n-1)] - a b``.

    Overflow of the exponential saturates to ``+inf``.
    """
    if n < 2:
        raise DomainError("n must be >= 2")
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if np.any(a < 0) or np.any(b < 0):
        raise DomainError("a and b must be nonnegative")
    m = n - 1.0
    with np.errstate(over="ignore"):
        rhs = 2.0 ** (n - 2) * (np.exp(m * a ** (1.0 / m))
                                + 2.0 ** (n - 2) * (1.0 + b) * np.log1p(b ** (1.0 / m)) ** m)
        res = np.where(np.isinf(rhs), np.inf, rhs - a * b)
    return float(res) if res.ndim == 0 else res


# ---------------------------------------------------------------------------
# Hardy-type integrals


def _tail_exponent(profile: RadialProfile, offset: float, per_s: float) -> float:
    """Log-power tail exponent ``per_s * s + offset`` for growing profiles."""
    s = profile.growth_exponent
    if s is None:
        return -2.0
    return per_s * s + offset


def _radius_breakpoints(profile: RadialProfile, domain: BallDomain) -> list[float]:
    return [domain.R * math.exp(1.0 - t) for t in profile.breakpoints() if t > domain.t_boundary]


def _run(name: str, profile: RadialProfile, domain: BallDomain, params: dict,
         f_t: Callable, f_r: Callable, tail: Tail, spec: QuadratureSpec, path: str,
         prefactor: float) -> FunctionalReport:
    digest = inputs_digest(name, profile, domain, {**params, "path": path})
    if path == "log":
        res = integrate_log(f_t, domain.t_boundary, spec, tail, profile.breakpoints())
    elif path == "radius":
        # Bounded profiles decay like a power of t, which the sampled fit handles.
        declared = tail if profile.growth_exponent is not None else None
        res = integrate_radius(f_r, domain.rho, spec, _radius_breakpoints(profile, domain), domain.R,
                               tail=declared)
    else:
        raise DomainError(f"unknown path {path!r}")
    return FunctionalReport(name, prefactor * res.value, prefactor * res.budget(), res.status,
                            digest, list(res.notes))


def _t_of_r(domain: BallDomain, r):
    return 1.0 + np.log(domain.R / r)


def dirichlet_energy(u: RadialProfile, domain: BallDomain, spec: QuadratureSpec = DEFAULT_SPEC,
                     path: str = "log") -> FunctionalReport:
    """``int |grad u|^n dx``; independent of ``R`` and ``rho`` by scale invariance."""
    n = domain.n

    def f_t(t):
        return np.abs(u.slope(t)) ** n

    def f_r(r):
        t = _t_of_r(domain, r)
        return np.abs(u.slope(t)) ** n / r

    tail = Tail.log_power_decay(_tail_exponent(u, 0.0, n))
    return _run("dirichlet_energy", u, domain, {}, f_t, f_r, tail, spec, path, n * domain.w_n)


def hardy_term(u: RadialProfile, domain: BallDomain, spec: QuadratureSpec = DEFAULT_SPEC,
               path: str = "log") -> FunctionalReport:
    """``((n-1)/n)^n int |u|^n / (|x|^n E1^n(|x|/R)) dx``."""
    n = domain.n

    def f_t(t):
        return (np.abs(u.value(t)) / t) ** n

    def f_r(r):
        t = _t_of_r(domain, r)
        return (np.abs(u.value(t)) / t) ** n / r

    tail = Tail.log_power_decay(_tail_exponent(u, 0.0, n))
    return _run("hardy_term", u, domain, {}, f_t, f_r, tail, spec, path,
                hardy_constant(n) * n * domain.w_n)


def remainder_term(u: RadialProfile, domain: BallDomain, gamma: float = 2.0,
                   spec: QuadratureSpec = DEFAULT_SPEC, path: str = "log") -> FunctionalReport:
    """``int |u|^n / (|x|^n E1^n E2^gamma) dx``."""
    if not (gamma >= 0 and math.isfinite(gamma)):
        raise DomainError(f"gamma must be finite and >= 0, got {gamma!r}")
    n = domain.n

    def f_t(t):
        return (np.abs(u.value(t)) / t) ** n * (1.0 + np.log(t)) ** (-gamma)

    def f_r(r):
        return f_t(_t_of_r(domain, r)) / r

    tail = Tail.log_power_decay(_tail_exponent(u, -gamma, n))
    return _run("remainder_term", u, domain, {"gamma": gamma}, f_t, f_r, tail, spec, path,
                n * domain.w_n)


def _convexity_excess(A, B, n: int):
    """``|A+B|^n - |A|^n - n |A|^(n-2) A B``, expanded where signs allow."""
    poly = sum(comb(n, k) * A ** (n - k) * B**k for k in range(2, n + 1))
    if n % 2 == 0:
        return poly
    S = A + B
    direct = np.abs(S) ** n - np.abs(A) ** n - n * np.abs(A) ** (n - 2) * A * B
    return np.where((A >= 0) & (S >= 0), poly, np.where((A <= 0) & (S <= 0), -poly, direct))


def hardy_difference_density(u: RadialProfile, t):
    """Ground-state form of the Hardy difference integrand (per unit ``n w_n``).

    Equals ``|u'|^n - ((n-1)/n)^n |u/t|^n`` minus the exact derivative
    ``((n-1)/n)^(n-1) d/dt |v|^n``; pointwise nonnegative by convexity.
    """
    n = u.n
    t = np.asarray(t, dtype=float)
    A = u.a * u.value(t) / t
    B = u.residual(t)
    return _convexity_excess(A, B, n)


def I_n(u: RadialProfile, domain: BallDomain, spec: QuadratureSpec = DEFAULT_SPEC,
        path: str = "log", method: str = "auto") -> FunctionalReport:
    """Hardy difference ``int |grad u|^n - ((n-1)/n)^n int |u|^n/(|x|^n E1^n)``.

    ``method="direct"`` subtracts the two terms.  ``"ground_state"``
    integrates :func:`hardy_difference_density`; the dropped derivative
    integrates to ``((n-1)/n)^(n-1) |v|^n`` at the origin, which vanishes for
    every bounded profile and is discarded for profiles growing like the
    ground state (the value is then the limit over cut-off approximations).
    ``"auto"`` uses the direct difference when both terms converge.
    """
    n = domain.n
    digest = inputs_digest("I_n", u, domain, {"path": path, "method": method})
    if method not in ("auto", "direct", "ground_state"):
        raise DomainError(f"unknown method {method!r}")
    if method in ("auto", "direct") and (method == "direct" or u.growth_exponent is None):
        d = dirichlet_energy(u, domain, spec, path)
        h = hardy_term(u, domain, spec, path)
        if d.converged and h.converged:
            err = d.error_estimate + h.error_estimate + 4 * np.finfo(float).eps * (d.value + h.value)
            return FunctionalReport("I_n", d.value - h.value, err, "converged", digest)
        if method == "direct":
            status = "divergent" if "divergent" in (d.status, h.status) else d.status
            return FunctionalReport("I_n", d.value - h.value, math.inf, status, digest,
                                    [f"dirichlet {d.status}, hardy {h.status}"])

    def f_t(t):
        return hardy_difference_density(u, t)

    def f_r(r):
        return f_t(_t_of_r(domain, r)) / r

    tail = Tail.log_power_decay(_tail_exponent(u, -2.0, n))
    rep = _run("I_n", u, domain, {"path": path, "method": method}, f_t, f_r, tail, spec, path,
               n * domain.w_n)
    rep.inputs_digest = digest
    rep.notes.append("ground-state form")
    return rep


def ground_state_transform(u: RadialProfile, domain: BallDomain | None = None) -> GroundStateTransform:
    """``v = E1^(-(n-1)/n)(|x|/R) u``."""
    return GroundStateTransform(u)


def J_n(v: RadialProfile, domain: BallDomain, spec: QuadratureSpec = DEFAULT_SPEC,
        path: str = "log") -> FunctionalReport:
    """``int |grad v|^n E1^(n-1)(|x|/R) dx``."""
    n = domain.n
    if isinstance(v, GroundStateTransform):
        def dens(t):
            return np.abs(v.weighted_slope(t)) ** n
        s = v.base.growth_exponent
    else:
        def dens(t):
            return np.abs(v.slope(t)) ** n * t ** (n - 1.0)
        s = None

    def f_r(r):
        return dens(_t_of_r(domain, r)) / r

    p = -2.0 if s is None else n * (s - 1.0)
    return _run("J_n", v, domain, {}, dens, f_r, Tail.log_power_decay(p), spec, path,
                n * domain.w_n)


# ---------------------------------------------------------------------------
# Exponential (Trudinger) integrals


@dataclass(frozen=True)
class TrudingerParams:
    c: float
    beta: float
    weight_kind: str = "E2_power"
    epsilon_truncations: tuple[float, ...] | None = None

    def __post_init__(self):
        if not self.c > 0:
            raise DomainError("c must be positive")
        if not self.beta >= 0:
            raise DomainError("beta must be nonnegative")
        if self.weight_kind not in ("E2_power", "E1_power"):
            raise DomainError(f"unknown weight_kind {self.weight_kind!r}")

    def to_dict(self) -> dict:
        d = {"c": self.c, "beta": self.beta, "weight_kind": self.weight_kind}
        if self.epsilon_truncations is not None:
            d["epsilon_truncations"] = list(self.epsilon_truncations)
        return d


def _log_weight(kind: str, t):
    return np.log1p(np.log(t)) if kind == "E2_power" else np.log(t)


def trudinger_exponent(u: RadialProfile, domain: BallDomain, params: TrudingerParams, t):
    """``c (|u| / W^beta)^(n/(n-1)) + n (1 - t)``, the log of the normalized integrand."""
    n = domain.n
    q = n / (n - 1.0)
    t = np.asarray(t, dtype=float)
    with np.errstate(divide="ignore"):
        lu = np.log(np.abs(u.value(t)))
    core = np.exp(q * (lu - params.beta * _log_weight(params.weight_kind, t)))
    return params.c * core + n * (1.0 - t)


def asymptotic_growth_rates(u: RadialProfile, domain: BallDomain, params: TrudingerParams,
                            levels: Sequence[float] = ASYMPTOTIC_LEVELS) -> list[float]:
    """``rho(l) = c |v|^q W^(-beta q) - n`` at each level ``l = 1 + log t``.

    The Trudinger exponent equals ``t rho + n``; it grows without bound iff
    ``rho`` stays positive.
    """
    n = domain.n
    q = n / (n - 1.0)
    ell = np.asarray(levels, dtype=float)
    v = np.abs(u.amplitude_at_level(ell))
    log_w = np.log(ell) if params.weight_kind == "E2_power" else ell - 1.0
    with np.errstate(divide="ignore"):
        lv = np.log(v)
    core = np.exp(math.log(params.c) + q * (lv - params.beta * log_w))
    return (core - n).tolist()


def diagnose_tail(u: RadialProfile, domain: BallDomain, params: TrudingerParams) -> Tail:
    rates = asymptotic_growth_rates(u, domain, params)
    if all(r > 0 for r in rates[-3:]):
        return Tail.exponential_growth()
    return Tail.exponential_decay(domain.n)


def trudinger_integral(u: RadialProfile, domain: BallDomain, params: TrudingerParams,
                       spec: QuadratureSpec = EXPONENTIAL_SPEC, path: str = "log") -> FunctionalReport:
    """``int exp(c (|u| / W(|x|/R)^beta)^(n/(n-1))) dx`` with ``W = E2`` or ``E1``.

    Divergence is diagnosed from the asymptotic exponent (see
    :func:`asymptotic_growth_rates`); a divergent report carries the
    truncated partials over ``|x| >= eps``.
    """
    n = domain.n
    pref = n * domain.w_n * domain.R**n
    digest = inputs_digest("trudinger_integral", u, domain, {**params.to_dict(), "path": path})
    tail = diagnose_tail(u, domain, params)

    def f_t(t):
        with np.errstate(over="ignore"):
            return np.exp(trudinger_exponent(u, domain, params, t))

    def f_r(r):
        t = _t_of_r(domain, r)
        e = trudinger_exponent(u, domain, params, t) - n * (1.0 - t)
        return np.exp(e) * r ** (n - 1.0)

    notes: list[str] = []
    try:
        if path == "log":
            res = integrate_log(f_t, domain.t_boundary, spec, tail, u.breakpoints())
            value, err = pref * res.value, pref * res.budget()
        elif path == "radius":
            res = integrate_radius(f_r, domain.rho, spec, _radius_breakpoints(u, domain), domain.R,
                                   tail=tail)
            value, err = n * domain.w_n * res.value, n * domain.w_n * res.budget()
        else:
            raise DomainError(f"unknown path {path!r}")
        status = "divergent" if tail.kind == "exponential_growth" else res.status
        notes.extend(res.notes)
    except IntegrandError as exc:
        value, err, status = math.inf, math.inf, "divergent"
        notes.append(f"integrand overflow: {exc}")
    if tail.kind == "exponential_growth":
        notes.append("asymptotic exponent grows without bound")

    rep = FunctionalReport("trudinger_integral", value, err, status, digest, notes)
    eps = params.epsilon_truncations
    if eps is None and status == "divergent":
        eps = DEFAULT_EPSILONS
    if eps is not None:
        r_b = domain.rho
        eps = [e for e in eps if e < r_b]
        rep.epsilons = list(eps)
        rep.partials = [pref * p for p in truncated_series(
            f_t, domain.t_boundary, eps, domain.R, spec, u.breakpoints())]
    return rep


def weighted_Lq_norm(u: RadialProfile, domain: BallDomain, q: float,
                     spec: QuadratureSpec = DEFAULT_SPEC, path: str = "log") -> FunctionalReport:
    """``(int |u / E2^(2/n)(|x|/R)|^q dx)^(1/q)``."""
    n = domain.n
    if not q > n:
        raise DomainError("q must exceed n")
    pref = n * domain.w_n * domain.R**n

    def log_core(t):
        with np.errstate(divide="ignore"):
            return q * (np.log(np.abs(u.value(t))) - (2.0 / n) * np.log1p(np.log(t)))

    def f_t(t):
        return np.exp(log_core(t) + n * (1.0 - t))

    def f_r(r):
        return np.exp(log_core(_t_of_r(domain, r))) * r ** (n - 1.0)

    digest = inputs_digest("weighted_Lq_norm", u, domain, {"q": q, "path": path})
    if path == "log":
        res = integrate_log(f_t, domain.t_boundary, spec, Tail.exponential_decay(n), u.breakpoints())
        total, err = pref * res.value, pref * res.budget()
    elif path == "radius":
        res = integrate_radius(f_r, domain.rho, spec, _radius_breakpoints(u, domain), domain.R)
        total, err = n * domain.w_n * res.value, n * domain.w_n * res.budget()
    else:
        raise DomainError(f"unknown path {path!r}")
    value = total ** (1.0 / q) if total > 0 else 0.0
    err_norm = value * err / (q * total) if total > 0 else err ** (1.0 / q)
    return FunctionalReport("weighted_Lq_norm", value, err_norm, res.status, digest, list(res.notes))


# ---------------------------------------------------------------------------
# Young pairing remainder integral and the Green representation


def eval_P_B1(n: int, theta: float, R: float = 1.0,
              spec: QuadratureSpec = DEFAULT_SPEC) -> FunctionalReport:
    """``2^(2(n-2)) int_B1 (1+g) log(1 + g^(1/(n-1)))^(n-1) dx``, ``g = 1/(|x|^n E1^n E2^theta)``.

    Near the origin the integrand behaves like ``t^-1 (1+log t)^-theta`` in the
    log coordinate, hence the requirement ``theta > 1``.
    """
    if n < 2:
        raise DomainError("n must be >= 2")
    if not 1.0 < theta < 2.0:
        raise DomainError("theta must lie in (1, 2)")
    domain = BallDomain(n, 1.0, R)
    m = n - 1.0

    def f_t(t):
        log_t = np.log(t)
        log_h = -n * log_t - theta * np.log1p(log_t)
        log_g = -n * math.log(R) + n * (t - 1.0) + log_h
        lg = np.logaddexp(0.0, log_g / m)
        # log of R^n e^(n(1-t)) (1 + g); g itself overflows for large t.
        log_mass = np.logaddexp(n * math.log(R) + n * (1.0 - t), log_h)
        return np.exp(log_mass + m * np.log(lg))

    res = integrate_log(f_t, domain.t_boundary, spec, Tail.log_power_decay(-theta))
    pref = 2.0 ** (2 * (n - 2)) * n * domain.w_n
    digest = inputs_digest("P_B1", None, domain, {"theta": theta})
    return FunctionalReport("P_B1", pref * res.value, pref * res.budget(), res.status, digest,
                            list(res.notes))


def default_green_test_function():
    """``u(y) = (1 - |y|^2)^2`` and its radial derivative."""
    return (lambda r: (1.0 - r * r) ** 2, lambda r: -4.0 * r * (1.0 - r * r))


def green_reconstruct(phi: Callable, dphi: Callable, x: tuple[float, float],
                      grid: DiscGrid = DiscGrid()) -> float:
    """``(1/(2 pi)) int_{B1} (x - y) . grad u(y) / |x - y|^2 dy`` for radial ``u = phi(|y|)``."""
    x1, x2 = map(float, x)

    def f(y1, y2):
        r = np.hypot(y1, y2)
        with np.errstate(divide="ignore", invalid="ignore"):
            g = np.where(r > 0, dphi(r) / r, 0.0)
        d1, d2 = x1 - y1, x2 - y2
        return (d1 * g * y1 + d2 * g * y2) / (d1 * d1 + d2 * d2)

    return integrate_disc_2d(f, (x1, x2), grid) / (2.0 * math.pi)


def green_representation_check(phi: Callable | None = None, dphi: Callable | None = None,
                               sample_points: Sequence[tuple[float, float]] = (
                                   (0.0, 0.0), (0.3, 0.1), (-0.5, 0.2), (0.1, -0.7), (0.6, 0.6)),
                               grid: DiscGrid = DiscGrid()) -> dict:
    """Reconstruct a radial ``C^1`` function vanishing on the unit circle at sample points.

    Returns the reconstructions, the exact values and the max relative error.
    """
    if phi is None:
        phi, dphi = default_green_test_function()
    recon, exact, errs = [], [], []
    for x in sample_points:
        val = green_reconstruct(phi, dphi, x, grid)
        ex = float(phi(math.hypot(*x)))
        recon.append(val)
        exact.append(ex)
        errs.append(abs(val - ex) / abs(ex) if ex != 0 else abs(val))
    return {"reconstructions": recon, "exact": exact, "max_relative_error": max(errs)}


def quadrature_result_summary(res: QuadratureResult) -> dict:
    return {"value": res.value, "error_estimate": res.error_estimate,
            "tail_bound": res.tail_bound, "status": res.status}
