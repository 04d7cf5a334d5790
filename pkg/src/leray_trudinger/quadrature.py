"""Adaptive quadrature on the semi-infinite log coordinate.

Every integrand on ``[t_a, inf)`` comes with a declared tail class.  The class
decides both the integration variable and the closed-form tail beyond the
truncation point:

=====================  =====================  ===============================
class                  variable               tail beyond the cut ``T``
=====================  =====================  ===============================
exponential_decay(k)   ``t``                  ``f(T)/k``
power_decay(p)         ``log t``              ``f(T) T / (-p-1)``
log_power_decay(p)     ``log(1 + log t)``     ``f(T) T l / (-p-1)``, l = 1+log T
exponential_growth     ``t``                  divergent
=====================  =====================  ===============================

``log_power_decay(p)`` means ``f(t) ~ C t^-1 (1+log t)^p``; it is truncated at
``1 + log T = spec.t_max`` so that ``T = e^(t_max-1)`` stays representable.
Panels use the 7/15-point Gauss-Kronrod pair and are refined globally
(largest error first).  Sums are taken with :func:`math.fsum` in panel order,
so results do not depend on evaluation order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable, Sequence

import numpy as np

from .errors import DomainError, IntegrandError

# 15-point Kronrod nodes on [0, 1] (positive half) with Kronrod and embedded
# 7-point Gauss weights.
_XGK = np.array([
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
])
_WGK = np.array([
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
])
_WG = np.array([
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
])

NODES = np.concatenate([-_XGK[:-1], _XGK[::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:-1], _WGK[::-1]])
GAUSS_WEIGHTS = np.zeros(15)
# Gauss nodes are the odd-indexed Kronrod nodes of the positive half.
for _i, _w in zip((1, 3, 5), _WG[:3]):
    GAUSS_WEIGHTS[_i] = _w
    GAUSS_WEIGHTS[14 - _i] = _w
GAUSS_WEIGHTS[7] = _WG[3]

_EPS = np.finfo(float).eps
_TINY = np.finfo(float).tiny

STATUSES = ("converged", "truncated", "divergent", "budget_exhausted")


@dataclass(frozen=True)
class QuadratureSpec:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    t_max: float = 700.0
    max_subdivisions: int = 10_000

    def __post_init__(self):
        if not self.rel_tol > 0:
            raise DomainError("rel_tol must be positive")
        if not self.abs_tol >= 0:
            raise DomainError("abs_tol must be nonnegative")
        if not self.t_max > 1.0:
            raise DomainError("t_max must exceed 1")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be >= 1")

    def relaxed(self, rel_tol: float) -> "QuadratureSpec":
        return replace(self, rel_tol=max(self.rel_tol, rel_tol))


DEFAULT_SPEC = QuadratureSpec()
#: Trudinger integrands are stiffer; their default tolerance is 1e-8.
EXPONENTIAL_SPEC = QuadratureSpec(rel_tol=1e-8)


@dataclass(frozen=True)
class Tail:
    """Declared asymptotic class of an integrand as ``t -> inf``."""

    kind: str
    rate: float | None = None
    exponent: float | None = None

    @classmethod
    def exponential_decay(cls, rate: float) -> "Tail":
        return cls("exponential_decay", rate=float(rate))

    @classmethod
    def power_decay(cls, exponent: float) -> "Tail":
        return cls("power_decay", exponent=float(exponent))

    @classmethod
    def log_power_decay(cls, exponent: float) -> "Tail":
        return cls("log_power_decay", exponent=float(exponent))

    @classmethod
    def exponential_growth(cls) -> "Tail":
        return cls("exponential_growth")

    @property
    def declares_divergence(self) -> bool:
        if self.kind == "exponential_growth":
            return True
        if self.kind == "exponential_decay":
            return not self.rate > 0
        return not self.exponent < -1.0


@dataclass
class QuadratureResult:
    value: float
    error_estimate: float
    tail_bound: float
    status: str
    evaluations: int = 0
    panels: int = 0
    notes: list[str] = field(default_factory=list)

    @property
    def converged(self) -> bool:
        return self.status == "converged"

    def budget(self) -> float:
        return self.error_estimate + self.tail_bound


# ---------------------------------------------------------------------------
# Panel engine


def _gk_panels(g, left: np.ndarray, right: np.ndarray, allow_nonfinite: bool):
    half = 0.5 * (right - left)
    mid = 0.5 * (right + left)
    x = mid[:, None] + half[:, None] * NODES[None, :]
    fx = np.asarray(g(x), dtype=float)
    if fx.shape != x.shape:
        fx = np.broadcast_to(fx, x.shape).astype(float)
    bad = ~np.isfinite(fx)
    if bad.any():
        if not allow_nonfinite:
            raise IntegrandError(
                f"non-finite integrand sample at x={x[bad][0]!r}", t=float(x[bad][0])
            )
        fx = np.where(bad, np.where(np.isnan(fx), 0.0, fx), fx)
    resk = fx @ KRONROD_WEIGHTS
    resg = fx @ GAUSS_WEIGHTS
    resabs = np.abs(fx) @ KRONROD_WEIGHTS
    reskh = 0.5 * resk
    resasc = np.abs(fx - reskh[:, None]) @ KRONROD_WEIGHTS
    value = resk * half
    resabs = resabs * np.abs(half)
    resasc = resasc * np.abs(half)
    err = np.abs((resk - resg) * half)
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        scaled = resasc * np.minimum(1.0, (200.0 * err / resasc) ** 1.5)
    err = np.where((resasc != 0) & (err != 0), scaled, err)
    floor = 50.0 * _EPS * resabs
    err = np.where(resabs > _TINY / (50.0 * _EPS), np.maximum(floor, err), err)
    return value, err, floor


def adaptive_integrate(
    g: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    *,
    rel_tol: float = 1e-10,
    abs_tol: float = 1e-14,
    max_subdivisions: int = 10_000,
    breakpoints: Sequence[float] = (),
    initial_panels: int = 4,
    allow_nonfinite: bool = False,
) -> QuadratureResult:
    """Globally adaptive G7/K15 integration of a vectorized ``g`` over ``[a, b]``."""
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError("integration limits must be finite")
    if b == a:
        return QuadratureResult(0.0, 0.0, 0.0, "converged")
    if b < a:
        raise DomainError(f"lower limit {a} exceeds upper limit {b}")
    cuts = sorted({float(a), float(b), *(float(p) for p in breakpoints if a < p < b)})
    edges = []
    for lo, hi in zip(cuts[:-1], cuts[1:]):
        edges.extend(np.linspace(lo, hi, initial_panels + 1)[:-1].tolist())
    edges.append(cuts[-1])
    edges = np.array(edges)
    left, right = edges[:-1], edges[1:]
    val, err, floor = _gk_panels(g, left, right, allow_nonfinite)
    evaluations = 15 * left.size
    status = "converged"
    while True:
        order = np.argsort(left, kind="stable")
        left, right, val, err, floor = (a_[order] for a_ in (left, right, val, err, floor))
        total = math.fsum(val.tolist())
        err_total = math.fsum(err.tolist())
        tol = max(rel_tol * abs(total), abs_tol)
        if err_total <= tol:
            break
        refinable = (err > floor * 1.0000001) & ((right - left) > 64 * _EPS * np.maximum(1.0, np.abs(left)))
        if not refinable.any():
            break
        # Split the largest-error panels until the untouched ones fit in tol/2.
        idx = np.argsort(-np.where(refinable, err, -1.0), kind="stable")
        excess = err_total - 0.5 * tol
        chosen = []
        acc = 0.0
        for i in idx:
            if not refinable[i]:
                break
            chosen.append(i)
            acc += err[i]
            if acc >= excess:
                break
        if left.size + len(chosen) > max_subdivisions:
            room = max_subdivisions - left.size
            if room <= 0:
                status = "budget_exhausted"
                break
            chosen = chosen[:room]
        chosen = np.array(sorted(chosen))
        keep = np.ones(left.size, dtype=bool)
        keep[chosen] = False
        mids = 0.5 * (left[chosen] + right[chosen])
        new_left = np.concatenate([left[chosen], mids])
        new_right = np.concatenate([mids, right[chosen]])
        nval, nerr, nfloor = _gk_panels(g, new_left, new_right, allow_nonfinite)
        evaluations += 15 * new_left.size
        left = np.concatenate([left[keep], new_left])
        right = np.concatenate([right[keep], new_right])
        val = np.concatenate([val[keep], nval])
        err = np.concatenate([err[keep], nerr])
        floor = np.concatenate([floor[keep], nfloor])
    order = np.argsort(left, kind="stable")
    total = math.fsum(val[order].tolist())
    err_total = math.fsum(err.tolist())
    return QuadratureResult(total, err_total, 0.0, status, evaluations, int(left.size))


# ---------------------------------------------------------------------------
# Log-coordinate integration


class _VariableMap:
    """Change of variables ``t = phi(x)`` chosen by tail class."""

    def __init__(self, kind: str):
        self.kind = kind

    def to_x(self, t: float) -> float:
        if self.kind == "power_decay":
            return math.log(t)
        if self.kind == "log_power_decay":
            return math.log1p(math.log(t))
        return float(t)

    def t_of(self, x):
        if self.kind == "power_decay":
            return np.exp(x)
        if self.kind == "log_power_decay":
            return np.exp(np.expm1(x))
        return x

    def jacobian(self, x, t):
        if self.kind == "power_decay":
            return t
        if self.kind == "log_power_decay":
            return t * np.exp(x)
        return np.ones_like(t)


def _upper_t(kind: str, spec: QuadratureSpec) -> float:
    # Power-type classes are integrated in log t, so the cut can sit at
    # 1 + log T = t_max, matching the smallest radius e^(1 - t_max).
    if kind in ("power_decay", "log_power_decay"):
        return math.exp(spec.t_max - 1.0)
    return spec.t_max


def _tail_estimate(tail: Tail, f_T: float, T: float) -> float:
    if tail.kind == "exponential_decay":
        return f_T / tail.rate
    if tail.kind == "power_decay":
        return f_T * T / (-tail.exponent - 1.0)
    if tail.kind == "log_power_decay":
        return f_T * T * (1.0 + math.log(T)) / (-tail.exponent - 1.0)
    raise DomainError(f"no tail estimate for {tail.kind}")


def _log_power_tail(p: float, far: tuple[float, float], near: tuple[float, float]) -> float:
    """Tail beyond ``near`` of ``C t^-1 l^p (1 + b/l)`` fitted through two samples.

    The ``b/l`` term absorbs the first correction that slowly varying
    integrands carry; without it the bias is of relative size ``1/l``.
    """
    (t0, f0), (t1, f1) = far, near
    l0, l1 = 1.0 + math.log(t0), 1.0 + math.log(t1)
    m0, m1 = f0 * t0 * l0**-p, f1 * t1 * l1**-p
    # m = C (1 + b/l) = C + D/l
    D = (m1 - m0) / (1.0 / l1 - 1.0 / l0)
    C = m1 - D / l1
    return C * l1 ** (p + 1.0) / (-p - 1.0) + D * l1**p / (-p)


def _observed_decay(tail: Tail, f: Callable, T1: float, T2: float) -> float | None:
    """Sampled decay parameter between T1 < T2 in the class's own scale."""
    f1, f2 = (float(np.asarray(f(np.array([T])))[0]) for T in (T1, T2))
    if f1 == 0.0 or f2 == 0.0 or (f1 > 0) != (f2 > 0):
        return None
    r = math.log(abs(f2) / abs(f1))
    if tail.kind == "exponential_decay":
        return -r / (T2 - T1)
    if tail.kind == "power_decay":
        return r / math.log(T2 / T1)
    l1, l2 = 1.0 + math.log(T1), 1.0 + math.log(T2)
    return (r + math.log(T2 / T1)) / math.log(l2 / l1)


def integrate_log(
    f: Callable[[np.ndarray], np.ndarray],
    t_a: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
    tail: Tail | None = None,
    breakpoints: Sequence[float] = (),
) -> QuadratureResult:
    """Integrate a vectorized ``f`` over ``[t_a, inf)`` using the declared tail class.

    A sampled decay test near the cut guards the declaration: a power or
    log-power integrand observed decaying no faster than ``t^-1`` is
    reported divergent.  For divergent status ``value`` is the partial
    integral up to the cut and must not be used as a total.
    """
    tail = tail or Tail.power_decay(-2.0)
    if not t_a >= (1.0 if tail.kind == "log_power_decay" else 0.0) or not math.isfinite(t_a):
        raise DomainError(f"invalid lower limit t_a={t_a!r}")
    vmap = _VariableMap("exponential_decay" if tail.kind == "exponential_growth" else tail.kind)
    T = _upper_t(vmap.kind, spec)
    if T <= t_a:
        raise DomainError(f"truncation point {T} must exceed t_a={t_a}")

    def g(x):
        t = vmap.t_of(x)
        with np.errstate(over="ignore", under="ignore", invalid="ignore"):
            return f(t) * vmap.jacobian(x, t)

    xa, xb = vmap.to_x(t_a), vmap.to_x(T)
    xbps = [vmap.to_x(p) for p in breakpoints if t_a < p < T]
    divergent = tail.declares_divergence
    res = adaptive_integrate(
        g, xa, xb, rel_tol=spec.rel_tol, abs_tol=spec.abs_tol,
        max_subdivisions=spec.max_subdivisions, breakpoints=xbps,
        allow_nonfinite=divergent,
    )
    if divergent:
        res.status = "divergent"
        res.notes.append(f"declared tail class {tail.kind} is not integrable")
        return res

    # Sampled check of the declared class on the last stretch before the cut.
    x_mid = xb - 0.125 * (xb - xa)
    T_mid = float(vmap.t_of(np.array(x_mid)))
    observed = _observed_decay(tail, f, T_mid, T)
    if observed is not None:
        if tail.kind == "exponential_decay" and observed <= 0:
            res.status = "divergent"
            res.notes.append(f"sampled decay rate {observed:.3g} <= 0")
            return res
        if tail.kind in ("power_decay", "log_power_decay") and observed > -1.0 - 1e-6:
            res.status = "divergent"
            res.notes.append(f"sampled tail exponent {observed:.3g} >= -1")
            return res

    f_T = float(np.asarray(f(np.array([T])))[0])
    f_mid = float(np.asarray(f(np.array([T_mid])))[0])
    strip = adaptive_integrate(g, x_mid, xb, rel_tol=spec.rel_tol, abs_tol=spec.abs_tol * 1e-3)
    if tail.kind == "log_power_decay":
        x_q = xb - 0.25 * (xb - xa)
        T_q = float(vmap.t_of(np.array(x_q)))
        f_q = float(np.asarray(f(np.array([T_q])))[0])
        est_T = _log_power_tail(tail.exponent, (T_mid, f_mid), (T, f_T))
        est_mid = _log_power_tail(tail.exponent, (T_q, f_q), (T_mid, f_mid))
    else:
        est_T = _tail_estimate(tail, f_T, T)
        est_mid = _tail_estimate(tail, f_mid, T_mid)
    # Consistency of the tail model: tail(T_mid) should equal strip + tail(T).
    tail_bound = abs(est_mid - (strip.value + est_T)) + abs(est_T) * 1e-12
    value = res.value + est_T
    budget = res.error_estimate + tail_bound
    status = res.status
    if status == "converged" and budget > 4.0 * max(spec.rel_tol * abs(value), spec.abs_tol):
        status = "truncated"
    return QuadratureResult(value, res.error_estimate, tail_bound, status,
                            res.evaluations + strip.evaluations + 4, res.panels, res.notes)


def integrate_interval(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
    breakpoints: Sequence[float] = (),
    allow_nonfinite: bool = False,
) -> QuadratureResult:
    """Integrate ``f`` over the finite log-coordinate interval ``[a, b]``."""
    return adaptive_integrate(
        f, a, b, rel_tol=spec.rel_tol, abs_tol=spec.abs_tol,
        max_subdivisions=spec.max_subdivisions, breakpoints=breakpoints,
        allow_nonfinite=allow_nonfinite,
    )


# ---------------------------------------------------------------------------
# Radius-space cross-check path


def _power_tail_fit(g_at: Callable[[float], float], t1: float, g1: float, h: float):
    """Fit ``g(t) = A t^-p (1 + b/t)`` on ``t1 - 2h, t1 - h, t1``; return ``(p, tail beyond t1)``."""
    t2, t3 = t1 - h, t1 - 2.0 * h
    g2, g3 = g_at(t2), g_at(t3)
    if g2 == 0.0 or g3 == 0.0 or (g2 > 0) != (g1 > 0) or (g3 > 0) != (g1 > 0):
        return None
    # log(g1/gk) = -p log(t1/tk) + b (1/t1 - 1/tk), to first order in b/t.
    lhs = np.array([math.log(g1 / g2), math.log(g1 / g3)])
    mat = np.array([[-math.log(t1 / t2), 1.0 / t1 - 1.0 / t2],
                    [-math.log(t1 / t3), 1.0 / t1 - 1.0 / t3]])
    try:
        p, b = np.linalg.solve(mat, lhs)
    except np.linalg.LinAlgError:
        return None
    if not p > 1.0:
        return float(p), math.inf
    tail = g1 * t1 / (1.0 + b / t1) * (1.0 / (p - 1.0) + b / (t1 * p))
    return float(p), float(tail)


def integrate_radius(
    f: Callable[[np.ndarray], np.ndarray],
    rho: float,
    spec: QuadratureSpec = DEFAULT_SPEC,
    breakpoints: Sequence[float] = (),
    R: float | None = None,
    tail: Tail | None = None,
) -> QuadratureResult:
    """Integrate ``f(r)`` over ``(0, rho]`` in the original radius variable.

    The interval ``[eps_r, rho]`` with ``eps_r = R e^(1 - t_max)`` is cut into
    geometric panels ``rho 2^-k`` and refined adaptively.  The remaining piece
    ``(0, eps_r]`` is extrapolated from samples of ``r f(r)``, modelled as
    either ``C r^alpha`` or ``C E1^-p (1 + b/E1)`` with ``E1 = E1(r/R)``.
    A declared ``log_power_decay`` or divergent class overrides the fit:
    such tails vary too slowly to identify from samples with ``E1 <= t_max``,
    so the closed-form class tail is used and its consistency across two
    cut points is reported as the tail bound.
    """
    R = rho if R is None else R
    if not (rho > 0 and R >= rho):
        raise DomainError("need 0 < rho <= R")
    eps_r = R * math.exp(1.0 - min(spec.t_max, 700.0))
    if eps_r >= rho:
        raise DomainError("t_max too small for this ball")
    k = int(math.floor(math.log2(rho / eps_r)))
    geometric = [rho * 2.0**-j for j in range(1, k + 1) if rho * 2.0**-j > eps_r]
    bps = sorted(set(geometric) | {float(p) for p in breakpoints if eps_r < p < rho})
    res = adaptive_integrate(
        lambda r: f(r), eps_r, rho, rel_tol=spec.rel_tol, abs_tol=spec.abs_tol,
        max_subdivisions=max(spec.max_subdivisions, 4 * len(bps) + 4),
        breakpoints=bps, initial_panels=1,
    )

    def g(r: float) -> float:
        return float(np.asarray(f(np.array([r])))[0]) * r

    def g_at(t: float) -> float:
        return g(R * math.exp(1.0 - t))

    t1 = 1.0 - math.log(eps_r / R)
    t_rho = 1.0 - math.log(rho / R)
    g1 = g(eps_r)
    tail_decl = tail
    tail = 0.0
    tail_bound = 0.0
    status = res.status
    if tail_decl is not None and tail_decl.declares_divergence:
        status = "divergent"
    elif g1 != 0.0 and tail_decl is not None and tail_decl.kind == "log_power_decay":
        t_mid = t1 - min(64.0, (t1 - t_rho) / 2.5)
        est = _tail_estimate(tail_decl, g1, t1)
        strip = adaptive_integrate(np.vectorize(g_at), t_mid, t1, rel_tol=spec.rel_tol,
                                   abs_tol=spec.abs_tol * 1e-3)
        tail = est
        g_mid = g_at(t_mid)
        # Drift of g t l^-p between the two cuts; a correction decaying like
        # t^-mu with mu >= 1/4 has at most t1 / (mu h) times that drift left.
        l1, lm = 1.0 + math.log(t1), 1.0 + math.log(t_mid)
        m1, mm = g1 * t1 * l1**-tail_decl.exponent, g_mid * t_mid * lm**-tail_decl.exponent
        drift = abs(m1 / mm - 1.0) if mm != 0.0 else 1.0
        tail_bound = (abs(_tail_estimate(tail_decl, g_mid, t_mid) - (strip.value + est))
                      + abs(est) * drift * t1 / (0.25 * (t1 - t_mid)))
    elif g1 != 0.0:
        g2 = g_at(t1 - 8.0)
        if g2 == 0.0 or (g2 > 0) != (g1 > 0):
            tail_bound = abs(g1) * t1
        elif math.log(g2 / g1) / 8.0 > 0.05:
            # r f(r) ~ C r^alpha: exponentially small in t.
            alpha = math.log(g2 / g1) / 8.0
            g3 = g_at(t1 - 16.0)
            tail = g1 / alpha
            alpha3 = math.log(g3 / g1) / 16.0 if g3 != 0 and (g3 > 0) == (g1 > 0) else alpha
            tail_bound = abs(g1 / alpha3 - tail) if alpha3 > 0 else abs(tail)
        else:
            h = min(64.0, (t1 - t_rho) / 2.5)
            fits = [_power_tail_fit(g_at, t1, g1, hh) for hh in (h, 0.5 * h)]
            if any(fit is None for fit in fits):
                tail_bound = abs(g1) * t1
            elif fits[0][0] <= 1.0 + 1e-9:
                status = "divergent"
            else:
                tail = fits[0][1]
                tail_bound = abs(fits[1][1] - tail) + 1e-12 * abs(tail)
    value = res.value + tail
    if status == "converged" and res.error_estimate + tail_bound > 4.0 * max(
        spec.rel_tol * abs(value), spec.abs_tol
    ):
        status = "truncated"
    return QuadratureResult(value, res.error_estimate, tail_bound, status,
                            res.evaluations, res.panels)


# ---------------------------------------------------------------------------
# Truncated partial integrals


def truncated_series(
    f: Callable[[np.ndarray], np.ndarray],
    t_a: float,
    epsilons: Sequence[float],
    R: float = 1.0,
    spec: QuadratureSpec = DEFAULT_SPEC,
    breakpoints: Sequence[float] = (),
) -> list[float]:
    """Partial integrals of ``f`` over ``[t_a, E1(eps_k / R)]`` for each radius cutoff.

    Partials are accumulated piece by piece, so they are nondecreasing
    whenever ``f >= 0`` (the Kronrod weights are positive).
    """
    eps = [float(e) for e in epsilons]
    if any(b >= a for a, b in zip(eps[:-1], eps[1:])):
        raise DomainError("epsilons must be strictly decreasing")
    r_a = R * math.exp(1.0 - t_a)
    if not eps or eps[0] >= r_a or eps[-1] <= 0:
        raise DomainError(f"epsilons must lie in (0, {r_a})")
    cuts = [1.0 - math.log(e / R) for e in eps]
    partials = []
    acc: list[float] = []
    lo = t_a
    for hi in cuts:
        piece = integrate_interval(f, lo, hi, spec, breakpoints=[p for p in breakpoints if lo < p < hi])
        acc.append(piece.value)
        partials.append(math.fsum(acc))
        lo = hi
    return partials


# ---------------------------------------------------------------------------
# Two-dimensional disc rule


@dataclass(frozen=True)
class DiscGrid:
    """Polar tensor grid: Gauss-Legendre in the radial direction, trapezoid in angle."""

    n_radial: int = 24
    n_angular: int = 48

    def refined(self, factor: int = 2) -> "DiscGrid":
        return DiscGrid(self.n_radial * factor, self.n_angular * factor)


def integrate_disc_2d(
    f: Callable[[np.ndarray, np.ndarray], np.ndarray],
    center: tuple[float, float] = (0.0, 0.0),
    grid: DiscGrid = DiscGrid(),
    radius: float = 1.0,
) -> float:
    """Integrate ``f(y1, y2)`` over the disc of given radius about the origin.

    Polar coordinates are centred at the declared singular point ``center``
    (which must lie inside the disc), so an ``|y - center|^-1`` singularity is
    absorbed by the Jacobian.  Radial nodes never touch the centre.
    """
    cx, cy = map(float, center)
    if cx * cx + cy * cy >= radius * radius:
        raise DomainError("declared singular point must lie inside the disc")
    xg, wg = np.polynomial.legendre.leggauss(grid.n_radial)
    theta = 2.0 * math.pi * np.arange(grid.n_angular) / grid.n_angular
    c, s = np.cos(theta), np.sin(theta)
    # Distance from the centre to the circle along each ray.
    proj = cx * c + cy * s
    rmax = -proj + np.sqrt(proj**2 + radius * radius - cx * cx - cy * cy)
    rho = 0.5 * rmax[:, None] * (xg[None, :] + 1.0)
    y1 = cx + rho * c[:, None]
    y2 = cy + rho * s[:, None]
    with np.errstate(divide="ignore", invalid="ignore"):
        vals = np.asarray(f(y1, y2), dtype=float)
    bad = ~np.isfinite(vals)
    if bad.any():
        raise IntegrandError(
            f"non-finite integrand at y=({y1[bad][0]!r}, {y2[bad][0]!r}) away from the declared point"
        )
    radial = (vals * rho) @ wg * 0.5 * rmax
    return float(math.fsum((radial * (2.0 * math.pi / grid.n_angular)).tolist()))
