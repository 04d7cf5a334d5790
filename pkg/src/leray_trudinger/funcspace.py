"""Radial trial functions in the log coordinate ``t = E1(|x|/R)``.

Two representations are provided:

* :class:`MeshProfile` -- piecewise linear between nodes ``t_0 < ... < t_m``
  with ``t_0`` on the boundary and ``u_0 = 0``; constant (or zero, when
  ``compact``) beyond ``t_m``.
* :class:`AnalyticProfile` -- closed-form families (``moser_plateau``,
  ``ground_state_power``, ``pure_power``) with exact derivatives.

Families are written in the shifted variable ``tau = t - t_boundary + 1``
so that every family vanishes on the boundary of any ball.

Besides ``u`` and ``du/dt`` each profile exposes the ground-state quantities
used by the functionals: ``v = t^-a u`` with ``a = (n-1)/n``, and the
residual ``u' - a u / t = t^a v'``.  Families provide stable closed forms for
both, plus the amplitude ``v`` as a function of ``l = 1 + log t`` for any
``l`` (far beyond where ``t`` itself is representable).
"""

from __future__ import annotations

import hashlib
import json
import math
from dataclasses import dataclass, field, replace
from typing import Any

import numpy as np

from .errors import ConfigurationError, DomainError, NormalizationError
from .geometry import BallDomain

FAMILIES = ("moser_plateau", "ground_state_power", "pure_power")


class RadialProfile:
    """Common interface; concrete profiles are frozen dataclasses."""

    n: int
    t_boundary: float
    factor: float

    @property
    def a(self) -> float:
        return (self.n - 1.0) / self.n

    # -- to be provided by subclasses (vectorized, no domain checks) --
    def value(self, t: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def slope(self, t: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def amplitude_at_level(self, ell: np.ndarray) -> np.ndarray:
        """``v = t^-a u`` as a function of ``l = 1 + log t``, valid for any ``l >= 1``."""
        raise NotImplementedError

    def breakpoints(self) -> tuple[float, ...]:
        return ()

    @property
    def growth_exponent(self) -> float | None:
        """``s`` with ``v ~ l^s`` at the origin, or None when ``u`` is eventually constant."""
        return None

    def to_dict(self) -> dict:
        raise NotImplementedError

    # -- derived quantities --
    def residual(self, t: np.ndarray) -> np.ndarray:
        """``u' - a u / t``, i.e. ``t^a dv/dt``."""
        t = np.asarray(t, dtype=float)
        return self.slope(t) - self.a * self.value(t) / t

    def amplitude(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        return t ** (-self.a) * self.value(t)

    def amplitude_slope(self, t: np.ndarray) -> np.ndarray:
        t = np.asarray(t, dtype=float)
        return t ** (-self.a) * self.residual(t)

    def scaled(self, lam: float) -> "RadialProfile":
        return replace(self, factor=self.factor * float(lam))

    @property
    def is_zero(self) -> bool:
        return self.factor == 0.0

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def digest(self) -> str:
        return hashlib.sha256(self.to_json().encode()).hexdigest()


# ---------------------------------------------------------------------------
# Mesh profiles


@dataclass(frozen=True)
class MeshProfile(RadialProfile):
    n: int
    t_nodes: tuple[float, ...]
    u_nodes: tuple[float, ...]
    compact: bool = False
    factor: float = 1.0

    def __post_init__(self):
        t = np.asarray(self.t_nodes, dtype=float)
        u = np.asarray(self.u_nodes, dtype=float)
        if t.ndim != 1 or t.size < 2 or t.size != u.size:
            raise ConfigurationError("mesh needs >= 2 nodes with matching values")
        if not np.all(np.diff(t) > 0) or t[0] < 1.0:
            raise ConfigurationError("mesh nodes must be strictly increasing and >= 1")
        if not (np.all(np.isfinite(t)) and np.all(np.isfinite(u))):
            raise ConfigurationError("mesh nodes and values must be finite")
        if u[0] != 0.0:
            raise ConfigurationError("mesh profile must vanish on the boundary (u_0 = 0)")
        if self.compact and u[-1] != 0.0:
            raise ConfigurationError("compact mesh profile needs u_m = 0")
        object.__setattr__(self, "t_nodes", tuple(float(x) for x in t))
        object.__setattr__(self, "u_nodes", tuple(float(x) for x in u))

    @property
    def t_boundary(self) -> float:
        return self.t_nodes[0]

    @property
    def _t(self) -> np.ndarray:
        return np.asarray(self.t_nodes)

    @property
    def _u(self) -> np.ndarray:
        return np.asarray(self.u_nodes)

    @property
    def slopes(self) -> np.ndarray:
        return np.diff(self._u) / np.diff(self._t)

    def value(self, t):
        return self.factor * np.interp(t, self._t, self._u)

    def slope(self, t):
        t = np.asarray(t, dtype=float)
        # Right-hand slope at nodes; zero past the last node.
        idx = np.searchsorted(self._t, t, side="right") - 1
        slopes = np.append(self.slopes, 0.0)
        return self.factor * slopes[np.clip(idx, 0, slopes.size - 1)]

    def amplitude_at_level(self, ell):
        ell = np.asarray(ell, dtype=float)
        tail = 0.0 if self.compact else self.factor * self.u_nodes[-1]
        log_t = ell - 1.0
        inside = log_t <= math.log(self.t_nodes[-1])
        with np.errstate(over="ignore"):
            t_in = np.exp(np.minimum(log_t, math.log(self.t_nodes[-1])))
        return np.where(inside, t_in ** (-self.a) * self.value(t_in),
                        tail * np.exp(-self.a * log_t))

    def breakpoints(self):
        return self.t_nodes

    def to_dict(self):
        return {
            "representation": "mesh",
            "n": int(self.n),
            "t_nodes": list(self.t_nodes),
            "u_nodes": list(self.u_nodes),
            "compact": bool(self.compact),
            "factor": float(self.factor),
        }

    def interpolate(self, other: RadialProfile) -> "MeshProfile":
        """Mesh with these nodes carrying the values of ``other``."""
        vals = np.asarray(other.value(self._t), dtype=float)
        vals[0] = 0.0
        if self.compact:
            vals[-1] = 0.0
        return MeshProfile(self.n, self.t_nodes, tuple(vals.tolist()), self.compact)


# ---------------------------------------------------------------------------
# Analytic families


@dataclass(frozen=True)
class FamilySpec:
    """Family tag plus parameters.

    * ``moser_plateau``: ``L > 0`` (plateau start), ``scale > 0``;
      ``u = scale * min(tau - 1, L)``.
    * ``ground_state_power``: ``s`` (E2 exponent), optional ``cutoff > 1``;
      ``u = (tau^a - 1) (1 + log tau)^s``, frozen beyond the cutoff.
      Admissible (finite Hardy difference) iff ``s < 1/n`` or a cutoff is set.
    * ``pure_power``: ``a > 0`` with ``(a - 1) n > -1``, ``t_cap > 1``;
      ``u = (tau - 1)^a`` up to ``t_cap``, constant after.
    """

    kind: str
    params: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "params": dict(self.params)}


@dataclass(frozen=True)
class AnalyticProfile(RadialProfile):
    family: str
    params: tuple[tuple[str, float], ...]
    n: int
    t_boundary: float = 1.0
    factor: float = 1.0
    admissible: bool = True

    @property
    def p(self) -> dict[str, float]:
        return dict(self.params)

    def _tau(self, t):
        return np.asarray(t, dtype=float) - (self.t_boundary - 1.0)

    # Each family returns (u, du/dt, residual) without the factor.
    def _eval(self, t):
        t = np.asarray(t, dtype=float)
        tau = self._tau(t)
        p, a = self.p, self.a
        if self.family == "moser_plateau":
            L, sc = p["L"], p["scale"]
            u = sc * np.minimum(tau - 1.0, L)
            du = np.where(tau - 1.0 < L, sc, 0.0)
            return u, du, du - a * u / t
        if self.family == "pure_power":
            e, cap = p["a"], p["t_cap"]
            x = np.clip(tau, 1.0, cap) - 1.0
            u = x**e
            # The slope blows up at tau = 1 when e < 1; that single point is dropped.
            with np.errstate(divide="ignore"):
                du = np.where((tau < cap) & (x > 0), e * x ** (e - 1.0), 0.0)
            return u, du, du - a * u / t
        if self.family == "ground_state_power":
            s = p["s"]
            cut = p.get("cutoff")
            taue = tau if cut is None else np.minimum(tau, cut)
            ell = 1.0 + np.log(taue)
            ta = taue**a
            u = (ta - 1.0) * ell**s
            tb = self.t_boundary
            if cut is None:
                du = a * taue ** (a - 1.0) * ell**s + (ta - 1.0) * s * ell ** (s - 1.0) / taue
                # u' - a u/t rewritten without cancellation.
                res = (a * ell**s * (taue ** (a - 1.0) * (tb - 1.0) + 1.0) / t
                       + (ta - 1.0) * s * ell ** (s - 1.0) / taue)
            else:
                inside = tau < cut
                du = np.where(inside, a * taue ** (a - 1.0) * ell**s
                              + (ta - 1.0) * s * ell ** (s - 1.0) / taue, 0.0)
                res = np.where(
                    inside,
                    a * ell**s * (taue ** (a - 1.0) * (tb - 1.0) + 1.0) / t
                    + (ta - 1.0) * s * ell ** (s - 1.0) / taue,
                    -a * u / t,
                )
            return u, du, res
        raise ConfigurationError(f"unknown family {self.family!r}")

    def value(self, t):
        return self.factor * self._eval(t)[0]

    def slope(self, t):
        return self.factor * self._eval(t)[1]

    def residual(self, t):
        return self.factor * self._eval(t)[2]

    def amplitude(self, t):
        t = np.asarray(t, dtype=float)
        if self.family == "ground_state_power" and self.p.get("cutoff") is None:
            tau = self._tau(t)
            ell = 1.0 + np.log(tau)
            return self.factor * (tau / t) ** self.a * (1.0 - tau ** (-self.a)) * ell ** self.p["s"]
        return super().amplitude(t)

    def amplitude_at_level(self, ell):
        ell = np.asarray(ell, dtype=float)
        log_t = ell - 1.0
        small = log_t < 600.0
        with np.errstate(over="ignore"):
            t_small = np.exp(np.minimum(log_t, 600.0))
        direct = self.amplitude(t_small)
        if self.family == "ground_state_power" and self.p.get("cutoff") is None:
            # tau/t -> 1 and tau^-a -> 0 at these levels.
            far = self.factor * ell ** self.p["s"]
        else:
            u_inf = float(self.value(np.array([self._frozen_t()]))[0])
            far = u_inf * np.exp(-self.a * log_t)
        return np.where(small, direct, far)

    def _frozen_t(self) -> float:
        """A log coordinate beyond which ``u`` is constant."""
        p = self.p
        shift = self.t_boundary - 1.0
        if self.family == "moser_plateau":
            return 1.0 + p["L"] + shift
        if self.family == "pure_power":
            return p["t_cap"] + shift
        return p["cutoff"] + shift

    def breakpoints(self):
        if self.family == "ground_state_power" and self.p.get("cutoff") is None:
            return (self.t_boundary,)
        return (self.t_boundary, self._frozen_t())

    @property
    def growth_exponent(self):
        if self.family == "ground_state_power" and self.p.get("cutoff") is None:
            return self.p["s"]
        return None

    def to_dict(self):
        return {
            "representation": "analytic",
            "family": self.family,
            "params": {k: v for k, v in self.params},
            "n": int(self.n),
            "t_boundary": float(self.t_boundary),
            "factor": float(self.factor),
            "admissible": bool(self.admissible),
        }


@dataclass(frozen=True)
class GroundStateTransform(RadialProfile):
    """``v = t^-(n-1)/n u`` for an underlying profile ``u``."""

    base: RadialProfile
    factor: float = 1.0

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def t_boundary(self) -> float:
        return self.base.t_boundary

    def value(self, t):
        return self.factor * self.base.amplitude(t)

    def slope(self, t):
        return self.factor * self.base.amplitude_slope(t)

    def weighted_slope(self, t):
        """``t^((n-1)/n) v'``, the stable form used by the transformed energy."""
        return self.factor * self.base.residual(t)

    def amplitude_at_level(self, ell):
        ell = np.asarray(ell, dtype=float)
        return self.factor * np.exp(-self.a * (ell - 1.0)) * self.base.amplitude_at_level(ell)

    def breakpoints(self):
        return self.base.breakpoints()

    def to_dict(self):
        return {"representation": "ground_state_transform", "base": self.base.to_dict(),
                "factor": float(self.factor)}

    def inverse(self) -> RadialProfile:
        """The profile ``E1^((n-1)/n) v``."""
        return self.base.scaled(self.factor)


# ---------------------------------------------------------------------------
# Public operations


def _check_t(profile: RadialProfile, t):
    arr = np.asarray(t, dtype=float)
    if np.any(~np.isfinite(arr)) or np.any(arr < profile.t_boundary):
        raise DomainError(f"t must be >= t_boundary={profile.t_boundary}, got {t!r}")
    return arr


def evaluate(profile: RadialProfile, t):
    """``u(t)`` with a domain check; scalar in, scalar out."""
    arr = _check_t(profile, t)
    out = profile.value(arr)
    return float(out) if np.ndim(out) == 0 else out


def derivative(profile: RadialProfile, t):
    """``du/dt``; right-hand slope at mesh nodes."""
    arr = _check_t(profile, t)
    out = profile.slope(arr)
    return float(out) if np.ndim(out) == 0 else out


def scale(profile: RadialProfile, lam: float) -> RadialProfile:
    return profile.scaled(lam)


def make_family(spec: FamilySpec, domain: BallDomain) -> AnalyticProfile:
    """Build an analytic profile, validating the family's parameter ranges."""
    kind, p = spec.kind, {k: float(v) for k, v in spec.params.items() if v is not None}
    n = domain.n
    problems = []
    admissible = True
    if kind == "moser_plateau":
        p.setdefault("scale", 1.0)
        if not p.get("L", 0.0) > 0:
            problems.append("L must be > 0")
        if not p["scale"] > 0:
            problems.append("scale must be > 0")
    elif kind == "ground_state_power":
        if "s" not in p or not math.isfinite(p["s"]):
            problems.append("s must be a finite real number")
        if "cutoff" in p and not p["cutoff"] > 1.0:
            problems.append("cutoff must be > 1")
        if "cutoff" not in p and "s" in p:
            admissible = p["s"] < 1.0 / n
    elif kind == "pure_power":
        p.setdefault("t_cap", 10.0)
        e = p.get("a", float("nan"))
        if not e > 0:
            problems.append("a must be > 0")
        elif not (e - 1.0) * n > -1.0:
            problems.append(f"(a-1)*n must be > -1 for finite energy (a > {1 - 1 / n:.6g})")
        if not p["t_cap"] > 1.0:
            problems.append("t_cap must be > 1")
    else:
        raise ConfigurationError(f"unknown family {kind!r}; expected one of {FAMILIES}")
    if problems:
        raise ConfigurationError(f"{kind}: " + "; ".join(problems))
    return AnalyticProfile(kind, tuple(sorted(p.items())), n, domain.t_boundary,
                           1.0, admissible)


def sample_random_mesh(
    domain: BallDomain,
    node_count: int,
    amplitude: float = 1.0,
    seed: int = 0,
    *,
    nonnegative: bool = False,
    compact: bool = False,
    span: float = 29.0,
) -> MeshProfile:
    """Deterministic random mesh profile on ``[t_b, t_b + span]``."""
    if node_count < 2:
        raise ConfigurationError("node_count must be >= 2")
    rng = np.random.default_rng(seed)
    tb = domain.t_boundary
    inner = np.sort(rng.uniform(0.0, span, size=node_count - 1))
    # Keep nodes distinct and away from the boundary node.
    t = tb + np.concatenate([[0.0], np.maximum.accumulate(inner + 1e-6 * np.arange(1, node_count))])
    lo = 0.0 if nonnegative else -amplitude
    u = rng.uniform(lo, amplitude, size=node_count)
    u[0] = 0.0
    if compact:
        u[-1] = 0.0
    return MeshProfile(domain.n, tuple(t.tolist()), tuple(u.tolist()), compact)


def normalize_to_unit_hardy(profile: RadialProfile, domain: BallDomain, **kwargs) -> RadialProfile:
    """Rescale so that the Hardy difference equals 1 (uses n-homogeneity)."""
    from .functionals import I_n

    rep = I_n(profile, domain, **kwargs)
    val = rep.value
    if rep.status != "converged" or not math.isfinite(val):
        raise NormalizationError(f"Hardy difference not finite (status {rep.status})")
    if not val > 0:
        raise NormalizationError(f"Hardy difference is {val!r}; cannot normalize")
    if val == 1.0:
        return profile
    return profile.scaled(val ** (-1.0 / domain.n))


def profile_from_dict(d: dict[str, Any]) -> RadialProfile:
    rep = d.get("representation")
    if rep == "mesh":
        return MeshProfile(int(d["n"]), tuple(d["t_nodes"]), tuple(d["u_nodes"]),
                           bool(d.get("compact", False)), float(d.get("factor", 1.0)))
    if rep == "analytic":
        params = tuple(sorted((k, float(v)) for k, v in d["params"].items()))
        return AnalyticProfile(d["family"], params, int(d["n"]), float(d["t_boundary"]),
                               float(d.get("factor", 1.0)), bool(d.get("admissible", True)))
    if rep == "ground_state_transform":
        return GroundStateTransform(profile_from_dict(d["base"]), float(d.get("factor", 1.0)))
    raise ConfigurationError(f"unknown profile representation {rep!r}")


def profile_from_json(text: str) -> RadialProfile:
    return profile_from_dict(json.loads(text))
