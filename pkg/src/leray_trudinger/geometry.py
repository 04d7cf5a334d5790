"""Ball domains and the radius <-> log-coordinate change of variables."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError


def unit_ball_volume(n: int) -> float:
    """Volume ``pi^(n/2) / Gamma(n/2 + 1)`` of the unit ball in R^n."""
    if n < 1:
        raise DomainError(f"dimension must be >= 1, got {n}")
    return math.pi ** (n / 2.0) / math.gamma(n / 2.0 + 1.0)


@dataclass(frozen=True)
class BallDomain:
    """Ball of radius ``rho`` centred at the origin in R^n, with Hardy scale ``R >= rho``."""

    n: int
    rho: float = 1.0
    R: float = 1.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise DomainError(f"dimension must be an integer >= 2, got {self.n!r}")
        if not (self.rho > 0 and math.isfinite(self.rho)):
            raise DomainError(f"ball radius must be positive, got {self.rho!r}")
        if not (self.R >= self.rho and math.isfinite(self.R)):
            raise DomainError(f"Hardy scale R={self.R!r} must be >= rho={self.rho!r}")

    @property
    def w_n(self) -> float:
        return unit_ball_volume(self.n)

    @property
    def volume(self) -> float:
        return self.w_n * self.rho**self.n

    @property
    def t_boundary(self) -> float:
        """``E1(rho/R) = 1 + log(R/rho)``."""
        return 1.0 + math.log(self.R / self.rho)

    @property
    def ground_state_exponent(self) -> float:
        """``(n-1)/n``, the power of the virtual ground state ``t^((n-1)/n)``."""
        return (self.n - 1.0) / self.n

    def to_dict(self) -> dict:
        return {"n": int(self.n), "rho": float(self.rho), "R": float(self.R)}


def to_log_coordinate(domain: BallDomain, r):
    """``t = log(e R / r)`` for ``0 < r <= rho``."""
    arr = np.asarray(r, dtype=float)
    if np.any(~(arr > 0)) or np.any(arr > domain.rho):
        raise DomainError(f"radius must lie in (0, {domain.rho}], got {r!r}")
    t = 1.0 + np.log(domain.R / arr)
    return float(t) if t.ndim == 0 else t


def from_log_coordinate(domain: BallDomain, t):
    """Inverse of :func:`to_log_coordinate`: ``r = R e^(1-t)``."""
    arr = np.asarray(t, dtype=float)
    r = domain.R * np.exp(1.0 - arr)
    return float(r) if r.ndim == 0 else r


def radial_measure_factor(domain: BallDomain, t):
    """Jacobian ``n w_n R^n e^(n(1-t))`` turning ``dx`` into ``dt`` for radial integrands."""
    arr = np.asarray(t, dtype=float)
    n = domain.n
    val = n * domain.w_n * domain.R**n * np.exp(n * (1.0 - arr))
    return float(val) if val.ndim == 0 else val
