"""Logarithmic weights E1, E2 and their radial derivatives.

For a radius ratio ``s = r/R`` in ``(0, 1]``::

    E1(s) = log(e/s)          E2(s) = log(e * E1(s))

Downstream code works in the logarithmic coordinate ``t = E1(s)``, where
``E1 = t`` and ``E2 = log(e*t)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

#: Largest log coordinate that is exponentiated back to a radius ratio.
T_CAP = 700.0


def _check_ratio(s, *, open_right: bool = False):
    arr = np.asarray(s, dtype=float)
    if np.any(~np.isfinite(arr)) or np.any(arr <= 0.0) or np.any(arr > 1.0):
        raise DomainError(f"radius ratio must lie in (0, 1], got {s!r}")
    if open_right and np.any(arr >= 1.0):
        raise DomainError(f"radius ratio must lie in (0, 1) here, got {s!r}")
    return arr


def _out(arr):
    return float(arr) if np.ndim(arr) == 0 else arr


def E1(s):
    """``log(e/s)`` for ``0 < s <= 1``; accepts scalars or arrays."""
    arr = _check_ratio(s)
    return _out(1.0 - np.log(arr))


def E2(s):
    """``log(e * E1(s))``, evaluated as ``1 + log1p(-log s)`` to stay accurate near s = 1."""
    arr = _check_ratio(s)
    return _out(1.0 + np.log1p(-np.log(arr)))


def E1_of_t(t):
    """E1 expressed in the log coordinate (identity)."""
    return t


def E2_of_t(t):
    """E2 expressed in the log coordinate: ``log(e*t) = 1 + log t``."""
    return 1.0 + np.log(t)


def weight_derivative(kind: str, s, exponents: tuple[float, float] = (1.0, 0.0)):
    """Derivative with respect to the radius ratio ``s`` of a weight.

    ``kind`` is one of ``"E1"``, ``"E2"`` or ``"E1_power_E2_power"``; the
    last one differentiates ``E1**p * E2**q`` with ``(p, q) = exponents``.
    Uses ``dE1/ds = -1/s`` and ``dE2/ds = -1/(s*E1)``.
    """
    arr = _check_ratio(s, open_right=True)
    e1 = 1.0 - np.log(arr)
    if kind == "E1":
        return _out(-1.0 / arr)
    if kind == "E2":
        return _out(-1.0 / (arr * e1))
    if kind == "E1_power_E2_power":
        p, q = exponents
        if not (math.isfinite(p) and math.isfinite(q)):
            raise DomainError("weight exponents must be finite")
        e2 = 1.0 + np.log1p(-np.log(arr))
        w = e1**p * e2**q
        return _out(-w / arr * (p / e1 + q / (e1 * e2)))
    raise DomainError(f"unknown weight kind {kind!r}")


def gradient_bound_holds(n: int, s) -> bool | np.ndarray:
    """Check ``|d/ds (E1^(1-1/n) / E2^(2/n))| <= ((n+1)/n) / (s E1^(1/n) E2^(2/n))``."""
    arr = _check_ratio(s, open_right=True)
    lhs = np.abs(weight_derivative("E1_power_E2_power", arr, (1.0 - 1.0 / n, -2.0 / n)))
    e1 = 1.0 - np.log(arr)
    e2 = 1.0 + np.log1p(-np.log(arr))
    rhs = ((n + 1.0) / n) / (arr * e1 ** (1.0 / n) * e2 ** (2.0 / n))
    ok = lhs <= rhs * (1.0 + 1e-14)
    return bool(ok) if np.ndim(ok) == 0 else ok


@dataclass(frozen=True)
class WeightPoint:
    """A point given both as log coordinate ``t`` and radius ratio ``r/R = e^(1-t)``.

    Radius ratios below ``e^(1-T_CAP)`` are stored as exactly 0.
    """

    t: float
    r_over_R: float

    @classmethod
    def from_t(cls, t: float) -> "WeightPoint":
        if not t >= 1.0:
            raise DomainError(f"log coordinate must be >= 1, got {t!r}")
        ratio = math.exp(1.0 - t) if t <= T_CAP else 0.0
        return cls(float(t), ratio)

    @classmethod
    def from_ratio(cls, s: float) -> "WeightPoint":
        return cls(float(E1(s)), float(s))

    @property
    def E1(self) -> float:
        return self.t

    @property
    def E2(self) -> float:
        return 1.0 + math.log(self.t)
