"""Extremal searches and parameter sweeps built on the functionals.

Every candidate is rescaled to unit Hardy difference before its objective
is evaluated (``I_n`` is n-homogeneous), so the constraint ``I_n <= 1`` is
always active and no penalty weight is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .errors import ConfigurationError, NormalizationError
from .funcspace import FamilySpec, MeshProfile, RadialProfile, make_family
from .functionals import (
    DEFAULT_EPSILONS,
    FunctionalReport,
    I_n,
    TrudingerParams,
    remainder_constant,
    remainder_term,
    trudinger_integral,
)
from .geometry import BallDomain


@dataclass(frozen=True)
class OptimizeBudget:
    max_evaluations: int = 200
    step_init: float = 0.25
    step_min: float = 1e-3
    seed: int = 0

    def __post_init__(self):
        if self.max_evaluations < 1:
            raise ConfigurationError("max_evaluations must be >= 1")
        if not 0 < self.step_min < self.step_init:
            raise ConfigurationError("need 0 < step_min < step_init")


@dataclass(frozen=True)
class MeshSpec:
    """Geometric node layout ``t_b + span * (2^(k/(m-1)) - 1)`` used by the pattern search."""

    node_count: int = 12
    span: float = 40.0
    jitter: float = 0.05

    def __post_init__(self):
        if self.node_count < 3:
            raise ConfigurationError("node_count must be >= 3")
        if not self.span > 0:
            raise ConfigurationError("span must be positive")
        if not 0 <= self.jitter < 0.5:
            raise ConfigurationError("jitter must lie in [0, 0.5)")

    def nodes(self, t_b: float, rng: np.random.Generator) -> np.ndarray:
        m = self.node_count
        k = np.arange(m, dtype=float)
        inner = rng.uniform(-self.jitter, self.jitter, size=m)
        inner[0] = inner[-1] = 0.0
        x = np.log1p(self.span) * (k + inner) / (m - 1)
        return t_b + np.expm1(x)


@dataclass
class ExtremalResult:
    best_profile: RadialProfile | None
    objective: float
    constraint_value: float
    trace: list[tuple[int, float]] = field(default_factory=list)
    status: str = "converged"
    witness: FunctionalReport | None = None
    notes: list[str] = field(default_factory=list)
    evaluations: int = 0
    table: list[dict] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "best_profile": self.best_profile.to_dict() if self.best_profile is not None else None,
            "objective": self.objective,
            "constraint_value": self.constraint_value,
            "trace": [list(x) for x in self.trace],
            "status": self.status,
            "witness": self.witness.to_dict() if self.witness is not None else None,
            "notes": list(self.notes),
            "evaluations": self.evaluations,
        }


def _normalized(profile: RadialProfile, domain: BallDomain) -> tuple[RadialProfile, float] | None:
    rep = I_n(profile, domain)
    if not rep.converged or not rep.value > 0:
        return None
    return profile.scaled(rep.value ** (-1.0 / domain.n)), rep.value


def warm_start_specs(n: int) -> list[FamilySpec]:
    """Moser plateaus, ground-state powers and capped pure powers."""
    specs = [FamilySpec("moser_plateau", {"L": L}) for L in (0.5, 1.0, 2.0, 4.0, 8.0, 16.0)]
    specs += [FamilySpec("ground_state_power", {"s": s / n}) for s in (0.2, 0.4, 0.6, 0.8, 0.9, 0.98)]
    # Exponents below 1 put an endpoint singularity into u' that double
    # precision cannot resolve to the default tolerance.
    specs += [FamilySpec("pure_power", {"a": a, "t_cap": 20.0}) for a in (1.0, 1.5, 2.0)]
    return specs


def maximize_trudinger(domain: BallDomain, params: TrudingerParams,
                       mesh_spec: MeshSpec = MeshSpec(),
                       budget: OptimizeBudget = OptimizeBudget(),
                       warm_starts: Sequence[FamilySpec] | None = None) -> ExtremalResult:
    """Pattern search for the largest Trudinger integral under ``I_n = 1``.

    The warm starts are scored first; a divergent candidate stops the
    search and is returned as the witness.  The best warm start is then
    interpolated onto a mesh and refined node by node with a geometric
    step decay.  All randomness (node jitter, coordinate order) comes from
    ``budget.seed``.
    """
    rng = np.random.default_rng(budget.seed)
    evals = 0
    trace: list[tuple[int, float]] = []
    best: tuple[float, RadialProfile] | None = None
    notes: list[str] = []

    def score(profile: RadialProfile):
        nonlocal evals, best
        evals += 1
        normed = _normalized(profile, domain)
        if normed is None:
            return None, None
        u, _ = normed
        rep = trudinger_integral(u, domain, params)
        if rep.status == "divergent":
            return u, rep
        if rep.converged and (best is None or rep.value > best[0]):
            best = (rep.value, u)
            trace.append((evals, rep.value))
        return u, rep

    specs = list(warm_starts) if warm_starts is not None else warm_start_specs(domain.n)
    for spec in specs:
        if evals >= budget.max_evaluations:
            break
        u, rep = score(make_family(spec, domain))
        if rep is not None and rep.status == "divergent":
            return ExtremalResult(u, math.inf, I_n(u, domain).value, trace, "divergent", rep,
                                  [f"divergent witness from {spec.kind} {spec.params}"], evals)
    if best is None:
        raise NormalizationError("no warm start could be normalized")

    nodes = mesh_spec.nodes(domain.t_boundary, rng)
    start = best[1]
    x = np.asarray(start.value(nodes), dtype=float)
    x[0] = 0.0
    step = budget.step_init * max(float(np.max(np.abs(x))), 1.0)
    step_min = budget.step_min * max(float(np.max(np.abs(x))), 1.0)
    order = rng.permutation(np.arange(1, len(x)))
    current = best[0]
    while step >= step_min and evals < budget.max_evaluations:
        improved = False
        for k in order:
            for sign in (1.0, -1.0):
                if evals >= budget.max_evaluations:
                    break
                y = x.copy()
                y[k] += sign * step
                _, rep = score(MeshProfile(domain.n, tuple(nodes.tolist()), tuple(y.tolist())))
                if rep is None:
                    continue
                if rep.status == "divergent":
                    u = best[1]
                    return ExtremalResult(u, best[0], I_n(u, domain).value, trace, "divergent",
                                          rep, ["divergent candidate during mesh search"], evals)
                if rep.converged and rep.value > current:
                    current = rep.value
                    x = y
                    improved = True
                    break
        if not improved:
            step *= 0.5
    status = "converged" if step < step_min else "budget_exhausted"
    if status == "budget_exhausted":
        notes.append("evaluation budget exhausted; best-so-far returned")
    value, u = best
    return ExtremalResult(u, value, I_n(u, domain).value, trace, status, None, notes, evals)


# ---------------------------------------------------------------------------
# Hardy-to-remainder ratios


def ratio_sweep_specs(n: int, gamma: float) -> list[FamilySpec]:
    """Ground-state powers approaching the largest ``s`` with finite remainder.

    ``I_n`` needs ``s < 1/n`` and the ``E2^-gamma`` remainder needs
    ``s < (gamma - 1)/n``; cut-off variants probe beyond that edge.
    """
    s_edge = min(1.0, gamma - 1.0) / n
    specs = []
    if s_edge > 0:
        for k in range(1, 11):
            specs.append(FamilySpec("ground_state_power", {"s": s_edge * (1.0 - 2.0 ** -k)}))
    for s in (0.2 / n, 0.5 / n, 1.0 / n):
        for cutoff in (1e2, 1e4, 1e8):
            specs.append(FamilySpec("ground_state_power", {"s": s, "cutoff": cutoff}))
    return specs


def minimize_ratio(domain: BallDomain, gamma: float = 2.0,
                   search_space: str | Sequence[RadialProfile] = "family",
                   budget: OptimizeBudget = OptimizeBudget()) -> ExtremalResult:
    """Minimize ``I_n(u) / remainder_term(u, gamma)`` over a family sweep or given profiles.

    Candidates whose remainder or Hardy difference is not finite are
    discarded with a note.  ``table`` lists every evaluated candidate in
    sweep order; the trace records the running minimum as a
    nondecreasing sequence of negated ratios.
    """
    if isinstance(search_space, str):
        if search_space != "family":
            raise ConfigurationError(f"unknown search space {search_space!r}")
        candidates = [make_family(s, domain) for s in ratio_sweep_specs(domain.n, gamma)]
    else:
        candidates = list(search_space)
    notes, table, trace = [], [], []
    best: tuple[float, RadialProfile] | None = None
    evals = 0
    for u in candidates[: budget.max_evaluations]:
        evals += 1
        i_rep = I_n(u, domain)
        r_rep = remainder_term(u, domain, gamma)
        label = u.to_dict()
        if not (i_rep.converged and r_rep.converged) or not r_rep.value > 0:
            notes.append(f"discarded {label.get('params', label.get('representation'))}: "
                         f"I_n {i_rep.status}, remainder {r_rep.status}")
            continue
        ratio = i_rep.value / r_rep.value
        table.append({"profile": label, "I_n": i_rep.value, "remainder": r_rep.value, "ratio": ratio})
        if best is None or ratio < best[0]:
            best = (ratio, u)
            trace.append((evals, -ratio))
    if best is None:
        return ExtremalResult(None, math.nan, math.nan, trace, "divergent", None, notes, evals, table)
    ratio, u = best
    normed = _normalized(u, domain)
    u_n, _ = normed if normed is not None else (u, None)
    out = ExtremalResult(u_n, ratio, I_n(u_n, domain).value, trace, "converged", None, notes, evals,
                         table)
    if gamma == 2.0 and ratio < remainder_constant(domain.n) - 1e-6:
        out.notes.append("ratio below the best constant: quadrature failure")
        out.status = "invariant_violation"
    return out


# ---------------------------------------------------------------------------
# Divergence and gap-region sweeps


def check_blowup_window(n: int, beta: float, s: float | None) -> None:
    """Admissible ``(beta, s)`` for :func:`blowup_sweep`.

    The profile needs ``s < 1/n`` for a finite Hardy difference.  Below
    ``beta = 2/n`` the divergence mechanism requires ``beta < s``; at or
    above ``2/n`` the run is a finite-regime control.
    """
    window = f"(beta, 1/n) = ({beta:g}, {1.0 / n:g})"
    if s is None:
        raise ConfigurationError(f"s is required and must lie in {window}")
    if not s < 1.0 / n:
        raise ConfigurationError(f"s={s:g} must be < 1/n={1.0 / n:g}; the window is {window}")
    if beta < 2.0 / n and not beta < s:
        raise ConfigurationError(f"beta={beta:g} >= s={s:g}; s must lie in {window}")


def blowup_sweep(domain: BallDomain, beta: float, c: float, s: float | None,
                 epsilons: Sequence[float] = DEFAULT_EPSILONS,
                 weight_kind: str = "E2_power") -> dict:
    """Truncated Trudinger partials of the normalized ground-state power ``u_s``."""
    n = domain.n
    check_blowup_window(n, beta, s)
    u = make_family(FamilySpec("ground_state_power", {"s": s}), domain)
    normed = _normalized(u, domain)
    if normed is None:
        raise NormalizationError(f"ground-state power s={s} has no finite Hardy difference")
    u1, _ = normed
    i_value = I_n(u1, domain).value
    params = TrudingerParams(c, beta, weight_kind, tuple(epsilons))
    rep = trudinger_integral(u1, domain, params)
    rows = []
    prev = None
    for eps, part in zip(rep.epsilons, rep.partials):
        rows.append({"epsilon": eps, "truncated_T": part,
                     "growth_ratio": part / prev if prev else math.nan, "I_n": i_value})
        prev = part
    verdict = "DIVERGENT" if rep.status == "divergent" else "CONVERGENT"
    if rep.status not in ("divergent", "converged"):
        verdict = "UNDETERMINED"
    return {"rows": rows, "verdict": verdict, "report": rep, "profile": u1,
            "beta": beta, "c": c, "s": s, "n": n}


def gap_region_scan(domain: BallDomain, beta_grid: Sequence[float], c_grid: Sequence[float],
                    family_grid: Sequence[FamilySpec] | None = None) -> dict:
    """EMPIRICAL scan of the Trudinger integral for ``beta`` in ``[1/n, 2/n)``.

    No proven bound covers this range; the report only records the largest
    finite value and any divergent witnesses found on the grids.
    """
    n = domain.n
    if not beta_grid or not c_grid:
        raise ConfigurationError("beta_grid and c_grid must be nonempty")
    families = list(family_grid) if family_grid is not None else warm_start_specs(n)
    if not families:
        raise ConfigurationError("family_grid must be nonempty")
    notes = []
    if any(not (1.0 / n <= b < 2.0 / n) for b in beta_grid):
        notes.append("some beta values lie outside [1/n, 2/n)")
    profiles = []
    for spec in families:
        normed = _normalized(make_family(spec, domain), domain)
        if normed is None:
            notes.append(f"skipped {spec.kind} {spec.params}: Hardy difference not finite")
            continue
        profiles.append((spec, normed[0]))
    cells = []
    for beta in beta_grid:
        for c in c_grid:
            params = TrudingerParams(c, beta)
            best, witnesses = -math.inf, []
            for spec, u in profiles:
                rep = trudinger_integral(u, domain, params)
                if rep.status == "divergent":
                    witnesses.append({"kind": spec.kind, "params": dict(spec.params)})
                elif rep.converged:
                    best = max(best, rep.value)
            cells.append({"beta": beta, "c": c, "max_finite": best if best > -math.inf else math.nan,
                          "divergent_witnesses": witnesses})
    return {"label": "EMPIRICAL", "n": n, "cells": cells, "notes": notes}
