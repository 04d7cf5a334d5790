"""Invariant suites as replayable cases.

A case is a JSON-ready dict ``{"invariant", "domain", "profile", "params"}``.
Each checker maps a case to ``(passed, details)``; a suite is a case
generator plus its checker, so any failing case can be written to disk
and replayed bit for bit.
"""

from __future__ import annotations

import math
from typing import Callable, Iterator

import numpy as np

from .functionals import (
    C1,
    I_n,
    J_n,
    dirichlet_energy,
    green_representation_check,
    ground_state_transform,
    hardy_term,
    prop31_bound_rhs,
    prop31_constant,
    remainder_constant,
    remainder_term,
    series_threshold,
    weighted_Lq_norm,
    young_base_residual,
    young_pairing_check,
)
from .funcspace import profile_from_dict, sample_random_mesh
from .geometry import BallDomain
from .quadrature import DiscGrid, Tail, integrate_log

DOMAIN_PAIRS = ((1.0, 1.0), (0.5, 2.0))


def _domain(case) -> BallDomain:
    d = case["domain"]
    return BallDomain(int(d["n"]), float(d["rho"]), float(d["R"]))


def random_mesh_cases(invariant: str, count: int, seed: int, dims=(2, 3, 4),
                      domains=DOMAIN_PAIRS, **mesh_kw) -> Iterator[dict]:
    """``count`` random mesh profiles per (dimension, domain) pair."""
    rng = np.random.default_rng(seed)
    for n in dims:
        for rho, R in domains:
            dom = BallDomain(n, rho, R)
            for _ in range(count):
                prof = sample_random_mesh(
                    dom, int(rng.integers(3, 16)), float(rng.uniform(0.1, 5.0)),
                    int(rng.integers(0, 2**31)), span=float(rng.uniform(2.0, 40.0)), **mesh_kw)
                yield {"invariant": invariant, "domain": dom.to_dict(), "profile": prof.to_dict(),
                       "params": {}}


def check_hardy_nonnegative(case) -> tuple[bool, dict]:
    dom, u = _domain(case), profile_from_dict(case["profile"])
    i, d = I_n(u, dom), dirichlet_energy(u, dom)
    return i.value >= -1e-9 * d.value, {"I_n": i.value, "dirichlet": d.value}


def check_improved_hardy(case) -> tuple[bool, dict]:
    dom, u = _domain(case), profile_from_dict(case["profile"])
    i, d, r = I_n(u, dom), dirichlet_energy(u, dom), remainder_term(u, dom, 2.0)
    lhs = remainder_constant(dom.n) * r.value
    return i.value >= lhs - 1e-8 * d.value, {"I_n": i.value, "bound": lhs, "dirichlet": d.value}


def check_transform_identity(case) -> tuple[bool, dict]:
    dom, u = _domain(case), profile_from_dict(case["profile"])
    i = I_n(u, dom).value
    j = J_n(ground_state_transform(u, dom), dom).value
    ok = j <= C1(dom.n) * i * (1.0 + 1e-8) + 1e-12
    if dom.n == 2:
        ok = ok and abs(j - i) <= 1e-6 * max(i, 1e-12)
    return ok, {"I_n": i, "J_n": j}


def check_prop31(case) -> tuple[bool, dict]:
    dom, u = _domain(case), profile_from_dict(case["profile"])
    q = float(case["params"]["q"])
    i = I_n(u, dom).value
    norm = weighted_Lq_norm(u, dom, q).value
    bound = prop31_bound_rhs(dom.n, q, dom.volume, max(i, 0.0))
    return norm <= bound * (1.0 + 1e-9), {"norm": norm, "bound": bound, "I_n": i}


def check_dual_path(case) -> tuple[bool, dict]:
    dom, u = _domain(case), profile_from_dict(case["profile"])
    out, ok = {}, True
    for name, fn in (("hardy_term", hardy_term), ("dirichlet_energy", dirichlet_energy)):
        a, b = fn(u, dom, path="log").value, fn(u, dom, path="radius").value
        out[name] = (a, b)
        ok = ok and abs(a - b) <= 1e-6 * max(abs(a), abs(b), 1e-300)
    return ok, out


def check_constants(case) -> tuple[bool, dict]:
    n = int(case["params"]["n"])
    ok = C1(n) == 2 ** (n - 1) - 1
    if n == 2:
        ok = ok and abs(prop31_constant(2) - 2.0 / math.sqrt(math.pi)) <= 1e-12 * prop31_constant(2)
        ok = ok and abs(series_threshold(2) - math.pi / (4.0 * math.e)) <= 1e-12
    return ok, {"C1": C1(n), "C_n": prop31_constant(n), "A_n": series_threshold(n)}


def check_quadrature_oracles(case) -> tuple[bool, dict]:
    n = int(case["params"]["n"])
    w = BallDomain(n).w_n
    # int_{B1} dx and int_{B1} |x|^-n E1^-2 dx in the log coordinate.
    vol = n * w * integrate_log(lambda t: np.exp(n * (1.0 - t)), 1.0,
                                tail=Tail.exponential_decay(n)).value
    lerr = n * w * integrate_log(lambda t: t**-2.0, 1.0).value
    ok = abs(vol - w) <= 1e-10 * w and abs(lerr - n * w) <= 1e-10 * n * w
    return ok, {"volume": vol, "leray_kernel": lerr}


def check_young(case) -> tuple[bool, dict]:
    n = int(case["params"]["n"])
    g = np.linspace(0.0, float(case["params"].get("max", 20.0)), int(case["params"].get("size", 200)))
    a, b = np.meshgrid(g, g)
    base = young_base_residual(a, b)
    derived = young_pairing_check(a, b, n)
    # Rounding of e^a - a - 1 + ... is relative to the largest term.
    scale = np.expm1(a) + (1.0 + b) * np.log1p(b) + a * b + 1.0
    ok = bool(np.all(base >= -1e-12 * scale)) and bool(np.all(derived >= 0))
    return ok, {"min_base": float(np.min(base)), "min_derived": float(np.min(derived))}


def check_green(case) -> tuple[bool, dict]:
    coarse = green_representation_check(grid=DiscGrid(1, 2))
    fine = green_representation_check(grid=DiscGrid(24, 48))
    ok = fine["max_relative_error"] <= 1e-2 and fine["max_relative_error"] <= coarse["max_relative_error"] + 1e-14
    return ok, {"coarse": coarse["max_relative_error"], "fine": fine["max_relative_error"]}


CHECKERS: dict[str, Callable[[dict], tuple[bool, dict]]] = {
    "hardy_nonnegative": check_hardy_nonnegative,
    "improved_hardy": check_improved_hardy,
    "transform_identity": check_transform_identity,
    "prop31_bound": check_prop31,
    "dual_path": check_dual_path,
    "constants": check_constants,
    "quadrature_oracles": check_quadrature_oracles,
    "young_pairing": check_young,
    "green_representation": check_green,
}


def default_cases(profile_count: int = 20, seed: int = 0) -> Iterator[dict]:
    yield from random_mesh_cases("hardy_nonnegative", profile_count, seed)
    yield from random_mesh_cases("improved_hardy", profile_count, seed + 1)
    yield from random_mesh_cases("transform_identity", profile_count, seed + 2,
                                 nonnegative=True, compact=True)
    for k, case in enumerate(random_mesh_cases("prop31_bound", profile_count, seed + 3, dims=(2, 3))):
        n = case["domain"]["n"]
        case["params"] = {"q": float((n + 1, 2 * n, 4 * n)[k % 3])}
        yield case
    yield from random_mesh_cases("dual_path", max(1, profile_count // 4), seed + 4, dims=(2, 3))
    for n in range(2, 7):
        yield {"invariant": "constants", "domain": None, "profile": None, "params": {"n": n}}
    for n in (2, 3, 4):
        yield {"invariant": "quadrature_oracles", "domain": None, "profile": None, "params": {"n": n}}
        yield {"invariant": "young_pairing", "domain": None, "profile": None, "params": {"n": n}}
    yield {"invariant": "green_representation", "domain": None, "profile": None, "params": {}}


def run_case(case: dict) -> tuple[bool, dict]:
    return CHECKERS[case["invariant"]](case)


def run_suite(cases) -> dict:
    """Summary ``{invariant: {"cases", "failures"}}`` plus the failing cases."""
    summary: dict[str, dict] = {}
    failing = []
    for case in cases:
        entry = summary.setdefault(case["invariant"], {"cases": 0, "failures": 0})
        entry["cases"] += 1
        try:
            ok, details = run_case(case)
        except ArithmeticError as exc:
            ok, details = False, {"error": repr(exc)}
        if not ok:
            entry["failures"] += 1
            failing.append({**case, "details": details})
    return {"invariants": summary, "failing_cases": failing,
            "passed": all(v["failures"] == 0 for v in summary.values())}
