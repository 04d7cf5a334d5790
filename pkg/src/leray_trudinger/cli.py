"""Command-line interface: scenario configs, manifests, CSV/JSON tables.

Exit codes: 0 success, 2 invariant failure, 3 configuration error,
4 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import datetime as _dt
import hashlib
import io
import itertools
import json
import logging
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import __version__
from .errors import ConfigurationError, DomainError, LTError
from .functionals import (
    C1,
    DEFAULT_EPSILONS,
    I_n,
    J_n,
    TrudingerParams,
    dirichlet_energy,
    eval_P_B1,
    ground_state_transform,
    hardy_constant,
    hardy_term,
    prop31_constant,
    remainder_constant,
    remainder_term,
    series_threshold,
    trudinger_integral,
    weighted_Lq_norm,
)
from .funcspace import FamilySpec, make_family, normalize_to_unit_hardy, profile_from_dict
from .geometry import BallDomain
from .optimize import (
    MeshSpec,
    OptimizeBudget,
    blowup_sweep,
    gap_region_scan,
    maximize_trudinger,
    minimize_ratio,
)
from .quadrature import DEFAULT_SPEC, EXPONENTIAL_SPEC, QuadratureSpec
from . import verify as _verify

log = logging.getLogger("leray_trudinger")

EXIT_OK, EXIT_INVARIANT, EXIT_CONFIG, EXIT_NUMERICAL = 0, 2, 3, 4
COMMANDS = ("verify", "constants", "functional", "optimize", "counterexample", "gapscan", "sweep")
FUNCTIONALS = ("dirichlet_energy", "hardy_term", "I_n", "J_n", "remainder_term",
               "trudinger_integral", "weighted_Lq_norm", "P_B1")
INVARIANT_TOL = 1e-6

GAP_PRESET = {
    "n": [2],
    "beta": [0.5, 0.625, 0.75, 0.875],
    "c": [0.05, 0.1, 0.2],
    "s": [0.1, 0.2, 0.3, 0.4, 0.45, 0.49],
    "weight_kind": ["E2_power"],
}


# ---------------------------------------------------------------------------
# Configuration


@dataclass
class ScenarioConfig:
    command: str
    n: int = 2
    rho: float = 1.0
    R: float = 1.0
    c: float | None = None
    beta: float | None = None
    weight_kind: str = "E2_power"
    gamma: float = 2.0
    q: float | None = None
    s: float | None = None
    theta: float | None = None
    functional: str | None = None
    profile: dict | None = None
    normalize: bool = False
    epsilons: list[float] = field(default_factory=lambda: list(DEFAULT_EPSILONS))
    mode: str = "trudinger"
    profile_count: int = 20
    max_evaluations: int = 200
    seed: int = 0
    threads: int = 1
    rel_tol: float | None = None
    abs_tol: float | None = None
    ns: list[int] | None = None
    beta_grid: list[float] | None = None
    c_grid: list[float] | None = None
    grids: dict | None = None
    preset: str | None = None
    out: str | None = None

    _FLOATS = ("rho", "R", "c", "beta", "gamma", "q", "s", "theta", "rel_tol", "abs_tol")
    _INTS = ("n", "profile_count", "max_evaluations", "seed", "threads")

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "ScenarioConfig":
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = sorted(set(d) - names)
        if unknown:
            raise ConfigurationError(f"unknown config fields: {', '.join(unknown)}")
        if "command" not in d:
            raise ConfigurationError("config needs a 'command'")
        kw = dict(d)
        try:
            for k in cls._FLOATS:
                if kw.get(k) is not None:
                    kw[k] = float(kw[k])
            for k in cls._INTS:
                if kw.get(k) is not None:
                    if float(kw[k]) != int(kw[k]):
                        raise ConfigurationError(f"{k} must be an integer")
                    kw[k] = int(kw[k])
            for k in ("epsilons", "beta_grid", "c_grid"):
                if kw.get(k) is not None:
                    kw[k] = [float(x) for x in kw[k]]
            if kw.get("ns") is not None:
                kw["ns"] = [int(x) for x in kw["ns"]]
        except (TypeError, ValueError) as exc:
            raise ConfigurationError(f"bad numeric field: {exc}") from None
        cfg = cls(**kw)
        cfg.validate()
        return cfg

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    def canonical_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    def digest(self) -> str:
        return hashlib.sha256(self.canonical_json().encode()).hexdigest()

    def validate(self) -> None:
        bad = []
        if self.command not in COMMANDS:
            bad.append(f"command must be one of {', '.join(COMMANDS)}")
        if self.n < 2:
            bad.append("n must be >= 2")
        if not (self.rho > 0 and self.R >= self.rho and math.isfinite(self.R)):
            bad.append("need 0 < rho <= R < inf")
        if self.c is not None and not self.c > 0:
            bad.append("c must be > 0")
        if self.beta is not None and not self.beta >= 0:
            bad.append("beta must be >= 0")
        if self.weight_kind not in ("E2_power", "E1_power"):
            bad.append("weight_kind must be E2_power or E1_power")
        if self.q is not None and not self.q > self.n:
            bad.append("q must exceed n")
        if self.theta is not None and not 1.0 < self.theta < 2.0:
            bad.append("theta must lie in (1, 2)")
        if self.functional is not None and self.functional not in FUNCTIONALS:
            bad.append(f"functional must be one of {', '.join(FUNCTIONALS)}")
        if self.mode not in ("trudinger", "ratio"):
            bad.append("mode must be 'trudinger' or 'ratio'")
        if any(not 0 < e < self.rho for e in self.epsilons):
            bad.append("epsilons must lie in (0, rho)")
        if self.profile_count < 1 or self.max_evaluations < 1 or self.threads < 1:
            bad.append("profile_count, max_evaluations and threads must be >= 1")
        if self.rel_tol is not None and not 0 < self.rel_tol < 1:
            bad.append("rel_tol must lie in (0, 1)")
        if self.abs_tol is not None and not self.abs_tol >= 0:
            bad.append("abs_tol must be >= 0")
        if self.preset is not None and self.preset != "gap":
            bad.append("preset must be 'gap'")
        if self.ns is not None and (not self.ns or min(self.ns) < 2):
            bad.append("ns must be a nonempty list of integers >= 2")
        if bad:
            raise ConfigurationError("; ".join(bad))

    @property
    def domain(self) -> BallDomain:
        return BallDomain(self.n, self.rho, self.R)

    def quadrature_spec(self, base: QuadratureSpec = DEFAULT_SPEC) -> QuadratureSpec:
        kw = {}
        if self.rel_tol is not None:
            kw["rel_tol"] = self.rel_tol
        if self.abs_tol is not None:
            kw["abs_tol"] = self.abs_tol
        return dataclasses.replace(base, **kw)


def parse_config(text: str) -> ScenarioConfig:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigurationError(f"config is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigurationError("config must be a JSON object")
    return ScenarioConfig.from_dict(data)


# ---------------------------------------------------------------------------
# Output


def format_float(x) -> str:
    if isinstance(x, bool) or not isinstance(x, float):
        return str(x)
    return repr(x)


def csv_text(columns: list[str], rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([format_float(row.get(c, "")) for c in columns])
    return buf.getvalue()


def sha256_file(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def _now() -> str:
    return _dt.datetime.now(_dt.timezone.utc).isoformat()


class RunManifest:
    """Records config, timestamps and output digests; one new file per run."""

    def __init__(self, config: ScenarioConfig, out_dir: Path):
        self.config = config
        self.out_dir = out_dir
        self.started = _now()
        self.outputs: list[dict] = []
        self.summary: dict = {}

    def write_output(self, name: str, text: str) -> Path:
        path = self.out_dir / name
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
        self.record(path)
        return path

    def record(self, path: Path) -> None:
        rel = path.relative_to(self.out_dir).as_posix()
        self.outputs.append({"path": rel, "sha256": sha256_file(path)})

    def finish(self) -> Path:
        stamp = _dt.datetime.now(_dt.timezone.utc).strftime("%Y%m%dT%H%M%S%fZ")
        path = self.out_dir / f"manifest-{stamp}.json"
        k = 1
        while path.exists():
            path = self.out_dir / f"manifest-{stamp}-{k}.json"
            k += 1
        doc = {
            "config": self.config.to_dict(),
            "version": __version__,
            "started": self.started,
            "finished": _now(),
            "seed": self.config.seed,
            "outputs": self.outputs,
            "summary": self.summary,
        }
        path.write_text(json.dumps(doc, indent=2, sort_keys=True) + "\n")
        return path


def verify_manifest(path: str | Path) -> list[str]:
    """Return the output paths whose digests do not match (empty when intact)."""
    path = Path(path)
    doc = json.loads(path.read_text())
    bad = []
    for entry in doc["outputs"]:
        p = path.parent / entry["path"]
        if not p.exists() or sha256_file(p) != entry["sha256"]:
            bad.append(entry["path"])
    return bad


class _Emitter:
    """Writes to ``--out`` with a manifest, or prints to stdout."""

    def __init__(self, config: ScenarioConfig, stdout):
        self.stdout = stdout
        self.manifest = None
        if config.out:
            out = Path(config.out)
            out.mkdir(parents=True, exist_ok=True)
            self.manifest = RunManifest(config, out)

    def emit(self, name: str, text: str, show: bool = True) -> None:
        if self.manifest is not None:
            self.manifest.write_output(name, text)
        if show:
            self.stdout.write(text if text.endswith("\n") else text + "\n")

    def finish(self, summary: dict) -> None:
        if self.manifest is not None:
            self.manifest.summary = summary
            self.manifest.finish()


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, default=_json_default) + "\n"


def _json_default(obj):
    if hasattr(obj, "to_dict"):
        return obj.to_dict()
    if isinstance(obj, (set, tuple)):
        return list(obj)
    return float(obj)


# ---------------------------------------------------------------------------
# Commands


def _profile_from_config(cfg: ScenarioConfig):
    spec = cfg.profile
    if spec is None:
        if cfg.s is None:
            raise ConfigurationError("functional needs 'profile' or 's' (ground-state power)")
        spec = {"kind": "ground_state_power", "params": {"s": cfg.s}}
    if "representation" in spec:
        u = profile_from_dict(spec)
    else:
        u = make_family(FamilySpec(spec["kind"], dict(spec.get("params", {}))), cfg.domain)
    if cfg.normalize:
        u = normalize_to_unit_hardy(u, cfg.domain)
    return u


def cmd_constants(cfg: ScenarioConfig, em: _Emitter) -> int:
    rows = []
    for n in cfg.ns or [cfg.n]:
        rows.append({"n": n, "C1": C1(n), "hardy": hardy_constant(n),
                     "remainder": remainder_constant(n), "C_n": prop31_constant(n),
                     "A_n": series_threshold(n)})
    cols = ["n", "C1", "hardy", "remainder", "C_n", "A_n"]
    em.emit("constants.csv", csv_text(cols, rows))
    em.emit("constants.json", _dump(rows), show=False)
    em.finish({"rows": len(rows)})
    return EXIT_OK


def cmd_functional(cfg: ScenarioConfig, em: _Emitter) -> int:
    name = cfg.functional or "I_n"
    dom = cfg.domain
    if name == "P_B1":
        rep = eval_P_B1(cfg.n, cfg.theta if cfg.theta is not None else 1.5, cfg.R,
                        cfg.quadrature_spec())
    else:
        u = _profile_from_config(cfg)
        spec = cfg.quadrature_spec()
        if name == "dirichlet_energy":
            rep = dirichlet_energy(u, dom, spec)
        elif name == "hardy_term":
            rep = hardy_term(u, dom, spec)
        elif name == "I_n":
            rep = I_n(u, dom, spec)
        elif name == "J_n":
            rep = J_n(ground_state_transform(u, dom), dom, spec)
        elif name == "remainder_term":
            rep = remainder_term(u, dom, cfg.gamma, spec)
        elif name == "weighted_Lq_norm":
            rep = weighted_Lq_norm(u, dom, cfg.q if cfg.q is not None else 2.0 * cfg.n, spec)
        else:
            if cfg.c is None or cfg.beta is None:
                raise ConfigurationError("trudinger_integral needs c and beta")
            params = TrudingerParams(cfg.c, cfg.beta, cfg.weight_kind)
            rep = trudinger_integral(u, dom, params, cfg.quadrature_spec(EXPONENTIAL_SPEC))
    em.emit("functional.json", rep.to_json() + "\n")
    em.finish({"status": rep.status})
    return EXIT_OK if rep.status in ("converged", "divergent") else EXIT_NUMERICAL


def cmd_optimize(cfg: ScenarioConfig, em: _Emitter) -> int:
    budget = OptimizeBudget(cfg.max_evaluations, seed=cfg.seed)
    if cfg.mode == "ratio":
        res = minimize_ratio(cfg.domain, cfg.gamma, "family", budget)
        cols = ["ratio", "I_n", "remainder", "profile"]
        rows = [{**r, "profile": json.dumps(r["profile"], sort_keys=True)} for r in res.table]
        em.emit("ratio.csv", csv_text(cols, rows), show=False)
    else:
        if cfg.c is None or cfg.beta is None:
            raise ConfigurationError("optimize needs c and beta")
        params = TrudingerParams(cfg.c, cfg.beta, cfg.weight_kind)
        res = maximize_trudinger(cfg.domain, params, MeshSpec(), budget)
        rows = [{"evaluation": k, "objective": v} for k, v in res.trace]
        em.emit("trace.csv", csv_text(["evaluation", "objective"], rows), show=False)
    em.emit("optimize.json", _dump(res.to_dict()))
    em.finish({"status": res.status, "objective": res.objective})
    if res.status == "invariant_violation":
        return EXIT_INVARIANT
    return EXIT_OK


def cmd_counterexample(cfg: ScenarioConfig, em: _Emitter) -> int:
    if cfg.beta is None or cfg.c is None:
        raise ConfigurationError("counterexample needs beta and c")
    out = blowup_sweep(cfg.domain, cfg.beta, cfg.c, cfg.s, cfg.epsilons, cfg.weight_kind)
    cols = ["epsilon", "truncated_T", "growth_ratio", "I_n"]
    em.emit("counterexample.csv", csv_text(cols, out["rows"]))
    em.emit("counterexample.json", _dump({"verdict": out["verdict"], "report": out["report"],
                                          "rows": out["rows"]}), show=False)
    em.stdout.write(f"verdict: {out['verdict']}\n")
    em.finish({"verdict": out["verdict"]})
    return EXIT_OK if out["verdict"] != "UNDETERMINED" else EXIT_NUMERICAL


def cmd_gapscan(cfg: ScenarioConfig, em: _Emitter) -> int:
    n = cfg.n
    betas = cfg.beta_grid if cfg.beta_grid is not None else [1.0 / n, 1.25 / n, 1.5 / n, 1.75 / n]
    cs = cfg.c_grid if cfg.c_grid is not None else [0.05, 0.1]
    rep = gap_region_scan(cfg.domain, betas, cs)
    rows = [{"beta": c["beta"], "c": c["c"], "max_finite": c["max_finite"],
             "divergent_witnesses": len(c["divergent_witnesses"])} for c in rep["cells"]]
    em.stdout.write("EMPIRICAL scan (no proven bound covers this range)\n")
    em.emit("gapscan.csv", csv_text(["beta", "c", "max_finite", "divergent_witnesses"], rows))
    em.emit("gapscan.json", _dump(rep), show=False)
    em.finish({"label": "EMPIRICAL", "cells": len(rows)})
    return EXIT_OK


def sweep_cells(cfg: ScenarioConfig) -> list[dict]:
    grids = dict(GAP_PRESET) if cfg.preset == "gap" else {}
    grids.update(cfg.grids or {})
    if not grids:
        raise ConfigurationError("sweep needs 'grids' or a preset")
    keys = ("n", "beta", "c", "s", "weight_kind")
    unknown = sorted(set(grids) - set(keys))
    if unknown:
        raise ConfigurationError(f"unknown grid axes: {', '.join(unknown)}")
    axes = {k: list(grids.get(k, [])) for k in keys}
    axes["n"] = axes["n"] or [cfg.n]
    axes["weight_kind"] = axes["weight_kind"] or [cfg.weight_kind]
    for k in ("beta", "c", "s"):
        if not axes[k]:
            raise ConfigurationError(f"grid axis {k!r} is empty")
    cells = []
    for n, beta, c, s, wk in itertools.product(*(axes[k] for k in keys)):
        cells.append({"n": int(n), "beta": float(beta), "c": float(c), "s": float(s),
                      "weight_kind": wk, "rho": cfg.rho, "R": cfg.R})
    return cells


def cell_digest(cell: dict) -> str:
    text = json.dumps({"cell": cell, "version": __version__}, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()


def run_cell(cell: dict) -> dict:
    """Trudinger integral of the normalized ground-state power for one grid point."""
    dom = BallDomain(cell["n"], cell["rho"], cell["R"])
    row = {**cell, "value": math.nan, "error_estimate": math.nan, "status": "", "note": ""}
    try:
        u = make_family(FamilySpec("ground_state_power", {"s": cell["s"]}), dom)
        if not u.admissible:
            row.update(status="inadmissible", note="s >= 1/n: Hardy difference infinite")
            return row
        u = normalize_to_unit_hardy(u, dom)
        rep = trudinger_integral(u, dom, TrudingerParams(cell["c"], cell["beta"], cell["weight_kind"]))
        row.update(value=rep.value, error_estimate=rep.error_estimate, status=rep.status)
    except LTError as exc:
        row.update(status="error", note=str(exc))
    return row


def cmd_sweep(cfg: ScenarioConfig, em: _Emitter) -> int:
    cells = sweep_cells(cfg)
    if em.manifest is None:
        raise ConfigurationError("sweep needs an output directory (--out)")
    cache_dir = em.manifest.out_dir / "cells"
    cache_dir.mkdir(parents=True, exist_ok=True)
    digests = [cell_digest(c) for c in cells]

    def load_or_run(item):
        cell, dg = item
        path = cache_dir / f"{dg}.json"
        if path.exists():
            try:
                return json.loads(path.read_text()), True
            except json.JSONDecodeError:
                pass
        return run_cell(cell), False

    with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
        results = list(pool.map(load_or_run, zip(cells, digests)))
    hits = 0
    rows = []
    for (row, cached), dg in zip(results, digests):
        path = cache_dir / f"{dg}.json"
        if cached:
            hits += 1
        else:
            path.write_text(json.dumps(row, sort_keys=True) + "\n")
        em.manifest.record(path)
        rows.append({**row, "digest": dg})
    cols = ["n", "beta", "c", "s", "weight_kind", "value", "error_estimate", "status", "note", "digest"]
    em.emit("sweep.csv", csv_text(cols, rows), show=False)
    failed = sum(r["status"] == "error" for r in rows)
    summary = {"cells": len(rows), "cache_hits": hits, "full_cache_hit": hits == len(rows),
               "failed_cells": failed}
    em.stdout.write(_dump(summary))
    em.finish(summary)
    return EXIT_NUMERICAL if failed else EXIT_OK


def cmd_verify(cfg: ScenarioConfig, em: _Emitter, replay: str | None = None) -> int:
    if cfg.rel_tol is not None and cfg.rel_tol > INVARIANT_TOL:
        log.warning("rel_tol=%g exceeds the invariant thresholds (%g); failures may be spurious",
                    cfg.rel_tol, INVARIANT_TOL)
    if replay:
        data = json.loads(Path(replay).read_text())
        cases = data if isinstance(data, list) else [data]
        for case in cases:
            case.pop("details", None)
    else:
        cases = _verify.default_cases(cfg.profile_count, cfg.seed)
    report = _verify.run_suite(cases)
    em.emit("verify_report.json", _dump(report), show=False)
    for name, entry in report["invariants"].items():
        verdict = "PASS" if entry["failures"] == 0 else "FAIL"
        em.stdout.write(f"{verdict} {name} ({entry['cases']} cases, {entry['failures']} failures)\n")
    if report["failing_cases"]:
        em.emit("replay.json", _dump(report["failing_cases"]), show=em.manifest is None)
    em.finish({"passed": report["passed"]})
    return EXIT_OK if report["passed"] else EXIT_INVARIANT


# ---------------------------------------------------------------------------
# Argument parsing


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="leray-trudinger",
                                description="Hardy-Leray and Trudinger functionals on balls.")
    p.add_argument("--config", help="JSON scenario file")
    p.add_argument("--out", help="output directory (files + manifest)")
    p.add_argument("--seed", type=int)
    p.add_argument("--threads", type=int)
    p.add_argument("--tol", type=float, help="relative quadrature tolerance")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command")

    def common(sp, *fields):
        for f in fields:
            kind = {"n": int, "profile_count": int, "max_evaluations": int}.get(f, float)
            sp.add_argument(f"--{f.replace('_', '-')}", dest=f, type=kind)

    sp = sub.add_parser("verify", help="run the invariant suites")
    common(sp, "profile_count")
    sp.add_argument("--replay", help="JSON file with failing cases to rerun")
    sp = sub.add_parser("constants", help="table of explicit constants")
    sp.add_argument("--n", dest="ns", type=int, nargs="+")
    sp = sub.add_parser("functional", help="evaluate one functional")
    sp.add_argument("name", nargs="?", choices=FUNCTIONALS)
    common(sp, "n", "rho", "R", "c", "beta", "gamma", "q", "s", "theta")
    sp.add_argument("--weight-kind", dest="weight_kind", choices=("E2_power", "E1_power"))
    sp.add_argument("--family", help="family kind (default ground_state_power)")
    sp.add_argument("--param", action="append", default=[], metavar="K=V",
                    help="family parameter, repeatable")
    sp.add_argument("--normalize", action="store_true", default=None)
    sp = sub.add_parser("optimize", help="extremal search")
    sp.add_argument("--mode", choices=("trudinger", "ratio"))
    common(sp, "n", "c", "beta", "gamma", "max_evaluations")
    sp = sub.add_parser("counterexample", help="divergence sweep along ground-state powers")
    common(sp, "n", "c", "beta", "s")
    sp.add_argument("--epsilons", type=float, nargs="+")
    sp = sub.add_parser("gapscan", help="EMPIRICAL scan for beta in [1/n, 2/n)")
    common(sp, "n")
    sp.add_argument("--beta-grid", dest="beta_grid", type=float, nargs="+")
    sp.add_argument("--c-grid", dest="c_grid", type=float, nargs="+")
    sp = sub.add_parser("sweep", help="cached grid sweep")
    sp.add_argument("--preset", choices=("gap",))
    return p


def config_from_args(args: argparse.Namespace) -> ScenarioConfig:
    data: dict[str, Any] = {}
    if args.config:
        try:
            data = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigurationError(f"cannot read config {args.config}: {exc}") from None
        if not isinstance(data, dict):
            raise ConfigurationError("config must be a JSON object")
    if args.command:
        if data.get("command") not in (None, args.command):
            raise ConfigurationError(f"config command {data['command']!r} != {args.command!r}")
        data["command"] = args.command
    skip = {"config", "command", "verbose", "replay", "tol", "name", "family", "param"}
    for k, v in vars(args).items():
        if k not in skip and v is not None:
            data[k] = v
    if args.tol is not None:
        data["rel_tol"] = args.tol
    if getattr(args, "name", None):
        data["functional"] = args.name
    if getattr(args, "family", None) or getattr(args, "param", None):
        params = {}
        for item in args.param:
            if "=" not in item:
                raise ConfigurationError(f"--param expects K=V, got {item!r}")
            k, v = item.split("=", 1)
            params[k] = float(v)
        data["profile"] = {"kind": args.family or "ground_state_power", "params": params}
    return ScenarioConfig.from_dict(data)


def main(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    if not args.command and not args.config:
        parser.print_help(stdout)
        return EXIT_CONFIG
    try:
        cfg = config_from_args(args)
        em = _Emitter(cfg, stdout)
        handler = {
            "constants": cmd_constants, "functional": cmd_functional, "optimize": cmd_optimize,
            "counterexample": cmd_counterexample, "gapscan": cmd_gapscan, "sweep": cmd_sweep,
        }
        if cfg.command == "verify":
            return cmd_verify(cfg, em, getattr(args, "replay", None))
        return handler[cfg.command](cfg, em)
    except (ConfigurationError, DomainError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ArithmeticError, LTError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
